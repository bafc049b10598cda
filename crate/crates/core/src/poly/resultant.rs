//! Sylvester resultants over polynomial rings.

use super::multivariate::Poly;
use super::PolyError;

/// Determinant by cofactor expansion along the first row.
pub fn determinant<const N: usize>(m: &[Vec<Poly<N>>]) -> Poly<N> {
    let n = m.len();
    match n {
        0 => return Poly::one(),
        1 => return m[0][0].clone(),
        2 => return &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        _ => {}
    }
    let mut total = Poly::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly<N>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &determinant(&minor);
        if j % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}

/// Resultant of `f` and `g` in variable `var`, treating them as having formal
/// degrees `m` and `n` in that variable.
///
/// When one input does not involve `var` the resultant reduces to a power of
/// that input.
pub fn sylvester_resultant<const N: usize>(
    f: &Poly<N>,
    g: &Poly<N>,
    var: usize,
    m: usize,
    n: usize,
) -> Result<Poly<N>, PolyError> {
    if f.is_zero() && g.is_zero() {
        return Err(PolyError::DegenerateResultant);
    }
    let fc = padded(f, var, m)?;
    let gc = padded(g, var, n)?;
    if m == 0 {
        return Ok(fc[0].pow(n as u32));
    }
    if n == 0 {
        return Ok(gc[0].pow(m as u32));
    }
    let size = m + n;
    let mut mat = vec![vec![Poly::<N>::zero(); size]; size];
    for row in 0..n {
        for k in 0..=m {
            mat[row][row + k] = fc[m - k].clone();
        }
    }
    for row in 0..m {
        for k in 0..=n {
            mat[n + row][row + k] = gc[n - k].clone();
        }
    }
    Ok(determinant(&mat))
}

/// Resultant using the actual degrees of `f` and `g` in `var`.
pub fn resultant<const N: usize>(f: &Poly<N>, g: &Poly<N>, var: usize) -> Result<Poly<N>, PolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(PolyError::DegenerateResultant);
    }
    let m = f.degree_in(var).unwrap_or(0) as usize;
    let n = g.degree_in(var).unwrap_or(0) as usize;
    sylvester_resultant(f, g, var, m, n)
}

fn padded<const N: usize>(p: &Poly<N>, var: usize, deg: usize) -> Result<Vec<Poly<N>>, PolyError> {
    let mut c = p.coefficients_in(var);
    if p.is_zero() {
        c.clear();
    }
    if c.len() > deg + 1 && c[deg + 1..].iter().any(|x| !x.is_zero()) {
        return Err(PolyError::DegreeExceeded { formal: deg });
    }
    c.resize(deg + 1, Poly::zero());
    Ok(c)
}
