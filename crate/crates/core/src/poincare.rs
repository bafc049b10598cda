//! Poincaré compactification: charts at infinity, a numerical index oracle
//! and an SVG phase portrait on the disk.
//!
//! With `P, Q` homogenised and `C = YP - XQ`, the compactified field near
//! `[1:u:0]` is `(C(1,u,z), z P(1,u,z))` in the chart `x = 1/z, y = u/z`,
//! and near `[0:1:0]` it is `(C(v,1,w), -w Q(v,1,w))` in `x = v/w, y = 1/w`.
//! Both differ from the usual chart fields only by a sign, which leaves
//! indices unchanged.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::poly::{int, projective_roots, to_f64, BinaryForm, Poly2, Poly3, ProjPoint, Rational, RootLocation};
use crate::system::QuadraticSystem;

/// Which affine chart covers a point at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Chart {
    /// `x = 1/z, y = u/z`.
    U,
    /// `x = v/w, y = 1/w`.
    V,
}

/// The compactified field in one chart, as polynomials in (local coordinate, z).
pub fn chart_field(s: &QuadraticSystem, chart: Chart) -> [Poly2; 2] {
    let (p, q) = s.homogenized();
    let c = &(&Poly3::var(1) * &p) - &(&Poly3::var(0) * &q);
    let (t, z) = (Poly2::var(0), Poly2::var(1));
    match chart {
        Chart::U => {
            let subs = [Poly2::one(), t, z.clone()];
            [c.compose(&subs), &z * &p.compose(&subs)]
        }
        Chart::V => {
            let subs = [t, Poly2::one(), z.clone()];
            [c.compose(&subs), -(&z * &q.compose(&subs))]
        }
    }
}

/// `X A + Y B + Z C` for `A = ZQ, B = -ZP, C = YP - XQ`; identically zero.
pub fn eq2_residual(s: &QuadraticSystem) -> Poly3 {
    let (p, q) = s.homogenized();
    let (x, y, z) = (Poly3::var(0), Poly3::var(1), Poly3::var(2));
    let a = &z * &q;
    let b = -(&z * &p);
    let c = &(&y * &p) - &(&x * &q);
    &(&(&x * &a) + &(&y * &b)) + &(&z * &c)
}

/// A real singular point on the equator.
#[derive(Clone, Debug)]
pub struct EquatorPoint {
    pub point: ProjPoint,
    pub chart: Chart,
    /// Local coordinate of the point in its chart (`u`, or `v = 1/u`).
    pub coordinate: Rational,
}

/// Decimal digits kept when a root is replaced by a rational approximation.
const ROOT_DIGITS: usize = 40;

/// Real roots of `C2`, each placed in the chart where its coordinate is at most one in size.
pub fn equator_singularities(s: &QuadraticSystem) -> Vec<EquatorPoint> {
    let c2 = BinaryForm::from_poly(&crate::comitants::c_form(s, 2), 3).expect("cubic");
    projective_roots(&c2)
        .into_iter()
        .filter(|(w, _)| w.is_real())
        .map(|(w, _)| {
            let (chart, coordinate) = match &w.location {
                RootLocation::Vertical => (Chart::V, Rational::from_integer(0.into())),
                _ => {
                    let u = w.u_approx(ROOT_DIGITS).expect("real point");
                    if u.abs() <= int(1) {
                        (Chart::U, u)
                    } else {
                        (Chart::V, u.recip())
                    }
                }
            };
            EquatorPoint { point: w, chart, coordinate }
        })
        .collect()
}

/// A polynomial field evaluated in floating point.
struct FloatField {
    terms: [Vec<(i32, i32, f64)>; 2],
}

impl FloatField {
    fn new(field: &[Poly2; 2]) -> Self {
        let conv = |f: &Poly2| f.terms().map(|(e, c)| (e[0] as i32, e[1] as i32, to_f64(c))).collect();
        Self { terms: [conv(&field[0]), conv(&field[1])] }
    }

    fn eval(&self, t: f64, z: f64) -> (f64, f64) {
        let e = |terms: &[(i32, i32, f64)]| terms.iter().map(|(i, j, c)| c * t.powi(*i) * z.powi(*j)).sum::<f64>();
        (e(&self.terms[0]), e(&self.terms[1]))
    }
}

/// Winding number of the field around a circle of radius `r`; `None` if it passes too near a zero.
///
/// Arcs are bisected until the field turns by at most a quarter of `pi`
/// between neighbouring samples, which copes with the thin sectors of
/// degenerate points.
fn winding_on_circle(f: &FloatField, r: f64) -> Option<i32> {
    const BASE: usize = 512;
    let angle_at = |th: f64| -> Option<f64> {
        let (fx, fy) = f.eval(r * th.cos(), r * th.sin());
        (fx.is_finite() && fy.is_finite() && (fx != 0.0 || fy != 0.0)).then(|| fy.atan2(fx))
    };
    fn wrap(mut d: f64) -> f64 {
        while d > PI {
            d -= 2.0 * PI;
        }
        while d < -PI {
            d += 2.0 * PI;
        }
        d
    }
    fn arc(angle_at: &dyn Fn(f64) -> Option<f64>, t0: f64, a0: f64, t1: f64, a1: f64, depth: u32) -> Option<f64> {
        let d = wrap(a1 - a0);
        if d.abs() <= PI / 4.0 {
            return Some(d);
        }
        if depth == 0 {
            return None;
        }
        let tm = 0.5 * (t0 + t1);
        let am = angle_at(tm)?;
        Some(arc(angle_at, t0, a0, tm, am, depth - 1)? + arc(angle_at, tm, am, t1, a1, depth - 1)?)
    }
    let mut total = 0.0;
    let mut t0 = 0.0;
    let mut a0 = angle_at(t0)?;
    for k in 1..=BASE {
        let t1 = 2.0 * PI * k as f64 / BASE as f64;
        let a1 = angle_at(t1)?;
        total += arc(&angle_at, t0, a0, t1, a1, 40)?;
        (t0, a0) = (t1, a1);
    }
    Some((total / (2.0 * PI)).round() as i32)
}

/// Index of the compactified field at an equator point, from winding numbers
/// on shrinking circles. Two consecutive radii must agree.
pub fn winding_index(s: &QuadraticSystem, point: &EquatorPoint) -> Option<i32> {
    let field = chart_field(s, point.chart);
    let shift = [&Poly2::var(0) + &Poly2::constant(point.coordinate.clone()), Poly2::var(1)];
    let local = FloatField::new(&[field[0].compose(&shift), field[1].compose(&shift)]);
    let mut r = 1e-2;
    let mut previous = winding_on_circle(&local, r);
    for _ in 0..6 {
        r /= 2.0;
        let current = winding_on_circle(&local, r);
        if current.is_some() && current == previous {
            return current;
        }
        previous = current;
    }
    None
}

/// Numerical index at each real infinite point, in the order of [`equator_singularities`].
pub fn numeric_indices(s: &QuadraticSystem) -> Vec<(ProjPoint, Option<i32>)> {
    equator_singularities(s)
        .into_iter()
        .map(|e| {
            let j = winding_index(s, &e);
            (e.point, j)
        })
        .collect()
}

/// Layout of the rendered disk.
pub const SVG_SIZE: f64 = 400.0;
const CENTER: f64 = 200.0;
const RADIUS: f64 = 180.0;

/// Rendering options for [`render_portrait`].
#[derive(Clone, Debug, PartialEq)]
pub struct PortraitOptions {
    /// Width of the drawn annulus `1 - margin <= rho <= 1`; zero draws the equator only.
    pub margin: f64,
    /// Seed rings inside the annulus.
    pub rings: usize,
    pub seeds_per_ring: usize,
    /// Local error tolerance of the adaptive stepper.
    pub tolerance: f64,
    pub max_steps: usize,
}

impl Default for PortraitOptions {
    fn default() -> Self {
        Self { margin: 0.4, rings: 3, seeds_per_ring: 24, tolerance: 1e-6, max_steps: 600 }
    }
}

/// Six significant digits, trailing zeros removed.
fn num(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".into();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    let s = format!("{v:.decimals$}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.') } else { &s };
    if s == "-0" { "0".into() } else { s.into() }
}

/// Field on the sphere `X^2 + Y^2 + Z^2 = 1` tangent to it.
struct SphereField {
    p: Vec<([u32; 3], f64)>,
    q: Vec<([u32; 3], f64)>,
}

impl SphereField {
    fn new(s: &QuadraticSystem) -> Self {
        let (p, q) = s.homogenized();
        let conv = |f: &Poly3| f.terms().map(|(e, c)| (*e, to_f64(c))).collect();
        Self { p: conv(&p), q: conv(&q) }
    }

    fn eval(&self, v: [f64; 3]) -> [f64; 3] {
        let e = |terms: &[([u32; 3], f64)]| {
            terms
                .iter()
                .map(|(k, c)| c * v[0].powi(k[0] as i32) * v[1].powi(k[1] as i32) * v[2].powi(k[2] as i32))
                .sum::<f64>()
        };
        let (p, q) = (e(&self.p), e(&self.q));
        let s = v[0] * p + v[1] * q;
        [p - v[0] * s, q - v[1] * s, -v[2] * s]
    }

    /// Unit-speed direction, or `None` near a singular point.
    fn direction(&self, v: [f64; 3], sign: f64) -> Option<[f64; 3]> {
        let f = self.eval(v);
        let n = (f[0] * f[0] + f[1] * f[1] + f[2] * f[2]).sqrt();
        (n > 1e-9 && n.is_finite()).then(|| [sign * f[0] / n, sign * f[1] / n, sign * f[2] / n])
    }
}

fn normalize(v: [f64; 3]) -> [f64; 3] {
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

// Dormand-Prince 5(4) tableau.
const DP_A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const DP_B5: [f64; 7] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
const DP_B4: [f64; 7] =
    [5179.0 / 57600.0, 0.0, 7571.0 / 16695.0, 393.0 / 640.0, -92097.0 / 339200.0, 187.0 / 2100.0, 1.0 / 40.0];

/// One trajectory on the upper hemisphere, stopping near singular points or
/// when it leaves the hemisphere. The flag reports whether `max_steps` cut it short.
fn trace(field: &SphereField, start: [f64; 3], sign: f64, opts: &PortraitOptions) -> (Vec<[f64; 3]>, bool) {
    const MAX_H: f64 = 0.05;
    const MIN_H: f64 = 1e-6;
    const LENGTH: f64 = 6.0;
    let mut out = vec![start];
    let mut v = start;
    let mut h = 0.01;
    let mut travelled = 0.0;
    for _ in 0..opts.max_steps {
        if travelled >= LENGTH {
            return (out, false);
        }
        let mut k = [[0.0; 3]; 7];
        let mut ok = true;
        for stage in 0..7 {
            let mut y = v;
            for (j, kj) in k.iter().enumerate().take(stage) {
                for i in 0..3 {
                    y[i] += h * DP_A[stage][j] * kj[i];
                }
            }
            match field.direction(normalize(y), sign) {
                Some(d) => k[stage] = d,
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            return (out, false);
        }
        let combine = |b: &[f64; 7]| [0, 1, 2].map(|i| (0..7).map(|st| b[st] * k[st][i]).sum::<f64>());
        let (d5, d4) = (combine(&DP_B5), combine(&DP_B4));
        let err = h * (0..3).map(|i| (d5[i] - d4[i]).abs()).fold(0.0, f64::max);
        if err > opts.tolerance && h > MIN_H {
            h = (h * 0.9 * (opts.tolerance / err).powf(0.2)).max(MIN_H).max(h * 0.2);
            continue;
        }
        v = normalize([0, 1, 2].map(|i| v[i] + h * d5[i]));
        travelled += h;
        if v[2] < 0.0 {
            return (out, false);
        }
        out.push(v);
        let grow = if err > 0.0 { 0.9 * (opts.tolerance / err).powf(0.2) } else { 5.0 };
        h = (h * grow.clamp(0.2, 5.0)).clamp(MIN_H, MAX_H);
    }
    (out, true)
}

fn index_colour(j: Option<i32>) -> &'static str {
    match j {
        Some(1) => "#1f5fbf",
        Some(-1) => "#c62828",
        Some(0) => "#555555",
        Some(_) => "#7b1fa2",
        None => "#000000",
    }
}

/// Annulus view of the Poincaré disk: the equator, sample orbits clipped to
/// `rho >= 1 - margin`, and each equator singularity with its antipode
/// coloured by index (blue `+1`, red `-1`, grey `0`, purple otherwise,
/// black when unresolved).
pub fn render_portrait(
    s: &QuadraticSystem,
    indices: &[(ProjPoint, Option<i32>)],
    title: &str,
    opts: &PortraitOptions,
) -> String {
    let field = SphereField::new(s);
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        num(SVG_SIZE)
    );
    let _ = writeln!(svg, "<title>{}</title>", escape(title));
    let _ = writeln!(
        svg,
        r##"<circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="#000" stroke-width="1.5"/>"##,
        c = num(CENTER),
        r = num(RADIUS)
    );
    let inner = (1.0 - opts.margin).max(0.0);
    if opts.margin > 0.0 && inner > 0.0 {
        let _ = writeln!(
            svg,
            r##"<circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="#bbb" stroke-dasharray="3 3"/>"##,
            c = num(CENTER),
            r = num(RADIUS * inner)
        );
    }
    let to_disk = |v: [f64; 3]| (CENTER + RADIUS * v[0], CENTER - RADIUS * v[1]);
    let rho = |v: &[f64; 3]| (v[0] * v[0] + v[1] * v[1]).sqrt();

    let mut truncated = 0;
    if opts.margin > 0.0 {
        for ring in 0..opts.rings {
            let r0 = inner + opts.margin * (ring as f64 + 0.5) / opts.rings as f64;
            let r0 = r0.min(0.999);
            for k in 0..opts.seeds_per_ring {
                let shift = if ring % 2 == 0 { 0.25 } else { 0.75 };
                let th = 2.0 * PI * (k as f64 + shift) / opts.seeds_per_ring as f64;
                let seed = [r0 * th.cos(), r0 * th.sin(), (1.0 - r0 * r0).sqrt()];
                let (mut back, cut_b) = trace(&field, seed, -1.0, opts);
                let (fwd, cut_f) = trace(&field, seed, 1.0, opts);
                truncated += usize::from(cut_b) + usize::from(cut_f);
                back.reverse();
                let orbit: Vec<[f64; 3]> = back.into_iter().chain(fwd.into_iter().skip(1)).collect();
                // Split into pieces that stay inside the annulus.
                let mut piece: Vec<String> = Vec::new();
                let flush = |piece: &mut Vec<String>, svg: &mut String| {
                    if piece.len() > 1 {
                        let _ = writeln!(
                            svg,
                            r##"<polyline points="{}" fill="none" stroke="#4a7" stroke-width="0.8"/>"##,
                            piece.join(" ")
                        );
                    }
                    piece.clear();
                };
                for v in &orbit {
                    if rho(v) >= inner {
                        let (x, y) = to_disk(*v);
                        piece.push(format!("{},{}", num(x), num(y)));
                    } else {
                        flush(&mut piece, &mut svg);
                    }
                }
                flush(&mut piece, &mut svg);
            }
        }
    }
    if truncated > 0 {
        let _ = writeln!(svg, "<!-- {truncated} trajectories truncated at max_steps -->");
    }

    for (w, j) in indices {
        let (x, y) = match &w.location {
            RootLocation::Vertical => (0.0, 1.0),
            _ => (1.0, w.u_f64().unwrap_or(0.0)),
        };
        let n = (x * x + y * y).sqrt();
        for sign in [1.0, -1.0] {
            let (cx, cy) = to_disk([sign * x / n, sign * y / n, 0.0]);
            let _ = writeln!(
                svg,
                r#"<circle cx="{}" cy="{}" r="5" fill="{}"/>"#,
                num(cx),
                num(cy),
                index_colour(*j)
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// `true` when every real infinite point lies on `C2 = 0` in its chart.
pub fn chart_points_are_singular(s: &QuadraticSystem) -> bool {
    equator_singularities(s).iter().all(|e| {
        let f = chart_field(s, e.chart);
        match &e.point.location {
            RootLocation::Vertical | RootLocation::Rational(_) => {
                let pt = [e.coordinate.clone(), Rational::from_integer(0.into())];
                f[0].eval(&pt).is_zero() && f[1].eval(&pt).is_zero()
            }
            _ => true,
        }
    })
}
