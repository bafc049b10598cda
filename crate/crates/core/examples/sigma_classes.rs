//! One family member for each of the 36 classes of intersection divisors at
//! infinity, with the divisors that define the class.

use qsinf::classify::classify;
use qsinf::corpus::sigma_fixtures;
use qsinf::divisors::describe_point;

fn main() {
    for f in sigma_fixtures() {
        let s = f.system();
        let c = classify(&s).expect("fixtures classify");
        assert_eq!(c.sigma, f.target);
        let points = |d: &qsinf::divisors::Divisor<usize>| {
            let terms: Vec<String> = d.entries.iter().map(|(w, m)| format!("{m}{}", describe_point(w).exact)).collect();
            if terms.is_empty() { "0".to_string() } else { terms.join(" + ") }
        };
        println!(
            "Sigma_{:<2} {:<5} C,Z: {:<40} P,Q: {}",
            c.sigma,
            f.family,
            points(&c.divisors.cz),
            points(&c.divisors.pq)
        );
    }
}
