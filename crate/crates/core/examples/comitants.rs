//! Prints every comitant of a system and checks the two routes to `mu_i`.
//!
//! Pass twelve coefficients (`p` then `q`, monomials `1 x y x^2 xy y^2`) to
//! override the default system, e.g.
//! `cargo run --example comitants -- 1 0 0 0 -1 0  0 0 0 -1 0 1`.

use qsinf::comitants::{self, mu_sequence, mu_sequence_via_operator, Comitant};
use qsinf::poly::Rational;
use qsinf::system::QuadraticSystem;

fn main() {
    let args: Vec<Rational> = std::env::args().skip(1).map(|a| a.parse().expect("rational coefficient")).collect();
    let s = if args.len() == 12 {
        QuadraticSystem::from_monomials(args[..6].to_vec().try_into().unwrap(), args[6..].to_vec().try_into().unwrap())
    } else {
        QuadraticSystem::from_ints([1, 0, 0, 0, -1, 0], [0, 0, 0, -1, 0, 1])
    };
    println!("{s}\n");

    let set = comitants::compute(&s).expect("comitants of a quadratic system");
    for &c in Comitant::ALL {
        println!("{:>7} (deg {}) = {}", c.name(), c.degree_xy(), set.get(c));
    }

    let direct = mu_sequence(&s).expect("resultant route");
    let operator = mu_sequence_via_operator(&s);
    println!("\nmu_i by resultant and by the L operator agree: {}", direct == operator);
    println!("first nonzero mu index: {:?}", comitants::delta(&set));
}
