//! Full classification of `x' = x^2, y' = y^2`.
//!
//! Run with `cargo run --example worked_example`.

use qsinf::classify::classify;
use qsinf::comitants::Comitant;
use qsinf::report::fused_text;
use qsinf::system::QuadraticSystem;

fn main() {
    // Monomial order: 1, x, y, x^2, xy, y^2.
    let s = QuadraticSystem::from_ints([0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1]);
    println!("system: {s}");

    let c = classify(&s).expect("the system is non-degenerate");
    let set = &c.comitants;
    for name in [Comitant::Eta, Comitant::Mu0, Comitant::C2, Comitant::M, Comitant::Kappa] {
        println!("{name:>6} = {}", set.get(name));
    }

    println!("stratum        : {} ({})", c.dsz.label(), c.dsz.divisor());
    println!("sigma class    : Sigma_{}", c.sigma);
    println!("figure         : {} (row {})", c.figure, c.figure_row);
    println!("fused divisor  : {}", fused_text(&c));
    for e in &c.fused {
        println!("  {} at {} with I(C,Z)={} I(P,Q)={} j={:?}", e.label, e.point.descriptor(6).exact, e.i_cz, e.i_pq, e.j);
    }
    let g = &c.geometry;
    println!("N_R = {}, N_hsect = {}, O = {:?}", g.n_r, g.n_hsect, g.o);
}
