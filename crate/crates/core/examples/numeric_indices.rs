//! Winding-number indices at the real infinite singularities next to the
//! exact indices of the fused divisor.

use qsinf::classify::classify;
use qsinf::poincare::{equator_singularities, winding_index};
use qsinf::system::QuadraticSystem;

fn main() {
    let systems = [
        QuadraticSystem::from_ints([0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1]),
        QuadraticSystem::from_ints([3, 0, 0, 0, -1, 0], [0, 0, 0, 0, -3, 0]),
        QuadraticSystem::from_ints([1, 0, 0, 0, -1, 0], [0, 0, 0, -1, 0, 1]),
    ];
    for s in systems {
        let c = classify(&s).expect("valid system");
        println!("{s}  (figure {})", c.figure);
        for e in equator_singularities(&s) {
            let exact = c.fused.iter().find(|f| f.point == e.point).and_then(|f| f.j);
            println!(
                "  {:<24} chart {:?}  winding {:?}  exact {:?}",
                e.point.descriptor(8).exact,
                e.chart,
                winding_index(&s, &e),
                exact
            );
        }
    }
}
