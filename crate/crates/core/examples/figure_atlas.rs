//! Walks every row of the figure table with a fixture that reaches it and
//! prints the geometric invariants of the resulting figure.

use qsinf::classify::classify;
use qsinf::corpus::figure_fixtures;
use qsinf::report::fused_text;

fn main() {
    let mut last = 0;
    for f in figure_fixtures() {
        let c = classify(&f.system()).expect("fixtures classify");
        assert_eq!((c.figure, Some(c.figure_row)), (f.target, f.row));
        if c.figure != last {
            let g = &c.geometry;
            println!(
                "Fig {:>2} (old {:>2})  N_R={} N_hsect={} O={:?} adjacency={:?}",
                c.figure, g.old_figure, g.n_r, g.n_hsect, g.o, g.adjacency
            );
            last = c.figure;
        }
        println!("    row {:>2} via {:<5} {}", c.figure_row, f.family, fused_text(&c));
    }
}
