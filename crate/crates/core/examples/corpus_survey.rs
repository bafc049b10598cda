//! Histogram of figures over the seeded fuzz corpus.

use std::collections::BTreeMap;
use std::time::Instant;

use qsinf::classify::classify;
use qsinf::corpus::fuzz_corpus;

fn main() {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2000);
    let corpus = fuzz_corpus(7, n);
    let start = Instant::now();
    let mut figures: BTreeMap<u8, usize> = BTreeMap::new();
    let mut errors = 0;
    for e in &corpus {
        match classify(&e.system) {
            Ok(c) => *figures.entry(c.figure).or_default() += 1,
            Err(err) => {
                errors += 1;
                println!("{}: {err}", e.system);
            }
        }
    }
    println!("{n} systems in {:.2?}, {errors} errors", start.elapsed());
    for (fig, count) in figures {
        println!("Fig {fig:>2}: {count}");
    }
}
