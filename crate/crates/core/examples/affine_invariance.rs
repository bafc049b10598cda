//! Random affine changes of coordinates and positive time rescalings leave
//! the stratum, the sigma class and the figure unchanged.

use qsinf::classify::classify;
use qsinf::corpus::{fuzz_corpus, random_affine};
use qsinf::poly::rat;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for entry in fuzz_corpus(19, 6) {
        let s = entry.system;
        let base = classify(&s).expect("corpus systems classify");
        print!("figure {:>2}, Sigma_{:<2}:", base.figure, base.sigma);
        for k in 1..=5 {
            let g = random_affine(&mut rng);
            let t = s.apply_affine(&g).rescale_time(&rat(k, 3)).expect("positive factor");
            let c = classify(&t).expect("images classify");
            let same = (c.dsz, c.sigma, c.figure) == (base.dsz, base.sigma, base.figure);
            print!(" {}", if same { "ok" } else { "CHANGED" });
        }
        println!();
    }
}
