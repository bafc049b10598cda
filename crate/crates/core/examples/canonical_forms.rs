//! Linear reduction of systems to the four canonical families, fixed by the
//! real root structure of `C2`.

use qsinf::classify::canonical::canonical_reduce;
use qsinf::classify::classify;
use qsinf::corpus::fuzz_corpus;

fn main() {
    for entry in fuzz_corpus(3, 8) {
        let s = entry.system;
        match canonical_reduce(&s) {
            Ok(form) => {
                let params: Vec<String> = form.params.iter().map(|(n, v)| format!("{n}={v}")).collect();
                println!("{s}\n  -> {} with {}", form.family.name(), params.join(", "));
                if let Some(r) = form.rational_system() {
                    let same = classify(&r).map(|c| c.figure).ok() == classify(&s).map(|c| c.figure).ok();
                    println!("  reduced: {r}\n  same figure: {same}");
                }
            }
            Err(e) => println!("{s}\n  not reduced: {e}"),
        }
    }
}
