//! One PASS/FAIL line per acceptance criterion.
//!
//! Runs as a plain binary. The process fails when a criterion fails for any
//! reason other than the documented `kappa = 64 theta~` identity.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, ExitCode, Stdio};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qsinf::classify::tables::FIGURE_ROWS;
use qsinf::classify::{classify, ClassifyError};
use qsinf::comitants::{self, Comitant, DESCRIPTORS};
use qsinf::corpus::{family, figure_fixtures, fuzz_corpus, random_affine, random_linear, sigma_fixtures};
use qsinf::divisors::finite_intersection_oracle;
use qsinf::poincare::numeric_indices;
use qsinf::poly::{rat, sylvester_resultant, Poly2};
use qsinf::report::{error_kind, numeric_agreement, EXIT_GAP, KNOWN_IDENTITY_FAILURES};
use qsinf::system::{translation_law_check, QuadraticSystem};
use qsinf::tensorial::correspondence_check;

struct Verdict {
    pass: bool,
    /// Failure that is documented and tolerated.
    known: bool,
    detail: String,
}

fn check(ok: bool, detail: String) -> Verdict {
    Verdict { pass: ok, known: false, detail }
}

fn identity_suite() -> Verdict {
    let start = Instant::now();
    let corpus = fuzz_corpus(1001, 500);
    let mut failures: std::collections::BTreeMap<&str, usize> = Default::default();
    for entry in &corpus {
        let set = comitants::compute(&entry.system).unwrap();
        for c in correspondence_check(&entry.system, &set) {
            if !c.holds {
                *failures.entry(c.identity).or_default() += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    let unexpected: Vec<_> = failures.keys().filter(|id| !KNOWN_IDENTITY_FAILURES.contains(id)).collect();
    let held = 13 - failures.len();
    let detail = format!(
        "{held}/13 identities exact on 500 systems in {:.1}s; failing: {:?}",
        elapsed.as_secs_f64(),
        failures
    );
    let on_time = elapsed < Duration::from_secs(30);
    Verdict {
        pass: failures.is_empty() && on_time,
        known: unexpected.is_empty() && on_time,
        detail,
    }
}

fn weight_laws() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(1002);
    let corpus = fuzz_corpus(1002, 50);
    let mut bad = Vec::new();
    for entry in &corpus {
        let g = random_linear(&mut rng);
        for d in DESCRIPTORS {
            if !qsinf::system::weight_law_check(&entry.system, &g, d) {
                bad.push(format!("{} on {}", d.comitant, entry.system));
            }
        }
    }
    check(bad.is_empty(), format!("{} comitants x 50 linear maps; failures {:?}", DESCRIPTORS.len(), bad))
}

fn translation_laws() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(1003);
    let mut bad = 0;
    for entry in fuzz_corpus(1003, 100) {
        let a = rat(rng.gen_range(-6..=6), rng.gen_range(1..=3));
        let b = rat(rng.gen_range(-6..=6), rng.gen_range(1..=3));
        if !translation_law_check(&entry.system, &a, &b).all_zero() {
            bad += 1;
        }
    }
    check(bad == 0, format!("K1 (coefficient xi K/2) and mu1..mu4 on 100 pairs; {bad} failures"))
}

fn bezout() -> Verdict {
    let mut applicable = 0;
    let mut bad = 0;
    for entry in fuzz_corpus(1004, 2000) {
        let Ok(finite) = finite_intersection_oracle(&entry.system) else { continue };
        applicable += 1;
        let set = comitants::compute(&entry.system).unwrap();
        let delta = qsinf::divisors::delta_s(&set).unwrap();
        if delta + finite != 4 {
            bad += 1;
        }
    }
    check(bad == 0 && applicable >= 300, format!("{applicable} systems where the oracle applies; {bad} failures"))
}

fn mu4_resultant() -> Verdict {
    let mut bad = 0;
    for entry in fuzz_corpus(1005, 100) {
        let (p, q) = entry.system.homogenized();
        let res = sylvester_resultant(&p, &q, 2, 2, 2).unwrap();
        let res = Poly2::from_terms(res.terms().map(|(e, c)| ([e[0], e[1]], c.clone())));
        if &res != comitants::compute(&entry.system).unwrap().mu(4) {
            bad += 1;
        }
    }
    check(bad == 0, format!("100 systems; {bad} mismatches"))
}

fn unique_rows(corpus: &[qsinf::corpus::CorpusEntry]) -> (usize, Vec<String>) {
    let mut gaps = Vec::new();
    let mut ok = 0;
    for entry in corpus {
        match classify(&entry.system) {
            Ok(_) => ok += 1,
            Err(e) => gaps.push(format!("{}: {e}", entry.system)),
        }
    }
    (ok, gaps)
}

fn sigma_table(corpus: &[qsinf::corpus::CorpusEntry]) -> Verdict {
    let mut hit = BTreeSet::new();
    let mut wrong = 0;
    for f in sigma_fixtures() {
        match classify(&f.system()) {
            Ok(c) if c.sigma == f.target => {
                hit.insert(c.sigma);
            }
            _ => wrong += 1,
        }
    }
    let (ok, gaps) = unique_rows(corpus);
    check(
        hit.len() == 36 && wrong == 0 && gaps.is_empty(),
        format!("{}/36 classes hit by fixtures; {ok}/{} corpus systems match exactly one row {:?}", hit.len(), corpus.len(), gaps),
    )
}

fn figure_table(corpus: &[qsinf::corpus::CorpusEntry]) -> Verdict {
    let mut primary = BTreeSet::new();
    let mut fallback = BTreeSet::new();
    let mut rows = BTreeSet::new();
    let mut wrong = 0;
    for f in figure_fixtures() {
        match classify(&f.system()) {
            Ok(c) if c.figure == f.target => {
                rows.insert(c.figure_row);
                if family(f.family).unwrap().figure_family {
                    primary.insert(c.figure);
                } else {
                    fallback.insert(c.figure);
                }
            }
            _ => wrong += 1,
        }
    }
    let only_fallback: Vec<u8> = fallback.difference(&primary).copied().collect();
    let figures = primary.len() + only_fallback.len();
    let (ok, gaps) = unique_rows(corpus);
    check(
        figures == 40 && rows.len() == FIGURE_ROWS.len() && wrong == 0 && gaps.is_empty(),
        format!(
            "{figures}/40 figures, {}/{} rows; {} via figure families, fallback for {:?}; {ok}/{} corpus systems unique",
            rows.len(),
            FIGURE_ROWS.len(),
            primary.len(),
            only_fallback,
            corpus.len()
        ),
    )
}

fn affine_invariance() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(1008);
    let mut bad = Vec::new();
    for entry in fuzz_corpus(1008, 200) {
        let c = classify(&entry.system).unwrap();
        let key = |c: &qsinf::classify::Classification| {
            (c.figure, c.sigma, c.divisors.summary.cz_type.clone(), c.divisors.summary.pq_type.clone())
        };
        for _ in 0..10 {
            let g = random_affine(&mut rng);
            let lambda = rat(rng.gen_range(1..=5), rng.gen_range(1..=3));
            let moved = entry.system.apply_affine(&g).rescale_time(&lambda).unwrap();
            match classify(&moved) {
                Ok(m) if key(&m) == key(&c) => {}
                _ => bad.push(format!("{}", entry.system)),
            }
        }
    }
    check(bad.is_empty(), format!("200 systems x 10 maps; {} changes {:?}", bad.len(), bad))
}

fn numeric_oracle() -> Verdict {
    let mut fixtures = sigma_fixtures();
    fixtures.extend(figure_fixtures());
    let (mut resolved, mut unresolved, mut disagree) = (0, Vec::new(), Vec::new());
    for f in &fixtures {
        let s = f.system();
        let c = classify(&s).unwrap();
        let idx = numeric_indices(&s);
        for (w, j) in &idx {
            match j {
                Some(_) => resolved += 1,
                None => unresolved.push(format!("{w} on {s}")),
            }
        }
        if !numeric_agreement(&c, &idx) {
            disagree.push(s.to_string());
        }
    }
    let total = resolved + unresolved.len();
    for u in &unresolved {
        println!("    unresolved: {u}");
    }
    check(
        disagree.is_empty() && unresolved.len() * 20 <= total,
        format!(
            "{} fixtures, {resolved}/{total} points resolved, {} disagreements {:?}",
            fixtures.len(),
            disagree.len(),
            disagree
        ),
    )
}

fn worked_example() -> Verdict {
    let s = QuadraticSystem::from_ints([0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1]);
    let c = classify(&s).unwrap();
    let g = &c.geometry;
    let got = (
        c.comitants.get(Comitant::Eta).constant_term().to_string(),
        c.comitants.get(Comitant::Mu0).constant_term().to_string(),
        c.sigma,
        c.figure,
        c.pattern(),
        g.n_r,
        g.n_hsect,
        g.o.clone(),
    );
    let want = ("1".to_string(), "1".to_string(), 1, 5, "(1,0,1)p+(1,0,1)q+(1,0,-1)r", 3, 4, vec![2, 1, 1, 2, 1, 1]);
    check(got == want, format!("{got:?}"))
}

fn run_cli(input: &str, args: &[&str]) -> (i32, Vec<u8>, Duration) {
    let start = Instant::now();
    let mut child = Command::new(env!("CARGO_BIN_EXE_qsinf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .expect("spawn qsinf");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap_or(-1), out.stdout, start.elapsed())
}

fn cli() -> Verdict {
    let e1 = r#"{"p":{"x2":1},"q":{"y2":1}}"#;
    let dir = std::env::temp_dir().join(format!("qsinf-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let svg = |n: &str| dir.join(n).to_string_lossy().into_owned();
    let (code, out, t1) = run_cli(e1, &["--oracle", "all", "--svg", &svg("a.svg")]);
    let report: serde_json::Value = serde_json::from_slice(&out).unwrap_or_default();
    let populated = report["classification"]["figure"] == 5
        && report["comitants"].is_object()
        && report["divisors"].is_object()
        && report["oracle"]["agreement"]["numeric"] == true;
    let (_, _, t2) = run_cli(e1, &["--oracle", "all", "--svg", &svg("b.svg")]);
    let same_svg = std::fs::read(svg("a.svg")).ok().filter(|a| !a.is_empty()) == std::fs::read(svg("b.svg")).ok();
    let (malformed, _, _) = run_cli("{\"p\": ", &[]);
    let (invalid, _, _) = run_cli(r#"{"p":{"x2":1},"q":{"xy":1}}"#, &[]);
    let gap = error_kind(&ClassifyError::ClassificationGap { table: "figure", matches: vec![] }).1;
    let slowest = t1.max(t2);
    check(
        code == 0 && populated && same_svg && malformed == 4 && invalid == 2 && gap == EXIT_GAP
            && slowest < Duration::from_secs(1),
        format!(
            "exit {code}, fields populated {populated}, svg deterministic {same_svg}, malformed {malformed}, \
             invalid {invalid}, gap {gap} (mapping), slowest run {:.0} ms",
            slowest.as_secs_f64() * 1e3
        ),
    )
}

fn main() -> ExitCode {
    let corpus = fuzz_corpus(2000, 2000);
    type Criterion<'a> = (&'a str, Box<dyn Fn() -> Verdict + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("identity suite", Box::new(identity_suite)),
        ("weight laws", Box::new(weight_laws)),
        ("translation laws", Box::new(translation_laws)),
        ("delta_S + finite intersections = 4", Box::new(bezout)),
        ("mu4 = Res_Z(P,Q)", Box::new(mu4_resultant)),
        ("sigma table exhaustive and unique", Box::new(|| sigma_table(&corpus))),
        ("figure table exhaustive and unique", Box::new(|| figure_table(&corpus))),
        ("affine invariance", Box::new(affine_invariance)),
        ("numeric index oracle", Box::new(numeric_oracle)),
        ("worked example", Box::new(worked_example)),
        ("command line", Box::new(cli)),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let v = run();
        let tag = match (v.pass, v.known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("{tag} {:>2} {name}: {}", i + 1, v.detail);
        if !v.pass && !v.known {
            unexpected += 1;
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
