//! Acceptance run: one line per criterion.
//!
//! Criteria that fail as stated are still evaluated exactly as stated and
//! reported as FAIL; the corrected reading is reported on the same line.
//! The harness exits nonzero only when a verdict differs from the known one.

mod common;

use skein_coulomb::report::{Check, TheoremCheck, Variant};
use skein_coulomb::params::Mode;
use skein_coulomb::theoremsuite::{run_suite, verdicts, SuiteConfig, SUITES};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

struct Line {
    n: u32,
    pass: bool,
    expected: bool,
    detail: String,
}

fn suite(name: &str, cfg: &SuiteConfig) -> (TheoremCheck, Duration) {
    let t = Instant::now();
    let s = run_suite(name, cfg).expect("valid config");
    (s, t.elapsed())
}

fn all_pass<'a>(checks: impl IntoIterator<Item = &'a Check>) -> (bool, usize, usize) {
    let (mut ok, mut n) = (0, 0);
    for c in checks {
        n += 1;
        ok += c.pass as usize;
    }
    (ok == n && n > 0, ok, n)
}

fn not_corrected(c: &&Check) -> bool {
    c.variant != Variant::Corrected
}

fn not_superseded(c: &&Check) -> bool {
    c.variant != Variant::Superseded
}

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let mut lines = Vec::new();

    // 1: the four A1 relations as printed, within 60 s
    let (a1, t) = suite("daha-a1", &cfg);
    let rel = |s: &TheoremCheck, v: fn(&&Check) -> bool| {
        all_pass(s.checks.iter().filter(|c| c.desc.starts_with("spherical DAHA relation")).filter(v))
    };
    let (p, ok, n) = rel(&a1, not_corrected);
    let (pc, okc, nc) = rel(&a1, not_superseded);
    lines.push(Line {
        n: 1,
        pass: p && t.as_secs() < 60,
        expected: false,
        detail: format!(
            "printed relations {}/{} zero; with the corrected quartic {}/{} ({}); {:.2?}",
            ok, n, okc, nc, if pc { "pass" } else { "fail" }, t
        ),
    });

    // 2: CC relations, closed forms, symmetric constants, within 5 min
    let (cc, t) = suite("daha-cc", &cfg);
    let (p, ok, n) = all_pass(&cc.checks);
    lines.push(Line { n: 2, pass: p && t.as_secs() < 300, expected: true, detail: format!("{}/{} checks; {:.2?}", ok, n, t) });

    // 3: skein presentations under the printed representations
    let (s04, _) = suite("skein-s04", &cfg);
    let (s11, _) = suite("skein-s11", &cfg);
    let rels = |s: &TheoremCheck, v: fn(&&Check) -> bool| {
        all_pass(s.checks.iter().filter(|c| c.desc.starts_with("skein")).filter(v))
    };
    let (p04, ok04, n04) = rels(&s04, not_corrected);
    let (p11, ok11, n11) = rels(&s11, not_corrected);
    let (c04, okc, nc) = rels(&s04, not_superseded);
    lines.push(Line {
        n: 3,
        pass: p04 && p11,
        expected: false,
        detail: format!(
            "S04 printed {}/{}, S11 {}/{}; S04 with U rescaled by -q^-1 {}/{} ({})",
            ok04, n04, ok11, n11, okc, nc, if c04 { "pass" } else { "fail" }
        ),
    });

    // 4: gamma families up to |n| <= 5
    let fam11 = all_pass(s11.checks.iter().filter(|c| c.desc.starts_with("gamma_")));
    let fam04 = all_pass(s04.checks.iter().filter(|c| c.desc.contains("gamma_") && c.desc.contains("U (tau - 1)")));
    lines.push(Line {
        n: 4,
        pass: fam11.0 && fam04.0 && fam11.2 == 11,
        expected: true,
        detail: format!("S11 closed forms {}/{}, S04 decompositions {}/{} (both U readings)", fam11.1, fam11.2, fam04.1, fam04.2),
    });

    // 5: monopole identities within 5 min
    let (ms04, t1) = suite("monopole-s04", &cfg);
    let (mj, t2) = suite("monopole-jordan", &cfg);
    let (pa, oka, na) = all_pass(&ms04.checks);
    let (pb, okb, nb) = all_pass(&mj.checks);
    lines.push(Line {
        n: 5,
        pass: pa && pb && (t1 + t2).as_secs() < 300,
        expected: true,
        detail: format!("four-holed sphere {}/{}, Jordan {}/{}; {:.2?}", oka, na, okb, nb, t1 + t2),
    });

    // 6: theorem suites as printed
    let (s03, _) = suite("skein-s03", &cfg);
    let (t04, _) = suite("theorem-s04", &cfg);
    let (t11, _) = suite("theorem-s11", &cfg);
    let printed = |s: &TheoremCheck| all_pass(s.checks.iter().filter(not_corrected));
    let corrected = |s: &TheoremCheck| all_pass(s.checks.iter().filter(not_superseded));
    let (a, b, c) = (all_pass(&s03.checks), printed(&t04), printed(&t11));
    let (cb, cc2) = (corrected(&t04), corrected(&t11));
    lines.push(Line {
        n: 6,
        pass: a.0 && b.0 && c.0,
        expected: false,
        detail: format!(
            "printed: S03 {}/{}, S04 {}/{}, S11 {}/{}; corrected: S04 {}/{}, S11 {}/{}",
            a.1, a.2, b.1, b.2, c.1, c.2, cb.1, cb.2, cc2.1, cc2.2
        ),
    });

    // 7: symbolic and random verdicts agree; reports are byte-identical
    let symbolic: Vec<_> = [&a1, &cc, &s03, &s04, &s11, &ms04, &mj, &t04, &t11].iter().map(|s| verdicts(s)).collect();
    let mut mismatches = Vec::new();
    for seed in [1u64, 42] {
        let rcfg = SuiteConfig { mode: Mode::Random, seed, ..SuiteConfig::default() };
        for (name, sym) in ["daha-a1", "daha-cc", "skein-s03", "skein-s04", "skein-s11", "monopole-s04", "monopole-jordan", "theorem-s04", "theorem-s11"]
            .iter()
            .zip(&symbolic)
        {
            let r = verdicts(&run_suite(name, &rcfg).unwrap());
            if &r != sym {
                mismatches.push(format!("{} seed {}", name, seed));
            }
        }
    }
    debug_assert_eq!(SUITES.len(), symbolic.len());
    let bin = env!("CARGO_BIN_EXE_skein-coulomb");
    let run = || {
        Command::new(bin)
            .args(["--suite", "daha-a1", "--mode", "random", "--seed", "42", "--report", "json"])
            .output()
            .expect("binary runs")
            .stdout
    };
    let identical = run() == run();
    lines.push(Line {
        n: 7,
        pass: mismatches.is_empty() && identical,
        expected: true,
        detail: format!(
            "verdict mismatches: {}; repeated report identical: {}",
            if mismatches.is_empty() { "none".to_string() } else { mismatches.join(", ") },
            identical
        ),
    });

    // 8: property suites
    let props = [
        ("ring axioms", common::ring_axioms(128)),
        ("associativity", common::operator_associativity(96)),
        ("fold agreement", common::fold_agreement(48, 12)),
        ("Weyl invariance", common::weyl_invariance(48)),
        ("grading additivity", common::grading_additivity(96)),
        ("embedding homomorphism", common::embedding_homomorphism(200)),
    ];
    let failed: Vec<_> = props.iter().filter_map(|(n, r)| r.as_ref().err().map(|e| format!("{}: {}", n, e))).collect();
    let cases: u32 = props.iter().filter_map(|(_, r)| r.as_ref().ok()).sum();
    lines.push(Line {
        n: 8,
        pass: failed.is_empty(),
        expected: true,
        detail: if failed.is_empty() { format!("{} cases, 0 failures", cases) } else { failed.join("; ") },
    });

    let mut unexpected = 0;
    for l in &lines {
        let note = if l.pass == l.expected { "" } else { " (UNEXPECTED)" };
        unexpected += (l.pass != l.expected) as u32;
        println!("criterion {}: {}{} - {}", l.n, if l.pass { "PASS" } else { "FAIL" }, note, l.detail);
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
