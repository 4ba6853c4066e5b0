//! One line per acceptance criterion; exits nonzero if any attainable
//! criterion fails.

use std::collections::BTreeSet;

use wmin_core::verify::{default_samples, k14_checks, partner_checks, run_sample, Check, Sample, Status};
use wmin_core::wdata::{central_charge, classical_series, UnitarityVerdict, WData};
use wmin_core::{AlgebraSpec, Error, Rational};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, detail: String) -> Outcome {
    if failures.is_empty() {
        Outcome { ok: true, detail }
    } else {
        Outcome { ok: false, detail: failures.join("; ") }
    }
}

fn failed(checks: &[(String, Check)], prefix: &[&str]) -> (Vec<String>, usize) {
    let sel: Vec<&(String, Check)> = checks.iter().filter(|(_, c)| prefix.iter().any(|p| c.name.starts_with(p))).collect();
    let f = sel.iter().filter(|(_, c)| c.status == Status::Fail).map(|(s, c)| format!("{s}: {} ({})", c.name, c.witness)).collect();
    (f, sel.len())
}

fn table2(checks: &[(String, Check)]) -> Outcome {
    let (mut f, n) = failed(checks, &["table2"]);
    let flagged: BTreeSet<&str> =
        checks.iter().filter(|(_, c)| c.status == Status::Flagged).map(|(_, c)| c.name.as_str()).collect();
    let want: BTreeSet<&str> = ["table2/collapsing-root", "table2/u1"].into();
    if flagged != want {
        f.push(format!("flagged discrepancies {flagged:?}"));
    }
    outcome(f, format!("{n} entries, flagged: G(3) u1 and the sl(2|m) collapsing root"))
}

fn simple_check(checks: &[(String, Check)], prefix: &[&str], what: &str) -> Outcome {
    let (f, n) = failed(checks, prefix);
    let f = if n == 0 { vec!["no checks ran".into()] } else { f };
    outcome(f, format!("{n} {what}"))
}

fn gram(checks: &[(String, Check)]) -> Outcome {
    let (mut f, n) = failed(checks, &["halfform/gram"]);
    for (s, size) in [("psl(2|2)", 4), ("F(4)", 8), ("G(3)", 7)] {
        let ok = checks.iter().any(|(x, c)| x == s && c.name == "halfform/gram" && c.witness == format!("2·I of size {size}"));
        if !ok {
            f.push(format!("{s}: expected size {size}"));
        }
    }
    outcome(f, format!("{n} samples, sizes psl(2|2) 4, F(4) 8, G(3) 7"))
}

fn identities(checks: &[(String, Check)], algebras: &[String]) -> Outcome {
    let mut f = failed(checks, &["halfform/"]).0;
    for s in algebras {
        for id in ["rss", "Npm1", "ns", "secondaa", "a1", "a2"] {
            let name = format!("halfform/{id}");
            if !checks.iter().any(|(x, c)| x == s && c.name == name && c.status == Status::Pass) {
                f.push(format!("{s}: {id} missing"));
            }
        }
    }
    outcome(f, format!("6 identities on {} samples", algebras.len()))
}

fn k14() -> Outcome {
    let mut f = Vec::new();
    let mut n = 0;
    for b in [0, 3, -3] {
        for c in k14_checks(&Rational::int(b)) {
            n += 1;
            if c.status != Status::Pass {
                f.push(format!("b={b}: {} ({})", c.name, c.witness));
            }
        }
    }
    outcome(f, format!("{n} checks for b in {{0, 3, -3}}"))
}

fn grid_levels(step_den: i64) -> Vec<Rational> {
    (-20 * step_den..=5 * step_den).map(|j| Rational::new(j, step_den)).collect()
}

/// Nontrivially unitary levels on the grid, against the closed-form lists.
fn grid_agrees(spec: &AlgebraSpec, den: i64) -> Result<usize, String> {
    let w = WData::new(spec).map_err(|e| e.to_string())?;
    let on_grid = |k: &Rational| *k >= Rational::int(-20) && *k <= Rational::int(5) && (k * &Rational::int(den)).is_integer();
    let listed: BTreeSet<Rational> = match w.unitary_levels(400) {
        Ok(v) => v.into_iter().map(|(k, _)| k).filter(on_grid).collect(),
        Err(Error::EmptySet(_)) => BTreeSet::new(),
        Err(e) => return Err(e.to_string()),
    };
    let mut found = BTreeSet::new();
    for k in grid_levels(den) {
        if w.classify(&k).map_err(|e| e.to_string())?.verdict.is_nontrivial_unitary() {
            found.insert(k);
        }
    }
    if found != listed {
        return Err(format!("{spec}: grid {found:?} vs listed {listed:?}"));
    }
    Ok(found.len())
}

fn classification(samples: &[AlgebraSpec]) -> Outcome {
    let mut f = Vec::new();
    let mut count = 0;
    for s in samples {
        match grid_agrees(s, 4) {
            Ok(n) => count += n,
            Err(e) => f.push(e),
        }
    }
    let cl = |s: &AlgebraSpec, k: Rational| WData::new(s).and_then(|w| w.classify(&k)).map(|c| c.verdict);
    let spo3 = AlgebraSpec::spo(3).unwrap();
    if !matches!(cl(&spo3, Rational::new(-3, 4)), Ok(UnitarityVerdict::CollapsingUnitary(_))) {
        f.push("spo(2|3) at -3/4".into());
    }
    for m in [3, 4, 5, 8] {
        let s = AlgebraSpec::sl(m).unwrap();
        if !matches!(cl(&s, -Rational::one()), Ok(UnitarityVerdict::CollapsingUnitary(_))) {
            f.push(format!("{s} at -1"));
        }
        if !matches!(cl(&s, Rational::new(m as i64 - 2, 2)), Ok(UnitarityVerdict::CollapsingNonUnitary(_))) {
            f.push(format!("{s} at m/2-1"));
        }
    }
    for m in [4, 6, 8] {
        let w = WData::new(&AlgebraSpec::osp(m).unwrap()).unwrap();
        if !matches!(w.unitary_levels(5), Err(Error::EmptySet(_))) {
            f.push(format!("osp(4|{m}) unitary set not empty"));
        }
    }
    let mut d = 0;
    for m in 1..=6i64 {
        for n in 1..=6i64 {
            let a = Rational::new(-m, m + n);
            let s = AlgebraSpec::d21a(a).unwrap();
            // the unitary levels have denominator dividing m+n
            match grid_agrees(&s, 4 * (m + n)) {
                Ok(_) => d += 1,
                Err(e) => f.push(e),
            }
        }
    }
    outcome(f, format!("{count} unitary grid points on {} samples; {d} D(2,1;-m/(m+n)) families", samples.len()))
}

fn central(checks: &[(String, Check)]) -> Outcome {
    let mut f = failed(checks, &["partner/"]).0;
    for n in 0..=2u32 {
        let c = central_charge(&AlgebraSpec::spo(n).unwrap()).unwrap();
        for p in 2..=12i64 {
            let k = &Rational::new(1, p) - &Rational::one();
            if c.eval(&k).ok() != classical_series(n, p).ok() {
                f.push(format!("series n={n} p={p}"));
            }
        }
    }
    for m in 3..=8 {
        let s = AlgebraSpec::spo(m).unwrap();
        for c in partner_checks(&s) {
            if c.status != Status::Pass {
                f.push(format!("{s}: {} ({})", c.name, c.witness));
            }
        }
    }
    outcome(f, "closed forms n=0,1,2 at p=2..12; partner identities; spo product for m=3..8".into())
}

fn main() {
    let samples = default_samples();
    let mut checks: Vec<(String, Check)> = Vec::new();
    let mut algebras = Vec::new();
    let mut specs = Vec::new();
    for s in &samples {
        if let Sample::Algebra(spec) = s {
            algebras.push(s.to_string());
            specs.push(spec.clone());
        }
        for c in run_sample(s) {
            checks.push((s.to_string(), c));
        }
    }
    let results = [
        ("1", "invariant table regeneration", table2(&checks)),
        ("2", "algebra integrity", simple_check(&checks, &["jacobi/", "k14/jacobi", "construct"], "checks")),
        ("3", "involution suite", simple_check(&checks, &["involution/"], "checks")),
        ("4", "half-space Gram = 2I", gram(&checks)),
        ("5", "structure-constant identities", identities(&checks, &algebras)),
        ("6", "K(1,4) realization", k14()),
        ("7", "classification grid", classification(&specs)),
        ("8", "central charge and partners", central(&checks)),
    ];
    let mut all = true;
    for (id, name, o) in &results {
        all &= o.ok;
        println!("{} criterion {id}: {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    println!(
        "FAIL criterion 9: vertex-algebra Hermitian form positivity and unitary modules: not reproducible by finite computation (covered only through criteria 1-8)"
    );
    if !all {
        std::process::exit(1);
    }
}
