//! Named verification checks over one algebra, reported as pass / fail /
//! flagged entries. Flagged entries are known misprints and do not fail a run.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::{AlgebraSpec, Family};
use crate::construct::goodchoice::verify_good_choice;
use crate::construct::{build_algebra, Algebra};
use crate::error::{Error, Result};
use crate::exact::{RadicalScalar, Rational};
use crate::halfform::{gram_on_r, half_basis};
use crate::involution::{
    almost_compact, check_form_compatibility, check_q0_roots, commutant_dimension, component_casimir_half, MinimalData,
};
use crate::realize::{find_alignment, k14_conjugation, k14_realization, matrix_realization, real_form_fixed_points};
use crate::wdata::{central_charge, UnitarityVerdict, WData};

pub const CHECK_GROUPS: [&str; 7] = ["table2", "involution", "halfform", "jacobi", "k14", "goodchoice", "partner"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Flagged,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witness: String,
}

impl Check {
    fn new(name: impl Into<String>, status: Status, witness: impl Into<String>) -> Self {
        Check { name: name.into(), status, witness: witness.into() }
    }

    fn from_result<T>(name: impl Into<String>, r: Result<T>, witness: impl FnOnce(T) -> String) -> Self {
        match r {
            Ok(t) => Check::new(name, Status::Pass, witness(t)),
            Err(e) => Check::new(name, Status::Fail, e.to_string()),
        }
    }

    fn equal<T: PartialEq + std::fmt::Display>(name: impl Into<String>, computed: &T, printed: &T) -> Self {
        let status = if computed == printed { Status::Pass } else { Status::Fail };
        Check::new(name, status, format!("computed {computed}, printed {printed}"))
    }
}

/// One printed row of the component table: `h^∨` and per component
/// `(u_i, h̄_i^∨, z_i = (coefficient of k, constant), χ_i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PrintedRow {
    pub h_dual: Rational,
    pub components: Vec<PrintedComponent>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PrintedComponent {
    pub u: Rational,
    pub hbar: Rational,
    pub z: (Rational, Rational),
    pub chi: Rational,
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn comp(u: Rational, hbar: Rational, z: (Rational, Rational), chi: Rational) -> PrintedComponent {
    PrintedComponent { u, hbar, z, chi }
}

/// The published values, as printed (including the G(3) `u` misprint).
pub fn printed_row(spec: &AlgebraSpec) -> Result<PrintedRow> {
    let m = spec.m as i64;
    let mq = Rational::int(m);
    let one = Rational::one();
    let row = match spec.family {
        Family::Sl2m => PrintedRow {
            h_dual: Rational::int(2 - m),
            components: vec![
                comp(q(2, 1), q(0, 1), (one.clone(), -&(&(&mq - &q(2, 1)) * &q(1, 2))), &one - &(&mq * &q(1, 2))),
                comp(q(-2, 1), -&mq, (-&one, -&one), -&one),
            ],
        },
        Family::Psl22 => PrintedRow { h_dual: Rational::zero(), components: vec![comp(q(-2, 1), q(-2, 1), (-&one, -&one), -&one)] },
        Family::Osp4m => PrintedRow {
            h_dual: Rational::int(2 - m),
            components: vec![
                comp(q(2, 1), q(2, 1), (one.clone(), -&(&mq * &q(1, 2))), -&(&mq * &q(1, 2))),
                comp(q(-4, 1), Rational::int(-m - 2), (q(-1, 2), -&one), -&one),
            ],
        },
        Family::Spo2m if m == 3 => {
            PrintedRow { h_dual: q(1, 2), components: vec![comp(q(-1, 2), q(-1, 2), (q(-4, 1), q(-2, 1)), q(-2, 1))] }
        }
        Family::Spo2m if m > 3 => {
            let c = comp(q(-1, 1), &one - &(&mq * &q(1, 2)), (q(-2, 1), -&one), -&one);
            // so_4 = sl_2 ⊕ sl_2: the row applies to each ideal
            let n = if m == 4 { 2 } else { 1 };
            PrintedRow { h_dual: &q(2, 1) - &(&mq * &q(1, 2)), components: vec![c; n] }
        }
        Family::D21a => {
            let a = &spec.a;
            let u1 = &q(-2, 1) - &(a * &q(2, 1));
            let u2 = a * &q(2, 1);
            PrintedRow {
                h_dual: Rational::zero(),
                components: vec![
                    comp(u1.clone(), u1, (-&one.checked_div(&(&one + a))?, -&one), -&one),
                    comp(u2.clone(), u2, (one.checked_div(a)?, -&one), -&one),
                ],
            }
        }
        Family::F4 => PrintedRow { h_dual: q(-2, 1), components: vec![comp(q(-4, 3), q(-10, 3), (q(-3, 2), -&one), -&one)] },
        Family::G3 => PrintedRow { h_dual: q(-3, 2), components: vec![comp(q(-2, 3), q(-3, 1), (q(-4, 3), -&one), -&one)] },
        Family::Spo2m => return Err(Error::AbelianGNatural(spec.to_string())),
    };
    Ok(row)
}

/// Documented misprints: `(check name, computed, printed)` accepted as flagged.
fn known_misprint(spec: &AlgebraSpec, name: &str, computed: &Rational, printed: &Rational) -> bool {
    spec.family == Family::G3 && name == "table2/u1" && *computed == q(-3, 2) && *printed == q(-2, 3)
}

pub fn table2_checks(spec: &AlgebraSpec) -> Vec<Check> {
    let (wd, row) = match (WData::new(spec), printed_row(spec)) {
        (Ok(w), Ok(r)) => (w, r),
        (Err(e), _) | (_, Err(e)) => return vec![Check::new("table2", Status::Fail, e.to_string())],
    };
    let mut out = vec![Check::equal("table2/h_dual", &wd.h_dual, &row.h_dual)];
    out.push(Check::equal("table2/components", &wd.components.len(), &row.components.len()));
    for (i, (c, p)) in wd.components.iter().zip(&row.components).enumerate() {
        let fields = [
            ("u", c.u.clone(), p.u.clone()),
            ("hbar", c.hbar.clone(), p.hbar.clone()),
            ("z_k", c.z.coeff(1), p.z.0.clone()),
            ("z_0", c.z.coeff(0), p.z.1.clone()),
            ("chi", c.chi.clone(), p.chi.clone()),
        ];
        for (f, computed, printed) in fields {
            let name = format!("table2/{f}{}", i + 1);
            let mut ch = Check::equal(&name, &computed, &printed);
            if ch.status == Status::Fail && known_misprint(spec, &name, &computed, &printed) {
                ch.status = Status::Flagged;
            }
            out.push(ch);
        }
    }
    if spec.family == Family::Sl2m {
        // the proof text prints the affine collapsing level as −m/2−1
        let m = Rational::int(spec.m as i64);
        let computed = &(&m * &q(1, 2)) - &Rational::one();
        let printed = &(-&(&m * &q(1, 2))) - &Rational::one();
        out.push(match wd.collapsing_levels() {
            Ok(levels) if levels.contains(&computed) && levels.contains(&-Rational::one()) && !levels.contains(&printed) => {
                Check::new("table2/collapsing-root", Status::Flagged, format!("computed root {computed}, printed {printed}"))
            }
            Ok(levels) => Check::new("table2/collapsing-root", Status::Fail, format!("collapsing levels {levels:?}")),
            Err(e) => Check::new("table2/collapsing-root", Status::Fail, e.to_string()),
        });
    }
    out
}

fn involution_checks(alg: &Algebra, data: &Result<MinimalData>) -> Vec<Check> {
    let data = match data {
        Ok(d) => d,
        Err(e) => return vec![Check::new("involution/almost-compact", Status::Fail, e.to_string())],
    };
    let g = &alg.alg;
    let mut out = vec![Check::new("involution/almost-compact", Status::Pass, "φ fixes e, x, f; compact on 𝔤^♮")];
    out.push(Check::from_result("involution/square", data.phi.check_involution(), |_| "φ² = id".into()));
    out.push(Check::from_result("involution/automorphism", data.phi.check_automorphism(g), |_| format!("all {} basis pairs", g.dim() * (g.dim() + 1) / 2)));
    out.push(Check::from_result("involution/form", check_form_compatibility(alg, &data.phi), |_| "conj(φa|φb) = (a|b)".into()));
    let t = &data.triple;
    let x = &t.x;
    let triple_ok = g.bracket(x, &t.e) == t.e
        && g.bracket(x, &t.f) == crate::construct::algebra::scale_vec(&-RadicalScalar::one(), &t.f)
        && g.bracket(&t.e, &t.f) == crate::construct::algebra::scale_vec(&RadicalScalar::from_int(2), x);
    out.push(Check::new("involution/triple", if triple_ok { Status::Pass } else { Status::Fail }, "[x,e]=e, [x,f]=−f, [e,f]=2x"));
    let dims: Vec<String> = data.grading.spaces.iter().map(|(j, b)| format!("{j}:{}", b.len())).collect();
    let five = data.grading.spaces.len() == 5
        && data.grading.space(&Rational::one()).len() == 1
        && data.grading.space(&-Rational::one()).len() == 1;
    out.push(Check::new("involution/grading", if five { Status::Pass } else { Status::Fail }, dims.join(" ")));
    let mut hbars = Ok(Vec::new());
    if let Ok(wd) = WData::new(&alg.spec) {
        hbars = data
            .components
            .iter()
            .zip(&wd.components)
            .map(|(c, w)| {
                let h = component_casimir_half(alg, c)?;
                if h == w.hbar {
                    Ok(h.to_string())
                } else {
                    Err(Error::ConsistencyFailure(format!("Casimir gives {h}, roots give {}", w.hbar)))
                }
            })
            .collect::<Result<Vec<_>>>();
    }
    out.push(Check::from_result("involution/hbar-casimir", hbars, |v| v.join(", ")));
    out.push(Check::from_result("involution/q0-roots", check_q0_roots(alg), |_| "𝔮_0 = 𝔤^♮".into()));
    out.push(Check::from_result("involution/commutant", commutant_dimension(alg, data), |d| format!("dimension {d}")));
    out
}

fn halfform_checks(alg: &Algebra, data: &Result<MinimalData>) -> Vec<Check> {
    let data = match data {
        Ok(d) => d,
        Err(e) => return vec![Check::new("halfform", Status::Fail, e.to_string())],
    };
    let hb = match half_basis(alg, data) {
        Ok(hb) => hb,
        Err(e) => return vec![Check::new("halfform/identities", Status::Fail, e.to_string())],
    };
    let mut out: Vec<Check> =
        hb.checked.iter().map(|(name, n)| Check::new(format!("halfform/{name}"), Status::Pass, format!("{n} instances"))).collect();
    out.push(Check::from_result("halfform/gram", gram_on_r(alg, &data.triple, &hb), |g| format!("2·I of size {}", g.len())));
    if let Ok(wd) = WData::new(&alg.spec) {
        let k = q(7, 3);
        out.push(Check::from_result("halfform/level-forms", crate::wdata::check_level_forms(alg, data, &wd, &k), |n| {
            format!("{n} pairs at k = {k}")
        }));
    }
    out
}

fn jacobi_checks(alg: &Algebra) -> Vec<Check> {
    let g = &alg.alg;
    let mut out = vec![Check::equal("jacobi/dimension", &g.dim(), &alg.datum.dim())];
    out.push(Check::from_result("jacobi/grading", g.check_grading(), |_| "weights additive".into()));
    out.push(Check::from_result("jacobi/super-jacobi", g.check_jacobi(), |n| format!("{n} triples")));
    out.push(Check::from_result("jacobi/form", g.check_form(), |_| "invariant, supersymmetric, nondegenerate".into()));
    let cas = crate::catalog::dual_coxeter(&alg.datum).and_then(|h| {
        let c = g.casimir_scalar()?;
        if c == RadicalScalar::from_rational(&h * &q(2, 1)) {
            Ok(c)
        } else {
            Err(Error::ConsistencyFailure(format!("Casimir {c} ≠ 2h^∨ = {}", &h * &q(2, 1))))
        }
    });
    out.push(Check::from_result("jacobi/casimir", cas, |c| format!("Casimir = {c} = 2h^∨")));
    out
}

fn goodchoice_checks(alg: &Algebra) -> Vec<Check> {
    let mut out = vec![Check::from_result("goodchoice/omega", verify_good_choice(alg, &alg.lambda0()), |n| format!("{n} roots"))];
    if matches!(alg.spec.family, Family::Sl2m | Family::Psl22 | Family::Spo2m | Family::Osp4m) {
        out.push(Check::from_result("goodchoice/matrix-model", matrix_realization(&alg.spec), |m| {
            format!("{} bracket pairs, form scale {}", m.alignment.pairs_checked, m.form_scale)
        }));
    }
    out
}

/// Contact realization for parameter `b`, compared with the catalog algebra
/// of parameter `(1+b)/(1−b)`.
pub fn k14_checks(b: &Rational) -> Vec<Check> {
    let k = match k14_realization(b) {
        Ok(k) => k,
        Err(e) => return vec![Check::new("k14/closure", Status::Fail, e.to_string())],
    };
    let one = Rational::one();
    let a = match (&one + b).checked_div(&(&one - b)) {
        Ok(a) => a,
        Err(e) => return vec![Check::new("k14/parameter", Status::Fail, e.to_string())],
    };
    let mut out = vec![Check::equal("k14/closure", &k.alg.dim(), &17)];
    let z = Rational::zero;
    let want = vec![vec![z(), one.clone(), a.clone()], vec![-&one, q(2, 1), z()], vec![-&one, z(), q(2, 1)]];
    let fmt = |m: &Vec<Vec<Rational>>| format!("{:?}", m.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
    out.push(Check::new("k14/cartan", if k.cartan == want { Status::Pass } else { Status::Fail }, fmt(&k.cartan)));
    out.push(Check::equal("k14/parameter", &k.a, &a));
    out.push(Check::from_result("k14/jacobi", k.alg.check_jacobi(), |n| format!("{n} triples")));
    let al = AlgebraSpec::d21a(a).and_then(|s| build_algebra(&s)).and_then(|g| find_alignment(&g, &k.alg));
    out.push(Check::from_result("k14/alignment", al, |al| format!("{} bracket pairs", al.pairs_checked)));
    let real = k14_conjugation(&k).and_then(|phi| {
        phi.check_automorphism(&k.alg)?;
        real_form_fixed_points(&k.alg, &phi)
    });
    out.push(Check::from_result("k14/real-form", real, |f| format!("real dimension {}", f.len())));
    out
}

/// 20 pseudo-random levels with a fixed seed.
pub fn sample_levels(seed: u64, count: usize) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| Rational::new(rng.gen_range(-60..=60), rng.gen_range(1..=12))).collect()
}

pub fn partner_checks(spec: &AlgebraSpec) -> Vec<Check> {
    let wd = match WData::new(spec) {
        Ok(w) => w,
        Err(e) => return vec![Check::new("partner", Status::Fail, e.to_string())],
    };
    let dh = &Rational::int(wd.sdim) * &wd.h_dual;
    if dh.is_zero() {
        let r = wd.partner_level(&Rational::one());
        let ok = matches!(r, Err(Error::ZeroProduct));
        return vec![Check::new("partner/undefined", if ok { Status::Pass } else { Status::Fail }, "d·h^∨ = 0")];
    }
    let product = &dh * &q(1, 6);
    let mut out = Vec::new();
    if spec.family == Family::Spo2m {
        let m = Rational::int(spec.m as i64);
        let two = q(2, 1);
        let closed = &(&(&(&two - &m) * &(&q(3, 1) - &m)) * &(&q(4, 1) - &m)) * &q(1, 24);
        out.push(Check::equal("partner/spo-product", &product, &closed));
    }
    let c = central_charge(spec);
    let mut tested = 0;
    let mut failure = None;
    for k in sample_levels(2026, 20) {
        if k == -&wd.h_dual {
            continue;
        }
        let step = (|| -> Result<Option<String>> {
            let kp = match wd.partner_level(&k) {
                Ok(kp) => kp,
                Err(Error::SelfPartner(_)) => return Ok(None),
                Err(e) => return Err(e),
            };
            let c = c.as_ref().map_err(Clone::clone)?;
            if c.eval(&k)? != c.eval(&kp)? {
                return Ok(Some(format!("c({k}) ≠ c({kp})")));
            }
            if &(&k + &wd.h_dual) * &(&kp + &wd.h_dual) != product {
                return Ok(Some(format!("(k+h)(k'+h) ≠ dh/6 at k = {k}")));
            }
            if wd.classify(&k)?.verdict == UnitarityVerdict::UnitaryNontrivial
                && wd.classify(&kp)?.verdict == UnitarityVerdict::UnitaryNontrivial
            {
                return Ok(Some(format!("both {k} and its partner {kp} are unitary")));
            }
            Ok(None)
        })();
        match step {
            Ok(None) => tested += 1,
            Ok(Some(w)) => {
                failure = Some(w);
                break;
            }
            Err(e) => {
                failure = Some(e.to_string());
                break;
            }
        }
    }
    out.push(match failure {
        None => Check::new("partner/levels", Status::Pass, format!("{tested} random levels, (k+h)(k'+h) = {product}")),
        Some(w) => Check::new("partner/levels", Status::Fail, w),
    });
    for k in wd.unitary_levels(4).unwrap_or_default() {
        if let Ok(kp) = wd.partner_level(&k.0) {
            let ok = wd.classify(&kp).map(|c| c.verdict != UnitarityVerdict::UnitaryNontrivial).unwrap_or(false);
            out.push(Check::new("partner/duality", if ok { Status::Pass } else { Status::Fail }, format!("k = {}, k' = {kp}", k.0)));
        }
    }
    out
}

/// Runs the requested groups on one algebra; every failure becomes a check.
pub fn run_checks(spec: &AlgebraSpec, groups: &[&str]) -> Vec<Check> {
    let mut out = Vec::new();
    for g in groups {
        if !CHECK_GROUPS.contains(g) {
            out.push(Check::new(*g, Status::Fail, "unknown check group"));
        }
    }
    let has = |g: &str| groups.contains(&g);
    if has("table2") {
        out.extend(table2_checks(spec));
    }
    if has("partner") {
        out.extend(partner_checks(spec));
    }
    if has("k14") {
        if spec.family == Family::D21a {
            // a = (1+b)/(1−b)
            let one = Rational::one();
            match (&spec.a - &one).checked_div(&(&spec.a + &one)) {
                Ok(b) => out.extend(k14_checks(&b)),
                Err(e) => out.push(Check::new("k14", Status::Fail, e.to_string())),
            }
        } else {
            out.push(Check::new("k14", Status::Pass, "not applicable"));
        }
    }
    let needs_alg = ["involution", "halfform", "jacobi", "goodchoice"].iter().any(|g| has(g));
    if !needs_alg {
        return out;
    }
    let alg = match build_algebra(spec) {
        Ok(a) => a,
        Err(e) => {
            out.push(Check::new("construct", Status::Fail, e.to_string()));
            return out;
        }
    };
    if has("jacobi") {
        out.extend(jacobi_checks(&alg));
    }
    if has("goodchoice") {
        out.extend(goodchoice_checks(&alg));
    }
    if has("involution") || has("halfform") {
        let data = almost_compact(&alg);
        if has("involution") {
            out.extend(involution_checks(&alg, &data));
        }
        if has("halfform") {
            out.extend(halfform_checks(&alg, &data));
        }
    }
    out
}

/// A `verify-all` entry: an algebra, or the contact model at parameter `b`.
#[derive(Clone, Debug)]
pub enum Sample {
    Algebra(AlgebraSpec),
    Contact(Rational),
}

impl std::fmt::Display for Sample {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sample::Algebra(s) => write!(f, "{s}"),
            Sample::Contact(b) => write!(f, "K(1,4) b={b}"),
        }
    }
}

pub fn default_samples() -> Vec<Sample> {
    let mut out = Vec::new();
    let ok = |r: Result<AlgebraSpec>| r.expect("valid sample");
    out.extend([3, 4, 5, 8].map(|m| Sample::Algebra(ok(AlgebraSpec::sl(m)))));
    out.push(Sample::Algebra(AlgebraSpec::psl22()));
    out.extend([3, 4, 5, 7, 8].map(|m| Sample::Algebra(ok(AlgebraSpec::spo(m)))));
    out.extend([4, 6, 8].map(|m| Sample::Algebra(ok(AlgebraSpec::osp(m)))));
    for a in [q(1, 1), q(-1, 2), q(-2, 5), q(3, 1)] {
        out.push(Sample::Algebra(ok(AlgebraSpec::d21a(a))));
    }
    out.extend([q(0, 1), q(3, 1), q(-3, 1)].map(Sample::Contact));
    out.push(Sample::Algebra(AlgebraSpec::f4()));
    out.push(Sample::Algebra(AlgebraSpec::g3()));
    out
}

pub fn run_sample(s: &Sample) -> Vec<Check> {
    match s {
        Sample::Algebra(spec) => {
            let groups: Vec<&str> = CHECK_GROUPS.iter().copied().filter(|g| *g != "k14").collect();
            run_checks(spec, &groups)
        }
        Sample::Contact(b) => k14_checks(b),
    }
}
