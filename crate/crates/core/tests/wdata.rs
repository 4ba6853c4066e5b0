use wmin_core::wdata::*;
use wmin_core::*;

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn spec(s: &str) -> AlgebraSpec {
    parse_spec(s).unwrap()
}

#[test]
fn component_levels_examples() {
    let g = WData::new(&spec("G(3)")).unwrap();
    assert_eq!(g.components.len(), 1);
    assert_eq!(g.components[0].z, LevelPolynomial::linear(r("-4/3"), r("-1")));
    assert_eq!(g.components[0].chi, r("-1"));
    assert_eq!(g.components[0].u, r("-3/2"));
    for m in 3..=8 {
        let w = WData::new(&AlgebraSpec::sl(m).unwrap()).unwrap();
        let mm = Rational::int(m as i64);
        assert_eq!(w.components[0].z, LevelPolynomial::linear(r("1"), -(&(&mm - &r("2")) * &r("1/2"))));
        assert_eq!(w.components[1].z, LevelPolynomial::linear(r("-1"), r("-1")));
    }
    for a in ["1", "-1/2", "-2/5", "3"] {
        let a = r(a);
        let w = WData::new(&AlgebraSpec::d21a(a.clone()).unwrap()).unwrap();
        let one = Rational::one();
        assert_eq!(w.components[0].z, LevelPolynomial::linear(-(&one / &(&one + &a)), r("-1")));
        assert_eq!(w.components[1].z, LevelPolynomial::linear(&one / &a, r("-1")));
    }
    assert!(matches!(WData::new(&AlgebraSpec::spo(2).unwrap()), Err(Error::AbelianGNatural(_))));
}

#[test]
fn collapsing_roots() {
    let roots = |s: &str| WData::new(&spec(s)).unwrap().collapsing_levels().unwrap();
    assert_eq!(roots("G(3)"), vec![r("-3/4"), r("1/2")]);
    assert_eq!(roots("psl(2|2)"), vec![r("-1"), r("0")]);
    assert_eq!(roots("sl(2|4)"), vec![r("-1"), r("1")]);
    let p = WData::new(&spec("F(4)")).unwrap().collapsing_poly().unwrap();
    assert_eq!(p.leading(), Rational::one());
}

#[test]
fn central_charge_examples() {
    let w = WData::new(&spec("psl(2|2)")).unwrap();
    assert_eq!(w.central_charge_at(&r("-2")).unwrap(), r("6"));
    assert!(matches!(w.central_charge_at(&r("0")), Err(Error::PoleAtLevel(_))));
    let c = central_charge(&AlgebraSpec::spo(0).unwrap()).unwrap();
    assert_eq!(c.eval(&r("-2/3")).unwrap(), r("1/2"));
    for n in 0..=2u32 {
        let c = central_charge(&AlgebraSpec::spo(n).unwrap()).unwrap();
        for p in 2..=12i64 {
            let k = &Rational::new(1, p) - &Rational::one();
            assert_eq!(c.eval(&k).unwrap(), classical_series(n, p).unwrap(), "n={n} p={p}");
        }
    }
    assert_eq!(classical_series(0, 2).unwrap(), r("0"));
    assert_eq!(classical_series(1, 3).unwrap(), r("7/10"));
    assert_eq!(classical_series(2, 4).unwrap(), r("3/2"));
    assert!(classical_series(0, 1).is_err());
    for s in ["G(3)", "F(4)", "psl(2|2)", "sl(2|5)", "spo(2|3)", "osp(4|6)"] {
        WData::new(&spec(s)).unwrap().check_alternative_central_charge().unwrap();
    }
}

#[test]
fn partner_levels() {
    for m in 3..=8u32 {
        let w = WData::new(&AlgebraSpec::spo(m).unwrap()).unwrap();
        let prod = &(&Rational::int(w.sdim) * &w.h_dual) * &r("1/6");
        let m = Rational::int(m as i64);
        let want = &(&(&(&r("2") - &m) * &(&r("3") - &m)) * &(&r("4") - &m)) * &r("1/24");
        assert_eq!(prod, want);
    }
    assert!(matches!(WData::new(&spec("psl(2|2)")).unwrap().partner_level(&r("1")), Err(Error::ZeroProduct)));
    let g = WData::new(&spec("G(3)")).unwrap();
    for k in ["1/3", "-7/2", "5", "-11/13"] {
        let k2 = g.partner_level(&r(k)).unwrap();
        assert_eq!(g.central_charge_at(&k2).unwrap(), g.central_charge_at(&r(k)).unwrap());
    }
}

#[test]
fn classify_examples() {
    let cl = |s: &str, k: &str| WData::new(&spec(s)).unwrap().classify(&r(k)).unwrap();
    let c = cl("psl(2|2)", "-3");
    assert_eq!(c.verdict, UnitarityVerdict::UnitaryNontrivial);
    assert_eq!(c.c, Some(r("12")));
    assert_eq!(cl("psl(2|2)", "-2").c, Some(r("6")));
    assert_eq!(cl("spo(2|3)", "-3/4").verdict, UnitarityVerdict::CollapsingUnitary("V_1(sl_2)".into()));
    assert_eq!(cl("spo(2|3)", "-1/2").verdict, UnitarityVerdict::ExcludedLevel);
    assert!(matches!(cl("sl(2|4)", "-1").verdict, UnitarityVerdict::CollapsingUnitary(_)));
    assert!(matches!(cl("sl(2|4)", "1").verdict, UnitarityVerdict::CollapsingNonUnitary(_)));
    assert_eq!(cl("osp(4|6)", "-5").verdict, UnitarityVerdict::NonUnitary);
    assert_eq!(cl("G(3)", "-3/4").verdict, UnitarityVerdict::Trivial);
    assert_eq!(cl("spo(2|4)", "-1/2").verdict, UnitarityVerdict::Trivial);
    let d = cl("D(2,1;a=-1/2)", "-1/2");
    assert_eq!(d.verdict, UnitarityVerdict::Trivial);
    assert_eq!(d.c, Some(r("0")));
}

#[test]
fn unitary_lists() {
    let ul = |s: &str| WData::new(&spec(s)).unwrap().unitary_levels(3).unwrap();
    let ks = |v: Vec<(Rational, Rational)>| v.into_iter().map(|(k, _)| k).collect::<Vec<_>>();
    assert_eq!(ks(ul("G(3)")), vec![r("-3/2"), r("-9/4"), r("-3")]);
    assert_eq!(ks(ul("F(4)")), vec![r("-4/3"), r("-2"), r("-8/3")]);
    assert_eq!(ks(ul("D(2,1;a=-2/5)"))[0], r("-6/5"));
    assert_eq!(ks(ul("sl(2|5)")), vec![r("-1")]);
    assert!(matches!(WData::new(&spec("osp(4|4)")).unwrap().unitary_levels(3), Err(Error::EmptySet(_))));
}

#[test]
fn grid_matches_closed_forms() {
    let specs = [
        "sl(2|3)", "sl(2|4)", "sl(2|5)", "sl(2|8)", "psl(2|2)", "spo(2|3)", "spo(2|4)", "spo(2|5)", "spo(2|7)",
        "spo(2|8)", "osp(4|4)", "osp(4|6)", "osp(4|8)", "D(2,1;a=1)", "D(2,1;a=-1/2)", "D(2,1;a=-2/5)", "D(2,1;a=3)",
        "F(4)", "G(3)",
    ];
    for s in specs {
        let w = WData::new(&spec(s)).unwrap();
        let listed: Vec<Rational> = match w.unitary_levels(200) {
            Ok(v) => v.into_iter().map(|(k, _)| k).filter(|k| *k >= -20 && (k * &r("4")).is_integer()).collect(),
            Err(Error::EmptySet(_)) => vec![],
            Err(e) => panic!("{e}"),
        };
        let mut found = Vec::new();
        for j in -80..=20 {
            let k = Rational::new(j, 4);
            if w.classify(&k).unwrap().verdict.is_nontrivial_unitary() {
                found.push(k);
            }
        }
        found.reverse();
        assert_eq!(found, listed, "{s}");
    }
}
