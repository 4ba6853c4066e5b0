use wmin_core::involution::*;
use wmin_core::*;

fn specs() -> Vec<AlgebraSpec> {
    vec![
        AlgebraSpec::sl(3).unwrap(),
        AlgebraSpec::sl(4).unwrap(),
        AlgebraSpec::psl22(),
        AlgebraSpec::spo(1).unwrap(),
        AlgebraSpec::spo(3).unwrap(),
        AlgebraSpec::spo(4).unwrap(),
        AlgebraSpec::osp(4).unwrap(),
        AlgebraSpec::d21a(Rational::one()).unwrap(),
        AlgebraSpec::d21a(Rational::new(-2, 5)).unwrap(),
        AlgebraSpec::g3(),
        AlgebraSpec::f4(),
    ]
}

#[test]
fn almost_compact_all() {
    for s in specs() {
        let alg = build_algebra(&s).unwrap();
        let data = almost_compact(&alg).unwrap();
        data.phi.check_automorphism(&alg.alg).unwrap();
        check_form_compatibility(&alg, &data.phi).unwrap();
        check_q0_roots(&alg).unwrap();
        let dims: Vec<usize> = data.grading.spaces.iter().map(|(_, b)| b.len()).collect();
        let comps: Vec<(String, String, String)> =
            data.components.iter().map(|c| (c.cartan_type.clone(), c.u.to_string(), c.hbar.to_string())).collect();
        for c in data.components.iter().filter(|c| c.kind == ComponentKind::Simple) {
            assert_eq!(component_casimir_half(&alg, c).unwrap(), c.hbar, "{s}");
        }
        let cd = commutant_dimension(&alg, &data).unwrap();
        println!("{s}: dims {dims:?} comps {comps:?} commutant {cd}");
    }
}

#[test]
fn delta_type_one() {
    for s in [AlgebraSpec::sl(3).unwrap(), AlgebraSpec::psl22(), AlgebraSpec::sl(5).unwrap()] {
        let alg = build_algebra(&s).unwrap();
        let lam = RadicalScalar::from_rational(Rational::new(-3, 7));
        let d = delta_automorphism(&alg, &lam).unwrap();
        check_diagonal_automorphism(&alg.alg, &d).unwrap();
    }
    let alg = build_algebra(&AlgebraSpec::g3()).unwrap();
    assert!(matches!(delta_automorphism(&alg, &RadicalScalar::one()), Err(Error::NotTypeI(_))));
}

#[test]
fn half_form_gram() {
    for s in specs() {
        let alg = build_algebra(&s).unwrap();
        let data = almost_compact(&alg).unwrap();
        let hb = wmin_core::halfform::half_basis(&alg, &data).unwrap();
        let g = wmin_core::halfform::gram_on_r(&alg, &data.triple, &hb).unwrap();
        assert_eq!(g.len(), alg.datum.positive.iter().filter(|r| r.odd).count());
    }
}
