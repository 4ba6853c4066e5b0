use wmin_core::realize::*;
use wmin_core::*;

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

#[test]
fn contact_bracket_identities() {
    assert_eq!(monomials_up_to(6).len(), 44);
    let n = check_contact_identities(6).unwrap();
    assert!(n > 0);
}

#[test]
fn k14_closure_and_cartan() {
    for (b, a) in [("0", "1"), ("3", "-2"), ("-3", "-1/2")] {
        let k = k14_realization(&r(b)).unwrap();
        assert_eq!(k.alg.dim(), 17);
        assert_eq!(k.alg.even_dim(), 9);
        k.alg.check_jacobi().unwrap();
        assert_eq!(k.a, r(a));
        let one = Rational::one();
        let zero = Rational::zero();
        let two = Rational::int(2);
        let want = vec![
            vec![zero.clone(), one.clone(), r(a)],
            vec![-one.clone(), two.clone(), zero.clone()],
            vec![-one.clone(), zero.clone(), two.clone()],
        ];
        assert_eq!(k.cartan, want, "b = {b}");
    }
}

#[test]
fn k14_degenerate() {
    for b in ["1", "-1"] {
        assert!(matches!(k14_realization(&r(b)), Err(Error::DegenerateParameter(_))));
    }
}

#[test]
fn k14_isomorphic_to_catalog() {
    for b in ["0", "3", "-3"] {
        let b = r(b);
        let k = k14_realization(&b).unwrap();
        for a in [k.a.clone(), &(&b - &Rational::one()) / &Rational::int(2)] {
            let cat = build_algebra(&AlgebraSpec::d21a(a.clone()).unwrap()).unwrap();
            let al = find_alignment(&cat, &k.alg).unwrap();
            assert_eq!(al.pairs_checked, 17 * 18 / 2, "a = {a}");
        }
    }
}

#[test]
fn k14_triple_brackets() {
    for b in ["0", "2", "-1/3"] {
        let [e, x, f] = k14_triple(&r(b));
        assert_eq!(contact_bracket(&x, &e), e);
        assert_eq!(contact_bracket(&x, &f), f.scale(&-RadicalScalar::one()));
        // {e, f} is a nonzero multiple of x
        assert_eq!(contact_bracket(&e, &f), x.scale(&RadicalScalar::from_int(-8)));
    }
}

#[test]
fn k14_generator_cartan() {
    let k = k14_realization(&r("3")).unwrap();
    let t = ContactElement::t();
    for [e, f, h] in &k.generators {
        assert_eq!(&contact_bracket(e, f), h);
        assert!(contact_bracket(h, &t).is_zero());
    }
}

#[test]
fn matrix_models_align() {
    let mut specs: Vec<AlgebraSpec> = vec![AlgebraSpec::psl22()];
    specs.extend([3, 4, 5].map(|m| AlgebraSpec::sl(m).unwrap()));
    specs.extend([0, 1, 2, 3, 4, 5].map(|m| AlgebraSpec::spo(m).unwrap()));
    specs.extend([4, 6].map(|m| AlgebraSpec::osp(m).unwrap()));
    for s in specs {
        let mm = matrix_realization(&s).unwrap();
        let cat = build_algebra(&s).unwrap();
        assert_eq!(mm.alg.dim(), cat.alg.dim(), "{s}");
        assert_eq!(mm.alignment.pairs_checked, cat.alg.dim() * (cat.alg.dim() + 1) / 2);
        mm.alg.check_jacobi().unwrap();
        let want = if s.family == Family::Osp4m { r("1/2") } else { Rational::one() };
        assert_eq!(mm.form_scale, want, "{s}");
    }
    assert_eq!(matrix_realization(&AlgebraSpec::spo(3).unwrap()).unwrap().alg.dim(), 12);
    for s in [AlgebraSpec::f4(), AlgebraSpec::g3(), AlgebraSpec::d21a(r("2")).unwrap()] {
        assert!(matches!(matrix_realization(&s), Err(Error::UnsupportedFamily(_))));
    }
}

#[test]
fn contact_examples() {
    let b = r("5/7");
    for i in 1..=4 {
        for j in 1..=4 {
            let d = if i == j { -RadicalScalar::one() } else { RadicalScalar::zero() };
            assert_eq!(contact_bracket(&ContactElement::xi(i), &ContactElement::xi(j)), ContactElement::one().scale(&d));
            let want = if i == j { k14_triple(&b)[0].clone() } else { ContactElement::zero() };
            assert_eq!(contact_bracket(&a_element(&b, i), &a_element(&b, j)), want);
            // {𝔤₁′, 𝔤₁′} ⊆ ℂt², {𝔤₁″, 𝔤₁″} = 0
            let p1 = ContactElement::t().mul(&ContactElement::xi(i));
            let p2 = ContactElement::t().mul(&ContactElement::xi(j));
            let br = contact_bracket(&p1, &p2);
            assert!(br.terms().all(|(m, _)| *m == (2, 0)));
            assert!(contact_bracket(&ContactElement::xi_hat(i), &ContactElement::xi_hat(j)).is_zero());
        }
    }
    assert!(contact_bracket(&ContactElement::t(), &ContactElement::t()).is_zero());
}

#[test]
fn k14_real_form() {
    for b in ["0", "3", "-3"] {
        let k = k14_realization(&r(b)).unwrap();
        let phi = k14_conjugation(&k).unwrap();
        phi.check_involution().unwrap();
        phi.check_automorphism(&k.alg).unwrap();
        assert_eq!(real_form_fixed_points(&k.alg, &phi).unwrap().len(), 17);
        for (name, e) in k14_spanning_set(&r(b)) {
            let c = k14_coords(&k, &e).unwrap();
            assert_eq!(phi.apply(&c), c, "{name}");
        }
        let so4: Vec<_> = k14_spanning_set(&r(b)).into_iter().filter(|(n, _)| n.len() == 6 && n.starts_with('ξ')).collect();
        assert_eq!(so4.len(), 6);
        let vs: Vec<_> = so4.iter().map(|(_, e)| k14_coords(&k, e).unwrap()).collect();
        check_compact_span(&k.alg, &vs).unwrap();
    }
}

#[test]
fn g3_real_dimension() {
    let g = build_algebra(&AlgebraSpec::g3()).unwrap();
    let data = almost_compact(&g).unwrap();
    assert_eq!(real_form_fixed_points(&g.alg, &data.phi).unwrap().len(), 31);
}

#[test]
fn spo_matrix_real_form() {
    for m in [3, 4, 5] {
        let s = AlgebraSpec::spo(m).unwrap();
        let mm = matrix_realization(&s).unwrap();
        let g = build_algebra(&s).unwrap();
        let data = almost_compact(&g).unwrap();
        let phi = transport(&data.phi, &mm.alignment).unwrap();
        phi.check_involution().unwrap();
        phi.check_automorphism(&mm.alg).unwrap();
        // 𝔤^♮ lands in the so_m block
        let push = |v: &[RadicalScalar]| -> Vec<RadicalScalar> {
            let mut out = vec![RadicalScalar::zero(); v.len()];
            for (x, img) in v.iter().zip(&mm.alignment.images) {
                for (k, y) in img.iter().enumerate() {
                    out[k] = &out[k] + &(x * y);
                }
            }
            out
        };
        let nat: Vec<_> = data.natural.iter().map(|v| push(v)).collect();
        let fixed = wmin_core::involution::real_fixed_basis(&phi, &nat).unwrap();
        assert_eq!(fixed.len(), (m * (m - 1) / 2) as usize);
        for v in &fixed {
            for (c, mat) in v.iter().zip(&mm.basis) {
                if c.is_zero() {
                    continue;
                }
                for (a, row) in mat.iter().enumerate() {
                    for (b, x) in row.iter().enumerate() {
                        assert!(x.is_zero() || (a >= 2 && b >= 2));
                    }
                }
            }
        }
        check_compact_span(&mm.alg, &fixed).unwrap();
    }
}
