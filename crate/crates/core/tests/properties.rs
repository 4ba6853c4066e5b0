use proptest::prelude::*;
use wmin_core::realize::{contact_bracket, ContactElement};
use wmin_core::wdata::WData;
use wmin_core::{AlgebraSpec, RadicalScalar, Rational};

// homogeneous element: t^a ξ_S with |S| of fixed parity
fn element(odd: bool) -> impl Strategy<Value = ContactElement> {
    let term = (0u32..3, 0u8..16, -3i64..4);
    prop::collection::vec(term, 1..4).prop_map(move |ts| {
        ts.into_iter()
            .filter(|(_, m, _)| (m.count_ones() % 2 == 1) == odd)
            .fold(ContactElement::zero(), |acc, (a, m, c)| acc.add(&ContactElement::monomial(RadicalScalar::from_int(c), a, m)))
    })
}

fn bracket_pair() -> impl Strategy<Value = (ContactElement, ContactElement, bool)> {
    (any::<bool>(), any::<bool>()).prop_flat_map(|(p, q)| (element(p), element(q), Just(p && q)))
}

proptest! {
    #[test]
    fn contact_supersymmetry((f, g, both_odd) in bracket_pair()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let fg = contact_bracket(&f, &g);
        let gf = contact_bracket(&g, &f);
        let want = if both_odd { gf } else { ContactElement::zero().sub(&gf) };
        prop_assert_eq!(fg, want);
    }

    #[test]
    fn partner_is_involution(m in 3u32..9, num in -60i64..60, den in 1i64..8) {
        let w = WData::new(&AlgebraSpec::spo(m).unwrap()).unwrap();
        let k = Rational::new(num, den);
        if let Ok(k2) = w.partner_level(&k) {
            prop_assert_eq!(w.partner_level(&k2).unwrap(), k.clone());
            prop_assert_eq!(w.central_charge_at(&k2).ok(), w.central_charge_at(&k).ok());
        }
    }

    #[test]
    fn d21a_unitary_levels_are_listed(m in 1i64..7, n in 1i64..7, num in -200i64..40, den in 1i64..13) {
        let w = WData::new(&AlgebraSpec::d21a(Rational::new(-m, m + n)).unwrap()).unwrap();
        let c = w.classify(&Rational::new(num, den)).unwrap();
        let listed: Vec<Rational> = w.unitary_levels(30).unwrap().into_iter().map(|(k, _)| k).collect();
        if c.verdict.is_nontrivial_unitary() && Rational::new(num, den) >= listed[29] {
            prop_assert!(listed.contains(&Rational::new(num, den)));
        }
    }
}
