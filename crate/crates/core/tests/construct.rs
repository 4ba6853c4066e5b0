use wmin_core::catalog::{dual_coxeter_reference, parse_spec};
use wmin_core::construct::goodchoice::{lambda0, verify_good_choice};
use wmin_core::exact::{RadicalScalar, Rational};
use wmin_core::build_algebra;

fn build(s: &str) -> wmin_core::Algebra {
    build_algebra(&parse_spec(s).unwrap()).unwrap_or_else(|e| panic!("{s}: {e}"))
}

#[test]
fn dimensions() {
    for (s, d) in [
        ("D(2,1;a=1)", 17),
        ("G(3)", 31),
        ("F(4)", 40),
        ("psl(2|2)", 14),
        ("sl(2|3)", 24),
        ("spo(2|3)", 12),
        ("osp(4|4)", 3 + 3 + 10 + 16),
    ] {
        assert_eq!(build(s).alg.dim(), d, "{s}");
    }
}

#[test]
fn integrity_small() {
    for s in ["spo(2|1)", "spo(2|3)", "D(2,1;a=1)", "D(2,1;a=-2/5)", "psl(2|2)", "sl(2|3)", "G(3)"] {
        let a = build(s);
        a.raw.check_grading().unwrap();
        a.alg.check_grading().unwrap();
        a.alg.check_jacobi().unwrap_or_else(|e| panic!("{e}"));
        a.alg.check_form().unwrap_or_else(|e| panic!("{e}"));
        let cas = a.alg.casimir_scalar().unwrap_or_else(|e| panic!("{e}"));
        let h = dual_coxeter_reference(&a.spec);
        assert_eq!(cas, RadicalScalar::from_rational(&h * &Rational::int(2)), "{s}");
        verify_good_choice(&a, &lambda0(&a.datum)).unwrap();
    }
}

#[test]
#[ignore]
fn timing_large() {
    for s in ["F(4)", "spo(2|8)", "osp(4|8)", "sl(2|8)"] {
        let t = std::time::Instant::now();
        let a = build(s);
        let t1 = t.elapsed();
        let n = a.alg.check_jacobi().unwrap();
        let t2 = t.elapsed();
        a.alg.check_form().unwrap();
        let t3 = t.elapsed();
        let c = a.alg.casimir_scalar().unwrap();
        eprintln!("{s}: dim {} build {t1:?} jacobi {n} {t2:?} form {t3:?} cas {c} {:?} rad {:?}", a.alg.dim(), t.elapsed(), a.basis.radicands);
    }
}
