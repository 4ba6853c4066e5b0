//! Inputs shared by the benches.

use wmin_core::{parse_spec, AlgebraSpec, Rational};

/// One algebra per family, small enough to build in milliseconds.
pub fn bench_specs() -> Vec<AlgebraSpec> {
    vec![
        AlgebraSpec::sl(3).unwrap(),
        AlgebraSpec::spo(3).unwrap(),
        AlgebraSpec::osp(4).unwrap(),
        AlgebraSpec::d21a(Rational::new(1, 2)).unwrap(),
        parse_spec("F(4)").unwrap(),
        parse_spec("G(3)").unwrap(),
    ]
}
