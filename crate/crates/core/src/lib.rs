//! Exact computations for minimal W-algebras of basic Lie superalgebras.

pub mod error;
pub mod involution;
pub mod exact;
pub mod halfform;
pub mod catalog;
pub mod construct;
pub mod linalg;
pub mod realize;
pub mod verify;
pub mod wdata;

pub use catalog::{parse_spec, root_system, AlgebraSpec, Family, Root, RootDatum};
pub use error::{Error, Result};
pub use exact::{Gaussian, LevelPolynomial, LevelRationalFunction, RadicalScalar, Rational};
pub use construct::{build_algebra, Algebra, SuperLieAlgebra};
pub use involution::{almost_compact, ConjugateLinearMap, MinimalData};
