//! Structure-constant models of the catalog algebras.

pub mod algebra;
pub mod chevalley;
pub mod goodchoice;

pub use algebra::{BasisLabel, Sparse, SuperLieAlgebra, Vector};
pub use chevalley::{build_chevalley, ChevalleyData};
pub use goodchoice::{build_algebra, good_choice, structure_constant, Algebra, RootVectorBasis};
