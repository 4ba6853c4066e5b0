//! Concrete models: the contact realization of `D(2,1;a)`, matrix models of
//! the classical families, and real forms.

pub mod align;
pub mod contact;
pub mod matrix;
pub mod realform;

pub use align::{align_with, find_alignment, Alignment};
pub use contact::{a_element, check_contact_identities, contact_bracket, k14_conjugation, k14_coords, k14_realization, k14_spanning_set, k14_triple, monomials_up_to, ContactElement, K14Realization};
pub use matrix::{matrix_realization, MatrixSuperAlgebra};
pub use realform::{check_compact_span, even_trace_form, real_form_fixed_points, transport};
