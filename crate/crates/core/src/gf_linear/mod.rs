//! Finite fields, matrices, forms and subspace actions.

mod element;
mod field;
mod form;
mod matrix;
mod points;

pub use element::{
    build_element, irreducible_block, multiplicative_degree, nu_of_spec, Automorphism, Block, Discriminant, ElementSpec,
};
pub use field::{Field, FieldSpec};
pub use form::{FormKind, FormSpec, Geometry, Sign};
pub use matrix::{Matrix, Semilinear};
pub use points::{fixed_mspaces_semisimple, quadratic_form_type, PointKind, PointSet, DEFAULT_POINT_BUDGET};
