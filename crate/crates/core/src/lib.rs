//! Exact fixed point ratios for finite primitive permutation groups, checked
//! against a brute-force permutation and finite-field oracle.

pub mod classifier;
pub mod error;
pub mod exact_math;
pub mod fpr_formulas;
pub mod gf_linear;
pub mod model;
pub mod perm_core;
pub mod verify_harness;

pub use error::{Error, Result};
pub use exact_math::Rational;
pub use perm_core::{PermGroup, Permutation};
