//! Exact dense linear algebra over the rationals and prime fields.

pub mod field;
pub mod mat;

pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use mat::{intertwiner_basis, solve_and_invert, Mat, RowEchelon};
