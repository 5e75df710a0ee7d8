//! Exact integer and rational linear algebra.

mod charpoly;
mod matrix;
mod poly;
pub(crate) mod small;

pub use charpoly::{char_poly, char_poly_deleted, MAX_CHAR_POLY_ORDER};
pub use matrix::{determinant, is_zero_vector, kernel_basis, project, projector, IntMatrix, RatMatrix, RatVector};
pub use poly::{all_roots_integer, exact_div, integer_roots, poly_gcd, IntPolynomial};
