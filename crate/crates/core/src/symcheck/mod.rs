//! Exact symbolic checks on matrix models of the classical Lie algebras.
//!
//! Everything here is generic over a [`Field`](crate::scalar::Field); the
//! crate-root aliases [`QPoly`](crate::QPoly) and [`QMatrix`](crate::QMatrix)
//! fix it to `BigRational`.

mod algebra;
mod invariants;
mod kernel;
mod linalg;
mod poly;
mod saito;

pub use algebra::{algebra_for_type, parse_algebra, AdMatrix, AlgebraKind, MatrixLieAlgebra};
pub use invariants::{
    basic_invariants, check_nu_in_kernel, invariant_degrees, killing_dual_gradient, nu_in_kernel,
};
pub use kernel::{
    degree_bound, graded_kernel_dims, kernel_report, nu_freeness, poly_space_dim,
    predicted_kernel_dim, FreenessRow, KernelRow,
};
pub use linalg::{Matrix, SparseEchelon};
pub use poly::{monomials, Monomial, Poly};
pub use saito::{poly_det, saito_determinant_check, SaitoReport};
