//! Representation-theoretic computations around adjoint discriminants.
//!
//! The pipeline runs from root data ([`rootcore`]) through Weyl-group dot
//! actions ([`weyl`]) and characters ([`repcalc`]) to Bott–Borel–Weil
//! cohomology ([`bbw`]). It then assembles equivariant resolutions of the
//! Jacobian and structure sheaves ([`adjointres`]). [`symcheck`]
//! cross-checks the invariant-theory side with exact polynomial algebra.

pub mod adjointres;
pub mod bbw;
pub mod cli;
pub mod error;
pub mod repcalc;
pub mod rootcore;
pub mod scalar;
pub mod symcheck;
pub mod weyl;

pub use error::{Error, Result};
pub use rootcore::{LieType, RootSystem, Weight};

/// Weight multiset with arbitrary-precision counts.
pub type Multiset = repcalc::WeightMultiset<num_bigint::BigUint>;

/// Polynomial with exact rational coefficients.
pub type QPoly = symcheck::Poly<num_rational::BigRational>;

/// Dense matrix with exact rational entries.
pub type QMatrix = symcheck::Matrix<num_rational::BigRational>;
