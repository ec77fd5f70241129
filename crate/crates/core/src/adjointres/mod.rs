//! Adjoint varieties, their cohomology tables and the resolutions built
//! from them.

mod catalog;
mod resolution;
mod table;

pub use catalog::{AdjointVariety, CatalogSummary};
pub use resolution::{
    assemble_jacobian_resolution, assemble_structure_resolution, compare_resolutions,
    hilbert_check, minimality_witness, predicted_resolution, predicted_resolution_with_j,
    BettiEntry, BettiTable, BettiTerm, HilbertCheck, JacobianAssembly, MinimalityWitness,
    ResolutionDiff, Sheaf,
};
pub use table::{
    shared, verify_cohomology_pattern, AdjointPipeline, CohomTable, PatternReport, Scale,
};
