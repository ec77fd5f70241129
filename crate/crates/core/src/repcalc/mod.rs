//! Characters, exterior powers and Levi decompositions.

mod fastpath;
mod freudenthal;
mod multiset;
mod wedge;

pub use fastpath::{
    a_bracket_to_weight, gl_to_o_branching, o_to_so_branching, orthogonal_wedge_summands,
    so_bracket_to_weight, type_a_wedge_summands, weight_to_a_bracket, weight_to_so_bracket,
    OrthKind, PartitionShape, SoBracket,
};
pub use freudenthal::{freudenthal, levi_dim, levi_irrep_weights, weyl_dim, LeviCache};
pub use multiset::WeightMultiset;
pub use wedge::{exterior_power, exterior_powers, peel_levi, LeviDecomposition};
