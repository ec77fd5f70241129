use std::sync::Arc;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::repcalc::{peel_levi, LeviCache, WeightMultiset};
use crate::rootcore::{LieType, RootSystem, Weight};
use crate::weyl::{coset_betti, Parabolic};

/// The adjoint variety `X ⊂ P(g)`, the closed orbit of highest root vectors,
/// with the constants the resolutions are stated in.
#[derive(Clone, Debug)]
pub struct AdjointVariety {
    pub rs: Arc<RootSystem>,
    /// Support of the highest root.
    pub parabolic: Parabolic,
    pub levi: Vec<usize>,
    /// Weight of the hyperplane bundle `L`, the highest root.
    pub theta: Weight,
    pub dim_x: usize,
    /// `dim X = 2e + 1`.
    pub e: usize,
    /// Highest weights of the Levi-irreducible summands of `F∨`.
    pub fdual_summands: Vec<Weight>,
    /// Fano index with respect to `L`.
    pub index: usize,
    pub discriminant_degree: usize,
    /// Number of long simple roots.
    pub s: usize,
    /// Twist carried by `ĝ` in the predicted resolutions.
    pub j: Option<usize>,
    /// Highest weight of `ĝ`, the module of the highest short root.
    pub qm_weight: Option<Weight>,
    pub simply_laced: bool,
    /// Betti numbers of `X`.
    pub betti: Vec<u64>,
}

/// Grade of a root: sum of its coefficients on the parabolic nodes.
fn grade(rs: &RootSystem, parabolic: &Parabolic, k: usize) -> i32 {
    parabolic
        .nodes()
        .iter()
        .map(|&i| rs.positive_roots[k].simple[i])
        .sum()
}

impl AdjointVariety {
    pub fn new(lie_type: LieType) -> Result<Self> {
        let rs = Arc::new(RootSystem::new(lie_type));
        let theta = rs.highest_root().weight.clone();
        let support: Vec<usize> = (0..rs.rank()).filter(|&i| theta.0[i] != 0).collect();
        let parabolic = Parabolic::new(&rs, &support)?;
        let levi = parabolic.levi_nodes(rs.rank());
        let grades: Vec<i32> = (0..rs.positive_roots.len())
            .map(|k| grade(&rs, &parabolic, k))
            .collect();
        let dim_x = grades.iter().filter(|&&g| g >= 1).count();
        let e = (dim_x - 1) / 2;

        let fiber: WeightMultiset<u64> = rs
            .positive_roots
            .iter()
            .zip(&grades)
            .filter(|(_, &g)| g == 1)
            .map(|(r, _)| r.weight.neg())
            .collect();
        let fdual_summands = if fiber.is_empty() {
            Vec::new()
        } else {
            peel_levi(&rs, &levi, &fiber, &LeviCache::new())?
                .summands
                .into_iter()
                .map(|(w, _)| w)
                .collect()
        };

        let mut canonical = Weight::zero(rs.rank());
        for (r, &g) in rs.positive_roots.iter().zip(&grades) {
            if g >= 1 {
                canonical = canonical.add(&r.weight);
            }
        }
        let k = support[0];
        let index = (canonical.0[k] / theta.0[k]) as usize;
        if theta.scale(index as i32) != canonical {
            return Err(Error::ConventionError(format!(
                "anticanonical weight {canonical} is not a multiple of {theta}"
            )));
        }

        let simply_laced = lie_type.is_simply_laced();
        let j = match lie_type.family {
            'C' => Some(1),
            'G' => Some(2),
            'F' => Some(3),
            // B2 is C2 with the nodes swapped.
            'B' if lie_type.rank == 2 => Some(1),
            'B' => Some(lie_type.rank),
            _ => None,
        };
        let qm_weight = (!simply_laced).then(|| rs.highest_short_root().weight.clone());
        let betti = coset_betti(&rs, &parabolic)?;
        Ok(Self {
            discriminant_degree: rs.discriminant_degree(),
            s: rs.long_simple_count(),
            rs,
            parabolic,
            levi,
            theta,
            dim_x,
            e,
            fdual_summands,
            index,
            j,
            qm_weight,
            simply_laced,
            betti,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.rs.lie_type
    }

    /// Rank of the contact distribution `F`.
    pub fn rank_f(&self) -> usize {
        self.dim_x - 1
    }

    /// Exponents `e_1 ≤ … ≤ e_s` attached to the long simple roots.
    pub fn long_exponents(&self) -> &[u32] {
        &self.rs.exponents[..self.s]
    }

    pub fn summary(&self) -> CatalogSummary {
        CatalogSummary {
            lie_type: self.lie_type().to_string(),
            parabolic: self.parabolic.labels(),
            theta: self.theta.clone(),
            dim_x: self.dim_x,
            e: self.e,
            index: self.index,
            fdual_summands: self.fdual_summands.clone(),
            discriminant_degree: self.discriminant_degree,
            s: self.s,
            j: self.j,
            qm_weight: self.qm_weight.clone(),
            qm_dim: self
                .qm_weight
                .as_ref()
                .map(|w| crate::repcalc::weyl_dim(&self.rs, w).map(|d| d.to_string()))
                .transpose()
                .ok()
                .flatten(),
            exponents: self.rs.exponents.clone(),
            betti: self.betti.clone(),
        }
    }

    pub fn dim_g(&self) -> BigUint {
        BigUint::from(self.rs.dim_lie_algebra())
    }
}

/// Serialisable view of the catalog constants.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogSummary {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub parabolic: Vec<usize>,
    pub theta: Weight,
    pub dim_x: usize,
    pub e: usize,
    pub index: usize,
    pub fdual_summands: Vec<Weight>,
    pub discriminant_degree: usize,
    pub s: usize,
    pub j: Option<usize>,
    pub qm_weight: Option<Weight>,
    pub qm_dim: Option<String>,
    pub exponents: Vec<u32>,
    pub betti: Vec<u64>,
}
