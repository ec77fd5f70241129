use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::AdjointVariety;
use crate::bbw::{BbwEngine, CohomResult};
use crate::error::{Error, Result};
use crate::repcalc::{
    a_bracket_to_weight, exterior_powers, levi_irrep_weights, orthogonal_wedge_summands, peel_levi,
    so_bracket_to_weight, type_a_wedge_summands, LeviCache, OrthKind,
};
use crate::rootcore::{LieType, Weight};
use crate::Multiset;

/// Which exceptional types may be computed.
#[derive(Clone, Copy, Debug, Default)]
pub struct Scale {
    pub allow_e7: bool,
}

/// Cohomology of `∧^p F∨ ⊗ L^t` for one adjoint variety, computed on demand
/// and shared between threads.
pub struct AdjointPipeline {
    pub var: AdjointVariety,
    engine: BbwEngine,
    levi_cache: LeviCache,
    fiber: Multiset,
    powers: OnceLock<Vec<Multiset>>,
}

/// `H^•(∧^p F∨ ⊗ L^t)` for all `p` and `t ∈ {0, 1}`, keyed by `(p, t)`.
pub type CohomTable = BTreeMap<(usize, u8), CohomResult>;

impl AdjointPipeline {
    /// Build the pipeline and run the convention calibration. `E8` is always
    /// excluded; `E7` only runs when `scale.allow_e7` is set.
    pub fn new(lie_type: LieType, scale: Scale) -> Result<Self> {
        if lie_type.family == 'E' && lie_type.rank == 8 {
            return Err(Error::ComputeExcluded(
                "E8 tables exceed desk-scale limits".into(),
            ));
        }
        if lie_type.family == 'E' && lie_type.rank == 7 && !scale.allow_e7 {
            return Err(Error::ComputeExcluded(
                "E7 runs only with --allow-e7".into(),
            ));
        }
        let var = AdjointVariety::new(lie_type)?;
        let engine = BbwEngine::new(var.rs.clone());
        let levi_cache = LeviCache::new();
        let mut fiber = Multiset::new();
        for w in &var.fdual_summands {
            for (v, c) in levi_irrep_weights::<BigUint>(&var.rs, &var.levi, w)?.iter() {
                fiber.add(v.clone(), c.clone());
            }
        }
        let pipeline = Self {
            var,
            engine,
            levi_cache,
            fiber,
            powers: OnceLock::new(),
        };
        if !pipeline.var.fdual_summands.is_empty() {
            let fdual: Vec<(Weight, u64)> = pipeline
                .var
                .fdual_summands
                .iter()
                .map(|w| (w.clone(), 1))
                .collect();
            pipeline.engine.calibrate(
                &pipeline.var.parabolic,
                &pipeline.var.theta,
                &fdual,
                pipeline.var.betti[1],
            )?;
        }
        Ok(pipeline)
    }

    pub fn engine(&self) -> &BbwEngine {
        &self.engine
    }

    pub fn levi_cache(&self) -> &LeviCache {
        &self.levi_cache
    }

    /// Weights of the fibre of `F∨`.
    pub fn fiber(&self) -> &Multiset {
        &self.fiber
    }

    fn powers(&self) -> Result<&Vec<Multiset>> {
        if let Some(p) = self.powers.get() {
            return Ok(p);
        }
        let computed = exterior_powers(&self.fiber, self.var.rank_f())?;
        Ok(self.powers.get_or_init(|| computed))
    }

    fn check_p(&self, p: usize) -> Result<()> {
        if p > self.var.rank_f() {
            return Err(Error::POutOfRange {
                p,
                max: self.var.rank_f(),
            });
        }
        Ok(())
    }

    /// Levi-irreducible summands of `∧^p F∨`, by peeling its weights.
    pub fn wedge_summands(&self, p: usize) -> Result<Vec<(Weight, u64)>> {
        self.check_p(p)?;
        let dec = peel_levi(
            &self.var.rs,
            &self.var.levi,
            &self.powers()?[p],
            &self.levi_cache,
        )?;
        dec.summands
            .into_iter()
            .map(|(w, c)| {
                let c =
                    u64::try_from(c).map_err(|_| Error::Overflow("summand multiplicity".into()))?;
                Ok((w, c))
            })
            .collect()
    }

    /// `H^•(X, ∧^p F∨ ⊗ L^twist)`.
    pub fn wedge_cohomology(&self, p: usize, twist: u8) -> Result<CohomResult> {
        let summands = self.twisted_summands(p, twist)?;
        self.engine
            .bundle_cohomology(&self.var.parabolic, &summands)
    }

    /// Summands of `∧^p F∨ ⊗ L^twist` from the closed forms in types A, B
    /// and D, or `None` for the other types.
    pub fn fast_path_summands(&self, p: usize, twist: u8) -> Option<Result<Vec<(Weight, u64)>>> {
        let t = self.var.lie_type();
        let weights: Result<Vec<Weight>> = match t.family {
            'A' if t.rank >= 2 => type_a_wedge_summands(t.rank, p, twist)
                .and_then(|bs| bs.iter().map(|b| a_bracket_to_weight(b)).collect()),
            'B' | 'D' => {
                let kind = if t.family == 'B' {
                    OrthKind::B
                } else {
                    OrthKind::D
                };
                orthogonal_wedge_summands(t.rank, kind, p, twist)
                    .and_then(|bs| bs.iter().map(|b| so_bracket_to_weight(kind, b)).collect())
            }
            _ => return None,
        };
        Some(weights.map(|ws| {
            let mut counts: BTreeMap<Weight, u64> = BTreeMap::new();
            for w in ws {
                *counts.entry(w).or_default() += 1;
            }
            counts.into_iter().collect()
        }))
    }

    /// Levi summands of `∧^p F∨ ⊗ L^twist` by the generic path.
    pub fn twisted_summands(&self, p: usize, twist: u8) -> Result<Vec<(Weight, u64)>> {
        let shift = self.var.theta.scale(i32::from(twist));
        let mut out: Vec<(Weight, u64)> = self
            .wedge_summands(p)?
            .into_iter()
            .map(|(w, c)| (w.add(&shift), c))
            .collect();
        out.sort();
        Ok(out)
    }

    /// The full table for `0 ≤ p ≤ rank F` and both twists, computed in
    /// parallel on the current rayon pool.
    pub fn table(&self) -> Result<CohomTable> {
        self.powers()?;
        let keys: Vec<(usize, u8)> = (0..=self.var.rank_f())
            .flat_map(|p| [(p, 0u8), (p, 1u8)])
            .collect();
        let rows: Vec<Result<((usize, u8), CohomResult)>> = keys
            .par_iter()
            .map(|&(p, t)| Ok(((p, t), self.wedge_cohomology(p, t)?)))
            .collect();
        rows.into_iter().collect()
    }
}

/// Outcome of comparing a cohomology table with the uniform pattern.
#[derive(Clone, Debug, Serialize)]
pub struct PatternReport {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub mismatches: Vec<String>,
    /// `(p̂, q̂)` with `ĝ ⊂ H^q̂(∧^p̂ F∨ ⊗ L)`.
    pub qm_location: Option<(usize, u32)>,
}

impl PatternReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compare the table with the expected pattern:
///
/// * twist 0: `H^p(∧^p F∨) = C^{b_p}` for `p ≤ e`, nothing else;
/// * twist 1: `H^0(L) = g`, `H^{p−2}(∧^p F∨ ⊗ L) = C^{b_{p−2}}` for
///   `2 ≤ p ≤ e + 1`, and in the non-simply-laced case exactly one copy of
///   `ĝ`, located in degree `q̂ = p̂ − 1`.
pub fn verify_cohomology_pattern(var: &AdjointVariety, table: &CohomTable) -> PatternReport {
    let mut mismatches = Vec::new();
    let mut qm_location = None;
    let zero = Weight::zero(var.rs.rank());
    for (&(p, t), res) in table {
        let mut expected: BTreeMap<(u32, Weight), u64> = BTreeMap::new();
        if t == 0 && p <= var.e {
            expected.insert((p as u32, zero.clone()), var.betti[p]);
        }
        if t == 1 && p == 0 {
            expected.insert((0, var.theta.clone()), 1);
        }
        if t == 1 && (2..=var.e + 1).contains(&p) {
            expected.insert(((p - 2) as u32, zero.clone()), var.betti[p - 2]);
        }
        let mut observed: BTreeMap<(u32, Weight), u64> = BTreeMap::new();
        for (q, entry) in res.iter() {
            if t == 1 && Some(&entry.weight) == var.qm_weight.as_ref() && entry.mult == 1 {
                if qm_location.is_some() {
                    mismatches.push(format!(
                        "second copy of the short-root module at p={p}, q={q}"
                    ));
                } else {
                    qm_location = Some((p, q));
                    if q as usize + 1 != p {
                        mismatches.push(format!(
                            "short-root module at p={p}, q={q}, expected q = p - 1"
                        ));
                    }
                }
                continue;
            }
            observed.insert((q, entry.weight.clone()), entry.mult);
        }
        if observed != expected {
            mismatches.push(format!(
                "twist {t}, p={p}: observed {}, expected {}",
                describe(&observed),
                describe(&expected)
            ));
        }
    }
    if !var.simply_laced && qm_location.is_none() {
        mismatches.push("short-root module not found in the twist-1 table".into());
    }
    PatternReport {
        lie_type: var.lie_type().to_string(),
        mismatches,
        qm_location,
    }
}

fn describe(m: &BTreeMap<(u32, Weight), u64>) -> String {
    if m.is_empty() {
        return "0".into();
    }
    m.iter()
        .map(|((q, w), k)| format!("H^{q}:{k}xV{w}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Wrap a pipeline for sharing.
pub fn shared(lie_type: LieType, scale: Scale) -> Result<Arc<AdjointPipeline>> {
    AdjointPipeline::new(lie_type, scale).map(Arc::new)
}
