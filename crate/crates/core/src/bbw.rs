//! Bott–Borel–Weil cohomology of homogeneous bundles on `G/P`.
//!
//! `E_λ` denotes the bundle induced from the irreducible Levi module with
//! highest weight `λ`, so that `H^0(E_λ) = V_λ` for dominant `λ`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::repcalc::weyl_dim;
use crate::rootcore::{RootSystem, Weight};
use crate::weyl::{dot_normalize, DotResult, Parabolic};

/// One irreducible `G`-module with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RepEntry {
    pub weight: Weight,
    #[serde(serialize_with = "as_string")]
    pub dim: BigUint,
    pub mult: u64,
}

fn as_string<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Cohomology groups `H^q`, each a sum of irreducible `G`-modules.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CohomResult {
    groups: BTreeMap<u32, BTreeMap<Weight, (BigUint, u64)>>,
}

#[derive(Serialize)]
struct GroupJson<'a> {
    q: u32,
    reps: &'a [RepEntry],
}

impl CohomResult {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add(&mut self, q: u32, weight: Weight, dim: BigUint, mult: u64) {
        if mult == 0 {
            return;
        }
        let e = self
            .groups
            .entry(q)
            .or_default()
            .entry(weight)
            .or_insert((dim, 0));
        e.1 += mult;
    }

    pub fn merge(&mut self, other: &CohomResult, times: u64) {
        for (q, g) in &other.groups {
            for (w, (d, m)) in g {
                self.add(*q, w.clone(), d.clone(), m * times);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    /// Degrees with nonzero cohomology.
    pub fn degrees(&self) -> Vec<u32> {
        self.groups.keys().copied().collect()
    }

    /// `H^q` as a sorted list of irreducibles.
    pub fn group(&self, q: u32) -> Vec<RepEntry> {
        self.groups
            .get(&q)
            .map(|g| {
                g.iter()
                    .map(|(w, (d, m))| RepEntry {
                        weight: w.clone(),
                        dim: d.clone(),
                        mult: *m,
                    })
                    .collect()
            })
            .unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, RepEntry)> + '_ {
        self.groups.iter().flat_map(|(q, g)| {
            g.iter().map(move |(w, (d, m))| {
                (
                    *q,
                    RepEntry {
                        weight: w.clone(),
                        dim: d.clone(),
                        mult: *m,
                    },
                )
            })
        })
    }

    /// Total dimension of `H^q`.
    pub fn dim(&self, q: u32) -> BigUint {
        self.group(q)
            .iter()
            .map(|e| &e.dim * BigUint::from(e.mult))
            .sum()
    }

    /// `Some(k)` when `H^q` is `k` copies of the trivial module and nothing else.
    pub fn trivial_only(&self, q: u32) -> Option<u64> {
        let g = self.groups.get(&q)?;
        match g.iter().next() {
            Some((w, (_, m))) if g.len() == 1 && w.is_zero() => Some(*m),
            _ => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let groups: Vec<(u32, Vec<RepEntry>)> = self
            .degrees()
            .into_iter()
            .map(|q| (q, self.group(q)))
            .collect();
        let v: Vec<GroupJson<'_>> = groups
            .iter()
            .map(|(q, r)| GroupJson { q: *q, reps: r })
            .collect();
        serde_json::to_value(v).expect("serialisable")
    }

    pub fn render_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for q in self.degrees() {
            let reps: Vec<String> = self
                .group(q)
                .iter()
                .map(|e| {
                    let base = format!("V{}(dim {})", e.weight, e.dim);
                    if e.mult == 1 {
                        base
                    } else {
                        format!("{}x{}", e.mult, base)
                    }
                })
                .collect();
            parts.push(format!("H^{q} = {}", reps.join(" + ")));
        }
        parts.join("; ")
    }
}

type Key = (Parabolic, Weight);

/// Computes and memoises `H^•(G/P, E_λ)` for one root system.
pub struct BbwEngine {
    rs: Arc<RootSystem>,
    cache: RwLock<HashMap<Key, CohomResult>>,
}

impl BbwEngine {
    pub fn new(rs: Arc<RootSystem>) -> Self {
        Self {
            rs,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// `H^•(G/P, E_λ)` for a `P`-dominant `λ`: zero when `λ + ρ` is singular,
    /// otherwise `V_{w(λ+ρ)−ρ}` in degree `ℓ(w)`.
    pub fn cohomology(&self, parabolic: &Parabolic, lambda: &Weight) -> Result<CohomResult> {
        self.rs.check_weight(lambda)?;
        if !parabolic.is_p_dominant(lambda) {
            return Err(Error::NotDominant(format!(
                "{lambda} for parabolic {:?}",
                parabolic.labels()
            )));
        }
        let key = (parabolic.clone(), lambda.clone());
        if let Some(r) = self.cache.read().expect("cache lock").get(&key) {
            return Ok(r.clone());
        }
        let mut out = CohomResult::zero();
        if let DotResult::Regular { length, dominant } = dot_normalize(&self.rs, lambda)? {
            let dim = weyl_dim(&self.rs, &dominant)?;
            out.add(length as u32, dominant, dim, 1);
        }
        self.cache
            .write()
            .expect("cache lock")
            .insert(key, out.clone());
        Ok(out)
    }

    /// Cohomology of a direct sum of irreducible bundles.
    pub fn bundle_cohomology(
        &self,
        parabolic: &Parabolic,
        summands: &[(Weight, u64)],
    ) -> Result<CohomResult> {
        let mut out = CohomResult::zero();
        for (w, m) in summands {
            out.merge(&self.cohomology(parabolic, w)?, *m);
        }
        Ok(out)
    }

    /// Check the weight convention on bundles whose cohomology is known:
    /// the trivial bundle, the hyperplane bundle `E_θ` and `F∨`, whose first
    /// cohomology is `b_1` copies of the trivial module.
    pub fn calibrate(
        &self,
        parabolic: &Parabolic,
        theta: &Weight,
        fdual: &[(Weight, u64)],
        b1: u64,
    ) -> Result<()> {
        let rank = self.rs.rank();
        let trivial = self.cohomology(parabolic, &Weight::zero(rank))?;
        if trivial.degrees() != vec![0] || trivial.trivial_only(0) != Some(1) {
            return Err(Error::ConventionError(format!(
                "H(O) = {}",
                trivial.render_text()
            )));
        }
        let hyper = self.cohomology(parabolic, theta)?;
        let g0 = hyper.group(0);
        if hyper.degrees() != vec![0] || g0.len() != 1 || &g0[0].weight != theta {
            return Err(Error::ConventionError(format!(
                "H(L) = {}",
                hyper.render_text()
            )));
        }
        let f = self.bundle_cohomology(parabolic, fdual)?;
        if f.degrees() != vec![1] || f.trivial_only(1) != Some(b1) {
            return Err(Error::ConventionError(format!(
                "H(F dual) = {}",
                f.render_text()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine(t: &str) -> BbwEngine {
        BbwEngine::new(Arc::new(RootSystem::from_str_type(t).unwrap()))
    }

    #[test]
    fn bbw_examples() {
        let e = engine("A2");
        let p = Parabolic::borel(e.root_system());
        let r = e.cohomology(&p, &Weight::from_slice(&[-2, 1])).unwrap();
        assert_eq!(r.trivial_only(1), Some(1));
        assert!(e
            .cohomology(&p, &Weight::from_slice(&[-1, 0]))
            .unwrap()
            .is_zero());

        let e = engine("C3");
        let p1 = Parabolic::from_labels(e.root_system(), &[1]).unwrap();
        let r = e.cohomology(&p1, &Weight::from_slice(&[2, 0, 0])).unwrap();
        assert_eq!(r.group(0)[0].dim, BigUint::from(21u32));
        assert!(matches!(
            e.cohomology(&p1, &Weight::from_slice(&[0, -1, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn json_shape() {
        let e = engine("A2");
        let p = Parabolic::borel(e.root_system());
        let r = e.cohomology(&p, &Weight::from_slice(&[1, 1])).unwrap();
        assert_eq!(
            r.to_json(),
            serde_json::json!([{"q": 0, "reps": [{"weight": [1, 1], "dim": "8", "mult": 1}]}])
        );
    }
}
