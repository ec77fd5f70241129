//! Dot action of the Weyl group and Betti numbers of `G/P`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootcore::{RootSystem, Weight};

/// A set of parabolic nodes, stored 0-based and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Parabolic(Vec<usize>);

impl Parabolic {
    /// From 0-based node indices.
    pub fn new(rs: &RootSystem, nodes: &[usize]) -> Result<Self> {
        let mut v = nodes.to_vec();
        v.sort_unstable();
        v.dedup();
        if let Some(&bad) = v.iter().find(|&&i| i >= rs.rank()) {
            return Err(Error::InvalidParabolic(format!(
                "node {} outside 1..={}",
                bad + 1,
                rs.rank()
            )));
        }
        Ok(Parabolic(v))
    }

    /// From 1-based Bourbaki labels.
    pub fn from_labels(rs: &RootSystem, labels: &[usize]) -> Result<Self> {
        if labels.contains(&0) {
            return Err(Error::InvalidParabolic("labels are 1-based".into()));
        }
        Self::new(rs, &labels.iter().map(|l| l - 1).collect::<Vec<_>>())
    }

    /// The Borel subgroup: every node is parabolic.
    pub fn borel(rs: &RootSystem) -> Self {
        Parabolic((0..rs.rank()).collect())
    }

    pub fn nodes(&self) -> &[usize] {
        &self.0
    }

    pub fn labels(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// Nodes of the Levi factor.
    pub fn levi_nodes(&self, rank: usize) -> Vec<usize> {
        (0..rank).filter(|i| !self.contains(*i)).collect()
    }

    /// `λ` is `P`-dominant when it is dominant on every Levi node.
    pub fn is_p_dominant(&self, w: &Weight) -> bool {
        w.0.iter()
            .enumerate()
            .all(|(i, &c)| c >= 0 || self.contains(i))
    }
}

/// Result of moving `λ + ρ` into the dominant chamber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum DotResult {
    Singular,
    Regular { length: usize, dominant: Weight },
}

/// `w·λ` normalised: either singular, or the unique dominant `w(λ+ρ)−ρ`
/// with `ℓ(w)` the number of positive roots pairing negatively with `λ+ρ`.
pub fn dot_normalize(rs: &RootSystem, lambda: &Weight) -> Result<DotResult> {
    rs.check_weight(lambda)?;
    let mut mu = lambda.add(&rs.rho);
    let mut length = 0;
    for a in &rs.positive_roots {
        match rs.pair(&mu, a) {
            0 => return Ok(DotResult::Singular),
            x if x < 0 => length += 1,
            _ => {}
        }
    }
    while let Some(i) = mu.0.iter().position(|&c| c < 0) {
        rs.reflect(&mut mu, i);
    }
    Ok(DotResult::Regular {
        length,
        dominant: mu.sub(&rs.rho),
    })
}

/// Betti numbers of `G/P`: `b_p` counts cosets `wW_P` whose minimal
/// representative has length `p`.
///
/// Each coset is an orbit element `μ` of `ϖ_P = Σ_{k∈P} ϖ_k`; the length of
/// its minimal representative is the number of positive roots with
/// `⟨μ, α∨⟩ < 0`.
pub fn coset_betti(rs: &RootSystem, parabolic: &Parabolic) -> Result<Vec<u64>> {
    if parabolic.nodes().is_empty() {
        return Err(Error::EmptyParabolic);
    }
    let mut seed = Weight::zero(rs.rank());
    for &k in parabolic.nodes() {
        seed.0[k] = 1;
    }
    let mut betti: Vec<u64> = Vec::new();
    for mu in rs.orbit(&seed) {
        let len = rs
            .positive_roots
            .iter()
            .filter(|a| rs.pair(&mu, a) < 0)
            .count();
        if betti.len() <= len {
            betti.resize(len + 1, 0);
        }
        betti[len] += 1;
    }
    Ok(betti)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_str_type(s).unwrap()
    }

    #[test]
    fn dot_examples() {
        let a2 = rs("A2");
        assert_eq!(
            dot_normalize(&a2, &Weight::from_slice(&[-2, 1])).unwrap(),
            DotResult::Regular {
                length: 1,
                dominant: Weight::from_slice(&[0, 0])
            }
        );
        assert_eq!(
            dot_normalize(&a2, &Weight::from_slice(&[-1, 0])).unwrap(),
            DotResult::Singular
        );
        let b3 = rs("B3");
        let r = dot_normalize(&b3, &Weight::from_slice(&[1, -2, 2])).unwrap();
        assert_eq!(
            r,
            DotResult::Regular {
                length: 1,
                dominant: Weight::zero(3)
            }
        );
    }

    #[test]
    fn dominant_is_fixed() {
        let f4 = rs("F4");
        let w = Weight::from_slice(&[0, 1, 0, 2]);
        assert_eq!(
            dot_normalize(&f4, &w).unwrap(),
            DotResult::Regular {
                length: 0,
                dominant: w
            }
        );
    }

    #[test]
    fn betti_examples() {
        let a2 = rs("A2");
        assert_eq!(
            coset_betti(&a2, &Parabolic::from_labels(&a2, &[1, 2]).unwrap()).unwrap(),
            vec![1, 2, 2, 1]
        );
        let b3 = rs("B3");
        assert_eq!(
            coset_betti(&b3, &Parabolic::from_labels(&b3, &[2]).unwrap()).unwrap(),
            vec![1, 1, 2, 2, 2, 2, 1, 1]
        );
        let c3 = rs("C3");
        assert_eq!(
            coset_betti(&c3, &Parabolic::from_labels(&c3, &[1]).unwrap()).unwrap(),
            vec![1; 6]
        );
        assert_eq!(
            coset_betti(&a2, &Parabolic::default()),
            Err(Error::EmptyParabolic)
        );
    }
}
