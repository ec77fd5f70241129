use std::collections::HashMap;

use num_integer::binomial;

use super::{LeviCache, WeightMultiset};
use crate::error::{Error, Result};
use crate::rootcore::{RootSystem, Weight};
use crate::scalar::Count;

/// All exterior powers `∧^0 … ∧^{max_p}` of a weight multiset.
///
/// A dynamic program over the distinct weights: a weight of multiplicity `m`
/// contributes `binom(m, t)` choices of `t` copies.
pub fn exterior_powers<C: Count>(
    ms: &WeightMultiset<C>,
    max_p: usize,
) -> Result<Vec<WeightMultiset<C>>> {
    let total = ms
        .total()
        .to_usize()
        .ok_or_else(|| Error::Overflow("multiset too large for exterior powers".into()))?;
    if max_p > total {
        return Err(Error::POutOfRange {
            p: max_p,
            max: total,
        });
    }
    let rank = ms.iter().next().map_or(0, |(w, _)| w.rank());
    let mut dp: Vec<HashMap<Weight, C>> = vec![HashMap::new(); max_p + 1];
    dp[0].insert(Weight::zero(rank), C::one());
    for (w, m) in ms.iter() {
        let m = m.to_usize().expect("bounded by total");
        let mut next: Vec<HashMap<Weight, C>> = vec![HashMap::new(); max_p + 1];
        for (k, layer) in dp.iter().enumerate() {
            for t in 0..=m.min(max_p - k) {
                let choose = C::from_usize(binomial(m, t))
                    .ok_or_else(|| Error::Overflow("binomial".into()))?;
                let shift = w.scale(t as i32);
                for (v, c) in layer {
                    let e = next[k + t].entry(v.add(&shift)).or_insert_with(C::zero);
                    *e = e.clone() + c.clone() * choose.clone();
                }
            }
        }
        dp = next;
    }
    Ok(dp
        .into_iter()
        .map(|layer| layer.into_iter().collect())
        .collect())
}

/// Weights of `∧^p` of a multiset.
pub fn exterior_power<C: Count>(ms: &WeightMultiset<C>, p: usize) -> Result<WeightMultiset<C>> {
    Ok(exterior_powers(ms, p)?.pop().expect("nonempty"))
}

/// Levi-irreducible highest weights with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviDecomposition<C> {
    pub summands: Vec<(Weight, C)>,
}

/// Decompose a Levi-invariant multiset into Levi irreducibles.
///
/// Repeatedly takes the Levi-dominant weight of largest Levi height (ties go
/// to the lexicographically largest weight), records it with its current
/// multiplicity and subtracts that many copies of its character.
pub fn peel_levi<C: Count>(
    rs: &RootSystem,
    levi: &[usize],
    ms: &WeightMultiset<C>,
    cache: &LeviCache,
) -> Result<LeviDecomposition<C>> {
    let height: Vec<i64> = (0..rs.rank())
        .map(|j| {
            rs.positive_roots
                .iter()
                .filter(|r| r.supported_on(levi))
                .map(|r| i64::from(r.coroot[j]))
                .sum()
        })
        .collect();
    let ht = |w: &Weight| -> i64 {
        w.0.iter()
            .zip(&height)
            .map(|(&a, &h)| i64::from(a) * h)
            .sum()
    };
    let mut rem = ms.clone();
    let mut summands = Vec::new();
    while !rem.is_empty() {
        let (top, m) = rem
            .iter()
            .filter(|(w, _)| levi.iter().all(|&i| w.0[i] >= 0))
            .max_by(|(a, _), (b, _)| ht(a).cmp(&ht(b)).then(a.cmp(b)))
            .map(|(w, c)| (w.clone(), c.clone()))
            .ok_or_else(|| {
                let w = rem
                    .iter()
                    .next()
                    .map(|(w, _)| w.to_string())
                    .unwrap_or_default();
                Error::NegativeMultiplicity(w)
            })?;
        for (off, k) in cache.offsets(rs, levi, &top)?.iter() {
            let k = C::from_u64(*k).ok_or_else(|| Error::Overflow("count".into()))?;
            rem.remove(&top.add(off), &(m.clone() * k))?;
        }
        summands.push((top, m));
    }
    summands.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(LeviDecomposition { summands })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcalc::levi_irrep_weights;

    #[test]
    fn wedge_of_standard_a2() {
        let a2 = RootSystem::from_str_type("A2").unwrap();
        let std: WeightMultiset<u64> =
            super::super::freudenthal(&a2, &Weight::from_slice(&[1, 0])).unwrap();
        let w2 = exterior_power(&std, 2).unwrap();
        assert_eq!(w2.total(), 3);
        assert_eq!(w2.get(&Weight::from_slice(&[0, 1])), 1);
        assert!(matches!(
            exterior_power(&std, 4),
            Err(Error::POutOfRange { p: 4, max: 3 })
        ));
    }

    #[test]
    fn peel_fdual_a3() {
        // Fiber of the contact bundle dual on the A3 adjoint variety: Levi is node 2.
        let a3 = RootSystem::from_str_type("A3").unwrap();
        let cache = LeviCache::new();
        let mut ms: WeightMultiset<u64> =
            levi_irrep_weights(&a3, &[1], &Weight::from_slice(&[-2, 1, 0])).unwrap();
        for (w, c) in levi_irrep_weights::<u64>(&a3, &[1], &Weight::from_slice(&[0, 1, -2]))
            .unwrap()
            .iter()
        {
            ms.add(w.clone(), *c);
        }
        let dec = peel_levi(&a3, &[1], &ms, &cache).unwrap();
        assert_eq!(
            dec.summands,
            vec![
                (Weight::from_slice(&[-2, 1, 0]), 1),
                (Weight::from_slice(&[0, 1, -2]), 1)
            ]
        );
    }

    #[test]
    fn peel_rejects_non_characters() {
        let a2 = RootSystem::from_str_type("A2").unwrap();
        let cache = LeviCache::new();
        let ms: WeightMultiset<u64> = [Weight::from_slice(&[1, 0])].into_iter().collect();
        assert!(matches!(
            peel_levi(&a2, &[0, 1], &ms, &cache),
            Err(Error::NegativeMultiplicity(_))
        ));
    }
}
