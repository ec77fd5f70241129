//! Property checks shared by the property suite and the acceptance run.

#![allow(dead_code)]

use adjres::repcalc::{
    exterior_powers, freudenthal, peel_levi, weyl_dim, LeviCache, WeightMultiset,
};
use adjres::weyl::{dot_normalize, DotResult};
use adjres::{RootSystem, Weight};
use num_integer::binomial;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

/// Types of rank at most four.
pub const SMALL_TYPES: &[&str] = &[
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "G2", "F4",
];

/// Cases per type for the Freudenthal suite.
pub const FREUDENTHAL_CASES: u32 = 50;

type Counts = WeightMultiset<u64>;

fn runner(cases: u32, deterministic: bool) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    if deterministic {
        TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
    } else {
        TestRunner::new(config)
    }
}

/// Small dominant weights: the bound keeps `F4` and rank-four modules cheap.
fn dominant(rank: usize, family: char) -> impl Strategy<Value = Weight> {
    let hi = match (family, rank) {
        ('F', _) => 1,
        (_, 4) => 2,
        _ => 3,
    };
    proptest::collection::vec(0..=hi, rank).prop_map(|v| Weight::from_slice(&v))
}

fn any_weight(rank: usize) -> impl Strategy<Value = Weight> {
    proptest::collection::vec(-6i32..=6, rank).prop_map(|v| Weight::from_slice(&v))
}

fn fail(e: impl std::fmt::Display) -> TestCaseError {
    TestCaseError::fail(e.to_string())
}

/// Sum of Freudenthal multiplicities equals the Weyl dimension.
pub fn freudenthal_totals(deterministic: bool) -> Result<usize, String> {
    let mut checked = 0;
    for t in SMALL_TYPES {
        let rs = RootSystem::from_str_type(t).unwrap();
        let mut run = runner(FREUDENTHAL_CASES, deterministic);
        run.run(&dominant(rs.rank(), rs.lie_type.family), |w| {
            let ch: Counts = freudenthal(&rs, &w).map_err(fail)?;
            let dim = weyl_dim(&rs, &w).map_err(fail)?;
            prop_assert_eq!(num_bigint::BigUint::from(ch.total()), dim, "{} {}", t, w);
            Ok(())
        })
        .map_err(|e| format!("{t}: {e}"))?;
        checked += FREUDENTHAL_CASES as usize;
    }
    Ok(checked)
}

/// `∧^p` of an `N`-dimensional module has `binom(N, p)` weights, and
/// `∧^{N−p}` is `∧^p` reflected through the total weight `S`.
pub fn exterior_binomials(deterministic: bool) -> Result<usize, String> {
    let mut checked = 0;
    for t in ["A2", "A3", "B2", "C3", "G2"] {
        let rs = RootSystem::from_str_type(t).unwrap();
        let mut run = runner(8, deterministic);
        let strat = dominant(rs.rank(), rs.lie_type.family);
        run.run(&strat, |w| {
            prop_assume!(weyl_dim(&rs, &w).map_err(fail)? <= 28u32.into());
            let ch: Counts = freudenthal(&rs, &w).map_err(fail)?;
            let n = ch.total() as usize;
            let powers = exterior_powers(&ch, n).map_err(fail)?;
            let s = ch.weight_sum().map_err(fail)?;
            for p in 0..=n {
                prop_assert_eq!(powers[p].total(), binomial(n as u64, p as u64));
                prop_assert_eq!(&powers[n - p], &powers[p].reflect_through(&s));
            }
            Ok(())
        })
        .map_err(|e| format!("{t}: {e}"))?;
        checked += 8;
    }
    Ok(checked)
}

/// Peeling a restricted `G`-module into Levi irreducibles and adding the
/// irreducible characters back gives the original multiset.
pub fn peel_reconstruction(deterministic: bool) -> Result<usize, String> {
    let mut checked = 0;
    for t in ["A3", "B3", "C3", "D4", "G2"] {
        let rs = RootSystem::from_str_type(t).unwrap();
        let rank = rs.rank();
        let strat = (
            dominant(rank, rs.lie_type.family),
            proptest::collection::vec(any::<bool>(), rank),
        );
        let mut run = runner(10, deterministic);
        run.run(&strat, |(w, mask)| {
            let levi: Vec<usize> = (0..rank).filter(|&i| mask[i]).collect();
            prop_assume!(weyl_dim(&rs, &w).map_err(fail)? <= 2000u32.into());
            let ch: Counts = freudenthal(&rs, &w).map_err(fail)?;
            let cache = LeviCache::new();
            let dec = peel_levi(&rs, &levi, &ch, &cache).map_err(fail)?;
            let mut back = Counts::new();
            for (top, m) in &dec.summands {
                for (off, k) in cache.offsets(&rs, &levi, top).map_err(fail)?.iter() {
                    back.add(top.add(off), m * k);
                }
            }
            prop_assert_eq!(back, ch);
            Ok(())
        })
        .map_err(|e| format!("{t}: {e}"))?;
        checked += 10;
    }
    Ok(checked)
}

/// The dot normal form of a dominant result is itself, with length zero.
pub fn dot_idempotence(deterministic: bool) -> Result<usize, String> {
    let mut checked = 0;
    for t in SMALL_TYPES {
        let rs = RootSystem::from_str_type(t).unwrap();
        let mut run = runner(50, deterministic);
        run.run(&any_weight(rs.rank()), |w| {
            if let DotResult::Regular { dominant, length } = dot_normalize(&rs, &w).map_err(fail)? {
                prop_assert!(dominant.is_dominant());
                prop_assert!(length <= rs.positive_roots.len());
                let again = dot_normalize(&rs, &dominant).map_err(fail)?;
                prop_assert_eq!(
                    again,
                    DotResult::Regular {
                        length: 0,
                        dominant
                    }
                );
            }
            Ok(())
        })
        .map_err(|e| format!("{t}: {e}"))?;
        checked += 50;
    }
    Ok(checked)
}
