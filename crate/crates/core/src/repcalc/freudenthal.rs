use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use num_traits::One;
use smallvec::SmallVec;

use super::WeightMultiset;
use crate::error::{Error, Result};
use crate::rootcore::{Coords, Root, RootSystem, Weight};
use crate::scalar::Count;

/// Dimension of the irreducible `G`-module `V_λ`, computed exactly.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigUint> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let all: Vec<usize> = (0..rs.rank()).collect();
    Ok(levi_dim(rs, &all, lambda))
}

/// Weyl dimension formula over the roots supported on `levi` nodes.
pub fn levi_dim(rs: &RootSystem, levi: &[usize], lambda: &Weight) -> BigUint {
    let shifted = lambda.add(&rs.rho);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for a in rs.positive_roots.iter().filter(|a| a.supported_on(levi)) {
        let n = rs.pair(&shifted, a);
        let d = rs.pair(&rs.rho, a);
        if n <= 0 {
            return BigUint::from(0u32);
        }
        num *= BigUint::from(n as u64);
        den *= BigUint::from(d as u64);
    }
    num / den
}

/// Offsets `ν − λ` and multiplicities of the irreducible module of the
/// subsystem on `levi` with highest weight `λ`, by Freudenthal's recursion.
fn character_offsets(rs: &RootSystem, levi: &[usize], top: &Weight) -> Result<Vec<(Weight, u64)>> {
    rs.check_weight(top)?;
    if levi.iter().any(|&i| top.0[i] < 0) {
        return Err(Error::NotDominant(top.to_string()));
    }
    let n = rs.rank();
    let b = &rs.form;
    let roots: Vec<&Root> = rs
        .positive_roots
        .iter()
        .filter(|r| r.supported_on(levi))
        .collect();
    let half: Vec<i64> = (0..n).map(|i| i64::from(b[i][i] / 2)).collect();
    let lam_dot: Vec<i64> = (0..n).map(|i| i64::from(top.0[i]) * half[i]).collect();
    let ip = |c: &[i32], a: &[i32]| -> i64 {
        let mut s = 0i64;
        for i in 0..n {
            if c[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += i64::from(c[i]) * i64::from(a[j]) * i64::from(b[i][j]);
            }
        }
        s
    };
    let lam_alpha: Vec<i64> = roots
        .iter()
        .map(|r| (0..n).map(|j| i64::from(r.simple[j]) * lam_dot[j]).sum())
        .collect();
    let root_norm: Vec<i64> = roots.iter().map(|r| i64::from(r.norm)).collect();

    let mut mult: HashMap<Coords, i128> = HashMap::new();
    let zero: Coords = SmallVec::from_elem(0, n);
    mult.insert(zero.clone(), 1);
    let mut order = vec![zero.clone()];
    let mut layer = vec![zero];
    while !layer.is_empty() {
        let mut cands: Vec<Coords> = Vec::new();
        for c in &layer {
            for &i in levi {
                let mut d = c.clone();
                d[i] += 1;
                cands.push(d);
            }
        }
        cands.sort();
        cands.dedup();
        let mut next = Vec::new();
        for c in cands {
            let den: i64 = 2
                * (0..n)
                    .map(|i| i64::from(c[i]) * (lam_dot[i] + half[i]))
                    .sum::<i64>()
                - ip(&c, &c);
            if den <= 0 {
                continue;
            }
            let mut acc: i128 = 0;
            for (k_root, r) in roots.iter().enumerate() {
                // (ν, α) with ν = λ − Σ c_i α_i.
                let nu_alpha = lam_alpha[k_root] - ip(&c, &r.simple);
                let mut k = 1i64;
                let mut up = c.clone();
                loop {
                    let mut ok = true;
                    for i in 0..n {
                        up[i] -= r.simple[i];
                        if up[i] < 0 {
                            ok = false;
                        }
                    }
                    if !ok {
                        break;
                    }
                    match mult.get(&up) {
                        Some(&m) => acc += m * i128::from(nu_alpha + k * root_norm[k_root]),
                        None => break,
                    }
                    k += 1;
                }
            }
            let num = 2 * acc;
            debug_assert!(
                num % i128::from(den) == 0,
                "Freudenthal quotient not integral"
            );
            let m = num / i128::from(den);
            if m > 0 {
                mult.insert(c.clone(), m);
                order.push(c.clone());
                next.push(c);
            }
        }
        layer = next;
    }
    order
        .into_iter()
        .map(|c| {
            let m = mult[&c];
            let mut off = Weight::zero(n);
            for j in 0..n {
                if c[j] != 0 {
                    off = off.sub(&rs.simple_root_weight(j).scale(c[j]));
                }
            }
            let m = u64::try_from(m).map_err(|_| Error::Overflow("weight multiplicity".into()))?;
            Ok((off, m))
        })
        .collect()
}

/// Weight multiset of the irreducible `G`-module `V_λ`.
pub fn freudenthal<C: Count>(rs: &RootSystem, lambda: &Weight) -> Result<WeightMultiset<C>> {
    let all: Vec<usize> = (0..rs.rank()).collect();
    let offs = character_offsets(rs, &all, lambda)?;
    lift(lambda, &offs)
}

/// Weight multiset, in full coordinates, of the irreducible Levi module with
/// highest weight `μ`. The Levi factor consists of the non-parabolic nodes.
pub fn levi_irrep_weights<C: Count>(
    rs: &RootSystem,
    levi: &[usize],
    mu: &Weight,
) -> Result<WeightMultiset<C>> {
    let offs = character_offsets(rs, levi, mu)?;
    lift(mu, &offs)
}

fn lift<C: Count>(top: &Weight, offs: &[(Weight, u64)]) -> Result<WeightMultiset<C>> {
    let mut ms = WeightMultiset::new();
    for (off, m) in offs {
        let c = C::from_u64(*m).ok_or_else(|| Error::Overflow("count".into()))?;
        ms.add(top.add(off), c);
    }
    Ok(ms)
}

type CacheKey = (Vec<usize>, Weight);
type Offsets = Arc<Vec<(Weight, u64)>>;

/// Memoised Levi characters, keyed by the Levi nodes and the restriction of
/// the highest weight to them. Safe to share between threads.
#[derive(Default)]
pub struct LeviCache {
    map: RwLock<HashMap<CacheKey, Offsets>>,
}

impl LeviCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Offsets `ν − μ` with multiplicities for the Levi module of `μ`.
    pub fn offsets(
        &self,
        rs: &RootSystem,
        levi: &[usize],
        mu: &Weight,
    ) -> Result<Offsets> {
        let mut restricted = Weight::zero(rs.rank());
        for &i in levi {
            restricted.0[i] = mu.0[i];
        }
        let key = (levi.to_vec(), restricted);
        if let Some(v) = self.map.read().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let v = Arc::new(character_offsets(rs, levi, mu)?);
        self.map.write().expect("cache lock").insert(key, v.clone());
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_str_type(s).unwrap()
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(
            weyl_dim(&rs("A2"), &Weight::from_slice(&[1, 1])).unwrap(),
            BigUint::from(8u32)
        );
        assert_eq!(
            weyl_dim(&rs("E8"), &Weight::fundamental(8, 7)).unwrap(),
            BigUint::from(248u32)
        );
        assert_eq!(
            weyl_dim(&rs("G2"), &Weight::from_slice(&[0, 1])).unwrap(),
            BigUint::from(7u32)
        );
        assert_eq!(
            weyl_dim(&rs("F4"), &Weight::fundamental(4, 3)).unwrap(),
            BigUint::from(26u32)
        );
        assert_eq!(
            weyl_dim(&rs("F4"), &Weight::fundamental(4, 0)).unwrap(),
            BigUint::from(52u32)
        );
        assert_eq!(
            weyl_dim(&rs("E7"), &Weight::fundamental(7, 6)).unwrap(),
            BigUint::from(56u32)
        );
        assert!(matches!(
            weyl_dim(&rs("A2"), &Weight::from_slice(&[-1, 0])),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn adjoint_a2_character() {
        let ms: WeightMultiset<u64> = freudenthal(&rs("A2"), &Weight::from_slice(&[1, 1])).unwrap();
        assert_eq!(ms.get(&Weight::zero(2)), 2);
        assert_eq!(ms.distinct(), 7);
        assert_eq!(ms.total(), 8);
    }

    #[test]
    fn g2_short_rep() {
        let ms: WeightMultiset<u64> = freudenthal(&rs("G2"), &Weight::from_slice(&[0, 1])).unwrap();
        assert_eq!(ms.get(&Weight::zero(2)), 1);
        assert_eq!(ms.total(), 7);
    }

    #[test]
    fn f4_levi_of_first_node() {
        // Levi C3 on nodes 2,3,4; the highest weight -α1 restricts to a 14-dimensional module.
        let f4 = rs("F4");
        let mu = f4.simple_root_weight(0).neg();
        let ms: WeightMultiset<u64> = levi_irrep_weights(&f4, &[1, 2, 3], &mu).unwrap();
        assert_eq!(ms.total(), 14);
        assert_eq!(levi_dim(&f4, &[1, 2, 3], &mu), BigUint::from(14u32));
    }
}
