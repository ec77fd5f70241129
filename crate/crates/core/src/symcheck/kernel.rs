use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::algebra::MatrixLieAlgebra;
use super::invariants::{basic_invariants, invariant_degrees, killing_dual_gradient};
use super::linalg::SparseEchelon;
use super::poly::{monomials, Monomial};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Largest degree `t` accepted for an algebra of dimension `dim`.
pub fn degree_bound(dim: usize) -> usize {
    match dim {
        0..=3 => 8,
        4..=10 => 5,
        11..=15 => 3,
        _ => 2,
    }
}

/// `dim U_d` for a polynomial ring in `n` variables.
pub fn poly_space_dim(n: usize, d: i64) -> BigUint {
    if d < 0 {
        return BigUint::from(0u32);
    }
    let d = d as u64;
    let k = n as u64 - 1;
    let mut acc = BigUint::from(1u32);
    for i in 1..=k {
        acc = acc * BigUint::from(d + i) / BigUint::from(i);
    }
    acc
}

/// Kernel of `g ⊗ U_{t−1} → g ⊗ U_t` in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelRow {
    pub t: usize,
    pub computed: usize,
    pub predicted: usize,
    /// `dim g · dim U_{t−1} − computed`, the Hilbert function of the image.
    pub image: usize,
}

impl KernelRow {
    pub fn matches(&self) -> bool {
        self.computed == self.predicted
    }
}

/// `Σ_i dim U_{t−1−e_i}`, the Hilbert function of `⊕ U(−e_i−1)`.
pub fn predicted_kernel_dim(nvars: usize, exponents: &[u32], t: usize) -> usize {
    let s: BigUint = exponents
        .iter()
        .map(|&e| poly_space_dim(nvars, t as i64 - 1 - i64::from(e)))
        .sum();
    usize::try_from(s).expect("small")
}

/// Kernel dimension of `v(x) ↦ [v(x), x]` on `g ⊗ U_{t−1}` for `0 ≤ t ≤
/// t_max`, computed by exact elimination one torus-weight block at a time.
pub fn graded_kernel_dims<F: Field>(alg: &MatrixLieAlgebra<F>, t_max: usize) -> Result<Vec<usize>> {
    let bound = degree_bound(alg.dim());
    if t_max > bound {
        return Err(Error::DegreeBoundExceeded {
            alg: alg.name(),
            t: t_max,
            max: bound,
        });
    }
    Ok((0..=t_max).map(|t| kernel_dim(alg, t)).collect())
}

/// The kernel dimensions together with the predicted values.
pub fn kernel_report<F: Field>(alg: &MatrixLieAlgebra<F>, t_max: usize) -> Result<Vec<KernelRow>> {
    let exponents: Vec<u32> = invariant_degrees(alg.kind, alg.size)?
        .into_iter()
        .map(|d| d - 1)
        .collect();
    let d = alg.dim();
    let dims = graded_kernel_dims(alg, t_max)?;
    Ok(dims
        .into_iter()
        .enumerate()
        .map(|(t, computed)| {
            let domain = if t == 0 {
                0
            } else {
                d * usize::try_from(poly_space_dim(d, t as i64 - 1)).expect("small")
            };
            KernelRow {
                t,
                computed,
                predicted: predicted_kernel_dim(d, &exponents, t),
                image: domain - computed,
            }
        })
        .collect())
}

fn kernel_dim<F: Field>(alg: &MatrixLieAlgebra<F>, t: usize) -> usize {
    if t == 0 {
        return 0;
    }
    let d = alg.dim();
    let monos = monomials(d, t - 1);
    // Weight of x^a · b_j is wt(b_j) − Σ a_i wt(b_i); the map preserves it.
    let mut blocks: HashMap<Vec<i32>, Vec<(usize, usize)>> = HashMap::new();
    for (mi, m) in monos.iter().enumerate() {
        let mut w = vec![0i32; alg.weights[0].len()];
        for (i, &e) in m.iter().enumerate() {
            for (wk, &bk) in w.iter_mut().zip(&alg.weights[i]) {
                *wk -= i32::from(e) * bk;
            }
        }
        for j in 0..d {
            let key: Vec<i32> = w.iter().zip(&alg.weights[j]).map(|(a, b)| a + b).collect();
            blocks.entry(key).or_default().push((j, mi));
        }
    }
    let mut blocks: Vec<Vec<(usize, usize)>> = blocks.into_values().collect();
    blocks.sort();
    blocks
        .par_iter()
        .map(|block| {
            let mut ech: SparseEchelon<(usize, Monomial), F> = SparseEchelon::new();
            for &(j, mi) in block {
                let mut image: BTreeMap<(usize, Monomial), F> = BTreeMap::new();
                for i in 0..d {
                    for (k, c) in alg.bracket_coords(i, j) {
                        let mut m = monos[mi].clone();
                        m[i] += 1;
                        let e = image.entry((*k, m)).or_insert_with(F::zero);
                        *e = e.clone() + c.clone();
                    }
                }
                ech.insert(image);
            }
            block.len() - ech.rank()
        })
        .sum()
}

/// Dimensions in one degree of the span of `U · ν_i` inside the kernel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessRow {
    pub t: usize,
    /// Rank of `{x^a ν_i : |a| = t − 1 − e_i}`.
    pub nu_span: usize,
    pub kernel: usize,
    pub predicted: usize,
}

impl FreenessRow {
    /// The products are independent and fill the kernel.
    pub fn matches(&self) -> bool {
        self.nu_span == self.predicted && self.kernel == self.predicted
    }
}

/// Check that `ker ad` is free on `ν_1, …, ν_n` through degree `t_max`:
/// the products `x^a ν_i` are linearly independent and span the kernel.
pub fn nu_freeness<F: Field>(alg: &MatrixLieAlgebra<F>, t_max: usize) -> Result<Vec<FreenessRow>> {
    let kernel = kernel_report(alg, t_max)?;
    let nus: Vec<Vec<_>> = basic_invariants(alg)?
        .iter()
        .map(|f| killing_dual_gradient(alg, f))
        .collect::<Result<_>>()?;
    let exponents: Vec<usize> = invariant_degrees(alg.kind, alg.size)?
        .into_iter()
        .map(|d| d as usize - 1)
        .collect();
    let d = alg.dim();
    Ok(kernel
        .into_iter()
        .map(|row| {
            let t = row.t;
            let mut ech: SparseEchelon<(usize, Monomial), F> = SparseEchelon::new();
            for (nu, &e) in nus.iter().zip(&exponents) {
                if t < e + 1 {
                    continue;
                }
                for a in monomials(d, t - 1 - e) {
                    let mut v: BTreeMap<(usize, Monomial), F> = BTreeMap::new();
                    for (k, p) in nu.iter().enumerate() {
                        for (m, c) in p.terms() {
                            let prod: Monomial = m.iter().zip(&a).map(|(x, y)| x + y).collect();
                            let e = v.entry((k, prod)).or_insert_with(F::zero);
                            *e = e.clone() + c.clone();
                        }
                    }
                    ech.insert(v);
                }
            }
            FreenessRow {
                t,
                nu_span: ech.rank(),
                kernel: row.computed,
                predicted: row.predicted,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::super::algebra::AlgebraKind;
    use super::*;
    use num_rational::BigRational;

    type Alg = MatrixLieAlgebra<BigRational>;

    #[test]
    fn sl2_kernel() {
        let alg = Alg::build(AlgebraKind::Sl, 2).unwrap();
        assert_eq!(graded_kernel_dims(&alg, 4).unwrap(), vec![0, 0, 1, 3, 6]);
        assert!(kernel_report(&alg, 4)
            .unwrap()
            .iter()
            .all(KernelRow::matches));
    }

    #[test]
    fn sl3_kernel() {
        let alg = Alg::build(AlgebraKind::Sl, 3).unwrap();
        let dims = graded_kernel_dims(&alg, 3).unwrap();
        assert_eq!(&dims[2..], &[1, 9]);
        assert!(matches!(
            graded_kernel_dims(&alg, 9),
            Err(Error::DegreeBoundExceeded { .. })
        ));
    }

    #[test]
    fn sl3_nu_basis() {
        let alg = Alg::build(AlgebraKind::Sl, 3).unwrap();
        assert!(nu_freeness(&alg, 4)
            .unwrap()
            .iter()
            .all(FreenessRow::matches));
    }

    #[test]
    fn poly_dims() {
        assert_eq!(poly_space_dim(3, 2), BigUint::from(6u32));
        assert_eq!(poly_space_dim(8, 0), BigUint::from(1u32));
        assert_eq!(poly_space_dim(8, -1), BigUint::from(0u32));
    }
}
