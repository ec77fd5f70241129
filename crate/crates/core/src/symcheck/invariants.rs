use super::algebra::{AlgebraKind, MatrixLieAlgebra};
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Degrees of the trace-power invariants: `2..=n` for `sl_n`, the even
/// numbers up to `n` for `sp_n` and `so_n` with `n` odd. The Pfaffian of
/// `so_{2k}` is not a trace power, so even orthogonal algebras are rejected.
pub fn invariant_degrees(kind: AlgebraKind, size: usize) -> Result<Vec<u32>> {
    let n = size as u32;
    match kind {
        AlgebraKind::Sl => Ok((2..=n).collect()),
        AlgebraKind::Sp => Ok((2..=n).step_by(2).collect()),
        AlgebraKind::So if size % 2 == 1 => Ok((2..n).step_by(2).collect()),
        AlgebraKind::So => Err(Error::UnsupportedAlgebra(format!(
            "so{size} needs a Pfaffian invariant"
        ))),
    }
}

/// Basic invariants `tr(x^d)` in the coordinates of the algebra's basis.
pub fn basic_invariants<F: Field>(alg: &MatrixLieAlgebra<F>) -> Result<Vec<Poly<F>>> {
    let degrees = invariant_degrees(alg.kind, alg.size)?;
    let x = alg.generic_element();
    let n = alg.size;
    let nv = alg.dim();
    let top = degrees.iter().copied().max().unwrap_or(0);
    let mut out = Vec::with_capacity(degrees.len());
    // `power` holds x^{k−1} while computing tr(x^k) = Σ (x^{k−1})_{ab} x_{ba}.
    let mut power = x.clone();
    for k in 2..=top {
        if degrees.contains(&k) {
            let mut tr = Poly::zero(nv);
            for a in 0..n {
                for b in 0..n {
                    tr = &tr + &(&power[a][b] * &x[b][a]);
                }
            }
            out.push(tr);
        }
        if k < top {
            power = mat_mul(&power, &x, nv);
        }
    }
    Ok(out)
}

fn mat_mul<F: Field>(a: &[Vec<Poly<F>>], b: &[Vec<Poly<F>>], nv: usize) -> Vec<Vec<Poly<F>>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Poly::zero(nv), |acc, k| &acc + &(&a[i][k] * &b[k][j])))
                .collect()
        })
        .collect()
}

/// `ν = Gram⁻¹ ∇f`, the vector dual to `df` under the Killing form.
pub fn killing_dual_gradient<F: Field>(
    alg: &MatrixLieAlgebra<F>,
    f: &Poly<F>,
) -> Result<Vec<Poly<F>>> {
    let inv = alg.killing_gram.inverse()?;
    let grad = f.gradient();
    let d = alg.dim();
    Ok((0..d)
        .map(|a| (0..d).fold(Poly::zero(d), |acc, b| &acc + &grad[b].scale(&inv[(a, b)])))
        .collect())
}

/// Whether `[x, ν_f(x)] = 0` identically.
pub fn nu_in_kernel<F: Field>(alg: &MatrixLieAlgebra<F>, f: &Poly<F>) -> Result<bool> {
    let nu = killing_dual_gradient(alg, f)?;
    Ok(alg.ad_matrix().apply(&nu).iter().all(Poly::is_zero))
}

/// `ν_i` lies in the kernel of `ad` for every basic invariant.
pub fn check_nu_in_kernel<F: Field>(alg: &MatrixLieAlgebra<F>) -> Result<bool> {
    for f in basic_invariants(alg)? {
        if !nu_in_kernel(alg, &f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Alg = MatrixLieAlgebra<BigRational>;

    #[test]
    fn degrees_follow_exponents() {
        for (k, n, degs) in [
            (AlgebraKind::Sl, 2, vec![2]),
            (AlgebraKind::Sl, 3, vec![2, 3]),
            (AlgebraKind::Sp, 4, vec![2, 4]),
        ] {
            let alg = Alg::build(k, n).unwrap();
            let inv = basic_invariants(&alg).unwrap();
            let got: Vec<u32> = inv.iter().map(|f| f.degree().unwrap()).collect();
            assert_eq!(got, degs);
            assert!(inv.iter().all(Poly::is_homogeneous));
            let rs = crate::RootSystem::new(alg.lie_type().unwrap());
            let from_roots: Vec<u32> = rs.exponents.iter().map(|e| *e + 1).collect();
            assert_eq!(got, from_roots);
        }
    }

    #[test]
    fn nu_lies_in_kernel() {
        let sl3 = Alg::build(AlgebraKind::Sl, 3).unwrap();
        assert!(check_nu_in_kernel(&sl3).unwrap());
        let x1 = Poly::var(sl3.dim(), 0);
        assert!(!nu_in_kernel(&sl3, &(&x1 * &x1)).unwrap());
        let sl2 = Alg::build(AlgebraKind::Sl, 2).unwrap();
        assert!(check_nu_in_kernel(&sl2).unwrap());
    }
}
