use serde::Serialize;

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::rootcore::{LieType, RootSystem};
use crate::scalar::Field;

/// Outcome of factoring the Jacobian determinant of the restricted basic
/// invariants over the positive roots.
#[derive(Clone, Debug, Serialize)]
pub struct SaitoReport {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub det_degree: Option<u32>,
    pub positive_roots: usize,
    /// The scalar left after dividing by every root form, if the division
    /// was exact and left a constant.
    pub quotient: Option<String>,
}

impl SaitoReport {
    pub fn passed(&self) -> bool {
        self.quotient.as_deref().is_some_and(|q| q != "0")
            && self.det_degree == Some(self.positive_roots as u32)
    }
}

/// Cartan coordinates: for `A_n` the variables are `y_1..y_n` with
/// `ε_{n+1} = −Σ y_i` (diagonal traceless matrices); for `B_n`, `C_n` they
/// are the standard `x_1..x_n`. Returns the image of each `ε_i`.
fn epsilon_forms<F: Field>(t: LieType) -> Vec<Poly<F>> {
    let n = t.rank;
    let mut eps: Vec<Poly<F>> = (0..n).map(|i| Poly::var(n, i)).collect();
    if t.family == 'A' {
        let last = eps.iter().fold(Poly::zero(n), |acc, e| &acc - e);
        eps.push(last);
    }
    eps
}

/// Power sums on the Cartan: degrees `2..=n+1` in type A and `2, 4, …, 2n`
/// in types B and C. Up to scalars these are the restrictions of the trace
/// invariants of the matrix models.
fn restricted_invariants<F: Field>(t: LieType, eps: &[Poly<F>]) -> Vec<Poly<F>> {
    let degrees: Vec<u32> = match t.family {
        'A' => (2..=t.rank as u32 + 1).collect(),
        _ => (1..=t.rank as u32).map(|k| 2 * k).collect(),
    };
    degrees
        .into_iter()
        .map(|d| {
            eps.iter()
                .fold(Poly::zero(t.rank), |acc, e| &acc + &e.pow(d))
        })
        .collect()
}

/// Linear form of a root given in simple-root coordinates, through the
/// standard ε-embedding of the simple roots.
fn root_form<F: Field>(t: LieType, eps: &[Poly<F>], simple: &[i32]) -> Poly<F> {
    let n = t.rank;
    let mut out = Poly::zero(n);
    for (i, &c) in simple.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let alpha = if i + 1 < n || t.family == 'A' {
            &eps[i] - &eps[i + 1]
        } else if t.family == 'B' {
            eps[i].clone()
        } else {
            eps[i].scale(&F::from_int(2))
        };
        out = &out + &alpha.scale(&F::from_int(i64::from(c)));
    }
    out
}

/// Laplace expansion; fine for the small sizes used here.
pub fn poly_det<F: Field>(m: &[Vec<Poly<F>>], nvars: usize) -> Poly<F> {
    match m.len() {
        0 => Poly::one(nvars),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Poly::zero(nvars);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly<F>>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &poly_det(&minor, nvars);
                acc = if j % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}

/// Divide `det ∂(f_i)/∂(x_j)` by `Π_{α>0} δ_α` and check that the division is
/// exact with a nonzero scalar quotient.
pub fn saito_determinant_check<F: Field>(t: LieType) -> Result<SaitoReport> {
    if !matches!(t.family, 'A' | 'B' | 'C') {
        return Err(Error::UnsupportedAlgebra(format!(
            "Saito check covers types A, B, C; got {t}"
        )));
    }
    if t.rank > 3 {
        return Err(Error::RankOutOfRange {
            family: t.family,
            rank: t.rank,
        });
    }
    let rs = RootSystem::new(t);
    let n = t.rank;
    let eps = epsilon_forms::<F>(t);
    let invariants = restricted_invariants(t, &eps);
    let jac: Vec<Vec<Poly<F>>> = invariants.iter().map(Poly::gradient).collect();
    let det = poly_det(&jac, n);
    let mut rest = det.clone();
    let mut exact = true;
    for root in &rs.positive_roots {
        let delta = root_form(t, &eps, &root.simple);
        let (q, r) = rest.div_rem(&delta);
        if !r.is_zero() {
            exact = false;
            break;
        }
        rest = q;
    }
    let quotient = if exact {
        rest.as_constant().map(|c| c.to_string())
    } else {
        None
    };
    Ok(SaitoReport {
        lie_type: t.to_string(),
        det_degree: det.degree(),
        positive_roots: rs.positive_roots.len(),
        quotient,
    })
}
