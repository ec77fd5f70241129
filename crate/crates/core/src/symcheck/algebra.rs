use std::fmt;
use std::str::FromStr;

use super::linalg::Matrix;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::rootcore::LieType;
use crate::scalar::Field;

/// Classical matrix families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Sl,
    Sp,
    So,
}

impl AlgebraKind {
    /// Largest supported matrix size.
    pub fn max_size(self) -> usize {
        match self {
            Self::Sl => 5,
            Self::Sp => 6,
            Self::So => 7,
        }
    }

    fn min_size(self) -> usize {
        match self {
            Self::Sl | Self::Sp => 2,
            Self::So => 3,
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Sl => "sl",
            Self::Sp => "sp",
            Self::So => "so",
        })
    }
}

/// Parse `sl3`, `sl_3`, `sp4`, `so7`.
pub fn parse_algebra(s: &str) -> Result<(AlgebraKind, usize)> {
    let t = s.trim().to_ascii_lowercase();
    let (kind, rest) = if let Some(r) = t.strip_prefix("sl") {
        (AlgebraKind::Sl, r)
    } else if let Some(r) = t.strip_prefix("sp") {
        (AlgebraKind::Sp, r)
    } else if let Some(r) = t.strip_prefix("so") {
        (AlgebraKind::So, r)
    } else {
        return Err(Error::UnsupportedAlgebra(s.to_string()));
    };
    let size = usize::from_str(rest.trim_start_matches('_'))
        .map_err(|_| Error::UnsupportedAlgebra(s.to_string()))?;
    Ok((kind, size))
}

/// The matrix model of a classical type: `A_n ↦ sl_{n+1}`, `B_n ↦ so_{2n+1}`,
/// `C_n ↦ sp_{2n}`, `D_n ↦ so_{2n}`.
pub fn algebra_for_type(t: LieType) -> Result<(AlgebraKind, usize)> {
    match t.family {
        'A' => Ok((AlgebraKind::Sl, t.rank + 1)),
        'B' => Ok((AlgebraKind::So, 2 * t.rank + 1)),
        'C' => Ok((AlgebraKind::Sp, 2 * t.rank)),
        'D' => Ok((AlgebraKind::So, 2 * t.rank)),
        _ => Err(Error::UnsupportedAlgebra(format!(
            "no matrix model for {t}"
        ))),
    }
}

/// A classical Lie algebra of `n×n` matrices with a torus-weight basis,
/// its structure constants and its Killing form.
#[derive(Clone, Debug)]
pub struct MatrixLieAlgebra<F> {
    pub kind: AlgebraKind,
    /// Matrix size.
    pub size: usize,
    pub basis: Vec<Matrix<F>>,
    /// Torus weight of each basis vector.
    pub weights: Vec<Vec<i32>>,
    /// Gram matrix of the Killing form in the basis.
    pub killing_gram: Matrix<F>,
    /// Entry `(r, c)` whose value is the `k`-th coordinate.
    coord_entries: Vec<(usize, usize)>,
    /// `structure[i][j]` lists the nonzero coordinates of `[b_i, b_j]`.
    structure: Vec<Vec<Vec<(usize, F)>>>,
}

/// `ad_x` as a matrix of linear forms: column `j` holds the coordinates of
/// `[x, b_j]`.
#[derive(Clone, Debug)]
pub struct AdMatrix<F> {
    pub entries: Vec<Vec<Poly<F>>>,
}

impl<F: Field> MatrixLieAlgebra<F> {
    /// Build `sl_n`, `sp_n` (`n` even) or `so_n`, the latter two preserving
    /// the forms `[[0, I], [−I, 0]]` and the antidiagonal one.
    pub fn build(kind: AlgebraKind, size: usize) -> Result<Self> {
        let out_of_range = || Error::SizeOutOfRange {
            kind: kind.to_string(),
            size,
        };
        if size < kind.min_size()
            || size > kind.max_size()
            || (kind == AlgebraKind::Sp && size % 2 == 1)
        {
            return Err(out_of_range());
        }
        let n = size;
        let constraints = match kind {
            AlgebraKind::Sl => {
                Matrix::from_fn(
                    1,
                    n * n,
                    |_, v| if v / n == v % n { F::one() } else { F::zero() },
                )
            }
            AlgebraKind::Sp | AlgebraKind::So => {
                let form = Self::form(kind, n);
                // (Xᵀ S + S X)[r][c] for every (r, c); unknown `a*n+b` is X[a][b].
                let mut m: Matrix<F> = Matrix::zero(n * n, n * n);
                for r in 0..n {
                    for c in 0..n {
                        let row = r * n + c;
                        for a in 0..n {
                            let s = form[(a, c)].clone();
                            m[(row, a * n + r)] = m[(row, a * n + r)].clone() + s;
                            let s = form[(r, a)].clone();
                            m[(row, a * n + c)] = m[(row, a * n + c)].clone() + s;
                        }
                    }
                }
                m
            }
        };
        let (null, free) = constraints.nullspace();
        let basis: Vec<Matrix<F>> = null
            .iter()
            .map(|v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
            .collect();
        let coord_entries: Vec<(usize, usize)> = free.iter().map(|&f| (f / n, f % n)).collect();

        let mut weights = Vec::with_capacity(basis.len());
        for b in &basis {
            let mut w: Option<Vec<i32>> = None;
            for i in 0..n {
                for j in 0..n {
                    if b[(i, j)].is_zero() {
                        continue;
                    }
                    let here = Self::project(kind, n, i, j);
                    match &w {
                        None => w = Some(here),
                        Some(prev) if *prev != here => {
                            return Err(Error::ConventionError(format!(
                                "{kind}{n} basis vector is not a weight vector"
                            )));
                        }
                        _ => {}
                    }
                }
            }
            weights.push(w.expect("nonzero basis vector"));
        }

        let mut alg = Self {
            kind,
            size,
            basis,
            weights,
            killing_gram: Matrix::zero(0, 0),
            coord_entries,
            structure: Vec::new(),
        };
        let d = alg.dim();
        alg.structure = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| alg.sparse_coords(&alg.basis[i].commutator(&alg.basis[j])))
                    .collect()
            })
            .collect();
        alg.killing_gram = Matrix::from_fn(d, d, |i, j| alg.killing(i, j));
        Ok(alg)
    }

    fn form(kind: AlgebraKind, n: usize) -> Matrix<F> {
        match kind {
            AlgebraKind::Sp => {
                let k = n / 2;
                let mut s = Matrix::zero(n, n);
                for i in 0..k {
                    s[(i, k + i)] = F::one();
                    s[(k + i, i)] = -F::one();
                }
                s
            }
            _ => Matrix::from_fn(
                n,
                n,
                |i, j| if i + j == n - 1 { F::one() } else { F::zero() },
            ),
        }
    }

    /// Torus weight of `E_{ij}` in coordinates of the diagonal torus.
    fn project(kind: AlgebraKind, n: usize, i: usize, j: usize) -> Vec<i32> {
        let mut raw = vec![0i32; n];
        raw[i] += 1;
        raw[j] -= 1;
        match kind {
            AlgebraKind::Sl => raw,
            AlgebraKind::Sp => (0..n / 2).map(|a| raw[a] - raw[n / 2 + a]).collect(),
            AlgebraKind::So => (0..n / 2).map(|a| raw[a] - raw[n - 1 - a]).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.kind, self.size)
    }

    /// Root-system type, when the algebra is simple and listed in rootcore.
    pub fn lie_type(&self) -> Option<LieType> {
        let n = self.size;
        let (family, rank) = match self.kind {
            AlgebraKind::Sl => ('A', n - 1),
            AlgebraKind::Sp if n == 2 => ('A', 1),
            AlgebraKind::Sp => ('C', n / 2),
            AlgebraKind::So if n == 3 => ('A', 1),
            AlgebraKind::So if n % 2 == 1 => ('B', n / 2),
            AlgebraKind::So if n >= 6 => ('D', n / 2),
            AlgebraKind::So => return None,
        };
        LieType::new(family, rank).ok()
    }

    /// Coordinates of a matrix lying in the algebra.
    pub fn coords(&self, x: &Matrix<F>) -> Vec<F> {
        self.coord_entries
            .iter()
            .map(|&(r, c)| x[(r, c)].clone())
            .collect()
    }

    fn sparse_coords(&self, x: &Matrix<F>) -> Vec<(usize, F)> {
        self.coords(x)
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// `Σ c_k b_k`.
    pub fn element(&self, coords: &[F]) -> Matrix<F> {
        let mut m = Matrix::zero(self.size, self.size);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = m.add(&Matrix::from_fn(self.size, self.size, |i, j| {
                    c.clone() * b[(i, j)].clone()
                }));
            }
        }
        m
    }

    /// Nonzero coordinates of `[b_i, b_j]`.
    pub fn bracket_coords(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.structure[i][j]
    }

    /// `tr(ad b_i ad b_j)`, with `(ad b_i)_{kl} = c_{il}^k`.
    fn killing(&self, i: usize, j: usize) -> F {
        let mut acc = F::zero();
        for l in 0..self.dim() {
            for (k, c) in &self.structure[i][l] {
                if let Some((_, d)) = self.structure[j][*k].iter().find(|(m, _)| *m == l) {
                    acc = acc + c.clone() * d.clone();
                }
            }
        }
        acc
    }

    /// Every bracket of basis vectors lies in the span of the basis.
    pub fn is_closed(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            (0..d).all(|j| {
                let br = self.basis[i].commutator(&self.basis[j]);
                let coords: Vec<F> = (0..d)
                    .map(|k| {
                        self.structure[i][j]
                            .iter()
                            .find(|(m, _)| *m == k)
                            .map_or_else(F::zero, |(_, c)| c.clone())
                    })
                    .collect();
                self.element(&coords) == br
            })
        })
    }

    /// The Jacobi identity on structure constants.
    pub fn satisfies_jacobi(&self) -> bool {
        let d = self.dim();
        let bracket_vec = |v: &[(usize, F)], j: usize| -> Vec<F> {
            let mut out = vec![F::zero(); d];
            for (k, c) in v {
                for (m, e) in &self.structure[*k][j] {
                    out[*m] = out[*m].clone() + c.clone() * e.clone();
                }
            }
            out
        };
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let x = bracket_vec(&self.structure[a][b], c);
                    let y = bracket_vec(&self.structure[b][c], a);
                    let z = bracket_vec(&self.structure[c][a], b);
                    if !(0..d).all(|m| (x[m].clone() + y[m].clone() + z[m].clone()).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The Killing form is symmetric and nondegenerate.
    pub fn killing_is_nondegenerate(&self) -> bool {
        self.killing_gram.is_symmetric() && self.killing_gram.rank() == self.dim()
    }

    pub fn ad_matrix(&self) -> AdMatrix<F> {
        let d = self.dim();
        let mut entries = vec![vec![Poly::zero(d); d]; d];
        for (i, row) in self.structure.iter().enumerate() {
            for (j, coeffs) in row.iter().enumerate() {
                for (k, c) in coeffs {
                    let mut m = vec![0; d];
                    m[i] = 1;
                    entries[*k][j].add_term(m, c.clone());
                }
            }
        }
        AdMatrix { entries }
    }

    /// The generic element `Σ x_i b_i` as a matrix of linear forms.
    pub fn generic_element(&self) -> Vec<Vec<Poly<F>>> {
        let d = self.dim();
        let n = self.size;
        let mut x = vec![vec![Poly::zero(d); n]; n];
        for (k, b) in self.basis.iter().enumerate() {
            for (r, row) in x.iter_mut().enumerate() {
                for (c, entry) in row.iter_mut().enumerate() {
                    if !b[(r, c)].is_zero() {
                        let mut m = vec![0; d];
                        m[k] = 1;
                        entry.add_term(m, b[(r, c)].clone());
                    }
                }
            }
        }
        x
    }
}

impl<F: Field> AdMatrix<F> {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// `M(x)·v` for a vector of polynomials.
    pub fn apply(&self, v: &[Poly<F>]) -> Vec<Poly<F>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(Poly::zero(self.dim()), |acc, (m, p)| &acc + &(m * p))
            })
            .collect()
    }

    /// Substitute a point.
    pub fn evaluate(&self, point: &[F]) -> Matrix<F> {
        let d = self.dim();
        let images: Vec<Poly<F>> = point.iter().map(|c| Poly::constant(0, c.clone())).collect();
        Matrix::from_fn(d, d, |i, j| {
            self.entries[i][j]
                .compose(&images)
                .as_constant()
                .expect("constant")
        })
    }

    /// `Gram·M(x) + M(x)ᵀ·Gram = 0` as a polynomial identity.
    pub fn is_gram_skew(&self, gram: &Matrix<F>) -> bool {
        let d = self.dim();
        (0..d).all(|a| {
            (0..d).all(|b| {
                let mut acc = Poly::zero(d);
                for c in 0..d {
                    acc = &acc + &self.entries[c][b].scale(&gram[(a, c)]);
                    acc = &acc + &self.entries[c][a].scale(&gram[(c, b)]);
                }
                acc.is_zero()
            })
        })
    }
}
