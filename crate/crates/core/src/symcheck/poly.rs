use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Field;

/// Exponent vector of a monomial.
pub type Monomial = Vec<u16>;

/// A sparse polynomial in a fixed number of variables.
///
/// Terms are kept in lexicographic order of exponent vectors with the first
/// variable most significant; the leading term is the last one.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<F> {
    nvars: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Poly<F> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(m, F::one());
        p
    }

    /// `Σ c_i x_i`.
    pub fn linear(coeffs: &[F]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut m = vec![0; n];
            m[i] = 1;
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        debug_assert_eq!(m.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| u32::from(e)).sum())
            .max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self
            .terms
            .keys()
            .map(|m| m.iter().map(|&e| u32::from(e)).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// The constant term, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().expect("one term");
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut p = Self::zero(self.nvars);
        if !c.is_zero() {
            for (m, v) in &self.terms {
                p.terms.insert(m.clone(), v.clone() * c.clone());
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `∂/∂x_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut p = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m[i] > 0 {
                let mut d = m.clone();
                d[i] -= 1;
                p.add_term(d, c.clone() * F::from_int(i64::from(m[i])));
            }
        }
        p
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.nvars).map(|i| self.derivative(i)).collect()
    }

    /// Substitute `x_i ↦ images[i]`; all images share a variable count.
    pub fn compose(&self, images: &[Poly<F>]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, Poly::nvars);
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(u32::from(e));
                }
            }
            out = &out + &t;
        }
        out
    }

    fn leading(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    /// Division with remainder by a single polynomial in lex order. The
    /// remainder is zero exactly when `divisor` divides `self`.
    pub fn div_rem(&self, divisor: &Poly<F>) -> (Self, Self) {
        let (lm, lc) = divisor
            .leading()
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("nonzero divisor");
        let mut q = Self::zero(self.nvars);
        let mut r = Self::zero(self.nvars);
        let mut g = self.clone();
        while let Some((m, c)) = g.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if m.iter().zip(&lm).all(|(a, b)| a >= b) {
                let qm: Monomial = m.iter().zip(&lm).map(|(a, b)| a - b).collect();
                let qc = c / lc.clone();
                let mut t = Self::zero(self.nvars);
                t.add_term(qm, qc);
                g = &g - &(&t * divisor);
                q = &q + &t;
            } else {
                g.terms.remove(&m);
                r.add_term(m, c);
            }
        }
        (q, r)
    }
}

impl<'a, F: Field> Add for &'a Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &'a Poly<F>) -> Poly<F> {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

impl<'a, F: Field> Sub for &'a Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &'a Poly<F>) -> Poly<F> {
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), -c.clone());
        }
        p
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a, F: Field> Mul for &'a Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &'a Poly<F>) -> Poly<F> {
        let mut p = Poly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let m: Monomial = a.iter().zip(b).map(|(i, j)| i + j).collect();
                p.add_term(m, x.clone() * y.clone());
            }
        }
        p
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        self.scale(&-F::one())
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{e}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

/// Every monomial of total degree `d` in `n` variables.
pub fn monomials(n: usize, d: usize) -> Vec<Monomial> {
    fn rec(n: usize, d: usize, prefix: &mut Monomial, out: &mut Vec<Monomial>) {
        if prefix.len() == n - 1 {
            prefix.push(d as u16);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as u16);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = Poly<BigRational>;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn arithmetic_and_division() {
        let x = Q::var(2, 0);
        let y = Q::var(2, 1);
        let f = &(&x * &x) - &(&y * &y);
        let (quo, rem) = f.div_rem(&(&x - &y));
        assert!(rem.is_zero());
        assert_eq!(quo, &x + &y);
        let (_, rem) = (&x + &Q::one(2)).div_rem(&y);
        assert!(!rem.is_zero());
        assert_eq!(f.derivative(0), x.scale(&q(2)));
        assert!(f.is_homogeneous());
        assert_eq!(f.degree(), Some(2));
    }

    #[test]
    fn compose_and_monomials() {
        let x = Q::var(1, 0);
        let f = &x * &x;
        let img = Q::linear(&[q(1), q(1)]);
        let g = f.compose(&[img]);
        assert_eq!(g.num_terms(), 3);
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(8, 4).len(), 330);
    }
}
