//! Closed forms for the exterior powers of the contact bundle dual in types
//! A, B and D, together with the bracket notations they are written in.
//!
//! Type A brackets `[λ1; λ2,…,λn; λ_{n+1}]` list a `GL_{n+1}` weight split by
//! the two parabolic nodes. Orthogonal brackets `[λ1, λ2; λ3,…,λn]` split
//! `ε`-coordinates at the second node and may contain half-integers.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::rootcore::Weight;

/// `Σ (λ_i − λ_{i+1}) ϖ_i` for a bracket of length `n + 1`.
pub fn a_bracket_to_weight(bracket: &[i64]) -> Result<Weight> {
    if bracket.len() < 2 {
        return Err(Error::InvalidBracket(format!("{bracket:?} is too short")));
    }
    bracket
        .windows(2)
        .map(|w| i32::try_from(w[0] - w[1]).map_err(|_| Error::Overflow("bracket entry".into())))
        .collect::<Result<Coords32>>()
        .map(Weight)
}

type Coords32 = SmallVec<[i32; 8]>;

/// Inverse of [`a_bracket_to_weight`], normalised so the last entry is 0.
pub fn weight_to_a_bracket(w: &Weight) -> Vec<i64> {
    let n = w.rank();
    let mut out = vec![0i64; n + 1];
    for i in (0..n).rev() {
        out[i] = out[i + 1] + i64::from(w.0[i]);
    }
    out
}

/// Which orthogonal series a bracket belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrthKind {
    B,
    D,
}

impl OrthKind {
    /// Dimension `m` of the defining representation of `so_m` of rank `n`.
    pub fn ambient(self, n: usize) -> usize {
        match self {
            OrthKind::B => 2 * n + 1,
            OrthKind::D => 2 * n,
        }
    }
}

/// An orthogonal bracket `[λ1, λ2; λ3, …, λn]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SoBracket(pub Vec<Rational64>);

impl SoBracket {
    pub fn from_ints(v: &[i64]) -> Self {
        SoBracket(v.iter().map(|&x| Rational64::from_integer(x)).collect())
    }
}

impl fmt::Display for SoBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.0.iter().enumerate() {
            match k {
                0 => {}
                2 => write!(f, "; ")?,
                _ => write!(f, ",")?,
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for SoBracket {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidBracket(s.to_string()))?;
        inner
            .split([',', ';'])
            .map(|t| {
                t.trim()
                    .parse::<Rational64>()
                    .map_err(|_| Error::InvalidBracket(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(SoBracket)
    }
}

/// Fundamental-weight coordinates of an orthogonal bracket of length `n`.
pub fn so_bracket_to_weight(kind: OrthKind, b: &SoBracket) -> Result<Weight> {
    let l = &b.0;
    let n = l.len();
    if n < 2 {
        return Err(Error::InvalidBracket(b.to_string()));
    }
    let mut out: Vec<Rational64> = (0..n - 1).map(|i| l[i] - l[i + 1]).collect();
    out.push(match kind {
        OrthKind::B => l[n - 1] * 2,
        OrthKind::D => l[n - 2] + l[n - 1],
    });
    out.into_iter()
        .map(|x| {
            if x.is_integer() {
                x.to_integer()
                    .to_i32()
                    .ok_or_else(|| Error::Overflow("bracket entry".into()))
            } else {
                Err(Error::InvalidBracket(format!(
                    "{b} is not integral on the weight lattice"
                )))
            }
        })
        .collect::<Result<Coords32>>()
        .map(Weight)
}

/// Inverse of [`so_bracket_to_weight`].
pub fn weight_to_so_bracket(kind: OrthKind, w: &Weight) -> SoBracket {
    let n = w.rank();
    let c = |i: usize| Rational64::from_integer(i64::from(w.0[i]));
    let mut l = vec![Rational64::zero(); n];
    match kind {
        OrthKind::B => l[n - 1] = c(n - 1) / 2,
        OrthKind::D => {
            l[n - 2] = (c(n - 2) + c(n - 1)) / 2;
            l[n - 1] = (c(n - 1) - c(n - 2)) / 2;
        }
    }
    let start = match kind {
        OrthKind::B => n - 1,
        OrthKind::D => n - 2,
    };
    for i in (0..start).rev() {
        l[i] = c(i) + l[i + 1];
    }
    SoBracket(l)
}

/// Summand brackets of `∧^p F∨ ⊗ L^twist` on the `A_n` adjoint variety,
/// for `0 ≤ p ≤ 2n − 2`. Each entry is `[−q+t; 1^j, 0^z, (−1)^k; p'−1+t]`
/// shifted by the twist `t`, summed over `p' + q = p`.
pub fn type_a_wedge_summands(n: usize, p: usize, twist: u8) -> Result<Vec<Vec<i64>>> {
    if n < 2 {
        return Err(Error::RankOutOfRange {
            family: 'A',
            rank: n,
        });
    }
    if p > 2 * n - 2 {
        return Err(Error::POutOfRange { p, max: 2 * n - 2 });
    }
    let t = i64::from(twist);
    let n_i = n as i64;
    let mut out = Vec::new();
    for pp in 0..n_i {
        let qq = p as i64 - pp;
        if !(0..n_i).contains(&qq) {
            continue;
        }
        for j in (qq - pp).max(0)..=qq.min(n_i - pp - 1) {
            let zeros = n_i - pp + qq - 2 * j - 1;
            let minus = pp - qq + j;
            let mut b = vec![t - qq];
            b.extend(std::iter::repeat_n(1, j as usize));
            b.extend(std::iter::repeat_n(0, zeros as usize));
            b.extend(std::iter::repeat_n(-1, minus as usize));
            b.push(pp - t);
            out.push(b);
        }
    }
    Ok(out)
}

/// A partition with nonincreasing nonnegative parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionShape(pub Vec<u32>);

impl PartitionShape {
    /// The shape `(2^a, 1^b)`.
    pub fn twos_ones(a: usize, b: usize) -> Self {
        let mut v = vec![2; a];
        v.extend(std::iter::repeat_n(1, b));
        PartitionShape(v)
    }

    /// Counts `(a, b)` of twos and ones, if every part is at most 2.
    fn twos_ones_counts(&self) -> Result<(usize, usize)> {
        if self.0.windows(2).any(|w| w[0] < w[1]) || self.0.iter().any(|&x| x > 2) {
            return Err(Error::UnsupportedShape(format!("{:?}", self.0)));
        }
        let a = self.0.iter().filter(|&&x| x == 2).count();
        let b = self.0.iter().filter(|&&x| x == 1).count();
        Ok((a, b))
    }

    fn padded(mut self, len: usize) -> Self {
        self.0.resize(len.max(self.0.len()), 0);
        self
    }
}

/// Restriction of `S_{(2^i,1^{j−i})}` from `GL_{m−4}` to `O_{m−4}`:
/// the shapes `(2^{i−δ}, 1^{j−i})` for `0 ≤ δ ≤ i` with `i + j − δ ≤ m − 4`.
pub fn gl_to_o_branching(shape: &PartitionShape, m: usize) -> Result<Vec<PartitionShape>> {
    if m < 5 {
        return Err(Error::UnsupportedShape(format!(
            "ambient dimension {m} < 5"
        )));
    }
    let (i, ones) = shape.twos_ones_counts()?;
    let j = i + ones;
    let r = m - 4;
    if j > r {
        return Err(Error::UnsupportedShape(format!(
            "{:?} has more than {r} rows",
            shape.0
        )));
    }
    Ok((0..=i)
        .filter(|d| i + j - d <= r)
        .map(|d| PartitionShape::twos_ones(i - d, ones).padded(r))
        .collect())
}

/// Restriction of an `O_{m−4}` module `(2^a, 1^b)` to `SO_{m−4}`, as
/// `ε`-coordinates of length `⌊(m−4)/2⌋`. Shapes filling exactly half the
/// rows split into two modules differing in the sign of the last entry.
pub fn o_to_so_branching(shape: &PartitionShape, m: usize) -> Result<Vec<Vec<i64>>> {
    if m < 5 {
        return Err(Error::UnsupportedShape(format!(
            "ambient dimension {m} < 5"
        )));
    }
    let (a, b) = shape.twos_ones_counts()?;
    let r = m - 4;
    let rank = r / 2;
    if 2 * a + b > r {
        return Err(Error::UnsupportedShape(format!(
            "{:?} is not an O_{r} shape",
            shape.0
        )));
    }
    let c = a + b;
    let build = |twos: usize, ones: usize| {
        let mut v = vec![2i64; twos];
        v.extend(std::iter::repeat_n(1, ones));
        v.resize(rank, 0);
        v
    };
    Ok(match (2 * c).cmp(&r) {
        std::cmp::Ordering::Less => vec![build(a, b)],
        std::cmp::Ordering::Greater => vec![build(a, r - 2 * a - b)],
        std::cmp::Ordering::Equal => {
            let plus = build(a, b);
            let mut minus = plus.clone();
            if let Some(last) = minus.last_mut() {
                *last = -*last;
            }
            vec![plus, minus]
        }
    })
}

/// Summand brackets of `∧^p F∨ ⊗ L^twist` on the adjoint variety of
/// `B_n` or `D_n`, for `0 ≤ p ≤ 2(m − 4)`.
pub fn orthogonal_wedge_summands(
    n: usize,
    kind: OrthKind,
    p: usize,
    twist: u8,
) -> Result<Vec<SoBracket>> {
    let min_rank = match kind {
        OrthKind::B => 3,
        OrthKind::D => 4,
    };
    if n < min_rank {
        let family = if kind == OrthKind::B { 'B' } else { 'D' };
        return Err(Error::RankOutOfRange { family, rank: n });
    }
    let m = kind.ambient(n);
    let r = m - 4;
    if p > 2 * r {
        return Err(Error::POutOfRange { p, max: 2 * r });
    }
    let t = i64::from(twist);
    let mut out = Vec::new();
    for i in 0..=p / 2 {
        let j = p - i;
        if j > r {
            continue;
        }
        for mu in gl_to_o_branching(&PartitionShape::twos_ones(i, j - i), m)? {
            for nu in o_to_so_branching(&mu, m)? {
                let mut b = vec![t - i as i64, t - j as i64];
                b.extend(nu);
                out.push(SoBracket::from_ints(&b));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_bracket_roundtrip() {
        let w = a_bracket_to_weight(&[-1, 1, 0, 0]).unwrap();
        assert_eq!(w, Weight::from_slice(&[-2, 1, 0]));
        assert_eq!(a_bracket_to_weight(&weight_to_a_bracket(&w)).unwrap(), w);
    }

    #[test]
    fn so_bracket_examples() {
        let fdual: SoBracket = "[0,-1; 1]".parse().unwrap();
        assert_eq!(
            so_bracket_to_weight(OrthKind::B, &fdual).unwrap(),
            Weight::from_slice(&[1, -2, 2])
        );
        let spin: SoBracket = "[1/2,1/2; 1/2,1/2]".parse().unwrap();
        assert_eq!(
            so_bracket_to_weight(OrthKind::D, &spin).unwrap(),
            Weight::from_slice(&[0, 0, 0, 1])
        );
        for kind in [OrthKind::B, OrthKind::D] {
            let w = Weight::from_slice(&[1, -2, 1, 3]);
            assert_eq!(
                so_bracket_to_weight(kind, &weight_to_so_bracket(kind, &w)).unwrap(),
                w
            );
        }
    }

    #[test]
    fn type_a_counts() {
        assert_eq!(type_a_wedge_summands(3, 1, 0).unwrap().len(), 2);
        assert_eq!(
            type_a_wedge_summands(3, 0, 0).unwrap(),
            vec![vec![0, 0, 0, 0]]
        );
        assert_eq!(
            type_a_wedge_summands(3, 0, 1).unwrap(),
            vec![vec![1, 0, 0, -1]]
        );
        assert!(type_a_wedge_summands(3, 5, 0).is_err());
    }

    #[test]
    fn branching_examples() {
        assert_eq!(
            gl_to_o_branching(&PartitionShape::twos_ones(0, 1), 9).unwrap(),
            vec![PartitionShape(vec![1, 0, 0, 0, 0])]
        );
        assert_eq!(
            gl_to_o_branching(&PartitionShape::twos_ones(2, 1), 7).unwrap(),
            vec![PartitionShape(vec![1, 0, 0])]
        );
        assert_eq!(
            o_to_so_branching(&PartitionShape(vec![1, 1]), 8).unwrap(),
            vec![vec![1, 1], vec![1, -1]]
        );
        assert_eq!(
            o_to_so_branching(&PartitionShape(vec![1, 0, 0]), 11).unwrap(),
            vec![vec![1, 0, 0]]
        );
        assert_eq!(
            o_to_so_branching(&PartitionShape(vec![1, 1, 0]), 7).unwrap(),
            vec![vec![1]]
        );
        assert!(o_to_so_branching(&PartitionShape(vec![3]), 9).is_err());
    }
}
