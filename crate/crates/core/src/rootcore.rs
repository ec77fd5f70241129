//! Root systems of the simple Lie algebras in Bourbaki numbering.
//!
//! Weights are integer vectors in fundamental-weight coordinates. Roots carry
//! their simple-root coordinates, their weight coordinates and the coroot
//! coordinates used for pairings. For G2 the long simple root is `α1`, so the
//! highest root is `ϖ1` and the highest short root is `ϖ2`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Coordinate storage sized for rank ≤ 8.
pub type Coords = SmallVec<[i32; 8]>;

/// A weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Weight(pub Coords);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(SmallVec::from_elem(0, rank))
    }

    pub fn from_slice(v: &[i32]) -> Self {
        Weight(SmallVec::from_slice(v))
    }

    /// The fundamental weight `ϖ_i` (0-based index).
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i32) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

/// A Cartan–Killing type such as `E6`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct LieType {
    pub family: char,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: char, rank: usize) -> Result<Self> {
        let family = family.to_ascii_uppercase();
        let ok = match family {
            'A' => rank >= 1,
            'B' => rank >= 2,
            'C' => rank >= 2,
            'D' => rank >= 4,
            'E' => (6..=8).contains(&rank),
            'F' => rank == 4,
            'G' => rank == 2,
            _ => return Err(Error::UnknownType(format!("{family}{rank}"))),
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::RankOutOfRange { family, rank })
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, 'A' | 'D' | 'E')
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .ok_or_else(|| Error::UnknownType(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        LieType::new(family, rank)
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A positive root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coefficients on the simple roots.
    pub simple: Coords,
    /// The same root in fundamental-weight coordinates.
    pub weight: Weight,
    /// Coefficients of the coroot on the simple coroots.
    pub coroot: Coords,
    /// Squared length in the normalisation where the shortest simple root
    /// has squared length 2.
    pub norm: i32,
    pub long: bool,
}

impl Root {
    pub fn height(&self) -> i32 {
        self.simple.iter().sum()
    }

    /// Whether the support lies inside `nodes`.
    pub fn supported_on(&self, nodes: &[usize]) -> bool {
        self.simple
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || nodes.contains(&i))
    }
}

/// The full root datum of a simple type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub lie_type: LieType,
    /// `cartan[i][j] = ⟨α_i∨, α_j⟩`; column `j` is `α_j` in weight coordinates.
    pub cartan: Vec<Vec<i32>>,
    /// Symmetrised form `(α_i, α_j)`.
    pub form: Vec<Vec<i32>>,
    /// Positive roots sorted by height, then by simple coordinates.
    pub positive_roots: Vec<Root>,
    pub rho: Weight,
    pub exponents: Vec<u32>,
    pub weyl_order: BigUint,
    /// Orbit sizes used by the orbit-chain computation of `|W|`.
    pub orbit_chain: Vec<(usize, usize)>,
}

fn dynkin(t: LieType) -> (Vec<i32>, Vec<(usize, usize)>) {
    let n = t.rank;
    let chain = |k: usize| {
        (0..k.saturating_sub(1))
            .map(|i| (i, i + 1))
            .collect::<Vec<_>>()
    };
    match t.family {
        'A' => (vec![2; n], chain(n)),
        'B' => {
            let mut len = vec![4; n];
            len[n - 1] = 2;
            (len, chain(n))
        }
        'C' => {
            let mut len = vec![2; n];
            len[n - 1] = 4;
            (len, chain(n))
        }
        'D' => {
            let mut edges = chain(n - 1);
            edges.push((n - 3, n - 1));
            (vec![2; n], edges)
        }
        'E' => {
            // 1-3-4-5-6-7-8 with 2 attached to 4.
            let mut edges = vec![(0, 2), (1, 3)];
            edges.extend((2..n - 1).map(|i| (i, i + 1)));
            (vec![2; n], edges)
        }
        'F' => (vec![4, 4, 2, 2], chain(4)),
        'G' => (vec![6, 2], chain(2)),
        _ => unreachable!("validated by LieType::new"),
    }
}

fn build_form(t: LieType) -> Vec<Vec<i32>> {
    let (len, edges) = dynkin(t);
    let n = t.rank;
    let mut b = vec![vec![0; n]; n];
    for i in 0..n {
        b[i][i] = len[i];
    }
    for (i, j) in edges {
        let v = -len[i].max(len[j]) / 2;
        b[i][j] = v;
        b[j][i] = v;
    }
    b
}

impl RootSystem {
    pub fn new(lie_type: LieType) -> Self {
        let n = lie_type.rank;
        let form = build_form(lie_type);
        let cartan: Vec<Vec<i32>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * form[i][j] / form[i][i]).collect())
            .collect();
        let mut rs = RootSystem {
            lie_type,
            cartan,
            form,
            positive_roots: Vec::new(),
            rho: Weight(SmallVec::from_elem(1, n)),
            exponents: Vec::new(),
            weyl_order: BigUint::one(),
            orbit_chain: Vec::new(),
        };
        rs.positive_roots = rs.close_roots();
        rs.exponents = rs.compute_exponents();
        let all: Vec<usize> = (0..n).collect();
        let mut chain = Vec::new();
        rs.weyl_order = weyl_order_by_orbits(&rs.cartan, &all, &mut chain);
        rs.orbit_chain = chain;
        rs
    }

    pub fn from_str_type(s: &str) -> Result<Self> {
        Ok(Self::new(s.parse()?))
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    /// `α_j` in fundamental-weight coordinates.
    pub fn simple_root_weight(&self, j: usize) -> Weight {
        Weight((0..self.rank()).map(|i| self.cartan[i][j]).collect())
    }

    fn weight_of(&self, simple: &[i32]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i][j] * simple[j]).sum())
                .collect(),
        )
    }

    fn norm_of(&self, simple: &[i32]) -> i32 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += simple[i] * simple[j] * self.form[i][j];
            }
        }
        s
    }

    fn close_roots(&self) -> Vec<Root> {
        let n = self.rank();
        let mut known: HashSet<Coords> = HashSet::new();
        let mut layer: Vec<Coords> = (0..n)
            .map(|i| {
                let mut c: Coords = SmallVec::from_elem(0, n);
                c[i] = 1;
                c
            })
            .collect();
        let mut all = Vec::new();
        while !layer.is_empty() {
            for c in &layer {
                known.insert(c.clone());
            }
            let mut next: Vec<Coords> = Vec::new();
            for beta in &layer {
                let w = self.weight_of(beta);
                for i in 0..n {
                    if beta
                        .iter()
                        .enumerate()
                        .all(|(k, &c)| c == i32::from(k == i))
                    {
                        continue;
                    }
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if down[i] < 0 || !known.contains(&down) {
                            break;
                        }
                        p += 1;
                    }
                    let q = p - w.0[i];
                    if q > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !next.contains(&up) {
                            next.push(up);
                        }
                    }
                }
            }
            all.append(&mut layer);
            next.sort();
            layer = next;
        }
        let max_norm = all.iter().map(|c| self.norm_of(c)).max().unwrap_or(2);
        let mut roots: Vec<Root> = all
            .into_iter()
            .map(|c| {
                let norm = self.norm_of(&c);
                let coroot = (0..n).map(|i| c[i] * self.form[i][i] / norm).collect();
                Root {
                    weight: self.weight_of(&c),
                    coroot,
                    norm,
                    long: norm == max_norm,
                    simple: c,
                }
            })
            .collect();
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then(a.simple.cmp(&b.simple)));
        roots
    }

    fn compute_exponents(&self) -> Vec<u32> {
        let max_h = self
            .positive_roots
            .iter()
            .map(Root::height)
            .max()
            .unwrap_or(0) as usize;
        let mut per_height = vec![0usize; max_h + 2];
        for r in &self.positive_roots {
            per_height[r.height() as usize] += 1;
        }
        let mut exps = Vec::new();
        for k in 1..=max_h {
            for _ in 0..(per_height[k] - per_height[k + 1]) {
                exps.push(k as u32);
            }
        }
        exps
    }

    /// `⟨λ, α∨⟩`.
    pub fn pair(&self, lambda: &Weight, alpha: &Root) -> i64 {
        lambda
            .0
            .iter()
            .zip(&alpha.coroot)
            .map(|(&l, &c)| i64::from(l) * i64::from(c))
            .sum()
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().expect("nonempty root system")
    }

    pub fn highest_short_root(&self) -> &Root {
        self.positive_roots
            .iter()
            .rfind(|r| !r.long || self.lie_type.is_simply_laced())
            .expect("nonempty root system")
    }

    /// Number of long roots, positive and negative. This is the degree of
    /// the adjoint discriminant.
    pub fn num_long_roots(&self) -> usize {
        2 * self.positive_roots.iter().filter(|r| r.long).count()
    }

    pub fn discriminant_degree(&self) -> usize {
        self.num_long_roots()
    }

    /// Number of long simple roots; equals the rank for simply laced types.
    pub fn long_simple_count(&self) -> usize {
        self.positive_roots[..self.rank()]
            .iter()
            .filter(|r| r.long)
            .count()
    }

    pub fn dim_lie_algebra(&self) -> usize {
        2 * self.positive_roots.len() + self.rank()
    }

    /// Apply the simple reflection `s_i` to a weight.
    pub fn reflect(&self, w: &mut Weight, i: usize) {
        let c = w.0[i];
        if c != 0 {
            for j in 0..self.rank() {
                w.0[j] -= c * self.cartan[j][i];
            }
        }
    }

    /// The Weyl group orbit of a weight.
    pub fn orbit(&self, start: &Weight) -> Vec<Weight> {
        let all: Vec<usize> = (0..self.rank()).collect();
        orbit_in(&self.cartan, &all, start)
    }
}

/// Orbit of `start` under the reflections in `nodes` (0-based) of a Cartan
/// matrix, found by breadth-first search.
pub fn orbit_in(cartan: &[Vec<i32>], nodes: &[usize], start: &Weight) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::new();
    seen.insert(start.clone());
    let mut out = vec![start.clone()];
    let mut frontier = vec![start.clone()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for &i in nodes {
                let c = w.0[i];
                if c == 0 {
                    continue;
                }
                let mut v = w.clone();
                for &j in nodes {
                    v.0[j] -= c * cartan[j][i];
                }
                if seen.insert(v.clone()) {
                    out.push(v.clone());
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    out
}

fn components(cartan: &[Vec<i32>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut left: Vec<usize> = nodes.to_vec();
    let mut comps = Vec::new();
    while let Some(seed) = left.pop() {
        let mut comp = vec![seed];
        let mut k = 0;
        while k < comp.len() {
            let a = comp[k];
            let (adj, rest): (Vec<usize>, Vec<usize>) =
                left.iter().partition(|&&b| cartan[a][b] != 0);
            comp.extend(adj);
            left = rest;
            k += 1;
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps.sort();
    comps
}

/// `|W|` as a product of fundamental-weight orbit sizes along a chain of
/// Levi subsystems. Each step removes an end node of a connected component,
/// choosing the one with the smallest orbit; the orbit sizes are recorded.
pub fn weyl_order_by_orbits(
    cartan: &[Vec<i32>],
    nodes: &[usize],
    chain: &mut Vec<(usize, usize)>,
) -> BigUint {
    let mut total = BigUint::one();
    for comp in components(cartan, nodes) {
        let ends: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&a| {
                comp.iter()
                    .filter(|&&b| b != a && cartan[a][b] != 0)
                    .count()
                    <= 1
            })
            .collect();
        let rank = cartan.len();
        let (node, size) = ends
            .iter()
            .map(|&k| {
                (
                    k,
                    orbit_in(cartan, &comp, &Weight::fundamental(rank, k)).len(),
                )
            })
            .min_by_key(|&(k, s)| (s, k))
            .expect("component has an end node");
        chain.push((node, size));
        let rest: Vec<usize> = comp.iter().copied().filter(|&b| b != node).collect();
        total *= BigUint::from(size) * weyl_order_by_orbits(cartan, &rest, chain);
    }
    total
}

/// Number of positive roots of each height, indexed by height.
pub fn height_partition(rs: &RootSystem) -> Vec<usize> {
    let mut m: HashMap<i32, usize> = HashMap::new();
    for r in &rs.positive_roots {
        *m.entry(r.height()).or_default() += 1;
    }
    let max = m.keys().copied().max().unwrap_or(0);
    (0..=max).map(|h| m.get(&h).copied().unwrap_or(0)).collect()
}
