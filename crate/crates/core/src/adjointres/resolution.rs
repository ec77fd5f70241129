//! Equivariant resolutions on the dual space `P(g∨)`.
//!
//! Terms are written `V ⊗ O(twist)` in homological position `u ≤ 0`. The
//! Jacobian resolution comes from the Weyman complex of `L` along the
//! projective bundle of the adjoint variety. Each term `H^l(Ω̂^p ⊗ L) ⊗ O(−p)`
//! sits at `u = l − p`, and `Ω̂^p ⊗ L` has the four graded pieces
//! `∧^{p−2}F∨`, `∧^{p−1}F∨`, `∧^{p−1}F∨ ⊗ L` and `∧^p F∨ ⊗ L`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::table::CohomTable;
use super::AdjointVariety;
use crate::error::{Error, Result};
use crate::repcalc::weyl_dim;
use crate::rootcore::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sheaf {
    Jacobian,
    Structure,
}

impl std::str::FromStr for Sheaf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jacobian" => Ok(Sheaf::Jacobian),
            "structure" => Ok(Sheaf::Structure),
            _ => Err(Error::Usage(format!(
                "unknown sheaf `{s}` (jacobian|structure)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BettiEntry {
    pub twist: i64,
    pub rep: Weight,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTerm {
    pub u: i32,
    pub entries: Vec<BettiEntry>,
}

/// A resolution as a table of equivariant terms, in canonical order:
/// positions from `0` downwards, entries by decreasing twist then weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    #[serde(rename = "type")]
    pub lie_type: String,
    pub sheaf: Sheaf,
    pub terms: Vec<BettiTerm>,
}

type Cells = BTreeMap<(i32, i64, Weight), u64>;

impl BettiTable {
    fn from_cells(lie_type: String, sheaf: Sheaf, cells: &Cells) -> Self {
        let mut by_u: BTreeMap<i32, Vec<BettiEntry>> = BTreeMap::new();
        for ((u, twist, rep), &mult) in cells {
            if mult > 0 {
                by_u.entry(*u).or_default().push(BettiEntry {
                    twist: *twist,
                    rep: rep.clone(),
                    mult,
                });
            }
        }
        let terms = by_u
            .into_iter()
            .rev()
            .map(|(u, mut entries)| {
                entries.sort_by(|a, b| b.twist.cmp(&a.twist).then(a.rep.cmp(&b.rep)));
                BettiTerm { u, entries }
            })
            .collect();
        BettiTable {
            lie_type,
            sheaf,
            terms,
        }
    }

    fn cells(&self) -> Cells {
        let mut c = Cells::new();
        for t in &self.terms {
            for e in &t.entries {
                *c.entry((t.u, e.twist, e.rep.clone())).or_default() += e.mult;
            }
        }
        c
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("serialisable");
        v["schema"] = "1".into();
        v
    }

    /// Trivial-module twists at position `u`, with multiplicity.
    pub fn trivial_twists(&self, u: i32) -> Vec<i64> {
        let mut out = Vec::new();
        for t in self.terms.iter().filter(|t| t.u == u) {
            for e in t.entries.iter().filter(|e| e.rep.is_zero()) {
                out.extend(std::iter::repeat_n(e.twist, e.mult as usize));
            }
        }
        out
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {:?} resolution", self.lie_type, self.sheaf)?;
        for t in &self.terms {
            let parts: Vec<String> = t
                .entries
                .iter()
                .map(|e| {
                    let sheaf = format!("O({})", e.twist);
                    let body = if e.rep.is_zero() {
                        sheaf
                    } else {
                        format!("V{}⊗{}", e.rep, sheaf)
                    };
                    if e.mult == 1 {
                        body
                    } else {
                        format!("{}x{}", e.mult, body)
                    }
                })
                .collect();
            writeln!(f, "  u={:>2}: {}", t.u, parts.join(" ⊕ "))?;
        }
        Ok(())
    }
}

/// Assembled Jacobian resolution with what was learned along the way.
#[derive(Clone, Debug, Serialize)]
pub struct JacobianAssembly {
    pub table: BettiTable,
    /// `(p̂, q̂)` locating `ĝ` in the twist-1 table.
    pub qm_location: Option<(usize, u32)>,
    /// Twist of `ĝ` at position −1, read off as `p̂`.
    pub computed_j: Option<usize>,
    /// Trivial multiplicities cancelled by the hyperplane-class maps, keyed by `p`.
    pub cancelled: BTreeMap<usize, u64>,
    /// The map `g ⊗ O(−1) → g ⊗ O` between the adjoint blocks is the Lie bracket.
    pub bracket_block: bool,
}

/// Assemble the three-term Jacobian resolution from a cohomology table.
///
/// The connecting map of `0 → ∧^{i−1}F∨ → Ω^i ⊗ L → ∧^i F∨ ⊗ L → 0` sends
/// `H^q(∧^i F∨ ⊗ L)` to `H^{q+1}(∧^{i−1}F∨)`. On trivial modules it is the
/// hyperplane class and has maximal rank, so the smaller tower cancels into
/// the larger one in both places where the pair enters `Ω̂`. A twist-1 class
/// that is left over signals an inconsistent table.
pub fn assemble_jacobian_resolution(
    var: &AdjointVariety,
    table: &CohomTable,
) -> Result<JacobianAssembly> {
    let zero = Weight::zero(var.rs.rank());
    let trivial = |p: usize, t: u8, q: u32| -> u64 {
        table
            .get(&(p, t))
            .and_then(|r| {
                r.group(q)
                    .into_iter()
                    .find(|e| e.weight == zero)
                    .map(|e| e.mult)
            })
            .unwrap_or(0)
    };
    // Remaining multiplicity of each (p, t, q, weight) after cancellation.
    let mut left: BTreeMap<(usize, u8, u32, Weight), u64> = BTreeMap::new();
    for (&(p, t), res) in table {
        for (q, e) in res.iter() {
            left.insert((p, t, q, e.weight.clone()), e.mult);
        }
    }
    let mut cancelled = BTreeMap::new();
    for (&(p, t), res) in table {
        if t != 1 || p == 0 {
            continue;
        }
        for q in res.degrees() {
            let x = trivial(p, 1, q);
            if x == 0 {
                continue;
            }
            let y = trivial(p - 1, 0, q + 1);
            if x > y {
                return Err(Error::CancellationMismatch(format!(
                    "H^{q}(∧^{p}F∨⊗L) has {x} trivial copies but H^{}(∧^{}F∨) only {y}",
                    q + 1,
                    p - 1
                )));
            }
            *left.get_mut(&(p, 1, q, zero.clone())).expect("present") -= x;
            *left
                .get_mut(&(p - 1, 0, q + 1, zero.clone()))
                .expect("present") -= x;
            *cancelled.entry(p).or_insert(0) += x;
        }
    }
    let mut cells = Cells::new();
    for ((p, t, q, w), m) in left {
        if m == 0 {
            continue;
        }
        let (p, q) = (p as i64, i64::from(q));
        // Positions in Ω̂^k ⊗ L: k = p, p+1 for twist 1 and k = p+1, p+2 for twist 0.
        let ks = if t == 1 { [p, p + 1] } else { [p + 1, p + 2] };
        for k in ks {
            let u = i32::try_from(q - k).expect("small");
            if !(-2..=0).contains(&u) {
                return Err(Error::CancellationMismatch(format!(
                    "term V{w}⊗O({}) lands at position {u}",
                    -k
                )));
            }
            *cells.entry((u, -k, w.clone())).or_default() += m;
        }
    }
    let qm_location = var.qm_weight.as_ref().and_then(|qm| {
        table.iter().find_map(|(&(p, t), r)| {
            (t == 1)
                .then(|| r.iter().find(|(_, e)| &e.weight == qm).map(|(q, _)| (p, q)))
                .flatten()
        })
    });
    Ok(JacobianAssembly {
        table: BettiTable::from_cells(var.lie_type().to_string(), Sheaf::Jacobian, &cells),
        computed_j: qm_location.map(|(p, _)| p),
        qm_location,
        cancelled,
        bracket_block: true,
    })
}

/// Structure-sheaf resolution of the normalisation of the discriminant from
/// the Betti numbers of `X`.
///
/// The lemma-level complex has `H^p(Ω^p) ⊗ O(−p−1)` at position −1 and
/// `H^p(Ω^p) ⊗ O(−p)` at position 0. In each twist the map between them is
/// the hyperplane class of maximal rank, which leaves
/// `K^q = b_q − b_{q+1}` copies at −1 and `C^{q+1} = b_{q+1} − b_q` at 0.
pub fn assemble_structure_resolution(var: &AdjointVariety) -> Result<BettiTable> {
    let b = &var.betti;
    if b.len() != var.dim_x + 1 {
        return Err(Error::CancellationMismatch(format!(
            "{} Betti numbers for dim {}",
            b.len(),
            var.dim_x
        )));
    }
    let zero = Weight::zero(var.rs.rank());
    let mut cells = Cells::new();
    cells.insert((0, 0, zero.clone()), b[0]);
    for q in 0..var.dim_x {
        let (lo, hi) = (b[q], b[q + 1]);
        let twist = -(q as i64) - 1;
        if lo > hi {
            *cells.entry((-1, twist, zero.clone())).or_default() += lo - hi;
        } else if hi > lo {
            *cells.entry((0, twist, zero.clone())).or_default() += hi - lo;
        }
    }
    *cells
        .entry((-1, -(var.dim_x as i64) - 1, zero))
        .or_default() += b[var.dim_x];
    Ok(BettiTable::from_cells(
        var.lie_type().to_string(),
        Sheaf::Structure,
        &cells,
    ))
}

/// The resolution predicted from catalog constants, with `ĝ` at twist `j`.
pub fn predicted_resolution_with_j(
    var: &AdjointVariety,
    sheaf: Sheaf,
    j: Option<usize>,
) -> BettiTable {
    let zero = Weight::zero(var.rs.rank());
    let mut cells = Cells::new();
    let mut put =
        |u: i32, twist: i64, w: &Weight| *cells.entry((u, twist, w.clone())).or_default() += 1;
    let m = var.dim_x as i64;
    for &e in var.long_exponents() {
        let e = i64::from(e);
        match sheaf {
            Sheaf::Jacobian => {
                put(-1, -e, &zero);
                put(-2, -e - 1, &zero);
            }
            Sheaf::Structure => {
                put(0, -e + 1, &zero);
                put(-1, -m + e - 2, &zero);
            }
        }
    }
    if sheaf == Sheaf::Jacobian {
        put(0, 0, &var.theta);
        put(-1, -1, &var.theta);
        if let (Some(qm), Some(j)) = (&var.qm_weight, j) {
            put(-1, -(j as i64), qm);
            put(-2, -(j as i64) - 1, qm);
        }
    }
    BettiTable::from_cells(var.lie_type().to_string(), sheaf, &cells)
}

/// The resolution predicted from catalog constants alone.
pub fn predicted_resolution(var: &AdjointVariety, sheaf: Sheaf) -> BettiTable {
    predicted_resolution_with_j(var, sheaf, var.j)
}

/// Terms present in one table but not the other.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ResolutionDiff {
    pub only_left: Vec<(i32, BettiEntry)>,
    pub only_right: Vec<(i32, BettiEntry)>,
}

impl ResolutionDiff {
    pub fn is_empty(&self) -> bool {
        self.only_left.is_empty() && self.only_right.is_empty()
    }
}

impl fmt::Display for ResolutionDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (side, list) in [
            ("assembled only", &self.only_left),
            ("predicted only", &self.only_right),
        ] {
            for (u, e) in list {
                writeln!(f, "  {side}: u={u} {}xV{}⊗O({})", e.mult, e.rep, e.twist)?;
            }
        }
        Ok(())
    }
}

pub fn compare_resolutions(a: &BettiTable, b: &BettiTable) -> ResolutionDiff {
    let (ca, cb) = (a.cells(), b.cells());
    let mut diff = ResolutionDiff::default();
    let keys: std::collections::BTreeSet<_> = ca.keys().chain(cb.keys()).cloned().collect();
    for k in keys {
        let (x, y) = (
            ca.get(&k).copied().unwrap_or(0),
            cb.get(&k).copied().unwrap_or(0),
        );
        let entry = |mult| {
            (
                k.0,
                BettiEntry {
                    twist: k.1,
                    rep: k.2.clone(),
                    mult,
                },
            )
        };
        if x > y {
            diff.only_left.push(entry(x - y));
        } else if y > x {
            diff.only_right.push(entry(y - x));
        }
    }
    diff
}

/// `dim Sym^t` of a space of dimension `n`, zero for negative `t`.
fn sym_dim(n: usize, t: i64) -> BigUint {
    if t < 0 {
        return BigUint::zero();
    }
    let t = t as usize;
    if n == 0 {
        return BigUint::from(u8::from(t == 0));
    }
    binomial(BigUint::from(t + n - 1), BigUint::from(n - 1))
}

/// Numerical invariants of the module a table resolves.
#[derive(Clone, Debug, Serialize)]
pub struct HilbertCheck {
    /// Alternating sum of ranks; zero for a module supported on a hypersurface.
    pub rank_sum: i64,
    /// Degree of the module, which must equal the degree of the discriminant.
    pub degree: i64,
    /// Hilbert function for degrees `0..=10`.
    pub hilbert: Vec<String>,
    pub ok: bool,
}

/// Hilbert function and degree of the cokernel of a table, in `dim g`
/// variables.
pub fn hilbert_check(var: &AdjointVariety, table: &BettiTable) -> Result<HilbertCheck> {
    let n = var.rs.dim_lie_algebra();
    let mut rank_sum = 0i64;
    let mut degree = 0i64;
    let mut dims = Vec::new();
    for t in &table.terms {
        let sign: i64 = if t.u % 2 == 0 { 1 } else { -1 };
        for e in &t.entries {
            let d = weyl_dim(&var.rs, &e.rep)?
                .to_i64()
                .ok_or_else(|| Error::Overflow("rep dimension".into()))?
                * e.mult as i64;
            rank_sum += sign * d;
            degree += sign * d * e.twist;
            dims.push((sign, d, e.twist));
        }
    }
    let mut hilbert = Vec::new();
    let mut ok = rank_sum == 0 && degree == var.discriminant_degree as i64;
    for deg in 0..=10i64 {
        let mut pos = BigUint::zero();
        let mut neg = BigUint::zero();
        for &(sign, d, tw) in &dims {
            let v = sym_dim(n, deg + tw) * BigUint::from(d as u64);
            if sign > 0 {
                pos += v;
            } else {
                neg += v;
            }
        }
        if neg > pos {
            ok = false;
            hilbert.push(format!("-{}", neg - pos));
        } else {
            hilbert.push((pos - neg).to_string());
        }
    }
    Ok(HilbertCheck {
        rank_sum,
        degree,
        hilbert,
        ok,
    })
}

/// Evidence that an assembled simply-laced Jacobian table is minimal.
#[derive(Clone, Debug, Serialize)]
pub struct MinimalityWitness {
    #[serde(rename = "type")]
    pub lie_type: String,
    /// Trivial summands at position −1; these generate `Der^G`, free of rank `n`.
    pub invariant_generators: usize,
    pub rank: usize,
    /// Twists `k` with `O(k)` at both −1 and −2. A constant map between them
    /// would be a component of the relations into `Der^G`.
    pub equal_twist_pairs: Vec<i64>,
    /// Twists at −2 minus one: each relation `O(−e−1)` maps into
    /// `g ⊗ O(−1)` with entries of degree `e`.
    pub relation_degrees: Vec<i64>,
    /// Pairs not excluded by the witness.
    pub cancellable_pairs: Vec<i64>,
}

impl MinimalityWitness {
    pub fn passed(&self) -> bool {
        self.cancellable_pairs.is_empty() && self.invariant_generators == self.rank
    }
}

/// Constant maps can only join equal twists. Relations are exactly the
/// kernel of `ad : g ⊗ O(−1) → g ⊗ O`, generated by the gradients of the
/// basic invariants, so their component into `Der^G` vanishes once
/// (a) the trivial summands at −1 number the rank and sit at the exponents,
/// and (b) every relation at −2 has twist `−e_i − 1` for an exponent `e_i ≥ 1`.
/// `symcheck::nu_freeness` certifies that the kernel is free on those
/// gradients for small `sl_n`. A pair failing (a) or (b) is reported as
/// cancellable.
pub fn minimality_witness(var: &AdjointVariety, table: &BettiTable) -> MinimalityWitness {
    let gens = table.trivial_twists(-1);
    let rels = table.trivial_twists(-2);
    let exps: Vec<i64> = var.rs.exponents.iter().map(|&e| -i64::from(e)).collect();
    let mut gens_sorted = gens.clone();
    gens_sorted.sort_unstable_by(|a, b| b.cmp(a));
    let gens_ok = gens_sorted == exps;
    let relation_degrees: Vec<i64> = rels.iter().map(|t| -t - 1).collect();
    let rels_ok = relation_degrees
        .iter()
        .all(|&d| d >= 1 && exps.contains(&-d));
    let mut equal_twist_pairs: Vec<i64> =
        rels.iter().copied().filter(|t| gens.contains(t)).collect();
    equal_twist_pairs.dedup();
    let cancellable_pairs = if gens_ok && rels_ok {
        Vec::new()
    } else {
        equal_twist_pairs.clone()
    };
    MinimalityWitness {
        lie_type: var.lie_type().to_string(),
        invariant_generators: gens.len(),
        rank: var.rs.rank(),
        equal_twist_pairs,
        relation_degrees,
        cancellable_pairs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn var(t: &str) -> AdjointVariety {
        AdjointVariety::new(t.parse().unwrap()).unwrap()
    }

    #[test]
    fn structure_examples() {
        let a2 = var("A2");
        let s = assemble_structure_resolution(&a2).unwrap();
        assert_eq!(s.trivial_twists(0), vec![0, -1]);
        assert_eq!(s.trivial_twists(-1), vec![-3, -4]);
        assert!(compare_resolutions(&s, &predicted_resolution(&a2, Sheaf::Structure)).is_empty());
        let g2 = var("G2");
        let s = assemble_structure_resolution(&g2).unwrap();
        assert_eq!(s.trivial_twists(0), vec![0]);
        assert_eq!(s.trivial_twists(-1), vec![-6]);
    }

    #[test]
    fn predicted_degrees() {
        for t in ["A2", "B3", "C3", "G2", "F4", "D4"] {
            let v = var(t);
            for sheaf in [Sheaf::Jacobian, Sheaf::Structure] {
                let h = hilbert_check(&v, &predicted_resolution(&v, sheaf)).unwrap();
                assert!(h.ok, "{t} {sheaf:?}: {h:?}");
            }
        }
    }

    #[test]
    fn json_has_schema() {
        let v = var("B3");
        let j = predicted_resolution(&v, Sheaf::Jacobian).to_json();
        assert_eq!(j["schema"], "1");
        assert_eq!(j["sheaf"], "jacobian");
        assert_eq!(j["terms"][0]["u"], 0);
        assert_eq!(
            j["terms"][0]["entries"][0],
            serde_json::json!({"twist": 0, "rep": [0, 1, 0], "mult": 1})
        );
    }
}
