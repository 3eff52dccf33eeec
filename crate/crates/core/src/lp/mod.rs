//! Exact rational linear programming for 0/1 covering programs, and the
//! two fractional invariants built on it.

mod cover;
mod simplex;

pub use simplex::PivotRule;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::fixing::FixingAnalysis;
use crate::graph::Graph;

/// Exact rational number; always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// `"p/q"`, or `"p"` when `q = 1`.
pub fn rational_to_string(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

pub fn rational(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// A map `V → [0, 1] ∩ ℚ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    weights: Vec<Rational>,
}

impl WeightFunction {
    pub fn new(weights: Vec<Rational>) -> Result<WeightFunction> {
        if let Some((i, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| w.is_negative() || **w > Rational::one())
        {
            return Err(Error::precondition(format!(
                "weight {} at vertex {i} outside [0, 1]",
                rational_to_string(w)
            )));
        }
        Ok(WeightFunction { weights })
    }

    pub fn zero(n: usize) -> WeightFunction {
        WeightFunction {
            weights: vec![Rational::zero(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, v: usize) -> &Rational {
        &self.weights[v]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.weights
    }

    /// `|g| = Σ g(v)`.
    pub fn total(&self) -> Rational {
        self.weights.iter().sum()
    }

    /// `g(S) = Σ_{v ∈ S} g(v)`.
    pub fn weight_of(&self, set: impl IntoIterator<Item = usize>) -> Rational {
        set.into_iter().map(|v| &self.weights[v]).sum()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.weights.iter().map(rational_to_string).collect()
    }
}

impl Serialize for WeightFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let weights = raw
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        WeightFunction::new(weights).map_err(serde::de::Error::custom)
    }
}

/// `min 1·x` subject to `Bx ≥ 1`, `x ≥ 0`, with `B` given by its rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverLp {
    n: usize,
    rows: Vec<BitSet>,
}

impl CoverLp {
    /// Rejects rows with no ones, which make the program infeasible.
    pub fn new(n: usize, rows: Vec<BitSet>) -> Result<CoverLp> {
        for (i, row) in rows.iter().enumerate() {
            if row.capacity() != n {
                return Err(Error::precondition(format!(
                    "row {i} has width {}, expected {n}",
                    row.capacity()
                )));
            }
            if row.is_empty() {
                return Err(Error::Infeasible(format!("row {i} has no ones")));
            }
        }
        Ok(CoverLp { n, rows })
    }

    /// Builds from a dense 0/1 matrix with `n` columns.
    pub fn from_matrix(n: usize, matrix: &[Vec<u8>]) -> Result<CoverLp> {
        let mut rows = Vec::with_capacity(matrix.len());
        for (i, line) in matrix.iter().enumerate() {
            if line.len() != n || line.iter().any(|&b| b > 1) {
                return Err(Error::precondition(format!("row {i} is not a 0/1 row of length {n}")));
            }
            rows.push(BitSet::from_indices(n, (0..n).filter(|&j| line[j] == 1)));
        }
        CoverLp::new(n, rows)
    }

    pub fn columns(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    /// Indices of the rows left after removing duplicates and every row
    /// that contains another row. Order: by size, then by first occurrence.
    pub fn essential_rows(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.rows[i].count());
        let mut kept: Vec<usize> = Vec::new();
        for i in order {
            if !kept.iter().any(|&k| self.rows[k].is_subset(&self.rows[i])) {
                kept.push(i);
            }
        }
        kept
    }

    /// The same program with rows in a different order.
    pub fn permuted_rows(&self, order: &[usize]) -> CoverLp {
        CoverLp {
            n: self.n,
            rows: order.iter().map(|&i| self.rows[i].clone()).collect(),
        }
    }
}

/// An optimal primal/dual pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    pub weights: WeightFunction,
    /// Packing multipliers, one per row of the original program.
    pub dual: Vec<Rational>,
    pub pivots: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LpResultFile {
    value: String,
    weights: WeightFunction,
}

impl LpSolution {
    fn empty(n: usize) -> LpSolution {
        LpSolution {
            value: Rational::zero(),
            weights: WeightFunction::zero(n),
            dual: Vec::new(),
            pivots: 0,
        }
    }

    /// Checks the optimality certificate: primal and dual feasibility and
    /// equal objective values.
    pub fn verify(&self, lp: &CoverLp) -> Result<()> {
        let fail = |m: String| Err(Error::Infeasible(m));
        if self.weights.len() != lp.n || self.dual.len() != lp.rows.len() {
            return fail("solution has the wrong shape".into());
        }
        for (i, row) in lp.rows.iter().enumerate() {
            if self.weights.weight_of(row.iter()) < Rational::one() {
                return fail(format!("row {i} is not covered"));
            }
        }
        if self.dual.iter().any(Signed::is_negative) {
            return fail("negative dual multiplier".into());
        }
        for j in 0..lp.n {
            let load: Rational = lp
                .rows
                .iter()
                .zip(&self.dual)
                .filter(|(r, _)| r.contains(j))
                .map(|(_, y)| y)
                .sum();
            if load > Rational::one() {
                return fail(format!("dual constraint of column {j} violated"));
            }
        }
        let primal = self.weights.total();
        let dual: Rational = self.dual.iter().sum();
        if primal != self.value || dual != self.value {
            return fail(format!(
                "objectives differ: primal {}, dual {}, reported {}",
                rational_to_string(&primal),
                rational_to_string(&dual),
                rational_to_string(&self.value)
            ));
        }
        Ok(())
    }

    /// `{"value": "p/q", "weights": ["p/q", ...]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&LpResultFile {
            value: rational_to_string(&self.value),
            weights: self.weights.clone(),
        })
        .expect("serializable")
    }

    /// Reads the JSON form; the dual is not part of it and comes back empty.
    pub fn from_json(text: &str) -> Result<(Rational, WeightFunction)> {
        let file: LpResultFile = serde_json::from_str(text)?;
        Ok((parse_rational(&file.value)?, file.weights))
    }
}

/// Solves a covering program exactly with the default pivot rule.
pub fn solve_cover_lp(lp: &CoverLp) -> LpSolution {
    solve_cover_lp_with(lp, PivotRule::default())
}

/// Solves a covering program exactly. Duplicate and dominated rows are
/// removed first; their dual multipliers are zero. The returned solution
/// has been checked with [`LpSolution::verify`].
pub fn solve_cover_lp_with(lp: &CoverLp, rule: PivotRule) -> LpSolution {
    if lp.rows.is_empty() {
        return LpSolution::empty(lp.n);
    }
    let kept = lp.essential_rows();
    // columns outside every kept row get weight zero and need no constraint
    let mut used = vec![false; lp.n];
    for &i in &kept {
        for j in lp.rows[i].iter() {
            used[j] = true;
        }
    }
    let cols: Vec<usize> = (0..lp.n).filter(|&j| used[j]).collect();
    let mut index = vec![usize::MAX; lp.n];
    for (k, &j) in cols.iter().enumerate() {
        index[j] = k;
    }
    let rows: Vec<Vec<usize>> = kept
        .iter()
        .map(|&i| lp.rows[i].iter().map(|j| index[j]).collect())
        .collect();

    let opt = simplex::solve_packing(cols.len(), &rows, rule);

    let mut weights = vec![Rational::zero(); lp.n];
    for (k, &j) in cols.iter().enumerate() {
        weights[j] = opt.x[k].clone().min(Rational::one());
    }
    let mut dual = vec![Rational::zero(); lp.rows.len()];
    for (k, &i) in kept.iter().enumerate() {
        dual[i] = opt.y[k].clone();
    }
    let solution = LpSolution {
        value: opt.value,
        weights: WeightFunction::new(weights).expect("capped to [0, 1]"),
        dual,
        pivots: opt.pivots,
    };
    if let Err(e) = solution.verify(lp) {
        panic!("simplex returned an uncertified solution: {e}");
    }
    solution
}

/// Exact 0/1 optimum of a covering program.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverOptimum {
    pub value: usize,
    pub witness: Vec<usize>,
}

/// Column budget of [`integral_cover_optimum`].
pub const INTEGRAL_COVER_CAP: usize = 30;

/// Minimum number of columns meeting every row, by branch and bound.
pub fn integral_cover_optimum(lp: &CoverLp) -> Result<CoverOptimum> {
    if lp.n > INTEGRAL_COVER_CAP {
        return Err(Error::CapExceeded {
            what: "0/1 cover branch and bound",
            size: lp.n,
            cap: INTEGRAL_COVER_CAP,
        });
    }
    let masks: Vec<u64> = lp
        .rows
        .iter()
        .map(|r| r.iter().fold(0u64, |m, j| m | 1 << j))
        .collect();
    let (value, set) = cover::min_hitting_set(&masks);
    Ok(CoverOptimum {
        value,
        witness: (0..lp.n).filter(|&j| set >> j & 1 == 1).collect(),
    })
}

/// `fix_f(G)`: the covering program over the rows `F(u, v)` of active pairs.
pub fn fractional_fixing_number(g: &Graph) -> LpSolution {
    FixingAnalysis::new(g).fractional_fixing_number()
}

impl FixingAnalysis<'_> {
    pub fn fractional_fixing_number(&self) -> LpSolution {
        solve_cover_lp(&self.fixed_graph().cover_lp())
    }
}

/// The covering program over `R(u, v)` for all unordered pairs.
pub fn resolving_lp(g: &Graph) -> Result<CoverLp> {
    let d = g.distance_matrix();
    if !d.is_connected() {
        return Err(Error::precondition("fractional metric dimension needs a connected graph"));
    }
    let n = g.order();
    let mut rows = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            rows.push(BitSet::from_indices(n, (0..n).filter(|&x| d.raw(x, u) != d.raw(x, v))));
        }
    }
    CoverLp::new(n, rows)
}

/// `dim_f(G)`.
pub fn fractional_metric_dimension(g: &Graph) -> Result<LpSolution> {
    Ok(solve_cover_lp(&resolving_lp(g)?))
}
