//! Orbit-derived structure: active pairs, fixing and fixed neighbourhoods,
//! the fixed graph, and the exact fixing invariants `fix`, `fix⁺`, `fxd`.
//!
//! A set meeting `F(u, v)` for every active pair is a fixing set, but a
//! fixing set need not meet every row of `B`: in `H(3, 3)` the set
//! `{0, 4, 10}` fixes the graph and misses `F(8, 21)`. The 0/1 cover
//! optimum of `B` is therefore only an upper bound on `fix`, and the
//! exhaustive routines decide fixing sets from the group itself: `S` fixes
//! `G` exactly when it is contained in no maximal non-fixing set.

use std::collections::HashSet;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{automorphisms, PermGroup};
use crate::lp::{integral_cover_optimum, CoverLp};
use crate::perm::Permutation;

/// Default vertex cap for the exhaustive `fix⁺` and `fxd` routines.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 14;
/// Largest cap the exhaustive routines accept.
pub const MAX_EXHAUSTIVE_CAP: usize = 24;
/// Largest graph for which the 0/1 cover optimum of `B` is computed.
pub const COVER_CHECK_LIMIT: usize = 30;

/// An unordered vertex pair stored as `(min, max)`.
pub type VertexPair = (usize, usize);

fn ordered(u: usize, v: usize) -> VertexPair {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// The automorphism group of a graph together with every stabilizer
/// orbit partition `{O_x(u)}`.
#[derive(Clone, Debug)]
pub struct FixingAnalysis<'g> {
    graph: &'g Graph,
    group: PermGroup,
    orbit_label: Vec<usize>,
    /// `stab_label[x][u] == stab_label[x][v]` iff `O_x(u) = O_x(v)`.
    stab_label: Vec<Vec<usize>>,
}

impl<'g> FixingAnalysis<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self::with_group(graph, automorphisms(graph))
    }

    /// Uses a group already computed for `graph`.
    pub fn with_group(graph: &'g Graph, group: PermGroup) -> Self {
        assert_eq!(group.degree(), graph.order(), "group degree mismatch");
        let n = graph.order();
        let orbit_label = group.orbit_labels();
        let mut stab_label: Vec<Vec<usize>> = vec![Vec::new(); n];
        for orbit in group.orbits() {
            let r = orbit[0];
            let base = group
                .point_stabilizer(r)
                .expect("vertex in range")
                .orbit_labels();
            let trans = group.orbit_transversal(r);
            for &x in &orbit {
                if x == r {
                    continue;
                }
                // t maps r to x, so Γ_x = t⁻¹ Γ_r t and O_x(u) = t(O_r(t⁻¹ u))
                let t_inv = trans[x].as_ref().expect("same orbit").inverse();
                stab_label[x] = (0..n).map(|u| base[t_inv.apply(u)]).collect();
            }
            stab_label[r] = base;
        }
        FixingAnalysis {
            graph,
            group,
            orbit_label,
            stab_label,
        }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn is_rigid(&self) -> bool {
        self.group.is_trivial()
    }

    pub fn same_orbit(&self, u: usize, v: usize) -> bool {
        self.orbit_label[u] == self.orbit_label[v]
    }

    /// Whether `x` separates `u` and `v`, i.e. `O_x(u) ≠ O_x(v)`.
    pub fn separates(&self, x: usize, u: usize, v: usize) -> bool {
        self.stab_label[x][u] != self.stab_label[x][v]
    }

    /// `(A(G), C(G))`: vertices in orbits of size at least two, and the rest.
    pub fn active_and_core(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.order();
        let mut size = vec![0usize; n];
        for &l in &self.orbit_label {
            size[l] += 1;
        }
        (0..n).partition(|&u| size[self.orbit_label[u]] >= 2)
    }

    /// `V_a(G)` as unordered pairs in lexicographic order.
    pub fn active_pairs(&self) -> Vec<VertexPair> {
        let n = self.order();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.same_orbit(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.graph.check_vertex(u)?;
        self.graph.check_vertex(v)?;
        if u == v {
            return Err(Error::precondition(format!("pair needs two distinct vertices, got {u} twice")));
        }
        Ok(())
    }

    fn fixing_row(&self, u: usize, v: usize) -> BitSet {
        let n = self.order();
        BitSet::from_indices(n, (0..n).filter(|&x| self.separates(x, u, v)))
    }

    /// `F(u, v)`, sorted.
    pub fn fixing_neighborhood(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.check_pair(u, v)?;
        Ok(self.fixing_row(u, v).to_vec())
    }

    /// `F(x)`: every unordered pair `{u, v}`, `u ≠ v`, separated by `x`.
    pub fn fixed_neighborhood(&self, x: usize) -> Result<Vec<VertexPair>> {
        self.graph.check_vertex(x)?;
        let n = self.order();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.separates(x, u, v) {
                    out.push((u, v));
                }
            }
        }
        Ok(out)
    }

    /// `R(u, v)`: vertices at different distances from `u` and `v`.
    pub fn resolving_neighborhood(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.check_pair(u, v)?;
        let d = self.graph.distance_matrix();
        if !d.is_connected() {
            return Err(Error::precondition("resolving neighbourhoods need a connected graph"));
        }
        Ok((0..self.order()).filter(|&x| d.raw(x, u) != d.raw(x, v)).collect())
    }

    /// `I(G)` with rows in the order of [`Self::active_pairs`].
    pub fn fixed_graph(&self) -> FixedGraph {
        let pairs = self.active_pairs();
        let rows = pairs.iter().map(|&(u, v)| self.fixing_row(u, v)).collect();
        FixedGraph {
            n: self.order(),
            pairs,
            rows,
        }
    }

    /// `f(G) = min |F(u, v)|` over active pairs.
    pub fn f_min(&self) -> Result<usize> {
        self.active_pairs()
            .into_iter()
            .map(|(u, v)| self.fixing_row(u, v).count())
            .min()
            .ok_or_else(|| Error::precondition("f(G) undefined for rigid graphs"))
    }

    /// Whether `Γ_S` is trivial, decided on the stabilizer chain.
    pub fn is_fixing_set(&self, s: &[usize]) -> Result<bool> {
        Ok(self.group.pointwise_stabilizer(s)?.is_trivial())
    }

    /// Whether `s` is a fixing set no proper subset of which fixes.
    pub fn is_minimal_fixing_set(&self, s: &[usize]) -> Result<bool> {
        if !self.is_fixing_set(s)? {
            return Ok(false);
        }
        for i in 0..s.len() {
            let rest: Vec<usize> = s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
            if self.is_fixing_set(&rest)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `fix(G)` with a minimum fixing set. When the graph has at most
    /// [`COVER_CHECK_LIMIT`] vertices the 0/1 cover optimum of `B` is
    /// computed as well; it is never below `fix(G)`.
    pub fn fixing_number(&self) -> FixingNumber {
        let greedy = greedy_fixing_set(&self.group);
        let mut witness = greedy.clone();
        for k in 0..greedy.len() {
            let mut chosen = Vec::with_capacity(k);
            if search_fixing_set(&self.group, &mut chosen, k) {
                witness = chosen;
                break;
            }
        }
        witness.sort_unstable();
        let cover_optimum = (self.order() <= COVER_CHECK_LIMIT).then(|| {
            let lp = self.fixed_graph().cover_lp();
            integral_cover_optimum(&lp).expect("within budget").value
        });
        FixingNumber {
            value: witness.len(),
            witness,
            cover_optimum,
        }
    }

    fn check_cap(&self, cap: usize, what: &'static str) -> Result<()> {
        let n = self.order();
        let cap = cap.min(MAX_EXHAUSTIVE_CAP);
        if n > cap {
            return Err(Error::CapExceeded { what, size: n, cap });
        }
        Ok(())
    }

    /// Every inclusion-maximal vertex set whose pointwise stabilizer is
    /// non-trivial, as bit masks in increasing order. Empty for rigid
    /// graphs. Requires at most 64 vertices.
    pub fn maximal_nonfixing_sets(&self) -> Vec<u64> {
        assert!(self.order() <= 64, "bit masks hold at most 64 vertices");
        if self.group.is_trivial() {
            return Vec::new();
        }
        let mut seen = HashSet::new();
        let mut reps = Vec::new();
        collect_maximal_nonfixing(&self.group, &mut seen, &mut reps);
        let mut all: HashSet<u64> = HashSet::new();
        for r in reps {
            let mut queue = vec![r];
            all.insert(r);
            while let Some(m) = queue.pop() {
                for g in self.group.generators() {
                    let img = map_mask(g, m);
                    if all.insert(img) {
                        queue.push(img);
                    }
                }
            }
        }
        let mut out: Vec<u64> = all.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Minimal supports of the non-identity automorphisms. `S` is a fixing
    /// set exactly when it meets each of them.
    pub fn minimal_supports(&self) -> Vec<Vec<usize>> {
        let full = if self.order() == 64 { u64::MAX } else { (1u64 << self.order()) - 1 };
        let mut out: Vec<Vec<usize>> = self
            .maximal_nonfixing_sets()
            .into_iter()
            .map(|m| mask_to_vec(full & !m, self.order()))
            .collect();
        out.sort_unstable();
        out
    }

    /// `fix⁺(G)`: the largest inclusion-minimal fixing set, by exhaustive
    /// enumeration. The witness is the lexicographically first one among
    /// sets of maximum size, ordered by bit mask.
    pub fn upper_fixing_number(&self, cap: usize) -> Result<UpperFixing> {
        self.check_cap(cap, "upper fixing number enumeration")?;
        let n = self.order();
        let fixing = fixing_table(n, &self.maximal_nonfixing_sets());
        let mut best: Option<u64> = None;
        for s in 0..fixing.len() as u64 {
            if !fixing[s as usize] {
                continue;
            }
            let minimal = (0..n).all(|i| s >> i & 1 == 0 || !fixing[(s & !(1 << i)) as usize]);
            if minimal && best.is_none_or(|b| s.count_ones() > b.count_ones()) {
                best = Some(s);
            }
        }
        let best = best.expect("the full vertex set is a fixing set");
        Ok(UpperFixing {
            value: best.count_ones() as usize,
            witness: mask_to_vec(best, n),
        })
    }

    /// `fxd(G)`: one more than the largest non-fixing set, or 0 when the
    /// graph is rigid.
    pub fn fixed_number(&self, cap: usize) -> Result<usize> {
        self.check_cap(cap, "fixed number enumeration")?;
        Ok(self
            .maximal_nonfixing_sets()
            .into_iter()
            .map(|m| m.count_ones() as usize + 1)
            .max()
            .unwrap_or(0))
    }

    /// Edge counts of `I(G)` against both sides of the edge bound for a
    /// `k`-fixed graph, with `k = fix(G) = fxd(G)` checked first.
    pub fn edge_bound_check(&self, cap: usize) -> Result<EdgeBoundReport> {
        let fix = self.fixing_number().value;
        let fxd = self.fixed_number(cap)?;
        if fix != fxd || fix == 0 {
            return Err(Error::precondition(format!(
                "graph is not k-fixed for any k >= 1: fix = {fix}, fxd = {fxd}"
            )));
        }
        Ok(self.edge_bound_report(fix))
    }

    /// The same report for an arbitrary `k`, without checking that the
    /// graph is `k`-fixed.
    pub fn edge_bound_report(&self, k: usize) -> EdgeBoundReport {
        let n = self.order();
        let l = self.active_and_core().0.len();
        let edges = self.fixed_graph().edge_count();
        let lower = BigRational::new(
            (l as i64 * (l as i64 - k as i64 + 1)).into(),
            2.into(),
        );
        let upper = n as i64 * ((n * n.saturating_sub(1) / 2) as i64 - k as i64 + 1);
        let edges_q = BigRational::from_integer(edges.into());
        EdgeBoundReport {
            l,
            k,
            edges,
            lower_holds: lower <= edges_q,
            upper_holds: edges as i64 <= upper,
            lower: crate::lp::rational_to_string(&lower),
            upper,
        }
    }
}

/// `fix(G)` together with a witness and the optional 0/1 cover optimum of `B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixingNumber {
    pub value: usize,
    pub witness: Vec<usize>,
    pub cover_optimum: Option<usize>,
}

impl FixingNumber {
    /// Whether the group search and the 0/1 cover of `B` agree, when both
    /// ran. `Some(false)` means the cover optimum is strictly larger.
    pub fn cover_agrees(&self) -> Option<bool> {
        self.cover_optimum.map(|c| c == self.value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperFixing {
    pub value: usize,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBoundReport {
    pub l: usize,
    pub k: usize,
    pub edges: usize,
    /// `l(l − k + 1)/2`, possibly a half-integer.
    pub lower: String,
    pub upper: i64,
    pub lower_holds: bool,
    pub upper_holds: bool,
}

impl EdgeBoundReport {
    pub fn holds(&self) -> bool {
        self.lower_holds && self.upper_holds
    }
}

/// The fixed graph `I(G)`: vertices on one side, active pairs on the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedGraph {
    n: usize,
    pairs: Vec<VertexPair>,
    rows: Vec<BitSet>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FixedGraphFile {
    pairs: Vec<[usize; 2]>,
    incidence: Vec<Vec<u8>>,
}

impl FixedGraph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[VertexPair] {
        &self.pairs
    }

    /// Row `i` is `F(pairs[i])`.
    pub fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    /// `|E(I(G))|`.
    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum()
    }

    /// Vertices incident to no pair.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| self.rows.iter().all(|r| !r.contains(x)))
            .collect()
    }

    /// The dense 0/1 matrix `B`.
    pub fn incidence_matrix(&self) -> Vec<Vec<u8>> {
        self.rows
            .iter()
            .map(|r| (0..self.n).map(|j| u8::from(r.contains(j))).collect())
            .collect()
    }

    pub fn cover_lp(&self) -> CoverLp {
        CoverLp::new(self.n, self.rows.clone()).expect("rows of B are never empty")
    }

    pub fn to_json(&self) -> String {
        let file = FixedGraphFile {
            pairs: self.pairs.iter().map(|&(u, v)| [u, v]).collect(),
            incidence: self.incidence_matrix(),
        };
        serde_json::to_string(&file).expect("serializable")
    }

    /// Reads the JSON form back; `n` is taken from the row width, or must
    /// be supplied when there are no rows.
    pub fn from_json(text: &str, n: usize) -> Result<FixedGraph> {
        let file: FixedGraphFile = serde_json::from_str(text)?;
        if file.pairs.len() != file.incidence.len() {
            return Err(Error::Parse(format!(
                "{} pairs but {} incidence rows",
                file.pairs.len(),
                file.incidence.len()
            )));
        }
        let mut rows = Vec::with_capacity(file.incidence.len());
        for row in &file.incidence {
            if row.len() != n || row.iter().any(|&b| b > 1) {
                return Err(Error::Parse(format!("incidence rows must be 0/1 of length {n}")));
            }
            rows.push(BitSet::from_indices(n, (0..n).filter(|&j| row[j] == 1)));
        }
        Ok(FixedGraph {
            n,
            pairs: file.pairs.iter().map(|p| ordered(p[0], p[1])).collect(),
            rows,
        })
    }

    /// `B` as text: a header line `r n`, then one line of `n` space-separated
    /// 0/1 entries per row.
    pub fn b_matrix_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows.len(), self.n);
        for row in self.incidence_matrix() {
            let line: Vec<String> = row.iter().map(u8::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

/// Repeatedly fixes the first vertex of a largest orbit of the current
/// stabilizer.
fn greedy_fixing_set(group: &PermGroup) -> Vec<usize> {
    let mut g = group.clone();
    let mut chosen = Vec::new();
    while !g.is_trivial() {
        let orbit = g
            .orbits()
            .into_iter()
            .max_by(|a, b| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
            .expect("non-empty");
        let x = orbit[0];
        chosen.push(x);
        g = g.point_stabilizer(x).expect("in range");
    }
    chosen
}

/// Depth-first search for a fixing set of exactly `budget` further
/// vertices. Only one vertex per orbit of the current stabilizer is
/// tried, and a branch is cut when even the largest orbit cannot shrink
/// the group to the identity in time.
fn search_fixing_set(group: &PermGroup, chosen: &mut Vec<usize>, budget: usize) -> bool {
    if group.is_trivial() {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let orbits: Vec<Vec<usize>> = group.orbits().into_iter().filter(|o| o.len() > 1).collect();
    let widest = orbits.iter().map(Vec::len).max().unwrap_or(1);
    if BigUint::from(widest).pow(budget as u32) < group.order() {
        return false;
    }
    for orbit in &orbits {
        let x = orbit[0];
        chosen.push(x);
        let stab = group.point_stabilizer(x).expect("in range");
        if search_fixing_set(&stab, chosen, budget - 1) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Visits closed non-fixing sets `Fix(H)` from the top of the group down,
/// extending by one point per orbit of the current stabilizer `H`, and
/// records those with no non-trivial extension.
fn collect_maximal_nonfixing(group: &PermGroup, seen: &mut HashSet<u64>, out: &mut Vec<u64>) {
    let mut fixed = 0u64;
    let mut moved = Vec::new();
    for orbit in group.orbits() {
        if orbit.len() == 1 {
            fixed |= 1 << orbit[0];
        } else {
            moved.push(orbit[0]);
        }
    }
    if !seen.insert(fixed) {
        return;
    }
    let mut maximal = true;
    for x in moved {
        let stab = group.point_stabilizer(x).expect("in range");
        if !stab.is_trivial() {
            maximal = false;
            collect_maximal_nonfixing(&stab, seen, out);
        }
    }
    if maximal {
        out.push(fixed);
    }
}

fn map_mask(p: &Permutation, m: u64) -> u64 {
    let mut out = 0u64;
    let mut rest = m;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        out |= 1 << p.apply(i);
        rest &= rest - 1;
    }
    out
}

/// `table[s]` is true iff the vertex set with mask `s` lies in none of the
/// given non-fixing sets.
fn fixing_table(n: usize, nonfixing: &[u64]) -> Vec<bool> {
    let mut below = vec![false; 1 << n];
    for &m in nonfixing {
        below[m as usize] = true;
    }
    for i in 0..n {
        for s in 0..1usize << n {
            if s >> i & 1 == 1 && below[s] {
                below[s & !(1 << i)] = true;
            }
        }
    }
    below.into_iter().map(|b| !b).collect()
}

fn mask_to_vec(s: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| s >> i & 1 == 1).collect()
}

/// Convenience: `fix(G)`.
pub fn fixing_number(g: &Graph) -> FixingNumber {
    FixingAnalysis::new(g).fixing_number()
}
