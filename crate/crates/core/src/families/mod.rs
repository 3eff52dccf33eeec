//! Graph families and product constructions with stable vertex numbering.
//!
//! Numbering conventions:
//! - `star`, `friendship`, `spider`: the centre is vertex 0.
//! - `wheel`, `fan`: the hub is the last vertex.
//! - `c_gadget(n)`: cycle vertices `0..4n`, pendants `4n` (at 0) and
//!   `4n + 1` (at `2n`).
//! - `grid(p, q)`: `(i, j) ↦ i·q + j`.
//! - `hamming(n, k)`: a tuple `(a_0, …, a_{n−1})` is `Σ a_i k^(n−1−i)`.
//! - `johnson(n, k)`: `k`-subsets of `0..n` in lexicographic order.
//! - `join`, `disjoint_union`: vertices of the left graph first.
//! - `corona(G, H)`: `G` first, then the copy `H_u` for each `u` in order.
//! - `composition(G, H)`: `(u, v) ↦ u·|V(H)| + v`.

mod random;

pub use random::{erdos_renyi, random_connected, random_gls_spec, random_tree};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count any generator will produce.
pub const SIZE_CAP: usize = 200;

fn check_size(what: &'static str, size: usize) -> Result<()> {
    if size > SIZE_CAP {
        return Err(Error::CapExceeded {
            what,
            size,
            cap: SIZE_CAP,
        });
    }
    Ok(())
}

fn need(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidGraph(msg()))
    }
}

fn build(n: usize, edges: &[(usize, usize)], name: String) -> Result<Graph> {
    Ok(Graph::from_edge_list(n, edges)?.with_name(name))
}

fn clique_edges(vertices: impl IntoIterator<Item = usize> + Clone) -> Vec<(usize, usize)> {
    let vs: Vec<usize> = vertices.into_iter().collect();
    let mut e = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            e.push((a, b));
        }
    }
    e
}

pub fn path(n: usize) -> Result<Graph> {
    need(n >= 1, || "path needs n >= 1".into())?;
    check_size("path", n)?;
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &e, format!("P{n}"))
}

pub fn cycle(n: usize) -> Result<Graph> {
    need(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    check_size("cycle", n)?;
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &e, format!("C{n}"))
}

pub fn complete(n: usize) -> Result<Graph> {
    need(n >= 1, || "complete graph needs n >= 1".into())?;
    check_size("complete graph", n)?;
    build(n, &clique_edges(0..n), format!("K{n}"))
}

/// The edgeless graph `K̄_n`.
pub fn null(n: usize) -> Result<Graph> {
    need(n >= 1, || "null graph needs n >= 1".into())?;
    check_size("null graph", n)?;
    build(n, &[], format!("N{n}"))
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Result<Graph> {
    need(leaves >= 1, || "star needs at least one leaf".into())?;
    check_size("star", leaves + 1)?;
    let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    build(leaves + 1, &e, format!("K1,{leaves}"))
}

/// `K_{n_1, …, n_k}`; part `i` occupies a contiguous index block.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    need(!parts.is_empty() && parts.iter().all(|&p| p >= 1), || {
        "complete multipartite graph needs non-empty parts".into()
    })?;
    let n: usize = parts.iter().sum();
    check_size("complete multipartite graph", n)?;
    let mut part = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, p));
    }
    let e: Vec<_> = clique_edges(0..n)
        .into_iter()
        .filter(|&(a, b)| part[a] != part[b])
        .collect();
    let label: Vec<String> = parts.iter().map(usize::to_string).collect();
    build(n, &e, format!("K{}", label.join(",")))
}

/// `K_n` without the edge `{0, 1}`.
pub fn complete_minus_edge(n: usize) -> Result<Graph> {
    need(n >= 2, || "K_n - e needs n >= 2".into())?;
    check_size("K_n - e", n)?;
    let e: Vec<_> = clique_edges(0..n).into_iter().filter(|&p| p != (0, 1)).collect();
    build(n, &e, format!("K{n}-e"))
}

/// `K_n` without the perfect matching `{2i, 2i + 1}`; `n` even.
pub fn complete_minus_perfect_matching(n: usize) -> Result<Graph> {
    need(n >= 2 && n % 2 == 0, || format!("K_n - M needs an even n >= 2, got {n}"))?;
    check_size("K_n - M", n)?;
    let e: Vec<_> = clique_edges(0..n)
        .into_iter()
        .filter(|&(a, b)| !(a % 2 == 0 && b == a + 1))
        .collect();
    build(n, &e, format!("K{n}-M"))
}

/// `W_n = K_1 + C_{n−1}` on `n` vertices, hub last.
pub fn wheel(n: usize) -> Result<Graph> {
    need(n >= 4, || format!("wheel needs n >= 4, got {n}"))?;
    check_size("wheel", n)?;
    let rim = n - 1;
    let mut e: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    e.extend((0..rim).map(|i| (i, rim)));
    build(n, &e, format!("W{n}"))
}

/// `F_{1,n} = K_1 + P_n` on `n + 1` vertices, hub last.
pub fn fan(n: usize) -> Result<Graph> {
    need(n >= 1, || "fan needs n >= 1".into())?;
    check_size("fan", n + 1)?;
    let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    e.extend((0..n).map(|i| (i, n)));
    build(n + 1, &e, format!("F1,{n}"))
}

/// `F_n`: `n` triangles `{0, 2i + 1, 2i + 2}` sharing vertex 0.
pub fn friendship(n: usize) -> Result<Graph> {
    need(n >= 1, || "friendship graph needs n >= 1".into())?;
    check_size("friendship graph", 2 * n + 1)?;
    let mut e = Vec::new();
    for i in 0..n {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        e.extend([(0, a), (0, b), (a, b)]);
    }
    build(2 * n + 1, &e, format!("F{n}"))
}

/// `C_{4n}` with a pendant at vertex 0 and one at vertex `2n`.
pub fn c_gadget(n: usize) -> Result<Graph> {
    need(n >= 2, || format!("the gadget needs n >= 2, got {n}"))?;
    let m = 4 * n;
    check_size("gadget", m + 2)?;
    let mut e: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    e.extend([(0, m), (2 * n, m + 1)]);
    build(m + 2, &e, format!("Cgadget{n}"))
}

/// `P_p □ P_q`.
pub fn grid(p: usize, q: usize) -> Result<Graph> {
    need(p >= 1 && q >= 1, || "grid needs p, q >= 1".into())?;
    check_size("grid", p.saturating_mul(q))?;
    let mut e = Vec::new();
    for i in 0..p {
        for j in 0..q {
            if i + 1 < p {
                e.push((i * q + j, (i + 1) * q + j));
            }
            if j + 1 < q {
                e.push((i * q + j, i * q + j + 1));
            }
        }
    }
    build(p * q, &e, format!("P{p}xP{q}"))
}

/// `H(n, k)`: words of length `n` over `k` symbols, adjacent when they
/// differ in exactly one position.
pub fn hamming(n: usize, k: usize) -> Result<Graph> {
    need(n >= 1 && k >= 2, || format!("hamming needs n >= 1 and k >= 2, got ({n}, {k})"))?;
    let size = (0..n).try_fold(1usize, |acc, _| acc.checked_mul(k)).unwrap_or(usize::MAX);
    check_size("hamming graph", size)?;
    let mut e = Vec::new();
    for x in 0..size {
        let mut place = 1;
        for _ in 0..n {
            let digit = (x / place) % k;
            for d in digit + 1..k {
                e.push((x, x + (d - digit) * place));
            }
            place *= k;
        }
    }
    build(size, &e, format!("H({n},{k})"))
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// The `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// `J(n, k)`: `k`-subsets of `0..n`, adjacent when they share `k − 1` elements.
pub fn johnson(n: usize, k: usize) -> Result<Graph> {
    need(k >= 1 && k < n, || format!("johnson needs 1 <= k < n, got ({n}, {k})"))?;
    check_size("johnson graph", binomial(n, k))?;
    let sets = combinations(n, k);
    let mut e = Vec::new();
    for a in 0..sets.len() {
        for b in a + 1..sets.len() {
            let common = sets[a].iter().filter(|x| sets[b].contains(x)).count();
            if common + 1 == k {
                e.push((a, b));
            }
        }
    }
    build(sets.len(), &e, format!("J({n},{k})"))
}

fn label(g: &Graph) -> String {
    g.name().map(str::to_string).unwrap_or_else(|| format!("G{}", g.order()))
}

fn shifted(g: &Graph, by: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    g.edges().into_iter().map(move |(a, b)| (a + by, b + by))
}

/// `G ∪ H`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let (m, n) = (g.order(), h.order());
    check_size("disjoint union", m + n)?;
    let mut e = g.edges();
    e.extend(shifted(h, m));
    build(m + n, &e, format!("{}+{}", label(g), label(h)))
}

/// `G + H`: the disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let (m, n) = (g.order(), h.order());
    check_size("join", m + n)?;
    let mut e = g.edges();
    e.extend(shifted(h, m));
    for a in 0..m {
        for b in 0..n {
            e.push((a, m + b));
        }
    }
    build(m + n, &e, format!("{}v{}", label(g), label(h)))
}

fn require_connected(g: &Graph, what: &str) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::precondition(format!(
            "{what} needs a connected left factor; apply it to each component of {} separately",
            label(g)
        )))
    }
}

/// `G ⊙ H`.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    require_connected(g, "corona product")?;
    let (m, n) = (g.order(), h.order());
    check_size("corona product", m + m * n)?;
    let mut e = g.edges();
    for u in 0..m {
        let off = m + u * n;
        e.extend(shifted(h, off));
        e.extend((0..n).map(|v| (u, off + v)));
    }
    build(m + m * n, &e, format!("{}o{}", label(g), label(h)))
}

/// `G[H]`: `(u, v) ~ (x, y)` iff `ux ∈ E(G)`, or `u = x` and `vy ∈ E(H)`.
pub fn composition(g: &Graph, h: &Graph) -> Result<Graph> {
    require_connected(g, "composition product")?;
    let (m, n) = (g.order(), h.order());
    check_size("composition product", m * n)?;
    let mut e = Vec::new();
    for u in 0..m {
        e.extend(shifted(h, u * n));
    }
    for (u, x) in g.edges() {
        for v in 0..n {
            for y in 0..n {
                e.push((u * n + v, x * n + y));
            }
        }
    }
    build(m * n, &e, format!("{}[{}]", label(g), label(h)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberKind {
    Null,
    Complete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub kind: FiberKind,
    pub size: usize,
}

/// A base graph `H` with one null or complete fiber per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralizedLexicoSpec {
    pub base: Graph,
    pub fibers: Vec<Fiber>,
}

impl GeneralizedLexicoSpec {
    /// First vertex of each fiber in the product.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.fibers
            .iter()
            .map(|f| {
                let o = acc;
                acc += f.size;
                o
            })
            .collect()
    }
}

/// `H[𝓘]`: fibers occupy consecutive index blocks in base-vertex order.
pub fn generalized_lexicographic(spec: &GeneralizedLexicoSpec) -> Result<Graph> {
    let h = &spec.base;
    need(spec.fibers.len() == h.order(), || {
        format!("{} fibers for a base of order {}", spec.fibers.len(), h.order())
    })?;
    need(spec.fibers.iter().all(|f| f.size >= 1), || "fiber sizes must be >= 1".into())?;
    let total: usize = spec.fibers.iter().map(|f| f.size).sum();
    check_size("generalized lexicographic product", total)?;
    let off = spec.offsets();
    let mut e = Vec::new();
    for (v, f) in spec.fibers.iter().enumerate() {
        if f.kind == FiberKind::Complete {
            e.extend(clique_edges(off[v]..off[v] + f.size));
        }
    }
    for (a, b) in h.edges() {
        for i in 0..spec.fibers[a].size {
            for j in 0..spec.fibers[b].size {
                e.push((off[a] + i, off[b] + j));
            }
        }
    }
    build(total, &e, format!("{}[I]", label(h)))
}

/// The twin classes of `g` as a generalized lexicographic product over
/// the quotient graph, together with the class of every vertex in the
/// product's numbering order.
pub fn twin_decomposition(g: &Graph) -> Result<(GeneralizedLexicoSpec, Vec<Vec<usize>>)> {
    let classes = g.twin_partition();
    let k = classes.len();
    let mut edges = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            if g.has_edge(classes[a][0], classes[b][0]) {
                edges.push((a, b));
            }
        }
    }
    let base = Graph::from_edge_list(k, &edges)?;
    let fibers = classes
        .iter()
        .map(|c| Fiber {
            kind: if c.len() >= 2 && g.has_edge(c[0], c[1]) {
                FiberKind::Complete
            } else {
                FiberKind::Null
            },
            size: c.len(),
        })
        .collect();
    Ok((GeneralizedLexicoSpec { base, fibers }, classes))
}

/// `H[K̄_2]`: vertex `i` becomes the non-adjacent twins `2i` and `2i + 1`,
/// so `i ↦ 2i` embeds `H` as an induced subgraph.
pub fn double_graph(h: &Graph) -> Result<Graph> {
    require_connected(h, "double graph")?;
    let g = composition(h, &null(2)?)?;
    Ok(g.with_name(format!("D({})", label(h))))
}

/// A tree of order `n` with `k` twin leaves: the path `0 – … – (n−k−1)`
/// with leaves `n−k, …, n−1` attached to `n−k−1`. For `k = n − 1` this
/// is the star with centre 0.
pub fn tree_with_fixf(n: usize, k: usize) -> Result<Graph> {
    check_size("tree", n)?;
    if n >= 3 && k + 1 == n {
        return Ok(star(k)?.with_name(format!("T({n},{k})")));
    }
    need(k >= 2 && k + 3 <= n, || {
        format!("need 2 <= k <= n - 3 or k = n - 1 (k = n - 2 has no such tree), got n = {n}, k = {k}")
    })?;
    let len = n - k;
    let mut e: Vec<_> = (1..len).map(|i| (i - 1, i)).collect();
    e.extend((len..n).map(|leaf| (len - 1, leaf)));
    build(n, &e, format!("T({n},{k})"))
}

/// Centre 0 with legs of lengths `m, m + 1, …, m + k − 1`, numbered
/// outward leg by leg.
pub fn spider(m: usize, k: usize) -> Result<Graph> {
    need(m >= 1 && k >= 2, || format!("spider needs m >= 1 and k >= 2, got ({m}, {k})"))?;
    let n = 1 + (0..k).map(|i| m + i).sum::<usize>();
    check_size("spider", n)?;
    let mut e = Vec::new();
    let mut next = 1;
    for i in 0..k {
        let mut prev = 0;
        for _ in 0..m + i {
            e.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    build(n, &e, format!("S({m},{k})"))
}
