//! Independent oracles for the integration tests.
//!
//! Nothing here calls the library's group, fixing or LP code: automorphisms
//! come from exhaustive permutation search, fixing neighbourhoods straight
//! from their definition over that list, and LP optima from enumerating the
//! vertices of the covering polyhedron.

#![allow(dead_code)]

use fixnum_core::{Graph, Rational};
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};
use proptest::prelude::*;

pub type Small = Ratio<i128>;

pub fn to_big(q: &Small) -> Rational {
    Rational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

/// Every automorphism of `g` as an image vector, in lexicographic order.
pub fn brute_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    let mut img = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(g: &Graph, i: usize, img: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = g.order();
        if i == n {
            out.push(img.clone());
            return;
        }
        for c in 0..n {
            if used[c] || g.degree(c) != g.degree(i) {
                continue;
            }
            if (0..i).all(|j| g.has_edge(i, j) == g.has_edge(c, img[j])) {
                img[i] = c;
                used[c] = true;
                go(g, i + 1, img, used, out);
                used[c] = false;
            }
        }
        img[i] = usize::MAX;
    }
    go(g, 0, &mut img, &mut used, &mut out);
    out
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return false;
    }
    let mut img = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(g: &Graph, h: &Graph, i: usize, img: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if i == g.order() {
            return true;
        }
        for c in 0..g.order() {
            if used[c] || g.degree(i) != h.degree(c) {
                continue;
            }
            if (0..i).all(|j| g.has_edge(i, j) == h.has_edge(c, img[j])) {
                img[i] = c;
                used[c] = true;
                if go(g, h, i + 1, img, used) {
                    return true;
                }
                used[c] = false;
            }
        }
        false
    }
    go(g, h, 0, &mut img, &mut used)
}

/// Distances from powers of `A + I`; `None` when unreachable.
pub fn distances_by_powers(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.order();
    let mut reach: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| u == v).collect()).collect();
    let mut dist: Vec<Vec<Option<u32>>> = (0..n)
        .map(|u| (0..n).map(|v| (u == v).then_some(0)).collect())
        .collect();
    for k in 1..n.max(1) as u32 {
        let next: Vec<Vec<bool>> = (0..n)
            .map(|u| {
                (0..n)
                    .map(|v| reach[u][v] || (0..n).any(|w| reach[u][w] && g.has_edge(w, v)))
                    .collect()
            })
            .collect();
        for u in 0..n {
            for v in 0..n {
                if next[u][v] && dist[u][v].is_none() {
                    dist[u][v] = Some(k);
                }
            }
        }
        reach = next;
    }
    dist
}

pub fn twins_by_distance(g: &Graph, u: usize, v: usize) -> bool {
    let d = distances_by_powers(g);
    (0..g.order()).filter(|&w| w != u && w != v).all(|w| d[u][w] == d[v][w])
}

/// Vertices `x` such that no automorphism fixing `x` sends `u` to `v`.
pub fn fixing_nbhd(n: usize, auts: &[Vec<usize>], u: usize, v: usize) -> Vec<usize> {
    (0..n)
        .filter(|&x| !auts.iter().any(|p| p[x] == x && p[u] == v))
        .collect()
}

/// Unordered pairs `u < v` with `v` in the orbit of `u`.
pub fn active_pairs(n: usize, auts: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if auts.iter().any(|p| p[u] == v) {
                out.push((u, v));
            }
        }
    }
    out
}

pub fn resolving_nbhd(g: &Graph, u: usize, v: usize) -> Vec<usize> {
    let d = distances_by_powers(g);
    (0..g.order()).filter(|&x| d[x][u] != d[x][v]).collect()
}

/// Rows of `B` computed from the definition.
pub fn fixing_rows(g: &Graph) -> Vec<Vec<usize>> {
    let auts = brute_automorphisms(g);
    active_pairs(g.order(), &auts)
        .into_iter()
        .map(|(u, v)| fixing_nbhd(g.order(), &auts, u, v))
        .collect()
}

/// Smallest `|S|` fixed pointwise only by the identity.
pub fn brute_fixing_number(n: usize, auts: &[Vec<usize>]) -> usize {
    (0u32..1 << n)
        .filter(|&s| {
            auts.iter()
                .all(|p| (0..n).all(|i| p[i] == i) || (0..n).any(|i| s >> i & 1 == 1 && p[i] != i))
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// Smallest vertex set meeting every row.
pub fn brute_min_cover(n: usize, rows: &[Vec<usize>]) -> usize {
    let masks: Vec<u32> = rows.iter().map(|r| r.iter().map(|&i| 1u32 << i).sum()).collect();
    (0u32..1 << n)
        .filter(|s| masks.iter().all(|m| m & s != 0))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

fn combinations(m: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..=m - (k - cur.len()) {
            cur.push(i);
            go(i + 1, m, k, cur, f);
            cur.pop();
        }
    }
    go(0, m, k, &mut Vec::new(), f);
}

fn solve_square(mut a: Vec<Vec<Small>>, mut b: Vec<Small>) -> Option<Vec<Small>> {
    let d = b.len();
    for c in 0..d {
        let p = (c..d).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        b.swap(c, p);
        for r in 0..d {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c] / a[c][c];
                for k in c..d {
                    let t = a[c][k] * f;
                    a[r][k] -= t;
                }
                let t = b[c] * f;
                b[r] -= t;
            }
        }
    }
    Some((0..d).map(|i| b[i] / a[i][i]).collect())
}

/// `min 1·x` subject to `x(r) ≥ 1` for every row and `x ≥ 0`, by
/// enumerating every basic solution.
pub fn lp_by_vertex_enumeration(rows: &[Vec<usize>]) -> Small {
    if rows.is_empty() {
        return Small::zero();
    }
    let mut rows: Vec<Vec<usize>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.sort_unstable();
            r.dedup();
            r
        })
        .collect();
    rows.sort();
    rows.dedup();
    let keep: Vec<Vec<usize>> = rows
        .iter()
        .filter(|r| !rows.iter().any(|s| s != *r && s.iter().all(|x| r.contains(x))))
        .cloned()
        .collect();
    let mut vars: Vec<usize> = keep.iter().flatten().copied().collect();
    vars.sort_unstable();
    vars.dedup();
    let d = vars.len();
    let idx = |v: usize| vars.binary_search(&v).unwrap();
    // constraint j: a_j · x >= b_j
    let mut cons: Vec<(Vec<Small>, Small)> = keep
        .iter()
        .map(|r| {
            let mut a = vec![Small::zero(); d];
            for &v in r {
                a[idx(v)] = Small::one();
            }
            (a, Small::one())
        })
        .collect();
    for i in 0..d {
        let mut a = vec![Small::zero(); d];
        a[i] = Small::one();
        cons.push((a, Small::zero()));
    }
    let mut best: Option<Small> = None;
    combinations(cons.len(), d, &mut |pick| {
        let a = pick.iter().map(|&j| cons[j].0.clone()).collect();
        let b = pick.iter().map(|&j| cons[j].1).collect();
        if let Some(x) = solve_square(a, b) {
            let feasible = cons.iter().all(|(a, b)| {
                let lhs: Small = a.iter().zip(&x).map(|(p, q)| p * q).sum();
                lhs >= *b
            });
            if feasible {
                let val: Small = x.iter().sum();
                if best.is_none_or(|b| val < b) {
                    best = Some(val);
                }
            }
        }
    });
    best.expect("a covering polyhedron has a vertex")
}

/// `fix_f(G)` computed entirely by the oracles above.
pub fn oracle_fix_f(g: &Graph) -> Rational {
    to_big(&lp_by_vertex_enumeration(&fixing_rows(g)))
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Arbitrary graphs on `1..=max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, mask)| graph_from_mask(n, mask))
}

/// Graphs with at least two vertices, biased towards symmetry by taking
/// the union of a random graph with its image under a reflection.
pub fn arb_symmetric_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, any::<u64>()).prop_map(|(n, mask)| {
        let g = graph_from_mask(n, mask);
        let mut edges = g.edges();
        for (u, v) in g.edges() {
            edges.push((n - 1 - u, n - 1 - v));
        }
        Graph::from_edge_list(n, &edges).unwrap()
    })
}
