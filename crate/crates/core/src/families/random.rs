//! Seeded random graphs for property tests and the verification suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_size, Fiber, FiberKind, GeneralizedLexicoSpec};
use crate::error::Result;
use crate::graph::Graph;

/// `G(n, p)`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_size("random graph", n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                e.push((a, b));
            }
        }
    }
    Ok(Graph::from_edge_list(n, &e)?.with_name(format!("G({n},{p},{seed})")))
}

fn tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if n <= 1 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    // decode a uniformly random Prüfer sequence
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut e = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        e.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    e.push((last[0], last[1]));
    e
}

/// A uniformly random labelled tree on `n` vertices.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    check_size("random tree", n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e = tree_edges(n, &mut rng);
    Ok(Graph::from_edge_list(n, &e)?.with_name(format!("T({n},{seed})")))
}

/// A random spanning tree plus each remaining edge with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_size("random graph", n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = tree_edges(n, &mut rng);
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                e.push((a, b));
            }
        }
    }
    Ok(Graph::from_edge_list(n, &e)?.with_name(format!("Gc({n},{p},{seed})")))
}

/// A random base on 2 to 4 vertices with null or complete fibers of
/// size 2 or 3.
pub fn random_gls_spec(seed: u64) -> Result<GeneralizedLexicoSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.random_range(2..=4);
    let mut e = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            if rng.random_bool(0.5) {
                e.push((a, b));
            }
        }
    }
    let base = Graph::from_edge_list(k, &e)?;
    let fibers = (0..k)
        .map(|_| Fiber {
            kind: if rng.random_bool(0.5) {
                FiberKind::Complete
            } else {
                FiberKind::Null
            },
            size: rng.random_range(2..=3),
        })
        .collect();
    Ok(GeneralizedLexicoSpec { base, fibers })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_well_formed() {
        assert_eq!(erdos_renyi(8, 0.4, 3).unwrap(), erdos_renyi(8, 0.4, 3).unwrap());
        for seed in 0..30 {
            let t = random_tree(9, seed).unwrap();
            assert_eq!(t.size(), 8);
            assert!(t.is_connected());
            assert!(random_connected(7, 0.3, seed).unwrap().is_connected());
            let spec = random_gls_spec(seed).unwrap();
            assert!(spec.fibers.iter().all(|f| (2..=3).contains(&f.size)));
        }
    }
}
