//! Exhaustive automorphism enumeration, used as an oracle for the
//! stabilizer-chain pipeline.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::perm::Permutation;

pub const BRUTE_FORCE_CAP: usize = 20;

/// Every automorphism of `g`, sorted. Backtracks over image assignments,
/// pruning on degree, sorted distance profile and pairwise distances.
pub fn brute_force_automorphisms(g: &Graph) -> Result<Vec<Permutation>> {
    let n = g.order();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::CapExceeded {
            what: "brute-force automorphism enumeration",
            size: n,
            cap: BRUTE_FORCE_CAP,
        });
    }
    let d = g.distance_matrix();
    let profile: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            let mut row = d.row(v).to_vec();
            row.sort_unstable();
            row
        })
        .collect();

    // visit order: BFS within each component so each vertex after the first
    // is adjacent to an earlier one
    let mut order = Vec::with_capacity(n);
    for comp in g.components() {
        let mut seen = vec![false; n];
        seen[comp[0]] = true;
        let start = order.len();
        order.push(comp[0]);
        let mut k = start;
        while k < order.len() {
            let u = order[k];
            k += 1;
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
        }
    }

    let mut state = Backtrack {
        g,
        d: &d,
        profile: &profile,
        order: &order,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        out: Vec::new(),
    };
    state.extend(0);
    let mut out = state.out;
    out.sort();
    Ok(out)
}

struct Backtrack<'a> {
    g: &'a Graph,
    d: &'a DistanceMatrix,
    profile: &'a [Vec<u32>],
    order: &'a [usize],
    image: Vec<usize>,
    used: Vec<bool>,
    out: Vec<Permutation>,
}

impl Backtrack<'_> {
    fn extend(&mut self, depth: usize) {
        if depth == self.order.len() {
            debug_assert!(self.g.is_automorphism(&self.image));
            self.out
                .push(Permutation::from_images(self.image.clone()).expect("bijection"));
            return;
        }
        let v = self.order[depth];
        for w in 0..self.g.order() {
            if self.used[w] || self.profile[v] != self.profile[w] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                let iu = self.image[u];
                self.d.raw(u, v) == self.d.raw(iu, w) && self.g.has_edge(u, v) == self.g.has_edge(iu, w)
            });
            if !consistent {
                continue;
            }
            self.image[v] = w;
            self.used[w] = true;
            self.extend(depth + 1);
            self.used[w] = false;
            self.image[v] = usize::MAX;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let auts = brute_force_automorphisms(&p3).unwrap();
        assert_eq!(auts.len(), 2);
        assert!(auts[0].is_identity());
        assert_eq!(auts[1].images(), &[2, 1, 0]);
        let null3 = Graph::from_edge_list(3, &[]).unwrap();
        assert_eq!(brute_force_automorphisms(&null3).unwrap().len(), 6);
    }

    #[test]
    fn grid_four_by_five() {
        let (p, q) = (4, 5);
        let mut edges = Vec::new();
        for i in 0..p {
            for j in 0..q {
                if i + 1 < p {
                    edges.push((i * q + j, (i + 1) * q + j));
                }
                if j + 1 < q {
                    edges.push((i * q + j, i * q + j + 1));
                }
            }
        }
        let g = Graph::from_edge_list(p * q, &edges).unwrap();
        assert_eq!(brute_force_automorphisms(&g).unwrap().len(), 4);
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::from_edge_list(21, &[]).unwrap();
        assert!(matches!(
            brute_force_automorphisms(&g),
            Err(Error::CapExceeded { size: 21, .. })
        ));
    }
}
