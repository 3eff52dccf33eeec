//! Ordered partitions and equitable refinement.
//!
//! Every choice made here depends only on cell positions and neighbour
//! counts, never on vertex labels, so refinement commutes with graph
//! automorphisms and the returned trace hash is an invariant of the node.

use std::collections::VecDeque;

use crate::graph::Graph;

#[derive(Clone, Debug)]
pub(crate) struct Partition {
    pub lab: Vec<usize>,
    pos: Vec<usize>,
    /// Start of the cell containing each vertex.
    cell: Vec<usize>,
    /// Exclusive end, valid at cell starts.
    end: Vec<usize>,
    cells: usize,
}

const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h ^ x).wrapping_mul(FNV_PRIME)
}

impl Partition {
    pub fn unit(n: usize) -> Partition {
        let mut end = vec![0; n];
        if n > 0 {
            end[0] = n;
        }
        Partition {
            lab: (0..n).collect(),
            pos: (0..n).collect(),
            cell: vec![0; n],
            end,
            cells: usize::from(n > 0),
        }
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    pub fn cell_members(&self, start: usize) -> &[usize] {
        &self.lab[start..self.end[start]]
    }

    /// The first non-singleton cell of minimum size.
    pub fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.lab.len() {
            let size = self.end[s] - s;
            if size > 1 && best.is_none_or(|(_, b)| size < b) {
                best = Some((s, size));
            }
            s = self.end[s];
        }
        best.map(|(s, _)| s)
    }

    /// Splits `v` off the front of its cell; returns the new singleton's start.
    pub fn individualize(&mut self, v: usize) -> usize {
        let s = self.cell[v];
        let e = self.end[s];
        if e - s == 1 {
            return s;
        }
        let p = self.pos[v];
        let w = self.lab[s];
        self.lab.swap(s, p);
        self.pos[v] = s;
        self.pos[w] = p;
        self.end[s] = s + 1;
        self.end[s + 1] = e;
        for i in s + 1..e {
            self.cell[self.lab[i]] = s + 1;
        }
        self.cells += 1;
        s
    }

    /// Refines to the coarsest equitable partition finer than `self`,
    /// starting from the given splitter cells. Returns the trace hash.
    pub fn refine(&mut self, g: &Graph, splitters: &[usize]) -> u64 {
        let n = self.lab.len();
        let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
        let mut count = vec![0u32; n];
        let mut in_queue = vec![false; n];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &s in splitters {
            if !in_queue[s] {
                in_queue[s] = true;
                queue.push_back(s);
            }
        }
        let mut touched: Vec<usize> = Vec::new();
        let mut touched_cells: Vec<usize> = Vec::new();
        let mut starts: Vec<usize> = Vec::new();

        while let Some(w) = queue.pop_front() {
            in_queue[w] = false;
            hash = mix(hash, w as u64);
            for idx in w..self.end[w] {
                let x = self.lab[idx];
                for &y in g.neighbors(x) {
                    if count[y] == 0 {
                        touched.push(y);
                    }
                    count[y] += 1;
                }
            }
            touched_cells.clear();
            touched_cells.extend(touched.iter().map(|&y| self.cell[y]));
            touched_cells.sort_unstable();
            touched_cells.dedup();

            for &c in &touched_cells {
                let e = self.end[c];
                hash = mix(hash, ((c as u64) << 32) | (e - c) as u64);
                if e - c == 1 {
                    hash = mix(hash, count[self.lab[c]] as u64);
                    continue;
                }
                self.lab[c..e].sort_unstable_by_key(|&v| count[v]);
                for i in c..e {
                    self.pos[self.lab[i]] = i;
                }
                starts.clear();
                starts.push(c);
                for i in c + 1..e {
                    if count[self.lab[i]] != count[self.lab[i - 1]] {
                        starts.push(i);
                    }
                }
                for (k, &s) in starts.iter().enumerate() {
                    let se = starts.get(k + 1).copied().unwrap_or(e);
                    hash = mix(hash, ((count[self.lab[s]] as u64) << 32) | (se - s) as u64);
                }
                if starts.len() == 1 {
                    continue;
                }
                let mut largest = 0;
                for (k, &s) in starts.iter().enumerate() {
                    let se = starts.get(k + 1).copied().unwrap_or(e);
                    self.end[s] = se;
                    for i in s..se {
                        self.cell[self.lab[i]] = s;
                    }
                    let lsize = starts.get(largest + 1).copied().unwrap_or(e) - starts[largest];
                    if se - s > lsize {
                        largest = k;
                    }
                }
                self.cells += starts.len() - 1;
                let keep_all = in_queue[c];
                for (k, &s) in starts.iter().enumerate() {
                    if (keep_all || k != largest) && !in_queue[s] {
                        in_queue[s] = true;
                        queue.push_back(s);
                    }
                }
            }
            for &y in &touched {
                count[y] = 0;
            }
            touched.clear();
        }
        mix(hash, self.cells as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_split_and_equitable() {
        // star K_{1,3}: centre separated from leaves
        let g = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let mut p = Partition::unit(4);
        p.refine(&g, &[0]);
        assert_eq!(p.cells, 2);
        assert_eq!(p.cell_members(0), &[1, 2, 3]);
        assert_eq!(p.cell_members(3), &[0]);
    }

    #[test]
    fn path_is_split_by_distance_from_end() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let mut p = Partition::unit(5);
        p.refine(&g, &[0]);
        assert_eq!(p.cells, 3);
        let s = p.individualize(0);
        p.refine(&g, &[s]);
        assert!(p.is_discrete());
    }

    #[test]
    fn traces_agree_on_symmetric_nodes() {
        let g = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let mut root = Partition::unit(6);
        root.refine(&g, &[0]);
        let hashes: Vec<u64> = (0..6)
            .map(|v| {
                let mut p = root.clone();
                let s = p.individualize(v);
                p.refine(&g, &[s])
            })
            .collect();
        assert!(hashes.windows(2).all(|w| w[0] == w[1]));
    }
}
