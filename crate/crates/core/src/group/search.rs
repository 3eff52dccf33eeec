//! Individualization–refinement search for automorphism generators.
//!
//! The leftmost path of the search tree fixes a base `b_0, …, b_{k-1}`.
//! Levels are processed bottom-up: at level `i` every vertex `v` of the
//! target cell that is not yet known to share an orbit with `b_i` under the
//! generators found so far is tested by exploring the subtree below
//! `(b_0, …, b_{i-1}, v)` for a leaf equivalent to the first leaf. The
//! generators found at levels `≥ i` then generate the pointwise stabilizer
//! of `b_0, …, b_{i-1}`, so the whole set is a strong generating set.

use num_bigint::BigUint;

use super::refine::Partition;
use crate::graph::Graph;
use crate::perm::Permutation;

pub(crate) struct SearchResult {
    pub base: Vec<usize>,
    pub generators: Vec<Permutation>,
    pub orbit_sizes: Vec<usize>,
}

impl SearchResult {
    pub fn order(&self) -> BigUint {
        self.orbit_sizes
            .iter()
            .fold(BigUint::from(1u32), |acc, &s| acc * BigUint::from(s))
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (big, small) = if self.size[a] >= self.size[b] { (a, b) } else { (b, a) };
            self.parent[small] = big;
            self.size[big] += self.size[small];
        }
    }
}

struct Searcher<'g> {
    g: &'g Graph,
    /// Node partitions along the first path; `path[k]` is the leaf.
    path: Vec<Partition>,
    hashes: Vec<u64>,
    first_leaf: Vec<usize>,
}

impl Searcher<'_> {
    fn child(&self, node: &Partition, v: usize) -> (Partition, u64) {
        let mut c = node.clone();
        let s = c.individualize(v);
        let h = c.refine(self.g, &[s]);
        (c, h)
    }

    /// Looks below `node` (at depth `level`) for a leaf whose labeling,
    /// compared with the first leaf, is an automorphism.
    fn dive(&self, node: Partition, level: usize) -> Option<Permutation> {
        if node.is_discrete() {
            let mut images = vec![0; node.lab.len()];
            for (p, &x) in self.first_leaf.iter().enumerate() {
                images[x] = node.lab[p];
            }
            return self
                .g
                .is_automorphism(&images)
                .then(|| Permutation::from_images(images).expect("bijection"));
        }
        let t = node.target_cell()?;
        let members = node.cell_members(t).to_vec();
        for w in members {
            let (c, h) = self.child(&node, w);
            if h != self.hashes[level + 1] {
                continue;
            }
            if let Some(p) = self.dive(c, level + 1) {
                return Some(p);
            }
        }
        None
    }
}

pub(crate) fn search(g: &Graph) -> SearchResult {
    let n = g.order();
    let mut root = Partition::unit(n);
    let root_hash = root.refine(g, &[0]);

    let mut path = vec![root];
    let mut hashes = vec![root_hash];
    let mut targets: Vec<Vec<usize>> = Vec::new();
    let mut base = Vec::new();
    while let Some(t) = path.last().unwrap().target_cell() {
        let node = path.last().unwrap();
        let members = node.cell_members(t).to_vec();
        let b = members[0];
        let mut c = node.clone();
        let s = c.individualize(b);
        let h = c.refine(g, &[s]);
        targets.push(members);
        base.push(b);
        path.push(c);
        hashes.push(h);
    }
    let first_leaf = path.last().unwrap().lab.clone();
    let searcher = Searcher {
        g,
        path,
        hashes,
        first_leaf,
    };

    let mut generators: Vec<Permutation> = Vec::new();
    let mut uf = UnionFind::new(n);
    let mut orbit_sizes = vec![1; base.len()];
    for level in (0..base.len()).rev() {
        let b = base[level];
        let mut failed: Vec<usize> = Vec::new();
        for &v in &targets[level] {
            if uf.find(v) == uf.find(b) {
                continue;
            }
            let fv = uf.find(v);
            if failed.iter().any(|&f| uf.find(f) == fv) {
                continue;
            }
            let (c, h) = searcher.child(&searcher.path[level], v);
            let found = if h == searcher.hashes[level + 1] {
                searcher.dive(c, level + 1)
            } else {
                None
            };
            match found {
                Some(p) => {
                    for x in 0..n {
                        uf.union(x, p.apply(x));
                    }
                    generators.push(p);
                }
                None => failed.push(v),
            }
        }
        let rb = uf.find(b);
        orbit_sizes[level] = targets[level].iter().filter(|&&v| uf.find(v) == rb).count();
    }
    SearchResult {
        base,
        generators,
        orbit_sizes,
    }
}
