//! Simple undirected graphs on dense vertex indices `0..n`.

mod distance;
mod io;

pub use distance::{DistanceMatrix, UNREACHABLE};
pub use io::{GraphFile, GraphFormat};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// An immutable simple graph. Adjacency is kept both as sorted neighbour
/// lists (for iteration) and as bit rows (for O(1) membership).
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    rows: Vec<BitSet>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let mut rows = vec![BitSet::new(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        let adj = rows.iter().map(BitSet::to_vec).collect();
        Ok(Graph {
            n,
            adj,
            rows,
            name: None,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn neighbor_set(&self, u: usize) -> &BitSet {
        &self.rows[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        DistanceMatrix::new(self)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Distance twins: `d(u,w) = d(v,w)` for every `w` outside `{u, v}`.
    /// Unreachable counts as a distance value of its own.
    pub fn are_twins(&self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::precondition("twin test needs two distinct vertices"));
        }
        Ok(self.twins_with(&self.distance_matrix(), u, v))
    }

    pub(crate) fn twins_with(&self, d: &DistanceMatrix, u: usize, v: usize) -> bool {
        (0..self.n)
            .filter(|&w| w != u && w != v)
            .all(|w| d.raw(u, w) == d.raw(v, w))
    }

    /// Classes of the relation "equal or twins", each sorted, ordered by
    /// smallest member.
    pub fn twin_partition(&self) -> Vec<Vec<usize>> {
        let d = self.distance_matrix();
        let mut class_of = vec![usize::MAX; self.n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for u in 0..self.n {
            if class_of[u] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[u] = id;
            let mut class = vec![u];
            for v in u + 1..self.n {
                if class_of[v] == usize::MAX && self.twins_with(&d, u, v) {
                    class_of[v] = id;
                    class.push(v);
                }
            }
            classes.push(class);
        }
        for class in &classes {
            assert!(
                self.induces_clique_or_independent(class),
                "twin class {class:?} is neither complete nor null"
            );
            for (i, &a) in class.iter().enumerate() {
                for &b in &class[i + 1..] {
                    assert!(self.twins_with(&d, a, b), "twin relation not transitive");
                }
            }
        }
        classes
    }

    pub fn induces_clique_or_independent(&self, set: &[usize]) -> bool {
        let mut edges = 0usize;
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                if self.has_edge(a, b) {
                    edges += 1;
                }
            }
        }
        let k = set.len();
        edges == 0 || edges == k * (k - 1) / 2
    }

    /// The subgraph induced on `keep` (in the given order); vertex `i` of
    /// the result is `keep[i]`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            if pos[v] != usize::MAX {
                return Err(Error::precondition(format!("vertex {v} listed twice")));
            }
            pos[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX && i < pos[w] {
                    edges.push((i, pos[w]));
                }
            }
        }
        Graph::from_edge_list(keep.len(), &edges)
    }

    /// `G - v`. Returns the new graph and, for each of its vertices, the
    /// original label.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(Error::precondition("cannot delete the only vertex"));
        }
        let keep: Vec<usize> = (0..self.n).filter(|&w| w != v).collect();
        let g = self.induced_subgraph(&keep)?;
        Ok((g, keep))
    }

    /// Checks whether `perm` (as an image array) preserves adjacency and
    /// non-adjacency.
    pub fn is_automorphism(&self, images: &[usize]) -> bool {
        if images.len() != self.n {
            return false;
        }
        let mut hit = vec![false; self.n];
        for &x in images {
            if x >= self.n || std::mem::replace(&mut hit[x], true) {
                return false;
            }
        }
        (0..self.n).all(|u| {
            self.degree(u) == self.degree(images[u])
                && self.adj[u].iter().all(|&v| self.has_edge(images[u], images[v]))
        })
    }

    /// Degree sequence sorted in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn p4() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn star3() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let g = k3();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 3);
        assert!(g.has_edge(2, 0));
        let p = p4();
        assert_eq!(p.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let dup = Graph::from_edge_list(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.size(), 1);
    }

    #[test]
    fn edge_list_rejections() {
        assert!(matches!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(Graph::from_edge_list(0, &[]).is_err());
    }

    #[test]
    fn twins() {
        assert!(k3().are_twins(0, 1).unwrap());
        assert!(!p4().are_twins(0, 3).unwrap());
        assert!(c4().are_twins(0, 2).unwrap());
        assert!(!c4().are_twins(0, 1).unwrap());
        assert!(k3().are_twins(1, 1).is_err());
    }

    #[test]
    fn twin_partitions() {
        let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.twin_partition(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(p4().twin_partition(), vec![vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(star3().twin_partition(), vec![vec![0], vec![1, 2, 3]]);
    }

    #[test]
    fn vertex_deletion() {
        let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (g, map) = k4.delete_vertex(2).unwrap();
        assert_eq!(g, k3());
        assert_eq!(map, vec![0, 1, 3]);
        let (p3, _) = c4().delete_vertex(0).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        let (null3, _) = star3().delete_vertex(0).unwrap();
        assert_eq!((null3.order(), null3.size()), (3, 0));
        assert!(Graph::from_edge_list(1, &[]).unwrap().delete_vertex(0).is_err());
    }

    #[test]
    fn automorphism_check() {
        assert!(p4().is_automorphism(&[3, 2, 1, 0]));
        assert!(!p4().is_automorphism(&[1, 0, 2, 3]));
        assert!(!p4().is_automorphism(&[0, 0, 2, 3]));
    }
}
