//! Automorphism groups as stabilizer chains.
//!
//! [`automorphisms`] runs an individualization–refinement search that
//! yields generators together with a base; those seed a Schreier–Sims
//! construction, so orders and membership never require listing elements.

mod brute;
mod chain;
mod refine;
mod search;

pub use brute::{brute_force_automorphisms, BRUTE_FORCE_CAP};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;
use chain::StabChain;

/// A permutation group given by a base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    chain: StabChain,
}

/// `Γ(G)` for a graph.
pub fn automorphisms(g: &Graph) -> PermGroup {
    let found = search::search(g);
    let chain = StabChain::build(g.order(), &found.generators, &found.base);
    debug_assert_eq!(chain.order(), found.order());
    let group = PermGroup { chain };
    debug_assert!(group.generators().iter().all(|p| g.is_automorphism(p.images())));
    group
}

impl PermGroup {
    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup {
            chain: StabChain::build(degree, &[], &[]),
        }
    }

    /// The group generated by `gens`.
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<PermGroup> {
        if let Some(p) = gens.iter().find(|p| p.degree() != degree) {
            return Err(Error::precondition(format!(
                "generator of degree {} in a group of degree {degree}",
                p.degree()
            )));
        }
        Ok(PermGroup {
            chain: StabChain::build(degree, gens, &[]),
        })
    }

    pub fn degree(&self) -> usize {
        self.chain.n
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.chain.gens
    }

    /// Orbit lengths of the basic stabilizers, one per base point.
    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.chain.gens.is_empty()
    }

    pub fn order_is_one(&self) -> bool {
        self.order().is_one()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.chain.contains(p)
    }

    /// `O(u)`, sorted.
    pub fn orbit(&self, u: usize) -> Vec<usize> {
        let labels = self.orbit_labels();
        let mut out: Vec<usize> = (0..self.degree()).filter(|&v| labels[v] == labels[u]).collect();
        out.sort_unstable();
        out
    }

    /// For every point, the smallest point of its orbit.
    pub fn orbit_labels(&self) -> Vec<usize> {
        orbit_labels(self.degree(), &self.chain.gens)
    }

    /// All orbits, each sorted, ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let labels = self.orbit_labels();
        let mut slot = vec![usize::MAX; self.degree()];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for (v, &l) in labels.iter().enumerate() {
            if slot[l] == usize::MAX {
                slot[l] = out.len();
                out.push(Vec::new());
            }
            out[slot[l]].push(v);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_labels().iter().all(|&l| l == 0)
    }

    /// `Γ_S`: the subgroup fixing every point of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        for &x in points {
            if x >= self.degree() {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.degree(),
                });
            }
        }
        let mut prefix: Vec<usize> = Vec::new();
        for &x in points {
            if !prefix.contains(&x) {
                prefix.push(x);
            }
        }
        let k = prefix.len();
        prefix.extend(self.chain.base());
        let rebased = StabChain::build(self.degree(), &self.chain.gens, &prefix);
        debug_assert_eq!(rebased.order(), self.order());
        Ok(PermGroup {
            chain: rebased.suffix(k),
        })
    }

    /// `Γ_x`. Orbit–stabilizer is checked on the result.
    pub fn point_stabilizer(&self, x: usize) -> Result<PermGroup> {
        let stab = self.pointwise_stabilizer(&[x])?;
        assert_eq!(
            stab.order() * BigUint::from(self.orbit(x).len()),
            self.order(),
            "orbit-stabilizer violated"
        );
        Ok(stab)
    }

    /// `O_x(u)`: the orbit of `u` under `Γ_x`.
    pub fn stabilizer_orbit(&self, x: usize, u: usize) -> Result<Vec<usize>> {
        if u >= self.degree() {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                n: self.degree(),
            });
        }
        Ok(self.point_stabilizer(x)?.orbit(u))
    }

    /// A group element mapping `from` to `to`, if one exists.
    pub fn transporter(&self, from: usize, to: usize) -> Option<Permutation> {
        self.orbit_transversal(from).swap_remove(to)
    }

    /// For every point `p` in the orbit of `from`, an element mapping
    /// `from` to `p`; `None` outside the orbit.
    pub fn orbit_transversal(&self, from: usize) -> Vec<Option<Permutation>> {
        let n = self.degree();
        let mut rep: Vec<Option<Permutation>> = vec![None; n];
        rep[from] = Some(Permutation::identity(n));
        let mut queue = vec![from];
        let mut k = 0;
        while k < queue.len() {
            let p = queue[k];
            k += 1;
            for s in &self.chain.gens {
                let q = s.apply(p);
                if rep[q].is_none() {
                    rep[q] = Some(rep[p].as_ref().unwrap().then(s));
                    queue.push(q);
                }
            }
        }
        rep
    }

    /// Lists every element. Refuses groups larger than `cap`.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > BigUint::from(cap) {
            return Err(Error::CapExceeded {
                what: "group enumeration",
                size: usize::try_from(&order).unwrap_or(usize::MAX),
                cap,
            });
        }
        let mut elems = vec![Permutation::identity(self.degree())];
        for level in self.chain.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for &p in &level.orbit {
                let u = &level.trans[p].as_ref().unwrap().0;
                for e in &elems {
                    next.push(e.then(u));
                }
            }
            elems = next;
        }
        elems.sort();
        Ok(elems)
    }

    pub fn summary(&self) -> GroupSummary {
        GroupSummary {
            order: self.order().to_string(),
            generators: self.chain.gens.clone(),
        }
    }
}

/// JSON form: `{"order": "<decimal>", "generators": [[...], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub order: String,
    pub generators: Vec<Permutation>,
}

pub(crate) fn orbit_labels(n: usize, gens: &[Permutation]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for i in 0..n {
            let (a, b) = (find(&mut parent, i), find(&mut parent, g.apply(i)));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|i| find(&mut parent, i)).collect()
}
