//! Deterministic Schreier–Sims.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    /// Indices into `StabChain::gens` of strong generators that fix every
    /// earlier base point.
    pub gen_ids: Vec<usize>,
    pub orbit: Vec<usize>,
    /// `trans[p] = (u, u⁻¹)` with `u(base) = p`, for `p` in the orbit.
    pub trans: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn new(n: usize, base: usize) -> Level {
        let mut trans = vec![None; n];
        trans[base] = Some((Permutation::identity(n), Permutation::identity(n)));
        Level {
            base,
            gen_ids: Vec::new(),
            orbit: vec![base],
            trans,
        }
    }
}

/// Base and strong generating set with one transversal per base point.
#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    pub n: usize,
    pub gens: Vec<Permutation>,
    pub levels: Vec<Level>,
}

impl StabChain {
    /// Builds a stabilizer chain for `<gens>` whose base starts with
    /// `base_prefix` (duplicates dropped); further base points are added
    /// as needed.
    pub fn build(n: usize, gens: &[Permutation], base_prefix: &[usize]) -> StabChain {
        let mut chain = StabChain {
            n,
            gens: Vec::new(),
            levels: Vec::new(),
        };
        let mut seen = vec![false; n];
        for &b in base_prefix {
            if !std::mem::replace(&mut seen[b], true) {
                chain.levels.push(Level::new(n, b));
            }
        }
        for g in gens {
            let (_, h) = chain.sift(g.clone(), 0);
            if !h.is_identity() {
                chain.insert(h);
            }
        }
        chain.complete();
        chain
    }

    /// Strips `g` through levels `from..`, returning the level where it
    /// left the transversals and the residue.
    pub fn sift(&self, mut g: Permutation, from: usize) -> (usize, Permutation) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let p = g.apply(level.base);
            match &level.trans[p] {
                None => return (l, g),
                Some((_, u_inv)) => g = g.then(u_inv),
            }
        }
        (self.levels.len(), g)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.n && self.sift(g.clone(), 0).1.is_identity()
    }

    /// Adds a non-identity strong generator and returns the level it was
    /// placed on.
    fn insert(&mut self, h: Permutation) -> usize {
        debug_assert!(!h.is_identity());
        let j = self
            .levels
            .iter()
            .position(|l| !h.fixes(l.base))
            .unwrap_or_else(|| {
                let b = h.first_moved_point().expect("non-identity");
                self.levels.push(Level::new(self.n, b));
                self.levels.len() - 1
            });
        let id = self.gens.len();
        self.gens.push(h);
        for l in 0..=j {
            self.levels[l].gen_ids.push(id);
            self.extend_orbit(l);
        }
        j
    }

    fn extend_orbit(&mut self, l: usize) {
        let level = &mut self.levels[l];
        let mut k = 0;
        while k < level.orbit.len() {
            let p = level.orbit[k];
            for &gid in &level.gen_ids {
                let s = &self.gens[gid];
                let q = s.apply(p);
                if level.trans[q].is_none() {
                    let u = level.trans[p].as_ref().unwrap().0.then(s);
                    let u_inv = u.inverse();
                    level.trans[q] = Some((u, u_inv));
                    level.orbit.push(q);
                }
            }
            k += 1;
        }
    }

    /// Runs the Schreier generator test level by level, from the deepest
    /// level up, until every Schreier generator sifts to the identity.
    fn complete(&mut self) {
        let mut checked: HashSet<(usize, usize, usize)> = HashSet::new();
        let mut i = self.levels.len();
        while i > 0 {
            let l = i - 1;
            let mut residue = None;
            'scan: for k in 0..self.levels[l].orbit.len() {
                let p = self.levels[l].orbit[k];
                for gi in 0..self.levels[l].gen_ids.len() {
                    let gid = self.levels[l].gen_ids[gi];
                    if !checked.insert((l, p, gid)) {
                        continue;
                    }
                    let level = &self.levels[l];
                    let s = &self.gens[gid];
                    let q = s.apply(p);
                    let u_p = &level.trans[p].as_ref().unwrap().0;
                    let u_q_inv = &level.trans[q].as_ref().unwrap().1;
                    let schreier = u_p.then(s).then(u_q_inv);
                    let (_, h) = self.sift(schreier, l + 1);
                    if !h.is_identity() {
                        residue = Some(h);
                        break 'scan;
                    }
                }
            }
            match residue {
                Some(h) => i = self.insert(h) + 1,
                None => i -= 1,
            }
        }
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// The chain of the subgroup fixing the first `k` base points.
    pub fn suffix(&self, k: usize) -> StabChain {
        if k >= self.levels.len() {
            return StabChain {
                n: self.n,
                gens: Vec::new(),
                levels: Vec::new(),
            };
        }
        let mut keep: Vec<usize> = self.levels[k].gen_ids.clone();
        keep.sort_unstable();
        let mut remap = vec![usize::MAX; self.gens.len()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let levels = self.levels[k..]
            .iter()
            .map(|l| Level {
                base: l.base,
                gen_ids: l.gen_ids.iter().map(|&g| remap[g]).collect(),
                orbit: l.orbit.clone(),
                trans: l.trans.clone(),
            })
            .collect();
        StabChain {
            n: self.n,
            gens: keep.iter().map(|&g| self.gens[g].clone()).collect(),
            levels,
        }
    }
}
