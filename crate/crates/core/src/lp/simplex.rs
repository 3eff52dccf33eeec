//! Exact primal simplex on the packing dual of a 0/1 covering program.
//!
//! For `min 1·x` subject to `Bx ≥ 1, x ≥ 0` the dual is
//! `max 1·y` subject to `Bᵀy ≤ 1, y ≥ 0`, whose slack basis is feasible,
//! so no phase one is needed. The optimal primal `x` is read off the
//! reduced costs of the slack columns.
//!
//! The tableau is kept in integers: every row carries its own positive
//! denominator and is divided by the gcd of its entries after each pivot,
//! so no rational normalisation happens inside the inner loop.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Entering/leaving rule. Both terminate on degenerate problems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// Most negative reduced cost enters; the leaving row is the
    /// lexicographic minimum of `(rhs, slack block) / pivot column`.
    #[default]
    Lexicographic,
    /// Smallest-index entering and leaving variables.
    Bland,
}

pub(crate) struct PackingOptimum {
    pub value: BigRational,
    /// Covering solution, one entry per column.
    pub x: Vec<BigRational>,
    /// Packing solution, one entry per row.
    pub y: Vec<BigRational>,
    pub pivots: usize,
}

struct Tableau {
    /// `m + 1` rows; the last one is the objective.
    num: Vec<Vec<BigInt>>,
    den: Vec<BigInt>,
    basis: Vec<usize>,
    r: usize,
    m: usize,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.r + self.m
    }

    fn obj(&self) -> usize {
        self.m
    }

    fn entering(&self, rule: PivotRule) -> Option<usize> {
        let z = &self.num[self.obj()];
        let cols = 0..self.r + self.m;
        match rule {
            PivotRule::Bland => cols.into_iter().find(|&c| z[c].is_negative()),
            PivotRule::Lexicographic => {
                let mut best: Option<usize> = None;
                for c in cols {
                    if z[c].is_negative() && best.is_none_or(|b| z[c] < z[b]) {
                        best = Some(c);
                    }
                }
                best
            }
        }
    }

    /// Compares `t[a][k] / t[a][q]` with `t[b][k] / t[b][q]`, both pivot
    /// entries positive; row denominators cancel.
    fn cmp_ratio(&self, a: usize, b: usize, k: usize, q: usize) -> Ordering {
        let lhs = &self.num[a][k] * &self.num[b][q];
        let rhs = &self.num[b][k] * &self.num[a][q];
        lhs.cmp(&rhs)
    }

    fn leaving(&self, q: usize, rule: PivotRule) -> Option<usize> {
        let rhs = self.rhs();
        let mut best: Option<usize> = None;
        for i in 0..self.m {
            if !self.num[i][q].is_positive() {
                continue;
            }
            let Some(b) = best else {
                best = Some(i);
                continue;
            };
            let better = match rule {
                PivotRule::Bland => match self.cmp_ratio(i, b, rhs, q) {
                    Ordering::Less => true,
                    Ordering::Equal => self.basis[i] < self.basis[b],
                    Ordering::Greater => false,
                },
                PivotRule::Lexicographic => {
                    let mut ord = self.cmp_ratio(i, b, rhs, q);
                    let mut k = self.r;
                    while ord == Ordering::Equal && k < self.r + self.m {
                        ord = self.cmp_ratio(i, b, k, q);
                        k += 1;
                    }
                    debug_assert_ne!(ord, Ordering::Equal, "lexicographic rows are distinct");
                    ord == Ordering::Less
                }
            };
            if better {
                best = Some(i);
            }
        }
        best
    }

    fn pivot(&mut self, p: usize, q: usize) {
        let piv = self.num[p][q].clone();
        self.den[p] = piv.clone();
        normalise(&mut self.num[p], &mut self.den[p]);
        let (piv, prow) = (self.num[p][q].clone(), self.num[p].clone());
        for i in 0..=self.m {
            if i == p || self.num[i][q].is_zero() {
                continue;
            }
            let c = self.num[i][q].clone();
            for (t, pv) in self.num[i].iter_mut().zip(&prow) {
                let scaled = &*t * &piv;
                *t = if pv.is_zero() { scaled } else { scaled - &c * pv };
            }
            self.den[i] = &self.den[i] * &piv;
            normalise(&mut self.num[i], &mut self.den[i]);
        }
        self.basis[p] = q;
    }
}

fn normalise(row: &mut [BigInt], den: &mut BigInt) {
    let mut g = den.clone();
    for t in row.iter() {
        if g.is_one() {
            return;
        }
        if !t.is_zero() {
            g = g.gcd(t);
        }
    }
    if g.is_one() {
        return;
    }
    for t in row.iter_mut() {
        if !t.is_zero() {
            *t = &*t / &g;
        }
    }
    *den = &*den / &g;
}

/// Solves `max Σ y_i` subject to `Σ_{i : j ∈ rows[i]} y_i ≤ 1` for every
/// column `j < m`, `y ≥ 0`.
pub(crate) fn solve_packing(m: usize, rows: &[Vec<usize>], rule: PivotRule) -> PackingOptimum {
    let r = rows.len();
    let width = r + m + 1;
    let mut num = vec![vec![BigInt::zero(); width]; m + 1];
    for (i, row) in rows.iter().enumerate() {
        for &j in row {
            num[j][i] = BigInt::one();
        }
        num[m][i] = -BigInt::one();
    }
    for (j, line) in num.iter_mut().enumerate().take(m) {
        line[r + j] = BigInt::one();
        line[r + m] = BigInt::one();
    }
    let mut t = Tableau {
        num,
        den: vec![BigInt::one(); m + 1],
        basis: (r..r + m).collect(),
        r,
        m,
    };

    let mut pivots = 0;
    while let Some(q) = t.entering(rule) {
        let p = t
            .leaving(q, rule)
            .expect("packing program is bounded by the covering constraints");
        t.pivot(p, q);
        pivots += 1;
    }

    let obj = t.obj();
    let zden = &t.den[obj];
    let value = BigRational::new(t.num[obj][t.rhs()].clone(), zden.clone());
    let x = (0..m)
        .map(|j| BigRational::new(t.num[obj][r + j].clone(), zden.clone()))
        .collect();
    let mut y = vec![BigRational::zero(); r];
    for (p, &b) in t.basis.iter().enumerate() {
        if b < r {
            y[b] = BigRational::new(t.num[p][t.rhs()].clone(), t.den[p].clone());
        }
    }
    PackingOptimum { value, x, y, pivots }
}
