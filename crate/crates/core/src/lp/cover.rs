//! Exact minimum hitting set by branch and bound over `u64` masks.

/// Minimum number of columns meeting every mask, with the lexicographically
/// earliest optimal set found by the search.
pub(crate) fn min_hitting_set(rows: &[u64]) -> (usize, u64) {
    if rows.is_empty() {
        return (0, 0);
    }
    let rows = reduce(rows);
    let greedy = greedy_cover(&rows);
    let mut search = Search {
        best: greedy.count_ones() as usize,
        best_set: greedy,
    };
    search.branch(0, 0, rows);
    (search.best, search.best_set)
}

/// Deduplicates and drops every row that contains another row.
fn reduce(rows: &[u64]) -> Vec<u64> {
    let mut sorted = rows.to_vec();
    sorted.sort_unstable_by_key(|m| (m.count_ones(), *m));
    sorted.dedup();
    let mut kept: Vec<u64> = Vec::new();
    for m in sorted {
        if !kept.iter().any(|&k| k & m == k) {
            kept.push(m);
        }
    }
    kept
}

fn greedy_cover(rows: &[u64]) -> u64 {
    let mut chosen = 0u64;
    let mut open: Vec<u64> = rows.to_vec();
    while !open.is_empty() {
        let mut counts = [0u32; 64];
        for &m in &open {
            let mut b = m;
            while b != 0 {
                counts[b.trailing_zeros() as usize] += 1;
                b &= b - 1;
            }
        }
        let (best, _) = counts
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
            .expect("64 columns");
        chosen |= 1 << best;
        open.retain(|&m| m >> best & 1 == 0);
    }
    chosen
}

struct Search {
    best: usize,
    best_set: u64,
}

impl Search {
    fn branch(&mut self, chosen: u64, mut excluded: u64, open: Vec<u64>) {
        let depth = chosen.count_ones() as usize;
        if open.is_empty() {
            if depth < self.best {
                self.best = depth;
                self.best_set = chosen;
            }
            return;
        }
        if depth + packing_bound(&open, excluded) >= self.best {
            return;
        }
        let row = open
            .iter()
            .map(|&m| m & !excluded)
            .min_by_key(|m| m.count_ones())
            .expect("non-empty");
        let mut b = row;
        while b != 0 {
            let e = b.trailing_zeros();
            b &= b - 1;
            let bit = 1u64 << e;
            let rest: Vec<u64> = open.iter().copied().filter(|&m| m & bit == 0).collect();
            self.branch(chosen | bit, excluded, rest);
            excluded |= bit;
        }
    }
}

/// Size of a greedily built family of pairwise disjoint open rows; every
/// cover needs a distinct column for each. Returns `usize::MAX / 2` when
/// some row has no usable column left.
fn packing_bound(open: &[u64], excluded: u64) -> usize {
    let mut avail: Vec<u64> = open.iter().map(|&m| m & !excluded).collect();
    if avail.contains(&0) {
        return usize::MAX / 2;
    }
    avail.sort_unstable_by_key(|m| m.count_ones());
    let mut used = 0u64;
    let mut count = 0;
    for m in avail {
        if m & used == 0 {
            used |= m;
            count += 1;
        }
    }
    count
}
