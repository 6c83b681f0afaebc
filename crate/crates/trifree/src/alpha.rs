//! Exact maximum-independent-set solving by branch and bound.
//!
//! Branching picks a maximum-degree vertex (lowest index on ties) and splits
//! into "exclude it" / "include it and drop its closed neighborhood".
//! Degree-0/1 vertices are taken greedily first, and subproblems are cut by
//! a greedy clique-cover bound. Witnesses are reproducible because every
//! choice is index-deterministic.

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaResult {
    pub alpha: usize,
    pub witness: VertexSet,
}

/// The independence number with a maximum independent set as witness.
pub fn independence_number(g: &Graph) -> AlphaResult {
    let mut solver = Solver {
        rows: g.rows(),
        best: 0,
        best_set: 0,
        target: usize::MAX,
    };
    solver.run(g.full_mask(), 0, 0);
    AlphaResult {
        alpha: solver.best,
        witness: VertexSet::from_bits(solver.best_set),
    }
}

pub fn alpha(g: &Graph) -> usize {
    independence_number(g).alpha
}

/// Decides `alpha(g) <= k`, stopping as soon as any independent set of size
/// `k + 1` turns up.
pub fn alpha_at_most(g: &Graph, k: usize) -> bool {
    if g.vertex_count() <= k {
        return true;
    }
    let mut solver = Solver {
        rows: g.rows(),
        best: 0,
        best_set: 0,
        target: k + 1,
    };
    !solver.run(g.full_mask(), 0, 0)
}

/// Number of independent sets of size exactly `alpha(g)`.
pub fn count_maximum_independent_sets(g: &Graph) -> u64 {
    let target = alpha(g);
    let counter = Counter {
        rows: g.rows(),
        target,
    };
    counter.count(g.full_mask(), 0)
}

struct Solver<'g> {
    rows: &'g [u64],
    best: usize,
    best_set: u64,
    /// Early-exit threshold; `usize::MAX` means solve to optimality.
    target: usize,
}

impl Solver<'_> {
    /// Returns true once a set of size >= target has been found.
    fn run(&mut self, mut rem: u64, mut cur_set: u64, mut cur_size: usize) -> bool {
        // take isolated and pendant vertices greedily, lowest index first
        loop {
            let mut taken = false;
            let mut m = rem;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                if (self.rows[v] & rem).count_ones() <= 1 {
                    cur_set |= 1 << v;
                    cur_size += 1;
                    rem &= !(self.rows[v] | 1 << v);
                    taken = true;
                    break;
                }
                m &= m - 1;
            }
            if !taken {
                break;
            }
        }
        if cur_size > self.best {
            self.best = cur_size;
            self.best_set = cur_set;
            if self.best >= self.target {
                return true;
            }
        }
        if rem == 0 {
            return false;
        }
        if cur_size + clique_cover_bound(self.rows, rem) <= self.best {
            return false;
        }
        let v = branch_vertex(self.rows, rem);
        if self.run(rem & !(self.rows[v] | 1 << v), cur_set | 1 << v, cur_size + 1) {
            return true;
        }
        self.run(rem & !(1 << v), cur_set, cur_size)
    }
}

struct Counter<'g> {
    rows: &'g [u64],
    target: usize,
}

impl Counter<'_> {
    fn count(&self, rem: u64, size: usize) -> u64 {
        if size + (rem.count_ones() as usize) < self.target {
            return 0;
        }
        if rem == 0 {
            return u64::from(size == self.target);
        }
        // isolated vertices belong to every maximum set
        let mut isolated = 0u64;
        let mut m = rem;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            if self.rows[v] & rem == 0 {
                isolated |= 1 << v;
            }
            m &= m - 1;
        }
        if isolated != 0 {
            return self.count(rem & !isolated, size + isolated.count_ones() as usize);
        }
        if size + clique_cover_bound(self.rows, rem) < self.target {
            return 0;
        }
        let v = branch_vertex(self.rows, rem);
        self.count(rem & !(self.rows[v] | 1 << v), size + 1) + self.count(rem & !(1 << v), size)
    }
}

fn branch_vertex(rows: &[u64], rem: u64) -> usize {
    let mut best_v = rem.trailing_zeros() as usize;
    let mut best_deg = (rows[best_v] & rem).count_ones();
    let mut m = rem & (rem - 1);
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        let d = (rows[v] & rem).count_ones();
        if d > best_deg {
            best_deg = d;
            best_v = v;
        }
        m &= m - 1;
    }
    best_v
}

/// Greedy clique cover of the subgraph induced on `rem`: the number of
/// cliques bounds the independence number from above.
fn clique_cover_bound(rows: &[u64], rem: u64) -> usize {
    let mut uncovered = rem;
    let mut cliques = 0;
    while uncovered != 0 {
        let v = uncovered.trailing_zeros() as usize;
        uncovered &= !(1u64 << v);
        cliques += 1;
        let mut common = rows[v] & uncovered;
        while common != 0 {
            let u = common.trailing_zeros() as usize;
            uncovered &= !(1u64 << u);
            common &= rows[u] & uncovered;
        }
    }
    cliques
}
