//! Linear graph invariants of the form `a*e - b*n + c*alpha`, destabilizing
//! vertex sets, s-stability, and edge criticality.

use serde_json::json;

use crate::alpha::{self, alpha_at_most};
use crate::graph::{Graph, VertexSet};
use crate::graph6;

/// An integer linear combination `a*e(G) - b*n(G) + c*alpha(G)`. Linear over
/// disjoint sums and zero on the empty graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearInvariant {
    pub edge_coeff: i64,
    pub vertex_coeff: i64,
    pub alpha_coeff: i64,
}

/// t = e - 6n + 13α; nonnegative on triangle-free graphs.
pub const T: LinearInvariant = LinearInvariant::new(1, 6, 13);
/// q = e - 5n + 10α; nonnegative on triangle-free graphs.
pub const Q: LinearInvariant = LinearInvariant::new(1, 5, 10);
/// 5e - 34n + 78α: the integer form of e - 6.8n + 15.6α.
pub const ELL_6_8_SCALED: LinearInvariant = LinearInvariant::new(5, 34, 78);
/// 2e - 16n + 39α: the integer form of e - 8n + 19.5α.
pub const ELL_8_SCALED: LinearInvariant = LinearInvariant::new(2, 16, 39);

impl LinearInvariant {
    pub const fn new(edge_coeff: i64, vertex_coeff: i64, alpha_coeff: i64) -> LinearInvariant {
        LinearInvariant {
            edge_coeff,
            vertex_coeff,
            alpha_coeff,
        }
    }

    pub fn value(&self, g: &Graph) -> i64 {
        self.value_from_parts(g.vertex_count(), g.edge_count(), alpha::alpha(g))
    }

    pub fn value_from_parts(&self, n: usize, e: usize, alpha: usize) -> i64 {
        self.edge_coeff * e as i64 - self.vertex_coeff * n as i64 + self.alpha_coeff * alpha as i64
    }
}

pub fn t_value(g: &Graph) -> i64 {
    T.value(g)
}

pub fn q_value(g: &Graph) -> i64 {
    Q.value(g)
}

pub fn ell_value(g: &Graph, inv: &LinearInvariant) -> i64 {
    inv.value(g)
}

/// Does removing `m` (as an induced-subgraph complement) lower the
/// independence number? The empty set never destabilizes: alpha cannot drop
/// below itself, in particular not below zero.
pub fn is_destabilizer(g: &Graph, m: VertexSet) -> bool {
    let a = alpha::alpha(g);
    if a == 0 {
        return false;
    }
    let keep = VertexSet::from_bits(g.full_mask() & !m.bits());
    let (h, _) = g.induced_subgraph(keep);
    alpha_at_most(&h, a - 1)
}

/// One destabilizing set in a catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DestabilizerEntry {
    pub vertices: VertexSet,
    pub independent: bool,
}

/// All inclusion-minimal destabilizing sets up to a size bound, in
/// deterministic (size, then lexicographic) order.
#[derive(Clone, Debug)]
pub struct DestabilizerCatalog {
    /// graph6 of the graph the catalog was computed for.
    pub graph: String,
    pub max_size: usize,
    pub sets: Vec<DestabilizerEntry>,
}

impl DestabilizerCatalog {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "graph": self.graph,
            "max_size": self.max_size,
            "sets": self.sets.iter().map(|s| s.vertices.to_vec()).collect::<Vec<_>>(),
        })
    }
}

/// Scans every vertex subset of size `1..=max_size`; keeps the destabilizing
/// ones whose one-element-removed subsets all fail to destabilize (which is
/// exactly inclusion-minimality, since destabilizing is preserved by
/// supersets).
pub fn minimal_destabilizers(g: &Graph, max_size: usize) -> DestabilizerCatalog {
    let graph = graph6::encode(g).expect("catalog graphs fit graph6");
    let a = alpha::alpha(g);
    let mut sets = Vec::new();
    if a > 0 {
        let destabilizes = |m: u64| {
            let keep = VertexSet::from_bits(g.full_mask() & !m);
            alpha_at_most(&g.induced_subgraph(keep).0, a - 1)
        };
        for size in 1..=max_size.min(g.vertex_count()) {
            for m in subsets_of_size(g.full_mask(), size) {
                if !destabilizes(m) {
                    continue;
                }
                let minimal = VertexSet::from_bits(m)
                    .iter()
                    .all(|v| !destabilizes(m & !(1 << v)));
                if minimal {
                    sets.push(DestabilizerEntry {
                        vertices: VertexSet::from_bits(m),
                        independent: g.is_independent_set(VertexSet::from_bits(m)),
                    });
                }
            }
        }
    }
    sets.sort_by_key(|e| (e.vertices.len(), e.vertices.to_vec()));
    DestabilizerCatalog {
        graph,
        max_size,
        sets,
    }
}

/// No destabilizer of size `<= s`.
pub fn is_s_stable(g: &Graph, s: usize) -> bool {
    let a = alpha::alpha(g);
    if a == 0 {
        return true;
    }
    let full = g.full_mask();
    for size in 1..=s.min(g.vertex_count()) {
        for m in subsets_of_size(full, size) {
            let keep = VertexSet::from_bits(full & !m);
            if alpha_at_most(&g.induced_subgraph(keep).0, a - 1) {
                return false;
            }
        }
    }
    true
}

/// s-stable, and additionally no independent destabilizing set of size
/// `s + 1`. The independent sets are not required to be minimal
/// destabilizers; any destabilizing independent (s+1)-set disqualifies.
pub fn is_strongly_s_stable(g: &Graph, s: usize) -> bool {
    if !is_s_stable(g, s) {
        return false;
    }
    let a = alpha::alpha(g);
    if a == 0 {
        return true;
    }
    let full = g.full_mask();
    let mut ok = true;
    for_each_independent_set_of_size(g, s + 1, &mut |m| {
        let keep = VertexSet::from_bits(full & !m);
        if alpha_at_most(&g.induced_subgraph(keep).0, a - 1) {
            ok = false;
        }
        ok // keep scanning only while no witness found
    });
    ok
}

/// Edges whose removal keeps the independence number unchanged.
pub fn redundant_edges(g: &Graph) -> Vec<(usize, usize)> {
    let a = alpha::alpha(g);
    g.edges()
        .into_iter()
        .filter(|&(u, v)| alpha_at_most(&g.without_edge(u, v), a))
        .collect()
}

/// Removal of any single edge increases the independence number. Edgeless
/// graphs are vacuously edge critical.
pub fn is_edge_critical(g: &Graph) -> bool {
    let a = alpha::alpha(g);
    g.edges()
        .into_iter()
        .all(|(u, v)| !alpha_at_most(&g.without_edge(u, v), a))
}

/// All size-`k` submasks of `mask`, ascending as bit patterns.
fn subsets_of_size(mask: u64, k: usize) -> impl Iterator<Item = u64> {
    let positions: Vec<usize> = VertexSet::from_bits(mask).to_vec();
    SubsetIter {
        positions,
        indices: (0..k).collect(),
        done: k > mask.count_ones() as usize,
    }
}

struct SubsetIter {
    positions: Vec<usize>,
    indices: Vec<usize>,
    done: bool,
}

impl Iterator for SubsetIter {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let out = self
            .indices
            .iter()
            .fold(0u64, |m, &i| m | 1 << self.positions[i]);
        // advance the combination (lexicographic on index vectors)
        let k = self.indices.len();
        let n = self.positions.len();
        if k == 0 {
            self.done = true;
            return Some(out);
        }
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.indices[i] + (k - i) < n + 0 {
                self.indices[i] += 1;
                for j in i + 1..k {
                    self.indices[j] = self.indices[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Calls `f` on every independent set of exactly `k` vertices; `f` returns
/// false to stop early.
fn for_each_independent_set_of_size(g: &Graph, k: usize, f: &mut impl FnMut(u64) -> bool) {
    fn recurse(
        g: &Graph,
        candidates: u64,
        chosen: u64,
        left: usize,
        f: &mut impl FnMut(u64) -> bool,
    ) -> bool {
        if left == 0 {
            return f(chosen);
        }
        if (candidates.count_ones() as usize) < left {
            return true;
        }
        let mut m = candidates;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if !recurse(g, m & !g.rows()[v], chosen | 1 << v, left - 1, f) {
                return false;
            }
        }
        true
    }
    recurse(g, g.full_mask(), 0, k, f);
}
