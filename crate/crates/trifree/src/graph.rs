//! Immutable bitset-backed simple graphs and the structural queries the rest
//! of the crate builds on: degrees, balls, girth, short-cycle counts,
//! components, induced subgraphs.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Hard cap on vertex counts; one adjacency row is a single `u64` word.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("at most {MAX_VERTICES} vertices are supported, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set {0} is not independent")]
    NotIndependent(VertexSet),
    #[error("vertex set must be nonempty")]
    EmptySet,
}

/// A set of vertices, packed into one machine word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1 << v);
    }

    #[must_use]
    pub fn with(self, v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | 1 << v)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending vertex indices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = BitIter;
    fn into_iter(self) -> BitIter {
        BitIter(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Where a cycle count is anchored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleAnchor {
    /// Count every cycle of the given length.
    Free,
    /// Only cycles passing through this vertex.
    Vertex(usize),
    /// Only cycles using this edge.
    Edge(usize, usize),
}

/// An immutable simple undirected graph on vertices `0..n`, `n <= 64`.
///
/// The adjacency relation is stored as one bitmask row per vertex, so
/// membership tests and neighbor-set intersections are single word
/// operations. All operations are read-only; "mutations" build new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

/// One connected component, relabeled to `0..n` by ascending original index.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: Graph,
    /// `vertices[new] = old`: map back into the host graph.
    pub vertices: Vec<usize>,
}

impl Graph {
    /// The edgeless graph on `n` vertices; `empty(0)` is the empty graph.
    pub fn edgeless(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Graph {
            n,
            rows: vec![0; n],
        }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Graph::edgeless(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u,
                    vertex_count: n,
                });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    vertex_count: n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.rows[u] |= 1 << v;
            g.rows[v] |= 1 << u;
        }
        Ok(g)
    }

    pub(crate) fn from_rows(rows: Vec<u64>) -> Graph {
        let n = rows.len();
        debug_assert!(n <= MAX_VERTICES);
        debug_assert!((0..n).all(|v| rows[v] >> v & 1 == 0), "self-loop");
        debug_assert!(
            (0..n).all(|v| rows[v].count_ones() as usize
                == (0..n).filter(|&u| rows[u] >> v & 1 != 0).count()),
            "asymmetric adjacency"
        );
        Graph { n, rows }
    }

    /// New graph with one extra vertex adjacent to exactly `neighbors`.
    pub(crate) fn extend_with(&self, neighbors: u64) -> Graph {
        debug_assert!(self.n < MAX_VERTICES);
        debug_assert_eq!(neighbors & !self.full_mask(), 0);
        let mut rows = Vec::with_capacity(self.n + 1);
        rows.extend_from_slice(&self.rows);
        let newbit = 1u64 << self.n;
        let mut m = neighbors;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            rows[v] |= newbit;
            m &= m - 1;
        }
        rows.push(neighbors);
        Graph {
            n: self.n + 1,
            rows,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub(crate) fn full_mask(&self) -> u64 {
        VertexSet::full(self.n).bits()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 != 0
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut m = self.rows[u] & !VertexSet::full(u + 1).bits();
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                out.push((u, v));
                m &= m - 1;
            }
        }
        out
    }

    /// The neighbor set of `v`.
    pub fn link(&self, v: usize) -> VertexSet {
        assert!(v < self.n, "vertex {v} out of range");
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        assert!(v < self.n, "vertex {v} out of range");
        self.rows[v].count_ones() as usize
    }

    /// Sum of the degrees of the neighbors of `v`.
    pub fn second_valency(&self, v: usize) -> usize {
        self.link(v).iter().map(|w| self.degree(w)).sum()
    }

    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for v in 0..self.n {
            *hist.entry(self.degree(v)).or_insert(0) += 1;
        }
        hist
    }

    /// Minimum degree; `None` for the graph on zero vertices.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// `true` iff no vertex of `s` is adjacent to another vertex of `s`.
    pub fn is_independent_set(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.rows[v] & s.bits() == 0)
    }

    /// BFS distance, `None` when `u` and `v` are in different components.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        assert!(u < self.n && v < self.n, "vertex out of range");
        let mut seen = 1u64 << u;
        let mut frontier = seen;
        let mut d = 0;
        loop {
            if frontier >> v & 1 != 0 {
                return Some(d);
            }
            let mut next = 0u64;
            let mut m = frontier;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                next |= self.rows[w];
                m &= m - 1;
            }
            next &= !seen;
            if next == 0 {
                return None;
            }
            seen |= next;
            frontier = next;
            d += 1;
        }
    }

    /// Union of the closed radius-`d` neighborhoods of the vertices of `s`.
    pub fn ball(&self, s: VertexSet, d: usize) -> VertexSet {
        debug_assert!(s.bits() & !self.full_mask() == 0);
        let mut reach = s.bits();
        for _ in 0..d {
            let mut next = reach;
            let mut m = reach;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                next |= self.rows[w];
                m &= m - 1;
            }
            if next == reach {
                break;
            }
            reach = next;
        }
        VertexSet(reach)
    }

    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            let mut m = self.rows[u] & !VertexSet::full(u + 1).bits();
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                if self.rows[u] & self.rows[v] != 0 {
                    return false;
                }
                m &= m - 1;
            }
        }
        true
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = Vec::with_capacity(self.n);
        for root in 0..self.n {
            dist.fill(usize::MAX);
            queue.clear();
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.push(root);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                if let Some(b) = best {
                    // No shorter closure can be found deeper than b/2.
                    if 2 * dist[u] + 1 >= b {
                        break;
                    }
                }
                let mut m = self.rows[u];
                while m != 0 {
                    let w = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push(w);
                    } else if parent[u] != w {
                        let cand = dist[u] + dist[w] + 1;
                        if best.map_or(true, |b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        best
    }

    /// Exact count of distinct cycle subgraphs of `length` (>= 3) containing
    /// the anchor. Each cycle is counted once regardless of traversal.
    pub fn count_cycles(&self, length: usize, anchor: CycleAnchor) -> u64 {
        assert!(length >= 3, "cycles have length at least 3");
        match anchor {
            CycleAnchor::Vertex(v) => assert!(v < self.n, "anchor vertex out of range"),
            CycleAnchor::Edge(u, v) => {
                assert!(u < self.n && v < self.n, "anchor edge out of range")
            }
            CycleAnchor::Free => {}
        }
        let mut count = 0;
        self.for_each_cycle(length, |path| {
            let hit = match anchor {
                CycleAnchor::Free => true,
                CycleAnchor::Vertex(v) => path.contains(&v),
                CycleAnchor::Edge(u, v) => {
                    let mut found = false;
                    for i in 0..path.len() {
                        let a = path[i];
                        let b = path[(i + 1) % path.len()];
                        if (a, b) == (u, v) || (a, b) == (v, u) {
                            found = true;
                            break;
                        }
                    }
                    found
                }
            };
            if hit {
                count += 1;
            }
        });
        count
    }

    /// Visits each cycle of the given length exactly once, as the vertex
    /// sequence whose first entry is the cycle minimum and whose second
    /// entry is smaller than its last.
    fn for_each_cycle(&self, length: usize, mut f: impl FnMut(&[usize])) {
        if length > self.n {
            return;
        }
        let mut path = Vec::with_capacity(length);
        for start in 0..self.n {
            path.push(start);
            self.cycle_dfs(start, length, 1u64 << start, &mut path, &mut f);
            path.pop();
        }
    }

    fn cycle_dfs(
        &self,
        start: usize,
        length: usize,
        on_path: u64,
        path: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        let last = *path.last().unwrap();
        if path.len() == length {
            if self.rows[last] >> start & 1 != 0 && path[1] < path[length - 1] {
                f(path);
            }
            return;
        }
        // only vertices above the start can extend, so the minimum is fixed
        let above_start = !VertexSet::full(start + 1).bits();
        let mut cand = self.rows[last] & above_start & !on_path;
        if path.len() == length - 1 {
            cand &= self.rows[start];
        }
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            path.push(v);
            self.cycle_dfs(start, length, on_path | 1 << v, path, f);
            path.pop();
        }
    }

    pub fn count_components(&self) -> usize {
        self.component_masks().len()
    }

    /// Vertex masks of the components, ordered by smallest member.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut masks = Vec::new();
        let mut unseen = self.full_mask();
        while unseen != 0 {
            let v = unseen.trailing_zeros() as usize;
            let comp = self.ball(VertexSet::singleton(v), self.n).bits();
            masks.push(comp);
            unseen &= !comp;
        }
        masks
    }

    pub fn components(&self) -> Vec<Component> {
        self.component_masks()
            .into_iter()
            .map(|m| {
                let (graph, vertices) = self.induced_subgraph(VertexSet(m));
                Component { graph, vertices }
            })
            .collect()
    }

    /// Disjoint union; the vertices of `other` are relabeled after `self`'s.
    pub fn disjoint_sum(&self, other: &Graph) -> Graph {
        assert!(
            self.n + other.n <= MAX_VERTICES,
            "sum exceeds {MAX_VERTICES} vertices"
        );
        let mut rows = Vec::with_capacity(self.n + other.n);
        rows.extend_from_slice(&self.rows);
        rows.extend(other.rows.iter().map(|r| r << self.n));
        Graph {
            n: self.n + other.n,
            rows,
        }
    }

    /// Subgraph induced on `w`, relabeled by ascending original index.
    /// Returns the new graph and the map `new -> old`.
    pub fn induced_subgraph(&self, w: VertexSet) -> (Graph, Vec<usize>) {
        debug_assert!(w.bits() & !self.full_mask() == 0);
        let vertices = w.to_vec();
        let mut g = Graph::edgeless(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.rows[i] |= 1 << j;
                    g.rows[j] |= 1 << i;
                }
            }
        }
        (g, vertices)
    }

    /// Deletes the closed neighborhood of the independent set `s`, i.e.
    /// returns the subgraph induced on the complement of `ball(s, 1)`.
    pub fn delete_closed_neighborhood(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptySet);
        }
        if let Some(v) = VertexSet(s.bits() & !self.full_mask()).min() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.n,
            });
        }
        if !self.is_independent_set(s) {
            return Err(GraphError::NotIndependent(s));
        }
        let keep = VertexSet(self.full_mask() & !self.ball(s, 1).bits());
        Ok(self.induced_subgraph(keep).0)
    }

    /// Copy without the edge `{u, v}`.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u < self.n && v < self.n, "vertex out of range");
        let mut rows = self.rows.clone();
        rows[u] &= !(1u64 << v);
        rows[v] &= !(1u64 << u);
        Graph { n: self.n, rows }
    }

    /// Relabels vertices: `perm[old] = new`. `perm` must be a permutation.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            let mut m = self.rows[u];
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                rows[perm[u]] |= 1 << perm[v];
            }
        }
        Graph { n: self.n, rows }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn empty_graph() {
        let g = Graph::from_edge_list(0, &[]).unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.count_components(), 0);
        assert_eq!(g.girth(), None);
        assert!(g.is_triangle_free());
    }

    #[test]
    fn cycle_construction() {
        let g = c5();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
        for v in 0..5 {
            assert_eq!(g.degree(v), 2);
            assert_eq!(g.second_valency(v), 4);
        }
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 3,
                vertex_count: 3
            })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
    }

    #[test]
    fn edge_count_is_half_degree_sum() {
        let g = c5();
        let degsum: usize = g.vertices().map(|v| g.degree(v)).sum();
        assert_eq!(g.edge_count() * 2, degsum);
    }

    #[test]
    fn distance_and_ball() {
        let g = c5();
        assert_eq!(g.distance(0, 2), Some(2));
        assert_eq!(g.distance(0, 0), Some(0));
        assert_eq!(g.ball(VertexSet::singleton(0), 1).len(), 3);
        let two = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.distance(0, 3), None);
    }

    #[test]
    fn girth_cases() {
        assert_eq!(c5().girth(), Some(5));
        let k3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(k3.girth(), Some(3));
        assert!(!k3.is_triangle_free());
        let path = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.girth(), None);
        let c6 = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
            .unwrap();
        assert_eq!(c6.girth(), Some(6));
        // two cycles sharing a path: girth is the short one
        let theta = Graph::from_edge_list(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)],
        )
        .unwrap();
        assert_eq!(theta.girth(), Some(3));
    }

    #[test]
    fn count_cycles_basics() {
        let g = c5();
        assert_eq!(g.count_cycles(5, CycleAnchor::Free), 1);
        assert_eq!(g.count_cycles(4, CycleAnchor::Free), 0);
        assert_eq!(g.count_cycles(5, CycleAnchor::Vertex(3)), 1);
        assert_eq!(g.count_cycles(5, CycleAnchor::Edge(0, 4)), 1);
        assert_eq!(g.count_cycles(5, CycleAnchor::Edge(0, 2)), 0);
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.count_cycles(4, CycleAnchor::Free), 1);
        let k23 = Graph::from_edge_list(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
            .unwrap();
        assert_eq!(k23.count_cycles(4, CycleAnchor::Free), 3);
        assert_eq!(k23.count_cycles(4, CycleAnchor::Vertex(0)), 3);
        assert_eq!(k23.count_cycles(4, CycleAnchor::Vertex(2)), 2);
    }

    #[test]
    fn anchored_cycle_counts_sum_to_length_times_total() {
        for g in [
            c5(),
            Graph::from_edge_list(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap(),
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
                .unwrap(),
        ] {
            for len in 4..=6 {
                let total = g.count_cycles(len, CycleAnchor::Free);
                let by_vertex: u64 = g
                    .vertices()
                    .map(|v| g.count_cycles(len, CycleAnchor::Vertex(v)))
                    .sum();
                assert_eq!(by_vertex, len as u64 * total);
            }
        }
    }

    #[test]
    fn components_and_sum() {
        let g = c5().disjoint_sum(&c5());
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.count_components(), 2);
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(comps[1].vertices, vec![5, 6, 7, 8, 9]);
        assert_eq!(comps[1].graph.edge_count(), 5);
    }

    #[test]
    fn induced_subgraph_cases() {
        let g = c5();
        let (p4, map) = g.induced_subgraph(VertexSet::from_iter([0, 1, 2, 3]));
        assert_eq!(p4.vertex_count(), 4);
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(map, vec![0, 1, 2, 3]);
        let (e, _) = g.induced_subgraph(VertexSet::EMPTY);
        assert_eq!(e.vertex_count(), 0);
    }

    #[test]
    fn delete_closed_neighborhood_on_c5() {
        let g = c5();
        let h = g.delete_closed_neighborhood(VertexSet::singleton(0)).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(
            g.delete_closed_neighborhood(VertexSet::EMPTY),
            Err(GraphError::EmptySet)
        );
        let adj = VertexSet::from_iter([0, 1]);
        assert_eq!(
            g.delete_closed_neighborhood(adj),
            Err(GraphError::NotIndependent(adj))
        );
    }

    #[test]
    fn degree_histogram_and_min_degree() {
        let g = c5();
        assert_eq!(g.degree_histogram(), BTreeMap::from([(2, 5)]));
        assert_eq!(g.min_degree(), Some(2));
        assert_eq!(Graph::edgeless(0).min_degree(), None);
        let hist = g.degree_histogram();
        assert_eq!(hist.values().sum::<usize>(), g.vertex_count());
    }

    #[test]
    fn permuted_preserves_structure() {
        let g = c5();
        let p = g.permuted(&[2, 0, 3, 1, 4]);
        assert_eq!(p.edge_count(), 5);
        assert_eq!(p.degree_histogram(), g.degree_histogram());
    }
}
