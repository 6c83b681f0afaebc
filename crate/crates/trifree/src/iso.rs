//! Canonical labeling and isomorphism testing by equitable degree
//! refinement plus backtracking, with orbit pruning from discovered
//! automorphisms. Intended for graphs of a few dozen vertices.

use crate::graph::Graph;

/// A canonically relabeled copy of a graph together with the relabeling that
/// produced it. Certificates of two graphs are equal iff the graphs are
/// isomorphic.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub graph: Graph,
    /// `labeling[old] = new`.
    pub labeling: Vec<usize>,
    pub certificate: Vec<u8>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let (rows, labeling) = canon_rows(g);
    CanonicalForm {
        certificate: certificate_bytes(g.vertex_count(), &rows),
        graph: Graph::from_rows(rows),
        labeling,
    }
}

/// Certificate bytes without materializing the relabeled graph.
pub fn certificate(g: &Graph) -> Vec<u8> {
    let (rows, _) = canon_rows(g);
    certificate_bytes(g.vertex_count(), &rows)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    isomorphism(a, b).is_some()
}

/// A vertex bijection `a -> b` inducing an edge bijection, if one exists.
pub fn isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let (rows_a, lab_a) = canon_rows(a);
    let (rows_b, lab_b) = canon_rows(b);
    if rows_a != rows_b {
        return None;
    }
    // map a through its canonical labels and back out of b's
    let mut inv_b = vec![0; b.vertex_count()];
    for (old, &new) in lab_b.iter().enumerate() {
        inv_b[new] = old;
    }
    Some(lab_a.iter().map(|&new| inv_b[new]).collect())
}

pub(crate) fn certificate_bytes(n: usize, rows: &[u64]) -> Vec<u8> {
    let mut out = Vec::with_capacity(1 + 8 * n);
    out.push(n as u8);
    for r in rows {
        out.extend_from_slice(&r.to_le_bytes());
    }
    out
}

/// Canonical adjacency rows and the labeling (`old -> new`) achieving them.
pub(crate) fn canon_rows(g: &Graph) -> (Vec<u64>, Vec<usize>) {
    let (rows, labeling, _) = canon_rows_seeded(g, None);
    (rows, labeling)
}

/// Canonical rows plus the cell index of each vertex in the equitable
/// refinement of the unit partition. Cells are unions of automorphism
/// orbits, so differing cell indices rule out orbit equivalence cheaply.
pub(crate) fn canon_rows_with_cells(g: &Graph) -> (Vec<u64>, Vec<usize>, Vec<u32>) {
    canon_rows_seeded(g, None)
}

/// Canonical rows of `g` with an initial vertex coloring; equal results for
/// two colorings iff some color-preserving automorphism links them.
pub(crate) fn canon_rows_colored(g: &Graph, colors: &[u32]) -> Vec<u64> {
    canon_rows_seeded(g, Some(colors)).0
}

fn canon_rows_seeded(g: &Graph, colors: Option<&[u32]>) -> (Vec<u64>, Vec<usize>, Vec<u32>) {
    let n = g.vertex_count();
    if n == 0 {
        return (Vec::new(), Vec::new(), Vec::new());
    }
    let mut part = match colors {
        Some(c) => Partition::from_colors(c),
        None => Partition::unit(n),
    };
    part.refine(g);
    let mut cell_ids = vec![0u32; n];
    let mut cell = 0u32;
    for i in 0..n {
        if i > 0 && part.starts[i] {
            cell += 1;
        }
        cell_ids[part.elems[i]] = cell;
    }
    let mut search = Search {
        g,
        n,
        best_rows: Vec::new(),
        best_labeling: Vec::new(),
        best_inverse: Vec::new(),
        have_best: false,
        auts: Vec::new(),
        path: Vec::new(),
    };
    search.descend(&part);
    (search.best_rows, search.best_labeling, cell_ids)
}

/// An ordered partition of `0..n`: `elems` lists the vertices cell by cell,
/// `starts[i]` marks the positions where a cell begins.
#[derive(Clone)]
struct Partition {
    elems: Vec<usize>,
    starts: Vec<bool>,
}

impl Partition {
    fn unit(n: usize) -> Partition {
        let mut starts = vec![false; n];
        starts[0] = true;
        Partition {
            elems: (0..n).collect(),
            starts,
        }
    }

    fn from_colors(colors: &[u32]) -> Partition {
        let n = colors.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (colors[v], v));
        let mut starts = vec![false; n];
        for i in 0..n {
            starts[i] = i == 0 || colors[order[i]] != colors[order[i - 1]];
        }
        Partition {
            elems: order,
            starts,
        }
    }

    fn cell_mask(&self, start: usize, len: usize) -> u64 {
        self.elems[start..start + len]
            .iter()
            .fold(0u64, |m, &v| m | 1 << v)
    }

    fn first_nonsingleton(&self) -> Option<(usize, usize)> {
        let n = self.elems.len();
        let mut start = 0;
        while start < n {
            let end = self.cell_end(start);
            if end - start > 1 {
                return Some((start, end - start));
            }
            start = end;
        }
        None
    }

    /// Equitable refinement: repeatedly split cells by neighbor counts into
    /// every other cell, ordering sub-cells by ascending count. The result
    /// depends only on the graph structure and the incoming partition, never
    /// on vertex numbering.
    fn refine(&mut self, g: &Graph) {
        let n = self.elems.len();
        let mut splitters: Vec<u64> = Vec::with_capacity(n);
        loop {
            let mut changed = false;
            // cell vertex sets are stable within a pass even as cells split
            splitters.clear();
            let mut start = 0;
            while start < n {
                let end = self.cell_end(start);
                splitters.push(self.cell_mask(start, end - start));
                start = end;
            }
            for i in 0..splitters.len() {
                let smask = splitters[i];
                let mut start = 0;
                while start < n {
                    let end = self.cell_end(start);
                    if end - start > 1 {
                        changed |= self.split_cell(g, start, end - start, smask);
                    }
                    start = end;
                }
            }
            if !changed {
                break;
            }
        }
    }

    fn cell_end(&self, start: usize) -> usize {
        let n = self.elems.len();
        let mut end = start + 1;
        while end < n && !self.starts[end] {
            end += 1;
        }
        end
    }

    fn split_cell(&mut self, g: &Graph, start: usize, len: usize, smask: u64) -> bool {
        let slice = &self.elems[start..start + len];
        let key = |v: usize| (g.rows()[v] & smask).count_ones();
        let first_key = key(slice[0]);
        if slice.iter().all(|&v| key(v) == first_key) {
            return false;
        }
        let mut keyed = [(0u32, 0u8); crate::graph::MAX_VERTICES];
        for (i, &v) in slice.iter().enumerate() {
            keyed[i] = (key(v), v as u8);
        }
        keyed[..len].sort_by_key(|&(k, _)| k); // stable, so ties keep their order
        for (i, &(k, v)) in keyed[..len].iter().enumerate() {
            self.elems[start + i] = v as usize;
            if i > 0 {
                self.starts[start + i] = k != keyed[i - 1].0;
            }
        }
        true
    }

    /// Splits `v` off at the front of its cell.
    fn individualize(&mut self, v: usize) {
        let pos = self.elems.iter().position(|&u| u == v).expect("vertex in partition");
        let mut cell_start = pos;
        while !self.starts[cell_start] {
            cell_start -= 1;
        }
        self.elems[pos] = self.elems[cell_start];
        self.elems[cell_start] = v;
        if cell_start + 1 < self.elems.len() {
            self.starts[cell_start + 1] = true;
        }
    }
}

struct Search<'g> {
    g: &'g Graph,
    n: usize,
    best_rows: Vec<u64>,
    best_labeling: Vec<usize>,
    best_inverse: Vec<usize>,
    have_best: bool,
    /// Discovered automorphisms, used to skip branches equivalent to an
    /// already-explored sibling.
    auts: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl Search<'_> {
    fn descend(&mut self, part: &Partition) {
        let Some((start, len)) = part.first_nonsingleton() else {
            self.leaf(part);
            return;
        };
        let mut candidates = part.elems[start..start + len].to_vec();
        candidates.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for v in candidates {
            if !explored.is_empty() && self.in_explored_orbit(&explored, v) {
                continue;
            }
            let mut child = part.clone();
            child.individualize(v);
            child.refine(self.g);
            self.path.push(v);
            self.descend(&child);
            self.path.pop();
            explored.push(v);
        }
    }

    /// Is `v` mapped onto an explored sibling by an automorphism fixing the
    /// current search path pointwise? Exploring it again would retrace an
    /// identical subtree.
    fn in_explored_orbit(&self, explored: &[usize], v: usize) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for aut in &self.auts {
            if self.path.iter().all(|&p| aut[p] == p) {
                any = true;
                for u in 0..self.n {
                    let (a, b) = (find(&mut parent, u), find(&mut parent, aut[u]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, part: &Partition) {
        let mut labeling = vec![0usize; self.n];
        for (new, &old) in part.elems.iter().enumerate() {
            labeling[old] = new;
        }
        let mut rows = vec![0u64; self.n];
        for old in 0..self.n {
            let mut m = self.g.rows()[old];
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                rows[labeling[old]] |= 1 << labeling[w];
            }
        }
        if !self.have_best || rows < self.best_rows {
            self.best_inverse = part.elems.clone();
            self.best_rows = rows;
            self.best_labeling = labeling;
            self.have_best = true;
        } else if rows == self.best_rows {
            // equal certificates expose an automorphism of g
            let aut: Vec<usize> = (0..self.n)
                .map(|u| self.best_inverse[labeling[u]])
                .collect();
            if aut.iter().enumerate().any(|(u, &img)| u != img) {
                self.auts.push(aut);
            }
        }
    }
}
