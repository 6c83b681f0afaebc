//! Deterministic constructors for the extremal families (chains, bicycles,
//! loop-chains, the 13-vertex circulant) and the 2-stitch extension step
//! that generates the chain-like ones.
//!
//! Every constructor fixes an explicit labeling so repeated runs (and their
//! graph6 encodings) are byte-identical; the families themselves are only
//! defined up to isomorphism.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::invariants;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{what} requires {name} >= {min}, got {got}")]
    ParameterRange {
        what: &'static str,
        name: &'static str,
        min: usize,
        got: usize,
    },
    #[error("stitch base parts overlap")]
    PartsOverlap,
    #[error("stitch base part {0} is not independent")]
    PartNotIndependent(VertexSet),
    #[error("stitch base {0} does not destabilize the host graph")]
    NotDestabilizer(VertexSet),
    #[error("stitch base {0} is not a minimal destabilizer")]
    NotMinimalDestabilizer(VertexSet),
    #[error("host graph is not edge critical")]
    NotEdgeCritical,
    #[error("link of vertex {0} is not independent")]
    LinkNotIndependent(usize),
}

/// The three shapes a loop-chain can be attached at: a trivalent's ball
/// (a claw), an induced 4-path on the outer cycle, or an induced 4-cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Attachment {
    Star13,
    Path4,
    Cycle4,
}

impl Attachment {
    pub const ALL: [Attachment; 3] = [Attachment::Star13, Attachment::Path4, Attachment::Cycle4];

    pub fn name(self) -> &'static str {
        match self {
            Attachment::Star13 => "star",
            Attachment::Path4 => "path",
            Attachment::Cycle4 => "cycle",
        }
    }

    pub fn parse(s: &str) -> Option<Attachment> {
        match s {
            "star" => Some(Attachment::Star13),
            "path" => Some(Attachment::Path4),
            "cycle" => Some(Attachment::Cycle4),
            _ => None,
        }
    }
}

/// A bipartitioned vertex set serving as the base of a 2-stitch. The
/// bipartition is carried explicitly: for a disconnected bipartite base it
/// is not unique, and different splits give non-isomorphic stitches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StitchBase {
    pub part_one: VertexSet,
    pub part_two: VertexSet,
}

impl StitchBase {
    pub fn new(part_one: VertexSet, part_two: VertexSet) -> StitchBase {
        StitchBase { part_one, part_two }
    }

    pub fn union(&self) -> VertexSet {
        self.part_one.union(self.part_two)
    }
}

/// Outcome of a 2-stitch: the extended graph plus the three added vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StitchResult {
    pub graph: Graph,
    /// The new bivalent vertex.
    pub apex: usize,
    /// The apex's two neighbors; `joiners.0` covers `part_one`,
    /// `joiners.1` covers `part_two`.
    pub joiners: (usize, usize),
}

/// Validation level for [`stitch2_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StitchValidation {
    /// Only structural checks (disjoint, independent parts).
    Skip,
    /// Also require the base to destabilize the host (one alpha solve).
    Destabilizer,
    /// Also require the base to be a minimal destabilizer.
    MinimalDestabilizer,
}

/// Appends a joiner over each part and an apex over the joiners. Preserves
/// triangle-freeness (the parts are independent) and raises the
/// independence number by exactly one (the base destabilizes the host).
pub fn stitch2(g: &Graph, base: &StitchBase) -> Result<StitchResult, FamilyError> {
    stitch2_with(g, base, StitchValidation::Destabilizer)
}

pub fn stitch2_with(
    g: &Graph,
    base: &StitchBase,
    validation: StitchValidation,
) -> Result<StitchResult, FamilyError> {
    if !base.part_one.intersection(base.part_two).is_empty() {
        return Err(FamilyError::PartsOverlap);
    }
    for part in [base.part_one, base.part_two] {
        if !g.is_independent_set(part) {
            return Err(FamilyError::PartNotIndependent(part));
        }
    }
    match validation {
        StitchValidation::Skip => {}
        StitchValidation::Destabilizer => {
            if !invariants::is_destabilizer(g, base.union()) {
                return Err(FamilyError::NotDestabilizer(base.union()));
            }
        }
        StitchValidation::MinimalDestabilizer => {
            let m = base.union();
            if !invariants::is_destabilizer(g, m) {
                return Err(FamilyError::NotDestabilizer(m));
            }
            for v in m.iter() {
                let mut smaller = m;
                smaller.remove(v);
                if invariants::is_destabilizer(g, smaller) {
                    return Err(FamilyError::NotMinimalDestabilizer(m));
                }
            }
        }
    }
    Ok(stitch2_unchecked(g, base))
}

fn stitch2_unchecked(g: &Graph, base: &StitchBase) -> StitchResult {
    let joiner_one = g.vertex_count();
    let joiner_two = joiner_one + 1;
    let apex = joiner_one + 2;
    let graph = g
        .extend_with(base.part_one.bits())
        .extend_with(base.part_two.bits())
        .extend_with(1 << joiner_one | 1 << joiner_two);
    StitchResult {
        graph,
        apex,
        joiners: (joiner_one, joiner_two),
    }
}

/// The 2-stitch based at a vertex of an edge-critical graph: the base is
/// the closed ball `B(v; 1)`, split into the link versus the center.
pub fn stitch2_at_vertex(g: &Graph, v: usize) -> Result<StitchResult, FamilyError> {
    let base = ball_base(g, v)?;
    if !invariants::is_edge_critical(g) {
        return Err(FamilyError::NotEdgeCritical);
    }
    // B(v;1) destabilizes any graph, so no further alpha check is needed
    Ok(stitch2_unchecked(g, &base))
}

fn ball_base(g: &Graph, v: usize) -> Result<StitchBase, FamilyError> {
    let link = g.link(v);
    if !g.is_independent_set(link) {
        return Err(FamilyError::LinkNotIndependent(v));
    }
    Ok(StitchBase::new(link, VertexSet::singleton(v)))
}

fn stitch_at_vertex_unchecked(g: &Graph, v: usize) -> Result<StitchResult, FamilyError> {
    let base = ball_base(g, v)?;
    Ok(stitch2_unchecked(g, &base))
}

/// The chain on `3k - 1` vertices: a 5-cycle extended by `k - 2` stitches,
/// each based at the lowest-index bivalent vertex.
pub fn chain(k: usize) -> Result<Graph, FamilyError> {
    if k < 2 {
        return Err(FamilyError::ParameterRange {
            what: "chain",
            name: "k",
            min: 2,
            got: k,
        });
    }
    let mut g = cycle(5).expect("5-cycle");
    for _ in 2..k {
        let bivalent = g
            .vertices()
            .find(|&v| g.degree(v) == 2)
            .expect("chains always keep bivalent vertices");
        g = stitch_at_vertex_unchecked(&g, bivalent)?.graph;
    }
    Ok(g)
}

/// The bicycle on `3k` vertices: an outer `2k`-cycle `0..2k` and an inner
/// `k`-cycle `2k..3k`, with spokes joining each inner vertex to two outer
/// ones two steps apart.
pub fn bicycle(k: usize) -> Result<Graph, FamilyError> {
    if k < 4 {
        return Err(FamilyError::ParameterRange {
            what: "bicycle",
            name: "k",
            min: 4,
            got: k,
        });
    }
    let mut edges = Vec::with_capacity(5 * k);
    for j in 0..2 * k {
        edges.push((j, (j + 1) % (2 * k)));
    }
    for j in 0..k {
        edges.push((2 * k + j, 2 * k + (j + 1) % k));
    }
    for i in 1..=k {
        edges.push((bicycle_outer(k, 2 * i as isize - 2), bicycle_inner(k, i)));
        edges.push((bicycle_outer(k, 2 * i as isize + 1), bicycle_inner(k, i)));
    }
    Ok(Graph::from_edge_list(3 * k, &edges).expect("bicycle edge list is valid"))
}

/// Index of the 1-based outer vertex `d_j`, reduced modulo `2k`.
pub fn bicycle_outer(k: usize, j: isize) -> usize {
    (j - 1).rem_euclid(2 * k as isize) as usize
}

/// Index of the 1-based inner vertex `e_j`, reduced modulo `k`.
pub fn bicycle_inner(k: usize, j: usize) -> usize {
    2 * k + (j - 1) % k
}

/// The circulant graph on GF(13) with connection set {±1, ±5}: 4-regular,
/// triangle-free, independence number 4.
pub fn w13() -> Graph {
    let edges: Vec<_> = (0..13)
        .flat_map(|x| [(x, (x + 1) % 13), (x, (x + 5) % 13)])
        .collect();
    Graph::from_edge_list(13, &edges).expect("circulant edge list is valid")
}

/// A bicycle with a pending chain of `m` stitches attached at a size-four
/// destabilizer of the given shape (anchored at the first outer vertex);
/// each later stitch is based at the previous apex.
pub fn loop_chain(l: usize, m: usize, attachment: Attachment) -> Result<Graph, FamilyError> {
    if l < 4 {
        return Err(FamilyError::ParameterRange {
            what: "loop-chain",
            name: "l",
            min: 4,
            got: l,
        });
    }
    if m < 1 {
        return Err(FamilyError::ParameterRange {
            what: "loop-chain",
            name: "m",
            min: 1,
            got: m,
        });
    }
    let host = bicycle(l)?;
    let base = loop_chain_base(&host, l, attachment);
    let mut stitch = stitch2_unchecked(&host, &base);
    for _ in 1..m {
        stitch = stitch_at_vertex_unchecked(&stitch.graph, stitch.apex)?;
    }
    Ok(stitch.graph)
}

fn loop_chain_base(host: &Graph, l: usize, attachment: Attachment) -> StitchBase {
    match attachment {
        // ball of the first outer vertex, link versus center
        Attachment::Star13 => StitchBase::new(host.link(0), VertexSet::singleton(0)),
        // outer path d1-d2-d3-d4, split into alternating pairs
        Attachment::Path4 => StitchBase::new(
            VertexSet::from_iter([bicycle_outer(l, 1), bicycle_outer(l, 3)]),
            VertexSet::from_iter([bicycle_outer(l, 2), bicycle_outer(l, 4)]),
        ),
        // induced square d2-d3-e1-e2, split into its diagonals
        Attachment::Cycle4 => StitchBase::new(
            VertexSet::from_iter([bicycle_outer(l, 2), bicycle_inner(l, 1)]),
            VertexSet::from_iter([bicycle_outer(l, 3), bicycle_inner(l, 2)]),
        ),
    }
}

/// The path on `i >= 1` vertices (so `path(2)` is a single edge).
pub fn path(i: usize) -> Result<Graph, FamilyError> {
    if i < 1 {
        return Err(FamilyError::ParameterRange {
            what: "path",
            name: "i",
            min: 1,
            got: i,
        });
    }
    let edges: Vec<_> = (1..i).map(|v| (v - 1, v)).collect();
    Ok(Graph::from_edge_list(i, &edges).expect("path edge list is valid"))
}

pub fn cycle(i: usize) -> Result<Graph, FamilyError> {
    if i < 3 {
        return Err(FamilyError::ParameterRange {
            what: "cycle",
            name: "i",
            min: 3,
            got: i,
        });
    }
    let edges: Vec<_> = (0..i).map(|v| (v, (v + 1) % i)).collect();
    Ok(Graph::from_edge_list(i, &edges).expect("cycle edge list is valid"))
}

/// Complete bipartite graph with parts `0..i` and `i..i+j`.
pub fn complete_bipartite(i: usize, j: usize) -> Result<Graph, FamilyError> {
    if i < 1 || j < 1 {
        return Err(FamilyError::ParameterRange {
            what: "complete bipartite graph",
            name: "part size",
            min: 1,
            got: i.min(j),
        });
    }
    let mut edges = Vec::with_capacity(i * j);
    for u in 0..i {
        for v in i..i + j {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edge_list(i + j, &edges).expect("bipartite edge list is valid"))
}

/// The star with `i` leaves around center 0.
pub fn star(i: usize) -> Result<Graph, FamilyError> {
    complete_bipartite(1, i)
}
