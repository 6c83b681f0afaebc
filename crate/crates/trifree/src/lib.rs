//! Exact computational tools for extremal triangle-free graphs: compact
//! bitset graphs, graph6 interchange, canonical labeling, an exact
//! independent-set solver, linear invariants and stability tests, the
//! stitch-based family constructors, structural classification, and
//! isomorph-free exhaustive enumeration for small vertex counts.

pub mod alpha;
pub mod classify;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod iso;

pub use alpha::{alpha_at_most, count_maximum_independent_sets, independence_number, AlphaResult};
pub use graph::{CycleAnchor, Graph, GraphError, VertexSet, MAX_VERTICES};
pub use invariants::{q_value, t_value, LinearInvariant};
pub use iso::{are_isomorphic, canonical_form, isomorphism, CanonicalForm};
