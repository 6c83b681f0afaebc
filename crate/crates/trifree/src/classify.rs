//! Recognition of the extremal classes: per-component membership in the
//! chain / bicycle / loop-chain / 13-vertex-circulant families, and the
//! resulting whole-graph classification with its consistency check
//! (t = 0 graphs decompose into bicycles and circulant copies; t = 1 graphs
//! of minimum degree at most 2 carry exactly one chain or loop-chain).

use serde_json::json;
use thiserror::Error;

use crate::families::{self, Attachment};
use crate::graph::Graph;
use crate::invariants;
use crate::iso;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("component recognition expects a nonempty graph")]
    EmptyGraph,
    #[error("component recognition expects a connected graph, got {0} components")]
    Disconnected(usize),
    #[error("classification expects a triangle-free graph")]
    HasTriangle,
}

/// What a connected component turned out to be.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentVerdict {
    Bicycle { k: usize },
    W13,
    Chain { k: usize },
    LoopChain { l: usize, m: usize, attachment: Attachment },
    Other,
}

impl ComponentVerdict {
    pub fn is_gamma_member(&self) -> bool {
        matches!(self, ComponentVerdict::Bicycle { .. } | ComponentVerdict::W13)
    }

    pub fn is_pendant_member(&self) -> bool {
        matches!(
            self,
            ComponentVerdict::Chain { .. } | ComponentVerdict::LoopChain { .. }
        )
    }
}

/// Verdict for one component plus the embedding data: `vertices[i]` is the
/// host-graph vertex behind component vertex `i`, and `witness[i]` (when the
/// verdict names a family) is the matching vertex of the canonical
/// constructor output.
#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub vertices: Vec<usize>,
    pub verdict: ComponentVerdict,
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphClass {
    Gamma,
    GammaPrime,
    Neither,
}

impl GraphClass {
    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Gamma => "Gamma",
            GraphClass::GammaPrime => "GammaPrime",
            GraphClass::Neither => "Neither",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub t: i64,
    pub delta: Option<usize>,
    pub class: GraphClass,
    pub components: Vec<ComponentReport>,
    /// False would be a counterexample to the classification theorem; it
    /// never happens for triangle-free inputs.
    pub theorem_consistent: bool,
}

impl ClassificationReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "t": self.t,
            "delta": self.delta,
            "class": self.class.name(),
            "components": self.components.iter().map(component_json).collect::<Vec<_>>(),
            "theorem_consistent": self.theorem_consistent,
        })
    }
}

fn component_json(c: &ComponentReport) -> serde_json::Value {
    let (verdict, params) = match &c.verdict {
        ComponentVerdict::Bicycle { k } => ("Bicycle", json!({ "k": k })),
        ComponentVerdict::W13 => ("W13", json!({})),
        ComponentVerdict::Chain { k } => ("Chain", json!({ "k": k })),
        ComponentVerdict::LoopChain { l, m, attachment } => (
            "LoopChain",
            json!({ "l": l, "m": m, "attachment": attachment.name() }),
        ),
        ComponentVerdict::Other => ("Other", json!({})),
    };
    json!({
        "verdict": verdict,
        "params": params,
        "vertices": c.vertices,
        "witness": c.witness,
    })
}

/// Recognizes a connected nonempty graph by constructing each size-feasible
/// family candidate and comparing canonical forms. Candidates are pruned by
/// (n mod 3, n, e) before any isomorphism work.
pub fn recognize_component(g: &Graph) -> Result<(ComponentVerdict, Option<Vec<usize>>), ClassifyError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(ClassifyError::EmptyGraph);
    }
    let comps = g.count_components();
    if comps != 1 {
        return Err(ClassifyError::Disconnected(comps));
    }
    let e = g.edge_count();
    let mut canon: Option<iso::CanonicalForm> = None;
    let try_candidate = |candidate: &Graph,
                             verdict: ComponentVerdict,
                             canon: &mut Option<iso::CanonicalForm>|
     -> Option<(ComponentVerdict, Option<Vec<usize>>)> {
        let mine = canon.get_or_insert_with(|| iso::canonical_form(g));
        let theirs = iso::canonical_form(candidate);
        if mine.certificate == theirs.certificate {
            // witness: through my canonical labels, back out of theirs
            let mut inv = vec![0usize; n];
            for (old, &new) in theirs.labeling.iter().enumerate() {
                inv[new] = old;
            }
            let witness: Vec<usize> = mine.labeling.iter().map(|&lab| inv[lab]).collect();
            Some((verdict, Some(witness)))
        } else {
            None
        }
    };

    if n == 13 && e == 26 {
        if let Some(hit) = try_candidate(&families::w13(), ComponentVerdict::W13, &mut canon) {
            return Ok(hit);
        }
    }
    if n % 3 == 0 && n >= 12 && e == 5 * (n / 3) {
        let k = n / 3;
        if let Some(hit) = try_candidate(
            &families::bicycle(k).expect("k >= 4"),
            ComponentVerdict::Bicycle { k },
            &mut canon,
        ) {
            return Ok(hit);
        }
    }
    if n % 3 == 2 && n >= 5 && e == 5 * ((n + 1) / 3) - 5 {
        let k = (n + 1) / 3;
        if let Some(hit) = try_candidate(
            &families::chain(k).expect("k >= 2"),
            ComponentVerdict::Chain { k },
            &mut canon,
        ) {
            return Ok(hit);
        }
    }
    if n % 3 == 0 && n >= 15 && e == 5 * (n / 3) + 1 {
        let s = n / 3;
        for l in 4..s {
            let m = s - l;
            for attachment in Attachment::ALL {
                let candidate =
                    families::loop_chain(l, m, attachment).expect("l >= 4 and m >= 1");
                if let Some(hit) = try_candidate(
                    &candidate,
                    ComponentVerdict::LoopChain { l, m, attachment },
                    &mut canon,
                ) {
                    return Ok(hit);
                }
            }
        }
    }
    Ok((ComponentVerdict::Other, None))
}

/// Splits a triangle-free graph into components, recognizes each, and
/// classifies the whole graph. Rejects graphs with triangles: the
/// classification statements presuppose triangle-freeness.
pub fn classify_graph(g: &Graph) -> Result<ClassificationReport, ClassifyError> {
    if !g.is_triangle_free() {
        return Err(ClassifyError::HasTriangle);
    }
    let mut components = Vec::new();
    for comp in g.components() {
        let (verdict, witness) = recognize_component(&comp.graph)?;
        components.push(ComponentReport {
            vertices: comp.vertices,
            verdict,
            witness,
        });
    }
    let t = invariants::t_value(g);
    let delta = g.min_degree();
    let gamma_count = components
        .iter()
        .filter(|c| c.verdict.is_gamma_member())
        .count();
    let pendant_count = components
        .iter()
        .filter(|c| c.verdict.is_pendant_member())
        .count();
    let class = if gamma_count == components.len() {
        GraphClass::Gamma
    } else if pendant_count == 1 && gamma_count == components.len() - 1 {
        GraphClass::GammaPrime
    } else {
        GraphClass::Neither
    };
    let low_delta = delta.is_some_and(|d| d <= 2);
    let theorem_consistent = (t != 0 || class == GraphClass::Gamma)
        && (t != 1 || !low_delta || class == GraphClass::GammaPrime);
    Ok(ClassificationReport {
        t,
        delta,
        class,
        components,
        theorem_consistent,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Corollary4Bound {
    pub value: i64,
    /// True when the bound is attained exactly (13k - 4 < 4n < 13k); for
    /// 4n > 13k it is only a lower bound.
    pub exact: bool,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Corollary4Error {
    #[error("the bound is stated for k >= 5, got {0}")]
    KTooSmall(i64),
    #[error("n = 3.25k is outside the bound's range")]
    OnTheBoundary,
    #[error("the bound requires n > 3.25k - 1")]
    NTooSmall,
}

/// The minimum edge count `6n - 13k + 1` of triangle-free graphs on `n`
/// vertices with independence number at most `k`, valid just above the
/// `n = 3.25k` threshold: exact for `3.25k - 1 < n < 3.25k`, a lower bound
/// for `n > 3.25k`.
pub fn corollary4_bound(k: i64, n: i64) -> Result<Corollary4Bound, Corollary4Error> {
    if k < 5 {
        return Err(Corollary4Error::KTooSmall(k));
    }
    if 4 * n == 13 * k {
        return Err(Corollary4Error::OnTheBoundary);
    }
    if 4 * n <= 13 * k - 4 {
        return Err(Corollary4Error::NTooSmall);
    }
    Ok(Corollary4Bound {
        value: 6 * n - 13 * k + 1,
        exact: 4 * n < 13 * k,
    })
}
