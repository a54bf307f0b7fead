//! Outcomes of statement checkers.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::graph::{Vertex, VertexSet};
use crate::matching::Matching;

/// The statements the harness can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatementId {
    ThmIsolating,
    LemmaMatchingCut,
    LemmaIndependentEdges,
    ThmKAndOne,
    LemmaTwoComponents,
    LemmaKAndTwo,
    ThmKcutStructure,
    ThmBothComplete,
    PropComponentBound,
    FavaronCutvertex,
    #[serde(rename = "favaron_2cut")]
    Favaron2cut,
    #[serde(rename = "prop_alpha2_matchings")]
    PropAlpha2Matchings,
    #[serde(rename = "prop_odd_alpha2_structure")]
    PropOddAlpha2Structure,
    LemmaMatchingOfS,
    LemmaUnmatchedTriple,
    ThmAlphaIffEfc,
    ThmPlusE,
    ObservationKnnRemoval,
}

impl StatementId {
    /// Every per-graph checker, in report order.
    pub const GRAPH_CHECKERS: [StatementId; 17] = [
        StatementId::ThmIsolating,
        StatementId::LemmaMatchingCut,
        StatementId::LemmaIndependentEdges,
        StatementId::ThmKAndOne,
        StatementId::LemmaTwoComponents,
        StatementId::LemmaKAndTwo,
        StatementId::ThmKcutStructure,
        StatementId::ThmBothComplete,
        StatementId::PropComponentBound,
        StatementId::FavaronCutvertex,
        StatementId::Favaron2cut,
        StatementId::PropAlpha2Matchings,
        StatementId::PropOddAlpha2Structure,
        StatementId::LemmaMatchingOfS,
        StatementId::LemmaUnmatchedTriple,
        StatementId::ThmAlphaIffEfc,
        StatementId::ThmPlusE,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatementId::ThmIsolating => "thm_isolating",
            StatementId::LemmaMatchingCut => "lemma_matching_cut",
            StatementId::LemmaIndependentEdges => "lemma_independent_edges",
            StatementId::ThmKAndOne => "thm_k_and_one",
            StatementId::LemmaTwoComponents => "lemma_two_components",
            StatementId::LemmaKAndTwo => "lemma_k_and_two",
            StatementId::ThmKcutStructure => "thm_kcut_structure",
            StatementId::ThmBothComplete => "thm_both_complete",
            StatementId::PropComponentBound => "prop_component_bound",
            StatementId::FavaronCutvertex => "favaron_cutvertex",
            StatementId::Favaron2cut => "favaron_2cut",
            StatementId::PropAlpha2Matchings => "prop_alpha2_matchings",
            StatementId::PropOddAlpha2Structure => "prop_odd_alpha2_structure",
            StatementId::LemmaMatchingOfS => "lemma_matching_of_s",
            StatementId::LemmaUnmatchedTriple => "lemma_unmatched_triple",
            StatementId::ThmAlphaIffEfc => "thm_alpha_iff_efc",
            StatementId::ThmPlusE => "thm_plus_e",
            StatementId::ObservationKnnRemoval => "observation_knn_removal",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatementId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches("check_");
        StatementId::GRAPH_CHECKERS
            .iter()
            .chain(&[StatementId::ObservationKnnRemoval])
            .find(|id| id.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown statement {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    NotApplicable,
}

impl Status {
    pub const ALL: [Status; 3] = [Status::Holds, Status::Fails, Status::NotApplicable];

    pub fn name(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::NotApplicable => "not_applicable",
        }
    }
}

/// Which component count a cut was required to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "rule", content = "value")]
pub enum CountRule {
    Exactly(usize),
    AtMost(usize),
    /// Exactly two components, one even and one odd.
    OppositeParityPair,
}

impl CountRule {
    pub fn accepts(self, components: &[VertexSet]) -> bool {
        match self {
            CountRule::Exactly(k) => components.len() == k,
            CountRule::AtMost(k) => components.len() <= k,
            CountRule::OppositeParityPair => {
                components.len() == 2 && components[0].len() % 2 != components[1].len() % 2
            }
        }
    }
}

/// A concrete object refuting a statement, re-checkable against the graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Violation {
    /// `G[kept]` should be connected and randomly matchable but is not.
    NotConnectedRandomlyMatchable { kept: VertexSet, matching: Matching },
    /// Fewer than `min(|component|, |subset|)` independent component–subset edges.
    TooFewIndependentEdges {
        cut: VertexSet,
        component: VertexSet,
        subset: VertexSet,
        matching: Matching,
        cover: VertexSet,
    },
    ComponentCount { cut: VertexSet, components: Vec<VertexSet>, expected: CountRule },
    /// No matching between the cut and the component covers the whole cut.
    NoSaturatingMatching { cut: VertexSet, component: VertexSet },
    NotComplete { cut: VertexSet, component: VertexSet },
    /// `G[cut ∪ component]` cannot be completed to `K_{n,n+1}` by a set of
    /// missing cut–component edges with distinct endpoints.
    NoBipartiteCompletion { cut: VertexSet, component: VertexSet },
    /// The odd component of a 2-cut has none of the four allowed shapes.
    OddComponentShape { cut: VertexSet, component: VertexSet, b1: Option<Vertex>, b2: Option<Vertex> },
    /// `G[cut - vertex]` has no matching of the required size.
    MissingCutMatching { cut: VertexSet, vertex: Vertex, required: usize },
    IndependentTriple { triple: VertexSet },
    /// `K_{n,n} - {u, v}` is randomly matchable although `u, v` are not adjacent.
    NonAdjacentRemovablePair { n: usize, u: Vertex, v: Vertex },
    /// A whole-graph statement evaluated false; re-checked by recomputing it.
    ConclusionFalse { detail: String },
}

/// Result of one checker on one graph.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub statement: StatementId,
    pub status: Status,
    /// False when an exploration budget cut the search short.
    pub exhaustive: bool,
    pub certificate: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Verdict {
    pub fn holds(statement: StatementId, certificate: Value) -> Self {
        Verdict {
            statement,
            status: Status::Holds,
            exhaustive: true,
            certificate,
            violation: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn not_applicable(statement: StatementId, hypothesis: impl Into<String>) -> Self {
        Verdict {
            statement,
            status: Status::NotApplicable,
            exhaustive: true,
            certificate: serde_json::json!({ "failed_hypothesis": hypothesis.into() }),
            violation: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn fails(statement: StatementId, violation: Violation, certificate: Value) -> Self {
        Verdict {
            statement,
            status: Status::Fails,
            exhaustive: true,
            certificate,
            violation: Some(violation),
            elapsed: Duration::ZERO,
        }
    }

    pub fn with_exhaustive(mut self, exhaustive: bool) -> Self {
        self.exhaustive = exhaustive;
        self
    }
}
