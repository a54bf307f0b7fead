//! Statement checkers, suite runner, fixture search and certificate
//! re-validation.
//!
//! Each checker tests its statement's hypotheses on one graph and either
//! reports `not_applicable` with the failed hypothesis, or verifies the
//! conclusion and returns `holds` with a certificate or `fails` with a
//! re-checkable violation.

use std::cell::{Cell, OnceCell, RefCell};
use std::collections::HashMap;
use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;

use crate::connectivity::{independence_number, minimum_vertex_cuts, vertex_connectivity, CutDecomposition, IndependenceCertificate};
use crate::decomposition::{is_connected_randomly_matchable, is_equimatchable, is_factor_critical};
use crate::graph::{Graph, VertexSet};
use crate::verdict::{StatementId, Verdict};

mod checkers;
mod fixtures;
mod revalidate;
mod suite;

pub use checkers::{bipartite_completion, odd_component_shape, BipartiteCompletion, KCutCase, KCutStructureReport};
pub use fixtures::{fixture_search, FixtureReport};
pub use revalidate::revalidate;
pub use suite::{check_graph, run_suite, stream_suite, GraphReport, Source, SuiteOptions, SuiteReport, Summary};

/// Limits on the inner enumerations of the checkers.
#[derive(Clone, Debug)]
pub struct Budget {
    /// Up to this order every inner enumeration is exhaustive.
    pub exhaustive_max_order: usize,
    /// Largest matching size enumerated by the matching-cut check above
    /// the exhaustive order.
    pub large_matching_size_cap: usize,
    /// Objects visited per inner enumeration above the exhaustive order.
    pub enumeration_cap: usize,
    /// Wall-clock limit per graph.
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            exhaustive_max_order: 13,
            large_matching_size_cap: 2,
            enumeration_cap: 100_000,
            time_limit: None,
        }
    }
}

/// Lazily computed facts about one graph, shared by all checkers.
pub struct Analysis<'g> {
    pub g: &'g Graph,
    budget: Budget,
    deadline: Option<Instant>,
    truncated: Cell<bool>,
    kappa: OnceCell<usize>,
    cuts: OnceCell<Vec<CutDecomposition>>,
    factor_critical: OnceCell<bool>,
    equimatchable: OnceCell<bool>,
    alpha: OnceCell<IndependenceCertificate>,
    rm_memo: RefCell<HashMap<FixedBitSet, bool>>,
}

/// Above this order minimum cuts are capped.
const CUT_EXHAUSTIVE_ORDER: usize = 24;
const CUT_CAP: usize = 10_000;

impl<'g> Analysis<'g> {
    pub fn new(g: &'g Graph, budget: &Budget) -> Self {
        Analysis {
            g,
            budget: budget.clone(),
            deadline: budget.time_limit.map(|d| Instant::now() + d),
            truncated: Cell::new(false),
            kappa: OnceCell::new(),
            cuts: OnceCell::new(),
            factor_critical: OnceCell::new(),
            equimatchable: OnceCell::new(),
            alpha: OnceCell::new(),
            rm_memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    pub fn kappa(&self) -> usize {
        *self.kappa.get_or_init(|| vertex_connectivity(self.g))
    }

    /// Every minimum vertex cut; empty for complete graphs.
    pub fn min_cuts(&self) -> &[CutDecomposition] {
        self.cuts.get_or_init(|| {
            if self.g.is_complete() {
                return Vec::new();
            }
            let cap = (self.order() > CUT_EXHAUSTIVE_ORDER).then_some(CUT_CAP);
            let (cuts, truncated) = minimum_vertex_cuts(self.g, cap).expect("graph is not complete");
            if truncated {
                self.mark_truncated();
            }
            cuts
        })
    }

    pub fn factor_critical(&self) -> bool {
        *self.factor_critical.get_or_init(|| is_factor_critical(self.g))
    }

    pub fn equimatchable(&self) -> bool {
        *self.equimatchable.get_or_init(|| is_equimatchable(self.g))
    }

    pub fn efc(&self) -> bool {
        self.factor_critical() && self.equimatchable()
    }

    pub fn alpha(&self) -> &IndependenceCertificate {
        self.alpha.get_or_init(|| independence_number(self.g))
    }

    /// Whether `G[kept]` is connected and randomly matchable (memoized).
    pub fn connected_rm(&self, kept: &VertexSet) -> bool {
        let key = kept.to_bits(self.order());
        if let Some(&hit) = self.rm_memo.borrow().get(&key) {
            return hit;
        }
        let (h, _) = self.g.induced_subgraph(kept).expect("vertices in range");
        let rm = is_connected_randomly_matchable(&h);
        self.rm_memo.borrow_mut().insert(key, rm);
        rm
    }

    pub fn exhaustive_order(&self) -> bool {
        self.order() <= self.budget.exhaustive_max_order
    }

    /// How many objects an inner enumeration may visit.
    pub fn cap(&self) -> usize {
        if self.exhaustive_order() {
            usize::MAX
        } else {
            self.budget.enumeration_cap
        }
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    /// False once the deadline has passed; the current check is then marked
    /// non-exhaustive.
    pub fn tick(&self) -> bool {
        match self.deadline {
            Some(d) if Instant::now() >= d => {
                self.mark_truncated();
                false
            }
            _ => true,
        }
    }

    pub fn mark_truncated(&self) {
        self.truncated.set(true);
    }
}

/// Runs one checker, recording elapsed time and whether any budget was hit.
pub fn run_checker(id: StatementId, a: &Analysis<'_>) -> Verdict {
    let start = Instant::now();
    a.truncated.set(false);
    let mut v = checkers::dispatch(id, a);
    if a.truncated.get() {
        v.exhaustive = false;
    }
    v.elapsed = start.elapsed();
    v
}

/// Runs one checker on a graph with the default budget.
pub fn check(id: StatementId, g: &Graph) -> Verdict {
    run_checker(id, &Analysis::new(g, &Budget::default()))
}
