use std::collections::BTreeMap;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::Serialize;

use super::fixtures::{fixture_search, FixtureReport};
use super::{run_checker, Analysis, Budget};
use crate::census::connected_graphs;
use crate::constructions::{build, standard_constructions};
use crate::decomposition::observation_knn_removal_check;
use crate::error::Result;
use crate::format::{emit_graph6_string, read_graph6_corpus};
use crate::graph::Graph;
use crate::verdict::{StatementId, Status, Verdict};

/// Where the suite takes its graphs from.
#[derive(Clone, Debug)]
pub enum Source {
    /// Every standard construction, plus the `K_{n,n}` removal check for n = 1..=5.
    Constructions,
    /// Connected graphs on 1..=n vertices, one per isomorphism class.
    Enumeration(usize),
    /// A graph6 file, optionally gzip-compressed.
    Corpus(PathBuf),
    Graphs(Vec<(String, Graph)>),
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Restrict to these statements; all graph checkers when `None`.
    pub statements: Option<Vec<StatementId>>,
    pub budget: Budget,
    /// Seed and per-target attempts of the fixture search, if it should run.
    pub fixtures: Option<(u64, usize)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphReport {
    pub label: String,
    pub graph6: String,
    pub verdicts: Vec<Verdict>,
}

/// Counts per statement and status, in name order.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub counts: BTreeMap<String, BTreeMap<&'static str, usize>>,
    /// Verdicts produced under a truncated search, per statement.
    pub bounded: BTreeMap<String, usize>,
    pub fails: usize,
}

impl Summary {
    pub fn holds(&self, id: StatementId) -> usize {
        self.count(id, Status::Holds)
    }

    pub fn count(&self, id: StatementId, status: Status) -> usize {
        self.counts.get(id.name()).and_then(|c| c.get(status.name())).copied().unwrap_or(0)
    }

    fn add(&mut self, v: &Verdict) {
        let per = self.counts.entry(v.statement.name().to_string()).or_default();
        *per.entry(v.status.name()).or_default() += 1;
        if !v.exhaustive {
            *self.bounded.entry(v.statement.name().to_string()).or_default() += 1;
        }
        if v.status == Status::Fails {
            self.fails += 1;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub graphs: Vec<GraphReport>,
    /// Checks that take a parameter instead of a graph.
    pub parameter_checks: Vec<Verdict>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub fixtures: Vec<FixtureReport>,
}

impl SuiteReport {
    /// Every failing verdict with the graph it came from.
    pub fn failures(&self) -> impl Iterator<Item = (&GraphReport, &Verdict)> {
        self.graphs
            .iter()
            .flat_map(|r| r.verdicts.iter().filter(|v| v.status == Status::Fails).map(move |v| (r, v)))
    }
}

fn load(source: &Source) -> Result<Vec<(String, Graph)>> {
    Ok(match source {
        Source::Constructions => standard_constructions()
            .iter()
            .map(|spec| Ok((spec.label(), build(spec)?.graph)))
            .collect::<Result<_>>()?,
        Source::Enumeration(n) => {
            let mut out = Vec::new();
            for order in 1..=*n {
                for (i, g) in connected_graphs(order)?.into_iter().enumerate() {
                    out.push((format!("connected_{order}_{i}"), g));
                }
            }
            out
        }
        Source::Corpus(path) => read_graph6_corpus(path)?
            .into_iter()
            .map(|e| (format!("{}:{}", path.display(), e.line), e.graph))
            .collect(),
        Source::Graphs(graphs) => graphs.clone(),
    })
}

/// Runs one graph through the selected checkers in report order.
pub fn check_graph(label: String, g: &Graph, statements: &[StatementId], budget: &Budget) -> GraphReport {
    let a = Analysis::new(g, budget);
    let verdicts = statements.iter().map(|&id| run_checker(id, &a)).collect();
    let graph6 = emit_graph6_string(g).unwrap_or_default();
    GraphReport { label, graph6, verdicts }
}

/// Runs the selected checkers over every graph of `source` in parallel;
/// the report keeps source order.
pub fn run_suite(source: &Source, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut graphs = Vec::new();
    let mut report = stream_suite(source, opts, |r| graphs.push(r.clone()))?;
    report.graphs = graphs;
    Ok(report)
}

const CHUNK: usize = 64;

/// Like [`run_suite`], but hands each graph's report to `sink` in source
/// order as soon as its chunk is done; the returned report has no graphs.
pub fn stream_suite<F>(source: &Source, opts: &SuiteOptions, mut sink: F) -> Result<SuiteReport>
where
    F: FnMut(&GraphReport),
{
    let graphs = load(source)?;
    let statements: Vec<StatementId> = match &opts.statements {
        Some(s) => s.iter().copied().filter(|id| *id != StatementId::ObservationKnnRemoval).collect(),
        None => StatementId::GRAPH_CHECKERS.to_vec(),
    };
    let mut summary = Summary { graphs: graphs.len(), ..Summary::default() };
    for chunk in graphs.chunks(CHUNK) {
        let reports: Vec<GraphReport> = chunk
            .par_iter()
            .map(|(label, g)| check_graph(label.clone(), g, &statements, &opts.budget))
            .collect();
        for r in &reports {
            r.verdicts.iter().for_each(|v| summary.add(v));
            sink(r);
        }
    }

    let wants_knn = opts.statements.as_ref().is_none_or(|s| s.contains(&StatementId::ObservationKnnRemoval));
    let parameter_checks: Vec<Verdict> = if matches!(source, Source::Constructions) && wants_knn {
        (1..=5).map(observation_knn_removal_check).collect()
    } else {
        Vec::new()
    };
    parameter_checks.iter().for_each(|v| summary.add(v));
    let fixtures = opts.fixtures.map(|(seed, attempts)| fixture_search(seed, attempts)).unwrap_or_default();
    summary.fails += fixtures.iter().map(|f| f.fails).sum::<usize>();
    Ok(SuiteReport { graphs: Vec::new(), parameter_checks, summary, fixtures })
}
