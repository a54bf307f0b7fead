//! Seeded search for graphs meeting the hypotheses of statements whose
//! smallest instances are too large for exhaustive enumeration.
//!
//! Join-style candidates put a random graph on `S` between two cliques
//! `C` and `D`, joining each `S` vertex to all or most of both sides.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{run_checker, Analysis, Budget};
use crate::constructions::{build, FamilyKind, FamilySpec};
use crate::format::emit_graph6_string;
use crate::graph::{Edge, Graph};
use crate::verdict::{StatementId, Status};

/// Outcome of the search for one statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureReport {
    pub statement: StatementId,
    /// What the found graphs must satisfy beyond `holds`.
    pub target: &'static str,
    pub attempts: usize,
    pub found: usize,
    pub fails: usize,
    /// graph6 of the first few distinct finds.
    pub examples: Vec<String>,
}

const EXAMPLES: usize = 3;

#[derive(Clone, Copy)]
enum Target {
    /// Large-connectivity statements: `k >= 4`, `n >= 2k+3`, two parts of size >= 3.
    HighConnectivity(StatementId),
    /// Two complete parts and at least one edge inside the cut.
    CutWithEdges,
    /// Case A of the cut structure statement.
    CaseA,
}

impl Target {
    fn statement(self) -> StatementId {
        match self {
            Target::HighConnectivity(id) => id,
            Target::CutWithEdges => StatementId::LemmaMatchingOfS,
            Target::CaseA => StatementId::ThmKcutStructure,
        }
    }

    fn describe(self) -> &'static str {
        match self {
            Target::HighConnectivity(_) => "holds on a 4-connected join-style graph",
            Target::CutWithEdges => "holds with an edge inside the cut",
            Target::CaseA => "holds in case A",
        }
    }
}

fn join_style<R: Rng>(rng: &mut R, k: usize, c: usize, d: usize, s_edge_p: f64, join_p: f64) -> Graph {
    let n = k + c + d;
    let mut edges: Vec<Edge> = Vec::new();
    for v in 0..k {
        for u in 0..v {
            if rng.gen_bool(s_edge_p) {
                edges.push((u, v));
            }
        }
    }
    for side in [k..k + c, k + c..n] {
        for v in side.clone() {
            for u in side.start..v {
                edges.push((u, v));
            }
        }
        for s in 0..k {
            for v in side.clone() {
                if rng.gen_bool(join_p) {
                    edges.push((s, v));
                }
            }
        }
    }
    Graph::from_edges(n, edges).expect("distinct pairs")
}

/// `small_component_m2` with one edge added inside the cut, then random
/// edges added until it is equimatchable and factor-critical or the repair
/// budget runs out.
fn repaired_m2<R: Rng>(rng: &mut R) -> Graph {
    let (n, k) = ([3, 4, 5][rng.gen_range(0..3)], [3, 4][rng.gen_range(0..2)]);
    let built = build(&FamilySpec::new(FamilyKind::SmallComponentM2, [n, k])).expect("valid parameters");
    let s: Vec<usize> = built.roles.s.expect("has a cut").iter().collect();
    let mut g = built.graph;
    let pair: Vec<_> = s.choose_multiple(rng, 2).copied().collect();
    g = g.with_edge(pair[0].min(pair[1]), pair[0].max(pair[1])).expect("cut is independent");
    for _ in 0..6 {
        if crate::decomposition::is_efc(&g) {
            break;
        }
        let missing = g.complement_edges();
        let Some(&(u, v)) = missing.choose(rng) else { break };
        g = g.with_edge(u, v).expect("non-edge");
    }
    g
}

fn candidate<R: Rng>(rng: &mut R, target: Target) -> Graph {
    match target {
        Target::HighConnectivity(_) => {
            let k = rng.gen_range(4..=5);
            let c = rng.gen_range(3..=4);
            // n odd and at least 2k+3
            let mut d = rng.gen_range(3..=5).max(2 * k + 3 - k - c);
            if (k + c + d) % 2 == 0 {
                d += 1;
            }
            let join_p = if rng.gen_bool(0.5) { 1.0 } else { 0.9 };
            {
                let p = rng.gen_range(0.3..0.9);
                join_style(rng, k, c, d, p, join_p)
            }
        }
        Target::CutWithEdges => {
            let k = rng.gen_range(3..=5);
            let c = rng.gen_range(2..=5);
            let d = rng.gen_range(2..=5);
            let c = if (k + c + d) % 2 == 0 { c + 1 } else { c };
            {
                let p = rng.gen_range(0.2..0.8);
                join_style(rng, k, c, d, p, 1.0)
            }
        }
        Target::CaseA => {
            if rng.gen_bool(0.5) {
                return repaired_m2(rng);
            }
            let k = rng.gen_range(3..=4);
            let mut c = rng.gen_range(k..=k + 2);
            if (k + c) % 2 == 0 {
                c += 1;
            }
            {
                let p = rng.gen_range(0.2..0.8);
                join_style(rng, k, c, 2, p, 1.0)
            }
        }
    }
}

fn qualifies(target: Target, certificate: &serde_json::Value) -> bool {
    match target {
        Target::HighConnectivity(_) => true,
        Target::CutWithEdges => certificate["cuts_with_edges"].as_u64().is_some_and(|c| c > 0),
        Target::CaseA => certificate["reports"].as_array().is_some_and(|r| r.iter().any(|r| r["case"] == "A")),
    }
}

/// Runs `attempts` seeded candidates per target and reports how many met
/// the statement's hypotheses with `holds`, and how many failed.
pub fn fixture_search(seed: u64, attempts: usize) -> Vec<FixtureReport> {
    let targets = [
        Target::HighConnectivity(StatementId::LemmaUnmatchedTriple),
        Target::HighConnectivity(StatementId::ThmAlphaIffEfc),
        Target::CutWithEdges,
        Target::CaseA,
    ];
    let budget = Budget::default();
    targets
        .iter()
        .enumerate()
        .map(|(i, &target)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            let mut report = FixtureReport {
                statement: target.statement(),
                target: target.describe(),
                attempts,
                found: 0,
                fails: 0,
                examples: Vec::new(),
            };
            for _ in 0..attempts {
                let g = candidate(&mut rng, target);
                let a = Analysis::new(&g, &budget);
                let v = run_checker(target.statement(), &a);
                match v.status {
                    Status::Fails => report.fails += 1,
                    Status::Holds if qualifies(target, &v.certificate) => {
                        report.found += 1;
                        let g6 = emit_graph6_string(&g).expect("small graph");
                        if report.examples.len() < EXAMPLES && !report.examples.contains(&g6) {
                            report.examples.push(g6);
                        }
                    }
                    _ => {}
                }
            }
            report
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn search_is_deterministic_and_finds_fixtures() {
        let a = fixture_search(7, 12);
        let b = fixture_search(7, 12);
        assert_eq!(a, b);
        for r in &a {
            assert_eq!(r.fails, 0, "{r:?}");
        }
        assert!(a[0].found > 0 && a[1].found > 0, "{a:?}");
    }
}
