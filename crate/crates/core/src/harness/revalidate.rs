use crate::connectivity::{vertex_connectivity, CutDecomposition};
use crate::decomposition::is_connected_randomly_matchable;
use crate::graph::{Graph, VertexSet};
use crate::matching::{bipartite_max_matching, matching_number};
use crate::verdict::{Status, Verdict, Violation};

use super::checkers::bipartite_completion;
use super::check;

fn ensure(ok: bool, why: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why.to_string())
    }
}

fn in_range(g: &Graph, sets: &[&VertexSet]) -> Result<(), String> {
    sets.iter().try_for_each(|s| s.check_range(g.order()).map_err(|e| e.to_string()))
}

/// `cut` is a minimum vertex cut and `component` one of the components it leaves.
fn cut_component(g: &Graph, cut: &VertexSet, component: &VertexSet) -> Result<CutDecomposition, String> {
    let d = minimum_cut(g, cut)?;
    ensure(d.parts.contains(component), "component is not a component of G - cut")?;
    Ok(d)
}

fn minimum_cut(g: &Graph, cut: &VertexSet) -> Result<CutDecomposition, String> {
    in_range(g, &[cut])?;
    let d = CutDecomposition::new(g, cut.clone());
    ensure(d.parts.len() >= 2, "cut does not disconnect the graph")?;
    ensure(cut.len() == vertex_connectivity(g), "cut is not minimum")?;
    Ok(d)
}

/// Re-derives a failing verdict's violation from the graph alone.
///
/// Structural violations are re-checked directly from their witness sets;
/// statement-level violations are re-checked by re-running the checker.
pub fn revalidate(g: &Graph, verdict: &Verdict) -> Result<(), String> {
    ensure(verdict.status == Status::Fails, "verdict is not a failure")?;
    let violation = verdict.violation.as_ref().ok_or("failure without a violation")?;
    match violation {
        Violation::NotConnectedRandomlyMatchable { kept, matching } => {
            in_range(g, &[kept])?;
            matching.validate(g).map_err(|e| e.to_string())?;
            ensure(kept.is_disjoint(&matching.covered()), "kept vertices meet the matching")?;
            let (h, _) = g.induced_subgraph(kept).map_err(|e| e.to_string())?;
            ensure(!is_connected_randomly_matchable(&h), "kept set is connected randomly matchable")
        }
        Violation::TooFewIndependentEdges { cut, component, subset, matching, cover } => {
            cut_component(g, cut, component)?;
            ensure(!subset.is_empty() && subset.is_subset(cut), "subset is not a non-empty part of the cut")?;
            let cert = crate::matching::KonigCertificate { matching: matching.clone(), cover: cover.clone() };
            ensure(cert.verify(g, component, subset), "matching and cover do not certify each other")?;
            ensure(matching.len() < component.len().min(subset.len()), "matching is large enough")
        }
        Violation::ComponentCount { cut, components, expected } => {
            let d = minimum_cut(g, cut)?;
            let mut mine = d.parts.clone();
            let mut theirs = components.clone();
            mine.sort();
            theirs.sort();
            ensure(mine == theirs, "components do not match G - cut")?;
            ensure(!expected.accepts(components), "component count satisfies the rule")
        }
        Violation::NoSaturatingMatching { cut, component } => {
            cut_component(g, cut, component)?;
            let cert = bipartite_max_matching(g, cut, component).map_err(|e| e.to_string())?;
            ensure(cert.matching.len() < cut.len(), "a saturating matching exists")
        }
        Violation::NotComplete { cut, component } => {
            cut_component(g, cut, component)?;
            ensure(!g.is_clique(component), "component is complete")
        }
        Violation::NoBipartiteCompletion { cut, component } => {
            cut_component(g, cut, component)?;
            ensure(g.edges_within(cut) == 0, "cut is not independent")?;
            ensure(bipartite_completion(g, cut, component).is_none(), "a bipartite completion exists")
        }
        Violation::MissingCutMatching { cut, vertex, required } => {
            minimum_cut(g, cut)?;
            ensure(cut.contains(*vertex), "vertex is not in the cut")?;
            let (h, _) = g.induced_subgraph(&cut.without(*vertex)).map_err(|e| e.to_string())?;
            ensure(matching_number(&h) < *required, "cut minus vertex has the required matching")
        }
        Violation::IndependentTriple { triple } => {
            in_range(g, &[triple])?;
            ensure(triple.len() == 3, "not a triple")?;
            ensure(g.is_independent(triple), "triple spans an edge")
        }
        Violation::NonAdjacentRemovablePair { n, u, v } => {
            let knn = Graph::complete_bipartite(*n, *n);
            ensure(*u < 2 * n && *v < 2 * n && u != v, "pair out of range")?;
            ensure(!knn.has_edge(*u, *v), "pair is adjacent")?;
            let (h, _) = knn.remove_vertices(&VertexSet::from([*u, *v])).map_err(|e| e.to_string())?;
            ensure(crate::decomposition::is_randomly_matchable(&h), "removal is not randomly matchable")
        }
        Violation::OddComponentShape { .. } | Violation::ConclusionFalse { .. } => {
            let again = check(verdict.statement, g);
            ensure(again.status == Status::Fails, "re-running the checker does not fail")?;
            ensure(again.violation.as_ref() == Some(violation), "re-run produced a different violation")
        }
    }
}

#[cfg(test)]
mod tests {
    use serde_json::Value;

    use super::*;
    use crate::matching::Matching;
    use crate::verdict::StatementId;

    #[test]
    fn rejects_corrupted_triple() {
        let g = Graph::cycle(5);
        let bad = Verdict::fails(
            StatementId::LemmaUnmatchedTriple,
            Violation::IndependentTriple { triple: VertexSet::from([0, 1, 3]) },
            Value::Null,
        );
        assert!(revalidate(&g, &bad).is_err());
        let p = Graph::path(5);
        let good = Verdict::fails(
            StatementId::LemmaUnmatchedTriple,
            Violation::IndependentTriple { triple: VertexSet::from([0, 2, 4]) },
            Value::Null,
        );
        assert!(revalidate(&p, &good).is_ok());
    }

    #[test]
    fn rejects_randomly_matchable_kept_set() {
        let g = Graph::cycle(5);
        let m = Matching::new(&g, [(0, 1)]).unwrap();
        let corrupted = Verdict::fails(
            StatementId::ThmIsolating,
            Violation::NotConnectedRandomlyMatchable { kept: VertexSet::from([3, 4]), matching: m.clone() },
            Value::Null,
        );
        assert!(revalidate(&g, &corrupted).is_err());
        let genuine = Verdict::fails(
            StatementId::ThmIsolating,
            Violation::NotConnectedRandomlyMatchable { kept: VertexSet::from([2, 3, 4]), matching: m },
            Value::Null,
        );
        assert!(revalidate(&g, &genuine).is_ok());
    }

    #[test]
    fn rejects_non_minimum_cut() {
        let g = Graph::petersen();
        let far = g.vertices().find(|&v| v != 0 && !g.has_edge(0, v)).unwrap();
        let cut = g.neighborhood(&VertexSet::singleton(0)).with(far);
        let parts = CutDecomposition::new(&g, cut.clone()).parts;
        let v = Verdict::fails(
            StatementId::PropComponentBound,
            Violation::ComponentCount { cut, components: parts, expected: crate::verdict::CountRule::AtMost(1) },
            Value::Null,
        );
        assert_eq!(revalidate(&g, &v), Err("cut is not minimum".into()));
    }

    #[test]
    fn rejects_conclusion_that_does_not_reproduce() {
        let v = Verdict::fails(
            StatementId::ThmPlusE,
            Violation::ConclusionFalse { detail: "made up".into() },
            Value::Null,
        );
        assert!(revalidate(&Graph::cycle(5), &v).is_err());
        assert!(revalidate(&Graph::cycle(5), &Verdict::holds(StatementId::ThmPlusE, Value::Null)).is_err());
    }
}
