use std::ops::ControlFlow;

use serde::Serialize;
use serde_json::{json, Value};

use super::Analysis;
use crate::connectivity::CutDecomposition;
use crate::decomposition::{is_equimatchable, is_randomly_matchable};
use crate::graph::{Edge, Graph, Vertex, VertexSet};
use crate::matching::{
    bipartite_max_matching, has_perfect_matching, matching_number, visit_matchings,
    visit_maximal_matchings, visit_minimal_isolating_matchings, Matching,
};
use crate::verdict::{CountRule, StatementId, Verdict, Violation};

pub(super) fn dispatch(id: StatementId, a: &Analysis<'_>) -> Verdict {
    match id {
        StatementId::ThmIsolating => thm_isolating(a),
        StatementId::LemmaMatchingCut => lemma_matching_cut(a),
        StatementId::LemmaIndependentEdges => lemma_independent_edges(a),
        StatementId::ThmKAndOne => thm_k_and_one(a),
        StatementId::LemmaTwoComponents => lemma_two_components(a),
        StatementId::LemmaKAndTwo => lemma_k_and_two(a),
        StatementId::ThmKcutStructure => thm_kcut_structure(a),
        StatementId::ThmBothComplete => thm_both_complete(a),
        StatementId::PropComponentBound => prop_component_bound(a),
        StatementId::FavaronCutvertex => favaron_cutvertex(a),
        StatementId::Favaron2cut => favaron_2cut(a),
        StatementId::PropAlpha2Matchings => prop_alpha2_matchings(a),
        StatementId::PropOddAlpha2Structure => prop_odd_alpha2_structure(a),
        StatementId::LemmaMatchingOfS => lemma_matching_of_s(a),
        StatementId::LemmaUnmatchedTriple => lemma_unmatched_triple(a),
        StatementId::ThmAlphaIffEfc => thm_alpha_iff_efc(a),
        StatementId::ThmPlusE => thm_plus_e(a),
        StatementId::ObservationKnnRemoval => {
            Verdict::not_applicable(id, "statement is checked per n, not per graph")
        }
    }
}

const NOT_EFC: &str = "graph is not equimatchable and factor-critical";
const COMPLETE: &str = "graph is complete, so it has no vertex cut";

/// Common frame: non-complete, `κ >= min_k`, equimatchable and factor-critical.
#[allow(clippy::result_large_err)]
fn kconnected_efc(id: StatementId, a: &Analysis<'_>, min_k: usize) -> Result<usize, Verdict> {
    if a.g.is_complete() {
        return Err(Verdict::not_applicable(id, COMPLETE));
    }
    let k = a.kappa();
    if k < min_k {
        return Err(Verdict::not_applicable(id, format!("connectivity {k} is below {min_k}")));
    }
    if !a.efc() {
        return Err(Verdict::not_applicable(id, NOT_EFC));
    }
    Ok(k)
}

#[allow(clippy::result_large_err)]
fn two_connected_efc(id: StatementId, a: &Analysis<'_>) -> Result<(), Verdict> {
    if a.order() < 3 || a.kappa() < 2 {
        return Err(Verdict::not_applicable(id, "graph is not 2-connected"));
    }
    if !a.efc() {
        return Err(Verdict::not_applicable(id, NOT_EFC));
    }
    Ok(())
}

macro_rules! require {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(verdict) => return verdict,
        }
    };
}

fn complement_of(g: &Graph, removed: &VertexSet) -> VertexSet {
    g.vertex_set().difference(removed)
}

fn thm_isolating(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::ThmIsolating;
    require!(two_connected_efc(id, a));
    let g = a.g;
    let mut total = 0usize;
    for v in g.vertices() {
        let mut seen = 0usize;
        let mut violation = None;
        let _ = visit_minimal_isolating_matchings(g, v, |edges| {
            if !a.tick() {
                return ControlFlow::Break(());
            }
            if seen == a.cap() {
                a.mark_truncated();
                return ControlFlow::Break(());
            }
            seen += 1;
            let m = Matching::from_edges_unchecked(edges.iter().copied());
            let kept = complement_of(g, &m.covered().with(v));
            if a.connected_rm(&kept) {
                ControlFlow::Continue(())
            } else {
                violation = Some(Violation::NotConnectedRandomlyMatchable { kept, matching: m });
                ControlFlow::Break(())
            }
        })
        .expect("vertex in range");
        total += seen;
        if let Some(violation) = violation {
            return Verdict::fails(id, violation, json!({ "vertex": v }));
        }
    }
    Verdict::holds(id, json!({ "minimal_isolating_matchings": total }))
}

fn lemma_matching_cut(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::LemmaMatchingCut;
    require!(two_connected_efc(id, a));
    let g = a.g;
    let size_cap = if a.exhaustive_order() {
        None
    } else {
        a.mark_truncated();
        Some(a.budget().large_matching_size_cap)
    };
    let mut matchings = 0usize;
    let mut odd_components = 0usize;
    let mut violation = None;
    let _ = visit_matchings(g, size_cap, |edges| {
        if !a.tick() {
            return ControlFlow::Break(());
        }
        if matchings == a.cap() {
            a.mark_truncated();
            return ControlFlow::Break(());
        }
        matchings += 1;
        let m = Matching::from_edges_unchecked(edges.iter().copied());
        let covered = m.covered();
        for h in g.components_without(&covered) {
            if h.len() % 2 == 0 {
                continue;
            }
            odd_components += 1;
            let kept = complement_of(g, &covered.union(&h));
            if !a.connected_rm(&kept) {
                violation = Some((Violation::NotConnectedRandomlyMatchable { kept, matching: m }, h));
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    if let Some((violation, h)) = violation {
        return Verdict::fails(id, violation, json!({ "odd_component": h }));
    }
    Verdict::holds(id, json!({ "matchings": matchings, "odd_components": odd_components }))
}

/// Lists the subsets of `cut` to test: all of them when small, otherwise
/// singletons, complements of singletons and the whole cut.
fn cut_subsets(a: &Analysis<'_>, cut: &VertexSet) -> Vec<VertexSet> {
    let k = cut.len();
    let members = cut.as_slice();
    if k <= 12 {
        return (1u32..1 << k)
            .map(|mask| (0..k).filter(|i| mask >> i & 1 == 1).map(|i| members[i]).collect())
            .collect();
    }
    a.mark_truncated();
    let mut out: Vec<VertexSet> = members.iter().map(|&v| VertexSet::singleton(v)).collect();
    out.extend(members.iter().map(|&v| cut.without(v)));
    out.push(cut.clone());
    out
}

fn lemma_independent_edges(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::LemmaIndependentEdges;
    if a.g.is_complete() {
        return Verdict::not_applicable(id, COMPLETE);
    }
    let g = a.g;
    let mut checks = 0usize;
    for cut in a.min_cuts() {
        for h in &cut.parts {
            for x in cut_subsets(a, &cut.cut) {
                if !a.tick() {
                    return Verdict::holds(id, json!({ "checks": checks }));
                }
                checks += 1;
                let cert = bipartite_max_matching(g, h, &x).expect("component and cut are disjoint");
                if cert.matching.len() < h.len().min(x.len()) {
                    let violation = Violation::TooFewIndependentEdges {
                        cut: cut.cut.clone(),
                        component: h.clone(),
                        subset: x,
                        matching: cert.matching,
                        cover: cert.cover,
                    };
                    return Verdict::fails(id, violation, json!({ "k": cut.k }));
                }
            }
        }
    }
    Verdict::holds(id, json!({ "k": a.kappa(), "cuts": a.min_cuts().len(), "checks": checks }))
}

/// Visits every matching between `s` and `c` covering all of `s`.
fn visit_cut_saturating<F>(g: &Graph, s: &[Vertex], c: &VertexSet, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(&Matching) -> ControlFlow<()>,
{
    fn rec<F>(
        g: &Graph,
        s: &[Vertex],
        c: &VertexSet,
        used: &mut Vec<Vertex>,
        chosen: &mut Vec<Edge>,
        f: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&Matching) -> ControlFlow<()>,
    {
        let Some((&u, rest)) = s.split_first() else {
            return f(&Matching::from_edges_unchecked(chosen.iter().copied()));
        };
        for &w in g.neighbors(u) {
            if !c.contains(w) || used.contains(&w) {
                continue;
            }
            used.push(w);
            chosen.push((u.min(w), u.max(w)));
            let flow = rec(g, rest, c, used, chosen, f);
            chosen.pop();
            used.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
    rec(g, s, c, &mut Vec::new(), &mut Vec::new(), f)
}

/// `(cut, C)` pairs where `C` has at least `k` vertices and another
/// component of `G - S` has exactly `small` vertices.
fn large_and_small(cuts: &[CutDecomposition], small: usize) -> Vec<(&CutDecomposition, &VertexSet)> {
    let mut out = Vec::new();
    for cut in cuts {
        for (i, c) in cut.parts.iter().enumerate() {
            let other_small = cut.parts.iter().enumerate().any(|(j, p)| j != i && p.len() == small);
            if c.len() >= cut.k && other_small {
                out.push((cut, c));
            }
        }
    }
    out
}

fn two_components(id: StatementId, cut: &CutDecomposition) -> Option<Verdict> {
    (cut.parts.len() != 2).then(|| {
        let violation = Violation::ComponentCount {
            cut: cut.cut.clone(),
            components: cut.parts.clone(),
            expected: CountRule::Exactly(2),
        };
        Verdict::fails(id, violation, json!({ "k": cut.k }))
    })
}

fn saturating_exists(id: StatementId, g: &Graph, cut: &CutDecomposition, c: &VertexSet) -> Option<Verdict> {
    let cert = bipartite_max_matching(g, &cut.cut, c).expect("cut and component are disjoint");
    (cert.matching.len() < cut.k).then(|| {
        let violation = Violation::NoSaturatingMatching { cut: cut.cut.clone(), component: c.clone() };
        Verdict::fails(id, violation, json!({ "matching": cert.matching, "cover": cert.cover }))
    })
}

fn thm_k_and_one(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::ThmKAndOne;
    let k = require!(kconnected_efc(id, a, 2));
    let g = a.g;
    let qualifying = large_and_small(a.min_cuts(), 1);
    if qualifying.is_empty() {
        return Verdict::not_applicable(id, "no minimum cut leaves a singleton and a component with at least k vertices");
    }
    let mut matchings = 0usize;
    for (cut, c) in &qualifying {
        if let Some(v) = two_components(id, cut) {
            return v;
        }
        if let Some(v) = saturating_exists(id, g, cut, c) {
            return v;
        }
        let mut violation = None;
        let mut seen = 0usize;
        let _ = visit_cut_saturating(g, cut.cut.as_slice(), c, &mut |m| {
            if !a.tick() {
                return ControlFlow::Break(());
            }
            if seen == a.cap() {
                a.mark_truncated();
                return ControlFlow::Break(());
            }
            seen += 1;
            let kept = c.difference(&m.covered());
            if a.connected_rm(&kept) {
                ControlFlow::Continue(())
            } else {
                violation = Some(Violation::NotConnectedRandomlyMatchable { kept, matching: m.clone() });
                ControlFlow::Break(())
            }
        });
        matchings += seen;
        if let Some(violation) = violation {
            return Verdict::fails(id, violation, json!({ "cut": cut.cut }));
        }
    }
    Verdict::holds(id, json!({ "k": k, "qualifying_cuts": qualifying.len(), "saturating_matchings": matchings }))
}

fn lemma_two_components(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::LemmaTwoComponents;
    let k = require!(kconnected_efc(id, a, 2));
    if a.order() < 2 * k + 3 {
        return Verdict::not_applicable(id, format!("order {} is below 2k+3 = {}", a.order(), 2 * k + 3));
    }
    for cut in a.min_cuts() {
        if let Some(v) = two_components(id, cut) {
            return v;
        }
    }
    Verdict::holds(id, json!({ "k": k, "cuts": a.min_cuts().len() }))
}

fn lemma_k_and_two(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::LemmaKAndTwo;
    let k = require!(kconnected_efc(id, a, 2));
    let g = a.g;
    let qualifying = large_and_small(a.min_cuts(), 2);
    if qualifying.is_empty() {
        return Verdict::not_applicable(id, "no minimum cut leaves a 2-vertex component beside one with at least k vertices");
    }
    let mut checks = 0usize;
    for (cut, c) in &qualifying {
        if let Some(v) = two_components(id, cut) {
            return v;
        }
        if let Some(v) = saturating_exists(id, g, cut, c) {
            return v;
        }
        let mut violation = None;
        let mut seen = 0usize;
        let _ = visit_cut_saturating(g, cut.cut.as_slice(), c, &mut |m| {
            if !a.tick() {
                return ControlFlow::Break(());
            }
            if seen == a.cap() {
                a.mark_truncated();
                return ControlFlow::Break(());
            }
            seen += 1;
            let rest = c.difference(&m.covered());
            for x in c.intersection(&m.covered()).iter() {
                checks += 1;
                let kept = rest.with(x);
                if !a.connected_rm(&kept) {
                    violation = Some(Violation::NotConnectedRandomlyMatchable { kept, matching: m.clone() });
                    return ControlFlow::Break(());
                }
            }
            ControlFlow::Continue(())
        });
        if let Some(violation) = violation {
            return Verdict::fails(id, violation, json!({ "cut": cut.cut }));
        }
    }
    Verdict::holds(id, json!({ "k": k, "qualifying_cuts": qualifying.len(), "checks": checks }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KCutCase {
    /// The cut contains an edge.
    A,
    /// The cut is independent.
    B,
}

/// Cut frame of a `k`-cut with a large component `C` and a 2-vertex component `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KCutStructureReport {
    #[serde(rename = "S")]
    pub s: VertexSet,
    #[serde(rename = "C")]
    pub c: VertexSet,
    #[serde(rename = "D")]
    pub d: VertexSet,
    /// Vertices of `C` covered by a matching saturating `S`.
    #[serde(rename = "X")]
    pub x: VertexSet,
    #[serde(rename = "Cprime")]
    pub cprime: VertexSet,
    #[serde(rename = "U", skip_serializing_if = "Option::is_none")]
    pub u: Option<VertexSet>,
    #[serde(rename = "W", skip_serializing_if = "Option::is_none")]
    pub w: Option<VertexSet>,
    pub case: KCutCase,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub completion: Option<Vec<Edge>>,
}

/// A way to make `G[C ∪ S]` complete bipartite with sides of sizes
/// differing by one by adding missing `C`–`S` edges with distinct endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteCompletion {
    /// The side containing the first cut vertex.
    pub cut_side: VertexSet,
    pub other_side: VertexSet,
    pub added: Vec<Edge>,
}

/// Searches every proper 2-colouring of `G[C ∪ S]` (one per choice of
/// orientation of its components), lowest orientation mask first.
pub fn bipartite_completion(g: &Graph, s: &VertexSet, c: &VertexSet) -> Option<BipartiteCompletion> {
    let h_set = s.union(c);
    let (h, map) = g.induced_subgraph(&h_set).ok()?;
    let comps = h.components();
    if comps.len() > 20 {
        return None;
    }
    let (zero, _) = h.bipartition()?;
    let s0 = map.local(s.first()?)?;
    for mask in 0u32..1 << (comps.len() - 1) {
        // component 0 keeps its colouring; component i flips when bit i-1 is set
        let side_of = |v: Vertex| {
            let ci = comps.iter().position(|p| p.contains(v)).expect("covered");
            let flip = ci > 0 && mask >> (ci - 1) & 1 == 1;
            zero.contains(v) != flip
        };
        let p: VertexSet = h.vertices().filter(|&v| side_of(v) == side_of(s0)).collect();
        let q = h.vertex_set().difference(&p);
        if p.len().abs_diff(q.len()) != 1 {
            continue;
        }
        let mut added = Vec::new();
        let mut ok = true;
        'pairs: for u in p.iter() {
            for v in q.iter() {
                if h.has_edge(u, v) {
                    continue;
                }
                let (gu, gv) = (map.parent(u), map.parent(v));
                let cross = (s.contains(gu) && c.contains(gv)) || (c.contains(gu) && s.contains(gv));
                if !cross {
                    ok = false;
                    break 'pairs;
                }
                added.push((gu.min(gv), gu.max(gv)));
            }
        }
        if !ok {
            continue;
        }
        let mut ends: Vec<Vertex> = added.iter().flat_map(|&(u, v)| [u, v]).collect();
        ends.sort_unstable();
        if ends.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        added.sort_unstable();
        return Some(BipartiteCompletion { cut_side: map.parent_set(&p), other_side: map.parent_set(&q), added });
    }
    None
}

fn thm_kcut_structure(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::ThmKcutStructure;
    let k = require!(kconnected_efc(id, a, 3));
    let g = a.g;
    let qualifying = large_and_small(a.min_cuts(), 2);
    if qualifying.is_empty() {
        return Verdict::not_applicable(id, "no minimum cut leaves a 2-vertex component beside one with at least k vertices");
    }
    let mut reports = Vec::new();
    for (cut, c) in &qualifying {
        if let Some(v) = two_components(id, cut) {
            return v;
        }
        let d = cut.parts.iter().find(|p| p != c).expect("two components").clone();
        let x = bipartite_max_matching(g, &cut.cut, c).expect("disjoint").matching.covered().intersection(c);
        let cprime = c.difference(&x);
        let mut report = KCutStructureReport {
            s: cut.cut.clone(),
            c: (*c).clone(),
            d,
            x,
            cprime,
            u: None,
            w: None,
            case: KCutCase::A,
            completion: None,
        };
        if g.edges_within(&cut.cut) > 0 {
            if !g.is_clique(c) {
                let violation = Violation::NotComplete { cut: cut.cut.clone(), component: (*c).clone() };
                return Verdict::fails(id, violation, json!({ "case": KCutCase::A }));
            }
        } else {
            let Some(done) = bipartite_completion(g, &cut.cut, c) else {
                let violation = Violation::NoBipartiteCompletion { cut: cut.cut.clone(), component: (*c).clone() };
                return Verdict::fails(id, violation, json!({ "case": KCutCase::B }));
            };
            report.case = KCutCase::B;
            report.w = Some(report.cprime.intersection(&done.cut_side));
            report.u = Some(report.cprime.intersection(&done.other_side));
            report.completion = Some(done.added);
        }
        reports.push(report);
    }
    Verdict::holds(id, json!({ "k": k, "reports": reports }))
}

/// Cuts with at least two components of at least `min` vertices.
fn two_large(cuts: &[CutDecomposition], min: usize) -> Vec<&CutDecomposition> {
    cuts.iter().filter(|c| c.parts.iter().filter(|p| p.len() >= min).count() >= 2).collect()
}

fn thm_both_complete(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::ThmBothComplete;
    let k = require!(kconnected_efc(id, a, 3));
    if a.order() < 2 * k + 3 {
        return Verdict::not_applicable(id, format!("order {} is below 2k+3 = {}", a.order(), 2 * k + 3));
    }
    let qualifying = two_large(a.min_cuts(), 3);
    if qualifying.is_empty() {
        return Verdict::not_applicable(id, "no minimum cut leaves two components with at least 3 vertices");
    }
    for cut in &qualifying {
        if let Some(v) = two_components(id, cut) {
            return v;
        }
        if let Some(p) = cut.parts.iter().find(|p| !a.g.is_clique(p)) {
            let violation = Violation::NotComplete { cut: cut.cut.clone(), component: p.clone() };
            return Verdict::fails(id, violation, Value::Null);
        }
    }
    Verdict::holds(id, json!({ "k": k, "qualifying_cuts": qualifying.len() }))
}

fn prop_component_bound(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::PropComponentBound;
    let k = require!(kconnected_efc(id, a, 3));
    let mut most = 0;
    for cut in a.min_cuts() {
        most = most.max(cut.parts.len());
        if cut.parts.len() > k {
            let violation = Violation::ComponentCount {
                cut: cut.cut.clone(),
                components: cut.parts.clone(),
                expected: CountRule::AtMost(k),
            };
            return Verdict::fails(id, violation, json!({ "k": k }));
        }
    }
    Verdict::holds(id, json!({ "k": k, "max_components": most, "tight": most == k }))
}

/// Vertices whose removal disconnects a connected graph.
fn cut_vertices(g: &Graph) -> Vec<Vertex> {
    g.vertices()
        .filter(|&v| g.components_without(&VertexSet::singleton(v)).len() >= 2)
        .collect()
}

fn favaron_cutvertex(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::FavaronCutvertex;
    let g = a.g;
    if a.kappa() != 1 {
        return Verdict::not_applicable(id, format!("connectivity is {}, not 1", a.kappa()));
    }
    let efc = a.efc();
    let cvs = cut_vertices(g);
    let one_cut_vertex = cvs.len() == 1;
    let (mut all_rm, mut attached) = (false, false);
    if let [d] = cvs[..] {
        let comps = g.components_without(&VertexSet::singleton(d));
        all_rm = comps.iter().all(|c| {
            let (h, _) = g.induced_subgraph(c).expect("in range");
            is_randomly_matchable(&h)
        });
        attached = comps.iter().all(|c| {
            let nbrs: Vec<Vertex> = g.neighbors(d).iter().copied().filter(|&v| c.contains(v)).collect();
            nbrs.iter().enumerate().any(|(i, &u)| nbrs[i + 1..].iter().any(|&w| g.has_edge(u, w)))
        });
    }
    let conditions = one_cut_vertex && all_rm && attached;
    let cert = json!({
        "efc": efc,
        "cut_vertices": cvs,
        "components_randomly_matchable": all_rm,
        "adjacent_pair_attachment": attached,
    });
    if efc != conditions {
        let detail = format!("equimatchable factor-critical is {efc} but the cut-vertex conditions evaluate to {conditions}");
        return Verdict::fails(id, Violation::ConclusionFalse { detail }, cert);
    }
    Verdict::holds(id, cert)
}

/// Which of the four allowed shapes the odd component `b` has, given the
/// chosen `b1, b2` (when `|B| > 1`) and the neighbours of the cut in `b`.
pub fn odd_component_shape(g: &Graph, b: &VertexSet, cut_nbrs: &VertexSet, pair: Option<(Vertex, Vertex)>) -> Option<&'static str> {
    if g.is_clique(b) {
        return Some("complete");
    }
    let (h, map) = g.induced_subgraph(b).ok()?;
    let biclique = |h: &Graph| {
        let (small, large) = h.complete_bipartite_sides()?;
        (large.len() == small.len() + 1).then(|| map.parent_set(&large))
    };
    if let Some((b1, b2)) = pair {
        let total = b.len() * (b.len() - 1) / 2;
        if !g.has_edge(b1, b2) && g.edges_within(b) + 1 == total {
            return Some("complete_minus_edge");
        }
    }
    if let Some(large) = biclique(&h) {
        if cut_nbrs.is_subset(&large) {
            return Some("biclique");
        }
    }
    if let Some((b1, b2)) = pair {
        if g.has_edge(b1, b2) {
            let (l1, l2) = (map.local(b1)?, map.local(b2)?);
            if let Some(large) = biclique(&h.without_edge(l1, l2).ok()?) {
                if cut_nbrs.is_subset(&large) && large.contains(b1) && large.contains(b2) {
                    return Some("biclique_plus_edge");
                }
            }
        }
    }
    None
}

/// Distinct `(x1, x2)` with `x1 ∈ N(s1) ∩ part` and `x2 ∈ N(s2) ∩ part`.
fn attachment_pairs(g: &Graph, s1: Vertex, s2: Vertex, part: &VertexSet) -> Vec<(Vertex, Vertex)> {
    let n1: Vec<Vertex> = g.neighbors(s1).iter().copied().filter(|&v| part.contains(v)).collect();
    let n2: Vec<Vertex> = g.neighbors(s2).iter().copied().filter(|&v| part.contains(v)).collect();
    n1.iter().flat_map(|&x| n2.iter().filter(move |&&y| y != x).map(move |&y| (x, y))).collect()
}

fn favaron_2cut(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::Favaron2cut;
    let g = a.g;
    if a.order() < 4 {
        return Verdict::not_applicable(id, "fewer than 4 vertices");
    }
    if g.is_complete() || a.kappa() != 2 {
        return Verdict::not_applicable(id, format!("connectivity is {}, not 2", a.kappa()));
    }
    if !a.efc() {
        return Verdict::not_applicable(id, NOT_EFC);
    }
    let mut shapes = Vec::new();
    for cut in a.min_cuts() {
        if !CountRule::OppositeParityPair.accepts(&cut.parts) {
            let violation = Violation::ComponentCount {
                cut: cut.cut.clone(),
                components: cut.parts.clone(),
                expected: CountRule::OppositeParityPair,
            };
            return Verdict::fails(id, violation, Value::Null);
        }
        let (s1, s2) = (cut.cut.as_slice()[0], cut.cut.as_slice()[1]);
        let (even, odd) = if cut.parts[0].len() % 2 == 0 { (0, 1) } else { (1, 0) };
        let (part_a, part_b) = (&cut.parts[even], &cut.parts[odd]);
        let cut_nbrs = g.neighborhood(&cut.cut).intersection(part_b);

        let shape = if part_b.len() == 1 {
            odd_component_shape(g, part_b, &cut_nbrs, None).map(|s| (s, None))
        } else {
            attachment_pairs(g, s1, s2, part_b)
                .into_iter()
                .find_map(|p| odd_component_shape(g, part_b, &cut_nbrs, Some(p)).map(|s| (s, Some(p))))
        };
        let Some((shape, pair)) = shape else {
            let first = attachment_pairs(g, s1, s2, part_b).first().copied();
            let violation = Violation::OddComponentShape {
                cut: cut.cut.clone(),
                component: part_b.clone(),
                b1: first.map(|p| p.0),
                b2: first.map(|p| p.1),
            };
            return Verdict::fails(id, violation, Value::Null);
        };

        for (a1, a2) in attachment_pairs(g, s1, s2, part_a) {
            let kept = part_a.without(a1).without(a2);
            if !a.connected_rm(&kept) {
                let violation = Violation::NotConnectedRandomlyMatchable { kept, matching: Matching::empty() };
                return Verdict::fails(id, violation, json!({ "cut": cut.cut, "a1": a1, "a2": a2 }));
            }
        }
        if part_b.len() > 1 && !a.connected_rm(part_a) {
            let violation = Violation::NotConnectedRandomlyMatchable { kept: part_a.clone(), matching: Matching::empty() };
            return Verdict::fails(id, violation, json!({ "cut": cut.cut }));
        }
        shapes.push(json!({ "cut": cut.cut, "B": part_b, "shape": shape, "b": pair }));
    }
    Verdict::holds(id, json!({ "cuts": shapes }))
}

fn conclusion_false(id: StatementId, detail: impl Into<String>, cert: Value) -> Verdict {
    Verdict::fails(id, Violation::ConclusionFalse { detail: detail.into() }, cert)
}

fn prop_alpha2_matchings(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::PropAlpha2Matchings;
    let g = a.g;
    if !g.is_connected() {
        return Verdict::not_applicable(id, "graph is disconnected");
    }
    let alpha = a.alpha().alpha;
    if alpha != 2 {
        return Verdict::not_applicable(id, format!("independence number is {alpha}, not 2"));
    }
    let n = g.order();
    if n % 2 == 1 {
        if !a.equimatchable() {
            return conclusion_false(id, "odd graph with independence number 2 is not equimatchable", Value::Null);
        }
        return Verdict::holds(id, json!({ "parity": "odd", "equimatchable": true }));
    }
    if is_randomly_matchable(g) {
        return Verdict::holds(id, json!({ "parity": "even", "branch": "randomly_matchable" }));
    }
    if a.equimatchable() {
        return conclusion_false(id, "even graph is equimatchable but not randomly matchable", Value::Null);
    }
    if !has_perfect_matching(g) {
        return conclusion_false(id, "even graph that is not equimatchable has no perfect matching", Value::Null);
    }
    // a maximal matching exposing more than two vertices has fewer than (n-2)/2 edges
    let mut small = None;
    if n >= 4 {
        let _ = visit_maximal_matchings(g, Some((n - 2) / 2 - 1), |m| {
            small = Some(Matching::from_edges_unchecked(m.iter().copied()));
            ControlFlow::Break(())
        });
    }
    if let Some(m) = small {
        return conclusion_false(id, "a maximal matching exposes more than two vertices", json!({ "matching": m }));
    }
    Verdict::holds(id, json!({ "parity": "even", "branch": "not_equimatchable_with_perfect_matching" }))
}

/// A cut vertex `v` with `G - v` two cliques and `v` complete to one of them.
fn two_clique_structure(g: &Graph) -> Option<(Vertex, VertexSet, VertexSet)> {
    cut_vertices(g).into_iter().find_map(|v| {
        let comps = g.components_without(&VertexSet::singleton(v));
        let [x, y] = &comps[..] else { return None };
        let complete_to = |p: &VertexSet| p.iter().all(|u| g.has_edge(u, v));
        (g.is_clique(x) && g.is_clique(y) && (complete_to(x) || complete_to(y))).then(|| (v, x.clone(), y.clone()))
    })
}

fn prop_odd_alpha2_structure(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::PropOddAlpha2Structure;
    let g = a.g;
    if !g.is_connected() {
        return Verdict::not_applicable(id, "graph is disconnected");
    }
    if g.order().is_multiple_of(2) {
        return Verdict::not_applicable(id, "graph is even");
    }
    let alpha = a.alpha().alpha;
    if alpha != 2 {
        return Verdict::not_applicable(id, format!("independence number is {alpha}, not 2"));
    }
    if a.factor_critical() {
        return Verdict::holds(id, json!({ "branch": "factor_critical" }));
    }
    match two_clique_structure(g) {
        Some((v, x, y)) => Verdict::holds(id, json!({ "branch": "two_cliques", "cut_vertex": v, "cliques": [x, y] })),
        None => conclusion_false(id, "neither factor-critical nor two cliques joined through one vertex", Value::Null),
    }
}

fn lemma_matching_of_s(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::LemmaMatchingOfS;
    let k = require!(kconnected_efc(id, a, 3));
    let g = a.g;
    let qualifying: Vec<&CutDecomposition> = a
        .min_cuts()
        .iter()
        .filter(|c| c.parts.len() == 2 && c.parts.iter().all(|p| g.is_clique(p)))
        .collect();
    if qualifying.is_empty() {
        return Verdict::not_applicable(id, "no minimum cut leaves exactly two complete components");
    }
    let required = if k % 2 == 0 { (k - 2) / 2 } else { (k - 3) / 2 };
    let mut with_edges = 0;
    for cut in &qualifying {
        if g.edges_within(&cut.cut) > 0 {
            with_edges += 1;
        }
        for s in cut.cut.iter() {
            let (h, _) = g.induced_subgraph(&cut.cut.without(s)).expect("in range");
            if matching_number(&h) < required {
                let violation = Violation::MissingCutMatching { cut: cut.cut.clone(), vertex: s, required };
                return Verdict::fails(id, violation, Value::Null);
            }
        }
    }
    Verdict::holds(id, json!({ "k": k, "required": required, "qualifying_cuts": qualifying.len(), "cuts_with_edges": with_edges }))
}

fn lemma_unmatched_triple(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::LemmaUnmatchedTriple;
    let k = require!(kconnected_efc(id, a, 4));
    let g = a.g;
    if a.order() < 2 * k + 3 {
        return Verdict::not_applicable(id, format!("order {} is below 2k+3 = {}", a.order(), 2 * k + 3));
    }
    let qualifying = two_large(a.min_cuts(), 3);
    if qualifying.is_empty() {
        return Verdict::not_applicable(id, "no minimum cut leaves two components with at least 3 vertices");
    }
    let mut triples = 0usize;
    for cut in &qualifying {
        let large: Vec<&VertexSet> = cut.parts.iter().filter(|p| p.len() >= 3).collect();
        for (i, c) in large.iter().enumerate() {
            for d in &large[i + 1..] {
                for s in cut.cut.iter() {
                    for x in c.iter() {
                        for y in d.iter() {
                            triples += 1;
                            let triple = VertexSet::from([s, x, y]);
                            if g.is_independent(&triple) {
                                return Verdict::fails(id, Violation::IndependentTriple { triple }, json!({ "cut": cut.cut }));
                            }
                        }
                    }
                }
            }
        }
    }
    Verdict::holds(id, json!({ "k": k, "triples": triples }))
}

fn thm_alpha_iff_efc(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::ThmAlphaIffEfc;
    let g = a.g;
    if g.order().is_multiple_of(2) {
        return Verdict::not_applicable(id, "graph is even");
    }
    if g.is_complete() {
        return Verdict::not_applicable(id, COMPLETE);
    }
    let k = a.kappa();
    if k < 4 {
        return Verdict::not_applicable(id, format!("connectivity {k} is below 4"));
    }
    if a.order() < 2 * k + 3 {
        return Verdict::not_applicable(id, format!("order {} is below 2k+3 = {}", a.order(), 2 * k + 3));
    }
    if two_large(a.min_cuts(), 3).is_empty() {
        return Verdict::not_applicable(id, "no minimum cut leaves two components with at least 3 vertices");
    }
    let alpha = a.alpha();
    let efc = a.efc();
    let cert = json!({ "alpha": alpha.alpha, "witness": alpha.witness, "efc": efc });
    if (alpha.alpha <= 2) != efc {
        return conclusion_false(id, format!("alpha = {} but equimatchable factor-critical is {efc}", alpha.alpha), cert);
    }
    Verdict::holds(id, cert)
}

fn thm_plus_e(a: &Analysis<'_>) -> Verdict {
    let id = StatementId::ThmPlusE;
    let g = a.g;
    if g.order().is_multiple_of(2) {
        return Verdict::not_applicable(id, "graph is even");
    }
    if g.order() < 5 {
        return Verdict::not_applicable(id, "fewer than 4 vertices");
    }
    if a.kappa() < 2 {
        return Verdict::not_applicable(id, "graph is not 2-connected");
    }
    let alpha = a.alpha().alpha;
    let efc = a.efc();
    let mut witness_edge = None;
    if efc {
        for (u, v) in g.complement_edges() {
            if !a.tick() {
                break;
            }
            let h = g.with_edge(u, v).expect("non-edge");
            if !is_equimatchable(&h) {
                witness_edge = Some((u, v));
                break;
            }
        }
    }
    let rhs = efc && witness_edge.is_none();
    let cert = json!({
        "alpha": alpha,
        "efc": efc,
        "non_equimatchable_addition": witness_edge.map(|(u, v)| format!("{u}-{v}")),
    });
    if (alpha <= 2) != rhs {
        return conclusion_false(id, format!("alpha = {alpha} but the right-hand side is {rhs}"), cert);
    }
    Verdict::holds(id, cert)
}

#[cfg(test)]
mod tests {
    use super::super::check;
    use super::*;
    use crate::constructions::{build, FamilyKind, FamilySpec};
    use crate::verdict::Status;

    fn family(kind: FamilyKind, p: &[usize]) -> Graph {
        build(&FamilySpec::new(kind, p.to_vec())).unwrap().graph
    }

    fn status(id: StatementId, g: &Graph) -> Status {
        let v = check(id, g);
        assert_ne!(v.status, Status::Fails, "{id} failed: {:?}", v.violation);
        v.status
    }

    #[test]
    fn isolating_examples() {
        assert_eq!(status(StatementId::ThmIsolating, &Graph::cycle(7)), Status::Holds);
        assert_eq!(status(StatementId::ThmIsolating, &Graph::complete(4)), Status::NotApplicable);
        assert_eq!(status(StatementId::ThmIsolating, &family(FamilyKind::Gmn, &[3, 3])), Status::Holds);
    }

    #[test]
    fn matching_cut_examples() {
        assert_eq!(status(StatementId::LemmaMatchingCut, &Graph::cycle(7)), Status::Holds);
        assert_eq!(status(StatementId::LemmaMatchingCut, &Graph::path(4)), Status::NotApplicable);
    }

    #[test]
    fn independent_edges_examples() {
        assert_eq!(status(StatementId::LemmaIndependentEdges, &Graph::petersen()), Status::Holds);
        assert_eq!(status(StatementId::LemmaIndependentEdges, &Graph::complete(5)), Status::NotApplicable);
        assert_eq!(status(StatementId::LemmaIndependentEdges, &family(FamilyKind::GkTight, &[4])), Status::Holds);
    }

    #[test]
    fn k_and_one_examples() {
        assert_eq!(status(StatementId::ThmKAndOne, &family(FamilyKind::SmallComponentM1, &[4, 3])), Status::Holds);
        assert_eq!(status(StatementId::ThmKAndOne, &Graph::cycle(5)), Status::Holds);
        assert_eq!(status(StatementId::ThmKAndOne, &Graph::complete_bipartite(3, 4)), Status::NotApplicable);
    }

    #[test]
    fn two_components_examples() {
        assert_eq!(status(StatementId::LemmaTwoComponents, &family(FamilyKind::Gmn, &[3, 5])), Status::Holds);
        assert_eq!(status(StatementId::LemmaTwoComponents, &family(FamilyKind::GkTight, &[3])), Status::NotApplicable);
        assert_eq!(status(StatementId::LemmaTwoComponents, &Graph::cycle(9)), Status::NotApplicable);
    }

    #[test]
    fn k_and_two_examples() {
        assert_eq!(status(StatementId::LemmaKAndTwo, &family(FamilyKind::SmallComponentM2, &[4, 3])), Status::Holds);
        assert_eq!(status(StatementId::LemmaKAndTwo, &family(FamilyKind::Gmn, &[3, 3])), Status::NotApplicable);
    }

    #[test]
    fn kcut_structure_case_b() {
        let g = family(FamilyKind::SmallComponentM2, &[4, 3]);
        let v = check(StatementId::ThmKcutStructure, &g);
        assert_eq!(v.status, Status::Holds);
        let report = &v.certificate["reports"][0];
        assert_eq!(report["case"], "B");
        assert_eq!(report["S"], json!([0, 1, 2]));
        assert_eq!(report["completion"], json!([]));
        assert_eq!(status(StatementId::ThmKcutStructure, &family(FamilyKind::Gmn, &[3, 3])), Status::NotApplicable);
    }

    #[test]
    fn both_complete_examples() {
        assert_eq!(status(StatementId::ThmBothComplete, &family(FamilyKind::Gmn, &[3, 5])), Status::Holds);
        assert_eq!(status(StatementId::ThmBothComplete, &family(FamilyKind::Gmn, &[5, 5])), Status::Holds);
    }

    #[test]
    fn component_bound_tightness() {
        for k in [3, 5] {
            let v = check(StatementId::PropComponentBound, &family(FamilyKind::GkTight, &[k]));
            assert_eq!(v.status, Status::Holds);
            assert_eq!(v.certificate["max_components"], json!(k));
        }
        assert_eq!(status(StatementId::PropComponentBound, &family(FamilyKind::Gmn, &[3, 3])), Status::Holds);
    }

    #[test]
    fn favaron_cutvertex_examples() {
        let bowtie = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let v = check(StatementId::FavaronCutvertex, &bowtie);
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.certificate["efc"], json!(true));
        let v = check(StatementId::FavaronCutvertex, &Graph::path(5));
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.certificate["efc"], json!(false));
        assert_eq!(status(StatementId::FavaronCutvertex, &Graph::cycle(6)), Status::NotApplicable);
    }

    #[test]
    fn favaron_2cut_examples() {
        assert_eq!(status(StatementId::Favaron2cut, &Graph::cycle(5)), Status::Holds);
        assert_eq!(status(StatementId::Favaron2cut, &Graph::cycle(7)), Status::Holds);
        assert_eq!(status(StatementId::Favaron2cut, &family(FamilyKind::Gmn, &[3, 3])), Status::NotApplicable);
    }

    #[test]
    fn alpha2_examples() {
        assert_eq!(status(StatementId::PropAlpha2Matchings, &Graph::cycle(5)), Status::Holds);
        assert_eq!(status(StatementId::PropAlpha2Matchings, &Graph::path(4)), Status::Holds);
        let k4_minus = Graph::complete(4).without_edge(0, 1).unwrap();
        assert_eq!(status(StatementId::PropAlpha2Matchings, &k4_minus), Status::Holds);
    }

    #[test]
    fn alpha2_needs_connectivity() {
        // two disjoint triangles: equimatchable, no perfect matching
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert!(is_equimatchable(&g) && !has_perfect_matching(&g));
        assert_eq!(status(StatementId::PropAlpha2Matchings, &g), Status::NotApplicable);
    }

    #[test]
    fn odd_alpha2_examples() {
        assert_eq!(status(StatementId::PropOddAlpha2Structure, &Graph::cycle(5)), Status::Holds);
        assert_eq!(status(StatementId::PropOddAlpha2Structure, &Graph::cycle(7)), Status::NotApplicable);
        // K_1 and a triangle joined through vertex 0
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let v = check(StatementId::PropOddAlpha2Structure, &g);
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.certificate["branch"], "two_cliques");
    }

    #[test]
    fn matching_of_s_examples() {
        assert_eq!(status(StatementId::LemmaMatchingOfS, &family(FamilyKind::Gmn, &[3, 3])), Status::Holds);
        assert_eq!(status(StatementId::LemmaMatchingOfS, &Graph::complete(5)), Status::NotApplicable);
    }

    #[test]
    fn high_connectivity_examples() {
        let g55 = family(FamilyKind::Gmn, &[5, 5]);
        assert_eq!(status(StatementId::LemmaUnmatchedTriple, &g55), Status::NotApplicable);
        assert_eq!(status(StatementId::ThmAlphaIffEfc, &family(FamilyKind::Gmn, &[3, 3])), Status::NotApplicable);
    }

    #[test]
    fn plus_e_examples() {
        assert_eq!(status(StatementId::ThmPlusE, &Graph::cycle(5)), Status::Holds);
        let v = check(StatementId::ThmPlusE, &Graph::cycle(7));
        assert_eq!(v.status, Status::Holds);
        assert!(v.certificate["non_equimatchable_addition"].is_string());
        assert_eq!(status(StatementId::ThmPlusE, &Graph::complete(5)), Status::Holds);
        let v = check(StatementId::ThmPlusE, &Graph::cycle(9));
        assert_eq!(v.status, Status::Holds);
        assert_eq!(v.certificate["efc"], json!(false));
    }
}
