//! Gallai–Edmonds decomposition and the predicates built on it:
//! factor-critical, randomly matchable, equimatchable.

use serde::Serialize;
use serde_json::json;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::matching::{
    deficiency, extend_to_maximal, maximum_matching, saturating_matching, Matching,
};
use crate::verdict::{StatementId, Verdict, Violation};

/// The `(D, A, C)` partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GallaiEdmonds {
    /// Vertices missed by at least one maximum matching.
    pub d: VertexSet,
    /// Vertices outside `D` with a neighbour in `D`.
    pub a: VertexSet,
    pub c: VertexSet,
    pub nu: usize,
    #[serde(rename = "def")]
    pub deficiency: usize,
}

impl GallaiEdmonds {
    /// `#components(G[D]) - |A|`, which equals the deficiency.
    pub fn component_count_excess(&self, g: &Graph) -> isize {
        let comps = g.components_within(&self.d.to_bits(g.order())).len();
        comps as isize - self.a.len() as isize
    }
}

/// `ν(G - v)` for every vertex.
fn vertex_deleted_nu(g: &Graph) -> Vec<usize> {
    g.vertices()
        .map(|v| {
            let (h, _) = g.remove_vertices(&VertexSet::singleton(v)).expect("vertex in range");
            maximum_matching(&h).len()
        })
        .collect()
}

pub fn gallai_edmonds(g: &Graph) -> GallaiEdmonds {
    let nu = maximum_matching(g).len();
    let minus = vertex_deleted_nu(g);
    let d: VertexSet = g.vertices().filter(|&v| minus[v] == nu).collect();
    let a = g.neighborhood(&d);
    let c = g.vertex_set().difference(&d).difference(&a);
    GallaiEdmonds { d, a, c, nu, deficiency: g.order() - 2 * nu }
}

/// A maximum matching of `g` that leaves `v` exposed, if `v ∈ D`.
pub fn maximum_matching_missing(g: &Graph, v: Vertex) -> Option<Matching> {
    let nu = maximum_matching(g).len();
    let (h, map) = g.remove_vertices(&VertexSet::singleton(v)).ok()?;
    let m = maximum_matching(&h);
    (m.len() == nu).then(|| m.map(|x| map.parent(x)))
}

/// `G - v` has a perfect matching for every `v`.
///
/// Computed directly and through the Gallai–Edmonds shortcut (`G` connected
/// and `D = V`); the two must agree.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.order();
    if n.is_multiple_of(2) {
        return false;
    }
    let minus = vertex_deleted_nu(g);
    let direct = minus.iter().all(|&m| 2 * m == n - 1);
    let nu = maximum_matching(g).len();
    let shortcut = g.is_connected() && minus.iter().all(|&m| m == nu);
    assert_eq!(
        direct, shortcut,
        "internal error: factor-criticality tests disagree on {g:?}"
    );
    direct
}

/// `K_{2m}` or `K_{m,m}` (the empty graph counts as `K_0`).
pub fn is_complete_even_or_balanced_biclique(g: &Graph) -> bool {
    let n = g.order();
    if n % 2 == 1 {
        return false;
    }
    if g.is_complete() {
        return true;
    }
    matches!(g.complete_bipartite_sides(), Some((a, b)) if a.len() == b.len())
}

/// Equimatchable with a perfect matching. For connected graphs the answer
/// is cross-checked against the structural test for `K_{2m}` / `K_{m,m}`.
pub fn is_randomly_matchable(g: &Graph) -> bool {
    let rm = g.order().is_multiple_of(2) && deficiency(g) == 0 && is_equimatchable(g);
    if g.is_connected() {
        assert_eq!(
            rm,
            is_complete_even_or_balanced_biclique(g),
            "internal error: randomly-matchable tests disagree on {g:?}"
        );
    }
    rm
}

/// Connected and randomly matchable; the empty graph qualifies.
pub fn is_connected_randomly_matchable(g: &Graph) -> bool {
    g.is_connected() && is_randomly_matchable(g)
}

/// Why a graph is not equimatchable: an independent set `I` with
/// `|I| = def + 2`, a matching of `G - I` saturating `N(I)`, and its
/// extension to a maximal matching of `G` that leaves all of `I` exposed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquimatchabilityWitness {
    pub independent: VertexSet,
    pub saturating: Matching,
    pub maximal: Matching,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Equimatchability {
    pub equimatchable: bool,
    pub nu: usize,
    pub witness: Option<EquimatchabilityWitness>,
}

/// Decides equimatchability.
///
/// `G` is not equimatchable iff some maximal matching exposes at least
/// `def + 2` vertices. The exposed set of a maximal matching is independent
/// and all its neighbours are matched, so this happens iff some independent
/// `I` of size `def + 2` has `N(I)` saturable inside `G - I`. Candidate sets
/// are tried in lexicographic order; the first hit is returned.
pub fn equimatchability(g: &Graph) -> Equimatchability {
    let nu = maximum_matching(g).len();
    let target = g.order() - 2 * nu + 2;
    let mut chosen = Vec::with_capacity(target);
    let witness = search_independent(g, target, 0, &mut chosen);
    Equimatchability { equimatchable: witness.is_none(), nu, witness }
}

fn search_independent(
    g: &Graph,
    target: usize,
    from: Vertex,
    chosen: &mut Vec<Vertex>,
) -> Option<EquimatchabilityWitness> {
    if chosen.len() == target {
        return witness_for(g, chosen);
    }
    let remaining = target - chosen.len();
    for v in from..g.order() {
        if g.order() - v < remaining {
            break;
        }
        if chosen.iter().any(|&u| g.has_edge(u, v)) {
            continue;
        }
        chosen.push(v);
        let found = search_independent(g, target, v + 1, chosen);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

fn witness_for(g: &Graph, independent: &[Vertex]) -> Option<EquimatchabilityWitness> {
    let set: VertexSet = independent.iter().copied().collect();
    let nbrs = g.neighborhood(&set);
    let (h, map) = g.remove_vertices(&set).expect("vertices in range");
    let local = saturating_matching(&h, &map.local_set(&nbrs)).expect("in range")?;
    let saturating = local.map(|x| map.parent(x));
    let maximal = extend_to_maximal(g, &saturating).expect("lifted matching is valid");
    Some(EquimatchabilityWitness { independent: set, saturating, maximal })
}

pub fn is_equimatchable(g: &Graph) -> bool {
    equimatchability(g).equimatchable
}

/// Equimatchable and factor-critical.
pub fn is_efc(g: &Graph) -> bool {
    g.order() % 2 == 1 && is_factor_critical(g) && is_equimatchable(g)
}

/// Summary flags and invariants of one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub n: usize,
    pub m: usize,
    pub nu: usize,
    #[serde(rename = "def")]
    pub deficiency: usize,
    pub alpha: Option<usize>,
    pub kappa: Option<usize>,
    pub flags: PropertyFlags,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyFlags {
    pub factor_critical: bool,
    pub equimatchable: bool,
    pub randomly_matchable: bool,
    pub bipartite: bool,
    pub connected: bool,
}

impl PropertyReport {
    /// Matching-side properties; `alpha` and `kappa` are left unset.
    pub fn matching_properties(g: &Graph) -> Self {
        let nu = maximum_matching(g).len();
        let equimatchable = is_equimatchable(g);
        PropertyReport {
            n: g.order(),
            m: g.size(),
            nu,
            deficiency: g.order() - 2 * nu,
            alpha: None,
            kappa: None,
            flags: PropertyFlags {
                factor_critical: is_factor_critical(g),
                equimatchable,
                randomly_matchable: is_randomly_matchable(g),
                bipartite: g.is_bipartite(),
                connected: g.is_connected(),
            },
        }
    }
}

/// If `K_{n,n} - {u, v}` is randomly matchable then `u` and `v` are adjacent;
/// checked over every vertex pair.
pub fn observation_knn_removal_check(n: usize) -> Verdict {
    let id = StatementId::ObservationKnnRemoval;
    if n == 0 {
        return Verdict::not_applicable(id, "n must be at least 1");
    }
    let g = Graph::complete_bipartite(n, n);
    let mut pairs = 0;
    let mut rm_pairs = 0;
    for u in g.vertices() {
        for v in u + 1..g.order() {
            pairs += 1;
            let (h, _) = g.remove_vertices(&VertexSet::from([u, v])).expect("in range");
            if is_randomly_matchable(&h) {
                rm_pairs += 1;
                if !g.has_edge(u, v) {
                    return Verdict::fails(
                        id,
                        Violation::NonAdjacentRemovablePair { n, u, v },
                        json!({ "n": n }),
                    );
                }
            }
        }
    }
    Verdict::holds(id, json!({ "n": n, "pairs_checked": pairs, "randomly_matchable_pairs": rm_pairs }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::Status;

    #[test]
    fn ge_examples() {
        let ge = gallai_edmonds(&Graph::cycle(5));
        assert_eq!((ge.d.len(), ge.a.len(), ge.c.len()), (5, 0, 0));

        let ge = gallai_edmonds(&Graph::complete(4));
        assert_eq!(ge.c, VertexSet::range(4));
        assert!(ge.d.is_empty() && ge.a.is_empty());

        let g = Graph::complete_bipartite(1, 3);
        let ge = gallai_edmonds(&g);
        assert_eq!(ge.d, VertexSet::from([1, 2, 3]));
        assert_eq!(ge.a, VertexSet::from([0]));
        assert!(ge.c.is_empty());
        assert_eq!(ge.deficiency, 2);
        assert_eq!(ge.component_count_excess(&g), 2);
    }

    #[test]
    fn missing_matching_certificates() {
        let g = Graph::complete_bipartite(1, 3);
        for v in 1..4 {
            let m = maximum_matching_missing(&g, v).unwrap();
            assert!(!m.covers(v));
            assert_eq!(m.len(), 1);
        }
        assert!(maximum_matching_missing(&g, 0).is_none());
    }

    #[test]
    fn factor_critical_examples() {
        assert!(is_factor_critical(&Graph::cycle(5)));
        assert!(!is_factor_critical(&Graph::complete(4)));
        assert!(!is_factor_critical(&Graph::path(5)));
        assert!(is_factor_critical(&Graph::complete(1)));
    }

    #[test]
    fn randomly_matchable_examples() {
        assert!(is_randomly_matchable(&Graph::complete(6)));
        assert!(is_randomly_matchable(&Graph::complete_bipartite(3, 3)));
        assert!(!is_randomly_matchable(&Graph::path(4)));
        assert!(is_randomly_matchable(&Graph::empty(0)));
        assert!(!is_randomly_matchable(&Graph::complete_bipartite(2, 3)));
    }

    #[test]
    fn equimatchable_examples() {
        assert!(is_equimatchable(&Graph::complete_bipartite(3, 3)));
        assert!(is_equimatchable(&Graph::complete(6)));
        assert!(is_equimatchable(&Graph::cycle(7)));

        let c9 = Graph::cycle(9);
        let e = equimatchability(&c9);
        assert!(!e.equimatchable);
        let w = e.witness.unwrap();
        // first independent triple in lexicographic order whose neighbourhood saturates
        assert_eq!(w.independent, VertexSet::from([0, 3, 6]));
        assert!(crate::matching::is_maximal(&c9, &w.maximal).unwrap());
        assert_eq!(w.maximal.len(), 3);
        assert!(w.independent.iter().all(|v| !w.maximal.covers(v)));
    }

    #[test]
    fn knn_observation() {
        for n in 1..=4 {
            let v = observation_knn_removal_check(n);
            assert_eq!(v.status, Status::Holds, "n={n}");
        }
        assert_eq!(observation_knn_removal_check(0).status, Status::NotApplicable);
    }

    #[test]
    fn removing_adjacent_pair_from_rigid_families() {
        for n in 1..=4 {
            let k = Graph::complete(2 * n);
            let (h, _) = k.remove_vertices(&VertexSet::from([0, 1])).unwrap();
            assert_eq!(h, Graph::complete(2 * n - 2));
            let b = Graph::complete_bipartite(n, n);
            let (h, _) = b.remove_vertices(&VertexSet::from([0, n])).unwrap();
            assert_eq!(h, Graph::complete_bipartite(n - 1, n - 1));
        }
    }
}
