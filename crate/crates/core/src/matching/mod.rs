//! Matchings and the algorithms that produce them.

mod bipartite;
mod blossom;
mod enumerate;
mod saturate;

pub use bipartite::{bipartite_max_matching, KonigCertificate};
pub use blossom::{augmenting_path, maximum_matching};
pub use enumerate::{
    maximal_matchings, minimal_isolating_matchings, visit_matchings, visit_maximal_matchings,
    visit_minimal_isolating_matchings,
};
pub use saturate::saturating_matching;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex, VertexSet};

/// A set of pairwise non-incident edges, kept in lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching::default()
    }

    /// Validates that every pair is an edge of `g` and that no two share a vertex.
    pub fn new<I: IntoIterator<Item = Edge>>(g: &Graph, edges: I) -> Result<Self> {
        let m = Matching::from_edges_unchecked(edges);
        m.validate(g)?;
        Ok(m)
    }

    pub(crate) fn from_edges_unchecked<I: IntoIterator<Item = Edge>>(edges: I) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| edge(u, v)).collect();
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    pub(crate) fn from_mates(mate: &[Option<Vertex>]) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| v > u).map(|v| (u, v)))
            .collect();
        Matching { edges }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut owner: Vec<Option<Edge>> = vec![None; g.order()];
        for &(u, v) in &self.edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if !g.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
            for w in [u, v] {
                if let Some((a, b)) = owner[w] {
                    return Err(Error::NotAMatching(a, b, u, v));
                }
                owner[w] = Some((u, v));
            }
        }
        Ok(())
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&edge(e.0, e.1)).is_ok()
    }

    /// `V(M)`.
    pub fn covered(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.edges.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn mates(&self, n: usize) -> Vec<Option<Vertex>> {
        let mut mate = vec![None; n];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }

    pub fn union(&self, other: &Matching) -> Matching {
        Matching::from_edges_unchecked(self.edges.iter().chain(&other.edges).copied())
    }

    pub fn without(&self, e: Edge) -> Matching {
        let e = edge(e.0, e.1);
        Matching { edges: self.edges.iter().copied().filter(|&f| f != e).collect() }
    }

    /// Maps every endpoint through `f` (used to lift matchings of derived graphs).
    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Matching {
        Matching::from_edges_unchecked(self.edges.iter().map(|&(u, v)| (f(u), f(v))))
    }

    /// Keeps the edges with both endpoints in `set`.
    pub fn restrict(&self, set: &VertexSet) -> Matching {
        Matching {
            edges: self
                .edges
                .iter()
                .copied()
                .filter(|&(u, v)| set.contains(u) && set.contains(v))
                .collect(),
        }
    }
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.edges.iter().map(|(u, v)| format!("{u}-{v}")))
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "}}")
    }
}

/// `ν(G)`.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// `n - 2ν(G)`: the number of vertices every maximum matching leaves exposed.
pub fn deficiency(g: &Graph) -> usize {
    g.order() - 2 * matching_number(g)
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order().is_multiple_of(2) && deficiency(g) == 0
}

/// True iff no edge of `g` has both endpoints exposed by `m`.
pub fn is_maximal(g: &Graph, m: &Matching) -> Result<bool> {
    m.validate(g)?;
    let mate = m.mates(g.order());
    Ok(g.edges().all(|(u, v)| mate[u].is_some() || mate[v].is_some()))
}

/// Greedily adds edges in lexicographic order until `m` is maximal.
pub fn extend_to_maximal(g: &Graph, m: &Matching) -> Result<Matching> {
    m.validate(g)?;
    let mut mate = m.mates(g.order());
    for (u, v) in g.edges() {
        if mate[u].is_none() && mate[v].is_none() {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
    }
    Ok(Matching::from_mates(&mate))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let c5 = Graph::cycle(5);
        assert!(Matching::new(&c5, [(0, 1), (2, 3)]).is_ok());
        assert!(matches!(Matching::new(&c5, [(0, 2)]), Err(Error::NotAnEdge(0, 2))));
        assert!(matches!(
            Matching::new(&c5, [(0, 1), (1, 2)]),
            Err(Error::NotAMatching(0, 1, 1, 2))
        ));
    }

    #[test]
    fn is_maximal_examples() {
        let c5 = Graph::cycle(5);
        let m = Matching::new(&c5, [(0, 1), (2, 3)]).unwrap();
        assert!(is_maximal(&c5, &m).unwrap());

        let p4 = Graph::path(4);
        let m = Matching::new(&p4, [(1, 2)]).unwrap();
        assert!(is_maximal(&p4, &m).unwrap());

        assert!(!is_maximal(&Graph::complete(2), &Matching::empty()).unwrap());
        assert!(is_maximal(&p4, &Matching::from_edges_unchecked([(0, 2)])).is_err());
    }

    #[test]
    fn extend_examples() {
        let k4 = Graph::complete(4);
        let m = extend_to_maximal(&k4, &Matching::empty()).unwrap();
        assert_eq!(m.edges(), &[(0, 1), (2, 3)]);

        let p4 = Graph::path(4);
        let m = Matching::new(&p4, [(1, 2)]).unwrap();
        assert_eq!(extend_to_maximal(&p4, &m).unwrap(), m);

        let c5 = Graph::cycle(5);
        let m = extend_to_maximal(&c5, &Matching::new(&c5, [(0, 1)]).unwrap()).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.contains((0, 1)));
    }

    #[test]
    fn deficiency_examples() {
        assert_eq!(deficiency(&Graph::complete(6)), 0);
        assert_eq!(deficiency(&Graph::cycle(5)), 1);
        assert_eq!(deficiency(&Graph::complete_bipartite(1, 3)), 2);
    }

    #[test]
    fn serializes_as_pairs() {
        let m = Matching::from_edges_unchecked([(3, 2), (0, 1)]);
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"["0-1","2-3"]"#);
    }
}
