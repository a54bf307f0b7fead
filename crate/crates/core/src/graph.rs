//! Immutable simple undirected graphs over dense vertex ids `0..n`.
//!
//! Every derived graph (`G - S`, `G + e`, induced subgraphs) is a new value.
//! Relabeling is never implicit: operations that renumber vertices return a
//! [`Relabel`] map back to the parent graph.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Unordered edge, always stored with `.0 < .1`.
pub type Edge = (Vertex, Vertex);

pub(crate) fn edge(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Sorted, duplicate-free set of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn range(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(vec![v])
    }

    pub fn from_bits(bits: &FixedBitSet) -> Self {
        VertexSet(bits.ones().collect())
    }

    pub fn to_bits(&self, n: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(n);
        for &v in &self.0 {
            bits.insert(v);
        }
        bits
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| other.contains(v)).collect()
    }

    pub fn with(&self, v: Vertex) -> VertexSet {
        self.iter().chain(std::iter::once(v)).collect()
    }

    pub fn without(&self, v: Vertex) -> VertexSet {
        self.iter().filter(|&u| u != v).collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    /// Checks every member against the vertex range of a graph on `n` vertices.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, order: n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(v: [Vertex; N]) -> Self {
        v.into_iter().collect()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Map from the vertices of a derived graph back to its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabel {
    to_parent: Vec<Vertex>,
    to_local: Vec<Option<Vertex>>,
}

impl Relabel {
    fn new(keep: &VertexSet, parent_order: usize) -> Self {
        let mut to_local = vec![None; parent_order];
        for (i, v) in keep.iter().enumerate() {
            to_local[v] = Some(i);
        }
        Relabel { to_parent: keep.as_slice().to_vec(), to_local }
    }

    pub fn parent(&self, local: Vertex) -> Vertex {
        self.to_parent[local]
    }

    pub fn local(&self, parent: Vertex) -> Option<Vertex> {
        self.to_local.get(parent).copied().flatten()
    }

    pub fn parent_set(&self, local: &VertexSet) -> VertexSet {
        local.iter().map(|v| self.parent(v)).collect()
    }

    /// Vertices of `parent` that survive in the derived graph, renumbered.
    pub fn local_set(&self, parent: &VertexSet) -> VertexSet {
        parent.iter().filter_map(|v| self.local(v)).collect()
    }

    pub fn parent_edge(&self, e: Edge) -> Edge {
        edge(self.parent(e.0), self.parent(e.1))
    }
}

/// Simple undirected graph with sorted adjacency lists and bitset rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    rows: Vec<FixedBitSet>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            rows: vec![FixedBitSet::with_capacity(n); n],
            edge_count: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.rows[u].contains(v) {
                let (a, b) = edge(u, v);
                return Err(Error::DuplicateEdge(a, b));
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
            g.edge_count += 1;
        }
        g.rebuild_lists();
        Ok(g)
    }

    /// Builds from edges that are known to be valid and distinct.
    pub(crate) fn from_rows(rows: Vec<FixedBitSet>) -> Self {
        let edge_count = rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2;
        let mut g = Graph { adj: Vec::new(), rows, edge_count };
        g.rebuild_lists();
        g
    }

    fn rebuild_lists(&mut self) {
        self.adj = self.rows.iter().map(|r| r.ones().collect()).collect();
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph edges are valid")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges).expect("complete bipartite edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| edge(i, (i + 1) % n))).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::from_edges(10, edges).expect("petersen edges are valid")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::range(self.order())
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn neighbor_bits(&self, v: Vertex) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && v < self.order() && self.rows[u].contains(v)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    /// Subgraph induced by `keep`, renumbered in increasing order of `keep`.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<(Graph, Relabel)> {
        keep.check_range(self.order())?;
        let relabel = Relabel::new(keep, self.order());
        let k = keep.len();
        let mut rows = vec![FixedBitSet::with_capacity(k); k];
        for (i, u) in keep.iter().enumerate() {
            for &v in &self.adj[u] {
                if let Some(j) = relabel.local(v) {
                    rows[i].insert(j);
                }
            }
        }
        Ok((Graph::from_rows(rows), relabel))
    }

    /// `G - drop`.
    pub fn remove_vertices(&self, drop: &VertexSet) -> Result<(Graph, Relabel)> {
        drop.check_range(self.order())?;
        self.induced_subgraph(&self.vertex_set().difference(drop))
    }

    /// `G + uv`.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            let (a, b) = edge(u, v);
            return Err(Error::DuplicateEdge(a, b));
        }
        let mut rows = self.rows.clone();
        rows[u].insert(v);
        rows[v].insert(u);
        Ok(Graph::from_rows(rows))
    }

    /// `G - uv`.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u.min(v), u.max(v)));
        }
        let mut rows = self.rows.clone();
        rows[u].set(v, false);
        rows[v].set(u, false);
        Ok(Graph::from_rows(rows))
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut alive = FixedBitSet::with_capacity(self.order());
        alive.insert_range(..);
        self.components_within(&alive)
    }

    /// Components of the subgraph induced by `alive`, in parent labels.
    pub fn components_within(&self, alive: &FixedBitSet) -> Vec<VertexSet> {
        let mut seen = FixedBitSet::with_capacity(self.order());
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in alive.ones() {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if alive.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp.into_iter().collect());
        }
        out
    }

    /// Components of `G - removed`, in parent labels.
    pub fn components_without(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let mut alive = FixedBitSet::with_capacity(self.order());
        alive.insert_range(..);
        for v in removed.iter() {
            alive.set(v, false);
        }
        self.components_within(&alive)
    }

    /// Whether the subgraph induced by `set` is connected (the empty set is).
    pub fn is_connected_within(&self, set: &VertexSet) -> bool {
        self.components_within(&set.to_bits(self.order())).len() <= 1
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn complement_edges(&self) -> Vec<Edge> {
        let n = self.order();
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.edge_count * 2 == n * n.saturating_sub(1)
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let s = set.as_slice();
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        let s = set.as_slice();
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Proper 2-colouring, if one exists. The smallest vertex of every
    /// component gets colour 0; returns (colour 0, colour 1).
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.order();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &w in &self.adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let zero = (0..n).filter(|&v| colour[v] == Some(false)).collect();
        let one = (0..n).filter(|&v| colour[v] == Some(true)).collect();
        Some((zero, one))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Whether the graph is `K_{a,b}` for some `a, b >= 1`, returning the
    /// sides (smaller first, ties by smallest member).
    pub fn complete_bipartite_sides(&self) -> Option<(VertexSet, VertexSet)> {
        if self.order() < 2 || !self.is_connected() {
            return None;
        }
        let (x, y) = self.bipartition()?;
        if self.edge_count != x.len() * y.len() {
            return None;
        }
        if y.len() < x.len() {
            Some((y, x))
        } else {
            Some((x, y))
        }
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        let bits = set.to_bits(self.order());
        set.iter()
            .map(|u| self.rows[u].intersection(&bits).count())
            .sum::<usize>()
            / 2
    }

    /// `N(set) \ set`.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut bits = FixedBitSet::with_capacity(self.order());
        for u in set.iter() {
            bits.union_with(&self.rows[u]);
        }
        for u in set.iter() {
            bits.set(u, false);
        }
        VertexSet::from_bits(&bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::from_edges(3, [(0, 0)]), Err(Error::SelfLoop(0))));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, order: 3 })
        ));
    }

    #[test]
    fn induced_subgraph_of_complete_is_complete() {
        let k4 = Graph::complete(4);
        let (h, map) = k4.induced_subgraph(&VertexSet::from([0, 2, 3])).unwrap();
        assert_eq!(h, Graph::complete(3));
        assert_eq!(map.parent(1), 2);
        assert_eq!(map.local(1), None);
    }

    #[test]
    fn induced_subgraph_identity() {
        let c5 = Graph::cycle(5);
        let (h, _) = c5.induced_subgraph(&c5.vertex_set()).unwrap();
        assert_eq!(h, c5);
    }

    #[test]
    fn petersen_outer_face_is_c5() {
        let p = Graph::petersen();
        assert_eq!(p.size(), 15);
        assert!(p.vertices().all(|v| p.degree(v) == 3));
        let (h, _) = p.induced_subgraph(&VertexSet::from([0, 1, 2, 3, 4])).unwrap();
        assert_eq!(h, Graph::cycle(5));
        // inner pentagram relabels to 0-2-4-1-3-0, also a 5-cycle
        let (inner, _) = p.induced_subgraph(&VertexSet::from([5, 6, 7, 8, 9])).unwrap();
        assert_eq!(inner.size(), 5);
        assert!(inner.vertices().all(|v| inner.degree(v) == 2));
        assert!(inner.is_connected());
    }

    #[test]
    fn induced_subgraph_out_of_range() {
        assert!(Graph::complete(3).induced_subgraph(&VertexSet::from([0, 5])).is_err());
    }

    #[test]
    fn components_examples() {
        assert_eq!(Graph::complete(4).components(), vec![VertexSet::range(4)]);
        let two_k2 = Graph::from_edges(4, [(0, 2), (1, 3)]).unwrap();
        assert_eq!(
            two_k2.components(),
            vec![VertexSet::from([0, 2]), VertexSet::from([1, 3])]
        );
    }

    #[test]
    fn complement_edges_examples() {
        assert!(Graph::complete(5).complement_edges().is_empty());
        assert_eq!(Graph::empty(3).complement_edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(
            Graph::cycle(5).complement_edges(),
            vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
        );
    }

    #[test]
    fn complete_bipartite_recognition() {
        let (a, b) = Graph::complete_bipartite(3, 2).complete_bipartite_sides().unwrap();
        assert_eq!(a, VertexSet::from([3, 4]));
        assert_eq!(b, VertexSet::from([0, 1, 2]));
        assert!(Graph::cycle(6).complete_bipartite_sides().is_none());
        assert!(Graph::cycle(4).complete_bipartite_sides().is_some());
        assert!(Graph::cycle(5).bipartition().is_none());
    }

    #[test]
    fn vertex_set_ops() {
        let a = VertexSet::from([3, 1, 2, 1]);
        assert_eq!(a.as_slice(), &[1, 2, 3]);
        let b = VertexSet::from([2, 5]);
        assert_eq!(a.union(&b), VertexSet::from([1, 2, 3, 5]));
        assert_eq!(a.difference(&b), VertexSet::from([1, 3]));
        assert_eq!(a.intersection(&b), VertexSet::from([2]));
        assert_eq!(a.to_string(), "{1,2,3}");
    }
}
