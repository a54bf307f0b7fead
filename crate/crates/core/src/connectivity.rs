//! Vertex connectivity, minimum vertex cuts, and exact independence number.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::matching::{bipartite_max_matching, Matching};

/// A vertex cut `S` with the components of `G - S`, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutDecomposition {
    pub cut: VertexSet,
    pub parts: Vec<VertexSet>,
    pub k: usize,
}

impl CutDecomposition {
    pub fn new(g: &Graph, cut: VertexSet) -> Self {
        let mut parts = g.components_without(&cut);
        parts.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.first().cmp(&b.first())));
        let k = cut.len();
        CutDecomposition { cut, parts, k }
    }

    pub fn component_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(VertexSet::len).collect()
    }

    /// No edge joins distinct parts, every part is non-empty and connected,
    /// and the parts partition `V \ S`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::new();
        for (i, p) in self.parts.iter().enumerate() {
            if p.is_empty() || !p.is_disjoint(&self.cut) || !g.is_connected_within(p) {
                return false;
            }
            if !p.is_disjoint(&seen) {
                return false;
            }
            seen = seen.union(p);
            for q in &self.parts[i + 1..] {
                if p.iter().any(|u| q.iter().any(|v| g.has_edge(u, v))) {
                    return false;
                }
            }
        }
        self.parts.len() >= 2 && seen.union(&self.cut) == g.vertex_set()
    }
}

/// Whether removing `s` leaves at least two components.
pub fn is_vertex_cut(g: &Graph, s: &VertexSet) -> bool {
    g.components_without(s).len() >= 2
}

/// Maximum number of internally disjoint `s`–`t` paths for non-adjacent
/// `s != t`, stopping early once `limit` is reached.
pub fn local_connectivity(g: &Graph, s: Vertex, t: Vertex, limit: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    // node 2v = v_in, 2v+1 = v_out; unit capacity on v_in -> v_out
    let n = g.order();
    let mut net = FlowNetwork::new(2 * n);
    for v in g.vertices() {
        let cap = if v == s || v == t { n } else { 1 };
        net.add_edge(2 * v, 2 * v + 1, cap);
        for &w in g.neighbors(v) {
            net.add_edge(2 * v + 1, 2 * w, n);
        }
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<usize>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork { head: vec![Vec::new(); nodes], to: Vec::new(), cap: Vec::new() }
    }

    fn add_edge(&mut self, a: usize, b: usize, c: usize) {
        self.head[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(c);
        self.head[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn max_flow(&mut self, src: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit {
            let mut via = vec![usize::MAX; self.head.len()];
            let mut queue = VecDeque::from([src]);
            let mut reached = false;
            while let Some(x) = queue.pop_front() {
                for &e in &self.head[x] {
                    let y = self.to[e];
                    if self.cap[e] > 0 && y != src && via[y] == usize::MAX {
                        via[y] = e;
                        if y == sink {
                            reached = true;
                            break;
                        }
                        queue.push_back(y);
                    }
                }
                if reached {
                    break;
                }
            }
            if !reached {
                break;
            }
            let mut y = sink;
            while y != src {
                let e = via[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// `κ(G)`; `n - 1` for complete graphs, 0 for disconnected ones.
///
/// With `s` a vertex of minimum degree: if some minimum cut avoids `s` it
/// separates `s` from a non-neighbour; otherwise every minimum cut contains
/// `s`, and two non-adjacent neighbours of `s` lie on opposite sides.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    if !g.is_connected() {
        return 0;
    }
    let s = g.vertices().min_by_key(|&v| (g.degree(v), v)).expect("non-empty");
    let mut best = g.degree(s);
    for t in g.vertices() {
        if t != s && !g.has_edge(s, t) {
            best = best.min(local_connectivity(g, s, t, best));
        }
    }
    let nbrs = g.neighbors(s);
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) {
                best = best.min(local_connectivity(g, x, y, best));
            }
        }
    }
    best
}

/// Every vertex cut of size `κ(G)`, in lexicographic order of the cut.
/// `cap` bounds how many are returned; the flag reports truncation.
pub fn minimum_vertex_cuts(g: &Graph, cap: Option<usize>) -> Result<(Vec<CutDecomposition>, bool)> {
    if g.is_complete() {
        return Err(Error::NoVertexCut);
    }
    let k = vertex_connectivity(g);
    let cap = cap.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    let mut truncated = false;
    let mut chosen = Vec::with_capacity(k);
    subsets(g.order(), k, 0, &mut chosen, &mut |s| {
        let set: VertexSet = s.iter().copied().collect();
        if is_vertex_cut(g, &set) {
            if out.len() == cap {
                truncated = true;
                return false;
            }
            out.push(CutDecomposition::new(g, set));
        }
        true
    });
    Ok((out, truncated))
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it returns false.
fn subsets(
    n: usize,
    k: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if chosen.len() == k {
        return f(chosen);
    }
    for v in from..n {
        if n - v < k - chosen.len() {
            break;
        }
        chosen.push(v);
        let go = subsets(n, k, v + 1, chosen, f);
        chosen.pop();
        if !go {
            return false;
        }
    }
    true
}

/// Exact `α(G)` with a maximum independent set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceCertificate {
    pub alpha: usize,
    pub witness: VertexSet,
}

/// Branch and bound: candidates are greedily partitioned into cliques of
/// `G` (colour classes of the complement), and each clique can contribute
/// at most one vertex, which bounds the branch.
pub fn independence_number(g: &Graph) -> IndependenceCertificate {
    let n = g.order();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);

    // greedy start: repeatedly take the minimum-degree candidate
    let mut best = Vec::new();
    let mut cand = all.clone();
    while let Some(v) = cand.ones().min_by_key(|&v| (g.neighbor_bits(v).intersection(&cand).count(), v)) {
        best.push(v);
        cand.set(v, false);
        cand.difference_with(g.neighbor_bits(v));
    }

    let mut cur = Vec::new();
    expand(g, &mut cur, all, &mut best);
    IndependenceCertificate { alpha: best.len(), witness: best.into_iter().collect() }
}

fn clique_cover_order(g: &Graph, p: &FixedBitSet) -> (Vec<Vertex>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.count_ones(..));
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut uncovered = p.clone();
    let mut class = 0;
    while !uncovered.is_clear() {
        class += 1;
        let mut q = uncovered.clone();
        while let Some(v) = q.ones().next() {
            order.push(v);
            bounds.push(class);
            uncovered.set(v, false);
            q.set(v, false);
            q.intersect_with(g.neighbor_bits(v));
        }
    }
    (order, bounds)
}

fn expand(g: &Graph, cur: &mut Vec<Vertex>, mut p: FixedBitSet, best: &mut Vec<Vertex>) {
    let (order, bounds) = clique_cover_order(g, &p);
    for i in (0..order.len()).rev() {
        if cur.len() + bounds[i] <= best.len() {
            return;
        }
        let v = order[i];
        cur.push(v);
        let mut next = p.clone();
        next.set(v, false);
        next.difference_with(g.neighbor_bits(v));
        if next.is_clear() {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
        } else {
            expand(g, cur, next, best);
        }
        cur.pop();
        p.set(v, false);
    }
}

/// Maximum matching between `h` and `x` (edges with one end in each).
pub fn independent_edges_between(g: &Graph, h: &VertexSet, x: &VertexSet) -> Result<Matching> {
    Ok(bipartite_max_matching(g, h, x)?.matching)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&Graph::complete(5)), 4);
        assert_eq!(vertex_connectivity(&Graph::petersen()), 3);
        assert_eq!(vertex_connectivity(&Graph::cycle(6)), 2);
        assert_eq!(vertex_connectivity(&Graph::path(4)), 1);
        assert_eq!(vertex_connectivity(&Graph::empty(3)), 0);
        assert_eq!(vertex_connectivity(&Graph::complete_bipartite(3, 4)), 3);
        assert_eq!(vertex_connectivity(&Graph::empty(1)), 0);
    }

    #[test]
    fn c5_minimum_cuts() {
        let g = Graph::cycle(5);
        let (cuts, truncated) = minimum_vertex_cuts(&g, None).unwrap();
        assert!(!truncated);
        let sets: Vec<VertexSet> = cuts.iter().map(|c| c.cut.clone()).collect();
        assert_eq!(
            sets,
            vec![
                VertexSet::from([0, 2]),
                VertexSet::from([0, 3]),
                VertexSet::from([1, 3]),
                VertexSet::from([1, 4]),
                VertexSet::from([2, 4]),
            ]
        );
        for c in &cuts {
            assert!(c.is_valid(&g));
            assert_eq!(c.component_sizes(), vec![2, 1]);
        }
        let (capped, truncated) = minimum_vertex_cuts(&g, Some(2)).unwrap();
        assert_eq!(capped.len(), 2);
        assert!(truncated);
    }

    #[test]
    fn complete_graph_has_no_cut() {
        assert!(matches!(minimum_vertex_cuts(&Graph::complete(4), None), Err(Error::NoVertexCut)));
    }

    #[test]
    fn disconnected_graph_has_empty_cut() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let (cuts, _) = minimum_vertex_cuts(&g, None).unwrap();
        assert_eq!(cuts.len(), 1);
        assert!(cuts[0].cut.is_empty());
        assert_eq!(cuts[0].parts.len(), 2);
    }

    #[test]
    fn independence_examples() {
        for n in 1..6 {
            assert_eq!(independence_number(&Graph::complete(n)).alpha, 1);
        }
        assert_eq!(independence_number(&Graph::empty(0)).alpha, 0);
        let c5 = independence_number(&Graph::cycle(5));
        assert_eq!(c5.alpha, 2);
        assert!(Graph::cycle(5).is_independent(&c5.witness));
        assert_eq!(independence_number(&Graph::petersen()).alpha, 4);
        assert_eq!(independence_number(&Graph::cycle(7)).alpha, 3);
    }

    #[test]
    fn independent_edges_single_vertex() {
        let g = Graph::complete_bipartite(1, 3);
        let m = independent_edges_between(&g, &VertexSet::from([0]), &VertexSet::from([1, 2, 3])).unwrap();
        assert_eq!(m.len(), 1);
        assert!(independent_edges_between(&g, &VertexSet::from([0, 1]), &VertexSet::from([1])).is_err());
    }
}
