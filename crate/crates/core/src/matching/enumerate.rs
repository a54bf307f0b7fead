//! Exhaustive enumeration of matchings, maximal matchings and minimal
//! isolating matchings. Intended for small graphs; every visitor can stop
//! early by returning `ControlFlow::Break`.

use std::ops::ControlFlow;

use super::Matching;
use crate::error::Result;
use crate::graph::{Edge, Graph, Vertex};

/// Visits every matching of `g` with at most `max_size` edges (all matchings
/// when `None`), the empty matching included. Each is visited exactly once.
pub fn visit_matchings<F>(g: &Graph, max_size: Option<usize>, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[Edge]) -> ControlFlow<()>,
{
    let edges: Vec<Edge> = g.edges().collect();
    let mut covered = vec![false; g.order()];
    let mut chosen = Vec::new();
    let cap = max_size.unwrap_or(usize::MAX);
    all_rec(&edges, 0, cap, &mut covered, &mut chosen, &mut f)
}

fn all_rec<F>(
    edges: &[Edge],
    from: usize,
    cap: usize,
    covered: &mut [bool],
    chosen: &mut Vec<Edge>,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[Edge]) -> ControlFlow<()>,
{
    f(chosen)?;
    if chosen.len() == cap {
        return ControlFlow::Continue(());
    }
    for i in from..edges.len() {
        let (u, v) = edges[i];
        if covered[u] || covered[v] {
            continue;
        }
        covered[u] = true;
        covered[v] = true;
        chosen.push((u, v));
        let flow = all_rec(edges, i + 1, cap, covered, chosen, f);
        chosen.pop();
        covered[u] = false;
        covered[v] = false;
        flow?;
    }
    ControlFlow::Continue(())
}

/// Visits every maximal matching of `g` exactly once, in a deterministic
/// order. Branches on the first edge (lexicographically) whose endpoints are
/// both exposed: take it, or exclude it. An exclusion is abandoned as soon as
/// no later edge could still cover one of its endpoints. With `size_cap`, only
/// maximal matchings with at most that many edges are produced.
pub fn visit_maximal_matchings<F>(g: &Graph, size_cap: Option<usize>, mut f: F) -> ControlFlow<()>
where
    F: FnMut(&[Edge]) -> ControlFlow<()>,
{
    let edges: Vec<Edge> = g.edges().collect();
    let mut state = MaximalState {
        g,
        edges: &edges,
        cap: size_cap.unwrap_or(usize::MAX),
        covered: vec![false; g.order()],
        chosen: Vec::new(),
        excluded: Vec::new(),
    };
    state.rec(0, &mut f)
}

struct MaximalState<'a> {
    g: &'a Graph,
    edges: &'a [Edge],
    cap: usize,
    covered: Vec<bool>,
    chosen: Vec<Edge>,
    excluded: Vec<usize>,
}

impl MaximalState<'_> {
    fn free(&self, i: usize) -> bool {
        let (u, v) = self.edges[i];
        !self.covered[u] && !self.covered[v]
    }

    /// Whether some edge after position `i` could still cover `u`.
    fn coverable_later(&self, u: Vertex, i: usize) -> bool {
        let (a, b) = self.edges[i];
        self.g.neighbors(u).iter().any(|&w| {
            let e = if u < w { (u, w) } else { (w, u) };
            e > (a, b) && !self.covered[w]
        })
    }

    fn rec<F>(&mut self, from: usize, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Edge]) -> ControlFlow<()>,
    {
        if self.chosen.len() > self.cap {
            return ControlFlow::Continue(());
        }
        let Some(i) = (from..self.edges.len()).find(|&i| self.free(i)) else {
            let maximal = self.excluded.iter().all(|&j| !self.free(j));
            if maximal {
                return f(&self.chosen);
            }
            return ControlFlow::Continue(());
        };
        let (u, v) = self.edges[i];

        self.covered[u] = true;
        self.covered[v] = true;
        self.chosen.push((u, v));
        let flow = self.rec(i + 1, f);
        self.chosen.pop();
        self.covered[u] = false;
        self.covered[v] = false;
        flow?;

        if self.coverable_later(u, i) || self.coverable_later(v, i) {
            self.excluded.push(i);
            let flow = self.rec(i + 1, f);
            self.excluded.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

pub fn maximal_matchings(g: &Graph, size_cap: Option<usize>) -> Vec<Matching> {
    let mut out = Vec::new();
    let _ = visit_maximal_matchings(g, size_cap, |m| {
        out.push(Matching::from_edges_unchecked(m.iter().copied()));
        ControlFlow::Continue(())
    });
    out
}

/// Visits every minimal matching isolating `v`: matchings that cover all of
/// `N(v)`, avoid `v`, and in which every edge meets `N(v)`.
pub fn visit_minimal_isolating_matchings<F>(g: &Graph, v: Vertex, mut f: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&[Edge]) -> ControlFlow<()>,
{
    g.check_vertex(v)?;
    let mut covered = vec![false; g.order()];
    covered[v] = true;
    let mut chosen = Vec::new();
    Ok(isolating_rec(g, v, &mut covered, &mut chosen, &mut f))
}

fn isolating_rec<F>(
    g: &Graph,
    v: Vertex,
    covered: &mut [bool],
    chosen: &mut Vec<Edge>,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[Edge]) -> ControlFlow<()>,
{
    let Some(&w) = g.neighbors(v).iter().find(|&&w| !covered[w]) else {
        let mut m = chosen.clone();
        m.sort_unstable();
        return f(&m);
    };
    for &x in g.neighbors(w) {
        if covered[x] {
            continue;
        }
        covered[w] = true;
        covered[x] = true;
        chosen.push(if w < x { (w, x) } else { (x, w) });
        let flow = isolating_rec(g, v, covered, chosen, f);
        chosen.pop();
        covered[w] = false;
        covered[x] = false;
        flow?;
    }
    ControlFlow::Continue(())
}

pub fn minimal_isolating_matchings(g: &Graph, v: Vertex) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    let _ = visit_minimal_isolating_matchings(g, v, |m| {
        out.push(Matching::from_edges_unchecked(m.iter().copied()));
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    fn sorted(mut v: Vec<Matching>) -> Vec<Matching> {
        v.sort();
        v
    }

    #[test]
    fn maximal_matchings_of_k3() {
        let ms = maximal_matchings(&Graph::complete(3), None);
        assert_eq!(ms.len(), 3);
        assert!(ms.iter().all(|m| m.len() == 1));
    }

    #[test]
    fn maximal_matchings_of_p4() {
        let g = Graph::path(4);
        let ms = sorted(maximal_matchings(&g, None));
        assert_eq!(
            ms,
            vec![
                Matching::new(&g, [(0, 1), (2, 3)]).unwrap(),
                Matching::new(&g, [(1, 2)]).unwrap(),
            ]
        );
    }

    #[test]
    fn c9_has_small_maximal_matching() {
        let g = Graph::cycle(9);
        let small = Matching::new(&g, [(0, 1), (3, 4), (6, 7)]).unwrap();
        let ms = maximal_matchings(&g, None);
        assert!(ms.contains(&small));
        let exposed = g.vertex_set().difference(&small.covered());
        assert_eq!(exposed, VertexSet::from([2, 5, 8]));
        assert!(g.is_independent(&exposed));

        let capped = maximal_matchings(&g, Some(3));
        assert!(capped.contains(&small));
        assert!(capped.iter().all(|m| m.len() <= 3));
    }

    #[test]
    fn all_matchings_count() {
        // matchings of P_4: {}, 01, 12, 23, 01+23
        let mut count = 0;
        let _ = visit_matchings(&Graph::path(4), None, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 5);
        // K_4: 1 + 6 + 3
        let mut count = 0;
        let _ = visit_matchings(&Graph::complete(4), None, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 10);
    }

    #[test]
    fn isolating_p3() {
        let g = Graph::path(3);
        let ms = minimal_isolating_matchings(&g, 0).unwrap();
        assert_eq!(ms, vec![Matching::new(&g, [(1, 2)]).unwrap()]);
    }

    #[test]
    fn isolating_c5() {
        let g = Graph::cycle(5);
        let ms = minimal_isolating_matchings(&g, 0).unwrap();
        assert_eq!(ms, vec![Matching::new(&g, [(1, 2), (3, 4)]).unwrap()]);
    }

    #[test]
    fn isolating_k5() {
        let g = Graph::complete(5);
        let ms = sorted(minimal_isolating_matchings(&g, 0).unwrap());
        let expected = sorted(vec![
            Matching::new(&g, [(1, 2), (3, 4)]).unwrap(),
            Matching::new(&g, [(1, 3), (2, 4)]).unwrap(),
            Matching::new(&g, [(1, 4), (2, 3)]).unwrap(),
        ]);
        assert_eq!(ms, expected);
    }

    #[test]
    fn isolating_out_of_range() {
        assert!(minimal_isolating_matchings(&Graph::path(3), 3).is_err());
    }
}
