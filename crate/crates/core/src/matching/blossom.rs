//! Edmonds' blossom algorithm for maximum cardinality matching.

use std::collections::VecDeque;

use super::Matching;
use crate::graph::{Graph, Vertex};

const NONE: usize = usize::MAX;

struct Search<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, mate: Vec<usize>) -> Self {
        let n = g.order();
        Search {
            g,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the exposed endpoint of
    /// an augmenting path, whose vertices are recovered through `parent`/`mate`.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn path_to(&self, end: usize) -> Vec<Vertex> {
        let mut path = vec![end];
        let mut v = end;
        loop {
            let pv = self.parent[v];
            path.push(pv);
            match self.mate[pv] {
                NONE => break,
                w => {
                    path.push(w);
                    v = w;
                }
            }
        }
        path
    }

    fn augment(&mut self, end: usize) {
        let mut v = end;
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

fn greedy_mates(g: &Graph) -> Vec<usize> {
    let mut mate = vec![NONE; g.order()];
    for (u, v) in g.edges() {
        if mate[u] == NONE && mate[v] == NONE {
            mate[u] = v;
            mate[v] = u;
        }
    }
    mate
}

fn to_matching(mate: &[usize]) -> Matching {
    let mates: Vec<Option<Vertex>> = mate.iter().map(|&m| (m != NONE).then_some(m)).collect();
    Matching::from_mates(&mates)
}

/// Maximum cardinality matching. Starts from the lexicographic greedy
/// matching and augments from exposed vertices in increasing order, so the
/// result is deterministic.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut search = Search::new(g, greedy_mates(g));
    for root in g.vertices() {
        if search.mate[root] == NONE {
            if let Some(end) = search.find_path(root) {
                search.augment(end);
            }
        }
    }
    to_matching(&search.mate)
}

/// An `m`-augmenting path `[x0, x1, ..., x_{2l+1}]` with both ends exposed
/// and `x_{2i+1} x_{2i+2} ∈ m`, or `None` when `m` is maximum.
pub fn augmenting_path(g: &Graph, m: &Matching) -> Option<Vec<Vertex>> {
    let mate = m.mates(g.order()).into_iter().map(|x| x.unwrap_or(NONE)).collect();
    let mut search = Search::new(g, mate);
    for root in g.vertices() {
        if search.mate[root] == NONE {
            if let Some(end) = search.find_path(root) {
                return Some(search.path_to(end));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    fn is_augmenting(g: &Graph, m: &Matching, path: &[Vertex]) -> bool {
        let distinct: VertexSet = path.iter().copied().collect();
        path.len().is_multiple_of(2)
            && distinct.len() == path.len()
            && !m.covers(path[0])
            && !m.covers(*path.last().unwrap())
            && path.windows(2).enumerate().all(|(i, w)| {
                g.has_edge(w[0], w[1]) && (i % 2 == 1) == m.contains((w[0], w[1]))
            })
    }

    #[test]
    fn examples() {
        assert_eq!(maximum_matching(&Graph::complete(4)).len(), 2);
        assert_eq!(maximum_matching(&Graph::cycle(5)).len(), 2);
        assert_eq!(maximum_matching(&Graph::petersen()).len(), 5);
        assert_eq!(maximum_matching(&Graph::empty(3)).len(), 0);
        assert_eq!(maximum_matching(&Graph::empty(0)).len(), 0);
    }

    #[test]
    fn needs_blossom_contraction() {
        // triangle 0-1-2 with pendant paths 2-3 and 0-4; greedy takes 01, 23
        // and the augmenting path from 4 must go through the odd cycle
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (0, 4), (1, 5)]).unwrap();
        let m = maximum_matching(&g);
        assert_eq!(m.len(), 3);
        m.validate(&g).unwrap();
        assert!(augmenting_path(&g, &m).is_none());
    }

    #[test]
    fn augmenting_path_is_valid() {
        let p4 = Graph::path(4);
        let m = Matching::new(&p4, [(1, 2)]).unwrap();
        let path = augmenting_path(&p4, &m).unwrap();
        assert!(is_augmenting(&p4, &m, &path), "{path:?}");

        let p = Graph::petersen();
        let m = Matching::new(&p, [(0, 1), (2, 3)]).unwrap();
        let path = augmenting_path(&p, &m).unwrap();
        assert!(is_augmenting(&p, &m, &path), "{path:?}");
    }
}
