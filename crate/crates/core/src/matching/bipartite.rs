//! Hopcroft–Karp on the edges between two disjoint vertex sets, with a
//! König vertex cover of the same size.

use std::collections::VecDeque;

use serde::Serialize;

use super::Matching;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Maximum left–right matching together with a vertex cover of equal size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KonigCertificate {
    pub matching: Matching,
    pub cover: VertexSet,
}

impl KonigCertificate {
    /// Checks `|matching| = |cover|`, that the matching uses only left–right
    /// edges, and that the cover meets every left–right edge.
    pub fn verify(&self, g: &Graph, left: &VertexSet, right: &VertexSet) -> bool {
        let crosses = |u: Vertex, v: Vertex| {
            (left.contains(u) && right.contains(v)) || (left.contains(v) && right.contains(u))
        };
        self.matching.validate(g).is_ok()
            && self.matching.len() == self.cover.len()
            && self.matching.edges().iter().all(|&(u, v)| crosses(u, v))
            && left.iter().all(|u| {
                g.neighbors(u)
                    .iter()
                    .filter(|&&v| right.contains(v))
                    .all(|&v| self.cover.contains(u) || self.cover.contains(v))
            })
    }
}

/// Maximum matching among edges with one end in `left` and the other in `right`.
pub fn bipartite_max_matching(
    g: &Graph,
    left: &VertexSet,
    right: &VertexSet,
) -> Result<KonigCertificate> {
    left.check_range(g.order())?;
    right.check_range(g.order())?;
    if let Some(v) = left.iter().find(|&v| right.contains(v)) {
        return Err(Error::NotDisjoint(v));
    }

    let l: Vec<Vertex> = left.iter().collect();
    let n = g.order();
    let mut right_index = vec![usize::MAX; n];
    for (j, v) in right.iter().enumerate() {
        right_index[v] = j;
    }
    let nbrs: Vec<Vec<usize>> = l
        .iter()
        .map(|&u| {
            g.neighbors(u)
                .iter()
                .filter(|&&v| right_index[v] != usize::MAX)
                .map(|&v| right_index[v])
                .collect()
        })
        .collect();

    let mut hk = HopcroftKarp::new(nbrs, right.len());
    hk.run();

    let r: Vec<Vertex> = right.iter().collect();
    let matching = Matching::from_edges_unchecked(
        hk.mate_l
            .iter()
            .enumerate()
            .filter_map(|(i, m)| m.map(|j| (l[i], r[j]))),
    );

    // König: Z = vertices reachable from exposed left vertices by alternating
    // paths; cover = (L \ Z) ∪ (R ∩ Z).
    let mut zl = vec![false; l.len()];
    let mut zr = vec![false; r.len()];
    let mut queue: VecDeque<usize> = (0..l.len()).filter(|&i| hk.mate_l[i].is_none()).collect();
    for &i in &queue {
        zl[i] = true;
    }
    while let Some(i) = queue.pop_front() {
        for &j in &hk.adj[i] {
            if hk.mate_l[i] == Some(j) || zr[j] {
                continue;
            }
            zr[j] = true;
            if let Some(i2) = hk.mate_r[j] {
                if !zl[i2] {
                    zl[i2] = true;
                    queue.push_back(i2);
                }
            }
        }
    }
    let cover = (0..l.len())
        .filter(|&i| !zl[i])
        .map(|i| l[i])
        .chain((0..r.len()).filter(|&j| zr[j]).map(|j| r[j]))
        .collect();

    Ok(KonigCertificate { matching, cover })
}

struct HopcroftKarp {
    adj: Vec<Vec<usize>>,
    mate_l: Vec<Option<usize>>,
    mate_r: Vec<Option<usize>>,
    dist: Vec<usize>,
}

impl HopcroftKarp {
    fn new(adj: Vec<Vec<usize>>, right: usize) -> Self {
        let left = adj.len();
        HopcroftKarp { adj, mate_l: vec![None; left], mate_r: vec![None; right], dist: vec![0; left] }
    }

    fn bfs(&mut self) -> bool {
        let mut queue = VecDeque::new();
        let mut found = false;
        for i in 0..self.adj.len() {
            if self.mate_l[i].is_none() {
                self.dist[i] = 0;
                queue.push_back(i);
            } else {
                self.dist[i] = usize::MAX;
            }
        }
        while let Some(i) = queue.pop_front() {
            for &j in &self.adj[i] {
                match self.mate_r[j] {
                    None => found = true,
                    Some(i2) if self.dist[i2] == usize::MAX => {
                        self.dist[i2] = self.dist[i] + 1;
                        queue.push_back(i2);
                    }
                    Some(_) => {}
                }
            }
        }
        found
    }

    fn dfs(&mut self, i: usize) -> bool {
        for k in 0..self.adj[i].len() {
            let j = self.adj[i][k];
            let ok = match self.mate_r[j] {
                None => true,
                Some(i2) => self.dist[i2] == self.dist[i] + 1 && self.dfs(i2),
            };
            if ok {
                self.mate_l[i] = Some(j);
                self.mate_r[j] = Some(i);
                return true;
            }
        }
        self.dist[i] = usize::MAX;
        false
    }

    fn run(&mut self) {
        while self.bfs() {
            for i in 0..self.adj.len() {
                if self.mate_l[i].is_none() {
                    self.dfs(i);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k33() {
        let g = Graph::complete_bipartite(3, 3);
        let (l, r) = (VertexSet::from([0, 1, 2]), VertexSet::from([3, 4, 5]));
        let cert = bipartite_max_matching(&g, &l, &r).unwrap();
        assert_eq!(cert.matching.len(), 3);
        assert_eq!(cert.cover.len(), 3);
        assert!(cert.verify(&g, &l, &r));
    }

    #[test]
    fn star_centre_against_leaves() {
        let g = Graph::complete_bipartite(1, 3);
        let (l, r) = (VertexSet::from([0]), VertexSet::from([1, 2, 3]));
        let cert = bipartite_max_matching(&g, &l, &r).unwrap();
        assert_eq!(cert.matching.len(), 1);
        assert_eq!(cert.cover, VertexSet::from([0]));
        assert!(cert.verify(&g, &l, &r));
    }

    #[test]
    fn ignores_edges_inside_a_side() {
        let g = Graph::complete(4);
        let (l, r) = (VertexSet::from([0, 1, 2]), VertexSet::from([3]));
        let cert = bipartite_max_matching(&g, &l, &r).unwrap();
        assert_eq!(cert.matching.len(), 1);
        assert!(cert.verify(&g, &l, &r));
    }

    #[test]
    fn overlapping_sides_rejected() {
        let g = Graph::complete(3);
        let err = bipartite_max_matching(&g, &VertexSet::from([0, 1]), &VertexSet::from([1, 2]));
        assert!(matches!(err, Err(Error::NotDisjoint(1))));
    }
}
