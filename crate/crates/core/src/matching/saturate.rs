use fixedbitset::FixedBitSet;

use super::{maximum_matching, Matching};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// A matching of `g` covering every vertex of `required`, if one exists.
///
/// Reduction to perfect matching: add a clique `Z` joined to every vertex
/// outside `required`, with `|Z| >= |V \ required|` and `|Z| ≡ n (mod 2)`.
/// The augmented graph has a perfect matching iff `required` can be
/// saturated; its restriction to `g` is the answer.
pub fn saturating_matching(g: &Graph, required: &VertexSet) -> Result<Option<Matching>> {
    required.check_range(g.order())?;
    let n = g.order();
    let free: Vec<usize> = g.vertices().filter(|&v| !required.contains(v)).collect();
    let z = if free.len() % 2 == n % 2 { free.len() } else { free.len() + 1 };
    let total = n + z;

    let mut rows = vec![FixedBitSet::with_capacity(total); total];
    for (u, v) in g.edges() {
        rows[u].insert(v);
        rows[v].insert(u);
    }
    for a in n..total {
        for b in n..total {
            if a != b {
                rows[a].insert(b);
            }
        }
        for &v in &free {
            rows[a].insert(v);
            rows[v].insert(a);
        }
    }
    let aug = Graph::from_rows(rows);
    let m = maximum_matching(&aug);
    if 2 * m.len() != total {
        return Ok(None);
    }
    Ok(Some(Matching::from_edges_unchecked(
        m.edges().iter().copied().filter(|&(u, v)| u < n && v < n),
    )))
}
