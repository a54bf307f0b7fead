//! Small-graph generation: all labeled graphs, connected graphs up to
//! isomorphism, and seeded random graphs.

use std::collections::HashSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Largest order accepted by [`canonical_code`].
pub const CANONICAL_MAX_ORDER: usize = 16;

/// Every labeled graph on `n` vertices, one per edge subset.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "labeled enumeration is limited to n <= 8");
    let pairs: Vec<Edge> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("distinct pairs")
    })
}

/// G(n, p).
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("distinct pairs")
}

/// Connected graphs on `n` vertices, one per isomorphism class, each in its
/// canonical labeling, ordered by edge count and then canonical code.
///
/// Every connected graph has a vertex whose removal keeps it connected, so
/// extending each class on `n - 1` vertices by a vertex with a non-empty
/// neighbourhood reaches every class on `n`.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 10 {
        return Err(Error::Domain(format!("isomorphism-free generation supports n <= 10, got {n}")));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1)];
    for order in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let base: Vec<Edge> = g.edges().collect();
            for mask in 1u32..(1 << (order - 1)) {
                let mut edges = base.clone();
                edges.extend((0..order - 1).filter(|u| mask >> u & 1 == 1).map(|u| (u, order - 1)));
                let h = Graph::from_edges(order, edges).expect("new vertex edges are distinct");
                let code = canonical_code(&h)?;
                if seen.insert(code) {
                    next.push((h.size(), code, order));
                }
            }
        }
        next.sort_unstable();
        level = next.into_iter().map(|(_, code, order)| graph_from_code(order, code)).collect();
    }
    Ok(level)
}

/// Isomorphism-invariant code: the largest upper-triangle bit string over
/// all labelings reachable by colour refinement and individualization.
pub fn canonical_code(g: &Graph) -> Result<u128> {
    let n = g.order();
    if n > CANONICAL_MAX_ORDER {
        return Err(Error::Domain(format!("canonical form supports n <= {CANONICAL_MAX_ORDER}, got {n}")));
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    if n == 0 {
        return Ok(0);
    }
    let mut best = None;
    search(&adj, refine(&adj, vec![(0..n).collect()]), &mut best);
    Ok(best.expect("at least one leaf"))
}

/// The relabeling of `g` whose code is [`canonical_code`].
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(graph_from_code(g.order(), canonical_code(g)?))
}

fn graph_from_code(n: usize, code: u128) -> Graph {
    let mut edges = Vec::new();
    let mut bit = pair_count(n);
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("code pairs are distinct")
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

type Partition = Vec<Vec<usize>>;

/// Splits cells by neighbour counts into every cell until stable.
fn refine(adj: &[u32], mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u32> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let mut next: Partition = Vec::with_capacity(adj.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn are_twins(adj: &[u32], u: usize, v: usize) -> bool {
    adj[u] & !(1 << v) == adj[v] & !(1 << u)
}

fn search(adj: &[u32], cells: Partition, best: &mut Option<u128>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(adj, &order);
        if best.is_none_or(|b| code > b) {
            *best = Some(code);
        }
        return;
    };
    let cell = &cells[target];
    // swapping two twins is an automorphism fixing everything else
    let all_twins = cell.iter().all(|&u| cell.iter().all(|&v| u == v || are_twins(adj, u, v)));
    let branches = if all_twins { &cell[..1] } else { &cell[..] };
    for &v in branches {
        let mut split = cells.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
        split.splice(target..=target, [vec![v], rest]);
        search(adj, refine(adj, split), best);
    }
}

fn code_of(adj: &[u32], order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | u128::from(adj[order[i]] >> order[j] & 1);
        }
    }
    code
}
