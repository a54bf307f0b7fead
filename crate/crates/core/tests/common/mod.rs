//! Brute-force oracles over adjacency bitmasks, written independently of
//! the library algorithms.
#![allow(dead_code)]

use std::collections::HashMap;

use matchkit::Graph;

pub struct Masks {
    pub n: usize,
    pub adj: Vec<u32>,
}

impl Masks {
    pub fn new(g: &Graph) -> Self {
        let adj = g.vertices().map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
        Masks { n: g.order(), adj }
    }

    fn full(&self) -> u32 {
        if self.n == 32 { u32::MAX } else { (1u32 << self.n) - 1 }
    }

    /// Maximum matching size within the vertex set `alive`.
    pub fn nu_within(&self, alive: u32) -> usize {
        fn go(m: &Masks, free: u32, memo: &mut HashMap<u32, usize>) -> usize {
            if free == 0 {
                return 0;
            }
            if let Some(&r) = memo.get(&free) {
                return r;
            }
            let v = free.trailing_zeros() as usize;
            let rest = free & !(1 << v);
            let mut best = go(m, rest, memo);
            let mut nb = m.adj[v] & rest;
            while nb != 0 {
                let u = nb.trailing_zeros();
                nb &= nb - 1;
                best = best.max(1 + go(m, rest & !(1 << u), memo));
            }
            memo.insert(free, best);
            best
        }
        go(self, alive, &mut HashMap::new())
    }

    pub fn nu(&self) -> usize {
        self.nu_within(self.full())
    }

    /// Smallest maximal matching: while some edge has both ends free, one of
    /// the edges at its ends must be taken.
    pub fn min_maximal(&self) -> usize {
        fn go(m: &Masks, free: u32, memo: &mut HashMap<u32, usize>) -> usize {
            if let Some(&r) = memo.get(&free) {
                return r;
            }
            let edge = (0..m.n).filter(|&v| free >> v & 1 == 1).find_map(|v| {
                let nb = m.adj[v] & free;
                (nb != 0).then(|| (v, nb.trailing_zeros() as usize))
            });
            let r = match edge {
                None => 0,
                Some((u, v)) => {
                    let mut best = usize::MAX;
                    for a in [u, v] {
                        let mut nb = m.adj[a] & free;
                        while nb != 0 {
                            let b = nb.trailing_zeros();
                            nb &= nb - 1;
                            best = best.min(1 + go(m, free & !(1 << a) & !(1 << b), memo));
                        }
                    }
                    best
                }
            };
            memo.insert(free, r);
            r
        }
        go(self, self.full(), &mut HashMap::new())
    }

    /// Whether some matching covers every vertex of `req`.
    pub fn saturable(&self, req: u32) -> bool {
        fn go(m: &Masks, req: u32, free: u32) -> bool {
            if req == 0 {
                return true;
            }
            let v = req.trailing_zeros() as usize;
            let mut nb = m.adj[v] & free;
            while nb != 0 {
                let u = nb.trailing_zeros();
                nb &= nb - 1;
                let used = 1 << v | 1 << u;
                if go(m, req & !used, free & !used) {
                    return true;
                }
            }
            false
        }
        go(self, req, self.full())
    }

    pub fn equimatchable(&self) -> bool {
        self.min_maximal() == self.nu()
    }

    pub fn factor_critical(&self) -> bool {
        self.n % 2 == 1 && (0..self.n).all(|v| 2 * self.nu_within(self.full() & !(1 << v)) == self.n - 1)
    }

    pub fn randomly_matchable(&self) -> bool {
        self.n.is_multiple_of(2) && 2 * self.min_maximal() == self.n
    }

    pub fn alpha(&self) -> usize {
        fn go(m: &Masks, cand: u32) -> usize {
            if cand == 0 {
                return 0;
            }
            let v = cand.trailing_zeros() as usize;
            let rest = cand & !(1 << v);
            go(m, rest).max(1 + go(m, rest & !m.adj[v]))
        }
        go(self, self.full())
    }

    pub fn connected_within(&self, alive: u32) -> bool {
        if alive == 0 {
            return true;
        }
        let mut seen = 1u32 << alive.trailing_zeros();
        loop {
            let grow = (0..self.n).filter(|&v| seen >> v & 1 == 1).fold(seen, |s, v| s | (self.adj[v] & alive));
            if grow == seen {
                return seen == alive;
            }
            seen = grow;
        }
    }

    /// Components of `G - removed`, as masks.
    pub fn components_without(&self, removed: u32) -> usize {
        let mut left = self.full() & !removed;
        let mut count = 0;
        while left != 0 {
            let mut comp = 1u32 << left.trailing_zeros();
            loop {
                let grow = (0..self.n).filter(|&v| comp >> v & 1 == 1).fold(comp, |s, v| s | (self.adj[v] & left));
                if grow == comp {
                    break;
                }
                comp = grow;
            }
            left &= !comp;
            count += 1;
        }
        count
    }

    /// `(κ, number of minimum cuts)` by scanning subsets by size; complete
    /// graphs give `(n - 1, 0)` and disconnected graphs `(0, 1)`.
    pub fn kappa_and_cut_count(&self) -> (usize, usize) {
        if self.n <= 1 || !self.connected_within(self.full()) {
            return (0, usize::from(self.n > 1));
        }
        for k in 1..self.n.saturating_sub(1) {
            let count = subsets(self.n, k).filter(|&s| self.components_without(s) >= 2).count();
            if count > 0 {
                return (k, count);
            }
        }
        (self.n - 1, 0)
    }

    pub fn is_complete_bipartite_balanced(&self) -> bool {
        if self.n == 0 || self.n % 2 == 1 {
            return false;
        }
        // the side of vertex 0 is its non-neighbourhood
        let side = self.full() & !self.adj[0];
        side.count_ones() as usize == self.n / 2
            && (0..self.n).all(|v| {
                let other = if side >> v & 1 == 1 { self.full() & !side } else { side };
                self.adj[v] == other
            })
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.adj[v] == self.full() & !(1 << v))
    }
}

/// Bitmasks with exactly `k` of the low `n` bits set.
pub fn subsets(n: usize, k: usize) -> impl Iterator<Item = u32> {
    (0u32..1 << n).filter(move |s| s.count_ones() as usize == k)
}
