//! Deterministic generators for the named graph families.
//!
//! Vertex numbering is fixed per family: cut `S` first, then the large
//! component `C`, then the small component `D`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyKind {
    #[serde(rename = "complete")]
    Complete,
    #[serde(rename = "complete_bipartite")]
    CompleteBipartite,
    #[serde(rename = "odd_cycle")]
    OddCycle,
    /// `2k + 1` vertices whose minimum cut leaves `k` components.
    #[serde(rename = "Gk_tight")]
    GkTight,
    /// `K_m` and `K_n` (both odd) fully joined to an independent triple.
    #[serde(rename = "G_mn")]
    Gmn,
    /// `K_{l,l}` plus an apex joined to a `k`-subset meeting both sides.
    #[serde(rename = "small_component_m1")]
    SmallComponentM1,
    /// `K_{l,l+1}` plus a `K_2` joined to `k` vertices of the larger side.
    #[serde(rename = "small_component_m2")]
    SmallComponentM2,
    /// Complete even blocks `K_{2a_i}` hanging off one cut vertex.
    #[serde(rename = "favaron_cutvertex")]
    FavaronCutvertex,
    /// `K_{n,n+1}` minus cut-to-component edges, plus a `K_2` joined to the cut.
    #[serde(rename = "kCutEFC_bipartite_case")]
    KCutEfcBipartiteCase,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 9] = [
        FamilyKind::Complete,
        FamilyKind::CompleteBipartite,
        FamilyKind::OddCycle,
        FamilyKind::GkTight,
        FamilyKind::Gmn,
        FamilyKind::SmallComponentM1,
        FamilyKind::SmallComponentM2,
        FamilyKind::FavaronCutvertex,
        FamilyKind::KCutEfcBipartiteCase,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Complete => "complete",
            FamilyKind::CompleteBipartite => "complete_bipartite",
            FamilyKind::OddCycle => "odd_cycle",
            FamilyKind::GkTight => "Gk_tight",
            FamilyKind::Gmn => "G_mn",
            FamilyKind::SmallComponentM1 => "small_component_m1",
            FamilyKind::SmallComponentM2 => "small_component_m2",
            FamilyKind::FavaronCutvertex => "favaron_cutvertex",
            FamilyKind::KCutEfcBipartiteCase => "kCutEFC_bipartite_case",
        }
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.to_ascii_lowercase().replace(['-', '_'], "");
        let kind = match key.as_str() {
            "complete" | "k" => FamilyKind::Complete,
            "completebipartite" | "kmn" | "biclique" => FamilyKind::CompleteBipartite,
            "oddcycle" | "cycle" => FamilyKind::OddCycle,
            "gktight" | "gk" => FamilyKind::GkTight,
            "gmn" => FamilyKind::Gmn,
            "smallcomponentm1" | "m1" => FamilyKind::SmallComponentM1,
            "smallcomponentm2" | "m2" => FamilyKind::SmallComponentM2,
            "favaroncutvertex" | "cutvertex" => FamilyKind::FavaronCutvertex,
            "kcutefcbipartitecase" | "caseb" => FamilyKind::KCutEfcBipartiteCase,
            _ => return Err(format!("unknown family {s:?}")),
        };
        Ok(kind)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family plus its integer parameters.
///
/// Parameter layout: `complete [n]`, `complete_bipartite [a, b]`,
/// `odd_cycle [n]`, `Gk_tight [k]`, `G_mn [m, n]`, `small_component_m1 [n, k]`,
/// `small_component_m2 [n, k]`, `favaron_cutvertex [a_1, ..., a_r]`,
/// `kCutEFC_bipartite_case [n, k, s_1, x_1, s_2, x_2, ...]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    pub family: FamilyKind,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: FamilyKind, params: impl Into<Vec<usize>>) -> Self {
        FamilySpec { family, params: params.into() }
    }

    pub fn label(&self) -> String {
        let p: Vec<String> = self.params.iter().map(usize::to_string).collect();
        format!("{}({})", self.family, p.join(","))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Role sets of a construction; absent when the family has no cut frame.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Roles {
    #[serde(rename = "S", skip_serializing_if = "Option::is_none")]
    pub s: Option<VertexSet>,
    #[serde(rename = "C", skip_serializing_if = "Option::is_none")]
    pub c: Option<VertexSet>,
    #[serde(rename = "D", skip_serializing_if = "Option::is_none")]
    pub d: Option<VertexSet>,
}

impl Roles {
    fn frame(s: VertexSet, c: VertexSet, d: VertexSet) -> Self {
        Roles { s: Some(s), c: Some(c), d: Some(d) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Construction {
    pub spec: FamilySpec,
    #[serde(skip)]
    pub graph: Graph,
    pub roles: Roles,
}

fn invalid(family: FamilyKind, message: impl Into<String>) -> Error {
    let family = family.name();
    Error::InvalidParams { family, message: message.into() }
}

fn arity(spec: &FamilySpec, n: usize) -> Result<()> {
    if spec.params.len() != n {
        return Err(invalid(spec.family, format!("expected {n} parameters, got {}", spec.params.len())));
    }
    Ok(())
}

fn range(a: usize, b: usize) -> VertexSet {
    (a..b).collect()
}

fn clique_edges(vs: std::ops::Range<usize>, edges: &mut Vec<Edge>) {
    for u in vs.clone() {
        for v in u + 1..vs.end {
            edges.push((u, v));
        }
    }
}

fn join(a: &VertexSet, b: &VertexSet, edges: &mut Vec<Edge>) {
    for u in a.iter() {
        for v in b.iter() {
            edges.push((u.min(v), u.max(v)));
        }
    }
}

pub fn build(spec: &FamilySpec) -> Result<Construction> {
    let family = spec.family;
    let p = &spec.params;
    let (graph, roles) = match family {
        FamilyKind::Complete => {
            arity(spec, 1)?;
            if p[0] == 0 {
                return Err(invalid(family, "n must be at least 1"));
            }
            (Graph::complete(p[0]), Roles::default())
        }
        FamilyKind::CompleteBipartite => {
            arity(spec, 2)?;
            if p[0] == 0 || p[1] == 0 {
                return Err(invalid(family, "both sides must be non-empty"));
            }
            (Graph::complete_bipartite(p[0], p[1]), Roles::default())
        }
        FamilyKind::OddCycle => {
            arity(spec, 1)?;
            if p[0] < 3 || p[0].is_multiple_of(2) {
                return Err(invalid(family, "n must be odd and at least 3"));
            }
            (Graph::cycle(p[0]), Roles::default())
        }
        FamilyKind::GkTight => {
            arity(spec, 1)?;
            gk_tight(p[0])?
        }
        FamilyKind::Gmn => {
            arity(spec, 2)?;
            g_mn(p[0], p[1])?
        }
        FamilyKind::SmallComponentM1 => {
            arity(spec, 2)?;
            small_component_m1(p[0], p[1])?
        }
        FamilyKind::SmallComponentM2 => {
            arity(spec, 2)?;
            let (n, k) = (p[0], p[1]);
            if k < 3 {
                return Err(invalid(family, "k must be at least 3"));
            }
            bipartite_case(family, n.max(k), k, &[])?
        }
        FamilyKind::FavaronCutvertex => favaron_cutvertex(p)?,
        FamilyKind::KCutEfcBipartiteCase => {
            if p.len() < 2 || !p.len().is_multiple_of(2) {
                return Err(invalid(family, "expected n, k and then (s, x) index pairs"));
            }
            let pairs: Vec<(usize, usize)> = p[2..].chunks(2).map(|c| (c[0], c[1])).collect();
            bipartite_case(family, p[0], p[1], &pairs)?
        }
    };
    Ok(Construction { spec: spec.clone(), graph, roles })
}

fn gk_tight(k: usize) -> Result<(Graph, Roles)> {
    if k < 3 {
        return Err(invalid(FamilyKind::GkTight, "k must be at least 3"));
    }
    let (s, c, d) = (range(0, k), range(k, 2 * k - 1), range(2 * k - 1, 2 * k + 1));
    let mut edges = vec![(2 * k - 1, 2 * k)];
    join(&s, &c.union(&d), &mut edges);
    Ok((Graph::from_edges(2 * k + 1, edges)?, Roles::frame(s, c, d)))
}

fn g_mn(m: usize, n: usize) -> Result<(Graph, Roles)> {
    if m.is_multiple_of(2) || n.is_multiple_of(2) {
        return Err(invalid(FamilyKind::Gmn, "m and n must be odd"));
    }
    if m + n < 4 {
        return Err(invalid(FamilyKind::Gmn, "m + n must be at least 4"));
    }
    let (s, c, d) = (range(0, 3), range(3, 3 + m), range(3 + m, 3 + m + n));
    let mut edges = Vec::new();
    clique_edges(3..3 + m, &mut edges);
    clique_edges(3 + m..3 + m + n, &mut edges);
    join(&s, &c.union(&d), &mut edges);
    Ok((Graph::from_edges(3 + m + n, edges)?, Roles::frame(s, c, d)))
}

/// `S` takes the lowest `⌈k/2⌉` vertices of one side and the lowest
/// remaining ones of the other side.
fn small_component_m1(n: usize, k: usize) -> Result<(Graph, Roles)> {
    let family = FamilyKind::SmallComponentM1;
    if k < 3 {
        return Err(invalid(family, "k must be at least 3"));
    }
    if n == 0 {
        return Err(invalid(family, "n must be at least 1"));
    }
    let l = n.max(k);
    let from0 = k.div_ceil(2);
    // side0 = S[..from0] then C[..l - from0]; side1 = S[from0..] then C[l - from0..]
    let side0: Vec<Vertex> = (0..from0).chain(k..k + l - from0).collect();
    let side1: Vec<Vertex> = (from0..k).chain(k + l - from0..k + 2 * l - k).collect();
    let apex = 2 * l;
    let mut edges = Vec::new();
    join(&side0.iter().copied().collect(), &side1.iter().copied().collect(), &mut edges);
    let s = range(0, k);
    join(&s, &VertexSet::singleton(apex), &mut edges);
    let g = Graph::from_edges(2 * l + 1, edges)?;
    Ok((g, Roles::frame(s, range(k, 2 * l), VertexSet::singleton(apex))))
}

/// `S` (size `k`) sits on the larger side of `K_{n,n+1}`; the smaller side
/// follows, then the rest of the larger side, then `D = K_2` joined to `S`.
/// Each pair `(i, j)` removes the edge between `S[i]` and the `j`-th vertex
/// of the smaller side.
fn bipartite_case(family: FamilyKind, n: usize, k: usize, removed: &[(usize, usize)]) -> Result<(Graph, Roles)> {
    if k == 0 {
        return Err(invalid(family, "k must be at least 1"));
    }
    if n < k {
        return Err(invalid(family, "n must be at least k"));
    }
    for (i, &(a, b)) in removed.iter().enumerate() {
        if a >= k {
            return Err(invalid(family, format!("cut index {a} out of range 0..{k}")));
        }
        if b >= n {
            return Err(invalid(family, format!("component index {b} out of range 0..{n}")));
        }
        for &(c, d) in &removed[..i] {
            if a == c {
                return Err(invalid(family, format!("cut index {a} repeated")));
            }
            if b == d {
                return Err(invalid(family, format!("component index {b} repeated")));
            }
        }
    }
    let total = 2 * n + 1 + 2;
    let small: VertexSet = range(k, k + n);
    let large: VertexSet = range(0, k).union(&range(k + n, 2 * n + 1));
    let mut edges = Vec::new();
    join(&large, &small, &mut edges);
    edges.retain(|&(u, v)| !removed.iter().any(|&(a, b)| (u, v) == (a, k + b)));
    let (d0, d1) = (2 * n + 1, 2 * n + 2);
    edges.push((d0, d1));
    let s = range(0, k);
    join(&s, &VertexSet::from([d0, d1]), &mut edges);
    let g = Graph::from_edges(total, edges)?;
    Ok((g, Roles::frame(s, range(k, 2 * n + 1), VertexSet::from([d0, d1]))))
}

/// Cut vertex `0` joined to the first two vertices of each block `K_{2a_i}`.
fn favaron_cutvertex(halves: &[usize]) -> Result<(Graph, Roles)> {
    let family = FamilyKind::FavaronCutvertex;
    if halves.len() < 2 {
        return Err(invalid(family, "at least two blocks are needed"));
    }
    if halves.contains(&0) {
        return Err(invalid(family, "block half-sizes must be at least 1"));
    }
    let mut edges = Vec::new();
    let mut blocks = Vec::new();
    let mut next = 1;
    for &a in halves {
        let block = next..next + 2 * a;
        clique_edges(block.clone(), &mut edges);
        edges.push((0, block.start));
        edges.push((0, block.start + 1));
        blocks.push(range(block.start, block.end));
        next = block.end;
    }
    let g = Graph::from_edges(next, edges)?;
    let rest = blocks[1..].iter().fold(VertexSet::new(), |acc, b| acc.union(b));
    Ok((g, Roles::frame(VertexSet::singleton(0), blocks[0].clone(), rest)))
}

/// `kCutEFC_bipartite_case` with explicit removed pairs.
pub fn kcut_efc_case_b_shape(n: usize, k: usize, removed_pairs: &[(usize, usize)]) -> Result<Construction> {
    let mut params = vec![n, k];
    params.extend(removed_pairs.iter().flat_map(|&(a, b)| [a, b]));
    build(&FamilySpec::new(FamilyKind::KCutEfcBipartiteCase, params))
}

/// The fixed list of constructions the verification suite runs over.
pub fn standard_constructions() -> Vec<FamilySpec> {
    use FamilyKind::*;
    let mut out = vec![
        FamilySpec::new(Complete, [5]),
        FamilySpec::new(Complete, [7]),
        FamilySpec::new(CompleteBipartite, [3, 3]),
        FamilySpec::new(CompleteBipartite, [3, 4]),
        FamilySpec::new(OddCycle, [5]),
        FamilySpec::new(OddCycle, [7]),
        FamilySpec::new(OddCycle, [9]),
    ];
    out.extend((3..=6).map(|k| FamilySpec::new(GkTight, [k])));
    out.extend([(3, 3), (3, 5), (5, 5), (1, 3)].map(|(m, n)| FamilySpec::new(Gmn, [m, n])));
    for kind in [SmallComponentM1, SmallComponentM2] {
        for k in [3, 4] {
            for n in [4, 6] {
                out.push(FamilySpec::new(kind, [n, k]));
            }
        }
    }
    out.push(FamilySpec::new(FavaronCutvertex, [1, 1]));
    out.push(FamilySpec::new(FavaronCutvertex, [1, 2, 1]));
    out.push(FamilySpec::new(KCutEfcBipartiteCase, [3, 3]));
    out.push(FamilySpec::new(KCutEfcBipartiteCase, [3, 3, 0, 0]));
    out.push(FamilySpec::new(KCutEfcBipartiteCase, [4, 3, 0, 1, 2, 3]));
    out
}
