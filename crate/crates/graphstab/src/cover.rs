//! Hub (vertex-cover) selection: exact minimum covers for desk-scale graphs,
//! a greedy fallback, and validation of user-supplied hub sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

/// Vertex limit for the exact branch-and-bound solver.
pub const EXACT_COVER_LIMIT: usize = 32;

/// How a hub set was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMethod {
    Exact,
    Greedy,
    UserSupplied,
}

impl fmt::Display for CoverMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverMethod::Exact => write!(f, "exact"),
            CoverMethod::Greedy => write!(f, "greedy"),
            CoverMethod::UserSupplied => write!(f, "user-supplied"),
        }
    }
}

/// A set of hub vertices together with the vertex count of the graph it was
/// computed for. Hub sets from [`min_cover_exact`] and [`greedy_cover`]
/// always cover every edge; user-supplied sets are range-checked only, so
/// that downstream operations can report the exact uncovered edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HubSet {
    hubs: BTreeSet<VertexId>,
    graph_n: usize,
    method: CoverMethod,
}

impl HubSet {
    /// Wraps a user-chosen vertex set after range-checking it.
    pub fn user_supplied(g: &Graph, vertices: impl IntoIterator<Item = VertexId>) -> Result<HubSet> {
        let hubs: BTreeSet<VertexId> = vertices.into_iter().collect();
        for &v in &hubs {
            if v < 1 || v > g.n() {
                return Err(Error::VertexOutOfRange { v, n: g.n() });
            }
        }
        Ok(HubSet { hubs, graph_n: g.n(), method: CoverMethod::UserSupplied })
    }

    pub fn hubs(&self) -> &BTreeSet<VertexId> {
        &self.hubs
    }

    pub fn graph_n(&self) -> usize {
        self.graph_n
    }

    pub fn method(&self) -> CoverMethod {
        self.method
    }

    pub fn len(&self) -> usize {
        self.hubs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hubs.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.hubs.contains(&v)
    }
}

/// True iff every edge of `g` has at least one endpoint in `hubs`
/// (equivalently, the quotient edge union over `hubs` equals the edge set).
pub fn validate_cover(g: &Graph, hubs: &BTreeSet<VertexId>) -> Result<bool> {
    Ok(uncovered_edge(g, hubs)?.is_none())
}

/// The lexicographically first edge not touched by `hubs`, if any.
pub fn uncovered_edge(g: &Graph, hubs: &BTreeSet<VertexId>) -> Result<Option<Edge>> {
    for &v in hubs {
        if v < 1 || v > g.n() {
            return Err(Error::VertexOutOfRange { v, n: g.n() });
        }
    }
    Ok(g.edges()
        .iter()
        .find(|e| !hubs.contains(&e.a()) && !hubs.contains(&e.b()))
        .copied())
}

/// Remaining-edge adjacency over 0-indexed vertices, packed into u32 masks.
struct AdjMasks {
    adj: Vec<u32>,
}

impl AdjMasks {
    fn from_graph(g: &Graph) -> Self {
        let mut adj = vec![0u32; g.n()];
        for e in g.edges() {
            adj[e.a() - 1] |= 1 << (e.b() - 1);
            adj[e.b() - 1] |= 1 << (e.a() - 1);
        }
        AdjMasks { adj }
    }

    fn edges_remaining(&self) -> bool {
        self.adj.iter().any(|&m| m != 0)
    }

    fn first_edge(&self) -> Option<(usize, usize)> {
        for (v, &m) in self.adj.iter().enumerate() {
            if m != 0 {
                return Some((v, m.trailing_zeros() as usize));
            }
        }
        None
    }

    /// Covers every edge incident to `v`; returns the neighbor mask needed to
    /// undo the removal.
    fn remove_vertex(&mut self, v: usize) -> u32 {
        let saved = self.adj[v];
        let mut m = saved;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            self.adj[w] &= !(1 << v);
            m &= m - 1;
        }
        self.adj[v] = 0;
        saved
    }

    fn restore_vertex(&mut self, v: usize, saved: u32) {
        self.adj[v] = saved;
        let mut m = saved;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            self.adj[w] |= 1 << v;
            m &= m - 1;
        }
    }

    /// Size of a greedy maximal matching on the remaining edges; any cover
    /// needs at least this many more vertices.
    fn matching_lower_bound(&self) -> usize {
        let mut used = 0u32;
        let mut count = 0;
        for v in 0..self.adj.len() {
            if used & (1 << v) != 0 {
                continue;
            }
            let free = self.adj[v] & !used;
            if free != 0 {
                let w = free.trailing_zeros();
                used |= (1 << v) | (1 << w);
                count += 1;
            }
        }
        count
    }
}

fn branch_and_bound(adj: &mut AdjMasks, chosen: usize, best: &mut usize) {
    if !adj.edges_remaining() {
        *best = (*best).min(chosen);
        return;
    }
    if chosen + adj.matching_lower_bound() >= *best {
        return;
    }
    let (a, b) = adj.first_edge().expect("edges remain");
    for v in [a, b] {
        let saved = adj.remove_vertex(v);
        branch_and_bound(adj, chosen + 1, best);
        adj.restore_vertex(v, saved);
    }
}

/// Finds the lexicographically smallest cover of exactly `budget` vertices,
/// scanning candidates in ascending order so the first hit is the answer.
fn lex_smallest_cover(
    adj: &mut AdjMasks,
    next: usize,
    budget: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if !adj.edges_remaining() {
        return true;
    }
    if budget == 0 {
        return false;
    }
    // An uncovered edge whose endpoints both precede `next` is unreachable.
    let below = if next >= 32 { u32::MAX } else { (1u32 << next) - 1 };
    for v in 0..next.min(adj.adj.len()) {
        if adj.adj[v] & below != 0 {
            return false;
        }
    }
    if adj.matching_lower_bound() > budget {
        return false;
    }
    for v in next..adj.adj.len() {
        // A minimum cover never contains a vertex that covers nothing new.
        if adj.adj[v] == 0 {
            continue;
        }
        let saved = adj.remove_vertex(v);
        chosen.push(v);
        if lex_smallest_cover(adj, v + 1, budget - 1, chosen) {
            return true;
        }
        chosen.pop();
        adj.restore_vertex(v, saved);
    }
    false
}

/// Exact minimum vertex cover by branch and bound over edges, with ties
/// broken by the lexicographically smallest sorted vertex list.
pub fn min_cover_exact(g: &Graph) -> Result<HubSet> {
    if g.n() > EXACT_COVER_LIMIT {
        return Err(Error::Capacity {
            what: "exact cover solver vertices (use greedy_cover instead)",
            limit: EXACT_COVER_LIMIT,
            requested: g.n(),
        });
    }
    if g.edge_count() == 0 {
        return Ok(HubSet { hubs: BTreeSet::new(), graph_n: g.n(), method: CoverMethod::Exact });
    }
    let mut adj = AdjMasks::from_graph(g);
    let mut best = greedy_cover(g).len();
    branch_and_bound(&mut adj, 0, &mut best);

    let mut chosen = Vec::with_capacity(best);
    let found = lex_smallest_cover(&mut adj, 0, best, &mut chosen);
    debug_assert!(found, "a cover of the optimal size must exist");
    let hubs = chosen.into_iter().map(|v| v + 1).collect();
    Ok(HubSet { hubs, graph_n: g.n(), method: CoverMethod::Exact })
}

/// Greedy cover: repeatedly take the highest-degree vertex of the uncovered
/// subgraph (ties to the smallest id) until no edges remain.
pub fn greedy_cover(g: &Graph) -> HubSet {
    let mut uncovered: BTreeSet<Edge> = g.edges().clone();
    let mut hubs = BTreeSet::new();
    while !uncovered.is_empty() {
        let mut degree = vec![0usize; g.n() + 1];
        for e in &uncovered {
            degree[e.a()] += 1;
            degree[e.b()] += 1;
        }
        let pick = (1..=g.n())
            .max_by_key(|&v| (degree[v], std::cmp::Reverse(v)))
            .expect("nonempty vertex set");
        hubs.insert(pick);
        uncovered.retain(|e| !e.touches(pick));
    }
    HubSet { hubs, graph_n: g.n(), method: CoverMethod::Greedy }
}
