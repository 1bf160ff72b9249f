//! Simple undirected graphs with 1-indexed vertices and canonical edges.
//!
//! Edges are stored only in canonical `(min, max)` form, so the equivalence
//! (a,b) ~ (b,a) is realized structurally: unions of incident-edge sets
//! deduplicate by construction and cover checks reduce to set equality.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// 1-indexed vertex id.
pub type VertexId = usize;

/// A canonical undirected edge with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    a: VertexId,
    b: VertexId,
}

impl Edge {
    /// Normalizes endpoint order; rejects loops.
    pub fn new(a: VertexId, b: VertexId) -> Result<Edge> {
        if a == b {
            return Err(Error::LoopEdge { v: a });
        }
        Ok(Edge { a: a.min(b), b: a.max(b) })
    }

    pub fn a(&self) -> VertexId {
        self.a
    }

    pub fn b(&self) -> VertexId {
        self.b
    }

    pub fn touches(&self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// A simple undirected graph on vertices 1..=n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

/// The vertices adjacent to one vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborSet {
    pub vertex: VertexId,
    pub neighbors: BTreeSet<VertexId>,
}

impl Graph {
    /// Builds a graph from endpoint pairs, canonicalizing and deduplicating.
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::Parse { line: 0, reason: "vertex count must be positive".into() });
        }
        let mut edges = BTreeSet::new();
        for (a, b) in pairs {
            if a < 1 || a > n {
                return Err(Error::VertexOutOfRange { v: a, n });
            }
            if b < 1 || b > n {
                return Err(Error::VertexOutOfRange { v: b, n });
            }
            edges.insert(Edge::new(a, b)?);
        }
        Ok(Graph { n, edges })
    }

    /// The star on `n` vertices: vertex 1 joined to every other vertex.
    pub fn star(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(Error::Domain { reason: format!("star graph needs at least 2 vertices, got {n}") });
        }
        Graph::new(n, (2..=n).map(|v| (1, v)))
    }

    /// The cycle 1-2-...-n-1.
    pub fn ring(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::Domain { reason: format!("ring graph needs at least 3 vertices, got {n}") });
        }
        Graph::new(n, (1..=n).map(|v| (v, v % n + 1)))
    }

    /// `n` isolated vertices.
    pub fn edgeless(n: usize) -> Result<Graph> {
        Graph::new(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        Edge::new(a, b).map(|e| self.edges.contains(&e)).unwrap_or(false)
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < 1 || v > self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(())
    }

    /// The vertices sharing an edge with `a`.
    pub fn neighborhood(&self, a: VertexId) -> Result<NeighborSet> {
        self.check_vertex(a)?;
        let neighbors = self
            .edges
            .iter()
            .filter(|e| e.touches(a))
            .map(|e| if e.a == a { e.b } else { e.a })
            .collect();
        Ok(NeighborSet { vertex: a, neighbors })
    }

    /// The canonical edges having `a` as an endpoint (the edge-valued view of
    /// a neighborhood).
    pub fn incident_edges(&self, a: VertexId) -> Result<BTreeSet<Edge>> {
        self.check_vertex(a)?;
        Ok(self.edges.iter().filter(|e| e.touches(a)).copied().collect())
    }

    /// Union of incident edges over `hubs`, deduplicated and sorted
    /// lexicographically. Equals the full edge set exactly when `hubs` is a
    /// cover.
    pub fn quotient_edges(&self, hubs: &BTreeSet<VertexId>) -> Result<Vec<Edge>> {
        let mut union = BTreeSet::new();
        for &a in hubs {
            union.extend(self.incident_edges(a)?);
        }
        Ok(union.into_iter().collect())
    }

    pub fn degree(&self, a: VertexId) -> Result<usize> {
        Ok(self.incident_edges(a)?.len())
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![1];
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for e in self.edges.iter().filter(|e| e.touches(v)) {
                let w = if e.a == v { e.b } else { e.a };
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// JSON form `{n, edges: [[a, b], ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "edges": self.edges.iter().map(|e| vec![e.a, e.b]).collect::<Vec<_>>(),
        })
    }
}

/// Parses the edge-list text format: the first significant line holds the
/// vertex count, each following significant line holds one `a b` edge.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        match n {
            None => {
                let count: usize = trimmed.parse().map_err(|_| Error::Parse {
                    line,
                    reason: format!("expected vertex count, got {trimmed:?}"),
                })?;
                if count == 0 {
                    return Err(Error::Parse { line, reason: "vertex count must be positive".into() });
                }
                n = Some(count);
            }
            Some(count) => {
                let mut fields = trimmed.split_whitespace();
                let (a, b) = match (fields.next(), fields.next(), fields.next()) {
                    (Some(a), Some(b), None) => (a, b),
                    _ => {
                        return Err(Error::Parse {
                            line,
                            reason: format!("expected two vertex ids, got {trimmed:?}"),
                        })
                    }
                };
                let a: usize = a.parse().map_err(|_| Error::Parse {
                    line,
                    reason: format!("invalid vertex id {a:?}"),
                })?;
                let b: usize = b.parse().map_err(|_| Error::Parse {
                    line,
                    reason: format!("invalid vertex id {b:?}"),
                })?;
                if a < 1 || a > count {
                    return Err(Error::VertexOutOfRange { v: a, n: count });
                }
                if b < 1 || b > count {
                    return Err(Error::VertexOutOfRange { v: b, n: count });
                }
                pairs.push((a, b));
            }
        }
    }
    match n {
        Some(count) => Graph::new(count, pairs),
        None => Err(Error::Parse { line: 0, reason: "empty input".into() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star7() -> Graph {
        Graph::star(7).unwrap()
    }

    fn ring3() -> Graph {
        Graph::ring(3).unwrap()
    }

    #[test]
    fn parse_star7() {
        let g = parse_edge_list("7\n1 2\n1 3\n1 4\n1 5\n1 6\n1 7").unwrap();
        assert_eq!(g, star7());
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn parse_dedups_reversed_and_repeated_edges() {
        let g = parse_edge_list("3\n1 2\n2 1\n1 2").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(2, 1));
    }

    #[test]
    fn parse_rejects_loop() {
        assert_eq!(parse_edge_list("3\n1 1"), Err(Error::LoopEdge { v: 1 }));
    }

    #[test]
    fn parse_rejects_out_of_range_vertex() {
        assert_eq!(
            parse_edge_list("3\n1 4"),
            Err(Error::VertexOutOfRange { v: 4, n: 3 })
        );
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = parse_edge_list("3\n1 2\nbogus line").unwrap_err();
        assert_eq!(
            err,
            Error::Parse { line: 3, reason: "expected two vertex ids, got \"bogus line\"".into() }
        );
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let g = parse_edge_list("# a triangle\n3\n\n1 2\n# middle\n2 3\n1 3\n").unwrap();
        assert_eq!(g, ring3());
    }

    #[test]
    fn neighborhood_of_star_center_is_everything_else() {
        let ns = star7().neighborhood(1).unwrap();
        assert_eq!(ns.neighbors, (2..=7).collect());
    }

    #[test]
    fn neighborhood_of_ring_vertex() {
        let ns = ring3().neighborhood(2).unwrap();
        assert_eq!(ns.neighbors, BTreeSet::from([1, 3]));
    }

    #[test]
    fn neighborhood_of_isolated_vertex_is_empty() {
        let g = Graph::new(4, [(1, 2)]).unwrap();
        assert!(g.neighborhood(3).unwrap().neighbors.is_empty());
    }

    #[test]
    fn neighborhood_range_check() {
        assert_eq!(
            ring3().neighborhood(9),
            Err(Error::VertexOutOfRange { v: 9, n: 3 })
        );
    }

    #[test]
    fn incident_edges_match_spokes() {
        let g = star7();
        assert_eq!(g.incident_edges(1).unwrap(), *g.edges());
        assert_eq!(
            g.incident_edges(4).unwrap(),
            BTreeSet::from([Edge::new(1, 4).unwrap()])
        );
        let r = ring3();
        assert_eq!(
            r.incident_edges(1).unwrap(),
            BTreeSet::from([Edge::new(1, 2).unwrap(), Edge::new(1, 3).unwrap()])
        );
    }

    #[test]
    fn quotient_over_ring_hubs_recovers_edge_set() {
        let g = ring3();
        let q = g.quotient_edges(&BTreeSet::from([1, 2])).unwrap();
        assert_eq!(q, g.edges().iter().copied().collect::<Vec<_>>());
        assert_eq!(
            q,
            vec![
                Edge::new(1, 2).unwrap(),
                Edge::new(1, 3).unwrap(),
                Edge::new(2, 3).unwrap()
            ]
        );
    }

    #[test]
    fn quotient_over_single_star_hub_is_whole_edge_set() {
        let g = star7();
        let q = g.quotient_edges(&BTreeSet::from([1])).unwrap();
        assert_eq!(q.len(), 6);
        assert_eq!(q, g.edges().iter().copied().collect::<Vec<_>>());
    }

    #[test]
    fn quotient_over_single_ring_vertex_is_proper_subset() {
        let g = ring3();
        let q = g.quotient_edges(&BTreeSet::from([1])).unwrap();
        assert_eq!(q, vec![Edge::new(1, 2).unwrap(), Edge::new(1, 3).unwrap()]);
        assert!(q.len() < g.edge_count());
    }

    #[test]
    fn quotient_over_full_vertex_set_is_edge_set() {
        for g in [star7(), ring3(), Graph::ring(6).unwrap()] {
            let all: BTreeSet<_> = (1..=g.n()).collect();
            let q = g.quotient_edges(&all).unwrap();
            assert_eq!(q, g.edges().iter().copied().collect::<Vec<_>>());
        }
    }

    #[test]
    fn connectivity() {
        assert!(star7().is_connected());
        assert!(ring3().is_connected());
        assert!(!Graph::new(3, [(1, 2)]).unwrap().is_connected());
        assert!(Graph::edgeless(1).unwrap().is_connected());
    }
}
