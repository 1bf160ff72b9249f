//! Exhaustive catalog of connected simple graphs up to isomorphism.
//!
//! Graphs are grown one vertex at a time: every connected graph on n
//! vertices has a vertex whose removal leaves it connected, so attaching a
//! new vertex to every nonempty neighbor subset of every (n-1)-vertex
//! representative reaches every isomorphism class. Candidates are
//! deduplicated by a canonical form: the minimum edge bitmask over all
//! relabelings consistent with an iterated neighbor-degree coloring (the
//! coloring is isomorphism-invariant, so restricting the permutations keeps
//! the form canonical while skipping most of the n! search).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count the catalog enumerates (11117 classes at n = 8).
pub const CATALOG_VERTEX_LIMIT: usize = 8;

const MAXN: usize = CATALOG_VERTEX_LIMIT;

/// Bidirectional map between unordered vertex pairs and edge-mask bits.
struct SlotTable {
    slot: [[usize; MAXN]; MAXN],
    pair: Vec<(usize, usize)>,
}

impl SlotTable {
    fn new() -> Self {
        let mut slot = [[0usize; MAXN]; MAXN];
        let mut pair = Vec::with_capacity(MAXN * (MAXN - 1) / 2);
        for j in 1..MAXN {
            for i in 0..j {
                slot[i][j] = pair.len();
                slot[j][i] = pair.len();
                pair.push((i, j));
            }
        }
        SlotTable { slot, pair }
    }

    fn adjacency(&self, n: usize, mask: u32) -> [u32; MAXN] {
        let mut adj = [0u32; MAXN];
        let mut m = mask;
        while m != 0 {
            let s = m.trailing_zeros() as usize;
            let (i, j) = self.pair[s];
            debug_assert!(i < n && j < n);
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
            m &= m - 1;
        }
        adj
    }

    fn remap(&self, mask: u32, perm: &[usize]) -> u32 {
        let mut out = 0u32;
        let mut m = mask;
        while m != 0 {
            let s = m.trailing_zeros() as usize;
            let (i, j) = self.pair[s];
            out |= 1 << self.slot[perm[i]][perm[j]];
            m &= m - 1;
        }
        out
    }
}

/// Iterated neighbor-color refinement; the final per-vertex ranks are
/// isomorphism-invariant.
fn refine_colors(n: usize, adj: &[u32; MAXN]) -> Vec<usize> {
    let mut colors: Vec<usize> = (0..n).map(|v| adj[v].count_ones() as usize).collect();
    loop {
        let mut signatures: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut neighbor_colors: Vec<usize> = (0..n)
                .filter(|&w| adj[v] & (1 << w) != 0)
                .map(|w| colors[w])
                .collect();
            neighbor_colors.sort_unstable();
            signatures.push((colors[v], neighbor_colors));
        }
        let mut distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|sig| distinct.binary_search(&sig).expect("own signature present"))
            .collect();
        let stable = distinct.len() == colors.iter().collect::<BTreeSet<_>>().len();
        colors = next;
        if stable {
            return colors;
        }
    }
}

/// Minimum edge mask over all relabelings that sort vertices by color.
fn canonical_form(n: usize, mask: u32, slots: &SlotTable) -> u32 {
    let adj = slots.adjacency(n, mask);
    let colors = refine_colors(n, &adj);

    // Vertices grouped by color; block c occupies a contiguous position range.
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut sorted_colors: Vec<usize> = colors.clone();
    sorted_colors.sort_unstable();
    sorted_colors.dedup();
    for c in &sorted_colors {
        blocks.push((0..n).filter(|&v| colors[v] == *c).collect());
    }

    let mut perm = vec![0usize; n];
    let mut best = u32::MAX;
    fn visit(
        blocks: &[Vec<usize>],
        block_idx: usize,
        next_pos: usize,
        used: u32,
        perm: &mut Vec<usize>,
        mask: u32,
        slots: &SlotTable,
        best: &mut u32,
    ) {
        if block_idx == blocks.len() {
            *best = (*best).min(slots.remap(mask, perm));
            return;
        }
        let block = &blocks[block_idx];
        let placed = (next_pos - block.iter().filter(|&&v| used & (1 << v) != 0).count()).max(0);
        let _ = placed;
        // Count how many of this block are already placed.
        let done = block.iter().filter(|&&v| used & (1 << v) != 0).count();
        if done == block.len() {
            visit(blocks, block_idx + 1, next_pos, used, perm, mask, slots, best);
            return;
        }
        for &v in block {
            if used & (1 << v) == 0 {
                perm[v] = next_pos;
                visit(blocks, block_idx, next_pos + 1, used | (1 << v), perm, mask, slots, best);
            }
        }
    }
    visit(&blocks, 0, 0, 0, &mut perm, mask, slots, &mut best);
    best
}

/// All connected simple graphs on exactly `n` vertices, one representative
/// per isomorphism class, in a deterministic order.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n < 1 || n > CATALOG_VERTEX_LIMIT {
        return Err(Error::Capacity {
            what: "catalog vertices",
            limit: CATALOG_VERTEX_LIMIT,
            requested: n,
        });
    }
    let slots = SlotTable::new();
    // masks[k] holds canonical masks of connected (k+1)-vertex graphs
    let mut level: BTreeSet<u32> = BTreeSet::from([0]); // K1
    for size in 2..=n {
        let new_vertex = size - 1;
        let mut next: BTreeSet<u32> = BTreeSet::new();
        for &parent in &level {
            for subset in 1u32..(1 << new_vertex) {
                let mut mask = parent;
                for w in 0..new_vertex {
                    if subset & (1 << w) != 0 {
                        mask |= 1 << slots.slot[w][new_vertex];
                    }
                }
                next.insert(canonical_form(size, mask, &slots));
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|mask| {
            let mut pairs = Vec::new();
            let mut m = mask;
            while m != 0 {
                let s = m.trailing_zeros() as usize;
                let (i, j) = slots.pair[s];
                pairs.push((i + 1, j + 1));
                m &= m - 1;
            }
            Graph::new(n, pairs)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_up_to_seven() {
        // Connected simple graphs up to isomorphism: 1, 1, 2, 6, 21, 112, 853.
        let expected = [1usize, 1, 2, 6, 21, 112, 853];
        for (n, want) in expected.iter().enumerate().map(|(k, w)| (k + 1, w)) {
            assert_eq!(connected_graphs(n).unwrap().len(), *want, "n = {n}");
        }
    }

    #[test]
    fn all_catalog_graphs_are_connected() {
        for n in 1..=6 {
            for g in connected_graphs(n).unwrap() {
                assert!(g.is_connected());
                assert_eq!(g.n(), n);
            }
        }
    }

    #[test]
    fn canonical_form_is_invariant_under_relabeling() {
        use itertools::Itertools;
        let slots = SlotTable::new();
        for g in connected_graphs(5).unwrap() {
            let mask = g
                .edges()
                .iter()
                .fold(0u32, |m, e| m | 1 << slots.slot[e.a() - 1][e.b() - 1]);
            let canon = canonical_form(5, mask, &slots);
            for perm in (0..5).permutations(5).take(24) {
                let relabeled = slots.remap(mask, &perm);
                assert_eq!(canonical_form(5, relabeled, &slots), canon);
            }
        }
    }

    #[test]
    fn catalog_rejects_out_of_range_sizes() {
        assert!(matches!(connected_graphs(0), Err(Error::Capacity { .. })));
        assert!(matches!(connected_graphs(9), Err(Error::Capacity { .. })));
    }
}
