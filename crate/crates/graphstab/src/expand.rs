//! Building a graph state from its hub stabilizers.
//!
//! With B a hub set covering every edge, the CZ-per-edge construction equals
//! the product of (I + K_i)/sqrt(2) over the hubs applied to the seed
//! |0>^B |+>^(V\B). Expanding that product gives 2^|B| Pauli terms (one per
//! hub subset); summing their action on the seed and scaling by 2^(-|B|/2)
//! reproduces the state. Everything here is checked against the CZ oracle.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::cover::{min_cover_exact, uncovered_edge, HubSet};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::pauli::{cluster_product, PauliString};
use crate::state::{build_graph_state, QubitKet, StateVector};

/// Hub-count limit for the expansion (2^16 terms).
pub const MAX_EXPANSION_HUBS: usize = 16;

/// One term of the expanded hub product: the Pauli product of the cluster
/// operators over `subset`, taken in ascending vertex order.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionTerm {
    pub subset: Vec<VertexId>,
    pub op: PauliString,
}

/// The ordered expansion of the hub product together with its seed norm.
#[derive(Debug, Clone, PartialEq)]
pub struct HubExpansion {
    graph: Graph,
    hubs: HubSet,
    terms: Vec<ExpansionTerm>,
    norm: f64,
}

impl HubExpansion {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn hubs(&self) -> &HubSet {
        &self.hubs
    }

    pub fn terms(&self) -> &[ExpansionTerm] {
        &self.terms
    }

    /// The 2^(-|B|/2) prefactor of the seed state.
    pub fn norm(&self) -> f64 {
        self.norm
    }
}

/// Outcome of comparing the hub-built state against the CZ-built one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyReport {
    pub pass: bool,
    pub max_dev: f64,
    pub term_count: usize,
}

/// Stabilizer bookkeeping: n generators describe the state naively, one per
/// minimum-cover hub suffices through the expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub n: usize,
    pub hub_count: usize,
    pub naive_stabilizers: usize,
    pub hub_stabilizers: usize,
    pub hubs: BTreeSet<VertexId>,
}

/// The product state |0> on every hub qubit and |+> elsewhere. The
/// 2^(-|B|/2) prefactor is *not* included; it lives in
/// [`HubExpansion::norm`].
pub fn seed_state(g: &Graph, hubs: &HubSet) -> Result<StateVector> {
    for &v in hubs.hubs() {
        if v < 1 || v > g.n() {
            return Err(Error::VertexOutOfRange { v, n: g.n() });
        }
    }
    let kets: Vec<QubitKet> = (1..=g.n())
        .map(|v| if hubs.contains(v) { QubitKet::Zero } else { QubitKet::Plus })
        .collect();
    StateVector::from_qubit_kets(&kets)
}

/// Enumerates all hub subsets, ordered by cardinality and then
/// lexicographically, with each term's canonical Pauli product.
pub fn expand_terms(g: &Graph, hubs: &HubSet) -> Result<HubExpansion> {
    let b = hubs.len();
    if b > MAX_EXPANSION_HUBS {
        return Err(Error::Capacity {
            what: "expansion hubs",
            limit: MAX_EXPANSION_HUBS,
            requested: b,
        });
    }
    let sorted: Vec<VertexId> = hubs.hubs().iter().copied().collect();
    let mut terms = Vec::with_capacity(1 << b);
    for size in 0..=b {
        for subset in sorted.iter().copied().combinations(size) {
            let op = cluster_product(g, &subset.iter().copied().collect())?;
            terms.push(ExpansionTerm { subset, op });
        }
    }
    Ok(HubExpansion {
        graph: g.clone(),
        hubs: hubs.clone(),
        terms,
        norm: 0.5f64.powf(b as f64 / 2.0),
    })
}

/// Applies the expansion to the seed state: 2^(-|B|/2) times the sum of
/// every term's action. Requires `hubs` to cover every edge.
pub fn build_state_via_hubs(g: &Graph, hubs: &HubSet) -> Result<StateVector> {
    if let Some(e) = uncovered_edge(g, hubs.hubs())? {
        return Err(Error::UncoveredEdge { a: e.a(), b: e.b() });
    }
    let expansion = expand_terms(g, hubs)?;
    let seed = seed_state(g, hubs)?;
    let dim = seed.amps().len();
    let mut acc = vec![num_complex::Complex64::new(0.0, 0.0); dim];
    for term in expansion.terms() {
        let (mx, mz) = seed.pauli_index_masks(&term.op);
        let phase = match term.op.phase_exp() % 4 {
            0 => num_complex::Complex64::new(1.0, 0.0),
            1 => num_complex::Complex64::new(0.0, 1.0),
            2 => num_complex::Complex64::new(-1.0, 0.0),
            _ => num_complex::Complex64::new(0.0, -1.0),
        };
        for (idx, amp) in seed.amps().iter().enumerate() {
            let sign = if (idx & mz).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
            acc[idx ^ mx] += phase * sign * amp;
        }
    }
    for amp in &mut acc {
        *amp *= expansion.norm();
    }
    StateVector::from_amplitudes(g.n(), acc)
}

/// Compares the hub-built state against the CZ-per-edge construction.
pub fn verify_expansion(g: &Graph, hubs: &HubSet, tol: f64) -> Result<VerifyReport> {
    let via_hubs = build_state_via_hubs(g, hubs)?;
    let via_cz = build_graph_state(g)?;
    let report = via_hubs.states_equal(&via_cz, tol)?;
    Ok(VerifyReport {
        pass: report.equal,
        max_dev: report.max_dev,
        term_count: 1 << hubs.len(),
    })
}

/// How many stabilizers the hub form needs versus the one-per-vertex form.
pub fn reduction_report(g: &Graph) -> Result<ReductionReport> {
    let cover = min_cover_exact(g)?;
    Ok(ReductionReport {
        n: g.n(),
        hub_count: cover.len(),
        naive_stabilizers: g.n(),
        hub_stabilizers: cover.len(),
        hubs: cover.hubs().clone(),
    })
}

/// The spec'd verification-report JSON.
pub fn verify_report_json(g: &Graph, hubs: &HubSet, report: &VerifyReport) -> serde_json::Value {
    serde_json::json!({
        "graph": g.to_json(),
        "hubs": hubs.hubs().iter().copied().collect::<Vec<_>>(),
        "method": hubs.method().to_string(),
        "term_count": report.term_count,
        "max_dev": report.max_dev,
        "pass": report.pass,
        "naive_stabilizers": g.n(),
        "hub_stabilizers": hubs.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{greedy_cover, CoverMethod};
    use crate::state::QubitKet::{Minus, Plus, Zero};

    const TOL: f64 = 1e-12;

    fn hubset(g: &Graph, vs: &[VertexId]) -> HubSet {
        HubSet::user_supplied(g, vs.iter().copied()).unwrap()
    }

    fn assert_states_eq(a: &StateVector, b: &StateVector) {
        let report = a.states_equal(b, TOL).unwrap();
        assert!(report.equal, "max_dev = {}", report.max_dev);
    }

    #[test]
    fn seed_state_zeroes_the_hubs() {
        let star = Graph::star(7).unwrap();
        let expected = StateVector::from_qubit_kets(&[Zero, Plus, Plus, Plus, Plus, Plus, Plus]).unwrap();
        assert_states_eq(&seed_state(&star, &hubset(&star, &[1])).unwrap(), &expected);

        let ring = Graph::ring(3).unwrap();
        let expected = StateVector::from_qubit_kets(&[Zero, Zero, Plus]).unwrap();
        assert_states_eq(&seed_state(&ring, &hubset(&ring, &[1, 2])).unwrap(), &expected);

        let empty = hubset(&ring, &[]);
        assert_states_eq(&seed_state(&ring, &empty).unwrap(), &StateVector::plus_state(3).unwrap());
    }

    #[test]
    fn seed_state_rejects_foreign_hubs() {
        let small = Graph::ring(3).unwrap();
        let big = Graph::star(7).unwrap();
        let hs = hubset(&big, &[7]);
        assert_eq!(seed_state(&small, &hs), Err(Error::VertexOutOfRange { v: 7, n: 3 }));
    }

    #[test]
    fn ring3_expansion_terms() {
        let g = Graph::ring(3).unwrap();
        let exp = expand_terms(&g, &hubset(&g, &[1, 2])).unwrap();
        let listing: Vec<(Vec<usize>, String)> = exp
            .terms()
            .iter()
            .map(|t| (t.subset.clone(), t.op.render()))
            .collect();
        assert_eq!(
            listing,
            vec![
                (vec![], "+I".to_string()),
                (vec![1], "+X1Z2Z3".to_string()),
                (vec![2], "+Z1X2Z3".to_string()),
                // K1 * K2 = (X1 Z2 Z3)(Z1 X2 Z3) canonicalizes to +Y1Y2.
                (vec![1, 2], "+Y1Y2".to_string()),
            ]
        );
        assert!((exp.norm() - 0.5).abs() < TOL);
    }

    #[test]
    fn star7_expansion_has_two_terms() {
        let g = Graph::star(7).unwrap();
        let exp = expand_terms(&g, &hubset(&g, &[1])).unwrap();
        let rendered: Vec<String> = exp.terms().iter().map(|t| t.op.render()).collect();
        assert_eq!(rendered, vec!["+I", "+X1Z2Z3Z4Z5Z6Z7"]);
    }

    #[test]
    fn empty_hub_expansion_is_the_identity_term() {
        let g = Graph::edgeless(3).unwrap();
        let exp = expand_terms(&g, &hubset(&g, &[])).unwrap();
        assert_eq!(exp.terms().len(), 1);
        assert!(exp.terms()[0].op.is_identity_op());
        assert!((exp.norm() - 1.0).abs() < TOL);
    }

    #[test]
    fn expansion_hub_cap() {
        let g = Graph::edgeless(17).unwrap();
        let hs = hubset(&g, &(1..=17).collect::<Vec<_>>());
        assert!(matches!(expand_terms(&g, &hs), Err(Error::Capacity { .. })));
    }

    #[test]
    fn star7_built_via_hubs_matches_the_ket_sum() {
        let g = Graph::star(7).unwrap();
        let s = build_state_via_hubs(&g, &hubset(&g, &[1])).unwrap();
        assert_states_eq(&s, &build_graph_state(&g).unwrap());
        // and against the explicit two-ket form
        let zero_plus = StateVector::from_qubit_kets(&[Zero, Plus, Plus, Plus, Plus, Plus, Plus]).unwrap();
        let one_minus = StateVector::from_qubit_kets(&[
            crate::state::QubitKet::One, Minus, Minus, Minus, Minus, Minus, Minus,
        ]).unwrap();
        let f = std::f64::consts::FRAC_1_SQRT_2;
        let expected = StateVector::from_amplitudes(
            7,
            zero_plus
                .amps()
                .iter()
                .zip(one_minus.amps())
                .map(|(a, b)| (a + b) * f)
                .collect(),
        )
        .unwrap();
        assert_states_eq(&s, &expected);
    }

    #[test]
    fn ring3_built_via_hubs_matches_the_ket_sum() {
        let g = Graph::ring(3).unwrap();
        let s = build_state_via_hubs(&g, &hubset(&g, &[1, 2])).unwrap();
        assert_states_eq(&s, &build_graph_state(&g).unwrap());
    }

    #[test]
    fn edgeless_graph_expands_to_plus() {
        let g = Graph::edgeless(4).unwrap();
        let s = build_state_via_hubs(&g, &hubset(&g, &[])).unwrap();
        assert_states_eq(&s, &StateVector::plus_state(4).unwrap());
    }

    #[test]
    fn non_covering_hub_set_is_rejected_with_the_edge() {
        let g = Graph::ring(3).unwrap();
        let err = build_state_via_hubs(&g, &hubset(&g, &[3])).unwrap_err();
        assert_eq!(err, Error::UncoveredEdge { a: 1, b: 2 });
        assert_eq!(verify_expansion(&g, &hubset(&g, &[3]), TOL).unwrap_err(), err);
    }

    #[test]
    fn verification_reports() {
        let star = Graph::star(7).unwrap();
        let report = verify_expansion(&star, &hubset(&star, &[1]), TOL).unwrap();
        assert!(report.pass);
        assert_eq!(report.term_count, 2);
        assert!(report.max_dev <= TOL);

        let ring = Graph::ring(3).unwrap();
        let report = verify_expansion(&ring, &hubset(&ring, &[1, 2]), TOL).unwrap();
        assert!(report.pass);
        assert_eq!(report.term_count, 4);
    }

    #[test]
    fn oversized_covers_still_verify() {
        let g = Graph::ring(3).unwrap();
        let report = verify_expansion(&g, &hubset(&g, &[1, 2, 3]), TOL).unwrap();
        assert!(report.pass);
        assert_eq!(report.term_count, 8);
    }

    #[test]
    fn greedy_and_exact_hub_sets_verify_too() {
        for g in [Graph::star(5).unwrap(), Graph::ring(6).unwrap()] {
            assert!(verify_expansion(&g, &min_cover_exact(&g).unwrap(), TOL).unwrap().pass);
            assert!(verify_expansion(&g, &greedy_cover(&g), TOL).unwrap().pass);
        }
    }

    #[test]
    fn hub_built_state_is_normalized() {
        let g = Graph::ring(6).unwrap();
        let s = build_state_via_hubs(&g, &min_cover_exact(&g).unwrap()).unwrap();
        assert!((s.norm() - 1.0).abs() < TOL);
    }

    #[test]
    fn reduction_reports() {
        let star = reduction_report(&Graph::star(7).unwrap()).unwrap();
        assert_eq!((star.naive_stabilizers, star.hub_stabilizers), (7, 1));

        let ring6 = reduction_report(&Graph::ring(6).unwrap()).unwrap();
        assert_eq!((ring6.naive_stabilizers, ring6.hub_stabilizers), (6, 3));

        let ring5 = reduction_report(&Graph::ring(5).unwrap()).unwrap();
        assert_eq!((ring5.naive_stabilizers, ring5.hub_stabilizers), (5, 3));
    }

    #[test]
    fn verify_report_json_schema() {
        let g = Graph::ring(3).unwrap();
        let hs = hubset(&g, &[1, 2]);
        let report = verify_expansion(&g, &hs, TOL).unwrap();
        let json = verify_report_json(&g, &hs, &report);
        assert_eq!(json["pass"], serde_json::json!(true));
        assert_eq!(json["term_count"], serde_json::json!(4));
        assert_eq!(json["naive_stabilizers"], serde_json::json!(3));
        assert_eq!(json["hub_stabilizers"], serde_json::json!(2));
        assert_eq!(json["method"], serde_json::json!("user-supplied"));
        assert_eq!(json["graph"]["n"], serde_json::json!(3));
    }

    #[test]
    fn hub_insertion_order_does_not_matter() {
        let g = Graph::ring(5).unwrap();
        let forward = hubset(&g, &[1, 2, 4]);
        let backward = hubset(&g, &[4, 2, 1]);
        assert_eq!(forward.method(), CoverMethod::UserSupplied);
        let a = build_state_via_hubs(&g, &forward).unwrap();
        let b = build_state_via_hubs(&g, &backward).unwrap();
        assert!(a.states_equal(&b, TOL).unwrap().equal);
    }
}
