//! Graph states through stabilizer algebra.
//!
//! This crate models simple graphs, selects hub vertex sets whose incident
//! edges cover the whole edge set, represents n-qubit Pauli operators with
//! exact phase tracking, and constructs the corresponding graph state two
//! independent ways: by applying a CZ gate per edge to |+>^n, and by
//! expanding the product of (I + K_i)/sqrt(2) over the hub cluster operators
//! onto a |0>^B |+>^(n-B) seed. The dense state-vector simulator doubles as
//! the ground truth every algebraic identity is verified against.

pub mod catalog;
pub mod cover;
pub mod error;
pub mod expand;
pub mod graph;
pub mod pauli;
pub mod state;

pub use cover::{greedy_cover, min_cover_exact, validate_cover, CoverMethod, HubSet};
pub use error::{Error, Result};
pub use expand::{
    build_state_via_hubs, expand_terms, reduction_report, seed_state, verify_expansion,
    ExpansionTerm, HubExpansion, ReductionReport, VerifyReport,
};
pub use graph::{parse_edge_list, Edge, Graph, NeighborSet, VertexId};
pub use pauli::{ghz_generators, graph_generators, group_elements, GeneratorSet, PauliString};
pub use state::{EqualityReport, StateVector};
