//! Combinatorial analysis of the wireless and backhaul graphs.

pub mod backhaul;
pub mod bipartite;
pub mod ehc;
pub mod flow;
pub mod pis;

pub use backhaul::{
    check_feasibility, closeness_centrality, hop_distances, min_centralized_load, FeasibilityMode,
    FeasibilityVerdict, DEFAULT_EPSILON,
};
pub use bipartite::{max_matching, neighbors, Node, Side};
pub use ehc::{check_ehc, check_ehc_bruteforce, check_ehc_dual, EXHAUSTIVE_LIMIT};
pub use flow::{FlowEdge, FlowNetwork, MinCut};
pub use pis::{
    build_flow_network, max_pis, max_pis_global, surrogate_infinity, PisResult, ReducedLayout,
};
