//! Degrees of freedom versus backhaul load for K-user MIMO interference
//! channels with cooperating base stations.
//!
//! The crate covers the wireless connectivity model, the graph condition
//! that decides when a centralized scheme is DoF-optimal, the closed-form
//! trade-off curves and their converse, and high-SNR rate simulation of the
//! two centralized schemes.

pub mod channel;
pub mod dof;
pub mod error;
pub mod format;
pub mod graph;
pub mod io;
pub mod model;
pub mod rank;
pub mod sim;

pub use channel::{CMatrix, ChannelRealization};
pub use error::{Error, Result};
pub use model::{BackhaulGraph, NetworkTopology, TwoUserConfig};
