//! Maximum proper independent sets through the source/sink reduction.
//!
//! For a transmitter `a` and a non-adjacent receiver `b`, every s-t cut of
//! the reduced network made only of unit edges corresponds to an
//! independent set containing `a` and `b` of size `2K - |cut|`, so one
//! max-flow computation yields the largest such set.

use std::collections::BTreeSet;

use super::bipartite::{check_ids, Node};
use super::flow::FlowNetwork;
use crate::error::{Error, Result};
use crate::model::NetworkTopology;

/// Node ids inside the reduced network: transmitters `0..K`, receivers
/// `K..2K`, then the source and the sink.
#[derive(Debug, Clone, Copy)]
pub struct ReducedLayout {
    pub k: usize,
}

impl ReducedLayout {
    pub fn tx(self, j: usize) -> usize {
        j
    }
    pub fn rx(self, i: usize) -> usize {
        self.k + i
    }
    pub fn source(self) -> usize {
        2 * self.k
    }
    pub fn sink(self) -> usize {
        2 * self.k + 1
    }
}

/// Stand-in for infinite capacity: `ceil(K/2)^3`, raised to `2K - 1` when
/// that is smaller so no surrogate edge can undercut the all-unit cut of
/// size `2K - 2`. Only K = 2 is affected.
pub fn surrogate_infinity(k: usize) -> u64 {
    let k = k as u64;
    k.div_ceil(2).pow(3).max((2 * k).saturating_sub(1))
}

/// Largest proper independent set found for one `(a, b)` pair or over the
/// whole graph. Empty when none exists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PisResult {
    pub size: usize,
    pub members: BTreeSet<Node>,
}

impl PisResult {
    pub fn transmitters(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().filter_map(|n| match n {
            Node::Tx(j) => Some(*j),
            Node::Rx(_) => None,
        })
    }

    pub fn receivers(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().filter_map(|n| match n {
            Node::Rx(i) => Some(*i),
            Node::Tx(_) => None,
        })
    }
}

/// Builds the reduced network for transmitter `a` and receiver `b`.
///
/// Source feeds every transmitter, every receiver drains into the sink and
/// wireless links point transmitter to receiver. Wireless links, `s -> a`
/// and `b -> t` carry the surrogate infinite capacity; all other source and
/// sink edges carry 1.
pub fn build_flow_network(topology: &NetworkTopology, a: usize, b: usize) -> Result<FlowNetwork> {
    let k = topology.k();
    check_ids(k, &[a, b])?;
    if topology.link(b, a) {
        return Err(Error::AdjacentPair { tx: a, rx: b });
    }
    let layout = ReducedLayout { k };
    let inf = surrogate_infinity(k);
    let mut net = FlowNetwork::new(2 * k + 2, layout.source(), layout.sink())?;
    for j in 0..k {
        net.add_edge(layout.source(), layout.tx(j), if j == a { inf } else { 1 })?;
    }
    for j in 0..k {
        for i in 0..k {
            if topology.link(i, j) {
                net.add_edge(layout.tx(j), layout.rx(i), inf)?;
            }
        }
    }
    for i in 0..k {
        net.add_edge(layout.rx(i), layout.sink(), if i == b { inf } else { 1 })?;
    }
    Ok(net)
}

/// Largest proper independent set containing transmitter `a` and receiver
/// `b`; empty when the two are adjacent.
pub fn max_pis(topology: &NetworkTopology, a: usize, b: usize) -> Result<PisResult> {
    check_ids(topology.k(), &[a, b])?;
    if topology.link(b, a) {
        return Ok(PisResult::default());
    }
    let k = topology.k();
    let layout = ReducedLayout { k };
    let cut = build_flow_network(topology, a, b)?.min_cut();
    let reach = &cut.source_side;
    // The cut removes s->tx for unreachable transmitters and rx->t for
    // reachable receivers; every other node survives.
    let members: BTreeSet<Node> = (0..k)
        .filter(|&j| reach[layout.tx(j)])
        .map(Node::Tx)
        .chain((0..k).filter(|&i| !reach[layout.rx(i)]).map(Node::Rx))
        .collect();
    debug_assert_eq!(members.len() as u64, 2 * k as u64 - cut.value);
    Ok(PisResult {
        size: members.len(),
        members,
    })
}

/// Largest proper independent set over all transmitter/receiver pairs.
pub fn max_pis_global(topology: &NetworkTopology) -> PisResult {
    let k = topology.k();
    let mut best = PisResult::default();
    for a in 0..k {
        for b in (0..k).filter(|&b| !topology.link(b, a)) {
            let candidate = max_pis(topology, a, b).expect("ids in range");
            if candidate.size > best.size {
                best = candidate;
            }
        }
    }
    best
}
