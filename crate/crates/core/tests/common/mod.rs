//! Independent oracles and generators shared by the integration tests.
//!
//! Nothing here calls the flow or matching code under test: every oracle is
//! a direct enumeration over bitmasks.

#![allow(dead_code)]

use backhaul_dof::NetworkTopology;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Topology with the diagonal forced on and each off-diagonal link present
/// with a probability drawn per topology, so both verdicts show up.
pub fn random_topology(k: usize, m: usize, seed: u64) -> NetworkTopology {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density: f64 = rng.random_range(0.1..0.95);
    NetworkTopology::from_fn(k, m, |rx, tx| rx == tx || rng.random_bool(density)).unwrap()
}

/// All topologies of size `k` with the diagonal on.
pub fn all_topologies(k: usize) -> Vec<NetworkTopology> {
    let off: Vec<(usize, usize)> = (0..k)
        .flat_map(|rx| (0..k).map(move |tx| (rx, tx)))
        .filter(|(rx, tx)| rx != tx)
        .collect();
    (0u64..1 << off.len())
        .map(|mask| {
            NetworkTopology::from_fn(k, 1, |rx, tx| {
                rx == tx
                    || off
                        .iter()
                        .position(|&p| p == (rx, tx))
                        .is_some_and(|i| mask >> i & 1 == 1)
            })
            .unwrap()
        })
        .collect()
}

/// Receivers hearing at least one transmitter in `tx_mask`.
pub fn heard_by(topo: &NetworkTopology, tx_mask: u64) -> u64 {
    let k = topo.k();
    (0..k)
        .filter(|&rx| (0..k).any(|tx| tx_mask >> tx & 1 == 1 && topo.link(rx, tx)))
        .fold(0, |acc, rx| acc | 1 << rx)
}

/// Maximum proper independent set size through every non-adjacent
/// `(a, b)`, by enumerating all `2^(2K)` node subsets. Entry `[a][b]` is
/// `None` when `b` hears `a`.
pub fn brute_force_pis(topo: &NetworkTopology) -> Vec<Vec<Option<usize>>> {
    let k = topo.k();
    let mut best: Vec<Vec<Option<usize>>> = (0..k)
        .map(|a| (0..k).map(|b| (!topo.link(b, a)).then_some(0)).collect())
        .collect();
    for mask in 0u64..1 << (2 * k) {
        let txs = mask & ((1 << k) - 1);
        let rxs = mask >> k;
        if txs == 0 || rxs == 0 || heard_by(topo, txs) & rxs != 0 {
            continue;
        }
        let size = mask.count_ones() as usize;
        for a in (0..k).filter(|a| txs >> a & 1 == 1) {
            for b in (0..k).filter(|b| rxs >> b & 1 == 1) {
                let cell = best[a][b].as_mut().expect("independent pair");
                *cell = (*cell).max(size);
            }
        }
    }
    best
}

/// Largest proper independent set over all pairs.
pub fn brute_force_pis_global(topo: &NetworkTopology) -> usize {
    brute_force_pis(topo)
        .into_iter()
        .flatten()
        .flatten()
        .max()
        .unwrap_or(0)
}

/// The Extended Hall Condition straight from its definition.
pub fn hall_oracle(topo: &NetworkTopology) -> bool {
    let k = topo.k();
    (1u64..1 << k).all(|s| {
        let l = s.count_ones() as usize;
        l > k.div_ceil(2) || heard_by(topo, s).count_ones() as usize >= k / 2 + l
    })
}

/// Whether every subset of `txs` hears at least as many receivers of `rxs`
/// as it has members.
pub fn hall_saturates(topo: &NetworkTopology, txs: &[usize], rxs: &[usize]) -> bool {
    let rx_mask = rxs.iter().fold(0u64, |acc, &r| acc | 1 << r);
    (1u64..1 << txs.len()).all(|sub| {
        let s = txs
            .iter()
            .enumerate()
            .filter(|(i, _)| sub >> i & 1 == 1)
            .fold(0u64, |acc, (_, &t)| acc | 1 << t);
        (heard_by(topo, s) & rx_mask).count_ones() >= sub.count_ones()
    })
}

pub fn mask_to_vec(mask: u64, k: usize) -> Vec<usize> {
    (0..k).filter(|i| mask >> i & 1 == 1).collect()
}
