//! Extended Hall Condition: every set of `l <= ceil(K/2)` transmitters hears
//! at least `floor(K/2) + l` receivers.
//!
//! [`check_ehc`] decides it in polynomial time from the largest proper
//! independent set; the exhaustive variants enumerate subsets directly and
//! serve as oracles.

use itertools::Itertools;

use super::pis::max_pis_global;
use crate::error::{Error, Result};
use crate::model::NetworkTopology;

/// Largest K accepted by the subset-enumeration checks.
pub const EXHAUSTIVE_LIMIT: usize = 12;

/// Polynomial-time check: the condition holds iff no proper independent set
/// is larger than `ceil(K/2)`.
pub fn check_ehc(topology: &NetworkTopology) -> bool {
    max_pis_global(topology).size <= topology.k().div_ceil(2)
}

/// Direct check over all transmitter subsets with `1 <= |S| <= ceil(K/2)`.
pub fn check_ehc_bruteforce(topology: &NetworkTopology) -> Result<bool> {
    check_ehc_bruteforce_with_limit(topology, EXHAUSTIVE_LIMIT)
}

pub fn check_ehc_bruteforce_with_limit(topology: &NetworkTopology, limit: usize) -> Result<bool> {
    let masks = neighborhood_masks(topology, limit, |t, j| t.rx_mask_of_tx(j))?;
    Ok(hall_type_condition(&masks))
}

/// The receiver-side condition: every set of `k <= ceil(K/2)` receivers
/// hears at least `floor(K/2) + k` transmitters. Checked by enumeration.
pub fn check_ehc_dual(topology: &NetworkTopology) -> Result<bool> {
    check_ehc_dual_with_limit(topology, EXHAUSTIVE_LIMIT)
}

pub fn check_ehc_dual_with_limit(topology: &NetworkTopology, limit: usize) -> Result<bool> {
    let masks = neighborhood_masks(topology, limit, |t, i| t.tx_mask_of_rx(i))?;
    Ok(hall_type_condition(&masks))
}

fn neighborhood_masks(
    topology: &NetworkTopology,
    limit: usize,
    mask_of: impl Fn(&NetworkTopology, usize) -> u64,
) -> Result<Vec<u64>> {
    let k = topology.k();
    if k > limit.min(64) {
        return Err(Error::LimitExceeded { k, limit });
    }
    Ok((0..k).map(|node| mask_of(topology, node)).collect())
}

/// `masks[v]` is the opposite-side neighborhood of node `v`.
fn hall_type_condition(masks: &[u64]) -> bool {
    let k = masks.len();
    let floor_half = k / 2;
    (1..=k.div_ceil(2)).all(|l| {
        masks.iter().combinations(l).all(|subset| {
            let union = subset.into_iter().fold(0u64, |acc, m| acc | m);
            union.count_ones() as usize >= floor_half + l
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fully_connected_holds() {
        for k in 2..=6 {
            let t = NetworkTopology::fully_connected(k, 1).unwrap();
            assert!(check_ehc(&t));
            assert!(check_ehc_bruteforce(&t).unwrap());
            assert!(check_ehc_dual(&t).unwrap());
        }
    }

    #[test]
    fn identity_fails() {
        for k in 2..=5 {
            let t = NetworkTopology::identity(k, 1).unwrap();
            assert!(!check_ehc(&t), "K = {k}");
            assert!(!check_ehc_bruteforce(&t).unwrap());
            assert!(!check_ehc_dual(&t).unwrap());
        }
    }

    #[test]
    fn single_user_holds_trivially() {
        let t = NetworkTopology::identity(1, 1).unwrap();
        assert!(check_ehc(&t));
        assert!(check_ehc_bruteforce(&t).unwrap());
    }

    #[test]
    fn limit_is_enforced() {
        let t = NetworkTopology::fully_connected(13, 1).unwrap();
        assert_eq!(
            check_ehc_bruteforce(&t).unwrap_err(),
            Error::LimitExceeded { k: 13, limit: 12 }
        );
        assert!(check_ehc_dual(&t).is_err());
        assert!(check_ehc_bruteforce_with_limit(&t, 13).unwrap());
    }

    #[test]
    fn one_missing_cross_link_k4() {
        // K=4: singletons need 3 neighbors, pairs need all 4.
        // Dropping two links of transmitter 0 leaves it with 2 neighbors.
        let t = NetworkTopology::from_fn(4, 1, |i, j| !(j == 0 && (i == 1 || i == 2))).unwrap();
        assert!(!check_ehc_bruteforce(&t).unwrap());
        assert!(!check_ehc(&t));
        // Dropping one link keeps 3 neighbors for every transmitter, and any
        // pair still covers all receivers.
        let t = NetworkTopology::from_fn(4, 1, |i, j| !(j == 0 && i == 1)).unwrap();
        assert!(check_ehc_bruteforce(&t).unwrap());
        assert!(check_ehc(&t));
    }
}
