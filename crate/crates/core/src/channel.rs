//! Random channel realizations consistent with a topology.
//!
//! Each block draws from its own generator seeded by `(seed, rx, tx)`, so a
//! block's entries do not depend on which other links exist.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::model::NetworkTopology;

pub type CMatrix = DMatrix<Complex64>;

/// SplitMix64 finalizer.
fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic child seed for stream `index` under `seed`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    mix64(mix64(seed) ^ index.wrapping_mul(0xD6E8_FEB8_6659_FD93))
}

/// Seeded generator for stream `index` under `seed`.
pub fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, index))
}

/// One circularly-symmetric complex Gaussian sample with unit variance.
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

/// `rows x cols` matrix of i.i.d. CN(0, 1) entries.
pub fn gaussian_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> CMatrix {
    // column-major fill order is part of the reproducibility contract
    CMatrix::from_fn(rows, cols, |_, _| complex_gaussian(rng))
}

/// Channel blocks `H[rx][tx]` for a topology; a block is all-zero exactly
/// where the adjacency entry is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelRealization {
    topology: NetworkTopology,
    blocks: Vec<CMatrix>,
}

impl ChannelRealization {
    /// Draws a realization. A pure function of `(topology, seed)`.
    pub fn sample(topology: &NetworkTopology, seed: u64) -> Self {
        let k = topology.k();
        let m = topology.m();
        let blocks = (0..k * k)
            .map(|idx| {
                let (rx, tx) = (idx / k, idx % k);
                if topology.link(rx, tx) {
                    let mut rng = stream_rng(seed, idx as u64);
                    gaussian_matrix(m, m, &mut rng)
                } else {
                    CMatrix::zeros(m, m)
                }
            })
            .collect();
        Self {
            topology: topology.clone(),
            blocks,
        }
    }

    pub fn topology(&self) -> &NetworkTopology {
        &self.topology
    }

    /// Block from transmitter `tx` to receiver `rx`.
    pub fn block(&self, rx: usize, tx: usize) -> &CMatrix {
        &self.blocks[rx * self.topology.k() + tx]
    }

    /// Stacks the blocks for receivers `rxs` (rows) and transmitters `txs`
    /// (columns), in the given order.
    pub fn sub_matrix(&self, rxs: &[usize], txs: &[usize]) -> CMatrix {
        let m = self.topology.m();
        let mut out = CMatrix::zeros(m * rxs.len(), m * txs.len());
        for (bi, &rx) in rxs.iter().enumerate() {
            for (bj, &tx) in txs.iter().enumerate() {
                out.view_mut((bi * m, bj * m), (m, m))
                    .copy_from(self.block(rx, tx));
            }
        }
        out
    }

    /// The full `MK x MK` super channel matrix.
    pub fn super_matrix(&self) -> CMatrix {
        let all: Vec<usize> = (0..self.topology.k()).collect();
        self.sub_matrix(&all, &all)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_blocks_follow_adjacency() {
        let topo = NetworkTopology::identity(3, 2).unwrap();
        let ch = ChannelRealization::sample(&topo, 7);
        for rx in 0..3 {
            for tx in 0..3 {
                let zero = ch
                    .block(rx, tx)
                    .iter()
                    .all(|z| *z == Complex64::new(0.0, 0.0));
                assert_eq!(zero, rx != tx);
            }
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let topo = NetworkTopology::fully_connected(3, 2).unwrap();
        assert_eq!(
            ChannelRealization::sample(&topo, 11),
            ChannelRealization::sample(&topo, 11)
        );
        assert_ne!(
            ChannelRealization::sample(&topo, 11),
            ChannelRealization::sample(&topo, 12)
        );
    }

    #[test]
    fn adding_a_link_leaves_other_blocks_untouched() {
        let sparse = NetworkTopology::identity(3, 2).unwrap();
        let dense = sparse.with_link(0, 2);
        let a = ChannelRealization::sample(&sparse, 5);
        let b = ChannelRealization::sample(&dense, 5);
        for rx in 0..3 {
            for tx in 0..3 {
                if (rx, tx) != (0, 2) {
                    assert_eq!(a.block(rx, tx), b.block(rx, tx));
                }
            }
        }
    }

    #[test]
    fn super_matrix_layout() {
        let topo = NetworkTopology::fully_connected(2, 2).unwrap();
        let ch = ChannelRealization::sample(&topo, 3);
        let h = ch.super_matrix();
        assert_eq!(h.shape(), (4, 4));
        assert_eq!(h.view((0, 2), (2, 2)), ch.block(0, 1).view((0, 0), (2, 2)));
        assert_eq!(h.view((2, 0), (2, 2)), ch.block(1, 0).view((0, 0), (2, 2)));
    }

    #[test]
    fn entries_have_unit_variance() {
        let mut rng = stream_rng(1, 0);
        let n = 20_000;
        let power: f64 = (0..n)
            .map(|_| complex_gaussian(&mut rng).norm_sqr())
            .sum::<f64>()
            / n as f64;
        assert!((power - 1.0).abs() < 0.05, "empirical power {power}");
    }
}
