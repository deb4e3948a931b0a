//! Network description: wireless connectivity, backhaul capacities and the
//! two-user antenna configuration.
//!
//! Receivers index rows and transmitters index columns of the adjacency
//! matrix, so `L[i][j] = 1` means transmitter `j` is heard at receiver `i`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// K transmitter/receiver pairs, M antennas at every node, and the binary
/// large-scale adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NetworkTopology {
    k: usize,
    m: usize,
    adjacency: Vec<bool>,
}

impl NetworkTopology {
    /// Validates and builds a topology from integer rows.
    ///
    /// Every entry must be 0 or 1 and every direct link `L[i][i]` must be
    /// present.
    pub fn new(k: usize, m: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("K must be at least 1".into()));
        }
        if m == 0 {
            return Err(Error::InvalidParameter("M must be at least 1".into()));
        }
        if rows.len() != k {
            return Err(Error::ShapeMismatch(format!(
                "L has {} rows, expected K = {k}",
                rows.len()
            )));
        }
        let mut adjacency = Vec::with_capacity(k * k);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != k {
                return Err(Error::ShapeMismatch(format!(
                    "row {row} of L has {} entries, expected K = {k}",
                    entries.len()
                )));
            }
            for (col, &value) in entries.iter().enumerate() {
                match value {
                    0 => adjacency.push(false),
                    1 => adjacency.push(true),
                    _ => return Err(Error::NonBinaryEntry { row, col, value }),
                }
            }
        }
        let topology = Self { k, m, adjacency };
        if let Some(i) = (0..k).find(|&i| !topology.link(i, i)) {
            return Err(Error::DirectLinkMissing(i));
        }
        Ok(topology)
    }

    /// Builds a topology from a boolean predicate `link(rx, tx)`. Diagonal
    /// entries are still validated.
    pub fn from_fn(k: usize, m: usize, mut link: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let rows: Vec<Vec<i64>> = (0..k)
            .map(|i| (0..k).map(|j| i64::from(link(i, j))).collect())
            .collect();
        Self::new(k, m, &rows)
    }

    /// Every receiver hears every transmitter.
    pub fn fully_connected(k: usize, m: usize) -> Result<Self> {
        Self::from_fn(k, m, |_, _| true)
    }

    /// Only the direct links are present.
    pub fn identity(k: usize, m: usize) -> Result<Self> {
        Self::from_fn(k, m, |i, j| i == j)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `L[rx][tx]`.
    #[inline]
    pub fn link(&self, rx: usize, tx: usize) -> bool {
        self.adjacency[rx * self.k + tx]
    }

    /// The adjacency matrix as 0/1 rows.
    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.k)
            .map(|i| (0..self.k).map(|j| u8::from(self.link(i, j))).collect())
            .collect()
    }

    /// Same topology with the off-diagonal link `L[rx][tx]` switched on.
    pub fn with_link(&self, rx: usize, tx: usize) -> Self {
        let mut next = self.clone();
        next.adjacency[rx * self.k + tx] = true;
        next
    }

    /// Bitmask of receivers adjacent to transmitter `tx` (requires K <= 64).
    pub(crate) fn rx_mask_of_tx(&self, tx: usize) -> u64 {
        debug_assert!(self.k <= 64);
        (0..self.k)
            .filter(|&rx| self.link(rx, tx))
            .fold(0u64, |mask, rx| mask | (1 << rx))
    }

    /// Bitmask of transmitters adjacent to receiver `rx` (requires K <= 64).
    pub(crate) fn tx_mask_of_rx(&self, rx: usize) -> u64 {
        debug_assert!(self.k <= 64);
        (0..self.k)
            .filter(|&tx| self.link(rx, tx))
            .fold(0u64, |mask, tx| mask | (1 << tx))
    }
}

/// Directed backhaul links among the K cooperating nodes with
/// DoF-normalized capacities. Missing pairs have capacity zero.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BackhaulGraph {
    k: usize,
    capacity: BTreeMap<(usize, usize), f64>,
}

impl BackhaulGraph {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("K must be at least 1".into()));
        }
        Ok(Self {
            k,
            capacity: BTreeMap::new(),
        })
    }

    /// Builds a graph from `(from, to, capacity)` triples. A repeated pair
    /// keeps the last capacity.
    pub fn from_links(
        k: usize,
        links: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Result<Self> {
        let mut graph = Self::new(k)?;
        for (from, to, capacity) in links {
            graph.set_capacity(from, to, capacity)?;
        }
        Ok(graph)
    }

    /// Every ordered pair carries the same capacity.
    pub fn complete(k: usize, capacity: f64) -> Result<Self> {
        let pairs = (0..k).flat_map(|i| {
            (0..k)
                .filter(move |&j| j != i)
                .map(move |j| (i, j, capacity))
        });
        Self::from_links(k, pairs)
    }

    /// Two-way links between `center` and every other node.
    pub fn star(k: usize, center: usize, capacity: f64) -> Result<Self> {
        let links = (0..k)
            .filter(|&j| j != center)
            .flat_map(|j| [(center, j, capacity), (j, center, capacity)]);
        Self::from_links(k, links)
    }

    /// Two-way links between consecutive nodes, closing the cycle.
    pub fn ring(k: usize, capacity: f64) -> Result<Self> {
        let links = (0..k)
            .map(|i| (i, (i + 1) % k))
            .filter(|(i, j)| i != j)
            .flat_map(|(i, j)| [(i, j, capacity), (j, i, capacity)]);
        Self::from_links(k, links)
    }

    /// Two-way links `0-1-2-...-(K-1)`.
    pub fn path(k: usize, capacity: f64) -> Result<Self> {
        let links = (1..k).flat_map(|j| [(j - 1, j, capacity), (j, j - 1, capacity)]);
        Self::from_links(k, links)
    }

    pub fn set_capacity(&mut self, from: usize, to: usize, capacity: f64) -> Result<()> {
        for index in [from, to] {
            if index >= self.k {
                return Err(Error::IndexOutOfRange { index, k: self.k });
            }
        }
        if from == to {
            return Err(Error::InvalidParameter(format!("self-loop at node {from}")));
        }
        if !capacity.is_finite() || capacity < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "capacity {capacity} on link {from}->{to} must be finite and nonnegative"
            )));
        }
        if capacity == 0.0 {
            self.capacity.remove(&(from, to));
        } else {
            self.capacity.insert((from, to), capacity);
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn capacity(&self, from: usize, to: usize) -> f64 {
        self.capacity.get(&(from, to)).copied().unwrap_or(0.0)
    }

    /// Links with positive capacity, ordered by `(from, to)`.
    pub fn links(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.capacity.iter().map(|(&(from, to), &c)| (from, to, c))
    }

    /// Average per-user backhaul load: total capacity divided by K.
    pub fn per_user_load(&self) -> f64 {
        self.capacity.values().sum::<f64>() / self.k as f64
    }

    /// Undirected adjacency: an edge wherever either direction has
    /// positive capacity.
    pub fn undirected_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.k];
        for &(from, to) in self.capacity.keys() {
            adj[from].push(to);
            adj[to].push(from);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }
}

/// Antenna counts and backhaul capacities of a two-user channel with
/// possibly unequal nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoUserConfig {
    pub m1: usize,
    pub n1: usize,
    pub m2: usize,
    pub n2: usize,
    pub c_b12: f64,
    pub c_b21: f64,
}

impl TwoUserConfig {
    pub fn new(m1: usize, n1: usize, m2: usize, n2: usize, c_b12: f64, c_b21: f64) -> Result<Self> {
        if [m1, n1, m2, n2].contains(&0) {
            return Err(Error::InvalidParameter(
                "antenna counts must be at least 1".into(),
            ));
        }
        for c in [c_b12, c_b21] {
            if !c.is_finite() || c < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "backhaul capacity {c} must be finite and nonnegative"
                )));
            }
        }
        Ok(Self {
            m1,
            n1,
            m2,
            n2,
            c_b12,
            c_b21,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_valid_topologies() {
        assert!(NetworkTopology::new(2, 1, &[vec![1, 1], vec![1, 1]]).is_ok());
        assert!(NetworkTopology::new(3, 1, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).is_ok());
    }

    #[test]
    fn rejects_missing_direct_link() {
        let err = NetworkTopology::new(2, 1, &[vec![0, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, Error::DirectLinkMissing(0));
    }

    #[test]
    fn rejects_non_binary_and_bad_shapes() {
        assert!(matches!(
            NetworkTopology::new(2, 1, &[vec![1, 2], vec![1, 1]]),
            Err(Error::NonBinaryEntry {
                row: 0,
                col: 1,
                value: 2
            })
        ));
        assert!(matches!(
            NetworkTopology::new(2, 1, &[vec![1, 1]]),
            Err(Error::ShapeMismatch(_))
        ));
        assert!(matches!(
            NetworkTopology::new(2, 1, &[vec![1, 1], vec![1]]),
            Err(Error::ShapeMismatch(_))
        ));
        assert!(NetworkTopology::new(2, 0, &[vec![1, 1], vec![1, 1]]).is_err());
    }

    #[test]
    fn backhaul_load_and_validation() {
        let g = BackhaulGraph::complete(4, 0.5).unwrap();
        assert_eq!(g.links().count(), 12);
        assert!((g.per_user_load() - 1.5).abs() < 1e-15);

        let mut g = BackhaulGraph::new(3).unwrap();
        assert!(g.set_capacity(0, 0, 1.0).is_err());
        assert!(g.set_capacity(0, 3, 1.0).is_err());
        assert!(g.set_capacity(0, 1, -1.0).is_err());
        assert!(g.set_capacity(0, 1, f64::INFINITY).is_err());
        g.set_capacity(0, 1, 2.0).unwrap();
        assert_eq!(g.capacity(0, 1), 2.0);
        assert_eq!(g.capacity(1, 0), 0.0);
        assert_eq!(g.undirected_neighbors(), vec![vec![1], vec![0], vec![]]);
    }

    #[test]
    fn ring_and_path_shapes() {
        let ring = BackhaulGraph::ring(5, 1.0).unwrap();
        assert!(ring.undirected_neighbors().iter().all(|n| n.len() == 2));
        let path = BackhaulGraph::path(3, 1.0).unwrap();
        assert_eq!(
            path.undirected_neighbors(),
            vec![vec![1], vec![0, 2], vec![1]]
        );
    }
}
