//! Neighborhoods and maximum matchings in the transmitter/receiver
//! bipartite graph induced by the adjacency matrix.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::model::NetworkTopology;

/// One side of the bipartite connectivity graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Transmitters,
    Receivers,
}

/// A transmitter or receiver node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Tx(usize),
    Rx(usize),
}

impl Node {
    pub fn index(self) -> usize {
        match self {
            Node::Tx(i) | Node::Rx(i) => i,
        }
    }
}

impl std::fmt::Display for Node {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Node::Tx(i) => write!(f, "t{i}"),
            Node::Rx(i) => write!(f, "r{i}"),
        }
    }
}

pub(crate) fn check_ids(k: usize, ids: &[usize]) -> Result<()> {
    match ids.iter().find(|&&i| i >= k) {
        Some(&index) => Err(Error::IndexOutOfRange { index, k }),
        None => Ok(()),
    }
}

/// Nodes on the opposite side adjacent to at least one node of `set`.
///
/// `side` names the side `set` lives on: transmitters map to the receivers
/// that hear them, receivers to the transmitters they hear.
pub fn neighbors(topology: &NetworkTopology, side: Side, set: &[usize]) -> Result<BTreeSet<usize>> {
    let k = topology.k();
    check_ids(k, set)?;
    let out = match side {
        Side::Transmitters => (0..k)
            .filter(|&rx| set.iter().any(|&tx| topology.link(rx, tx)))
            .collect(),
        Side::Receivers => (0..k)
            .filter(|&tx| set.iter().any(|&rx| topology.link(rx, tx)))
            .collect(),
    };
    Ok(out)
}

/// Size of a maximum matching between transmitters `txs` and receivers
/// `rxs` using only the links of `topology`.
pub fn max_matching(topology: &NetworkTopology, txs: &[usize], rxs: &[usize]) -> Result<usize> {
    check_ids(topology.k(), txs)?;
    check_ids(topology.k(), rxs)?;
    Ok(matching_size(topology, txs, rxs))
}

/// Hopcroft-Karp on the induced sub-bipartite graph. Ids must be in range.
pub(crate) fn matching_size(topology: &NetworkTopology, txs: &[usize], rxs: &[usize]) -> usize {
    let adj: Vec<Vec<usize>> = txs
        .iter()
        .map(|&tx| {
            rxs.iter()
                .enumerate()
                .filter(|&(_, &rx)| topology.link(rx, tx))
                .map(|(r, _)| r)
                .collect()
        })
        .collect();
    HopcroftKarp::new(&adj, rxs.len()).run()
}

const UNMATCHED: usize = usize::MAX;

struct HopcroftKarp<'a> {
    adj: &'a [Vec<usize>],
    left_match: Vec<usize>,
    right_match: Vec<usize>,
    dist: Vec<usize>,
}

impl<'a> HopcroftKarp<'a> {
    fn new(adj: &'a [Vec<usize>], right_len: usize) -> Self {
        Self {
            adj,
            left_match: vec![UNMATCHED; adj.len()],
            right_match: vec![UNMATCHED; right_len],
            dist: vec![0; adj.len()],
        }
    }

    fn run(mut self) -> usize {
        let mut size = 0;
        while self.bfs() {
            for u in 0..self.adj.len() {
                if self.left_match[u] == UNMATCHED && self.dfs(u) {
                    size += 1;
                }
            }
        }
        size
    }

    /// Layers free left vertices; true if an augmenting path exists.
    fn bfs(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for u in 0..self.adj.len() {
            if self.left_match[u] == UNMATCHED {
                self.dist[u] = 0;
                queue.push_back(u);
            } else {
                self.dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                match self.right_match[v] {
                    UNMATCHED => found = true,
                    w if self.dist[w] == usize::MAX => {
                        self.dist[w] = self.dist[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        found
    }

    fn dfs(&mut self, u: usize) -> bool {
        for idx in 0..self.adj[u].len() {
            let v = self.adj[u][idx];
            let w = self.right_match[v];
            if w == UNMATCHED || (self.dist[w] == self.dist[u] + 1 && self.dfs(w)) {
                self.left_match[u] = v;
                self.right_match[v] = u;
                return true;
            }
        }
        self.dist[u] = usize::MAX;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[usize]) -> BTreeSet<usize> {
        ids.iter().copied().collect()
    }

    #[test]
    fn neighbor_sets() {
        let id = NetworkTopology::identity(3, 1).unwrap();
        assert_eq!(neighbors(&id, Side::Transmitters, &[0]).unwrap(), set(&[0]));
        let full = NetworkTopology::fully_connected(3, 1).unwrap();
        assert_eq!(
            neighbors(&full, Side::Transmitters, &[1]).unwrap(),
            set(&[0, 1, 2])
        );
        let l = NetworkTopology::new(3, 1, &[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(
            neighbors(&l, Side::Transmitters, &[1]).unwrap(),
            set(&[0, 1])
        );
        assert_eq!(neighbors(&l, Side::Receivers, &[0]).unwrap(), set(&[0, 1]));
        assert!(neighbors(&l, Side::Transmitters, &[3]).is_err());
    }

    #[test]
    fn matching_sizes() {
        let id = NetworkTopology::identity(3, 1).unwrap();
        assert_eq!(max_matching(&id, &[0, 1, 2], &[0, 1, 2]).unwrap(), 3);
        assert_eq!(max_matching(&id, &[0], &[1, 2]).unwrap(), 0);
        let full = NetworkTopology::fully_connected(4, 1).unwrap();
        assert_eq!(max_matching(&full, &[1, 3], &[0, 2]).unwrap(), 2);
        assert!(max_matching(&full, &[4], &[0]).is_err());
    }

    #[test]
    fn matching_needs_augmenting_paths() {
        // greedy t0->r0 blocks t1; augmenting path reroutes t0 to r1
        let l = NetworkTopology::new(3, 1, &[vec![1, 1, 0], vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(max_matching(&l, &[0, 1], &[0, 1]).unwrap(), 2);
        let chain = NetworkTopology::new(
            4,
            1,
            &[
                vec![1, 1, 0, 0],
                vec![0, 1, 1, 0],
                vec![0, 0, 1, 1],
                vec![0, 0, 0, 1],
            ],
        )
        .unwrap();
        assert_eq!(max_matching(&chain, &[1, 2, 3], &[0, 1, 2]).unwrap(), 3);
    }
}
