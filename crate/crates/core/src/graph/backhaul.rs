//! Hop-count metrics on the backhaul graph: closeness centrality,
//! centralized-scheme feasibility and the load of routing everything
//! through one central node.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::model::BackhaulGraph;

/// Default slack for the asymptotic feasibility surrogate.
pub const DEFAULT_EPSILON: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeasibilityMode {
    /// Some node must reach every other node in one hop.
    Finite,
    /// Some node must have degree at least `(1 - epsilon)(K - 1)`.
    Asymptotic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub feasible: bool,
    /// Lowest-index qualifying node, when feasible.
    pub witness: Option<usize>,
    pub max_degree: usize,
}

/// Unweighted hop distances from `from`, ignoring link direction.
pub fn hop_distances(backhaul: &BackhaulGraph, from: usize) -> Result<Vec<Option<usize>>> {
    let k = backhaul.k();
    if from >= k {
        return Err(Error::IndexOutOfRange { index: from, k });
    }
    let adj = backhaul.undirected_neighbors();
    let mut dist = vec![None; k];
    dist[from] = Some(0);
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        let next = dist[u].map(|d| d + 1);
        for &v in &adj[u] {
            if dist[v].is_none() {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    Ok(dist)
}

fn distance_sum(backhaul: &BackhaulGraph, from: usize) -> Result<usize> {
    hop_distances(backhaul, from)?
        .into_iter()
        .enumerate()
        .try_fold(0, |acc, (to, d)| {
            d.map(|d| acc + d).ok_or(Error::Unreachable { from, to })
        })
}

/// `(K - 1) / sum_j d(i, j)` over hop distances.
pub fn closeness_centrality(backhaul: &BackhaulGraph, node: usize) -> Result<f64> {
    let k = backhaul.k();
    if k < 2 {
        return Err(Error::InvalidParameter(
            "closeness needs at least two nodes".into(),
        ));
    }
    let total = distance_sum(backhaul, node)?;
    Ok((k - 1) as f64 / total as f64)
}

/// Whether some node has enough backhaul neighbors to act as the central
/// processor.
pub fn check_feasibility(
    backhaul: &BackhaulGraph,
    mode: FeasibilityMode,
    epsilon: f64,
) -> Result<FeasibilityVerdict> {
    let k = backhaul.k();
    if k < 2 {
        return Err(Error::InvalidParameter("feasibility needs K >= 2".into()));
    }
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::InvalidParameter(format!(
            "epsilon {epsilon} outside [0, 1]"
        )));
    }
    let degrees: Vec<usize> = backhaul
        .undirected_neighbors()
        .iter()
        .map(Vec::len)
        .collect();
    let qualifies = |d: usize| match mode {
        FeasibilityMode::Finite => d == k - 1,
        FeasibilityMode::Asymptotic => d as f64 >= (1.0 - epsilon) * (k - 1) as f64,
    };
    let witness = degrees.iter().position(|&d| qualifies(d));
    Ok(FeasibilityVerdict {
        feasible: witness.is_some(),
        witness,
        max_degree: degrees.iter().copied().max().unwrap_or(0),
    })
}

/// Per-user load `M (sum_j d(center, j) + K - 1) / K` of gathering all
/// messages at `center` over shortest paths and sending results back.
pub fn min_centralized_load(backhaul: &BackhaulGraph, m: usize, center: usize) -> Result<f64> {
    let k = backhaul.k();
    let total = distance_sum(backhaul, center)?;
    Ok(m as f64 * (total + k - 1) as f64 / k as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closeness_examples() {
        let star = BackhaulGraph::star(4, 0, 1.0).unwrap();
        assert_eq!(closeness_centrality(&star, 0).unwrap(), 1.0);
        assert_eq!(closeness_centrality(&star, 1).unwrap(), 3.0 / 5.0);
        let path = BackhaulGraph::path(3, 1.0).unwrap();
        assert!((closeness_centrality(&path, 0).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(closeness_centrality(&path, 1).unwrap(), 1.0);
    }

    #[test]
    fn one_way_link_counts_as_edge() {
        let g = BackhaulGraph::from_links(2, [(1, 0, 0.5)]).unwrap();
        assert_eq!(closeness_centrality(&g, 0).unwrap(), 1.0);
    }

    #[test]
    fn unreachable_is_reported() {
        let g = BackhaulGraph::from_links(3, [(0, 1, 1.0)]).unwrap();
        assert_eq!(
            closeness_centrality(&g, 0).unwrap_err(),
            Error::Unreachable { from: 0, to: 2 }
        );
        assert!(min_centralized_load(&g, 1, 0).is_err());
    }

    #[test]
    fn feasibility_examples() {
        let star = BackhaulGraph::star(5, 0, 1.0).unwrap();
        let v = check_feasibility(&star, FeasibilityMode::Finite, DEFAULT_EPSILON).unwrap();
        assert_eq!((v.feasible, v.witness), (true, Some(0)));

        let ring = BackhaulGraph::ring(5, 1.0).unwrap();
        let v = check_feasibility(&ring, FeasibilityMode::Finite, DEFAULT_EPSILON).unwrap();
        assert_eq!((v.feasible, v.witness, v.max_degree), (false, None, 2));

        let complete = BackhaulGraph::complete(4, 1.0).unwrap();
        assert!(
            check_feasibility(&complete, FeasibilityMode::Finite, DEFAULT_EPSILON)
                .unwrap()
                .feasible
        );
    }

    #[test]
    fn asymptotic_mode_tolerates_missing_links() {
        // K = 11, node 0 misses one neighbor: degree 9 >= 0.9 * 10
        let links = (2..11).flat_map(|j| [(0, j, 1.0), (j, 0, 1.0)]);
        let mut g = BackhaulGraph::from_links(11, links).unwrap();
        g.set_capacity(1, 2, 1.0).unwrap();
        assert!(
            !check_feasibility(&g, FeasibilityMode::Finite, 0.1)
                .unwrap()
                .feasible
        );
        let v = check_feasibility(&g, FeasibilityMode::Asymptotic, 0.1).unwrap();
        assert_eq!(v.witness, Some(0));
        assert!(
            !check_feasibility(&g, FeasibilityMode::Asymptotic, 0.05)
                .unwrap()
                .feasible
        );
        assert!(check_feasibility(&g, FeasibilityMode::Asymptotic, 1.5).is_err());
    }

    #[test]
    fn centralized_load_examples() {
        let star = BackhaulGraph::star(4, 0, 1.0).unwrap();
        assert!((min_centralized_load(&star, 1, 0).unwrap() - 1.5).abs() < 1e-15);
        let path = BackhaulGraph::path(3, 1.0).unwrap();
        assert!((min_centralized_load(&path, 1, 1).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        let complete = BackhaulGraph::complete(10, 1.0).unwrap();
        assert!((min_centralized_load(&complete, 2, 7).unwrap() - 3.6).abs() < 1e-12);
    }
}
