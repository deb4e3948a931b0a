//! Numeric rank of sampled channel blocks and the two matrix-rank forms of
//! the Extended Hall Condition.
//!
//! Verdicts are decided combinatorially: a generic block matrix is full rank
//! exactly when the bipartite graph of its block pattern has a matching that
//! saturates the smaller side. Sampled realizations only confirm this, and
//! every disagreement is reported.

use itertools::Itertools;
use rand::seq::index::sample;
use rand::Rng;

use crate::channel::{derive_seed, stream_rng, CMatrix, ChannelRealization};
use crate::error::{Error, Result};
use crate::graph::bipartite::{check_ids, matching_size};
use crate::graph::EXHAUSTIVE_LIMIT;
use crate::model::NetworkTopology;

/// Default relative singular-value threshold.
pub const DEFAULT_REL_TOL: f64 = 1e-9;

/// Default number of sampled spot-checks per condition.
pub const DEFAULT_TRIALS: usize = 20;

/// Number of singular values above `rel_tol` times the largest one.
pub fn numeric_rank(matrix: &CMatrix, rel_tol: f64) -> Result<usize> {
    if matrix
        .iter()
        .any(|z| !z.re.is_finite() || !z.im.is_finite())
    {
        return Err(Error::NonFinite);
    }
    if !(rel_tol > 0.0 && rel_tol < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "rel_tol {rel_tol} outside (0, 1)"
        )));
    }
    if matrix.is_empty() {
        return Ok(0);
    }
    let sv = matrix.singular_values();
    let largest = sv.max();
    if largest == 0.0 {
        return Ok(0);
    }
    Ok(sv.iter().filter(|&&s| s > rel_tol * largest).count())
}

/// One sampled block whose numeric rank disagreed with the matching
/// prediction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankViolation {
    pub receivers: Vec<usize>,
    pub transmitters: Vec<usize>,
    pub seed: u64,
    pub numeric_rank: usize,
    pub predicted_rank: usize,
}

/// Outcome of sampling one `(S, Q)` block pattern repeatedly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCheck {
    pub matching: usize,
    /// Whether the matching saturates the smaller side.
    pub predicted_full: bool,
    pub ranks: Vec<usize>,
    pub violations: Vec<RankViolation>,
}

impl RankCheck {
    pub fn consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Samples `H_QS` `trials` times and compares its numeric rank with
/// `M` times the maximum matching between `S` and `Q`.
pub fn matching_predicts_rank(
    topology: &NetworkTopology,
    txs: &[usize],
    rxs: &[usize],
    trials: usize,
    seed: u64,
) -> Result<RankCheck> {
    check_ids(topology.k(), txs)?;
    check_ids(topology.k(), rxs)?;
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let matching = matching_size(topology, txs, rxs);
    let mut ranks = Vec::with_capacity(trials);
    let mut violations = Vec::new();
    for trial in 0..trials {
        let trial_seed = derive_seed(seed, trial as u64);
        let (rank, violation) = spot_check(topology, txs, rxs, matching, trial_seed)?;
        ranks.push(rank);
        violations.extend(violation);
    }
    Ok(RankCheck {
        matching,
        predicted_full: matching == txs.len().min(rxs.len()),
        ranks,
        violations,
    })
}

fn spot_check(
    topology: &NetworkTopology,
    txs: &[usize],
    rxs: &[usize],
    matching: usize,
    seed: u64,
) -> Result<(usize, Option<RankViolation>)> {
    let channel = ChannelRealization::sample(topology, seed);
    let block = channel.sub_matrix(rxs, txs);
    let rank = numeric_rank(&block, DEFAULT_REL_TOL)?;
    let predicted = topology.m() * matching;
    let violation = (rank != predicted).then(|| RankViolation {
        receivers: rxs.to_vec(),
        transmitters: txs.to_vec(),
        seed,
        numeric_rank: rank,
        predicted_rank: predicted,
    });
    Ok((rank, violation))
}

/// Combinatorial verdict plus the sampled confirmations behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub holds: bool,
    pub spot_checks: usize,
    pub violations: Vec<RankViolation>,
}

fn check_limit(k: usize) -> Result<()> {
    if k > EXHAUSTIVE_LIMIT {
        return Err(Error::LimitExceeded {
            k,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    Ok(())
}

fn half_sizes(k: usize) -> Vec<usize> {
    let mut sizes = vec![k / 2, k.div_ceil(2)];
    sizes.dedup();
    sizes.retain(|&s| s > 0);
    sizes
}

fn random_subset<R: Rng>(rng: &mut R, k: usize, size: usize) -> Vec<usize> {
    let mut v = sample(rng, k, size).into_vec();
    v.sort_unstable();
    v
}

/// Full-rank sub-matrix form: for `l1, l2` in `{ceil(K/2), floor(K/2)}` with
/// `l1 + l2 >= K`, every `l2 x l1` block pattern `H_QS` admits a matching
/// saturating its smaller side.
pub fn check_condition_b(
    topology: &NetworkTopology,
    trials: usize,
    seed: u64,
) -> Result<ConditionReport> {
    let k = topology.k();
    check_limit(k)?;
    let sizes = half_sizes(k);
    let families: Vec<(usize, usize)> = sizes
        .iter()
        .cartesian_product(&sizes)
        .map(|(&l1, &l2)| (l1, l2))
        .filter(|&(l1, l2)| l1 + l2 >= k)
        .collect();

    let holds = families.iter().all(|&(l1, l2)| {
        (0..k).combinations(l1).all(|txs| {
            (0..k)
                .combinations(l2)
                .all(|rxs| matching_size(topology, &txs, &rxs) == l1.min(l2))
        })
    });

    let mut rng = stream_rng(seed, u64::MAX);
    let mut violations = Vec::new();
    for trial in 0..trials {
        let (l1, l2) = families[rng.random_range(0..families.len())];
        let txs = random_subset(&mut rng, k, l1);
        let rxs = random_subset(&mut rng, k, l2);
        let matching = matching_size(topology, &txs, &rxs);
        let (_, violation) = spot_check(
            topology,
            &txs,
            &rxs,
            matching,
            derive_seed(seed, trial as u64),
        )?;
        violations.extend(violation);
    }
    Ok(ConditionReport {
        holds,
        spot_checks: trials,
        violations,
    })
}

/// Direct and cross form: for every user set `S` with `|S|` in
/// `{ceil(K/2), floor(K/2)}`, both `H_SS` and `H_QS` with `Q` the
/// complementary receivers admit matchings saturating their smaller side.
pub fn check_condition_c(
    topology: &NetworkTopology,
    trials: usize,
    seed: u64,
) -> Result<ConditionReport> {
    let k = topology.k();
    check_limit(k)?;
    let sizes = half_sizes(k);
    let complement = |s: &[usize]| (0..k).filter(|i| !s.contains(i)).collect::<Vec<_>>();
    let block_ok = |txs: &[usize], rxs: &[usize]| {
        matching_size(topology, txs, rxs) == txs.len().min(rxs.len())
    };

    let holds = sizes.iter().all(|&l| {
        (0..k).combinations(l).all(|users| {
            let others = complement(&users);
            block_ok(&users, &users) && block_ok(&users, &others)
        })
    });

    let mut rng = stream_rng(seed, u64::MAX);
    let mut violations = Vec::new();
    for trial in 0..trials {
        let l = sizes[rng.random_range(0..sizes.len())];
        let users = random_subset(&mut rng, k, l);
        let others = complement(&users);
        let trial_seed = derive_seed(seed, trial as u64);
        for rxs in [&users, &others] {
            let matching = matching_size(topology, &users, rxs);
            let (_, violation) = spot_check(topology, &users, rxs, matching, trial_seed)?;
            violations.extend(violation);
        }
    }
    Ok(ConditionReport {
        holds,
        spot_checks: 2 * trials,
        violations,
    })
}
