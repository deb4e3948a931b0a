//! Per-user DoF versus backhaul load: closed-form trade-off curves, the
//! two-user region, and the converse obtained by splitting the users into
//! two groups and averaging the resulting two-user bounds.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::model::{BackhaulGraph, TwoUserConfig};

/// Largest K accepted by [`converse_enumerate`].
pub const CONVERSE_LIMIT: usize = 14;

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "alpha {alpha} must be finite and >= 0"
        )))
    }
}

/// The time-sharing curve between the interference-alignment point
/// `(0, M/2)` and the centralized point `(2M(K-1)/K, M)`.
fn centralized_time_sharing(k: usize, m: f64, alpha: f64) -> f64 {
    let k = k as f64;
    m.min(0.5 * (m + k * alpha / (2.0 * (k - 1.0))))
}

/// Exact per-user trade-off for even K.
pub fn tradeoff_even(k: usize, m: usize, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if k < 2 {
        return Err(Error::InvalidParameter("K must be at least 2".into()));
    }
    if k % 2 == 1 {
        return Err(Error::OddK(k));
    }
    Ok(centralized_time_sharing(k, m as f64, alpha))
}

/// Lower and upper bounds on the per-user trade-off for odd K >= 3.
pub fn tradeoff_odd(k: usize, m: usize, alpha: f64) -> Result<(f64, f64)> {
    check_alpha(alpha)?;
    if k < 3 {
        return Err(Error::InvalidParameter("odd K must be at least 3".into()));
    }
    if k.is_multiple_of(2) {
        return Err(Error::EvenK(k));
    }
    let m = m as f64;
    let kf = k as f64;
    let lower = centralized_time_sharing(k, m, alpha);
    let upper = m.min((kf + 1.0) / (2.0 * kf) * (m + alpha / 2.0));
    Ok((lower, upper))
}

/// `(lower, upper)` for any K >= 2; the two coincide for even K.
pub fn tradeoff_bounds(k: usize, m: usize, alpha: f64) -> Result<(f64, f64)> {
    if k.is_multiple_of(2) {
        tradeoff_even(k, m, alpha).map(|d| (d, d))
    } else {
        tradeoff_odd(k, m, alpha)
    }
}

/// Large-K limit `min{M, M/2 + alpha/4}`.
pub fn tradeoff_asymptotic(m: usize, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let m = m as f64;
    Ok(m.min(m / 2.0 + alpha / 4.0))
}

/// Smallest load compatible with full DoF under the odd-K upper bound:
/// `2M(K-1)/(K+1)`.
pub fn alpha_min_converse(k: usize, m: usize) -> Result<f64> {
    if k < 2 {
        return Err(Error::InvalidParameter("K must be at least 2".into()));
    }
    let k = k as f64;
    Ok(2.0 * m as f64 * (k - 1.0) / (k + 1.0))
}

/// Per-user load of the centralized schemes, `2M(K-1)/K`.
pub fn centralized_load(k: usize, m: usize) -> Result<f64> {
    if k < 2 {
        return Err(Error::InvalidParameter("K must be at least 2".into()));
    }
    let k = k as f64;
    Ok(2.0 * m as f64 * (k - 1.0) / k)
}

/// Sampled `(alpha, lower, upper)` points on `[0, alpha_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TradeoffCurve {
    pub points: Vec<TradeoffPoint>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TradeoffPoint {
    pub alpha: f64,
    pub dof_lower: f64,
    pub dof_upper: f64,
}

impl TradeoffCurve {
    /// `steps` evenly spaced loads from 0 to `alpha_max` inclusive.
    pub fn sample(k: usize, m: usize, alpha_max: f64, steps: usize) -> Result<Self> {
        check_alpha(alpha_max)?;
        if steps < 2 {
            return Err(Error::InvalidParameter("steps must be at least 2".into()));
        }
        if alpha_max == 0.0 {
            return Err(Error::InvalidParameter("alpha_max must be positive".into()));
        }
        let points = (0..steps)
            .map(|i| {
                let alpha = alpha_max * i as f64 / (steps - 1) as f64;
                tradeoff_bounds(k, m, alpha).map(|(dof_lower, dof_upper)| TradeoffPoint {
                    alpha,
                    dof_lower,
                    dof_upper,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { points })
    }
}

/// The two sum-DoF bounds of a two-user channel with backhaul links.
pub fn two_user_region_bounds(cfg: &TwoUserConfig) -> (f64, f64) {
    let pos = |a: usize, b: usize| a.saturating_sub(b);
    let bound1 = cfg.n1.min(pos(cfg.m1, cfg.n2)) + cfg.n2.min(cfg.m1 + cfg.m2);
    let bound2 = cfg.n2.min(pos(cfg.m2, cfg.n1)) + cfg.n1.min(cfg.m1 + cfg.m2);
    (bound1 as f64 + cfg.c_b12, bound2 as f64 + cfg.c_b21)
}

/// Per-user trade-off of a two-user channel with `N_i = M_i`:
/// `min{M1 + M2, alpha + max(M1, M2)} / 2`.
pub fn two_user_tradeoff(m1: usize, m2: usize, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    let total = (m1 + m2) as f64;
    Ok(0.5 * total.min(alpha + m1.max(m2) as f64))
}

/// Total capacity of links leaving the first group (or entering it when
/// `from_first` is false).
fn aggregate_capacity(backhaul: &BackhaulGraph, in_first: &[bool], from_first: bool) -> f64 {
    backhaul
        .links()
        .filter(|&(from, to, _)| in_first[from] == from_first && in_first[to] != from_first)
        .map(|(_, _, c)| c)
        .sum()
}

/// Average of the two sum-DoF bounds obtained by merging the users of
/// `group` into one super-user and the rest into the other.
pub fn partition_bound(
    k: usize,
    m: usize,
    backhaul: &BackhaulGraph,
    group: &[usize],
) -> Result<f64> {
    if backhaul.k() != k {
        return Err(Error::ShapeMismatch(format!(
            "backhaul graph has K = {}, expected {k}",
            backhaul.k()
        )));
    }
    let mut in_first = vec![false; k];
    for &u in group {
        if u >= k {
            return Err(Error::IndexOutOfRange { index: u, k });
        }
        in_first[u] = true;
    }
    let k1 = in_first.iter().filter(|&&b| b).count();
    if k1 == 0 || k1 == k {
        return Err(Error::EmptyPartition);
    }
    let k2 = k - k1;
    let m = m as f64;
    let c12 = aggregate_capacity(backhaul, &in_first, true);
    let c21 = aggregate_capacity(backhaul, &in_first, false);
    let first = m * k1.saturating_sub(k2) as f64 + m * k2 as f64 + c12;
    let second = m * k2.saturating_sub(k1) as f64 + m * k1 as f64 + c21;
    Ok(0.5 * (first + second))
}

/// Per-user converse: the partition bound averaged over every split with
/// `floor(K/2)` users in the first group, divided by K and capped at M.
pub fn converse_enumerate(k: usize, m: usize, backhaul: &BackhaulGraph) -> Result<f64> {
    if k < 2 {
        return Err(Error::InvalidParameter("K must be at least 2".into()));
    }
    if k > CONVERSE_LIMIT {
        return Err(Error::LimitExceeded {
            k,
            limit: CONVERSE_LIMIT,
        });
    }
    let mut sum = 0.0;
    let mut count = 0usize;
    for group in (0..k).combinations(k / 2) {
        sum += partition_bound(k, m, backhaul, &group)?;
        count += 1;
    }
    Ok((sum / count as f64 / k as f64).min(m as f64))
}
