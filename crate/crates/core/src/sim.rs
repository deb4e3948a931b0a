//! High-SNR rate evaluation for the centralized schemes and log-det slope
//! checks.
//!
//! Rates are log-det expressions in bits per channel use. DoF is estimated
//! as the least-squares slope of rate against `log2(P)` over a finite power
//! grid.

use nalgebra::{Cholesky, DMatrix};
use num_complex::Complex64;

use crate::channel::{gaussian_matrix, stream_rng, CMatrix, ChannelRealization};
use crate::error::{Error, Result};
use crate::rank::{numeric_rank, DEFAULT_REL_TOL};

/// Three decades of transmit power.
pub const DEFAULT_POWER_GRID: [f64; 4] = [1e3, 1e4, 1e5, 1e6];

/// Relative slope tolerance (absolute when the target is zero).
pub const SLOPE_TOLERANCE: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// Transmitter cooperation: messages gathered at one node, which
    /// zero-forces with the inverse super channel.
    ZfCentralized,
    /// Receiver cooperation: K-1 receivers forward quantized observations
    /// to one node, which decodes jointly.
    QuantizeForward,
}

/// `log2 det(A)` for a Hermitian positive definite `A`.
///
/// Falls back to the modulus of the LU determinant when rounding has made
/// `A` lose definiteness.
pub fn log2_det_hpd(a: &CMatrix) -> f64 {
    let herm = (a + a.adjoint()) * Complex64::new(0.5, 0.0);
    match Cholesky::new(herm) {
        Some(chol) => {
            2.0 * chol
                .l_dirty()
                .diagonal()
                .iter()
                .map(|d| d.re.ln())
                .sum::<f64>()
                / std::f64::consts::LN_2
        }
        None => a.clone().lu().determinant().norm().log2(),
    }
}

fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn check_power(p: f64) -> Result<()> {
    if p.is_finite() && p >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "power {p} must be finite and >= 0"
        )))
    }
}

fn invertible_super_matrix(channel: &ChannelRealization) -> Result<CMatrix> {
    let h = channel.super_matrix();
    let expected = h.nrows();
    let rank = numeric_rank(&h, DEFAULT_REL_TOL)?;
    if rank < expected {
        return Err(Error::SingularChannel { rank, expected });
    }
    Ok(h)
}

/// Per-user rates of centralized zero-forcing with unit-distortion
/// quantization of the precoded signal.
///
/// Unit-variance streams `x` are precoded as `u = beta H^-1 x` and each
/// entry of `u` picks up independent unit-variance quantization noise
/// before transmission. A single `beta` keeps every transmitter within
/// power `P`, counting the quantization noise. Receiver `k` then sees
/// `beta x_k` plus noise with covariance `I + (H H^H)_kk`.
pub fn zf_centralized_rates(channel: &ChannelRealization, p: f64) -> Result<Vec<f64>> {
    check_power(p)?;
    let h = invertible_super_matrix(channel)?;
    let k = channel.topology().k();
    let m = channel.topology().m();
    let g = h.clone().try_inverse().ok_or(Error::SingularChannel {
        rank: h.nrows() - 1,
        expected: h.nrows(),
    })?;
    let worst_gain = (0..k)
        .map(|u| g.rows(u * m, m).norm_squared())
        .fold(0.0, f64::max);
    let beta_sq = (p - m as f64).max(0.0) / worst_gain;
    let quant_cov = &h * h.adjoint();
    Ok((0..k)
        .map(|u| {
            let noise = identity(m) + quant_cov.view((u * m, u * m), (m, m));
            log2_det_hpd(&(&noise + identity(m) * real(beta_sq))) - log2_det_hpd(&noise)
        })
        .collect())
}

/// Zero-forcing rates computed block by block. Valid only when the super
/// channel is block diagonal (no cross links).
pub fn zf_rates_decoupled(channel: &ChannelRealization, p: f64) -> Result<Vec<f64>> {
    check_power(p)?;
    let k = channel.topology().k();
    let m = channel.topology().m();
    let inverses = (0..k)
        .map(|u| {
            channel
                .block(u, u)
                .clone()
                .try_inverse()
                .ok_or(Error::SingularChannel {
                    rank: m - 1,
                    expected: m,
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let worst_gain = inverses
        .iter()
        .map(|g| g.norm_squared())
        .fold(0.0, f64::max);
    let beta_sq = (p - m as f64).max(0.0) / worst_gain;
    Ok((0..k)
        .map(|u| {
            let d = channel.block(u, u);
            let noise = identity(m) + d * d.adjoint();
            log2_det_hpd(&(&noise + identity(m) * real(beta_sq))) - log2_det_hpd(&noise)
        })
        .collect())
}

/// Sum rate of the pooled `MK x MK` MIMO system with per-receiver noise
/// variances `noise_var` (one entry per user) and isotropic inputs of
/// total power `P` per transmitter.
fn pooled_sum_rate(h: &CMatrix, m: usize, p: f64, noise_var: &[f64]) -> f64 {
    let scale: Vec<f64> = noise_var
        .iter()
        .flat_map(|&v| std::iter::repeat_n(1.0 / v.sqrt(), m))
        .collect();
    let whitened = CMatrix::from_fn(h.nrows(), h.ncols(), |r, c| h[(r, c)] * scale[r]);
    let gram = &whitened * whitened.adjoint() * real(p / m as f64);
    log2_det_hpd(&(identity(h.nrows()) + gram))
}

/// Per-user rates of joint decoding at receiver 0 after the other K-1
/// receivers forward their observations with additive quantization noise
/// of variance `distortion`. All users get the sum rate divided by K.
pub fn quantize_forward_rates_with_distortion(
    channel: &ChannelRealization,
    p: f64,
    distortion: f64,
) -> Result<Vec<f64>> {
    check_power(p)?;
    if !(distortion.is_finite() && distortion >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "distortion {distortion} must be >= 0"
        )));
    }
    let h = invertible_super_matrix(channel)?;
    let k = channel.topology().k();
    let noise: Vec<f64> = (0..k)
        .map(|u| if u == 0 { 1.0 } else { 1.0 + distortion })
        .collect();
    let sum = pooled_sum_rate(&h, channel.topology().m(), p, &noise);
    Ok(vec![sum / k as f64; k])
}

/// Quantize-and-forward with unit squared-error distortion.
pub fn quantize_forward_rates(channel: &ChannelRealization, p: f64) -> Result<Vec<f64>> {
    quantize_forward_rates_with_distortion(channel, p, 1.0)
}

/// Sum rate when every receiver's observation reaches the decoder
/// unquantized.
pub fn pooled_mimo_sum_rate(channel: &ChannelRealization, p: f64) -> Result<f64> {
    check_power(p)?;
    let h = channel.super_matrix();
    let k = channel.topology().k();
    Ok(pooled_sum_rate(
        &h,
        channel.topology().m(),
        p,
        &vec![1.0; k],
    ))
}

pub fn scheme_rates(scheme: Scheme, channel: &ChannelRealization, p: f64) -> Result<Vec<f64>> {
    match scheme {
        Scheme::ZfCentralized => zf_centralized_rates(channel, p),
        Scheme::QuantizeForward => quantize_forward_rates(channel, p),
    }
}

/// Per-user backhaul load of either centralized scheme: K-1 inbound and
/// K-1 outbound transfers of M DoF each, spread over K users.
pub fn account_backhaul_load(_scheme: Scheme, k: usize, m: usize) -> Result<f64> {
    crate::dof::centralized_load(k, m)
}

/// Least-squares fit of rate against `log2(P)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SlopeEstimate {
    pub slope: f64,
    pub intercept: f64,
    pub power_grid: Vec<f64>,
    pub rates: Vec<f64>,
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.len() < 3 {
        return Err(Error::DegenerateGrid(format!(
            "{} points, need at least 3",
            grid.len()
        )));
    }
    if grid.iter().any(|&p| !(p.is_finite() && p > 0.0)) {
        return Err(Error::DegenerateGrid(
            "powers must be finite and positive".into(),
        ));
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::DegenerateGrid(
            "powers must be strictly increasing".into(),
        ));
    }
    if grid[grid.len() - 1] / grid[0] < 100.0 {
        return Err(Error::DegenerateGrid(
            "grid must span at least two decades".into(),
        ));
    }
    Ok(())
}

/// Fits precomputed `rates` measured on `power_grid`.
pub fn fit_slope(power_grid: &[f64], rates: &[f64]) -> Result<SlopeEstimate> {
    check_grid(power_grid)?;
    if rates.len() != power_grid.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} rates for {} grid points",
            rates.len(),
            power_grid.len()
        )));
    }
    let n = rates.len() as f64;
    let xs: Vec<f64> = power_grid.iter().map(|p| p.log2()).collect();
    let x_mean = xs.iter().sum::<f64>() / n;
    let y_mean = rates.iter().sum::<f64>() / n;
    let sxy: f64 = xs
        .iter()
        .zip(rates)
        .map(|(x, y)| (x - x_mean) * (y - y_mean))
        .sum();
    let sxx: f64 = xs.iter().map(|x| (x - x_mean).powi(2)).sum();
    let slope = sxy / sxx;
    if !slope.is_finite() {
        return Err(Error::DegenerateGrid("non-finite slope".into()));
    }
    Ok(SlopeEstimate {
        slope,
        intercept: y_mean - slope * x_mean,
        power_grid: power_grid.to_vec(),
        rates: rates.to_vec(),
    })
}

/// Evaluates `rate_fn` on the grid and fits its slope.
pub fn fit_dof_slope(
    mut rate_fn: impl FnMut(f64) -> f64,
    power_grid: &[f64],
) -> Result<SlopeEstimate> {
    check_grid(power_grid)?;
    let rates: Vec<f64> = power_grid.iter().map(|&p| rate_fn(p)).collect();
    fit_slope(power_grid, &rates)
}

/// Slope of the per-user average rate of `scheme` on one realization.
pub fn scheme_dof(
    scheme: Scheme,
    channel: &ChannelRealization,
    power_grid: &[f64],
) -> Result<SlopeEstimate> {
    check_grid(power_grid)?;
    let rates = power_grid
        .iter()
        .map(|&p| scheme_rates(scheme, channel, p).map(|r| r.iter().sum::<f64>() / r.len() as f64))
        .collect::<Result<Vec<_>>>()?;
    fit_slope(power_grid, &rates)
}

/// Measured slope against its target.
#[derive(Debug, Clone, PartialEq)]
pub struct SlopeCheck {
    pub passed: bool,
    pub slope: f64,
    pub target: f64,
}

impl SlopeCheck {
    fn judge(slope: f64, target: f64) -> Self {
        let tol = if target == 0.0 {
            SLOPE_TOLERANCE
        } else {
            SLOPE_TOLERANCE * target
        };
        Self {
            passed: (slope - target).abs() <= tol,
            slope,
            target,
        }
    }
}

fn trial_averaged_slope(
    power_grid: &[f64],
    trials: usize,
    seed: u64,
    mut rate_at: impl FnMut(&mut rand_chacha::ChaCha8Rng) -> Box<dyn Fn(f64) -> f64>,
) -> Result<f64> {
    check_grid(power_grid)?;
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let mut mean = vec![0.0; power_grid.len()];
    for trial in 0..trials {
        let mut rng = stream_rng(seed, trial as u64);
        let rate = rate_at(&mut rng);
        for (acc, &p) in mean.iter_mut().zip(power_grid) {
            *acc += rate(p) / trials as f64;
        }
    }
    Ok(fit_slope(power_grid, &mean)?.slope)
}

/// `log2 det(I_N + P sum_i H_i H_i^H)` for Gaussian `N x M_i` blocks should
/// grow with slope `min{N, sum M_i}`.
pub fn check_logdet_sum_slope(
    n: usize,
    m_list: &[usize],
    power_grid: &[f64],
    trials: usize,
    seed: u64,
) -> Result<SlopeCheck> {
    if n == 0 || m_list.is_empty() || m_list.contains(&0) {
        return Err(Error::InvalidParameter(
            "dimensions must be at least 1".into(),
        ));
    }
    let slope = trial_averaged_slope(power_grid, trials, seed, |rng| {
        let gram = m_list.iter().fold(CMatrix::zeros(n, n), |acc, &mi| {
            let h = gaussian_matrix(n, mi, rng);
            acc + &h * h.adjoint()
        });
        Box::new(move |p| log2_det_hpd(&(identity(n) + &gram * real(p))))
    })?;
    let target = n.min(m_list.iter().sum()) as f64;
    Ok(SlopeCheck::judge(slope, target))
}

/// The interference-limited log-det term, evaluated literally:
/// `I + P Hii Hii^H - P^2 Hii Hji^H (I + P Hji Hji^H)^-1 Hji Hii^H`.
pub fn interference_logdet(h_ii: &CMatrix, h_ji: &CMatrix, p: f64) -> f64 {
    let ni = h_ii.nrows();
    let nj = h_ji.nrows();
    let inner = (identity(nj) + h_ji * h_ji.adjoint() * real(p))
        .try_inverse()
        .expect("I + P H H^H is positive definite");
    let a = identity(ni) + h_ii * h_ii.adjoint() * real(p)
        - h_ii * h_ji.adjoint() * inner * h_ji * h_ii.adjoint() * real(p * p);
    log2_det_hpd(&a)
}

/// Slope of [`interference_logdet`] should be `min{Ni, (Mi - Nj)^+}`.
pub fn check_logdet_interference_slope(
    ni: usize,
    mi: usize,
    nj: usize,
    power_grid: &[f64],
    trials: usize,
    seed: u64,
) -> Result<SlopeCheck> {
    if ni == 0 || mi == 0 || nj == 0 {
        return Err(Error::InvalidParameter(
            "dimensions must be at least 1".into(),
        ));
    }
    let slope = trial_averaged_slope(power_grid, trials, seed, |rng| {
        let h_ii: DMatrix<Complex64> = gaussian_matrix(ni, mi, rng);
        let h_ji = gaussian_matrix(nj, mi, rng);
        Box::new(move |p| interference_logdet(&h_ii, &h_ji, p))
    })?;
    let target = ni.min(mi.saturating_sub(nj)) as f64;
    Ok(SlopeCheck::judge(slope, target))
}
