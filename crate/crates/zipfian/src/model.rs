//! Closed-form predictions of the latent-variable occurrence model.
//!
//! The model is driven entirely by three observables of a text: its length
//! `N`, vocabulary size `n`, and fitted prefactor `c`. It assigns the word of
//! rank `r` the effective probability
//!
//! ```text
//! φ_r = c/r − c/n
//! ```
//!
//! under which the occurrence count of that word is binomial. From the same
//! three parameters follow the rank steps `r̂_k = 1/(k/(Nc) + 1/n)` (the rank
//! where occurrence counts jump past `k`), the predicted occupancy
//! `V̂_m = Nc / ((m−1+Nc/n)·(m+Nc/n))`, and the predicted rare-word count
//! `ĥ = V̂_1 + V̂_2 + V̂_3`. These formulas telescope: `Σ_{m≤M} V̂_m + r̂_M = n`.

use serde::{Deserialize, Serialize};
use statrs::function::gamma::ln_gamma;

use crate::error::{Error, Result};

/// The `≫` conditions of the model regime, operationalized as fixed
/// thresholds: `n³/N ≥ 10`, `N/n ≥ 2`, `n ≥ 100`.
pub const REGIME_MIN_CUBE_RATIO: f64 = 10.0;
pub const REGIME_MIN_TOKEN_RATIO: f64 = 2.0;
pub const REGIME_MIN_DISTINCT: u64 = 100;

/// The three observables driving every model formula.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    token_count: u64,
    distinct_count: u64,
    prefactor: f64,
}

impl ModelParams {
    pub fn new(token_count: u64, distinct_count: u64, prefactor: f64) -> Result<Self> {
        if token_count == 0 {
            return Err(Error::InvalidParameter("token count must be positive"));
        }
        if distinct_count == 0 {
            return Err(Error::InvalidParameter("distinct count must be positive"));
        }
        if !prefactor.is_finite() || prefactor <= 0.0 {
            return Err(Error::InvalidParameter("prefactor must be positive and finite"));
        }
        Ok(Self {
            token_count,
            distinct_count,
            prefactor,
        })
    }

    pub fn token_count(&self) -> u64 {
        self.token_count
    }

    pub fn distinct_count(&self) -> u64 {
        self.distinct_count
    }

    pub fn prefactor(&self) -> f64 {
        self.prefactor
    }

    fn nc(&self) -> f64 {
        self.token_count as f64 * self.prefactor
    }
}

/// Effective occurrence probability `φ_r = c/r − c/n` of the rank-`r` word.
/// Strictly decreasing in `r`, exactly zero at `r = n`.
pub fn phi_r(params: &ModelParams, rank: usize) -> Result<f64> {
    let n = params.distinct_count as usize;
    if rank < 1 || rank > n {
        return Err(Error::RankOutOfDomain {
            rank,
            distinct: n,
        });
    }
    let c = params.prefactor;
    Ok(c / rank as f64 - c / n as f64)
}

/// Probability that the rank-`r` word occurs exactly `nu` times: the
/// binomial pmf at success probability `φ_r`, evaluated in log space so that
/// text lengths of 10⁵ and beyond stay finite.
pub fn occurrence_pmf(params: &ModelParams, rank: usize, nu: u64) -> Result<f64> {
    let n_tokens = params.token_count;
    if nu > n_tokens {
        return Err(Error::InvalidParameter(
            "occurrence count exceeds text length",
        ));
    }
    let phi = phi_r(params, rank)?;
    if phi == 0.0 {
        return Ok(if nu == 0 { 1.0 } else { 0.0 });
    }
    let n = n_tokens as f64;
    let k = nu as f64;
    let ln_choose = ln_gamma(n + 1.0) - ln_gamma(k + 1.0) - ln_gamma(n - k + 1.0);
    let ln_pmf = ln_choose + k * phi.ln() + (n - k) * (-phi).ln_1p();
    Ok(ln_pmf.exp())
}

/// Rank `r̂_k = 1/(k/(Nc) + 1/n)` at which occurrence counts step from `k`
/// to `k + 1`. Exact at `k = 0` where it equals `n`; strictly decreasing
/// in `k` and vanishing as `k → ∞`.
pub fn rank_steps(params: &ModelParams, k: u64) -> f64 {
    if k == 0 {
        return params.distinct_count as f64;
    }
    1.0 / (k as f64 / params.nc() + 1.0 / params.distinct_count as f64)
}

/// Predicted number of words occurring exactly `m ≥ 1` times:
/// `V̂_m = Nc / ((m−1+Nc/n)·(m+Nc/n))`. For `m ≫ Nc/n` this approaches
/// `Nc/m²`.
pub fn predicted_occupancy(params: &ModelParams, m: u64) -> f64 {
    assert!(m >= 1, "occupancy is defined for m >= 1");
    let nc = params.nc();
    let a = nc / params.distinct_count as f64;
    let m = m as f64;
    nc / ((m - 1.0 + a) * (m + a))
}

/// Predicted rare-word count `ĥ = V̂_1 + V̂_2 + V̂_3` (words occurring at
/// most three times).
pub fn predicted_hapax(params: &ModelParams) -> f64 {
    (1..=3).map(|m| predicted_occupancy(params, m)).sum()
}

/// One fitted half of a text: its model parameters plus the lower end of the
/// validity range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfFit {
    pub params: ModelParams,
    pub r_min: usize,
}

/// Asymmetry diagnostics between the halves of a text.
///
/// `delta = 10⁶·(c₂/n₂ − c₁/n₁)` is predicted positive: the first half draws
/// on a wider prior of word probabilities. `delta_tilde =
/// 10³·(c₁/r_min,1 − c₂/r_min,2)` is predicted positive: the law reaches up
/// to larger frequencies in the first half.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfAsymmetry {
    pub delta: f64,
    pub delta_tilde: f64,
    pub delta_positive: bool,
    pub delta_tilde_positive: bool,
}

/// Compute both asymmetry diagnostics from the two fitted halves.
pub fn half_asymmetry(first: &HalfFit, second: &HalfFit) -> HalfAsymmetry {
    let c1 = first.params.prefactor();
    let c2 = second.params.prefactor();
    let n1 = first.params.distinct_count() as f64;
    let n2 = second.params.distinct_count() as f64;
    let delta = 1e6 * (c2 / n2 - c1 / n1);
    let delta_tilde = 1e3 * (c1 / first.r_min as f64 - c2 / second.r_min as f64);
    HalfAsymmetry {
        delta,
        delta_tilde,
        delta_positive: delta > 0.0,
        delta_tilde_positive: delta_tilde > 0.0,
    }
}

/// Outcome of checking the regime `n³ ≫ N ≫ n ≫ 1` at the thresholds
/// [`REGIME_MIN_CUBE_RATIO`], [`REGIME_MIN_TOKEN_RATIO`],
/// [`REGIME_MIN_DISTINCT`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeCheck {
    /// `n³ / N`.
    pub cube_ratio: f64,
    /// `N / n`.
    pub token_ratio: f64,
    pub distinct_count: u64,
    pub passes: bool,
}

/// Check whether the parameters sit inside the model's validity regime.
pub fn regime_check(params: &ModelParams) -> RegimeCheck {
    regime_for(params.token_count, params.distinct_count)
}

/// Regime check from the raw counts; the prefactor plays no role in it.
pub fn regime_for(token_count: u64, distinct_count: u64) -> RegimeCheck {
    let n = distinct_count as f64;
    let big_n = token_count as f64;
    let cube_ratio = n * n * n / big_n;
    let token_ratio = big_n / n;
    RegimeCheck {
        cube_ratio,
        token_ratio,
        distinct_count,
        passes: cube_ratio >= REGIME_MIN_CUBE_RATIO
            && token_ratio >= REGIME_MIN_TOKEN_RATIO
            && distinct_count >= REGIME_MIN_DISTINCT,
    }
}
