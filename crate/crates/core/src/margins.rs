//! Univariate continuous distributions used as input marginals and as
//! reference spaces for the isoprobabilistic transforms.

use alloc::format;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::special::{norm_cdf, norm_inv_cdf, norm_pdf, EULER_GAMMA, SQRT_2PI};

/// Probability arguments are clamped to this band before inversion so that
/// boundary values coming out of Rosenblatt pipelines never map to infinity.
const P_CLAMP: f64 = 1e-15;

/// A univariate continuous distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Marginal {
    /// Uniform on [0, 1].
    Uniform01,
    StandardNormal,
    Normal { mean: f64, std: f64 },
    /// Gumbel (type I extreme value) with location `alpha` and scale `beta`.
    Gumbel { location: f64, scale: f64 },
    /// Lognormal parameterized by the underlying normal's mean and std.
    Lognormal { mu_log: f64, sigma_log: f64 },
}

impl Marginal {
    pub fn normal(mean: f64, std: f64) -> Result<Self> {
        if !(std > 0.0) || !mean.is_finite() {
            return Err(Error::Domain(format!("normal requires std > 0, got {std}")));
        }
        Ok(Marginal::Normal { mean, std })
    }

    pub fn gumbel(location: f64, scale: f64) -> Result<Self> {
        if !(scale > 0.0) || !location.is_finite() {
            return Err(Error::Domain(format!("Gumbel requires scale > 0, got {scale}")));
        }
        Ok(Marginal::Gumbel { location, scale })
    }

    /// Gumbel distribution with prescribed mean and standard deviation:
    /// `beta = sqrt(6) sigma / pi`, `alpha = mu - gamma beta`.
    pub fn gumbel_from_moments(mean: f64, std: f64) -> Result<Self> {
        if !(std > 0.0) {
            return Err(Error::Domain(format!("Gumbel requires std > 0, got {std}")));
        }
        let scale = 6.0_f64.sqrt() * std / core::f64::consts::PI;
        Self::gumbel(mean - EULER_GAMMA * scale, scale)
    }

    pub fn lognormal(mu_log: f64, sigma_log: f64) -> Result<Self> {
        if !(sigma_log > 0.0) || !mu_log.is_finite() {
            return Err(Error::Domain(format!(
                "lognormal requires sigma_log > 0, got {sigma_log}"
            )));
        }
        Ok(Marginal::Lognormal { mu_log, sigma_log })
    }

    /// Lognormal with prescribed mean and coefficient of variation of the
    /// variable itself.
    pub fn lognormal_from_moments(mean: f64, cov: f64) -> Result<Self> {
        if !(mean > 0.0) || !(cov > 0.0) {
            return Err(Error::Domain(format!(
                "lognormal moments require mean > 0 and cov > 0, got ({mean}, {cov})"
            )));
        }
        let sigma2 = (1.0 + cov * cov).ln();
        Self::lognormal(mean.ln() - 0.5 * sigma2, sigma2.sqrt())
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            Marginal::Uniform01 => "uniform01",
            Marginal::StandardNormal => "standard_normal",
            Marginal::Normal { .. } => "normal",
            Marginal::Gumbel { .. } => "gumbel",
            Marginal::Lognormal { .. } => "lognormal",
        }
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::Domain(format!("cdf argument must be finite, got {x}")));
        }
        match *self {
            Marginal::Uniform01 => {
                if !(0.0..=1.0).contains(&x) {
                    return Err(Error::Domain(format!("uniform01 domain is [0,1], got {x}")));
                }
                Ok(x)
            }
            Marginal::StandardNormal => Ok(norm_cdf(x)),
            Marginal::Normal { mean, std } => Ok(norm_cdf((x - mean) / std)),
            Marginal::Gumbel { location, scale } => {
                Ok((-(-(x - location) / scale).exp()).exp())
            }
            Marginal::Lognormal { mu_log, sigma_log } => {
                if x <= 0.0 {
                    return Err(Error::Domain(format!("lognormal domain is (0,inf), got {x}")));
                }
                Ok(norm_cdf((x.ln() - mu_log) / sigma_log))
            }
        }
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::Domain(format!("pdf argument must be finite, got {x}")));
        }
        match *self {
            Marginal::Uniform01 => {
                if !(0.0..=1.0).contains(&x) {
                    return Err(Error::Domain(format!("uniform01 domain is [0,1], got {x}")));
                }
                Ok(1.0)
            }
            Marginal::StandardNormal => Ok(norm_pdf(x)),
            Marginal::Normal { mean, std } => Ok(norm_pdf((x - mean) / std) / std),
            Marginal::Gumbel { location, scale } => {
                let t = (x - location) / scale;
                Ok((-t - (-t).exp()).exp() / scale)
            }
            Marginal::Lognormal { mu_log, sigma_log } => {
                if x <= 0.0 {
                    return Err(Error::Domain(format!("lognormal domain is (0,inf), got {x}")));
                }
                let t = (x.ln() - mu_log) / sigma_log;
                Ok((-0.5 * t * t).exp() / (x * sigma_log * SQRT_2PI))
            }
        }
    }

    pub fn inv_cdf(&self, p: f64) -> Result<f64> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::Domain(format!("inverse cdf needs p in (0,1), got {p}")));
        }
        let p = p.clamp(P_CLAMP, 1.0 - P_CLAMP);
        Ok(match *self {
            Marginal::Uniform01 => p,
            Marginal::StandardNormal => norm_inv_cdf(p),
            Marginal::Normal { mean, std } => mean + std * norm_inv_cdf(p),
            Marginal::Gumbel { location, scale } => location - scale * (-p.ln()).ln(),
            Marginal::Lognormal { mu_log, sigma_log } => {
                (mu_log + sigma_log * norm_inv_cdf(p)).exp()
            }
        })
    }
}
