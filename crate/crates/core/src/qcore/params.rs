use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::C64;

/// The deformation pair `(q, α)` with `0 < q < 1` and `-1 < α < q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QParams {
    q: f64,
    alpha: f64,
}

impl QParams {
    pub fn new(q: f64, alpha: f64) -> Result<Self> {
        if !(q.is_finite() && q > 0.0 && q < 1.0) {
            return Err(Error::InvalidParams(format!(
                "q = {q} must satisfy 0 < q < 1"
            )));
        }
        if !(alpha.is_finite() && alpha > -1.0 && alpha < q) {
            return Err(Error::InvalidParams(format!(
                "alpha = {alpha} must satisfy -1 < alpha < q = {q}"
            )));
        }
        Ok(QParams { q, alpha })
    }

    /// The `α = 0` (Arik-Coon) specialization.
    pub fn arik_coon(q: f64) -> Result<Self> {
        Self::new(q, 0.0)
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `sqrt(1 - q)`, the scale between `z` and the series variable.
    pub fn sqrt_one_minus_q(&self) -> f64 {
        (1.0 - self.q).sqrt()
    }

    /// Radius of the label disk `ℂ_q = { |z|² (1 - q) < 1 }`.
    pub fn disk_radius(&self) -> f64 {
        1.0 / self.sqrt_one_minus_q()
    }

    /// Half-width of the support interval `I_q`.
    pub fn interval_halfwidth(&self) -> f64 {
        2.0 / self.sqrt_one_minus_q()
    }

    /// Principal square root of `α`; imaginary when `α < 0`.
    pub fn sqrt_alpha(&self) -> C64 {
        if self.alpha >= 0.0 {
            C64::new(self.alpha.sqrt(), 0.0)
        } else {
            C64::new(0.0, (-self.alpha).sqrt())
        }
    }

    pub fn in_disk(&self, z: C64) -> bool {
        z.norm_sqr() * (1.0 - self.q) < 1.0
    }

    pub fn in_interval(&self, x: f64) -> bool {
        x.abs() < self.interval_halfwidth()
    }
}

/// Truncation policy shared by every series and infinite product.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesControl {
    pub rel_tol: f64,
    pub max_terms: usize,
    pub consecutive_small: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            rel_tol: 1e-13,
            max_terms: 100_000,
            consecutive_small: 3,
        }
    }
}

impl SeriesControl {
    pub fn new(rel_tol: f64, max_terms: usize, consecutive_small: usize) -> Result<Self> {
        if !(rel_tol.is_finite() && rel_tol > 0.0) || max_terms == 0 || consecutive_small == 0 {
            return Err(Error::InvalidParams(format!(
                "series control needs rel_tol > 0, max_terms >= 1, consecutive_small >= 1 \
                 (got {rel_tol}, {max_terms}, {consecutive_small})"
            )));
        }
        Ok(SeriesControl {
            rel_tol,
            max_terms,
            consecutive_small,
        })
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Self {
        self.max_terms = max_terms;
        self
    }
}
