//! Problem parameters `(n, s, p, q, α, β)`, critical exponents and the
//! existence / non-existence / boundedness regime classification.

use core::fmt;
use serde::{Deserialize, Serialize};

/// Which constant normalizes the Gagliardo double integral.
///
/// `Bbm` scales so the seminorm recovers the gradient energy as `s -> 1`;
/// `Dominated` scales so the seminorm is dominated by the gradient energy
/// for every field vanishing outside the ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    Bbm,
    Dominated,
}

/// The parameter tuple of the mixed local-nonlocal Hénon problem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProblemSpec {
    /// Spatial dimension, `n >= 2`.
    pub n: u32,
    /// Fractional order, `0 < s < 1`.
    pub s: f64,
    /// Integrability exponent, `p > 1`.
    pub p: f64,
    /// Nonlinearity exponent, `q > p`.
    pub q: f64,
    /// Hénon weight exponent, `α >= 0`.
    pub alpha: f64,
    /// Mixing parameter, `0 <= β <= 1`. Treated as pure nonlocal only when
    /// bit-for-bit equal to one; the exponent formulas jump there.
    pub beta: f64,
    pub normalization: Normalization,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ProblemError {
    /// A basic parameter bound is violated.
    Domain(&'static str),
    /// The dimensional restriction `n > sp` (β = 1) or `n > p` (β < 1) fails.
    DimensionRestriction { n: u32, required: f64 },
}

impl fmt::Display for ProblemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProblemError::Domain(msg) => write!(f, "invalid problem parameters: {msg}"),
            ProblemError::DimensionRestriction { n, required } => write!(
                f,
                "dimension restriction violated: need n > {required}, got n = {n}"
            ),
        }
    }
}

/// Existence side of the critical threshold `q = p*_{β,α}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    Existence,
    Nonexistence,
    Critical,
}

/// Exponent thresholds and regime classification for one parameter tuple.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegimeReport {
    /// Critical Sobolev exponent `p*_β`.
    pub p_star_beta: f64,
    /// Hénon-shifted critical exponent `p*_{β,α}`.
    pub p_star_beta_alpha: f64,
    pub regime: Regime,
    /// Minimal `α` guaranteeing bounded solutions,
    /// `max{0, (q-1)(n/p - 1) - p}` for β < 1 and
    /// `max{0, (q-1)(n/p - s) - sp}` for β = 1.
    pub alpha_boundedness_threshold: f64,
    /// Upper bound on `s` under which solutions are bounded for every α > 0
    /// in the pure nonlocal case: `(n/p) (q-1)/(p+q-1)`.
    pub s_boundedness_bound: f64,
    /// Exponent bound of the compact embedding into the weighted Lebesgue
    /// space; `None` when the embedding is compact for every finite exponent.
    pub embedding_r_bound: Option<f64>,
}

impl ProblemSpec {
    pub fn new(
        n: u32,
        s: f64,
        p: f64,
        q: f64,
        alpha: f64,
        beta: f64,
        normalization: Normalization,
    ) -> Result<Self, ProblemError> {
        let spec = ProblemSpec {
            n,
            s,
            p,
            q,
            alpha,
            beta,
            normalization,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), ProblemError> {
        if self.n < 2 {
            return Err(ProblemError::Domain("n must be >= 2"));
        }
        if !(self.s > 0.0 && self.s < 1.0) {
            return Err(ProblemError::Domain("s must lie in (0,1)"));
        }
        if !(self.p > 1.0) {
            return Err(ProblemError::Domain("p must be > 1"));
        }
        if !(self.q > self.p) {
            return Err(ProblemError::Domain("q must be > p"));
        }
        if !(self.alpha >= 0.0) {
            return Err(ProblemError::Domain("alpha must be >= 0"));
        }
        if !(0.0..=1.0).contains(&self.beta) {
            return Err(ProblemError::Domain("beta must lie in [0,1]"));
        }
        let required = if self.pure_nonlocal() {
            self.s * self.p
        } else {
            self.p
        };
        if (self.n as f64) <= required {
            return Err(ProblemError::DimensionRestriction {
                n: self.n,
                required,
            });
        }
        Ok(())
    }

    /// Bit-exact check for β = 1; no epsilon collapsing.
    #[inline]
    pub fn pure_nonlocal(&self) -> bool {
        self.beta == 1.0
    }

    /// `n + sp`, the full kernel exponent of the Gagliardo integrand.
    #[inline]
    pub fn kernel_exponent(&self) -> f64 {
        self.n as f64 + self.s * self.p
    }
}

/// Critical Sobolev exponent `p*_β`: `np/(n-p)` for β < 1, `np/(n-sp)` at β = 1.
pub fn critical_exponent(spec: &ProblemSpec) -> Result<f64, ProblemError> {
    spec.validate()?;
    let n = spec.n as f64;
    Ok(if spec.pure_nonlocal() {
        n * spec.p / (n - spec.s * spec.p)
    } else {
        n * spec.p / (n - spec.p)
    })
}

/// Hénon-shifted threshold `p*_{β,α}`: `(np + αp)/(n-p)` for β < 1,
/// `(np + αp)/(n-sp)` at β = 1.
pub fn henon_critical_exponent(spec: &ProblemSpec) -> Result<f64, ProblemError> {
    spec.validate()?;
    let n = spec.n as f64;
    let num = (n + spec.alpha) * spec.p;
    Ok(if spec.pure_nonlocal() {
        num / (n - spec.s * spec.p)
    } else {
        num / (n - spec.p)
    })
}

/// Fills the full regime report for one parameter tuple.
pub fn classify_regime(spec: &ProblemSpec) -> Result<RegimeReport, ProblemError> {
    spec.validate()?;
    let n = spec.n as f64;
    let (p, q, s, alpha) = (spec.p, spec.q, spec.s, spec.alpha);
    let p_star_beta = critical_exponent(spec)?;
    let p_star_beta_alpha = henon_critical_exponent(spec)?;
    let regime = if q < p_star_beta_alpha {
        Regime::Existence
    } else if q > p_star_beta_alpha {
        Regime::Nonexistence
    } else {
        Regime::Critical
    };
    let alpha_boundedness_threshold = if spec.pure_nonlocal() {
        ((q - 1.0) * (n / p - s) - s * p).max(0.0)
    } else {
        ((q - 1.0) * (n / p - 1.0) - p).max(0.0)
    };
    let s_boundedness_bound = (n / p) * (q - 1.0) / (p + q - 1.0);
    let embedding_r_bound = if spec.pure_nonlocal() {
        (alpha < (n - s * p) / p).then(|| n * p / (n - s * p - alpha * p))
    } else {
        (alpha < (n - p) / p).then(|| n * p / (n - p - alpha * p))
    };
    Ok(RegimeReport {
        p_star_beta,
        p_star_beta_alpha,
        regime,
        alpha_boundedness_threshold,
        s_boundedness_bound,
        embedding_r_bound,
    })
}
