//! Floating-point evaluation of η, θ₁ (product and sine-series routes), the
//! four-variable log-series Λ with its Bernoulli correction g₀, truncated
//! Fourier sums, and the principal square-root automorphy factor.
//!
//! Every series has explicit convergence control: evaluation stops at the
//! first index where the geometric term bound falls below `tail_eps`, and
//! fails loudly at `max_terms` instead of returning a silently truncated
//! value.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::exact::{bernoulli_b1, bernoulli_b1_complex, bernoulli_b2, bernoulli_b2_complex};
use crate::modular::{ModularMatrix, UpperHalfPoint};
use crate::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Truncation control for all series in this module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    pub tail_eps: f64,
    pub max_terms: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            tail_eps: 1e-18,
            max_terms: 10_000,
        }
    }
}

impl SeriesConfig {
    pub fn new(tail_eps: f64, max_terms: usize) -> Result<Self> {
        if !(tail_eps > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "tail_eps must be positive, got {tail_eps}"
            )));
        }
        if max_terms == 0 {
            return Err(Error::InvalidParameter("max_terms must be positive".into()));
        }
        Ok(SeriesConfig {
            tail_eps,
            max_terms,
        })
    }

    fn max_terms_exceeded(&self) -> Error {
        Error::MaxTermsExceeded {
            tail_eps: self.tail_eps,
            max_terms: self.max_terms,
        }
    }
}

/// Parameters (α, β, w, θ) of the Λ log-series.
///
/// Re(w) > 0 is structural (it drives the geometric decay of every term).
/// θ is carried as a complex number: the swapped parameter set maps θ to
/// −iθ/w, which is complex even for real θ. The stricter real-θ hypotheses
/// are exposed by [`LambdaParams::in_functional_equation_domain`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaParams {
    pub alpha: f64,
    pub beta: f64,
    pub w: Complex64,
    pub theta: Complex64,
}

impl LambdaParams {
    pub fn new(alpha: f64, beta: f64, w: Complex64, theta: Complex64) -> Result<Self> {
        if !(w.re > 0.0) || !w.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "Re(w) must be positive, got w = {w}"
            )));
        }
        if !alpha.is_finite() || !beta.is_finite() || !theta.is_finite() {
            return Err(Error::InvalidParameter("parameters must be finite".into()));
        }
        Ok(LambdaParams {
            alpha,
            beta,
            w,
            theta,
        })
    }

    /// The hypotheses 0 < α < 1, θ real, 0 < β + θ < 1 (with Re(w) > 0
    /// already enforced at construction).
    pub fn in_functional_equation_domain(&self) -> bool {
        self.theta.im == 0.0
            && self.alpha > 0.0
            && self.alpha < 1.0
            && self.beta + self.theta.re > 0.0
            && self.beta + self.theta.re < 1.0
    }

    /// The swapped parameter set (1−β, α, 1/w, −iθ/w).
    pub fn swapped(&self) -> Result<LambdaParams> {
        LambdaParams::new(
            1.0 - self.beta,
            self.alpha,
            self.w.inv(),
            -I * self.theta / self.w,
        )
    }
}

/// η(τ) = e^{πiτ/12} ∏_{n≥1} (1 − e^{2πinτ}).
pub fn eta(tau: UpperHalfPoint, cfg: &SeriesConfig) -> Result<Complex64> {
    eta_with_terms(tau, cfg).map(|(v, _)| v)
}

pub fn eta_with_terms(tau: UpperHalfPoint, cfg: &SeriesConfig) -> Result<(Complex64, usize)> {
    let t = tau.value();
    let q2 = (I * 2.0 * PI * t).exp();
    let mut prod = Complex64::new(1.0, 0.0);
    let mut qn = Complex64::new(1.0, 0.0);
    for n in 1..=cfg.max_terms {
        qn *= q2;
        prod *= 1.0 - qn;
        if qn.norm() < cfg.tail_eps {
            return Ok(((I * PI * t / 12.0).exp() * prod, n));
        }
    }
    Err(cfg.max_terms_exceeded())
}

/// θ₁(z, τ) by the triple product
/// −i w q^{1/4} ∏_{n≥1} (1 − q^{2n})(1 − w²q^{2n})(1 − w^{−2}q^{2n−2}),
/// with w = e^{πiz} and q = e^{πiτ}. The n = 1 factor (1 − w^{−2}) is
/// included exactly as written, so z = 0 gives an exact zero.
pub fn theta1_product(z: Complex64, tau: UpperHalfPoint, cfg: &SeriesConfig) -> Result<Complex64> {
    theta1_product_with_terms(z, tau, cfg).map(|(v, _)| v)
}

pub fn theta1_product_with_terms(
    z: Complex64,
    tau: UpperHalfPoint,
    cfg: &SeriesConfig,
) -> Result<(Complex64, usize)> {
    let t = tau.value();
    let q = (I * PI * t).exp();
    let q2 = q * q;
    let w = (I * PI * z).exp();
    let w2 = w * w;
    let w2_inv = w2.inv();

    let mut acc = -I * w * (I * PI * t / 4.0).exp();
    let mut p_prev = Complex64::new(1.0, 0.0); // q^{2(n-1)}
    let scale = 1.0 + w2.norm() + w2_inv.norm();
    for n in 1..=cfg.max_terms {
        let p = p_prev * q2; // q^{2n}
        acc *= (1.0 - p) * (1.0 - w2 * p) * (1.0 - w2_inv * p_prev);
        if p.norm() * scale < cfg.tail_eps {
            return Ok((acc, n));
        }
        p_prev = p;
    }
    Err(cfg.max_terms_exceeded())
}

/// θ₁(z, τ) by the classical sine series
/// 2 Σ_{n≥0} (−1)ⁿ q^{(n+1/2)²} sin((2n+1)πz); the independent oracle for
/// [`theta1_product`].
pub fn theta1_series(z: Complex64, tau: UpperHalfPoint, cfg: &SeriesConfig) -> Result<Complex64> {
    theta1_series_with_terms(z, tau, cfg).map(|(v, _)| v)
}

pub fn theta1_series_with_terms(
    z: Complex64,
    tau: UpperHalfPoint,
    cfg: &SeriesConfig,
) -> Result<(Complex64, usize)> {
    let t = tau.value();
    let q2 = (I * 2.0 * PI * t).exp();
    let im_z = z.im.abs();
    let mut qpow = (I * PI * t / 4.0).exp(); // q^{(n+1/2)²} at n = 0
    let mut inc = q2; // ratio q^{2n+2}
    let mut sign = 1.0;
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..cfg.max_terms {
        let n_f = n as f64;
        sum += 2.0 * sign * qpow * (PI * (2.0 * n_f + 1.0) * z).sin();
        // |sin((2n+1)πz)| ≤ e^{(2n+1)π|Im z|}; the bound only decreases once
        // the quadratic q-exponent dominates the sine growth.
        let log_bound = qpow.norm().ln() + (2.0 * n_f + 1.0) * PI * im_z;
        let decreasing = (n_f + 1.0) * tau.im() > im_z;
        if decreasing && log_bound < cfg.tail_eps.ln() {
            return Ok((sum, n + 1));
        }
        qpow *= inc;
        inc *= q2;
        sign = -sign;
    }
    Err(cfg.max_terms_exceeded())
}

/// Λ(α, β, w, θ) = −Σ_{n≥0} [ log(1 − e^{2πiθ}e^{−2π((n+α)w − iβ)})
///                           + log(1 − e^{−2πiθ}e^{−2π((n+1−α)w + iβ)}) ]
/// with principal logs; the leading minus applies to both log terms.
///
/// Rejects parameter sets where an n = 0 log argument has modulus above
/// 1 − 1e−6 (near the boundary of the convergence domain).
pub fn lambda_series(p: &LambdaParams, cfg: &SeriesConfig) -> Result<Complex64> {
    lambda_series_with_terms(p, cfg).map(|(v, _)| v)
}

pub fn lambda_series_with_terms(
    p: &LambdaParams,
    cfg: &SeriesConfig,
) -> Result<(Complex64, usize)> {
    const GUARD: f64 = 1.0 - 1e-6;
    let two_pi = 2.0 * PI;
    let decay = (-two_pi * p.w).exp();
    let mut x1 = (I * two_pi * p.theta).exp() * (-two_pi * (p.alpha * p.w - I * p.beta)).exp();
    let mut x2 =
        (-I * two_pi * p.theta).exp() * (-two_pi * ((1.0 - p.alpha) * p.w + I * p.beta)).exp();
    if x1.norm() > GUARD || x2.norm() > GUARD {
        return Err(Error::GuardViolation(format!(
            "n = 0 log argument too close to the unit circle: |x1| = {}, |x2| = {}",
            x1.norm(),
            x2.norm()
        )));
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..cfg.max_terms {
        sum -= (1.0 - x1).ln() + (1.0 - x2).ln();
        x1 *= decay;
        x2 *= decay;
        if x1.norm() < cfg.tail_eps && x2.norm() < cfg.tail_eps {
            return Ok((sum, n + 1));
        }
    }
    Err(cfg.max_terms_exceeded())
}

/// g₀(α, β, w, θ) = (π/w)B₂(β+θ) − πw·B₂(α) + 2πi·B₁(α)B₁(β+θ).
pub fn g0(p: &LambdaParams) -> Complex64 {
    let bt = p.beta + p.theta;
    PI / p.w * bernoulli_b2_complex(bt) - PI * p.w * bernoulli_b2(p.alpha)
        + 2.0 * PI * I * bernoulli_b1(p.alpha) * bernoulli_b1_complex(bt)
}

/// Symmetric partial Fourier sum Σ_{0 < |m| ≤ M} e^{2πimx}/mⁿ for n ∈ {1, 2}.
///
/// The ±m pairs combine to 2i·sin(2πmx)/m (n = 1) and 2cos(2πmx)/m² (n = 2),
/// so the n = 1 sum is purely imaginary and the n = 2 sum purely real.
pub fn fourier_f_partial(n: u32, x: f64, m_max: usize) -> Result<Complex64> {
    if !(n == 1 || n == 2) {
        return Err(Error::InvalidParameter(format!("n must be 1 or 2, got {n}")));
    }
    if m_max == 0 {
        return Err(Error::InvalidParameter("M must be positive".into()));
    }
    let step = Complex64::from_polar(1.0, 2.0 * PI * x);
    let mut p = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for m in 1..=m_max {
        p *= step;
        if n == 1 {
            sum += Complex64::new(0.0, 2.0 * p.im / m as f64);
        } else {
            sum += Complex64::new(2.0 * p.re / (m as f64 * m as f64), 0.0);
        }
    }
    Ok(sum)
}

/// Principal square root of −i(cτ+d); the radicand has real part
/// c·Im(τ) > 0, so the result has positive real part. Requires c > 0.
pub fn principal_sqrt_factor(a: &ModularMatrix, tau: UpperHalfPoint) -> Result<Complex64> {
    if a.c() <= 0 {
        return Err(Error::RequiresPositiveC);
    }
    Ok(a.v_of(tau).sqrt())
}

/// θ₁(z, τ+b) computed through the translation phase e^{πib/4}·θ₁(z, τ).
pub fn theta1_translate(
    z: Complex64,
    tau: UpperHalfPoint,
    b: i64,
    cfg: &SeriesConfig,
) -> Result<Complex64> {
    let phase = crate::exact::ExactPhase::new(crate::Rational::new(b, 4));
    Ok(phase.to_complex() * theta1_product(z, tau, cfg)?)
}

/// η(τ+b) computed through the translation phase e^{πib/12}·η(τ).
pub fn eta_translate(tau: UpperHalfPoint, b: i64, cfg: &SeriesConfig) -> Result<Complex64> {
    let phase = crate::exact::ExactPhase::new(crate::Rational::new(b, 12));
    Ok(phase.to_complex() * eta(tau, cfg)?)
}
