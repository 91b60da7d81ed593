//! Per-identity checks. Each function evaluates both sides of one identity
//! and folds the comparison into a [`VerificationReport`]; guard rejections
//! become skipped (never failed) reports.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::exact::{
    complete_matrix, dedekind_sum, eta_character_dedekind, eta_character_rademacher, gcd,
    theta1_multiplier, ExactPhase,
};
use crate::modular::{ModularMatrix, UpperHalfPoint};
use crate::qseries::{
    eta_translate, eta_with_terms, fourier_f_partial, g0, lambda_series_with_terms,
    principal_sqrt_factor, theta1_product_with_terms, LambdaParams, SeriesConfig,
};
use crate::verify::report::{render_complex, render_rational, VerificationReport};
use crate::{Error, Rational};

const I: Complex64 = Complex64::new(0.0, 1.0);

pub(crate) const ISEKI_TOL: f64 = 1e-9;
pub(crate) const THETA1_TOL: f64 = 1e-9;
pub(crate) const ETA_TOL: f64 = 1e-10;
pub(crate) const QUASIPERIOD_TOL: f64 = 1e-9;
pub(crate) const EQ29_TOL: f64 = 1e-9;
/// Magnitude of |θ₁(z, τ)| below which transformation-law samples are skipped rather
/// than rescaled (lattice-zero proximity).
pub(crate) const ZERO_GUARD: f64 = 1e-8;
/// Exponent bound beyond which e^x is not representable in f64.
const EXP_RANGE: f64 = 700.0;

fn relative_residual(lhs: Complex64, rhs: Complex64) -> f64 {
    (lhs - rhs).norm() / (1.0 + lhs.norm())
}

fn matrix_inputs(a: &ModularMatrix) -> BTreeMap<String, String> {
    BTreeMap::from([
        ("a".into(), a.a().to_string()),
        ("b".into(), a.b().to_string()),
        ("c".into(), a.c().to_string()),
        ("d".into(), a.d().to_string()),
    ])
}

/// Functional equation: Λ(α,β,w,θ) = Λ(1−β,α,w⁻¹,−iθ/w) + g₀(α,β,w,θ).
///
/// Real-θ samples report as `iseki`, complex-θ samples (the analytic
/// continuation family) as `iseki_complex_theta`.
pub fn check_iseki(p: &LambdaParams, cfg: &SeriesConfig) -> VerificationReport {
    let check_id = if p.theta.im == 0.0 {
        "iseki"
    } else {
        "iseki_complex_theta"
    };
    let inputs = BTreeMap::from([
        ("alpha".into(), p.alpha.to_string()),
        ("beta".into(), p.beta.to_string()),
        ("w".into(), render_complex(p.w)),
        ("theta".into(), render_complex(p.theta)),
    ]);
    let swapped = match p.swapped() {
        Ok(s) => s,
        Err(e) => return VerificationReport::failure(check_id, inputs, &e.to_string()),
    };
    let (lam, t1) = match lambda_series_with_terms(p, cfg) {
        Ok(v) => v,
        Err(Error::GuardViolation(g)) => return VerificationReport::skip(check_id, inputs, &g),
        Err(e) => return VerificationReport::failure(check_id, inputs, &e.to_string()),
    };
    let (lam_swapped, t2) = match lambda_series_with_terms(&swapped, cfg) {
        Ok(v) => v,
        Err(Error::GuardViolation(g)) => return VerificationReport::skip(check_id, inputs, &g),
        Err(e) => return VerificationReport::failure(check_id, inputs, &e.to_string()),
    };
    let rhs = lam_swapped + g0(p);
    VerificationReport::numeric(
        check_id,
        inputs,
        lam,
        rhs,
        relative_residual(lam, rhs),
        ISEKI_TOL,
        (t1 + t2) as u64,
    )
}

/// Transformation law: θ₁(z/(cτ+d), Aτ) = ε₁(A)(−i(cτ+d))^{1/2} e^{πicz²/(cτ+d)} θ₁(z,τ),
/// checked in multiplicative form.
pub fn check_theta1_transform(
    a: &ModularMatrix,
    z: Complex64,
    tau: UpperHalfPoint,
    cfg: &SeriesConfig,
) -> VerificationReport {
    let check_id = "theta1_transform";
    let mut inputs = matrix_inputs(a);
    inputs.insert("z".into(), render_complex(z));
    inputs.insert("tau".into(), render_complex(tau.value()));
    if a.c() <= 0 {
        return VerificationReport::failure(check_id, inputs, "requires c > 0");
    }
    let (theta_here, t1) = match theta1_product_with_terms(z, tau, cfg) {
        Ok(v) => v,
        Err(e) => return VerificationReport::failure(check_id, inputs, &e.to_string()),
    };
    if theta_here.norm() <= ZERO_GUARD {
        return VerificationReport::skip(check_id, inputs, "theta1(z, tau) too close to a lattice zero");
    }
    let czd = a.cz_plus_d(tau);
    let (lhs, t2) = match theta1_product_with_terms(z / czd, a.mobius_apply(tau), cfg) {
        Ok(v) => v,
        Err(e) => return VerificationReport::failure(check_id, inputs, &e.to_string()),
    };
    let eps1 = match theta1_multiplier(a) {
        Ok(p) => p,
        Err(e) => return VerificationReport::failure(check_id, inputs, &e.to_string()),
    };
    let sqrt_factor = match principal_sqrt_factor(a, tau) {
        Ok(s) => s,
        Err(e) => return VerificationReport::failure(check_id, inputs, &e.to_string()),
    };
    let rhs = eps1.to_complex() * sqrt_factor * (I * PI * a.c() as f64 * z * z / czd).exp() * theta_here;
    VerificationReport::numeric(
        check_id,
        inputs,
        lhs,
        rhs,
        relative_residual(lhs, rhs),
        THETA1_TOL,
        (t1 + t2) as u64,
    )
}

/// η(Aτ) = ε(A)(−i(cτ+d))^{1/2} η(τ); for c = 0 the translation phase
/// e^{πib/12} is checked against direct evaluation instead.
pub fn check_eta_transform(
    a: &ModularMatrix,
    tau: UpperHalfPoint,
    cfg: &SeriesConfig,
) -> VerificationReport {
    let check_id = "eta_transform";
    let mut inputs = matrix_inputs(a);
    inputs.insert("tau".into(), render_complex(tau.value()));
    let run = || -> crate::Result<(Complex64, Complex64, usize)> {
        if a.c() == 0 {
            let shifted = UpperHalfPoint::new(tau.value() + a.b() as f64)?;
            let (lhs, t) = eta_with_terms(shifted, cfg)?;
            let rhs = eta_translate(tau, a.b(), cfg)?;
            Ok((lhs, rhs, t))
        } else {
            let (lhs, t1) = eta_with_terms(a.mobius_apply(tau), cfg)?;
            let (e, t2) = eta_with_terms(tau, cfg)?;
            let eps = eta_character_dedekind(a)?;
            let rhs = eps.to_complex() * principal_sqrt_factor(a, tau)? * e;
            Ok((lhs, rhs, t1 + t2))
        }
    };
    match run() {
        Ok((lhs, rhs, terms)) => VerificationReport::numeric(
            check_id,
            inputs,
            lhs,
            rhs,
            relative_residual(lhs, rhs),
            ETA_TOL,
            terms as u64,
        ),
        Err(e) => VerificationReport::failure(check_id, inputs, &e.to_string()),
    }
}

/// Quasi-periodicity: θ₁(u+mτ, τ) = (−1)^m e^{−πi(2mu+m²τ)} θ₁(u, τ).
pub fn check_quasiperiod(
    u: Complex64,
    tau: UpperHalfPoint,
    m: i64,
    cfg: &SeriesConfig,
) -> VerificationReport {
    let check_id = "quasiperiod";
    let inputs = BTreeMap::from([
        ("u".into(), render_complex(u)),
        ("tau".into(), render_complex(tau.value())),
        ("m".into(), m.to_string()),
    ]);
    if m.abs() > 8 {
        return VerificationReport::failure(check_id, inputs, "|m| must be at most 8");
    }
    let s = 2.0 * m as f64 * u + (m * m) as f64 * tau.value();
    if (PI * s.im).abs() > EXP_RANGE {
        return VerificationReport::skip(check_id, inputs, "e^{-pi i(2mu+m^2 tau)} outside f64 range");
    }
    let run = || -> crate::Result<(Complex64, Complex64, usize)> {
        let (lhs, t1) = theta1_product_with_terms(u + m as f64 * tau.value(), tau, cfg)?;
        let (th, t2) = theta1_product_with_terms(u, tau, cfg)?;
        let sign = if m.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let rhs = sign * (-I * PI * s).exp() * th;
        Ok((lhs, rhs, t1 + t2))
    };
    match run() {
        Ok((lhs, rhs, terms)) => VerificationReport::numeric(
            check_id,
            inputs,
            lhs,
            rhs,
            relative_residual(lhs, rhs),
            QUASIPERIOD_TOL,
            terms as u64,
        ),
        Err(e) => VerificationReport::failure(check_id, inputs, &e.to_string()),
    }
}

/// Endpoint identity: θ₁(1/c, τ) = e^{4πic²τ} θ₁(2cτ + 1/c, τ), plus exact
/// consistency with the u = 1/c, m = 2c quasi-period factor.
pub fn check_eq29(c: i64, tau: UpperHalfPoint, cfg: &SeriesConfig) -> VerificationReport {
    let check_id = "eq29";
    let inputs = BTreeMap::from([
        ("c".into(), c.to_string()),
        ("tau".into(), render_complex(tau.value())),
    ]);
    if !(1..=8).contains(&c) {
        return VerificationReport::failure(check_id, inputs, "c must be in 1..=8");
    }
    let exponent = 4.0 * PI * (c * c) as f64 * tau.value();
    if exponent.im.abs() > EXP_RANGE {
        return VerificationReport::skip(check_id, inputs, "e^{4 pi i c^2 tau} outside f64 range");
    }
    let run = || -> crate::Result<(Complex64, Complex64, f64, usize)> {
        let u = Complex64::new(1.0 / c as f64, 0.0);
        let (lhs, t1) = theta1_product_with_terms(u, tau, cfg)?;
        let factor = (I * exponent).exp();
        let (shifted, t2) = theta1_product_with_terms(u + 2.0 * c as f64 * tau.value(), tau, cfg)?;
        let rhs = factor * shifted;
        // Same identity through the m = 2c quasi-period factor:
        // (−1)^{2c} e^{−πi(2(2c)(1/c) + (2c)²τ)} must equal 1/factor.
        let qp_factor = (-I * PI * (4.0 + 4.0 * (c * c) as f64 * tau.value())).exp();
        let consistency = (qp_factor * factor - 1.0).norm();
        Ok((lhs, rhs, consistency, t1 + t2))
    };
    match run() {
        Ok((lhs, rhs, consistency, terms)) => {
            let residual = relative_residual(lhs, rhs).max(consistency);
            VerificationReport::numeric(check_id, inputs, lhs, rhs, residual, EQ29_TOL, terms as u64)
        }
        Err(e) => VerificationReport::failure(check_id, inputs, &e.to_string()),
    }
}

/// Partial-fraction identity:
/// e^{2πmαw}/(1−e^{2πmw}) + 1/(2πwm) = (1/2πi) Σ_{|n|≤M} e^{2πiαn}/(wmi+n),
/// compared at a finite symmetric M with O(1/M) tolerance. Requires m < 0 so
/// the closed side is finite for Re(w) > 0.
pub fn check_partial_fraction(
    m: i64,
    alpha: f64,
    w: Complex64,
    m_max: usize,
) -> VerificationReport {
    let check_id = "partial_fraction";
    let inputs = BTreeMap::from([
        ("m".into(), m.to_string()),
        ("alpha".into(), alpha.to_string()),
        ("w".into(), render_complex(w)),
        ("M".into(), m_max.to_string()),
    ]);
    if m >= 0 || !(alpha > 0.0 && alpha < 1.0) || !(w.re > 0.0) {
        return VerificationReport::failure(check_id, inputs, "requires m < 0, 0 < alpha < 1, Re(w) > 0");
    }
    let mf = m as f64;
    let closed = (2.0 * PI * mf * alpha * w).exp() / (1.0 - (2.0 * PI * mf * w).exp())
        + 1.0 / (2.0 * PI * w * mf);
    // The n-sum runs over n ≠ 0: the 1/(2πwm) term on the closed side is
    // exactly the transported n = 0 pole, (1/2πi)·1/(wmi) = −1/(2πwm).
    let wmi = w * mf * I;
    let mut sum = Complex64::new(0.0, 0.0);
    let step = Complex64::from_polar(1.0, 2.0 * PI * alpha);
    let mut p = Complex64::new(1.0, 0.0);
    for n in 1..=m_max {
        p *= step;
        let nf = n as f64;
        sum += p / (wmi + nf) + p.conj() / (wmi - nf);
    }
    let partial = sum / (2.0 * PI * I);
    let tolerance = 100.0 / m_max as f64;
    VerificationReport::numeric(
        check_id,
        inputs,
        closed,
        partial,
        (closed - partial).norm(),
        tolerance,
        m_max as u64,
    )
}

/// F₁(x) = −2πi·B₁(x) and F₂(x) = 2π²·B₂(x), compared against symmetric
/// partial sums with their O(1/M) tolerances.
pub fn check_f_identities(x: f64, m_max: usize) -> Vec<VerificationReport> {
    let inputs = BTreeMap::from([
        ("x".into(), x.to_string()),
        ("M".into(), m_max.to_string()),
    ]);
    if !(x > 0.0 && x < 1.0) || m_max == 0 {
        return vec![VerificationReport::failure(
            "fourier_f1",
            inputs,
            "requires 0 < x < 1 and M > 0",
        )];
    }
    let f1 = fourier_f_partial(1, x, m_max).expect("n = 1 is valid");
    let f1_closed = -2.0 * PI * I * crate::exact::bernoulli_b1(x);
    let f1_tol = 10.0 / (m_max as f64 * (PI * x).sin());
    let f2 = fourier_f_partial(2, x, m_max).expect("n = 2 is valid");
    let f2_closed = Complex64::new(2.0 * PI * PI * crate::exact::bernoulli_b2(x), 0.0);
    let f2_tol = 2.5 / m_max as f64;
    vec![
        VerificationReport::numeric(
            "fourier_f1",
            inputs.clone(),
            f1_closed,
            f1,
            (f1 - f1_closed).norm(),
            f1_tol,
            m_max as u64,
        ),
        VerificationReport::numeric(
            "fourier_f2",
            inputs,
            f2_closed,
            f2,
            (f2 - f2_closed).norm(),
            f2_tol,
            m_max as u64,
        ),
    ]
}

/// Exact equality of the two ε(A) closed forms on the Bézout completion of
/// (c, d), together with ε²⁴ = 1, s(−d, c) = −s(d, c), agreement of the
/// −s(d, c) spelling, and stability under the a → a + c recompletion.
pub fn check_character_consistency(c: i64, d: i64) -> VerificationReport {
    let check_id = "character_consistency";
    let inputs = BTreeMap::from([("c".into(), c.to_string()), ("d".into(), d.to_string())]);
    let run = || -> crate::Result<(ExactPhase, ExactPhase, bool)> {
        let a = complete_matrix(c, d)?;
        let lhs = eta_character_dedekind(&a)?;
        let rhs = eta_character_rademacher(&a)?;
        let mut ok = lhs == rhs;
        ok &= lhs.pow(24) == ExactPhase::one();
        ok &= dedekind_sum(-d, c)? == -dedekind_sum(d, c)?;
        // the introduction's −s(d,c) spelling agrees by oddness
        let intro = ExactPhase::new(Rational::new(a.a() + d, 12 * c) - dedekind_sum(d, c)?);
        ok &= intro == lhs;
        // recompletion with a+c shifts both forms by the same e^{πi/12}
        let shifted = ModularMatrix::new(a.a() + c, a.b() + d, c, d)?;
        ok &= eta_character_dedekind(&shifted)? == eta_character_rademacher(&shifted)?;
        Ok((lhs, rhs, ok))
    };
    match run() {
        Ok((lhs, rhs, ok)) => VerificationReport::exact(
            check_id,
            inputs,
            lhs.to_string(),
            rhs.to_string(),
            ok,
        ),
        Err(e) => VerificationReport::failure(check_id, inputs, &e.to_string()),
    }
}

/// Exact sawtooth facts for coprime (h, k): Σ(μ/k − 1/2) = 0, μ ↦ hμ mod k
/// permutes {1,…,k−1}, and Σ(μ/k)((hμ mod k)/k − 1/2) = s(h, k).
pub fn check_sawtooth_sums(k: i64, h: i64) -> VerificationReport {
    let check_id = "sawtooth";
    let inputs = BTreeMap::from([("k".into(), k.to_string()), ("h".into(), h.to_string())]);
    let run = || -> crate::Result<(String, String, bool)> {
        if k <= 0 {
            return Err(Error::NonPositiveK(k));
        }
        if gcd(h, k) != 1 {
            return Err(Error::NotCoprime(h, k));
        }
        let mut sawtooth_mu = Rational::from_integer(0);
        let mut sawtooth_phi = Rational::from_integer(0);
        let mut fourier_form = Rational::from_integer(0);
        let mut seen = vec![false; k as usize];
        for mu in 1..k {
            let phi = (h as i128 * mu as i128).rem_euclid(k as i128) as i64;
            seen[phi as usize] = true;
            sawtooth_mu += Rational::new(mu, k) - Rational::new(1, 2);
            sawtooth_phi += Rational::new(phi, k) - Rational::new(1, 2);
            fourier_form += Rational::new(mu, k) * (Rational::new(phi, k) - Rational::new(1, 2));
        }
        let permutes = (1..k).all(|r| seen[r as usize]);
        let s = dedekind_sum(h, k)?;
        let ok = sawtooth_mu == Rational::from_integer(0)
            && sawtooth_phi == Rational::from_integer(0)
            && permutes
            && fourier_form == s;
        Ok((render_rational(fourier_form), render_rational(s), ok))
    };
    match run() {
        Ok((lhs, rhs, ok)) => VerificationReport::exact(check_id, inputs, lhs, rhs, ok),
        Err(e) => VerificationReport::failure(check_id, inputs, &e.to_string()),
    }
}

/// Dedekind reciprocity (exact, external oracle):
/// s(h,k) + s(k,h) = −1/4 + (h/k + k/h + 1/(hk))/12.
pub fn check_reciprocity(h: i64, k: i64) -> VerificationReport {
    let check_id = "reciprocity";
    let inputs = BTreeMap::from([("h".into(), h.to_string()), ("k".into(), k.to_string())]);
    let run = || -> crate::Result<(Rational, Rational)> {
        if h <= 0 || k <= 0 {
            return Err(Error::NonPositiveK(h.min(k)));
        }
        let lhs = dedekind_sum(h, k)? + dedekind_sum(k, h)?;
        let rhs = Rational::new(-1, 4)
            + (Rational::new(h, k) + Rational::new(k, h) + Rational::new(1, h * k))
                / Rational::from_integer(12);
        Ok((lhs, rhs))
    };
    match run() {
        Ok((lhs, rhs)) => VerificationReport::exact(
            check_id,
            inputs,
            render_rational(lhs),
            render_rational(rhs),
            lhs == rhs,
        ),
        Err(e) => VerificationReport::failure(check_id, inputs, &e.to_string()),
    }
}
