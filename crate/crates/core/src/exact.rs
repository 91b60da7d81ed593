//! Exact integer and rational arithmetic: gcd, Jacobi symbols, Bernoulli
//! polynomials, Dedekind sums, and the exact root-of-unity phases carrying
//! the eta multiplier ε(A) and the θ₁ multiplier ε₁(A) = −iε³.

use std::fmt;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{Signed, Zero};

use crate::modular::ModularMatrix;
use crate::{Error, Result};

/// Exact reduced fraction. `num_rational::Ratio` keeps gcd(|num|, den) = 1
/// and den > 0 after every operation.
pub type Rational = Rational64;

/// Nonnegative greatest common divisor; gcd(0, 0) = 0.
pub fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

/// Jacobi symbol (a/n) for positive odd n. Returns 0 iff gcd(a, n) > 1,
/// with (a/1) = 1 for all a.
pub fn jacobi_symbol(a: i64, n: i64) -> Result<i32> {
    if n <= 0 || n % 2 == 0 {
        return Err(Error::BadModulus(n));
    }
    let mut a = a.rem_euclid(n);
    let mut n = n;
    let mut sign = 1i32;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    Ok(if n == 1 { sign } else { 0 })
}

/// B₁(x) = x − 1/2.
pub fn bernoulli_b1(x: f64) -> f64 {
    x - 0.5
}

/// B₂(x) = x² − x + 1/6.
pub fn bernoulli_b2(x: f64) -> f64 {
    x * x - x + 1.0 / 6.0
}

/// Exact B₁ on rationals.
pub fn bernoulli_b1_rational(x: Rational) -> Rational {
    x - Rational::new(1, 2)
}

/// Exact B₂ on rationals.
pub fn bernoulli_b2_rational(x: Rational) -> Rational {
    x * x - x + Rational::new(1, 6)
}

/// B₁ extended to complex arguments.
pub fn bernoulli_b1_complex(z: Complex64) -> Complex64 {
    z - 0.5
}

/// B₂ extended to complex arguments.
pub fn bernoulli_b2_complex(z: Complex64) -> Complex64 {
    z * z - z + 1.0 / 6.0
}

/// Dedekind sum s(h, k) = Σ_{r=1}^{k−1} (r/k)(hr/k − ⌊hr/k⌋ − 1/2), exact.
///
/// Requires k ≥ 1 and gcd(h, k) = 1; h may be negative (the inner reduction
/// uses the true floor). k = 1 gives the empty sum 0, and s(h+k, k) = s(h, k).
pub fn dedekind_sum(h: i64, k: i64) -> Result<Rational> {
    if k <= 0 {
        return Err(Error::NonPositiveK(k));
    }
    if gcd(h, k) != 1 {
        return Err(Error::NotCoprime(h, k));
    }
    // Each term is r(2(hr mod k) − k)/(2k²); sum numerators over the common
    // denominator and reduce once.
    let k128 = k as i128;
    let mut num: i128 = 0;
    for r in 1..k {
        let m = (h as i128 * r as i128).rem_euclid(k128);
        num += r as i128 * (2 * m - k128);
    }
    let den = 2 * k128 * k128;
    let g = num_integer::gcd(num, den);
    let (num, den) = if g == 0 { (0, 1) } else { (num / g, den / g) };
    Ok(Rational::new(
        i64::try_from(num).map_err(|_| Error::Overflow)?,
        i64::try_from(den).map_err(|_| Error::Overflow)?,
    ))
}

/// A rational t in [0, 2) representing the unit complex number e^{iπt}.
/// Multiplying phases adds the exponents modulo 2, exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExactPhase {
    t: Rational,
}

impl ExactPhase {
    /// Reduces t into [0, 2).
    pub fn new(t: Rational) -> Self {
        let two = Rational::from_integer(2);
        let t = t - (t / two).floor() * two;
        debug_assert!(!t.is_negative() && t < two);
        ExactPhase { t }
    }

    /// The phase 1 (t = 0).
    pub fn one() -> Self {
        ExactPhase::new(Rational::zero())
    }

    /// i^m as a phase: t = m/2 mod 2. The exponent may be negative.
    pub fn i_power(m: i64) -> Self {
        ExactPhase::new(Rational::new(m, 2))
    }

    pub fn t(&self) -> Rational {
        self.t
    }

    pub fn pow(&self, e: i64) -> Self {
        ExactPhase::new(self.t * Rational::from_integer(e))
    }

    /// e^{iπt} in double precision.
    pub fn to_complex(&self) -> Complex64 {
        let arg = std::f64::consts::PI * *self.t.numer() as f64 / *self.t.denom() as f64;
        Complex64::new(arg.cos(), arg.sin())
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl std::ops::Mul for ExactPhase {
    type Output = ExactPhase;
    fn mul(self, rhs: ExactPhase) -> ExactPhase {
        ExactPhase::new(self.t + rhs.t)
    }
}

impl fmt::Display for ExactPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e^(i*pi*{})", self.t)
    }
}

/// Eta multiplier ε(A) in the Dedekind-sum form:
/// ε(A) = exp(πi((a+d)/12c + s(−d, c))). Requires c > 0.
pub fn eta_character_dedekind(a: &ModularMatrix) -> Result<ExactPhase> {
    if a.c() <= 0 {
        return Err(Error::RequiresPositiveC);
    }
    let t = Rational::new(a.a() + a.d(), 12 * a.c()) + dedekind_sum(-a.d(), a.c())?;
    Ok(ExactPhase::new(t))
}

fn exp_twelfth(e: i128) -> Rational {
    // e^{(πi/12)e} as a phase exponent: (e mod 24)/12.
    Rational::new(e.rem_euclid(24) as i64, 12)
}

/// Eta multiplier ε(A) assembled from the Jacobi-symbol case formula.
///
/// For odd c: (d/c)·i^{(1−c)/2}·e^{(πi/12)(bd(1−c²)+c(a+d))}.
/// For even c (d odd): (c/|d|)·e^{πid/4}·e^{(πi/12)(ac(1−d²)+d(b−c))}.
/// Requires c > 0 and gcd(c, d) = 1; when both c and d are odd the c-branch
/// is used (the branches agree).
pub fn eta_character_rademacher(m: &ModularMatrix) -> Result<ExactPhase> {
    if m.c() <= 0 {
        return Err(Error::RequiresPositiveC);
    }
    if gcd(m.c(), m.d()) != 1 {
        return Err(Error::NotCoprime(m.c(), m.d()));
    }
    let (a, b, c, d) = (m.a(), m.b(), m.c(), m.d());
    let jacobi_phase = |j: i32| -> Result<Rational> {
        match j {
            1 => Ok(Rational::zero()),
            -1 => Ok(Rational::from_integer(1)),
            _ => Err(Error::NotCoprime(c, d)),
        }
    };
    let t = if c % 2 != 0 {
        let j = jacobi_symbol(d, c)?;
        let e = b as i128 * d as i128 * (1 - c as i128 * c as i128)
            + c as i128 * (a as i128 + d as i128);
        jacobi_phase(j)? + Rational::new(1 - c, 4) + exp_twelfth(e)
    } else {
        let j = jacobi_symbol(c, d.abs())?;
        let e = a as i128 * c as i128 * (1 - d as i128 * d as i128)
            + d as i128 * (b as i128 - c as i128);
        jacobi_phase(j)? + Rational::new(d.rem_euclid(8), 4) + exp_twelfth(e)
    };
    Ok(ExactPhase::new(t))
}

/// θ₁ multiplier ε₁(A) = −iε(A)³, i.e. t = 3t_ε − 1/2 mod 2. Requires c > 0.
pub fn theta1_multiplier(a: &ModularMatrix) -> Result<ExactPhase> {
    let eps = eta_character_dedekind(a)?;
    Ok(ExactPhase::new(
        eps.t() * Rational::from_integer(3) - Rational::new(1, 2),
    ))
}

/// Completes a coprime pair (c, d) with c > 0 to a matrix (a, b; c, d) of
/// determinant 1, choosing the representative with smallest |a|, ties to
/// positive a.
pub fn complete_matrix(c: i64, d: i64) -> Result<ModularMatrix> {
    if c <= 0 {
        return Err(Error::RequiresPositiveC);
    }
    if gcd(c, d) != 1 {
        return Err(Error::NotCoprime(c, d));
    }
    // a ≡ d^{-1} (mod c); the two candidates nearest zero are r and r − c.
    let inv = mod_inverse(d.rem_euclid(c), c);
    let lo = inv - c;
    let a = if inv.abs() < lo.abs() || (inv.abs() == lo.abs() && inv > 0) {
        inv
    } else {
        lo
    };
    let b = i64::try_from((a as i128 * d as i128 - 1) / c as i128).map_err(|_| Error::Overflow)?;
    ModularMatrix::new(a, b, c, d)
}

pub(crate) fn mod_inverse(x: i64, m: i64) -> i64 {
    if m == 1 {
        return 0;
    }
    let e = num_integer::Integer::extended_gcd(&x, &m);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> ModularMatrix {
        ModularMatrix::new(a, b, c, d).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(-4, 6), 2);
        assert_eq!(gcd(0, 0), 0);
    }

    #[test]
    fn jacobi_examples() {
        assert_eq!(jacobi_symbol(2, 3).unwrap(), -1);
        assert_eq!(jacobi_symbol(1, 1).unwrap(), 1);
        assert_eq!(jacobi_symbol(3, 9).unwrap(), 0);
        assert_eq!(jacobi_symbol(0, 1).unwrap(), 1);
        assert_eq!(jacobi_symbol(0, 5).unwrap(), 0);
        assert!(jacobi_symbol(2, 4).is_err());
        assert!(jacobi_symbol(2, -3).is_err());
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli_b1(0.5), 0.0);
        assert_eq!(
            bernoulli_b2_rational(Rational::new(1, 2)),
            Rational::new(-1, 12)
        );
        assert_eq!(
            bernoulli_b2_rational(Rational::new(1, 4)),
            Rational::new(-1, 48)
        );
        assert!((bernoulli_b2(0.25) - (-1.0 / 48.0)).abs() < 1e-15);
    }

    #[test]
    fn dedekind_sum_examples() {
        assert_eq!(dedekind_sum(0, 1).unwrap(), Rational::zero());
        assert_eq!(dedekind_sum(1, 3).unwrap(), Rational::new(1, 18));
        assert_eq!(dedekind_sum(2, 3).unwrap(), Rational::new(-1, 18));
        assert!(dedekind_sum(2, 4).is_err());
        assert!(dedekind_sum(1, 0).is_err());
    }

    #[test]
    fn dedekind_sum_periodic_in_h() {
        for k in 1..40i64 {
            for h in -k..k {
                if gcd(h, k) != 1 {
                    continue;
                }
                assert_eq!(dedekind_sum(h, k).unwrap(), dedekind_sum(h + k, k).unwrap());
            }
        }
    }

    #[test]
    fn phase_reduction_and_product() {
        let p = ExactPhase::new(Rational::new(5, 2));
        assert_eq!(p.t(), Rational::new(1, 2));
        let q = ExactPhase::new(Rational::new(-1, 6));
        assert_eq!(q.t(), Rational::new(11, 6));
        assert_eq!((p * q).t(), ExactPhase::new(Rational::new(7, 3)).t());
        assert_eq!((p * q).t(), Rational::new(1, 3));
        assert_eq!(ExactPhase::i_power(-1).t(), Rational::new(3, 2));
        assert!((ExactPhase::i_power(3).to_complex() - Complex64::new(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn character_examples() {
        let s = m(0, -1, 1, 0);
        assert_eq!(eta_character_dedekind(&s).unwrap().t(), Rational::zero());
        assert_eq!(eta_character_rademacher(&s).unwrap().t(), Rational::zero());

        let u = m(1, 0, 1, 1);
        assert_eq!(eta_character_dedekind(&u).unwrap().t(), Rational::new(1, 6));
        assert_eq!(
            eta_character_rademacher(&u).unwrap().t(),
            Rational::new(1, 6)
        );

        assert_eq!(theta1_multiplier(&s).unwrap().t(), Rational::new(3, 2));
        assert_eq!(theta1_multiplier(&u).unwrap().t(), Rational::zero());
    }

    #[test]
    fn multiplier_is_eighth_root_of_unity() {
        for c in 1..20i64 {
            for d in -c..=c {
                if gcd(c, d) != 1 {
                    continue;
                }
                let a = complete_matrix(c, d).unwrap();
                assert_eq!(theta1_multiplier(&a).unwrap().pow(8).t(), Rational::zero());
                assert_eq!(
                    eta_character_dedekind(&a).unwrap().pow(24).t(),
                    Rational::zero()
                );
            }
        }
    }

    #[test]
    fn character_forms_agree_on_sweep() {
        for c in 1..=50i64 {
            for d in -c..=c {
                if gcd(c, d) != 1 {
                    continue;
                }
                let a = complete_matrix(c, d).unwrap();
                assert_eq!(
                    eta_character_dedekind(&a).unwrap(),
                    eta_character_rademacher(&a).unwrap(),
                    "mismatch at {a:?}"
                );
            }
        }
    }

    #[test]
    fn complete_matrix_picks_smallest_a() {
        let a = complete_matrix(3, 2).unwrap();
        assert_eq!((a.a(), a.c(), a.d()), (-1, 3, 2));
        let s = complete_matrix(1, 0).unwrap();
        assert_eq!((s.a(), s.b(), s.c(), s.d()), (0, -1, 1, 0));
    }

    proptest! {
        #[test]
        fn dedekind_sum_is_odd(h in -200i64..200, k in 1i64..200) {
            prop_assume!(gcd(h, k) == 1);
            prop_assert_eq!(dedekind_sum(-h, k).unwrap(), -dedekind_sum(h, k).unwrap());
        }

        #[test]
        fn jacobi_multiplicative(a in -300i64..300, b in -300i64..300, n in 0i64..150) {
            let n = 2 * n + 1;
            prop_assert_eq!(
                jacobi_symbol(a, n).unwrap() * jacobi_symbol(b, n).unwrap(),
                jacobi_symbol(a * b, n).unwrap()
            );
        }

        #[test]
        fn bernoulli_symmetries(x in -10.0f64..10.0) {
            prop_assert!((bernoulli_b2(x) - bernoulli_b2(1.0 - x)).abs() < 1e-12);
            prop_assert!((bernoulli_b1(x) + bernoulli_b1(1.0 - x)).abs() < 1e-12);
        }

        #[test]
        fn reciprocity_random(h in 1i64..120, k in 1i64..120) {
            prop_assume!(h < k && gcd(h, k) == 1);
            let lhs = dedekind_sum(h, k).unwrap() + dedekind_sum(k, h).unwrap();
            let rhs = Rational::new(-1, 4)
                + (Rational::new(h, k) + Rational::new(k, h) + Rational::new(1, h * k))
                    / Rational::from_integer(12);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
