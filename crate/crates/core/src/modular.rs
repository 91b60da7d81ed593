//! Integer matrices of the full modular group and their action on the upper
//! half-plane.

use num_complex::Complex64;

use crate::{Error, Result};

/// A 2×2 integer matrix (a, b; c, d) with determinant 1, kept in normalized
/// form: c > 0, or c = 0 and d > 0. A and −A act identically on the upper
/// half-plane, so the sign ambiguity is resolved at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModularMatrix {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl ModularMatrix {
    /// Builds the matrix, rejecting det ≠ 1 and normalizing the overall sign.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        if det != 1 {
            return Err(Error::BadDeterminant(det));
        }
        let m = ModularMatrix { a, b, c, d };
        Ok(if c < 0 || (c == 0 && d < 0) { m.negated() } else { m })
    }

    fn negated(self) -> Self {
        ModularMatrix {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }

    pub fn a(&self) -> i64 {
        self.a
    }
    pub fn b(&self) -> i64 {
        self.b
    }
    pub fn c(&self) -> i64 {
        self.c
    }
    pub fn d(&self) -> i64 {
        self.d
    }

    /// Matrix product, renormalized.
    pub fn compose(&self, rhs: &ModularMatrix) -> Result<ModularMatrix> {
        let p = |x: i64, y: i64, z: i64, w: i64| -> Result<i64> {
            i64::try_from(x as i128 * y as i128 + z as i128 * w as i128)
                .map_err(|_| Error::Overflow)
        };
        ModularMatrix::new(
            p(self.a, rhs.a, self.b, rhs.c)?,
            p(self.a, rhs.b, self.b, rhs.d)?,
            p(self.c, rhs.a, self.d, rhs.c)?,
            p(self.c, rhs.b, self.d, rhs.d)?,
        )
    }

    /// cτ + d, the denominator of the Möbius action.
    pub fn cz_plus_d(&self, tau: UpperHalfPoint) -> Complex64 {
        self.c as f64 * tau.value() + self.d as f64
    }

    /// The Möbius image (aτ + b)/(cτ + d). The imaginary part scales by
    /// 1/|cτ+d|², so the image stays in the upper half-plane.
    pub fn mobius_apply(&self, tau: UpperHalfPoint) -> UpperHalfPoint {
        let t = tau.value();
        let num = self.a as f64 * t + self.b as f64;
        UpperHalfPoint(num / self.cz_plus_d(tau))
    }

    /// The change of variables H = a, k = c, h = −d, with Hh ≡ −1 (mod k).
    /// Requires c > 0; translations have no such frame.
    pub fn decompose(&self) -> Result<HHkFrame> {
        if self.c <= 0 {
            return Err(Error::RequiresPositiveC);
        }
        let frame = HHkFrame {
            cap_h: self.a,
            h: -self.d,
            k: self.c,
        };
        // ad - bc = 1 forces H·h = -ad = bc - 1 ≡ -1 (mod k).
        debug_assert_eq!(
            (frame.cap_h as i128 * frame.h as i128 + 1).rem_euclid(frame.k as i128),
            0
        );
        Ok(frame)
    }

    /// v = −i(cτ + d); Re(v) = c·Im(τ) > 0 for c > 0.
    pub fn v_of(&self, tau: UpperHalfPoint) -> Complex64 {
        -Complex64::i() * self.cz_plus_d(tau)
    }
}

/// A point τ with Im(τ) > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperHalfPoint(Complex64);

impl UpperHalfPoint {
    pub fn new(tau: Complex64) -> Result<Self> {
        if !(tau.im > 0.0) || !tau.is_finite() {
            return Err(Error::NotUpperHalf);
        }
        Ok(UpperHalfPoint(tau))
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }
}

/// The (H, h, k) frame of the change of variables: H = a, k = c, h = −d,
/// with Hh ≡ −1 (mod k) and gcd(h, k) = gcd(H, k) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HHkFrame {
    pub cap_h: i64,
    pub h: i64,
    pub k: i64,
}

impl HHkFrame {
    /// Reconstructs τ = (iv + h)/k from a value of v = −i(cτ+d).
    pub fn tau_from_v(&self, v: Complex64) -> Complex64 {
        (Complex64::i() * v + self.h as f64) / self.k as f64
    }

    /// Reconstructs Aτ = (H + i/v)/k.
    pub fn image_from_v(&self, v: Complex64) -> Complex64 {
        (self.cap_h as f64 + Complex64::i() / v) / self.k as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn m(a: i64, b: i64, c: i64, d: i64) -> ModularMatrix {
        ModularMatrix::new(a, b, c, d).unwrap()
    }

    fn uh(re: f64, im: f64) -> UpperHalfPoint {
        UpperHalfPoint::new(Complex64::new(re, im)).unwrap()
    }

    #[test]
    fn rejects_bad_determinant() {
        assert!(matches!(
            ModularMatrix::new(1, 0, 0, 2),
            Err(Error::BadDeterminant(2))
        ));
    }

    #[test]
    fn normalization() {
        assert_eq!(m(0, -1, 1, 0), m(0, 1, -1, 0));
        assert_eq!(m(-1, 0, 0, -1), m(1, 0, 0, 1));
        let s = m(0, -1, 1, 0);
        assert_eq!((s.a(), s.b(), s.c(), s.d()), (0, -1, 1, 0));
    }

    #[test]
    fn mobius_examples() {
        let i = uh(0.0, 1.0);
        let s = m(0, -1, 1, 0);
        let im = s.mobius_apply(i).value();
        assert!((im - Complex64::i()).norm() < 1e-15);

        let t = m(1, 1, 0, 1);
        assert!((t.mobius_apply(i).value() - Complex64::new(1.0, 1.0)).norm() < 1e-15);

        let u = m(1, 0, 1, 1);
        assert!((u.mobius_apply(i).value() - Complex64::new(0.5, 0.5)).norm() < 1e-15);
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(
            m(0, -1, 1, 0).decompose().unwrap(),
            HHkFrame { cap_h: 0, h: 0, k: 1 }
        );
        assert_eq!(
            m(1, 0, 1, 1).decompose().unwrap(),
            HHkFrame { cap_h: 1, h: -1, k: 1 }
        );
        let f = m(2, 1, 3, 2).decompose().unwrap();
        assert_eq!(f, HHkFrame { cap_h: 2, h: -2, k: 3 });
        assert_eq!((f.cap_h * f.h + 1).rem_euclid(f.k), 0);
        assert!(m(1, 1, 0, 1).decompose().is_err());
    }

    #[test]
    fn v_of_examples() {
        let i = uh(0.0, 1.0);
        let s = m(0, -1, 1, 0);
        assert!((s.v_of(i) - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        let u = m(1, 0, 1, 1);
        assert!((u.v_of(i) - Complex64::new(1.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn frame_reconstruction_matches_mobius() {
        let a = m(2, 1, 3, 2);
        for &(re, im) in &[(0.3, 0.9), (-1.2, 0.4), (0.0, 2.0)] {
            let tau = uh(re, im);
            let v = a.v_of(tau);
            let f = a.decompose().unwrap();
            assert!((f.tau_from_v(v) - tau.value()).norm() < 1e-12);
            assert!((f.image_from_v(v) - a.mobius_apply(tau).value()).norm() < 1e-12);
        }
    }
}
