//! Complex scalars in rectangular and polar form.
//!
//! [`Complex`] is the field every mass, conflict coefficient and fused
//! result lives in. [`Polar`] is the magnitude/phase view of the same
//! number, with the phase kept in the canonical range `(-π, π]`.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// A complex number `re + im·i` with finite components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Complex {
    re: f64,
    im: f64,
}

impl Complex {
    pub const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
    pub const ONE: Complex = Complex { re: 1.0, im: 0.0 };
    pub const I: Complex = Complex { re: 0.0, im: 1.0 };

    /// Builds `re + im·i`.
    ///
    /// Both components must be finite; this is checked in debug builds.
    /// Use [`Complex::try_new`] for untrusted input.
    pub fn new(re: f64, im: f64) -> Self {
        debug_assert!(
            re.is_finite() && im.is_finite(),
            "non-finite complex {re} {im}"
        );
        Complex { re, im }
    }

    pub fn try_new(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(Complex { re, im })
        } else {
            Err(Error::NonFinite(format!("{re}{im:+}i")))
        }
    }

    pub fn real(re: f64) -> Self {
        Complex::new(re, 0.0)
    }

    #[inline]
    pub fn re(self) -> f64 {
        self.re
    }

    #[inline]
    pub fn im(self) -> f64 {
        self.im
    }

    /// Euler's relation: `r·(cos θ + i·sin θ)`.
    pub fn from_polar(p: Polar) -> Self {
        let (sin, cos) = p.phase.sin_cos();
        Complex::new(p.magnitude * cos, p.magnitude * sin)
    }

    /// Magnitude and full-plane phase.
    ///
    /// The phase comes from the two-argument arctangent, so numbers with a
    /// negative real part land in the correct half plane. Zero maps to
    /// `(0, 0)`.
    pub fn to_polar(self) -> Polar {
        let magnitude = self.modulus();
        if magnitude == 0.0 {
            return Polar::ZERO;
        }
        Polar {
            magnitude,
            phase: canonical_phase(self.im.atan2(self.re)),
        }
    }

    pub fn conj(self) -> Self {
        Complex::new(self.re, -self.im)
    }

    pub fn modulus(self) -> f64 {
        self.re.hypot(self.im)
    }

    /// `z·z̄`, which is real.
    pub fn modulus_sq(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    /// Field quotient, or [`Error::DivisionByZero`] when `rhs` is zero.
    pub fn checked_div(self, rhs: Complex) -> Result<Complex> {
        let denom = rhs.modulus_sq();
        if denom == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Complex::new(
            (self.re * rhs.re + self.im * rhs.im) / denom,
            (self.im * rhs.re - self.re * rhs.im) / denom,
        ))
    }

    pub fn scale(self, k: f64) -> Self {
        Complex::new(self.re * k, self.im * k)
    }

    /// Largest componentwise distance to `other`.
    pub fn max_abs_diff(self, other: Complex) -> f64 {
        (self.re - other.re).abs().max((self.im - other.im).abs())
    }

    pub fn is_real(self) -> bool {
        self.im == 0.0
    }
}

impl Add for Complex {
    type Output = Complex;

    fn add(self, rhs: Complex) -> Complex {
        Complex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign for Complex {
    fn add_assign(&mut self, rhs: Complex) {
        *self = *self + rhs;
    }
}

impl Sub for Complex {
    type Output = Complex;

    fn sub(self, rhs: Complex) -> Complex {
        Complex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl SubAssign for Complex {
    fn sub_assign(&mut self, rhs: Complex) {
        *self = *self - rhs;
    }
}

impl Mul for Complex {
    type Output = Complex;

    fn mul(self, rhs: Complex) -> Complex {
        Complex::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + rhs.re * self.im,
        )
    }
}

impl Neg for Complex {
    type Output = Complex;

    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

impl Sum for Complex {
    fn sum<I: Iterator<Item = Complex>>(iter: I) -> Complex {
        iter.fold(Complex::ZERO, Add::add)
    }
}

impl<'a> Sum<&'a Complex> for Complex {
    fn sum<I: Iterator<Item = &'a Complex>>(iter: I) -> Complex {
        iter.copied().sum()
    }
}

impl From<f64> for Complex {
    fn from(re: f64) -> Self {
        Complex::real(re)
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => {
                let re = clean_zero(self.re, p);
                let im = clean_zero(self.im, p);
                let sign = if im.is_sign_negative() { '-' } else { '+' };
                write!(f, "{re:.p$}{sign}{:.p$}i", im.abs())
            }
            None => {
                let sign = if self.im.is_sign_negative() { '-' } else { '+' };
                write!(f, "{}{sign}{}i", self.re, self.im.abs())
            }
        }
    }
}

/// Maps values that round to zero at `precision` decimals onto `+0.0`, so
/// that displays never show `-0.0000`.
fn clean_zero(v: f64, precision: usize) -> f64 {
    let scale = 10f64.powi(precision.min(300) as i32);
    if (v * scale).round() == 0.0 {
        0.0
    } else {
        v
    }
}

/// Magnitude/phase view of a complex number.
///
/// Invariants: `magnitude >= 0`, `phase ∈ (-π, π]`, and a zero magnitude
/// always carries phase 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Polar {
    magnitude: f64,
    phase: f64,
}

impl Polar {
    pub const ZERO: Polar = Polar {
        magnitude: 0.0,
        phase: 0.0,
    };

    /// Validates the magnitude and wraps the phase into `(-π, π]`.
    pub fn new(magnitude: f64, phase: f64) -> Result<Self> {
        if !magnitude.is_finite() || !phase.is_finite() || magnitude < 0.0 {
            return Err(Error::InvalidPolar { magnitude, phase });
        }
        if magnitude == 0.0 {
            return Ok(Polar::ZERO);
        }
        Ok(Polar {
            magnitude,
            phase: canonical_phase(phase),
        })
    }

    #[inline]
    pub fn magnitude(self) -> f64 {
        self.magnitude
    }

    #[inline]
    pub fn phase(self) -> f64 {
        self.phase
    }

    pub fn to_complex(self) -> Complex {
        Complex::from_polar(self)
    }
}

/// Wraps an angle into `(-π, π]`.
pub fn canonical_phase(theta: f64) -> f64 {
    if theta > -PI && theta <= PI {
        return theta;
    }
    let wrapped = theta.rem_euclid(TAU);
    if wrapped > PI {
        wrapped - TAU
    } else {
        wrapped
    }
}
