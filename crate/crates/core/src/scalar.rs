//! Scalar rings for form coefficients.
//!
//! Constant-coefficient algebra is generic over any [`Scalar`]; the Fourier
//! backend additionally needs the imaginary unit, exact division by integers
//! and torus translation phases, collected in [`FourierScalar`]. The two
//! concrete Fourier scalars are [`GaussRational`] (exact) and
//! [`num::complex::Complex64`] (float); both run the same operator code.

use crate::error::{FormError, Result};
use num::complex::Complex64;
use num::rational::Ratio;
use num::traits::{One, Zero};
use num::BigRational;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalar used for polynomial coefficients.
pub type Rational = BigRational;

/// Commutative ring with conjugation, enough for constant-coefficient
/// exterior algebra.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Complex conjugate; the identity on real rings.
    fn conj(&self) -> Self;
}

/// Scalars usable as Fourier coefficients on the torus.
pub trait FourierScalar: Scalar + One {
    /// Whether arithmetic in this ring is exact.
    const EXACT: bool;

    fn from_int(v: i64) -> Self;

    /// Multiplication by the imaginary unit.
    fn mul_i(&self) -> Self;

    /// Division by a nonzero integer; exact when `EXACT`.
    fn div_int(&self, v: i64) -> Self;

    /// Squared modulus as a float, for norms and tolerance checks.
    fn abs_sq(&self) -> f64;

    /// The phase `e^{iπt}`. Exact scalars reject `t ∉ (1/2)ℤ`.
    fn phase_pi(t: Ratio<i64>) -> Result<Self>;

    /// Lossy view into the float scalar ring.
    fn to_complex(&self) -> Complex64;
}

impl Scalar for BigRational {
    fn conj(&self) -> Self {
        self.clone()
    }
}

impl Scalar for Complex64 {
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
}

impl FourierScalar for Complex64 {
    const EXACT: bool = false;

    fn from_int(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }

    fn mul_i(&self) -> Self {
        Complex64::new(-self.im, self.re)
    }

    fn div_int(&self, v: i64) -> Self {
        self / v as f64
    }

    fn abs_sq(&self) -> f64 {
        self.norm_sqr()
    }

    fn phase_pi(t: Ratio<i64>) -> Result<Self> {
        let angle = std::f64::consts::PI * (*t.numer() as f64) / (*t.denom() as f64);
        Ok(Complex64::new(angle.cos(), angle.sin()))
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }
}

/// Exact Gaussian rational `re + im·i` with `re, im ∈ ℚ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussRational {
    re: Rational,
    im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussRational {
            re: Rational::from_integer(re.into()),
            im: Rational::from_integer(im.into()),
        }
    }

    /// `p/q + (r/s)·i` from integer numerators and denominators.
    pub fn from_ratios(re: (i64, i64), im: (i64, i64)) -> Self {
        GaussRational {
            re: Rational::new(re.0.into(), re.1.into()),
            im: Rational::new(im.0.into(), im.1.into()),
        }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRational::from_ints(0, 1)
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else {
            write!(f, "({} + {}i)", self.re, self.im)
        }
    }
}

impl Add for GaussRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussRational { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GaussRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussRational { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GaussRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        GaussRational { re, im }
    }
}

impl Neg for GaussRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussRational { re: -self.re, im: -self.im }
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational { re: Rational::zero(), im: Rational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational { re: Rational::one(), im: Rational::zero() }
    }
}

impl Scalar for GaussRational {
    fn conj(&self) -> Self {
        GaussRational { re: self.re.clone(), im: -self.im.clone() }
    }
}

impl FourierScalar for GaussRational {
    const EXACT: bool = true;

    fn from_int(v: i64) -> Self {
        GaussRational::from_ints(v, 0)
    }

    fn mul_i(&self) -> Self {
        GaussRational { re: -self.im.clone(), im: self.re.clone() }
    }

    fn div_int(&self, v: i64) -> Self {
        let d = Rational::from_integer(v.into());
        GaussRational { re: &self.re / &d, im: &self.im / &d }
    }

    fn abs_sq(&self) -> f64 {
        let sq = &self.re * &self.re + &self.im * &self.im;
        rational_to_f64(&sq)
    }

    fn phase_pi(t: Ratio<i64>) -> Result<Self> {
        // e^{iπt} is Gaussian rational exactly when t is a half integer.
        let doubled = t * 2;
        if !doubled.is_integer() {
            return Err(FormError::TranslationNotExact);
        }
        match doubled.to_integer().rem_euclid(4) {
            0 => Ok(GaussRational::one()),
            1 => Ok(GaussRational::i()),
            2 => Ok(-GaussRational::one()),
            _ => Ok(-GaussRational::i()),
        }
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

/// Nearest-float view of an arbitrary-precision rational.
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
