//! Scalar fields the linear algebra is generic over.
//!
//! Three fields are provided: exact rationals ([`Rational`]), exact Gaussian
//! rationals ([`GaussianRational`], pairs of rationals), and complex floating
//! point ([`ComplexFloat`]) compared up to a process-wide tolerance.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use num::bigint::BigInt;
use num::complex::Complex64;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};
use num::Complex;
use num::Integer;

use crate::error::Error;

/// Default tolerance used by [`ComplexFloat`] for zero tests and rank decisions.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

static TOLERANCE_BITS: AtomicU64 = AtomicU64::new(0x3E11_2E0B_E826_D695); // 1e-9

/// Current floating-point comparison tolerance.
pub fn float_tolerance() -> f64 {
    f64::from_bits(TOLERANCE_BITS.load(Ordering::Relaxed))
}

/// Sets the floating-point comparison tolerance. Non-positive or non-finite
/// values are rejected.
pub fn set_float_tolerance(tol: f64) -> Result<(), Error> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidTolerance(tol));
    }
    TOLERANCE_BITS.store(tol.to_bits(), Ordering::Relaxed);
    Ok(())
}

/// A field element.
///
/// Exact fields compare structurally; floating fields compare within
/// [`float_tolerance`].
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic is exact and `is_zero` is a structural test.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;

    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        (self.clone() - Self::one()).is_zero()
    }

    /// Complex conjugate (identity on real fields).
    fn conj(&self) -> Self;

    /// Squared modulus as a float.
    fn abs_sq(&self) -> f64;

    fn magnitude(&self) -> f64 {
        self.abs_sq().sqrt()
    }

    /// Nearest complex float.
    fn to_c64(&self) -> Complex64;

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// `Σ aᵢ·bᵢ` over the paired terms.
    fn dot<'a, I>(terms: I) -> Self
    where
        Self: 'a,
        I: Iterator<Item = (&'a Self, &'a Self)>,
    {
        terms.fold(Self::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }
}

/// A field containing a square root of −1.
pub trait ComplexScalar: Scalar {
    fn imag_unit() -> Self;

    /// `iᵏ` for any integer `k`, computed exactly.
    fn i_pow(k: i64) -> Self {
        let i = Self::imag_unit();
        match k.rem_euclid(4) {
            0 => Self::one(),
            1 => i,
            2 => -Self::one(),
            _ => -i,
        }
    }
}

/// `xᵏ` for any integer `k`. Negative powers of zero are reported as `None`.
pub fn powi<S: Scalar>(x: &S, k: i64) -> Option<S> {
    if k < 0 && x.is_zero() {
        return None;
    }
    let mut acc = S::one();
    for _ in 0..k.unsigned_abs() {
        acc = acc * x.clone();
    }
    Some(if k < 0 { acc.inv() } else { acc })
}

// ---------------------------------------------------------------------------
// Rational

/// Exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den.into())))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p`, `p/q`, with optional sign and surrounding whitespace.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidNumber(s.to_string());
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident) => {
        impl $trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $ty(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Rational, Add, add);
forward_binop!(Rational, Sub, sub);
forward_binop!(Rational, Mul, mul);
forward_binop!(Rational, Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn one() -> Self {
        Rational(BigRational::one())
    }
    fn from_i64(n: i64) -> Self {
        n.into()
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn is_one(&self) -> bool {
        self.0.is_one()
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn abs_sq(&self) -> f64 {
        let x = self.to_f64();
        x * x
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }

    // Accumulates over a common denominator and reduces once.
    fn dot<'a, I>(terms: I) -> Self
    where
        I: Iterator<Item = (&'a Self, &'a Self)>,
    {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (a, b) in terms {
            let n = a.0.numer() * b.0.numer();
            let d = a.0.denom() * b.0.denom();
            if d == den {
                num += n;
            } else {
                let g = den.gcd(&d);
                num = num * (&d / &g) + n * (&den / &g);
                den = den / g * d;
            }
        }
        Rational(BigRational::new(num, den))
    }
}

// ---------------------------------------------------------------------------
// Gaussian rationals

/// Exact complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational(pub Complex<BigRational>);

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational(Complex::new(re.0, im.0))
    }

    pub fn re(&self) -> Rational {
        Rational(self.0.re.clone())
    }

    pub fn im(&self) -> Rational {
        Rational(self.0.im.clone())
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational(Complex::new(r.0, BigRational::zero()))
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (self.re(), self.im());
        if im.is_zero() {
            write!(f, "{re}")
        } else if re.is_zero() {
            write!(f, "{im}i")
        } else if im.is_negative() {
            write!(f, "{re}-{}i", im.abs())
        } else {
            write!(f, "{re}+{im}i")
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

forward_binop!(GaussianRational, Add, add);
forward_binop!(GaussianRational, Sub, sub);
forward_binop!(GaussianRational, Mul, mul);
forward_binop!(GaussianRational, Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational(-self.0)
    }
}

impl Scalar for GaussianRational {
    const EXACT: bool = true;

    fn zero() -> Self {
        GaussianRational(Complex::zero())
    }
    fn one() -> Self {
        GaussianRational(Complex::one())
    }
    fn from_i64(n: i64) -> Self {
        Rational::from(n).into()
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::from_ratio(num, den).into()
    }
    fn is_zero(&self) -> bool {
        self.0.re.is_zero() && self.0.im.is_zero()
    }
    fn conj(&self) -> Self {
        GaussianRational(self.0.conj())
    }
    fn abs_sq(&self) -> f64 {
        self.re().abs_sq() + self.im().abs_sq()
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re().to_f64(), self.im().to_f64())
    }
}

impl ComplexScalar for GaussianRational {
    fn imag_unit() -> Self {
        GaussianRational(Complex::i())
    }
}

// ---------------------------------------------------------------------------
// Complex floats

/// Complex double. Equality and zero tests use [`float_tolerance`].
#[derive(Clone, Copy, Default)]
pub struct ComplexFloat(pub Complex64);

impl ComplexFloat {
    pub fn new(re: f64, im: f64) -> Self {
        ComplexFloat(Complex64::new(re, im))
    }

    pub fn re(&self) -> f64 {
        self.0.re
    }

    pub fn im(&self) -> f64 {
        self.0.im
    }
}

impl PartialEq for ComplexFloat {
    fn eq(&self, other: &Self) -> bool {
        (self.0 - other.0).norm() <= float_tolerance()
    }
}

impl fmt::Display for ComplexFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.im == 0.0 {
            write!(f, "{:?}", self.0.re)
        } else {
            write!(f, "{:?}{:+?}i", self.0.re, self.0.im)
        }
    }
}

impl fmt::Debug for ComplexFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

forward_binop!(ComplexFloat, Add, add);
forward_binop!(ComplexFloat, Sub, sub);
forward_binop!(ComplexFloat, Mul, mul);
forward_binop!(ComplexFloat, Div, div);

impl Neg for ComplexFloat {
    type Output = ComplexFloat;
    fn neg(self) -> ComplexFloat {
        ComplexFloat(-self.0)
    }
}

impl Scalar for ComplexFloat {
    const EXACT: bool = false;

    fn zero() -> Self {
        ComplexFloat(Complex64::zero())
    }
    fn one() -> Self {
        ComplexFloat(Complex64::one())
    }
    fn from_i64(n: i64) -> Self {
        ComplexFloat::new(n as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        ComplexFloat::new(num as f64 / den as f64, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.0.norm() <= float_tolerance()
    }
    fn conj(&self) -> Self {
        ComplexFloat(self.0.conj())
    }
    fn abs_sq(&self) -> f64 {
        self.0.norm_sqr()
    }
    fn magnitude(&self) -> f64 {
        self.0.norm()
    }
    fn to_c64(&self) -> Complex64 {
        self.0
    }
}

impl ComplexScalar for ComplexFloat {
    fn imag_unit() -> Self {
        ComplexFloat(Complex64::i())
    }
}
