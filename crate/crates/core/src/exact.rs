//! Scalar substrate: exact rationals, Pochhammer combinatorics, Stirling
//! tables and a checked double-precision complex type.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_nonpositive_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_positive()
}

/// Rising factorial `(a)_j = a (a+1) ... (a+j-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, j: usize) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..j {
        if factor.is_zero() {
            return Rational::zero();
        }
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// `[alpha]_n`: product of `(alpha_k)_n` over the vector.
pub fn pochhammer_product(alphas: &[Rational], n: usize) -> Rational {
    alphas
        .iter()
        .map(|a| pochhammer(a, n))
        .fold(Rational::one(), |acc, p| acc * p)
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn pow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

/// Signed Stirling numbers of the first kind, `s(n, k)` for `n, k <= max`.
/// `x(x-1)...(x-n+1) = sum_k s(n, k) x^k`.
pub fn stirling1_table(max: usize) -> Vec<Vec<BigInt>> {
    let mut table = vec![vec![BigInt::zero(); max + 1]; max + 1];
    table[0][0] = BigInt::one();
    for n in 1..=max {
        for k in 1..=n {
            table[n][k] = &table[n - 1][k - 1] - BigInt::from(n - 1) * &table[n - 1][k];
        }
    }
    table
}

/// Stirling numbers of the second kind, `S(n, k)` for `n, k <= max`.
/// `x^n = sum_k S(n, k) x(x-1)...(x-k+1)`.
pub fn stirling2_table(max: usize) -> Vec<Vec<BigInt>> {
    let mut table = vec![vec![BigInt::zero(); max + 1]; max + 1];
    table[0][0] = BigInt::one();
    for n in 1..=max {
        for k in 1..=n {
            table[n][k] = &table[n - 1][k - 1] + BigInt::from(k) * &table[n - 1][k];
        }
    }
    table
}

/// Parses `"p/q"` or `"p"`; `field` names the document field for error messages.
pub fn parse_rational(input: &str, field: &str) -> Result<Rational> {
    let err = || Error::ParseRational {
        field: field.to_string(),
        input: input.to_string(),
    };
    let s = input.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form: integers print bare, everything else as `p/q`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Double-precision complex number with finite components.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct ComplexF(Complex64);

impl ComplexF {
    pub const ZERO: ComplexF = ComplexF(Complex64::new(0.0, 0.0));
    pub const ONE: ComplexF = ComplexF(Complex64::new(1.0, 0.0));

    pub fn new(re: f64, im: f64) -> Result<Self> {
        if re.is_finite() && im.is_finite() {
            Ok(ComplexF(Complex64::new(re, im)))
        } else {
            Err(Error::NonFinite { re, im })
        }
    }

    pub fn real(re: f64) -> Result<Self> {
        Self::new(re, 0.0)
    }

    pub fn from_rational(r: &Rational) -> Self {
        ComplexF(Complex64::new(to_f64(r), 0.0))
    }

    /// `exp(i * theta)`.
    pub fn cis(theta: f64) -> Self {
        ComplexF(Complex64::from_polar(1.0, theta))
    }

    pub fn re(self) -> f64 {
        self.0.re
    }

    pub fn im(self) -> f64 {
        self.0.im
    }

    pub fn abs(self) -> f64 {
        self.0.norm()
    }

    pub fn powi(self, n: i32) -> Self {
        ComplexF(self.0.powi(n))
    }

    pub fn is_finite(self) -> bool {
        self.0.re.is_finite() && self.0.im.is_finite()
    }

    pub fn inner(self) -> Complex64 {
        self.0
    }
}

impl fmt::Display for ComplexF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.16e}{:+.16e}i", self.0.re, self.0.im)
    }
}

macro_rules! complex_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for ComplexF {
            type Output = ComplexF;
            fn $method(self, rhs: ComplexF) -> ComplexF {
                ComplexF(self.0 $op rhs.0)
            }
        }
    };
}

complex_binop!(Add, add, +);
complex_binop!(Sub, sub, -);
complex_binop!(Mul, mul, *);
complex_binop!(Div, div, /);

impl Neg for ComplexF {
    type Output = ComplexF;
    fn neg(self) -> ComplexF {
        ComplexF(-self.0)
    }
}

impl Mul<f64> for ComplexF {
    type Output = ComplexF;
    fn mul(self, rhs: f64) -> ComplexF {
        ComplexF(self.0 * rhs)
    }
}

/// Scalars usable as coefficients of truncated power series.
pub trait Scalar:
    Clone
    + fmt::Debug
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(r: &Rational) -> Self;
    fn from_usize(n: usize) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }
    /// Magnitude used by approximate comparisons; exact scalars report 0 for equal values.
    fn distance(&self, other: &Self) -> f64;
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn distance(&self, other: &Self) -> f64 {
        to_f64(&(self - other).abs())
    }
}

impl Zero for ComplexF {
    fn zero() -> Self {
        ComplexF::ZERO
    }
    fn is_zero(&self) -> bool {
        self.0.re == 0.0 && self.0.im == 0.0
    }
}

impl One for ComplexF {
    fn one() -> Self {
        ComplexF::ONE
    }
}

impl Scalar for ComplexF {
    fn from_rational(r: &Rational) -> Self {
        ComplexF::from_rational(r)
    }
    fn distance(&self, other: &Self) -> f64 {
        (*self - *other).abs()
    }
}
