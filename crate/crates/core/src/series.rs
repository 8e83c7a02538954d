//! Formal power series in `t` truncated at a fixed order.

use std::fmt;

use crate::error::Result;
use crate::exact::{Rational, Scalar};
use crate::hypergeom::{self, HypParams};

/// `sum_{k <= order} coeffs[k] t^k`.
#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<S: Scalar> {
    order: usize,
    coeffs: Vec<S>,
}

impl<S: Scalar> fmt::Debug for TruncatedSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedSeries")
            .field("order", &self.order)
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

impl<S: Scalar> TruncatedSeries<S> {
    /// Pads with zeros or drops terms beyond `order`.
    pub fn new(order: usize, mut coeffs: Vec<S>) -> Self {
        coeffs.resize(order + 1, S::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, S::one())
    }

    pub fn constant(order: usize, c: S) -> Self {
        Self::new(order, vec![c])
    }

    /// `c t^k`.
    pub fn monomial(order: usize, k: usize, c: S) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> S) -> Self {
        Self::new(order, (0..=order).map(f).collect())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &S {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.clone() - b.clone())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    fn zip(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        assert_eq!(self.order, other.order, "series orders differ");
        Self::new(
            self.order,
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "series orders differ");
        let n = self.order;
        let mut out = vec![S::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(n, out)
    }

    /// `exp(a)` for `a` with zero constant term, from `k f_k = sum_j j a_j f_{k-j}`.
    pub fn exp(&self) -> Self {
        assert!(self.coeffs[0].is_zero(), "exp needs a zero constant term");
        let n = self.order;
        let mut f = vec![S::zero(); n + 1];
        f[0] = S::one();
        for k in 1..=n {
            let mut acc = S::zero();
            for j in 1..=k {
                acc = acc + S::from_usize(j) * self.coeffs[j].clone() * f[k - j].clone();
            }
            f[k] = acc / S::from_usize(k);
        }
        Self::new(n, f)
    }

    /// `1/a` for `a` with nonzero constant term.
    pub fn recip(&self) -> Self {
        assert!(!self.coeffs[0].is_zero(), "recip needs a nonzero constant term");
        let n = self.order;
        let a0 = self.coeffs[0].clone();
        let mut g = vec![S::zero(); n + 1];
        g[0] = S::one() / a0.clone();
        for k in 1..=n {
            let mut acc = S::zero();
            for j in 1..=k {
                acc = acc + self.coeffs[j].clone() * g[k - j].clone();
            }
            g[k] = -acc / a0.clone();
        }
        Self::new(n, g)
    }

    /// `1/(1 - a)` for `a` with zero constant term.
    pub fn geometric(&self) -> Self {
        Self::one(self.order).sub(self).recip()
    }

    /// `sum_k outer[k] a^k` for `a` with zero constant term (Horner).
    pub fn compose(outer: &[S], inner: &Self) -> Self {
        assert!(inner.coeffs[0].is_zero(), "composition needs a zero constant term");
        let n = inner.order;
        let mut acc = Self::zero(n);
        for c in outer.iter().take(n + 1).rev() {
            acc = acc.mul(inner).add(&Self::constant(n, c.clone()));
        }
        acc
    }

    /// `a(t^power)`, truncated at `order`.
    pub fn substitute_power(&self, power: usize, order: usize) -> Self {
        let mut out = Self::zero(order);
        for (k, c) in self.coeffs.iter().enumerate() {
            if k * power > order {
                break;
            }
            out.coeffs[k * power] = c.clone();
        }
        out
    }

    /// `t^k a`.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k > self.order {
                break;
            }
            out.coeffs[i + k] = c.clone();
        }
        out
    }

    /// Largest coefficient distance; zero means equal for exact scalars.
    pub fn max_distance(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.distance(b))
            .fold(0.0, f64::max)
    }

    /// First index where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| !(a.clone() - b.clone()).is_zero())
    }
}

impl TruncatedSeries<Rational> {
    /// `pFq(params; u(t))` for `u` with zero constant term.
    pub fn hypergeometric(params: &HypParams, inner: &Self) -> Result<Self> {
        let coeffs = hypergeom::pfq_coefficients(params, inner.order)?;
        Ok(Self::compose(&coeffs, inner))
    }
}
