//! Dense exact polynomials in the monomial basis `x^k` or the falling
//! factorial basis `psi_k = x(x-1)...(x-k+1)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, ComplexF, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    #[serde(rename = "falling")]
    FallingFactorial,
}

/// Coefficient vector over a basis; index `k` is the coefficient of `psi_k`.
/// Trailing zeros are never stored, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    basis: Basis,
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(basis: Basis, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { basis, coeffs }
    }

    pub fn from_ints(basis: Basis, coeffs: &[i64]) -> Self {
        Self::new(basis, coeffs.iter().map(|&c| exact::int(c)).collect())
    }

    pub fn zero(basis: Basis) -> Self {
        Poly {
            basis,
            coeffs: Vec::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, 0)
    }

    pub fn constant(basis: Basis, c: Rational) -> Self {
        Self::new(basis, vec![c])
    }

    /// `psi_k` of the given basis.
    pub fn basis_element(basis: Basis, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Poly { basis, coeffs }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Smallest index with a nonzero coefficient.
    pub fn lowest_index(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn to_basis(&self, basis: Basis) -> Poly {
        match (self.basis, basis) {
            (a, b) if a == b => self.clone(),
            (Basis::FallingFactorial, Basis::Monomial) => self.to_monomial(),
            _ => self.to_falling(),
        }
    }

    pub fn to_monomial(&self) -> Poly {
        if self.basis == Basis::Monomial {
            return self.clone();
        }
        let Some(deg) = self.degree() else {
            return Poly::zero(Basis::Monomial);
        };
        let s1 = exact::stirling1_table(deg);
        convert(&self.coeffs, &s1, Basis::Monomial)
    }

    pub fn to_falling(&self) -> Poly {
        if self.basis == Basis::FallingFactorial {
            return self.clone();
        }
        let Some(deg) = self.degree() else {
            return Poly::zero(Basis::FallingFactorial);
        };
        let s2 = exact::stirling2_table(deg);
        convert(&self.coeffs, &s2, Basis::FallingFactorial)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let other = other.to_basis(self.basis);
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Poly::new(self.basis, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            basis: self.basis,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.basis, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `x * p`, kept in the basis of `p`: monomials shift, and in the falling
    /// basis `x psi_n = psi_{n+1} + n psi_n`.
    pub fn mul_by_x(&self) -> Poly {
        match self.basis {
            Basis::Monomial => {
                if self.is_zero() {
                    return self.clone();
                }
                let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
                coeffs.push(Rational::zero());
                coeffs.extend(self.coeffs.iter().cloned());
                Poly::new(Basis::Monomial, coeffs)
            }
            Basis::FallingFactorial => {
                let mut coeffs = vec![Rational::zero(); self.coeffs.len() + 1];
                for (n, c) in self.coeffs.iter().enumerate() {
                    coeffs[n + 1] += c;
                    coeffs[n] += c * exact::int(n as i64);
                }
                Poly::new(Basis::FallingFactorial, coeffs)
            }
        }
    }

    /// Product of two polynomials, returned in the basis of `self`.
    pub fn mul(&self, other: &Poly) -> Poly {
        let a = self.to_monomial();
        let b = other.to_monomial();
        if a.is_zero() || b.is_zero() {
            return Poly::zero(self.basis);
        }
        let mut coeffs = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                coeffs[i + j] += x * y;
            }
        }
        Poly::new(Basis::Monomial, coeffs).to_basis(self.basis)
    }

    /// The natural lowering of the basis: `d/dx` on monomials, the forward
    /// difference `f(x+1) - f(x)` on falling factorials. Both send
    /// `psi_n` to `n psi_{n-1}`.
    pub fn diff(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c * exact::int(n as i64))
            .collect();
        Poly::new(self.basis, coeffs)
    }

    /// Exact division by `slope * x + offset` in the monomial basis.
    /// Returns quotient and remainder.
    pub fn div_linear(&self, slope: &Rational, offset: &Rational) -> (Poly, Rational) {
        assert!(!slope.is_zero(), "division by a constant linear factor");
        let p = self.to_monomial();
        if p.is_zero() {
            return (Poly::zero(self.basis), Rational::zero());
        }
        let root = -(offset / slope);
        // Synthetic division by (x - root), then rescale by 1/slope.
        let n = p.coeffs.len();
        let mut quotient = vec![Rational::zero(); n - 1];
        let mut carry = Rational::zero();
        for k in (0..n).rev() {
            let value = &p.coeffs[k] + &carry * &root;
            if k == 0 {
                carry = value;
            } else {
                quotient[k - 1] = value.clone();
                carry = value;
            }
        }
        let remainder = carry;
        let inv = slope.recip();
        let q = Poly::new(
            Basis::Monomial,
            quotient.into_iter().map(|c| c * &inv).collect(),
        );
        (q.to_basis(self.basis), remainder)
    }

    /// `p(scale * x^power)` for a monomial-basis `p`.
    pub fn substitute_power(&self, scale: &Rational, power: usize) -> Poly {
        let p = self.to_monomial();
        let mut coeffs = vec![Rational::zero(); p.coeffs.len().saturating_sub(1) * power + 1];
        let mut factor = Rational::one();
        for (k, c) in p.coeffs.iter().enumerate() {
            coeffs[k * power] = c * &factor;
            factor *= scale;
        }
        Poly::new(Basis::Monomial, coeffs)
    }

    /// Multiply by `x^k` (monomial basis).
    pub fn shift(&self, k: usize) -> Poly {
        let p = self.to_monomial();
        if p.is_zero() {
            return p;
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(p.coeffs);
        Poly::new(Basis::Monomial, coeffs)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        match self.basis {
            Basis::Monomial => {
                for c in self.coeffs.iter().rev() {
                    acc = acc * x + c;
                }
            }
            Basis::FallingFactorial => {
                // Nested form c0 + x(c1 + (x-1)(c2 + (x-2)(...))).
                for (k, c) in self.coeffs.iter().enumerate().rev() {
                    acc = acc * (x - exact::int(k as i64)) + c;
                }
            }
        }
        acc
    }

    pub fn eval_c(&self, x: ComplexF) -> ComplexF {
        let mut acc = ComplexF::ZERO;
        match self.basis {
            Basis::Monomial => {
                for c in self.coeffs.iter().rev() {
                    acc = acc * x + ComplexF::from_rational(c);
                }
            }
            Basis::FallingFactorial => {
                for (k, c) in self.coeffs.iter().enumerate().rev() {
                    let shifted = x - ComplexF::from_rational(&exact::int(k as i64));
                    acc = acc * shifted + ComplexF::from_rational(c);
                }
            }
        }
        acc
    }

    pub fn require_basis(&self, basis: Basis) -> Result<()> {
        if self.basis == basis {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                expected: basis,
                found: self.basis,
            })
        }
    }
}

fn convert(coeffs: &[Rational], table: &[Vec<BigInt>], basis: Basis) -> Poly {
    let deg = coeffs.len() - 1;
    let mut out = vec![Rational::zero(); deg + 1];
    for (n, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (k, t) in table[n].iter().enumerate().take(n + 1) {
            if !t.is_zero() {
                out[k] += c * Rational::from_integer(t.clone());
            }
        }
    }
    Poly::new(basis, out)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let var = match self.basis {
            Basis::Monomial => "x",
            Basis::FallingFactorial => "psi_",
        };
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rational::zero();
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let a = if negative { -c.clone() } else { c.clone() };
            let unit = a.is_one();
            match (k, self.basis) {
                (0, _) => write!(f, "{a}")?,
                _ if !unit && !a.is_integer() => write!(f, "({a})*")?,
                _ if !unit => write!(f, "{a}*")?,
                _ => {}
            }
            match (k, self.basis) {
                (0, _) => {}
                (1, Basis::Monomial) => write!(f, "x")?,
                (_, Basis::Monomial) => write!(f, "x^{k}")?,
                (_, Basis::FallingFactorial) => write!(f, "{var}{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    #[test]
    fn display_is_readable() {
        use super::*;
        use crate::exact::rat;
        assert_eq!(Poly::from_ints(Basis::Monomial, &[2, 0, -4, 0, 1]).to_string(), "x^4 - 4*x^2 + 2");
        assert_eq!(Poly::new(Basis::Monomial, vec![rat(-1, 2), int(1)]).to_string(), "x - 1/2");
        assert_eq!(Poly::new(Basis::FallingFactorial, vec![int(0), rat(3, 2)]).to_string(), "(3/2)*psi_1");
        assert_eq!(Poly::zero(Basis::Monomial).to_string(), "0");
    }

    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn mono(c: &[i64]) -> Poly {
        Poly::from_ints(Basis::Monomial, c)
    }

    fn fall(c: &[i64]) -> Poly {
        Poly::from_ints(Basis::FallingFactorial, c)
    }

    #[test]
    fn conversions() {
        assert_eq!(Poly::basis_element(Basis::FallingFactorial, 2).to_monomial(), mono(&[0, -1, 1]));
        assert_eq!(mono(&[0, 0, 1]).to_falling(), fall(&[0, 1, 1]));
        assert!(Poly::zero(Basis::Monomial).to_falling().is_zero());
    }

    #[test]
    fn multiply_by_x() {
        assert_eq!(mono(&[0, 0, 0, 1]).mul_by_x(), mono(&[0, 0, 0, 0, 1]));
        assert_eq!(fall(&[0, 1]).mul_by_x(), fall(&[0, 1, 1]));
        // x psi_3 = psi_4 + 3 psi_3, checked by expanding both sides.
        let lhs = Poly::basis_element(Basis::FallingFactorial, 3).to_monomial().mul_by_x();
        assert_eq!(lhs, fall(&[0, 0, 0, 3, 1]).to_monomial());
        assert_eq!(Poly::basis_element(Basis::FallingFactorial, 3).mul_by_x(), fall(&[0, 0, 0, 3, 1]));
    }

    #[test]
    fn evaluation() {
        assert_eq!(Poly::basis_element(Basis::FallingFactorial, 3).eval(&int(3)), int(6));
        assert_eq!(mono(&[-1, 0, 1]).eval(&int(2)), int(3));
        let z = ComplexF::new(0.5, -1.5).unwrap();
        let p = fall(&[2, -1, 3, 1]);
        let a = p.eval_c(z);
        let b = p.to_monomial().eval_c(z);
        assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn difference_and_derivative() {
        // d/dx (x^3) = 3x^2
        assert_eq!(mono(&[0, 0, 0, 1]).diff(), mono(&[0, 0, 3]));
        // forward difference agrees with f(x+1) - f(x)
        let p = fall(&[1, -2, 0, 5]);
        let d = p.diff();
        for x in -3..5 {
            let x = int(x);
            assert_eq!(d.eval(&x), p.eval(&(&x + int(1))) - p.eval(&x));
        }
    }

    #[test]
    fn linear_division() {
        // (x^2 - 1) / (2x + 2) = x/2 - 1/2
        let (q, r) = mono(&[-1, 0, 1]).div_linear(&int(2), &int(2));
        assert_eq!(q, Poly::new(Basis::Monomial, vec![rat(-1, 2), rat(1, 2)]));
        assert_eq!(r, int(0));
        let (_, r) = mono(&[1, 0, 1]).div_linear(&int(1), &int(0));
        assert_eq!(r, int(1));
    }

    #[test]
    fn substitution() {
        // p(y) = 1 + y, y = 3x^2
        let p = mono(&[1, 1]).substitute_power(&int(3), 2);
        assert_eq!(p, mono(&[1, 0, 3]));
    }

    fn small_poly() -> impl Strategy<Value = Vec<(i64, i64)>> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..9)
    }

    fn build(basis: Basis, c: &[(i64, i64)]) -> Poly {
        Poly::new(basis, c.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    proptest! {
        #[test]
        fn basis_round_trip(c in small_poly()) {
            let p = build(Basis::Monomial, &c);
            prop_assert_eq!(p.to_falling().to_monomial(), p.clone());
            let f = build(Basis::FallingFactorial, &c);
            prop_assert_eq!(f.to_monomial().to_falling(), f);
        }

        #[test]
        fn eval_is_linear_and_basis_free(a in small_poly(), b in small_poly(), xn in -9i64..9, xd in 1i64..4) {
            let x = rat(xn, xd);
            for basis in [Basis::Monomial, Basis::FallingFactorial] {
                let p = build(basis, &a);
                let q = build(basis, &b);
                prop_assert_eq!(p.add(&q).eval(&x), p.eval(&x) + q.eval(&x));
                prop_assert_eq!(p.mul_by_x().eval(&x), &x * p.eval(&x));
                prop_assert_eq!(p.to_monomial().eval(&x), p.eval(&x));
                prop_assert_eq!(p.to_falling().eval(&x), p.eval(&x));
            }
        }

        #[test]
        fn conversion_is_unit_lower_triangular(k in 0usize..15) {
            let f = Poly::basis_element(Basis::FallingFactorial, k).to_monomial();
            prop_assert_eq!(f.degree(), Some(k));
            prop_assert_eq!(f.leading_coefficient(), int(1));
            let m = Poly::basis_element(Basis::Monomial, k).to_falling();
            prop_assert_eq!(m.degree(), Some(k));
            prop_assert_eq!(m.leading_coefficient(), int(1));
        }
    }
}
