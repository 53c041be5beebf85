//! Polynomials in one indeterminate x with coefficients in a cyclotomic field.
//!
//! Both sides of every identity checked by this crate are such polynomials,
//! so the type only carries the operations those checks need: exact addition
//! and subtraction, scalar multiplication, evaluation, and substitution of an
//! affine expression w*x + c for x.

use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::cyclo::CycloRational;
use crate::rational::Rational;

/// A polynomial over Q(zeta), ascending coefficients, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPoly {
    coeffs: Vec<CycloRational>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: CycloRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// c * x^k.
    pub fn monomial(k: usize, c: CycloRational) -> Self {
        let mut coeffs = vec![CycloRational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<CycloRational>) -> Self {
        while coeffs.last().is_some_and(CycloRational::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^k; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> CycloRational {
        self.coeffs.get(k).cloned().unwrap_or_else(CycloRational::zero)
    }

    pub fn coeffs(&self) -> &[CycloRational] {
        &self.coeffs
    }

    pub fn scale(&self, s: &CycloRational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn scale_rat(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        XPoly {
            coeffs: self.coeffs.iter().map(|c| c.scale_rat(s)).collect(),
        }
    }

    /// p(w*x + c) by Horner: fold the coefficients from the top down, at each
    /// step multiplying the accumulator by (w*x + c).
    pub fn compose_affine(&self, w: &CycloRational, c: &CycloRational) -> Self {
        let mut acc = XPoly::zero();
        for p_k in self.coeffs.iter().rev() {
            acc = acc.mul_affine(w, c);
            if !p_k.is_zero() {
                if acc.coeffs.is_empty() {
                    acc.coeffs.push(p_k.clone());
                } else {
                    acc.coeffs[0] = &acc.coeffs[0] + p_k;
                }
            }
        }
        Self::from_coeffs(acc.coeffs)
    }

    /// self * (w*x + c).
    fn mul_affine(&self, w: &CycloRational, c: &CycloRational) -> Self {
        if self.coeffs.is_empty() {
            return Self::zero();
        }
        let mut out = vec![CycloRational::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            out[i + 1] = &out[i + 1] + &(a * w);
            out[i] = &out[i] + &(a * c);
        }
        Self::from_coeffs(out)
    }

    pub fn eval(&self, x: &CycloRational) -> CycloRational {
        let mut acc = CycloRational::zero();
        for p_k in self.coeffs.iter().rev() {
            acc = &(&acc * x) + p_k;
        }
        acc
    }

    pub fn eval_rat(&self, x: &Rational) -> CycloRational {
        self.eval(&CycloRational::from_rational(x.clone()))
    }
}

impl Zero for XPoly {
    fn zero() -> Self {
        XPoly::zero()
    }

    fn is_zero(&self) -> bool {
        XPoly::is_zero(self)
    }
}

impl Add for &XPoly {
    type Output = XPoly;

    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => out.push(a + b),
                (Some(a), None) => out.push(a.clone()),
                (None, Some(b)) => out.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        XPoly::from_coeffs(out)
    }
}

impl Sub for &XPoly {
    type Output = XPoly;

    fn sub(self, rhs: &XPoly) -> XPoly {
        self + &-rhs
    }
}

impl Neg for &XPoly {
    type Output = XPoly;

    fn neg(self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for XPoly {
    type Output = XPoly;

    fn add(self, rhs: XPoly) -> XPoly {
        &self + &rhs
    }
}

impl Sub for XPoly {
    type Output = XPoly;

    fn sub(self, rhs: XPoly) -> XPoly {
        &self - &rhs
    }
}

impl Neg for XPoly {
    type Output = XPoly;

    fn neg(self) -> XPoly {
        -&self
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_rational() {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})")?;
            }
            match k {
                0 => {}
                1 => write!(f, "*x")?,
                _ => write!(f, "*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl serde::Serialize for XPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(&self.coeffs)
    }
}
