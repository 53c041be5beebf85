//! Truncated exponential generating functions over cyclotomic coefficients.
//!
//! A series is the list `c_0, ..., c_{L-1}` standing for
//! `sum_n c_n t^n / n!` modulo t^L. Products therefore use the binomial
//! convolution, and division solves for the quotient coefficients by forward
//! substitution. Binary operations truncate to the shorter operand.

use num_bigint::BigInt;
use num_traits::One;

use crate::binom::binomial_rows;
use crate::cyclo::CycloRational;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Series length used by checks when the caller does not pick one.
pub const DEFAULT_TRUNCATION: usize = 16;

const TRUNCATION_ENV: &str = "EULERCHI_TRUNCATION";

/// DEFAULT_TRUNCATION, overridable through the EULERCHI_TRUNCATION
/// environment variable (a positive integer).
pub fn default_truncation() -> usize {
    std::env::var(TRUNCATION_ENV)
        .ok()
        .and_then(|raw| parse_truncation(&raw))
        .unwrap_or(DEFAULT_TRUNCATION)
}

fn parse_truncation(raw: &str) -> Option<usize> {
    raw.trim().parse::<usize>().ok().filter(|&n| n >= 1)
}

/// An EGF truncated to finitely many coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedEgf {
    coeffs: Vec<CycloRational>,
}

impl TruncatedEgf {
    pub fn from_coeffs(coeffs: Vec<CycloRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs length >= 1");
        TruncatedEgf { coeffs }
    }

    pub fn zero(len: usize) -> Self {
        Self::from_coeffs(vec![CycloRational::zero(); len])
    }

    /// The constant series 1.
    pub fn one(len: usize) -> Self {
        let mut s = Self::zero(len);
        s.coeffs[0] = CycloRational::one();
        s
    }

    /// e^(a*t), i.e. c_n = a^n.
    pub fn exp_rat(a: &Rational, len: usize) -> Self {
        let mut coeffs = Vec::with_capacity(len);
        let mut power = Rational::one();
        for _ in 0..len {
            coeffs.push(CycloRational::from_rational(power.clone()));
            power *= a;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn exp_int(a: i64, len: usize) -> Self {
        Self::exp_rat(&Rational::from_integer(BigInt::from(a)), len)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeff(&self, n: usize) -> &CycloRational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[CycloRational] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let len = self.len().min(rhs.len());
        let coeffs = (0..len)
            .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let len = self.len().min(rhs.len());
        let coeffs = (0..len)
            .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: &CycloRational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn scale_rat(&self, s: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.scale_rat(s)).collect())
    }

    /// f(w*t): multiplies c_n by w^n.
    pub fn scale_arg(&self, w: i64) -> Self {
        let w = BigInt::from(w);
        let mut power = BigInt::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c.scale_int(&power);
                power = &power * &w;
                out
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Binomial convolution, the EGF product.
    pub fn mul(&self, rhs: &Self) -> Self {
        let len = self.len().min(rhs.len());
        let rows = binomial_rows(len - 1);
        let mut coeffs = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc = CycloRational::zero();
            for k in 0..=n {
                let f = &self.coeffs[k];
                let g = &rhs.coeffs[n - k];
                if f.is_zero() || g.is_zero() {
                    continue;
                }
                acc = &acc + &(f * g).scale_int(&rows[n][k]);
            }
            coeffs.push(acc);
        }
        Self::from_coeffs(coeffs)
    }

    /// self / rhs when rhs has an invertible constant term, by solving the
    /// binomial convolution for the quotient top-down:
    /// `h_n = g_0^-1 * (f_n - sum_{i<n} C(n,i) h_i g_{n-i})`.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let g0_inv = rhs.coeffs[0].inv()?;
        let len = self.len().min(rhs.len());
        let rows = binomial_rows(len - 1);
        let mut h: Vec<CycloRational> = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc = self.coeffs[n].clone();
            for (i, hi) in h.iter().enumerate() {
                let g = &rhs.coeffs[n - i];
                if hi.is_zero() || g.is_zero() {
                    continue;
                }
                acc = &acc - &(hi * g).scale_int(&rows[n][i]);
            }
            h.push(&acc * &g0_inv);
        }
        Ok(Self::from_coeffs(h))
    }
}
