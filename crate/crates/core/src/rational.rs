//! Exact rational scalars and p-adic valuations of rationals.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; its `Display` form is `num/den`, with `/den` omitted
//! for integers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::Add;

pub type Rational = num_rational::BigRational;

/// Convenience constructor; panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `a/b` or `a` with arbitrary-precision integers; None on malformed
/// input or a zero denominator.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
        Some((num, den)) => {
            let num = num.trim().parse::<BigInt>().ok()?;
            let den = den.trim().parse::<BigInt>().ok()?;
            (!den.is_zero()).then(|| Rational::new(num, den))
        }
    }
}

/// A p-adic valuation: either a finite integer or +infinity (the valuation
/// of zero). The derived order puts `Infinite` above every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    /// True when the valuation is at least `bound`.
    pub fn at_least(self, bound: i64) -> bool {
        match self {
            Valuation::Infinite => true,
            Valuation::Finite(v) => v >= bound,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

impl serde::Serialize for Valuation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => s.serialize_i64(*v),
            Valuation::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Exact power of `p` dividing `n`; `Infinite` for n = 0.
pub fn int_valuation(n: &BigInt, p: u64) -> Valuation {
    debug_assert!(p >= 2);
    if n.is_zero() {
        return Valuation::Infinite;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0i64;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&n, &p);
        if !r.is_zero() {
            return Valuation::Finite(v);
        }
        n = q;
        v += 1;
    }
}

/// v_p(num) - v_p(den); `Infinite` exactly for the zero rational.
pub fn rational_valuation(r: &Rational, p: u64) -> Valuation {
    match (int_valuation(r.numer(), p), int_valuation(r.denom(), p)) {
        (Valuation::Infinite, _) => Valuation::Infinite,
        (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a - b),
        (_, Valuation::Infinite) => unreachable!("denominator is never zero"),
    }
}
