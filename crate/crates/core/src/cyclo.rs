//! Exact arithmetic in cyclotomic fields Q(zeta_m).
//!
//! An element is stored against the power basis `1, z, ..., z^(phi(m)-1)`
//! where `z = zeta_m` is a primitive m-th root of unity, with coefficients
//! fully reduced modulo the m-th cyclotomic polynomial. The representation
//! is canonical, so equality of elements sharing an order is coefficientwise
//! equality; elements of different orders are compared and combined after
//! lifting both into Q(zeta_lcm).
//!
//! The power basis is an integral basis of Z[zeta_m], which is what makes the
//! coefficientwise p-adic valuation below meaningful: congruence modulo p^N
//! in Z[zeta_m] is exactly "every basis coefficient of the difference has
//! valuation >= N".

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use crate::arith::{divisors, euler_phi, is_prime};
use crate::error::{Error, Result};
use crate::rational::{rational_valuation, Rational, Valuation};

// ---------------------------------------------------------------------------
// Cyclotomic polynomials over the integers
// ---------------------------------------------------------------------------

static CYCLO_CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();

/// The m-th cyclotomic polynomial, ascending integer coefficients, monic of
/// degree phi(m). Computed by exact division:
/// `Phi_m(x) = (x^m - 1) / prod_{d | m, d < m} Phi_d(x)`.
pub fn cyclotomic_polynomial(m: u64) -> Vec<BigInt> {
    cyclo_arc(m).as_ref().clone()
}

fn cyclo_arc(m: u64) -> Arc<Vec<BigInt>> {
    assert!(m >= 1, "cyclotomic polynomial needs m >= 1");
    let cache = CYCLO_CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(hit) = cache.read().unwrap().get(&m) {
        return Arc::clone(hit);
    }
    let mut num = vec![BigInt::zero(); (m + 1) as usize];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in divisors(m) {
        if d < m {
            num = int_poly_exact_div(&num, &cyclo_arc(d));
        }
    }
    let arc = Arc::new(num);
    cache.write().unwrap().insert(m, Arc::clone(&arc));
    arc
}

/// Long division of `num` by a monic integer polynomial, asserting that the
/// remainder vanishes.
fn int_poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let dn = rem.len() - 1;
    assert!(dn >= dd);
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for i in (dd..=dn).rev() {
        let c = std::mem::replace(&mut rem[i], BigInt::zero());
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate().take(dd) {
            rem[i - dd + j] -= &c * dj;
        }
        quot[i - dd] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "division was not exact");
    quot
}

// ---------------------------------------------------------------------------
// Rational polynomial helpers (private)
// ---------------------------------------------------------------------------

fn rp_trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn rp_deg(v: &[Rational]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

fn rp_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Division with remainder over Q[x]; `b` must be nonzero.
fn rp_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = rp_deg(b).expect("division by the zero polynomial");
    let lead_inv = b[db].recip();
    let mut rem = a.to_vec();
    rp_trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        let c = &rem[i] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for j in 0..db {
            let t = &c * &b[j];
            rem[i - db + j] -= t;
        }
        rem[i] = Rational::zero();
        quot[i - db] = c;
    }
    rp_trim(&mut rem);
    (quot, rem)
}

// ---------------------------------------------------------------------------
// Elements of Q(zeta_m)
// ---------------------------------------------------------------------------

/// An exact element of the cyclotomic field Q(zeta_order), stored in the
/// canonical power basis with phi(order) rational coefficients.
#[derive(Clone, Debug)]
pub struct CycloRational {
    order: u64,
    coeffs: Vec<Rational>,
}

impl CycloRational {
    /// Canonicalizes an arbitrary-degree polynomial in zeta_order.
    fn new_reduced(order: u64, mut poly: Vec<Rational>) -> Self {
        let phi = euler_phi(order) as usize;
        // zeta^order = 1 lets exponents fold before the division step.
        if poly.len() > order as usize {
            for i in (order as usize..poly.len()).rev() {
                let c = poly.pop().unwrap();
                let target = i % order as usize;
                poly[target] += c;
            }
        }
        if poly.len() > phi {
            let modulus = cyclo_arc(order);
            for i in (phi..poly.len()).rev() {
                let c = std::mem::replace(&mut poly[i], Rational::zero());
                if c.is_zero() {
                    continue;
                }
                for (j, mj) in modulus.iter().enumerate().take(phi) {
                    if !mj.is_zero() {
                        poly[i - phi + j] -= &c * &Rational::from_integer(mj.clone());
                    }
                }
            }
            poly.truncate(phi);
        }
        poly.resize(phi, Rational::zero());
        CycloRational {
            order,
            coeffs: poly,
        }
    }

    /// Builds an element from basis coefficients; at most phi(order) may be
    /// given and missing trailing ones are zero.
    pub fn from_coeffs(order: u64, coeffs: Vec<Rational>) -> Self {
        let phi = euler_phi(order) as usize;
        assert!(
            coeffs.len() <= phi,
            "basis of Q(zeta_{order}) has {phi} coordinates"
        );
        let mut coeffs = coeffs;
        coeffs.resize(phi, Rational::zero());
        CycloRational { order, coeffs }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloRational {
            order: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    /// zeta_order^exponent as a canonical element.
    pub fn root_of_unity(order: u64, exponent: u64) -> Self {
        assert!(order >= 1);
        let e = (exponent % order) as usize;
        let mut poly = vec![Rational::zero(); e + 1];
        poly[e] = Rational::one();
        Self::new_reduced(order, poly)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The element as a plain rational, when it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Re-expresses the element in Q(zeta_new_order); `new_order` must be a
    /// multiple of the current order. zeta_m maps to zeta_M^(M/m).
    pub fn lift(&self, new_order: u64) -> Self {
        if new_order == self.order {
            return self.clone();
        }
        assert!(
            new_order % self.order == 0,
            "cannot lift order {} into order {}",
            self.order,
            new_order
        );
        let scale = (new_order / self.order) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * scale + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[i * scale] = c.clone();
            }
        }
        Self::new_reduced(new_order, poly)
    }

    /// Both operands lifted into the compositum Q(zeta_lcm).
    fn unify(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            (self.clone(), other.clone())
        } else {
            let l = num_integer::lcm(self.order, other.order);
            (self.lift(l), other.lift(l))
        }
    }

    /// Multiplies every basis coefficient by a rational scalar.
    pub fn scale_rat(&self, r: &Rational) -> Self {
        CycloRational {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplies every basis coefficient by an integer scalar.
    pub fn scale_int(&self, n: &BigInt) -> Self {
        self.scale_rat(&Rational::from_integer(n.clone()))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = CycloRational::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero { order: self.order });
        }
        // Extended Euclid against the (irreducible) cyclotomic modulus:
        // r0 = Phi, r1 = self, with s tracking the coefficient on self.
        let modulus: Vec<Rational> = cyclo_arc(self.order)
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let mut r0 = modulus;
        let mut r1 = self.coeffs.clone();
        rp_trim(&mut r1);
        let mut s0: Vec<Rational> = Vec::new();
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while rp_deg(&r1).expect("gcd with an irreducible modulus is nonzero") > 0 {
            let (q, rem) = rp_divmod(&r0, &r1);
            r0 = std::mem::replace(&mut r1, rem);
            let qs1 = rp_mul(&q, &s1);
            let mut next = s0;
            next.resize(next.len().max(qs1.len()), Rational::zero());
            for (i, c) in qs1.into_iter().enumerate() {
                next[i] -= c;
            }
            rp_trim(&mut next);
            s0 = std::mem::replace(&mut s1, next);
        }
        let g = r1[0].recip();
        let inv: Vec<Rational> = s1.iter().map(|c| c * &g).collect();
        Ok(Self::new_reduced(self.order, inv))
    }

    /// Exact division; fails on a zero divisor.
    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        let (a, b) = self.unify(rhs);
        Ok(&a * &b.inv()?)
    }

    /// Coefficientwise p-adic valuation: the minimum over the power-basis
    /// coefficients, `Infinite` exactly for zero. `p` must be an odd prime.
    pub fn padic_valuation(&self, p: u64) -> Valuation {
        debug_assert!(p > 2 && is_prime(p), "valuation wants an odd prime");
        self.coeffs
            .iter()
            .map(|c| rational_valuation(c, p))
            .min()
            .unwrap_or(Valuation::Infinite)
    }

    /// Compact single-token form used by CSV output: `order:c0|c1|...`.
    pub fn to_coeff_string(&self) -> String {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("{}:{}", self.order, body.join("|"))
    }
}

impl PartialEq for CycloRational {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.unify(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloRational {}

impl From<Rational> for CycloRational {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for CycloRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Neg for &CycloRational {
    type Output = CycloRational;

    fn neg(self) -> CycloRational {
        CycloRational {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycloRational {
    type Output = CycloRational;

    fn neg(self) -> CycloRational {
        -&self
    }
}

impl Add for &CycloRational {
    type Output = CycloRational;

    fn add(self, rhs: &CycloRational) -> CycloRational {
        let (mut a, b) = self.unify(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub for &CycloRational {
    type Output = CycloRational;

    fn sub(self, rhs: &CycloRational) -> CycloRational {
        let (mut a, b) = self.unify(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl Mul for &CycloRational {
    type Output = CycloRational;

    fn mul(self, rhs: &CycloRational) -> CycloRational {
        let (a, b) = self.unify(rhs);
        CycloRational::new_reduced(a.order, rp_mul(&a.coeffs, &b.coeffs))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for CycloRational {
            type Output = CycloRational;
            fn $method(self, rhs: CycloRational) -> CycloRational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycloRational> for CycloRational {
            type Output = CycloRational;
            fn $method(self, rhs: &CycloRational) -> CycloRational {
                (&self).$method(rhs)
            }
        }
        impl $trait<CycloRational> for &CycloRational {
            type Output = CycloRational;
            fn $method(self, rhs: CycloRational) -> CycloRational {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl fmt::Display for CycloRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*z{}", self.order)?,
                _ => write!(f, "{mag}*z{}^{k}", self.order)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl serde::Serialize for CycloRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CycloRational", 2)?;
        st.serialize_field("order", &self.order)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn int_poly(coeffs: &[i64]) -> Vec<BigInt> {
        coeffs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), int_poly(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), int_poly(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), int_poly(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), int_poly(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), int_poly(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), int_poly(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_product_recovers_x_pow_m_minus_one() {
        for m in 1..=30u64 {
            let mut prod = int_poly(&[1]);
            for d in divisors(m) {
                let phi_d = cyclotomic_polynomial(d);
                let mut next = vec![BigInt::zero(); prod.len() + phi_d.len() - 1];
                for (i, a) in prod.iter().enumerate() {
                    for (j, b) in phi_d.iter().enumerate() {
                        next[i + j] += a * b;
                    }
                }
                prod = next;
            }
            let mut expect = vec![BigInt::zero(); (m + 1) as usize];
            expect[0] = BigInt::from(-1);
            expect[m as usize] = BigInt::one();
            assert_eq!(prod, expect, "m = {m}");
        }
    }

    #[test]
    fn primitive_root_relations() {
        let z3 = CycloRational::root_of_unity(3, 1);
        let z3sq = CycloRational::root_of_unity(3, 2);
        assert_eq!(&z3 + &z3sq, CycloRational::from_int(-1));
        assert_eq!(&z3 * &z3sq, CycloRational::one());
        let z4 = CycloRational::root_of_unity(4, 1);
        assert_eq!(&z4 * &z4, CycloRational::from_int(-1));
        let z6 = CycloRational::root_of_unity(6, 1);
        assert_eq!(z6.pow(3), CycloRational::from_int(-1));
        assert_eq!(z6.pow(6), CycloRational::one());
    }

    #[test]
    fn division_and_inverse() {
        let a = &CycloRational::one() + &CycloRational::root_of_unity(5, 1);
        assert_eq!(a.try_div(&a).unwrap(), CycloRational::one());
        let inv = a.inv().unwrap();
        assert_eq!(&a * &inv, CycloRational::one());
        let err = CycloRational::zero().inv().unwrap_err();
        assert_eq!(err, Error::DivisionByZero { order: 1 });
    }

    #[test]
    fn mixed_order_arithmetic_lifts() {
        let half = CycloRational::from_rational(rat(1, 2));
        let z6 = CycloRational::root_of_unity(6, 1);
        let sum = &half + &z6;
        assert_eq!(sum.order(), 6);
        assert_eq!(sum.coeffs(), &[rat(1, 2), rat_int(1)]);
        // zeta_3 seen inside Q(zeta_6): zeta_6^2 reduces to zeta_6 - 1.
        let z3 = CycloRational::root_of_unity(3, 1);
        assert_eq!(z3.lift(6).coeffs(), &[rat_int(-1), rat_int(1)]);
        assert_eq!(z3, z3.lift(6));
    }

    #[test]
    fn valuations() {
        let x = CycloRational::from_rational(rat(9, 2));
        assert_eq!(x.padic_valuation(3), Valuation::Finite(2));
        let y = CycloRational::root_of_unity(3, 1).scale_rat(&rat(1, 3));
        assert_eq!(y.padic_valuation(3), Valuation::Finite(-1));
        assert_eq!(CycloRational::zero().padic_valuation(5), Valuation::Infinite);
        let mixed = CycloRational::from_coeffs(6, vec![rat(5, 1), rat(1, 9)]);
        assert_eq!(mixed.padic_valuation(3), Valuation::Finite(-2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(CycloRational::zero().to_string(), "0");
        assert_eq!(CycloRational::from_rational(rat(-1, 2)).to_string(), "-1/2");
        let e = CycloRational::from_coeffs(6, vec![rat_int(1), rat(-1, 2)]);
        assert_eq!(e.to_string(), "1 - 1/2*z6");
        assert_eq!(e.to_coeff_string(), "6:1|-1/2");
    }

    #[test]
    fn exponent_folding() {
        let a = CycloRational::root_of_unity(5, 7);
        let b = CycloRational::root_of_unity(5, 2);
        assert_eq!(a, b);
    }
}
