//! Classical Euler numbers E_n and Euler polynomials E_n(x).

use num_traits::{One, Zero};

use crate::binom::binomial_rows;
use crate::cyclo::CycloRational;
use crate::poly::XPoly;
use crate::powerseries::TruncatedEgf;
use crate::rational::{rat, rat_int, Rational};

/// E_0..E_max_n from the defining relation (e^t + 1) * E(t) = 2, which pins
/// E_0 = 1 and E_n = -(1/2) * sum_{l<n} C(n,l) E_l.
pub fn euler_numbers(max_n: usize) -> Vec<Rational> {
    let rows = binomial_rows(max_n);
    let mut e = Vec::with_capacity(max_n + 1);
    e.push(Rational::one());
    for n in 1..=max_n {
        let mut acc = Rational::zero();
        for (l, el) in e.iter().enumerate() {
            if !el.is_zero() {
                acc += el * Rational::from_integer(rows[n][l].clone());
            }
        }
        e.push(acc * rat(-1, 2));
    }
    e
}

/// The same numbers read off the truncated series 2 / (e^t + 1), kept as an
/// independent route for cross-checking.
pub fn euler_numbers_via_egf(max_n: usize) -> Vec<Rational> {
    let len = max_n + 1;
    let num = TruncatedEgf::one(len).scale_rat(&rat_int(2));
    let den = TruncatedEgf::exp_int(1, len).add(&TruncatedEgf::one(len));
    let q = num.div(&den).expect("constant term is 2");
    q.coeffs()
        .iter()
        .map(|c| c.as_rational().expect("series over Q"))
        .collect()
}

/// E_0(x)..E_max_n(x) with E_n(x) = sum_l C(n,l) E_l x^(n-l).
pub fn euler_polynomials(max_n: usize) -> Vec<XPoly> {
    let nums = euler_numbers(max_n);
    let rows = binomial_rows(max_n);
    (0..=max_n)
        .map(|n| {
            let coeffs = (0..=n)
                .map(|k| {
                    // coefficient of x^k is C(n,k) E_{n-k}
                    CycloRational::from_rational(
                        &nums[n - k] * Rational::from_integer(rows[n][k].clone()),
                    )
                })
                .collect();
            XPoly::from_coeffs(coeffs)
        })
        .collect()
}

pub fn euler_polynomial(n: usize) -> XPoly {
    euler_polynomials(n).pop().expect("nonempty by construction")
}
