//! Euler numbers and polynomials attached to a Dirichlet character, plus the
//! alternating power sums and truncated alternating-measure sums built from
//! the same character.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::is_prime;
use crate::binom::{binomial_row, binomial_rows};
use crate::cyclo::CycloRational;
use crate::dirichlet::Character;
use crate::error::{Error, Result};
use crate::euler::euler_polynomials;
use crate::poly::XPoly;
use crate::powerseries::TruncatedEgf;
use crate::rational::{rat, rat_int, Rational};

/// Numbers E_{n,chi} and polynomials E_{n,chi}(x) for n up to a fixed depth,
/// precomputed once per character.
#[derive(Clone, Debug)]
pub struct GenEulerTable {
    chi: Character,
    numbers: Vec<CycloRational>,
    polys: Vec<XPoly>,
}

impl GenEulerTable {
    /// Builds the table from the closed form
    /// `E_{n,chi} = d^n * sum_{a<d} (-1)^a chi(a) E_n(a/d)`
    /// followed by the Appell expansion
    /// `E_{n,chi}(x) = sum_i C(n,i) E_{i,chi} x^(n-i)`.
    pub fn new(chi: &Character, depth: usize) -> Self {
        let d = chi.modulus();
        let classical = euler_polynomials(depth);
        let rows = binomial_rows(depth);
        let big_d = BigInt::from(d);
        let mut numbers = Vec::with_capacity(depth + 1);
        for (n, en) in classical.iter().enumerate() {
            let mut acc = CycloRational::zero();
            for a in 0..d {
                let cv = chi.value(a);
                if cv.is_zero() {
                    continue;
                }
                let term = cv * &en.eval_rat(&rat(a as i64, d as i64));
                acc = if a % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            numbers.push(acc.scale_int(&big_d.pow(n as u32)));
        }
        let polys = (0..=depth)
            .map(|n| {
                let coeffs = (0..=n)
                    .map(|k| numbers[n - k].scale_int(&rows[n][k]))
                    .collect();
                XPoly::from_coeffs(coeffs)
            })
            .collect();
        GenEulerTable {
            chi: chi.clone(),
            numbers,
            polys,
        }
    }

    pub fn character(&self) -> &Character {
        &self.chi
    }

    pub fn modulus(&self) -> u64 {
        self.chi.modulus()
    }

    /// Largest index the table holds.
    pub fn depth(&self) -> usize {
        self.numbers.len() - 1
    }

    pub fn number(&self, n: usize) -> &CycloRational {
        &self.numbers[n]
    }

    pub fn numbers(&self) -> &[CycloRational] {
        &self.numbers
    }

    pub fn poly(&self, n: usize) -> &XPoly {
        &self.polys[n]
    }

    pub fn polys(&self) -> &[XPoly] {
        &self.polys
    }
}

/// E_{0,chi}..E_{depth,chi} read off the truncated series
/// `2 * sum_{l<d} (-1)^l chi(l) e^(l t) / (e^(d t) + 1)`,
/// an independent route kept for cross-checking the closed form.
pub fn gen_euler_numbers_via_egf(chi: &Character, depth: usize) -> Vec<CycloRational> {
    let len = depth + 1;
    let d = chi.modulus();
    let mut num = TruncatedEgf::zero(len);
    for l in 0..d {
        let cv = chi.value(l);
        if cv.is_zero() {
            continue;
        }
        let signed = if l % 2 == 0 { cv.clone() } else { -cv };
        num = num.add(&TruncatedEgf::exp_int(l as i64, len).scale(&signed));
    }
    let num = num.scale_rat(&rat_int(2));
    let den = TruncatedEgf::exp_int(d as i64, len).add(&TruncatedEgf::one(len));
    num.div(&den)
        .expect("denominator has constant term 2")
        .coeffs()
        .to_vec()
}

/// The alternating power sum T_{k,chi}(n) = 2 * sum_{l=0}^n (-1)^l chi(l) l^k,
/// reading 0^0 as 1.
pub fn alternating_power_sum(chi: &Character, k: usize, n: u64) -> CycloRational {
    let mut acc = CycloRational::zero();
    for l in 0..=n {
        let cv = chi.value(l);
        if cv.is_zero() {
            continue;
        }
        let power = if k == 0 {
            BigInt::one()
        } else {
            BigInt::from(l).pow(k as u32)
        };
        let term = cv.scale_int(&power);
        acc = if l % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc.scale_int(&BigInt::from(2))
}

fn validate_prime(chi: &Character, p: u64) -> Result<()> {
    if p <= 2 || !is_prime(p) || chi.modulus() % p == 0 {
        return Err(Error::BadPrime {
            p,
            modulus: chi.modulus(),
        });
    }
    Ok(())
}

/// Moments W_j = sum_{y=0}^{d p^steps - 1} chi(y) (-1)^y y^j for j <= max_j,
/// accumulated in a single pass over y. Requires p an odd prime not dividing
/// the modulus.
pub fn fermionic_moments(
    chi: &Character,
    p: u64,
    steps: u32,
    max_j: usize,
) -> Result<Vec<CycloRational>> {
    validate_prime(chi, p)?;
    let range = chi.modulus() * p.pow(steps);
    let mut moments = vec![CycloRational::zero(); max_j + 1];
    for y in 0..range {
        let cv = chi.value(y);
        if cv.is_zero() {
            continue;
        }
        let signed = if y % 2 == 0 { cv.clone() } else { -cv };
        let y_big = BigInt::from(y);
        let mut power = BigInt::one();
        for m in moments.iter_mut() {
            *m = &*m + &signed.scale_int(&power);
            power = &power * &y_big;
        }
    }
    Ok(moments)
}

/// Reassembles sum_y chi(y) (-1)^y (x+y)^k from moments via the binomial
/// theorem: sum_i C(k,i) x^i W_{k-i}.
pub fn fermionic_sum_from_moments(moments: &[CycloRational], k: usize, x: &Rational) -> CycloRational {
    assert!(k < moments.len(), "moments must reach j = k");
    let row = binomial_row(k);
    let mut acc = CycloRational::zero();
    let mut x_pow = Rational::one();
    for i in 0..=k {
        let w = &moments[k - i];
        if !w.is_zero() && !x_pow.is_zero() {
            let coef = &x_pow * Rational::from_integer(row[i].clone());
            acc = &acc + &w.scale_rat(&coef);
        }
        x_pow *= x;
    }
    acc
}

/// The truncated alternating-measure sum
/// `sum_{y=0}^{d p^steps - 1} chi(y) (-1)^y (x+y)^k`.
pub fn fermionic_partial_sum(
    chi: &Character,
    k: usize,
    x: &Rational,
    p: u64,
    steps: u32,
) -> Result<CycloRational> {
    let moments = fermionic_moments(chi, p, steps, k)?;
    Ok(fermionic_sum_from_moments(&moments, k, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::{character, enumerate_characters};
    use crate::euler::euler_numbers;

    #[test]
    fn quadratic_mod_three_numbers() {
        let chi = character(3, 1).unwrap();
        let table = GenEulerTable::new(&chi, 2);
        let expect = [
            CycloRational::from_int(-2),
            CycloRational::zero(),
            CycloRational::from_int(4),
        ];
        assert_eq!(table.numbers(), expect);
        // E_{1,chi}(x) = E_{0,chi} x + E_{1,chi}
        assert_eq!(table.poly(1).coeff(1), CycloRational::from_int(-2));
        assert!(table.poly(1).coeff(0).is_zero());
    }

    #[test]
    fn trivial_modulus_recovers_classical_numbers() {
        let chi = character(1, 0).unwrap();
        let table = GenEulerTable::new(&chi, 10);
        let classical = euler_numbers(10);
        for n in 0..=10 {
            assert_eq!(table.number(n).as_rational().unwrap(), classical[n]);
        }
    }

    #[test]
    fn series_route_agrees_with_closed_form() {
        for d in [1u64, 3, 5] {
            for chi in enumerate_characters(d).unwrap() {
                let table = GenEulerTable::new(&chi, 8);
                let series = gen_euler_numbers_via_egf(&chi, 8);
                assert_eq!(table.numbers(), series, "d={d} index={}", chi.index());
            }
        }
    }

    #[test]
    fn alternating_power_sum_values() {
        let chi = character(3, 1).unwrap();
        let val = |k, n| alternating_power_sum(&chi, k, n).as_rational().unwrap();
        assert_eq!(val(0, 2), rat_int(-4));
        assert_eq!(val(1, 2), rat_int(-6));
        assert_eq!(val(0, 8), rat_int(-4));
        assert_eq!(val(1, 8), rat_int(-18));
        assert_eq!(val(2, 8), rat_int(-154));
        let trivial = character(1, 0).unwrap();
        assert_eq!(
            alternating_power_sum(&trivial, 1, 1).as_rational().unwrap(),
            rat_int(-2)
        );
    }

    #[test]
    fn partial_sums() {
        let chi = character(3, 1).unwrap();
        let zero = rat_int(0);
        let s = fermionic_partial_sum(&chi, 0, &zero, 5, 1).unwrap();
        assert_eq!(s.as_rational().unwrap(), rat_int(-2));
        let s1 = fermionic_partial_sum(&chi, 1, &zero, 5, 1).unwrap();
        assert_eq!(s1.as_rational().unwrap(), rat_int(-15));
        let trivial = character(1, 0).unwrap();
        let t = fermionic_partial_sum(&trivial, 0, &zero, 3, 2).unwrap();
        assert!(t.is_one());
    }

    #[test]
    fn moment_reassembly_matches_direct_shift() {
        let chi = character(5, 1).unwrap();
        let x = rat(1, 2);
        let moments = fermionic_moments(&chi, 3, 1, 4).unwrap();
        let via_moments = fermionic_sum_from_moments(&moments, 4, &x);
        // direct evaluation of the shifted sum
        let mut direct = CycloRational::zero();
        for y in 0..15u64 {
            let cv = chi.value(y);
            if cv.is_zero() {
                continue;
            }
            let base = &x + rat_int(y as i64);
            let mut term = cv.scale_rat(&(&base * &base));
            term = term.scale_rat(&(&base * &base));
            direct = if y % 2 == 0 { &direct + &term } else { &direct - &term };
        }
        assert_eq!(via_moments, direct);
    }

    #[test]
    fn prime_validation() {
        let chi = character(3, 1).unwrap();
        let zero = rat_int(0);
        for bad in [2u64, 3, 9] {
            let err = fermionic_partial_sum(&chi, 0, &zero, bad, 1).unwrap_err();
            assert_eq!(err, Error::BadPrime { p: bad, modulus: 3 });
        }
    }

    #[test]
    fn valuation_of_difference_grows_with_steps() {
        let chi = character(3, 1).unwrap();
        let table = GenEulerTable::new(&chi, 3);
        let zero = rat_int(0);
        for steps in 1..=3u32 {
            let s = fermionic_partial_sum(&chi, 1, &zero, 5, steps).unwrap();
            let diff = &s - table.number(1);
            assert!(
                diff.padic_valuation(5).at_least(steps as i64),
                "steps = {steps}"
            );
        }
    }
}
