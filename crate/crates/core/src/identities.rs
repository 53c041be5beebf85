//! Machine checks for the identities connecting character-attached Euler
//! polynomials, alternating power sums, and truncated alternating-measure
//! sums, with report types that keep both sides of every comparison.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

use crate::binom::binomial_row;
use crate::cyclo::CycloRational;
use crate::dirichlet::{enumerate_characters, Character};
use crate::error::{Error, Result};
use crate::euler::euler_numbers;
use crate::gen_euler::{
    alternating_power_sum, fermionic_moments, fermionic_sum_from_moments, GenEulerTable,
};
use crate::poly::XPoly;
use crate::rational::{rat, rat_int, Rational, Valuation};

/// Tags naming the identity families the crate can verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IdentityId {
    #[serde(rename = "recurrence")]
    Recurrence,
    #[serde(rename = "eq13")]
    Eq13,
    #[serde(rename = "theorem1")]
    Theorem1,
    #[serde(rename = "theorem2")]
    Theorem2,
    #[serde(rename = "tchi-all")]
    TchiAll,
}

impl IdentityId {
    pub const ALL: [IdentityId; 5] = [
        IdentityId::Recurrence,
        IdentityId::Eq13,
        IdentityId::Theorem1,
        IdentityId::Theorem2,
        IdentityId::TchiAll,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            IdentityId::Recurrence => "recurrence",
            IdentityId::Eq13 => "eq13",
            IdentityId::Theorem1 => "theorem1",
            IdentityId::Theorem2 => "theorem2",
            IdentityId::TchiAll => "tchi-all",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.tag() == s)
            .ok_or_else(|| format!("unknown identity tag: {s}"))
    }
}

/// Which characters of a modulus a sweep covers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharFilter {
    All,
    Primitive,
    /// The single character at this index.
    Index(u64),
}

impl CharFilter {
    pub fn accepts(&self, chi: &Character) -> bool {
        match self {
            CharFilter::All => true,
            CharFilter::Primitive => chi.is_primitive(),
            CharFilter::Index(i) => chi.index() == *i,
        }
    }
}

impl FromStr for CharFilter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(CharFilter::All),
            "primitive" => Ok(CharFilter::Primitive),
            _ => s
                .parse::<u64>()
                .map(CharFilter::Index)
                .map_err(|_| format!("expected all, primitive, or an index, got: {s}")),
        }
    }
}

/// Coordinates of one checked instance; fields an identity does not use
/// stay None and are omitted from serialized output.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ReportParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w1: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w2: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shift: Option<u64>,
}

impl ReportParams {
    fn for_character(chi: &Character) -> Self {
        ReportParams {
            modulus: Some(chi.modulus()),
            index: Some(chi.index()),
            ..Default::default()
        }
    }
}

/// One exact identity instance: both sides as polynomials in x and their
/// difference. `passed` holds exactly when the discrepancy is zero.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    #[serde(flatten)]
    pub params: ReportParams,
    pub lhs: XPoly,
    pub rhs: XPoly,
    pub discrepancy: XPoly,
    pub passed: bool,
}

impl VerificationReport {
    fn from_sides(identity: IdentityId, params: ReportParams, lhs: XPoly, rhs: XPoly) -> Self {
        let discrepancy = &lhs - &rhs;
        let passed = discrepancy.is_zero();
        VerificationReport {
            identity,
            params,
            lhs,
            rhs,
            discrepancy,
            passed,
        }
    }
}

/// The four expansions of the shared symmetric quantity at one term index,
/// which must all agree.
#[derive(Clone, Debug, Serialize)]
pub struct TchiReport {
    pub identity: IdentityId,
    #[serde(flatten)]
    pub params: ReportParams,
    pub expansions: Vec<XPoly>,
    pub passed: bool,
}

/// A truncated alternating-measure sum against its limit: an exact doubling
/// identity plus a p-adic congruence. Unlike the polynomial reports, the
/// congruence passes with a nonzero difference as long as its valuation is
/// large enough.
#[derive(Clone, Debug, Serialize)]
pub struct FermionicReport {
    pub modulus: u64,
    pub index: u64,
    pub k: usize,
    pub p: u64,
    pub steps: u32,
    pub x: String,
    pub partial_sum: CycloRational,
    pub limit: CycloRational,
    pub doubled_sum_identity_passed: bool,
    pub difference_valuation: Valuation,
    pub required_valuation: i64,
    pub congruence_passed: bool,
    pub passed: bool,
}

/// The alternating integral of a polynomial: x^k integrates to E_k, extended
/// linearly over the coefficients.
pub fn fermionic_integral(f: &XPoly) -> CycloRational {
    let Some(deg) = f.degree() else {
        return CycloRational::zero();
    };
    let nums = euler_numbers(deg);
    let mut acc = CycloRational::zero();
    for (k, c) in f.coeffs().iter().enumerate() {
        if !c.is_zero() && !nums[k].is_zero() {
            acc = &acc + &c.scale_rat(&nums[k]);
        }
    }
    acc
}

/// For f_n(x) = f(x + n) and the alternating integral I:
/// `I(f_n) + (-1)^(n-1) I(f) = 2 sum_{l=0}^{n-1} (-1)^(n-1-l) f(l)`.
pub fn check_recurrence(f: &XPoly, n: u64) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::BadShift(0));
    }
    let one = CycloRational::one();
    let shifted = f.compose_affine(&one, &CycloRational::from_int(n as i64));
    let i_f = fermionic_integral(f);
    let i_shifted = fermionic_integral(&shifted);
    let lhs = if n % 2 == 1 {
        &i_shifted + &i_f
    } else {
        &i_shifted - &i_f
    };
    let mut rhs = CycloRational::zero();
    for l in 0..n {
        let v = f.eval_rat(&rat_int(l as i64));
        rhs = if (n - 1 - l) % 2 == 0 {
            &rhs + &v
        } else {
            &rhs - &v
        };
    }
    rhs = rhs.scale_int(&BigInt::from(2));
    let params = ReportParams {
        degree: f.degree(),
        shift: Some(n),
        ..Default::default()
    };
    Ok(VerificationReport::from_sides(
        IdentityId::Recurrence,
        params,
        XPoly::constant(lhs),
        XPoly::constant(rhs),
    ))
}

/// `E_{k,chi}(n d) + E_{k,chi} = T_{k,chi}(n d - 1)` for odd n.
pub fn check_eq13(table: &GenEulerTable, k: usize, shift: u64) -> Result<VerificationReport> {
    if shift == 0 || shift % 2 == 0 {
        return Err(Error::BadShift(shift));
    }
    assert!(k <= table.depth(), "table too shallow for k = {k}");
    let nd = shift * table.modulus();
    let lhs = &table.poly(k).eval_rat(&rat_int(nd as i64)) + table.number(k);
    let rhs = alternating_power_sum(table.character(), k, nd - 1);
    let mut params = ReportParams::for_character(table.character());
    params.degree = Some(k);
    params.shift = Some(shift);
    Ok(VerificationReport::from_sides(
        IdentityId::Eq13,
        params,
        XPoly::constant(lhs),
        XPoly::constant(rhs),
    ))
}

fn validate_weights(w1: u64, w2: u64) -> Result<()> {
    if w1 % 2 == 0 || w2 % 2 == 0 || w1 == 0 || w2 == 0 {
        return Err(Error::BadWeights(w1, w2));
    }
    Ok(())
}

/// `sum_i C(l,i) w1^i w2^(l-i) E_{i,chi}(w2 x) T_{l-i,chi}(d w1 - 1)`.
fn binomial_t_mix(table: &GenEulerTable, l: usize, w1: u64, w2: u64) -> XPoly {
    let chi = table.character();
    let d = table.modulus();
    let row = binomial_row(l);
    let w2c = CycloRational::from_int(w2 as i64);
    let zero = CycloRational::zero();
    let (big_w1, big_w2) = (BigInt::from(w1), BigInt::from(w2));
    let mut acc = XPoly::zero();
    for i in 0..=l {
        let t = alternating_power_sum(chi, l - i, d * w1 - 1);
        if t.is_zero() {
            continue;
        }
        let weight = &row[i] * big_w1.pow(i as u32) * big_w2.pow((l - i) as u32);
        let e_part = table.poly(i).compose_affine(&w2c, &zero);
        acc = &acc + &e_part.scale(&t.scale_int(&weight));
    }
    acc
}

/// `w1^n * sum_{l=0}^{d w1 - 1} (-1)^l chi(l) E_{n,chi}(w2 x + (w2/w1) l)`.
fn weighted_shift_sum(table: &GenEulerTable, n: usize, w1: u64, w2: u64) -> XPoly {
    let chi = table.character();
    let d = table.modulus();
    let w2c = CycloRational::from_int(w2 as i64);
    let mut acc = XPoly::zero();
    for l in 0..d * w1 {
        let cv = chi.value(l);
        if cv.is_zero() {
            continue;
        }
        let shift = CycloRational::from_rational(rat((w2 * l) as i64, w1 as i64));
        let term = table.poly(n).compose_affine(&w2c, &shift).scale(cv);
        acc = if l % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc.scale_rat(&Rational::from_integer(BigInt::from(w1).pow(n as u32)))
}

/// The symmetric binomial identity: the w1/w2 mix equals its mirror image.
pub fn check_theorem1(
    table: &GenEulerTable,
    w1: u64,
    w2: u64,
    l: usize,
) -> Result<VerificationReport> {
    validate_weights(w1, w2)?;
    assert!(l <= table.depth(), "table too shallow for l = {l}");
    let lhs = binomial_t_mix(table, l, w1, w2);
    let rhs = binomial_t_mix(table, l, w2, w1);
    let mut params = ReportParams::for_character(table.character());
    params.degree = Some(l);
    params.w1 = Some(w1);
    params.w2 = Some(w2);
    Ok(VerificationReport::from_sides(
        IdentityId::Theorem1,
        params,
        lhs,
        rhs,
    ))
}

/// The symmetric shifted-sum identity: the weighted sum of E_{n,chi} along
/// the w1 progression equals its mirror image.
pub fn check_theorem2(
    table: &GenEulerTable,
    w1: u64,
    w2: u64,
    n: usize,
) -> Result<VerificationReport> {
    validate_weights(w1, w2)?;
    assert!(n <= table.depth(), "table too shallow for n = {n}");
    let lhs = weighted_shift_sum(table, n, w1, w2);
    let rhs = weighted_shift_sum(table, n, w2, w1);
    let mut params = ReportParams::for_character(table.character());
    params.degree = Some(n);
    params.w1 = Some(w1);
    params.w2 = Some(w2);
    Ok(VerificationReport::from_sides(
        IdentityId::Theorem2,
        params,
        lhs,
        rhs,
    ))
}

/// The four expansions of the shared symmetric quantity at term index l:
/// both binomial mixes and both doubled shifted sums.
pub fn tchi_expansions(
    table: &GenEulerTable,
    w1: u64,
    w2: u64,
    l: usize,
) -> Result<[XPoly; 4]> {
    validate_weights(w1, w2)?;
    assert!(l <= table.depth(), "table too shallow for l = {l}");
    let two = Rational::from_integer(BigInt::from(2));
    Ok([
        binomial_t_mix(table, l, w1, w2),
        binomial_t_mix(table, l, w2, w1),
        weighted_shift_sum(table, l, w1, w2).scale_rat(&two),
        weighted_shift_sum(table, l, w2, w1).scale_rat(&two),
    ])
}

/// Checks that all four expansions agree at term index l.
pub fn check_tchi_all(table: &GenEulerTable, w1: u64, w2: u64, l: usize) -> Result<TchiReport> {
    let expansions = tchi_expansions(table, w1, w2, l)?;
    let passed = expansions[1..].iter().all(|e| *e == expansions[0]);
    let mut params = ReportParams::for_character(table.character());
    params.degree = Some(l);
    params.w1 = Some(w1);
    params.w2 = Some(w2);
    Ok(TchiReport {
        identity: IdentityId::TchiAll,
        params,
        expansions: expansions.to_vec(),
        passed,
    })
}

fn fermionic_report_from_moments(
    table: &GenEulerTable,
    k: usize,
    p: u64,
    steps: u32,
    x: &Rational,
    moments: &[CycloRational],
) -> FermionicReport {
    let partial_sum = fermionic_sum_from_moments(moments, k, x);
    let limit = table.poly(k).eval_rat(x);
    let range = table.modulus() * p.pow(steps);
    let shifted = table
        .poly(k)
        .eval_rat(&(x + Rational::from_integer(BigInt::from(range))));
    let doubled_sum_identity_passed =
        partial_sum.scale_int(&BigInt::from(2)) == &shifted + &limit;
    let difference_valuation = (&partial_sum - &limit).padic_valuation(p);
    let required_valuation = steps as i64;
    let congruence_passed = difference_valuation.at_least(required_valuation);
    FermionicReport {
        modulus: table.modulus(),
        index: table.character().index(),
        k,
        p,
        steps,
        x: x.to_string(),
        partial_sum,
        limit,
        doubled_sum_identity_passed,
        difference_valuation,
        required_valuation,
        congruence_passed,
        passed: doubled_sum_identity_passed && congruence_passed,
    }
}

/// Checks one truncated alternating-measure sum against its limit.
pub fn check_fermionic(
    table: &GenEulerTable,
    k: usize,
    p: u64,
    steps: u32,
    x: &Rational,
) -> Result<FermionicReport> {
    assert!(k <= table.depth(), "table too shallow for k = {k}");
    let moments = fermionic_moments(table.character(), p, steps, k)?;
    Ok(fermionic_report_from_moments(table, k, p, steps, x, &moments))
}

fn tables_for(moduli: &[u64], depth: usize, filter: CharFilter) -> Result<Vec<GenEulerTable>> {
    let mut out = Vec::new();
    for &d in moduli {
        for chi in enumerate_characters(d)? {
            if filter.accepts(&chi) {
                out.push(GenEulerTable::new(&chi, depth));
            }
        }
    }
    Ok(out)
}

/// Runs check_theorem1 over every character of every modulus, every pair
/// from the two weight lists, and every term index up to max_degree.
pub fn sweep_theorem1(
    moduli: &[u64],
    w1s: &[u64],
    w2s: &[u64],
    max_degree: usize,
    filter: CharFilter,
) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    for table in tables_for(moduli, max_degree, filter)? {
        for &w1 in w1s {
            for &w2 in w2s {
                for l in 0..=max_degree {
                    reports.push(check_theorem1(&table, w1, w2, l)?);
                }
            }
        }
    }
    Ok(reports)
}

/// Runs check_theorem2 over the same grid shape as sweep_theorem1.
pub fn sweep_theorem2(
    moduli: &[u64],
    w1s: &[u64],
    w2s: &[u64],
    max_degree: usize,
    filter: CharFilter,
) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    for table in tables_for(moduli, max_degree, filter)? {
        for &w1 in w1s {
            for &w2 in w2s {
                for n in 0..=max_degree {
                    reports.push(check_theorem2(&table, w1, w2, n)?);
                }
            }
        }
    }
    Ok(reports)
}

/// Runs check_eq13 for k up to max_k and every odd shift given.
pub fn sweep_eq13(
    moduli: &[u64],
    max_k: usize,
    shifts: &[u64],
    filter: CharFilter,
) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    for table in tables_for(moduli, max_k, filter)? {
        for &shift in shifts {
            for k in 0..=max_k {
                reports.push(check_eq13(&table, k, shift)?);
            }
        }
    }
    Ok(reports)
}

/// Runs check_tchi_all for term indices up to max_degree.
pub fn sweep_tchi(
    moduli: &[u64],
    w1s: &[u64],
    w2s: &[u64],
    max_degree: usize,
    filter: CharFilter,
) -> Result<Vec<TchiReport>> {
    let mut reports = Vec::new();
    for table in tables_for(moduli, max_degree, filter)? {
        for &w1 in w1s {
            for &w2 in w2s {
                for l in 0..=max_degree {
                    reports.push(check_tchi_all(&table, w1, w2, l)?);
                }
            }
        }
    }
    Ok(reports)
}

/// Runs check_fermionic at x = 0 over every character, prime, step count,
/// and k, sharing one moment pass per (character, prime, steps). Moduli
/// divisible by a listed prime are skipped for that prime.
pub fn sweep_fermionic(
    moduli: &[u64],
    primes: &[u64],
    max_k: usize,
    max_steps: u32,
    filter: CharFilter,
) -> Result<Vec<FermionicReport>> {
    let x = Rational::zero();
    let mut reports = Vec::new();
    for table in tables_for(moduli, max_k, filter)? {
        for &p in primes {
            if table.modulus() % p == 0 {
                continue;
            }
            for steps in 1..=max_steps {
                let moments = fermionic_moments(table.character(), p, steps, max_k)?;
                for k in 0..=max_k {
                    reports.push(fermionic_report_from_moments(
                        &table, k, p, steps, &x, &moments,
                    ));
                }
            }
        }
    }
    Ok(reports)
}

/// Runs check_recurrence on seeded random rational polynomials: degrees up
/// to max_degree, numerators in [-100, 100], denominators in [1, 100], and
/// shifts in [1, max_shift].
pub fn sweep_recurrence(
    count: usize,
    seed: u64,
    max_degree: usize,
    max_shift: u64,
) -> Vec<VerificationReport> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let deg = rng.gen_range(0..=max_degree);
            let coeffs = (0..=deg)
                .map(|_| {
                    let num = rng.gen_range(-100i64..=100);
                    let den = rng.gen_range(1i64..=100);
                    CycloRational::from_rational(rat(num, den))
                })
                .collect();
            let f = XPoly::from_coeffs(coeffs);
            let n = rng.gen_range(1..=max_shift);
            check_recurrence(&f, n).expect("shift is at least 1")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::character;

    fn quad3_table(depth: usize) -> GenEulerTable {
        GenEulerTable::new(&character(3, 1).unwrap(), depth)
    }

    fn int_poly(coeffs: &[i64]) -> XPoly {
        XPoly::from_coeffs(coeffs.iter().map(|&c| CycloRational::from_int(c)).collect())
    }

    #[test]
    fn recurrence_base_cases() {
        // f = x^2, n = 1: both sides vanish
        let sq = int_poly(&[0, 0, 1]);
        let r = check_recurrence(&sq, 1).unwrap();
        assert!(r.passed);
        assert!(r.lhs.is_zero());
        // f = x, n = 2: both sides are 2
        let lin = int_poly(&[0, 1]);
        let r = check_recurrence(&lin, 2).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, int_poly(&[2]));
        // f = x^3 + 1, n = 3: both sides are 16
        let cubic = int_poly(&[1, 0, 0, 1]);
        let r = check_recurrence(&cubic, 3).unwrap();
        assert!(r.passed);
        assert_eq!(r.rhs, int_poly(&[16]));
        assert_eq!(check_recurrence(&lin, 0).unwrap_err(), Error::BadShift(0));
    }

    #[test]
    fn recurrence_sweep_is_deterministic_and_passes() {
        let a = sweep_recurrence(20, 7, 8, 6);
        let b = sweep_recurrence(20, 7, 8, 6);
        assert_eq!(a.len(), 20);
        for (ra, rb) in a.iter().zip(&b) {
            assert!(ra.passed);
            assert_eq!(ra.lhs, rb.lhs);
            assert_eq!(ra.params.shift, rb.params.shift);
        }
    }

    #[test]
    fn eq13_small_cases() {
        let table = quad3_table(2);
        let r = check_eq13(&table, 0, 1).unwrap();
        assert!(r.passed);
        assert_eq!(r.rhs, int_poly(&[-4]));
        let r = check_eq13(&table, 1, 1).unwrap();
        assert!(r.passed);
        assert_eq!(r.rhs, int_poly(&[-6]));
        assert_eq!(check_eq13(&table, 0, 2).unwrap_err(), Error::BadShift(2));
    }

    #[test]
    fn theorem1_spot_check() {
        let table = quad3_table(4);
        for l in 0..=4 {
            let r = check_theorem1(&table, 1, 3, l).unwrap();
            assert!(r.passed, "l = {l}");
            // the identity also holds pointwise at x = 0
            assert_eq!(r.lhs.eval_rat(&rat_int(0)), r.rhs.eval_rat(&rat_int(0)));
        }
        assert_eq!(
            check_theorem1(&table, 2, 3, 1).unwrap_err(),
            Error::BadWeights(2, 3)
        );
    }

    #[test]
    fn theorem2_frozen_line() {
        let table = quad3_table(3);
        let r = check_theorem2(&table, 1, 3, 1).unwrap();
        assert!(r.passed);
        assert_eq!(r.lhs, int_poly(&[18, 12]));
    }

    #[test]
    fn tchi_frozen_terms() {
        let table = quad3_table(4);
        let r = check_tchi_all(&table, 1, 3, 0).unwrap();
        assert!(r.passed);
        assert_eq!(r.expansions[0], int_poly(&[8]));
        let r = check_tchi_all(&table, 3, 1, 2).unwrap();
        assert!(r.passed);
        assert_eq!(r.expansions[0], int_poly(&[164, 216, 72]));
    }

    #[test]
    fn fermionic_reports() {
        let table = quad3_table(2);
        let x = Rational::zero();
        let r = check_fermionic(&table, 0, 5, 1, &x).unwrap();
        assert!(r.passed);
        assert!(r.doubled_sum_identity_passed);
        assert_eq!(r.difference_valuation, Valuation::Infinite);
        let r = check_fermionic(&table, 1, 5, 1, &x).unwrap();
        assert!(r.passed);
        assert_eq!(r.partial_sum, CycloRational::from_int(-15));
        assert_eq!(r.difference_valuation, Valuation::Finite(1));
    }

    #[test]
    fn identity_tags_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.tag().parse::<IdentityId>().unwrap(), id);
        }
        assert!("theorem3".parse::<IdentityId>().is_err());
    }

    #[test]
    fn character_filters() {
        let chi = character(9, 3).unwrap();
        assert!(CharFilter::All.accepts(&chi));
        assert!(!CharFilter::Primitive.accepts(&chi));
        assert!(CharFilter::Index(3).accepts(&chi));
        assert!(!CharFilter::Index(1).accepts(&chi));
        assert_eq!("primitive".parse::<CharFilter>().unwrap(), CharFilter::Primitive);
        assert_eq!("4".parse::<CharFilter>().unwrap(), CharFilter::Index(4));
        assert!("some".parse::<CharFilter>().is_err());
    }
}
