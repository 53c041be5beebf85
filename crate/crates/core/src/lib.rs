//! Exact arithmetic for Euler numbers and polynomials attached to Dirichlet
//! characters.
//!
//! Everything is computed over Q or a cyclotomic extension of it; there is no
//! floating point anywhere. The crate covers:
//!
//! - classical Euler numbers E_n and polynomials E_n(x), by recurrence and
//!   independently by truncated series division,
//! - Dirichlet characters of odd modulus with exact root-of-unity values,
//! - the attached numbers E_{n,chi} and polynomials E_{n,chi}(x),
//! - alternating power sums T_{k,chi}(n) and truncated alternating-measure
//!   sums with their p-adic congruences,
//! - machine checks, with full reports, for the symmetric identities tying
//!   all of these together.

pub mod arith;
pub mod binom;
pub mod cyclo;
pub mod dirichlet;
pub mod error;
pub mod euler;
pub mod gen_euler;
pub mod identities;
pub mod poly;
pub mod powerseries;
pub mod rational;

pub use cyclo::{cyclotomic_polynomial, CycloRational};
pub use dirichlet::{character, enumerate_characters, Character, UnitGroup};
pub use error::{Error, Result};
pub use euler::{euler_numbers, euler_numbers_via_egf, euler_polynomial, euler_polynomials};
pub use gen_euler::{
    alternating_power_sum, fermionic_moments, fermionic_partial_sum, fermionic_sum_from_moments,
    gen_euler_numbers_via_egf, GenEulerTable,
};
pub use identities::{
    check_eq13, check_fermionic, check_recurrence, check_tchi_all, check_theorem1, check_theorem2,
    fermionic_integral, sweep_eq13, sweep_fermionic, sweep_recurrence, sweep_tchi, sweep_theorem1,
    sweep_theorem2, tchi_expansions, CharFilter, FermionicReport, IdentityId, ReportParams,
    TchiReport, VerificationReport,
};
pub use poly::XPoly;
pub use powerseries::{default_truncation, TruncatedEgf, DEFAULT_TRUNCATION};
pub use rational::{parse_rational, rat, rat_int, rational_valuation, Rational, Valuation};
