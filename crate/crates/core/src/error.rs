use thiserror::Error;

/// Errors surfaced by fallible operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in Q(zeta_{order})")]
    DivisionByZero { order: u64 },
    #[error("series division requires a unit constant term")]
    ZeroConstantTerm,
    #[error("modulus must be an odd positive integer, got {0}")]
    BadModulus(u64),
    #[error("character index {index} out of range for modulus {modulus} (phi = {count})")]
    CharacterIndex {
        modulus: u64,
        index: u64,
        count: u64,
    },
    #[error("weights must be odd positive integers, got ({0}, {1})")]
    BadWeights(u64, u64),
    #[error("shift must be an odd positive integer, got {0}")]
    BadShift(u64),
    #[error("need an odd prime coprime to the modulus: p = {p}, modulus = {modulus}")]
    BadPrime { p: u64, modulus: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
