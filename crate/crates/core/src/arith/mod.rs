//! Integer factorization, primality and cyclotomic arithmetic.

mod cyclo;
mod factored;
mod matrix;
pub mod primes;

pub use cyclo::{cyclotomic_polynomial, CycloNumber, Q};
pub use factored::{factorize, is_prime_power, FactoredInteger};
pub use matrix::CycloMatrix;
pub use primes::{is_prime, is_prime_u64};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected a positive integer")]
    NonPositive,
    #[error("expected an integer >= 2")]
    BelowTwo,
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("modulus {0} does not divide {1}")]
    ModulusMismatch(u32, u32),
    #[error("matrix shape mismatch")]
    Shape,
}
