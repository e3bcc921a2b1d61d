//! Necessary conditions on the order of a finite primitive or quasiprimitive
//! subgroup of SL(n, C), applied to the order of its central quotient.

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::arith::primes::is_prime_u64;
use crate::arith::FactoredInteger;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("degree must be at least 2")]
    DegreeTooSmall,
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// What the largest-prime theorems allow for a prime `p` in degree `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeVerdict {
    /// p > 2n+1: p never divides the order.
    Forbidden,
    /// p = 2n+1: the central quotient must be PSL(2, p).
    ExceptionalPsl2p,
    /// n+1 < p < 2n+1: p divides the order at most once and is the only
    /// prime above n+1.
    LargePrimeUniqueSquareFree,
    Unrestricted,
}

fn check(n: u64, p: u64) -> Result<(), BoundsError> {
    if n < 2 {
        return Err(BoundsError::DegreeTooSmall);
    }
    if !is_prime_u64(p) {
        return Err(BoundsError::NotPrime(p));
    }
    Ok(())
}

pub fn admissible_prime(n: u64, p: u64) -> Result<PrimeVerdict, BoundsError> {
    check(n, p)?;
    Ok(if p > 2 * n + 1 {
        PrimeVerdict::Forbidden
    } else if p == 2 * n + 1 {
        PrimeVerdict::ExceptionalPsl2p
    } else if p > n + 1 {
        PrimeVerdict::LargePrimeUniqueSquareFree
    } else {
        PrimeVerdict::Unrestricted
    })
}

/// Exponent of p in n!.
pub fn factorial_valuation(n: u64, p: u64) -> u32 {
    let (mut e, mut pk) = (0u64, p);
    while pk <= n {
        e += n / pk;
        match pk.checked_mul(p) {
            Some(x) => pk = x,
            None => break,
        }
    }
    e as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlichfeldtOptions {
    /// Base of the `c^(n-1)` factor; 6 in general, 5 under the sharper
    /// variant the caller may opt into.
    pub constant: u64,
}

impl Default for BlichfeldtOptions {
    fn default() -> Self {
        Self { constant: 6 }
    }
}

/// `floor(log_p((n!)_p * c^(n-1)))`.
pub fn blichfeldt_general_bound(n: u64, p: u64, opts: BlichfeldtOptions) -> Result<u32, BoundsError> {
    check(n, p)?;
    let x = BigUint::from(p).pow(factorial_valuation(n, p)) * BigUint::from(opts.constant).pow((n - 1) as u32);
    let pb = BigUint::from(p);
    let (mut k, mut pk) = (0u32, pb.clone());
    while pk <= x {
        k += 1;
        pk *= &pb;
    }
    Ok(k)
}

/// Exponent of p in `n! * p^(n-1)`, valid when p does not divide n.
pub fn blichfeldt_coprime_bound(n: u64, p: u64) -> Result<Option<u32>, BoundsError> {
    check(n, p)?;
    Ok((n % p != 0).then(|| factorial_valuation(n, p) + (n - 1) as u32))
}

/// Largest k with p^k permitted to divide the central quotient order.
pub fn blichfeldt_exponent_bound(n: u64, p: u64, opts: BlichfeldtOptions) -> Result<u32, BoundsError> {
    let general = blichfeldt_general_bound(n, p, opts)?;
    Ok(match blichfeldt_coprime_bound(n, p)? {
        Some(c) => c.min(general),
        None => general,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CollinsContext {
    Primitive,
    AnyFinite,
}

fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Upper bound for the index of an abelian normal subgroup, where known.
pub fn collins_index_bound(n: u64, ctx: CollinsContext) -> Option<BigUint> {
    match ctx {
        CollinsContext::Primitive => (n > 12 || n == 10 || n == 11).then(|| factorial(n + 1)),
        CollinsContext::AnyFinite => {
            if n >= 71 || matches!(n, 63 | 65 | 67 | 69) {
                Some(factorial(n + 1))
            } else if n >= 20 {
                let r = n / 2;
                Some(BigUint::from(60u32).pow(r as u32) * factorial(r))
            } else {
                None
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ForbiddenPrime { p: u64 },
    ExponentTooLarge { p: u64, exponent: u32, bound: u32 },
    SeveralLargePrimes { primes: Vec<u64> },
    LargePrimeSquared { p: u64 },
    ExceedsIndexBound { bound: BigUint },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiprimitiveVerdict {
    pub possible: bool,
    pub violations: Vec<Violation>,
}

/// Tests a central quotient order against every rule above. Primes too
/// large for `u64` are forbidden in every degree this crate can express.
pub fn can_be_quasiprimitive(
    n: u64,
    central_quotient_order: &FactoredInteger,
    opts: BlichfeldtOptions,
) -> Result<QuasiprimitiveVerdict, BoundsError> {
    if n < 2 {
        return Err(BoundsError::DegreeTooSmall);
    }
    let mut violations = Vec::new();
    let mut large = Vec::new();
    for (p, e) in central_quotient_order.factors() {
        let Ok(p) = u64::try_from(p) else {
            violations.push(Violation::ForbiddenPrime { p: u64::MAX });
            continue;
        };
        let verdict = admissible_prime(n, p)?;
        if verdict == PrimeVerdict::Forbidden {
            violations.push(Violation::ForbiddenPrime { p });
            continue;
        }
        if p > n + 1 {
            large.push(p);
            if *e >= 2 {
                violations.push(Violation::LargePrimeSquared { p });
            }
        }
        let bound = blichfeldt_exponent_bound(n, p, opts)?;
        if *e > bound {
            violations.push(Violation::ExponentTooLarge { p, exponent: *e, bound });
        }
    }
    if large.len() > 1 {
        violations.push(Violation::SeveralLargePrimes { primes: large });
    }
    if let Some(bound) = collins_index_bound(n, CollinsContext::Primitive) {
        if central_quotient_order.value() > bound {
            violations.push(Violation::ExceedsIndexBound { bound });
        }
    }
    Ok(QuasiprimitiveVerdict { possible: violations.is_empty(), violations })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fi(s: &str) -> FactoredInteger {
        s.parse().unwrap()
    }

    #[test]
    fn verdicts() {
        assert_eq!(admissible_prime(5, 13), Ok(PrimeVerdict::Forbidden));
        assert_eq!(admissible_prime(5, 11), Ok(PrimeVerdict::ExceptionalPsl2p));
        assert_eq!(admissible_prime(7, 11), Ok(PrimeVerdict::LargePrimeUniqueSquareFree));
        assert_eq!(admissible_prime(7, 7), Ok(PrimeVerdict::Unrestricted));
        assert_eq!(admissible_prime(1, 3), Err(BoundsError::DegreeTooSmall));
        assert_eq!(admissible_prime(4, 9), Err(BoundsError::NotPrime(9)));
    }

    #[test]
    fn blichfeldt_examples() {
        let d = BlichfeldtOptions::default();
        assert_eq!(blichfeldt_exponent_bound(2, 3, d), Ok(1));
        assert_eq!(blichfeldt_exponent_bound(2, 5, d), Ok(1));
        assert_eq!(blichfeldt_exponent_bound(4, 2, d), Ok(10));
        assert_eq!(blichfeldt_exponent_bound(3, 3, d), Ok(4));
        assert_eq!(blichfeldt_general_bound(4, 2, BlichfeldtOptions { constant: 5 }), Ok(9));
    }

    #[test]
    fn collins() {
        assert_eq!(collins_index_bound(12, CollinsContext::Primitive), None);
        assert_eq!(collins_index_bound(11, CollinsContext::Primitive), Some(factorial(12)));
        assert_eq!(collins_index_bound(19, CollinsContext::AnyFinite), None);
        let r = 10u32;
        assert_eq!(
            collins_index_bound(20, CollinsContext::AnyFinite),
            Some(BigUint::from(60u32).pow(r) * factorial(10))
        );
        assert_eq!(collins_index_bound(63, CollinsContext::AnyFinite), Some(factorial(64)));
        assert_eq!(collins_index_bound(64, CollinsContext::AnyFinite).unwrap(), BigUint::from(60u32).pow(32) * factorial(32));
    }

    #[test]
    fn quasiprimitive_filter() {
        let d = BlichfeldtOptions::default();
        assert!(can_be_quasiprimitive(5, &fi("660"), d).unwrap().possible);
        let v = can_be_quasiprimitive(5, &fi("13*60"), d).unwrap();
        assert!(v.violations.contains(&Violation::ForbiddenPrime { p: 13 }));
        let v = can_be_quasiprimitive(3, &fi("3^5"), d).unwrap();
        assert_eq!(v.violations, vec![Violation::ExponentTooLarge { p: 3, exponent: 5, bound: 4 }]);
        let v = can_be_quasiprimitive(7, &fi("11*13"), d).unwrap();
        assert_eq!(v.violations, vec![Violation::SeveralLargePrimes { primes: vec![11, 13] }]);
        let v = can_be_quasiprimitive(7, &fi("11^2"), d).unwrap();
        assert!(v.violations.contains(&Violation::LargePrimeSquared { p: 11 }));
    }
}
