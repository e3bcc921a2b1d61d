use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::primes::{factor_big, is_prime};
use super::ArithError;

/// A positive integer stored as its prime factorization, primes ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FactoredInteger {
    factors: Vec<(BigUint, u32)>,
}

impl FactoredInteger {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_u64(n: u64) -> Result<Self, ArithError> {
        factorize(&BigUint::from(n))
    }

    /// Builds from `(prime, exponent)` pairs, checking each base is prime.
    pub fn from_prime_powers<I, P>(pairs: I) -> Result<Self, ArithError>
    where
        I: IntoIterator<Item = (P, u32)>,
        P: Into<BigUint>,
    {
        let mut out = Self::one();
        for (p, e) in pairs {
            let p = p.into();
            if !is_prime(&p) {
                return Err(ArithError::NotPrime(p.to_string()));
            }
            out = out.mul(&Self { factors: vec![(p, e)] }.normalized());
        }
        Ok(out)
    }

    fn normalized(mut self) -> Self {
        self.factors.retain(|(_, e)| *e > 0);
        self
    }

    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map_or(0, |(_, e)| *e)
    }

    pub fn exponent_of_u64(&self, p: u64) -> u32 {
        self.exponent_of(&BigUint::from(p))
    }

    pub fn value(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    pub fn value_u128(&self) -> Option<u128> {
        self.value().to_u128()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j].clone());
                j += 1;
            } else {
                out.push((a[i].0.clone(), a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
        Self { factors: out }
    }

    pub fn pow(&self, k: u32) -> Self {
        Self {
            factors: self.factors.iter().map(|(p, e)| (p.clone(), e * k)).collect(),
        }
        .normalized()
    }

    /// `self` divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.factors.iter().all(|(p, e)| other.exponent_of(p) >= *e)
    }

    /// `self / other` when exact.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let factors = self
            .factors
            .iter()
            .map(|(p, e)| (p.clone(), e - other.exponent_of(p)))
            .collect::<Vec<_>>();
        Some(Self { factors }.normalized())
    }
}

pub fn factorize(n: &BigUint) -> Result<FactoredInteger, ArithError> {
    if n.is_zero() {
        return Err(ArithError::NonPositive);
    }
    Ok(FactoredInteger { factors: factor_big(n) })
}

/// `Some((p, k))` when `n = p^k`; an error for `n < 2`.
pub fn is_prime_power(n: &BigUint) -> Result<Option<(BigUint, u32)>, ArithError> {
    if n < &BigUint::from(2u32) {
        return Err(ArithError::BelowTwo);
    }
    let f = factorize(n)?;
    Ok(if f.factors.len() == 1 {
        Some(f.factors[0].clone())
    } else {
        None
    })
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Accepts a plain decimal or a product such as `2^3*3^2*5*7`.
/// Bases need not be prime; they are factored.
impl FromStr for FactoredInteger {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ArithError::Parse(s.to_string()));
        }
        let mut out = FactoredInteger::one();
        for term in s.split('*') {
            let term = term.trim();
            let (base, exp) = match term.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (term, "1"),
            };
            let base: BigUint = base.parse().map_err(|_| ArithError::Parse(s.to_string()))?;
            let exp: u32 = exp.parse().map_err(|_| ArithError::Parse(s.to_string()))?;
            out = out.mul(&factorize(&base)?.pow(exp));
        }
        Ok(out)
    }
}
