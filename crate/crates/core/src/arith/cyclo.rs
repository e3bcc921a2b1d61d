//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! Elements are stored in the power basis 1, z, ..., z^(phi(N)-1), reduced
//! modulo the N-th cyclotomic polynomial, so equal values in the same field
//! have identical coefficient vectors.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

pub type Q = BigRational;

static PHI_CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();

/// Coefficients (ascending) of the N-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n >= 1, "cyclotomic polynomial index must be positive");
    let cache = PHI_CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    // t^n - 1 divided by every Phi_d with d | n, d < n
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &den);
        }
    }
    let p = Arc::new(num);
    cache.write().unwrap().insert(n, p.clone());
    p
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quo = vec![0i64; num.len() - dd];
    for i in (0..quo.len()).rev() {
        let c = rem[i + dd];
        quo[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] = rem[i + j]
                    .checked_sub(c.checked_mul(dj).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}

/// Reduces `a` in place modulo the monic polynomial `phi` and truncates.
pub(crate) fn reduce_in_place(a: &mut Vec<Q>, phi: &[i64]) {
    let deg = phi.len() - 1;
    for i in (deg..a.len()).rev() {
        if a[i].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut a[i], Q::zero());
        for (j, &pj) in phi[..deg].iter().enumerate() {
            match pj {
                0 => {}
                1 => a[i - deg + j] -= &c,
                -1 => a[i - deg + j] += &c,
                k => a[i - deg + j] -= &c * BigInt::from(k),
            }
        }
    }
    a.truncate(deg);
    a.resize(deg, Q::zero());
}

/// `acc += a * b` as polynomials; `acc` must have room for the product.
pub(crate) fn poly_mul_acc(acc: &mut [Q], a: &[Q], b: &[Q]) {
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                acc[i + j] += ai * bj;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloNumber {
    modulus: u32,
    coeffs: Vec<Q>,
}

fn phi_degree(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

impl CycloNumber {
    pub fn zero(modulus: u32) -> Self {
        Self { modulus, coeffs: vec![Q::zero(); phi_degree(modulus)] }
    }

    pub fn one(modulus: u32) -> Self {
        Self::rational(modulus, Q::one())
    }

    pub fn rational(modulus: u32, q: Q) -> Self {
        let mut z = Self::zero(modulus);
        z.coeffs[0] = q;
        z
    }

    pub fn integer(modulus: u32, k: i64) -> Self {
        Self::rational(modulus, Q::from_integer(BigInt::from(k)))
    }

    /// zeta_N^k for any integer k.
    pub fn zeta_pow(modulus: u32, k: i64) -> Self {
        Self::from_terms(modulus, [(k, Q::one())])
    }

    /// Sum of `q * zeta^e` with arbitrary integer exponents, reduced.
    pub fn from_terms<I: IntoIterator<Item = (i64, Q)>>(modulus: u32, terms: I) -> Self {
        let n = modulus as usize;
        let mut v = vec![Q::zero(); n.max(1)];
        for (e, q) in terms {
            let e = e.rem_euclid(modulus as i64) as usize;
            v[e] += q;
        }
        Self::from_poly(modulus, v)
    }

    /// Reduces an arbitrary polynomial in zeta_N.
    pub fn from_poly(modulus: u32, mut v: Vec<Q>) -> Self {
        let phi = cyclotomic_polynomial(modulus);
        reduce_in_place(&mut v, &phi);
        Self { modulus, coeffs: v }
    }

    pub(crate) fn from_reduced(modulus: u32, coeffs: Vec<Q>) -> Self {
        Self { modulus, coeffs }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Power-basis coefficients, length phi(N).
    pub fn coeffs(&self) -> &[Q] {
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

    pub fn to_rational(&self) -> Option<Q> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// The same value viewed in Q(zeta_L); requires N | L.
    pub fn embed(&self, target: u32) -> Result<Self, ArithError> {
        if target % self.modulus != 0 {
            return Err(ArithError::ModulusMismatch(self.modulus, target));
        }
        if target == self.modulus {
            return Ok(self.clone());
        }
        let step = (target / self.modulus) as i64;
        Ok(Self::from_terms(
            target,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as i64 * step, c.clone())),
        ))
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let l = self.modulus.lcm(&other.modulus);
        (self.embed(l).unwrap(), other.embed(l).unwrap())
    }

    /// Value equality, embedding into a common field when moduli differ.
    pub fn eq_value(&self, other: &Self) -> bool {
        if self.modulus == other.modulus {
            return self == other;
        }
        let (a, b) = self.aligned(other);
        a == b
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.modulus != other.modulus {
            let (a, b) = self.aligned(other);
            return a.add(&b);
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Self { modulus: self.modulus, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { modulus: self.modulus, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.modulus != other.modulus {
            let (a, b) = self.aligned(other);
            return a.mul(&b);
        }
        // clear denominators so the convolution and reduction run on integers
        let (da, a) = integral(&self.coeffs);
        let (db, b) = integral(&other.coeffs);
        let phi = cyclotomic_polynomial(self.modulus);
        let deg = phi.len() - 1;
        let mut acc = vec![BigInt::zero(); 2 * deg - 1];
        for (i, ai) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                acc[i + j] += ai * bj;
            }
        }
        for i in (deg..acc.len()).rev() {
            if acc[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut acc[i]);
            for (j, &pj) in phi[..deg].iter().enumerate() {
                match pj {
                    0 => {}
                    1 => acc[i - deg + j] -= &c,
                    -1 => acc[i - deg + j] += &c,
                    k => acc[i - deg + j] -= &c * k,
                }
            }
        }
        acc.truncate(deg);
        let den = da * db;
        let coeffs = acc.into_iter().map(|x| Q::new(x, den.clone())).collect();
        Self { modulus: self.modulus, coeffs }
    }

    pub fn scale(&self, q: &Q) -> Self {
        Self { modulus: self.modulus, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Self::rational(self.modulus, q.recip()));
        }
        // a^-1 = (product of the other conjugates) / norm, computed on the
        // integral multiple so coefficients stay integers until the end
        let den = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let b = self.scale(&Q::from_integer(den.clone()));
        let m = self.modulus as i64;
        let mut rest = Self::one(self.modulus);
        for k in (2..m).filter(|k| k.gcd(&m) == 1) {
            rest = rest.mul(&b.galois(k));
        }
        let norm = b.mul(&rest).to_rational().ok_or(ArithError::DivisionByZero)?;
        if norm.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(rest.scale(&(Q::from_integer(den) / norm)))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&other.inv()?))
    }

    /// The automorphism zeta -> zeta^k, k coprime to N.
    pub fn galois(&self, k: i64) -> Self {
        debug_assert_eq!(k.rem_euclid(self.modulus as i64).gcd(&(self.modulus as i64)), 1);
        Self::from_terms(
            self.modulus,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (e as i64 * k, c.clone())),
        )
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn pow(&self, k: i64) -> Result<Self, ArithError> {
        let mut base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Parses the text form produced by `Display`, e.g. `1 - 2*z^3 + 1/2*z`.
    pub fn parse(modulus: u32, s: &str) -> Result<Self, ArithError> {
        let err = || ArithError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        let mut out = Vec::new();
        for t in terms {
            let (sign, body) = match t.as_bytes()[0] {
                b'+' => (1, &t[1..]),
                b'-' => (-1, &t[1..]),
                _ => (1, t),
            };
            let (coef, exp) = match body.find('z') {
                None => (body, 0i64),
                Some(pos) => {
                    let c = body[..pos].trim_end_matches('*');
                    let rest = &body[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(err)?.parse().map_err(|_| err())?
                    };
                    (if c.is_empty() { "1" } else { c }, e)
                }
            };
            let q = parse_rational(coef).ok_or_else(err)?;
            out.push((exp, if sign < 0 { -q } else { q }));
        }
        Ok(Self::from_terms(modulus, out))
    }
}

fn parse_rational(s: &str) -> Option<Q> {
    match s.split_once('/') {
        Some((a, b)) => {
            let d: BigInt = b.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Q::new(a.parse().ok()?, d))
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

/// Common denominator and the integer numerators over it.
fn integral(v: &[Q]) -> (BigInt, Vec<BigInt>) {
    let den = v.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let nums = v.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (den, nums)
}

fn fmt_rational(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            let body = match (e, mag.is_one()) {
                (0, _) => fmt_rational(&mag),
                (1, true) => "z".to_string(),
                (1, false) => format!("{}*z", fmt_rational(&mag)),
                (_, true) => format!("z^{e}"),
                (_, false) => format!("{}*z^{e}", fmt_rational(&mag)),
            };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                write!(f, "{body}")?;
                first = false;
            } else {
                write!(f, " {sign} {body}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: Self) -> CycloNumber {
        CycloNumber::add(self, rhs)
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: Self) -> CycloNumber {
        CycloNumber::sub(self, rhs)
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: Self) -> CycloNumber {
        CycloNumber::mul(self, rhs)
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> CycloNumber {
        CycloNumber::zeta_pow(n, k)
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        let p105 = cyclotomic_polynomial(105);
        assert_eq!(p105.len() - 1, 48);
        assert_eq!(p105[7], -2);
    }

    #[test]
    fn documented_identities() {
        let i = z(4, 1);
        assert_eq!(i.mul(&i), CycloNumber::integer(4, -1));
        let w = z(3, 1);
        assert!(CycloNumber::one(3).add(&w).add(&w.mul(&w)).is_zero());
        let g = (0..5).fold(CycloNumber::zero(5), |acc, j| acc.add(&z(5, j * j)));
        assert_eq!(g.mul(&g), CycloNumber::integer(5, 5));
        assert_eq!(CycloNumber::zero(7).inv(), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn mixed_moduli_embed() {
        let s = z(4, 1).add(&z(6, 1));
        assert_eq!(s.modulus(), 12);
        assert!(z(3, 1).eq_value(&z(6, 2)));
        assert!(z(3, 1).eq_value(&z(12, 4)));
        assert!(!z(3, 1).eq_value(&z(12, 8)));
        assert!(z(4, 1).embed(6).is_err());
    }

    #[test]
    fn inverse_and_conj() {
        let x = CycloNumber::parse(7, "1 + 2*z - z^3").unwrap();
        assert!(x.mul(&x.inv().unwrap()).is_one());
        assert_eq!(z(5, 1).conj(), z(5, 4));
        let a = z(8, 1).add(&z(8, 3));
        assert_eq!(a.mul(&a), CycloNumber::integer(8, -2));
    }

    #[test]
    fn text_round_trip() {
        let x = CycloNumber::parse(12, "-1/2 + 3*z - z^3").unwrap();
        assert_eq!(x.to_string(), "-1/2 + 3*z - z^3");
        assert_eq!(CycloNumber::parse(12, &x.to_string()).unwrap(), x);
        assert_eq!(CycloNumber::zero(5).to_string(), "0");
        assert_eq!(CycloNumber::parse(4, "z^2").unwrap(), CycloNumber::integer(4, -1));
        assert!(CycloNumber::parse(4, "1 + ").is_err());
        assert!(CycloNumber::parse(4, "1/0").is_err());
    }
}
