//! Identifiers, orders, Schur multipliers and exceptional isomorphisms of the
//! finite simple groups.

mod sporadic;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::arith::primes::{is_prime_u64, prime_power_u64};
use crate::arith::{cyclotomic_polynomial, factorize, FactoredInteger};

pub use sporadic::Sporadic;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("malformed group parameters: {0}")]
    Malformed(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not simple")]
    NotSimple(String),
    #[error("unrecognised group code {0:?}")]
    UnknownCode(String),
}

/// Lie types, including the twisted ones. Classical types carry their Lie
/// rank; `A` of rank r is PSL(r+1, q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    A,
    B,
    C,
    D,
    TwA,
    TwD,
    G2,
    F4,
    E6,
    TwE6,
    E7,
    E8,
    Tw3D4,
    Sz,
    Ree2G2,
    Ree2F4,
}

impl LieType {
    fn fixed_rank(self) -> Option<u32> {
        Some(match self {
            LieType::G2 => 2,
            LieType::F4 => 4,
            LieType::E6 | LieType::TwE6 => 6,
            LieType::E7 => 7,
            LieType::E8 => 8,
            LieType::Tw3D4 => 4,
            LieType::Sz | LieType::Ree2G2 => 1,
            LieType::Ree2F4 => 2,
            _ => return None,
        })
    }

    fn min_rank(self) -> u32 {
        match self {
            LieType::A => 1,
            LieType::TwA | LieType::B | LieType::C => 2,
            LieType::D | LieType::TwD => 4,
            t => t.fixed_rank().unwrap(),
        }
    }

    fn code_prefix(self) -> &'static str {
        match self {
            LieType::A => "CA",
            LieType::B => "CB",
            LieType::C => "CC",
            LieType::D => "CD",
            LieType::TwA => "T2A",
            LieType::TwD => "T2D",
            LieType::G2 => "G2",
            LieType::F4 => "F4",
            LieType::E6 => "E6",
            LieType::TwE6 => "T2E6",
            LieType::E7 => "E7",
            LieType::E8 => "E8",
            LieType::Tw3D4 => "T3D4",
            LieType::Sz => "SZ",
            LieType::Ree2G2 => "R2G2",
            LieType::Ree2F4 => "R2F4",
        }
    }

    /// Exponent N with q^N the exact power of the characteristic in the order.
    pub fn q_exponent(self, rank: u32) -> u64 {
        let n = rank as u64;
        match self {
            LieType::A | LieType::TwA => n * (n + 1) / 2,
            LieType::B | LieType::C => n * n,
            LieType::D | LieType::TwD => n * (n - 1),
            LieType::G2 => 6,
            LieType::F4 => 24,
            LieType::E6 | LieType::TwE6 => 36,
            LieType::E7 => 63,
            LieType::E8 => 120,
            LieType::Tw3D4 | LieType::Ree2F4 => 12,
            LieType::Sz => 2,
            LieType::Ree2G2 => 3,
        }
    }

    const ALL: [LieType; 16] = [
        LieType::A,
        LieType::B,
        LieType::C,
        LieType::D,
        LieType::TwA,
        LieType::TwD,
        LieType::G2,
        LieType::F4,
        LieType::E6,
        LieType::TwE6,
        LieType::E7,
        LieType::E8,
        LieType::Tw3D4,
        LieType::Sz,
        LieType::Ree2G2,
        LieType::Ree2F4,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleGroupId {
    /// Cyclic group of prime order; only produced when explicitly requested.
    Cyclic { p: u64 },
    Alt { n: u32 },
    Lie { ty: LieType, rank: u32, q: u64 },
    /// The derived subgroup 2F4(2)'.
    Tits,
    Sporadic(Sporadic),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validation {
    SimpleOnly,
    AllowNonSimple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultiplierSource {
    GenericFormula,
    ExceptionalTable,
}

/// Abelian invariants `d1 | d2 | ...` of the Schur multiplier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SchurMultiplier {
    Known { invariants: Vec<u64>, source: MultiplierSource },
    Unknown,
}

impl SchurMultiplier {
    pub fn order(&self) -> Option<u64> {
        match self {
            SchurMultiplier::Known { invariants, .. } => Some(invariants.iter().product()),
            SchurMultiplier::Unknown => None,
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

fn pow_mod(b: u64, e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    let mut b = b % m;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// `q^qexp * prod (q^i - 1 or q^i + 1) / divisor`.
struct OrderShape {
    q: u64,
    qexp: u64,
    terms: Vec<(u32, bool)>,
    divisor: u64,
}

fn minus(is: impl IntoIterator<Item = u32>) -> Vec<(u32, bool)> {
    is.into_iter().map(|i| (i, false)).collect()
}

impl OrderShape {
    fn value(&self) -> BigUint {
        let q = BigUint::from(self.q);
        let mut v = q.pow(self.qexp as u32);
        for &(i, plus) in &self.terms {
            let qi = q.pow(i);
            v *= if plus { qi + 1u32 } else { qi - 1u32 };
        }
        v / self.divisor
    }

    fn factored(&self) -> FactoredInteger {
        let (l, k) = prime_power_u64(self.q).expect("validated prime power");
        let mut f = FactoredInteger::from_prime_powers([(l, (k as u64 * self.qexp) as u32)]).unwrap();
        for &(i, plus) in &self.terms {
            for d in crate::arith::primes::divisors(2 * i as u64) {
                let d = d as u32;
                let in_minus = i % d == 0;
                if (plus && !in_minus) || (!plus && in_minus) {
                    f = f.mul(&cyclotomic_value_factored(self.q, d));
                }
            }
        }
        f.div_exact(&FactoredInteger::from_u64(self.divisor).unwrap())
            .expect("divisor divides the order")
    }
}

static PHI_VALUES: OnceLock<Mutex<HashMap<(u64, u32), FactoredInteger>>> = OnceLock::new();

fn cyclotomic_value_factored(q: u64, d: u32) -> FactoredInteger {
    let cache = PHI_VALUES.get_or_init(Default::default);
    if let Some(f) = cache.lock().unwrap().get(&(q, d)) {
        return f.clone();
    }
    let coeffs = cyclotomic_polynomial(d);
    let qb = BigInt::from(q);
    let v = coeffs.iter().rev().fold(BigInt::from(0), |acc, &c| acc * &qb + c);
    let f = factorize(&v.to_biguint().expect("cyclotomic value is positive")).unwrap();
    cache.lock().unwrap().insert((q, d), f.clone());
    f
}

impl SimpleGroupId {
    pub fn alt(n: u32) -> Result<Self, CatalogError> {
        Self::alt_with(n, Validation::SimpleOnly)
    }

    pub fn alt_with(n: u32, v: Validation) -> Result<Self, CatalogError> {
        if n == 0 {
            return Err(CatalogError::Malformed("A0".into()));
        }
        Self::Alt { n }.check(v)
    }

    pub fn cyclic(p: u64) -> Result<Self, CatalogError> {
        if !is_prime_u64(p) {
            return Err(CatalogError::Malformed(format!("C{p} needs prime order")));
        }
        Ok(Self::Cyclic { p })
    }

    pub fn lie(ty: LieType, rank: u32, q: u64) -> Result<Self, CatalogError> {
        Self::lie_with(ty, rank, q, Validation::SimpleOnly)
    }

    /// Exceptional types ignore `rank`.
    pub fn lie_with(ty: LieType, rank: u32, q: u64, v: Validation) -> Result<Self, CatalogError> {
        let (l, k) = prime_power_u64(q).ok_or(CatalogError::NotPrimePower(q))?;
        let rank = ty.fixed_rank().unwrap_or(rank);
        if rank < ty.min_rank() {
            return Err(CatalogError::Malformed(format!("{ty:?} needs rank >= {}", ty.min_rank())));
        }
        let odd_power_of = |p: u64| l == p && k % 2 == 1;
        match ty {
            LieType::Sz | LieType::Ree2F4 if !odd_power_of(2) => {
                return Err(CatalogError::Malformed(format!("{ty:?} needs q an odd power of 2")))
            }
            LieType::Ree2G2 if !odd_power_of(3) => {
                return Err(CatalogError::Malformed("2G2 needs q an odd power of 3".into()))
            }
            _ => {}
        }
        // ranks are bounded so that q^N fits the order arithmetic
        if rank > 10_000 {
            return Err(CatalogError::Malformed("rank too large".into()));
        }
        Self::Lie { ty, rank, q }.check(v)
    }

    pub fn psl(dim: u32, q: u64) -> Result<Self, CatalogError> {
        Self::lie(LieType::A, dim.saturating_sub(1), q)
    }

    pub fn psu(dim: u32, q: u64) -> Result<Self, CatalogError> {
        Self::lie(LieType::TwA, dim.saturating_sub(1), q)
    }

    pub fn psp(dim: u32, q: u64) -> Result<Self, CatalogError> {
        if dim % 2 == 1 {
            return Err(CatalogError::Malformed("symplectic dimension must be even".into()));
        }
        Self::lie(LieType::C, dim / 2, q)
    }

    pub fn omega_odd(dim: u32, q: u64) -> Result<Self, CatalogError> {
        if dim % 2 == 0 {
            return Err(CatalogError::Malformed("dimension must be odd".into()));
        }
        Self::lie(LieType::B, dim / 2, q)
    }

    pub fn omega_plus(dim: u32, q: u64) -> Result<Self, CatalogError> {
        if dim % 2 == 1 {
            return Err(CatalogError::Malformed("dimension must be even".into()));
        }
        Self::lie(LieType::D, dim / 2, q)
    }

    pub fn omega_minus(dim: u32, q: u64) -> Result<Self, CatalogError> {
        if dim % 2 == 1 {
            return Err(CatalogError::Malformed("dimension must be even".into()));
        }
        Self::lie(LieType::TwD, dim / 2, q)
    }

    pub fn exceptional(ty: LieType, q: u64) -> Result<Self, CatalogError> {
        if ty.fixed_rank().is_none() {
            return Err(CatalogError::Malformed(format!("{ty:?} is classical")));
        }
        Self::lie(ty, 0, q)
    }

    pub fn sporadic(s: Sporadic) -> Self {
        Self::Sporadic(s)
    }

    fn check(self, v: Validation) -> Result<Self, CatalogError> {
        if v == Validation::SimpleOnly && !self.is_simple() {
            return Err(CatalogError::NotSimple(self.name()));
        }
        Ok(self)
    }

    pub fn is_simple(&self) -> bool {
        match *self {
            Self::Alt { n } => n >= 5,
            Self::Lie { ty, rank, q } => !matches!(
                (ty, rank, q),
                (LieType::A, 1, 2 | 3)
                    | (LieType::TwA, 2, 2)
                    | (LieType::B | LieType::C, 2, 2)
                    | (LieType::G2, _, 2)
                    | (LieType::Sz, _, 2)
                    | (LieType::Ree2G2, _, 3)
                    | (LieType::Ree2F4, _, 2)
            ),
            _ => true,
        }
    }

    /// Defining characteristic for groups of Lie type.
    pub fn characteristic(&self) -> Option<u64> {
        match *self {
            Self::Lie { q, .. } => prime_power_u64(q).map(|(l, _)| l),
            Self::Tits => Some(2),
            _ => None,
        }
    }

    fn shape(&self) -> Option<OrderShape> {
        let Self::Lie { ty, rank: r, q } = *self else { return None };
        let n = r as u64;
        let s = match ty {
            LieType::A => OrderShape {
                q,
                qexp: n * (n + 1) / 2,
                terms: minus(2..=r + 1),
                divisor: gcd(n + 1, q - 1),
            },
            LieType::TwA => OrderShape {
                q,
                qexp: n * (n + 1) / 2,
                terms: (2..=r + 1).map(|i| (i, i % 2 == 1)).collect(),
                divisor: gcd(n + 1, q + 1),
            },
            LieType::B | LieType::C => OrderShape {
                q,
                qexp: n * n,
                terms: minus((1..=r).map(|i| 2 * i)),
                divisor: gcd(2, q - 1),
            },
            LieType::D | LieType::TwD => {
                let plus = ty == LieType::TwD;
                let mut terms = vec![(r, plus)];
                terms.extend(minus((1..r).map(|i| 2 * i)));
                let qn = pow_mod(q, n, 4);
                let divisor = gcd(4, if plus { (qn + 1) % 4 } else { (qn + 3) % 4 });
                OrderShape { q, qexp: n * (n - 1), terms, divisor }
            }
            LieType::G2 => OrderShape { q, qexp: 6, terms: minus([6, 2]), divisor: 1 },
            LieType::F4 => OrderShape { q, qexp: 24, terms: minus([12, 8, 6, 2]), divisor: 1 },
            LieType::E6 => OrderShape {
                q,
                qexp: 36,
                terms: minus([12, 9, 8, 6, 5, 2]),
                divisor: gcd(3, q - 1),
            },
            LieType::TwE6 => OrderShape {
                q,
                qexp: 36,
                terms: vec![(12, false), (9, true), (8, false), (6, false), (5, true), (2, false)],
                divisor: gcd(3, q + 1),
            },
            LieType::E7 => OrderShape {
                q,
                qexp: 63,
                terms: minus([18, 14, 12, 10, 8, 6, 2]),
                divisor: gcd(2, q - 1),
            },
            LieType::E8 => OrderShape {
                q,
                qexp: 120,
                terms: minus([30, 24, 20, 18, 14, 12, 8, 2]),
                divisor: 1,
            },
            // q^8 + q^4 + 1 = (q^12 - 1) / (q^4 - 1)
            LieType::Tw3D4 => OrderShape {
                q,
                qexp: 12,
                terms: vec![(12, false), (6, false), (2, false)],
                divisor: 1,
            },
            LieType::Sz => OrderShape { q, qexp: 2, terms: vec![(2, true), (1, false)], divisor: 1 },
            LieType::Ree2G2 => {
                OrderShape { q, qexp: 3, terms: vec![(3, true), (1, false)], divisor: 1 }
            }
            LieType::Ree2F4 => OrderShape {
                q,
                qexp: 12,
                terms: vec![(6, true), (4, false), (3, true), (1, false)],
                divisor: 1,
            },
        };
        Some(s)
    }

    pub fn order(&self) -> FactoredInteger {
        match self {
            Self::Cyclic { p } => FactoredInteger::from_prime_powers([(*p, 1)]).unwrap(),
            Self::Alt { n } => alt_order_factored(*n),
            Self::Tits => FactoredInteger::from_prime_powers([(2u64, 11), (3, 3), (5, 2), (13, 1)])
                .unwrap(),
            Self::Sporadic(s) => {
                FactoredInteger::from_prime_powers(s.data().order.iter().copied()).unwrap()
            }
            Self::Lie { ty: LieType::Tw3D4, .. } => {
                let s = self.shape().unwrap();
                let num = s.factored();
                let q4 = OrderShape { q: s.q, qexp: 0, terms: vec![(4, false)], divisor: 1 };
                num.div_exact(&q4.factored()).unwrap()
            }
            Self::Lie { .. } => self.shape().unwrap().factored(),
        }
    }

    pub fn order_value(&self) -> BigUint {
        match self {
            Self::Lie { ty: LieType::Tw3D4, q, .. } => {
                let q = BigUint::from(*q);
                let q2 = q.pow(2u32);
                let q4 = q.pow(4u32);
                q.pow(12u32) * (q4.pow(2u32) + &q4 + 1u32) * (q.pow(6u32) - 1u32) * (q2 - 1u32)
            }
            Self::Lie { .. } => self.shape().unwrap().value(),
            _ => self.order().value(),
        }
    }

    /// Representative of the isomorphism class, preferring alternating, then
    /// linear, then symplectic names; PSU(4,2) is kept as the name for
    /// PSU(4,2) = PSp(4,3).
    pub fn canonical(&self) -> SimpleGroupId {
        use LieType::*;
        let Self::Lie { ty, rank, q } = *self else { return self.clone() };
        if !self.is_simple() {
            return self.clone();
        }
        match (ty, rank, q) {
            (A, 1, 4 | 5) => Self::Alt { n: 5 },
            (A, 1, 9) => Self::Alt { n: 6 },
            (A, 2, 2) => Self::Lie { ty: A, rank: 1, q: 7 },
            (A, 3, 2) => Self::Alt { n: 8 },
            (B | C, 2, 3) => Self::Lie { ty: TwA, rank: 3, q: 2 },
            (B, r, q) if r == 2 || q % 2 == 0 => Self::Lie { ty: C, rank: r, q },
            _ => self.clone(),
        }
    }

    /// Every identifier whose canonical form is `self.canonical()`.
    pub fn aliases(&self) -> Vec<SimpleGroupId> {
        use LieType::*;
        let c = self.canonical();
        let mut out = vec![c.clone()];
        match c {
            Self::Alt { n: 5 } => out.extend([(A, 1, 4), (A, 1, 5)].map(lie_raw)),
            Self::Alt { n: 6 } => out.push(lie_raw((A, 1, 9))),
            Self::Alt { n: 8 } => out.push(lie_raw((A, 3, 2))),
            Self::Lie { ty: A, rank: 1, q: 7 } => out.push(lie_raw((A, 2, 2))),
            Self::Lie { ty: TwA, rank: 3, q: 2 } => out.extend([(C, 2, 3), (B, 2, 3)].map(lie_raw)),
            Self::Lie { ty: C, rank, q } if rank == 2 || q % 2 == 0 => out.push(lie_raw((B, rank, q))),
            _ => {}
        }
        out
    }

    pub fn schur_multiplier(&self) -> SchurMultiplier {
        if !self.is_simple() {
            return SchurMultiplier::Unknown;
        }
        let c = self.canonical();
        if let Some(inv) = exceptional_multiplier(&c) {
            return SchurMultiplier::Known {
                invariants: inv,
                source: MultiplierSource::ExceptionalTable,
            };
        }
        let cyc = |d: u64| if d > 1 { vec![d] } else { vec![] };
        let invariants = match c {
            Self::Cyclic { .. } | Self::Tits => vec![],
            Self::Alt { .. } => vec![2],
            Self::Sporadic(s) => {
                return SchurMultiplier::Known {
                    invariants: s.data().multiplier.to_vec(),
                    source: MultiplierSource::ExceptionalTable,
                }
            }
            Self::Lie { ty, rank, q } => {
                let n = rank as u64;
                match ty {
                    LieType::A => cyc(gcd(n + 1, q - 1)),
                    LieType::TwA => cyc(gcd(n + 1, q + 1)),
                    LieType::B | LieType::C | LieType::E7 => cyc(gcd(2, q - 1)),
                    LieType::D if q % 2 == 1 && n % 2 == 0 => vec![2, 2],
                    LieType::D => cyc(gcd(4, (pow_mod(q, n, 4) + 3) % 4).max(1) * (q % 2)),
                    LieType::TwD => cyc(gcd(4, (pow_mod(q, n, 4) + 1) % 4).max(1) * (q % 2)),
                    LieType::E6 => cyc(gcd(3, q - 1)),
                    LieType::TwE6 => cyc(gcd(3, q + 1)),
                    _ => vec![],
                }
            }
        };
        SchurMultiplier::Known { invariants, source: MultiplierSource::GenericFormula }
    }

    pub fn code(&self) -> String {
        match *self {
            Self::Cyclic { p } => format!("CYC-{p}"),
            Self::Alt { n } => format!("ALT-{n}"),
            Self::Tits => "TITS".into(),
            Self::Sporadic(s) => format!("SPOR-{}", s.token()),
            Self::Lie { ty, rank, q } => match ty.fixed_rank() {
                Some(_) => format!("{}-{q}", ty.code_prefix()),
                None => format!("{}-{rank}-{q}", ty.code_prefix()),
            },
        }
    }

    pub fn name(&self) -> String {
        match *self {
            Self::Cyclic { p } => format!("C{p}"),
            Self::Alt { n } => format!("A{n}"),
            Self::Tits => "2F4(2)'".into(),
            Self::Sporadic(s) => s.name().into(),
            Self::Lie { ty, rank: r, q } => match ty {
                LieType::A => format!("PSL({},{q})", r + 1),
                LieType::TwA => format!("PSU({},{q})", r + 1),
                LieType::B => format!("POmega({},{q})", 2 * r + 1),
                LieType::C => format!("PSp({},{q})", 2 * r),
                LieType::D => format!("POmega+({},{q})", 2 * r),
                LieType::TwD => format!("POmega-({},{q})", 2 * r),
                LieType::G2 => format!("G2({q})"),
                LieType::F4 => format!("F4({q})"),
                LieType::E6 => format!("E6({q})"),
                LieType::TwE6 => format!("2E6({q})"),
                LieType::E7 => format!("E7({q})"),
                LieType::E8 => format!("E8({q})"),
                LieType::Tw3D4 => format!("3D4({q})"),
                LieType::Sz => format!("Sz({q})"),
                LieType::Ree2G2 => format!("2G2({q})"),
                LieType::Ree2F4 => format!("2F4({q})"),
            },
        }
    }

    pub fn from_code(code: &str) -> Result<Self, CatalogError> {
        Self::from_code_with(code, Validation::SimpleOnly)
    }

    /// Case-insensitive parse of codes such as `CA-1-7`, `ALT-5`, `SPOR-M24`.
    pub fn from_code_with(code: &str, v: Validation) -> Result<Self, CatalogError> {
        let up = code.trim().to_ascii_uppercase();
        let unknown = || CatalogError::UnknownCode(code.to_string());
        let parts: Vec<&str> = up.split('-').collect();
        let num = |s: &str| s.parse::<u64>().map_err(|_| unknown());
        match parts.as_slice() {
            ["TITS"] => Ok(Self::Tits),
            ["SPOR", tok] => Sporadic::from_token(tok).map(Self::Sporadic).ok_or_else(unknown),
            ["ALT", n] => Self::alt_with(u32::try_from(num(n)?).map_err(|_| unknown())?, v),
            ["CYC", p] => Self::cyclic(num(p)?),
            [prefix, rest @ ..] => {
                let ty = LieType::ALL
                    .into_iter()
                    .find(|t| t.code_prefix() == *prefix)
                    .ok_or_else(unknown)?;
                match (ty.fixed_rank(), rest) {
                    (Some(_), [q]) => Self::lie_with(ty, 0, num(q)?, v),
                    (None, [r, q]) => {
                        Self::lie_with(ty, u32::try_from(num(r)?).map_err(|_| unknown())?, num(q)?, v)
                    }
                    _ => Err(unknown()),
                }
            }
            _ => Err(unknown()),
        }
    }
}

fn lie_raw((ty, rank, q): (LieType, u32, u64)) -> SimpleGroupId {
    SimpleGroupId::Lie { ty, rank, q }
}

fn exceptional_multiplier(c: &SimpleGroupId) -> Option<Vec<u64>> {
    use LieType::*;
    use SimpleGroupId::*;
    Some(match *c {
        Alt { n: 6 | 7 } => vec![6],
        Lie { ty: A, rank: 2, q: 4 } => vec![4, 12],
        Lie { ty: TwA, rank: 3, q: 2 } => vec![2],
        Lie { ty: TwA, rank: 3, q: 3 } => vec![3, 12],
        Lie { ty: TwA, rank: 5, q: 2 } => vec![2, 6],
        Lie { ty: C, rank: 3, q: 2 } => vec![2],
        Lie { ty: B, rank: 3, q: 3 } => vec![6],
        Lie { ty: D, rank: 4, q: 2 } => vec![2, 2],
        Lie { ty: G2, q: 3, .. } => vec![3],
        Lie { ty: G2, q: 4, .. } => vec![2],
        Lie { ty: F4, q: 2, .. } => vec![2],
        Lie { ty: TwE6, q: 2, .. } => vec![2, 6],
        Lie { ty: Sz, q: 8, .. } => vec![2, 2],
        _ => return None,
    })
}

fn alt_order_factored(n: u32) -> FactoredInteger {
    if n <= 2 {
        return FactoredInteger::one();
    }
    let pairs: Vec<(u64, u32)> = crate::arith::primes::primes_up_to(n as u64)
        .into_iter()
        .map(|p| {
            let (mut e, mut pk) = (0u32, p);
            while pk <= n as u64 {
                e += (n as u64 / pk) as u32;
                pk *= p;
            }
            (p, if p == 2 { e - 1 } else { e })
        })
        .collect();
    FactoredInteger::from_prime_powers(pairs).unwrap()
}

impl fmt::Display for SimpleGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Ordering used for listings: by order, then by code.
pub fn listing_key(g: &SimpleGroupId) -> (BigUint, String) {
    (g.order_value(), g.code())
}

/// Order value as `u128` when it fits.
pub fn order_u128(g: &SimpleGroupId) -> Option<u128> {
    g.order_value().to_u128()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(code: &str) -> SimpleGroupId {
        SimpleGroupId::from_code(code).unwrap()
    }

    #[test]
    fn documented_orders() {
        assert_eq!(g("CA-1-7").order_value(), BigUint::from(168u32));
        assert_eq!(g("CC-3-2").order_value(), BigUint::from(1451520u32));
        assert_eq!(g("ALT-7").order_value(), BigUint::from(2520u32));
        assert_eq!(g("T2A-3-2").order().to_string(), "2^6*3^4*5");
        assert_eq!(g("TITS").order_value(), BigUint::from(17971200u32));
    }

    #[test]
    fn factored_matches_value() {
        for code in [
            "CA-4-3", "T2A-4-4", "CB-3-3", "CC-4-5", "CD-4-3", "T2D-5-2", "G2-5", "F4-2", "E6-2",
            "T2E6-2", "E7-3", "E8-2", "T3D4-3", "SZ-32", "R2G2-27", "R2F4-8", "SPOR-M", "ALT-20",
        ] {
            let x = g(code);
            assert_eq!(x.order().value(), x.order_value(), "{code}");
        }
    }

    #[test]
    fn non_simple_rejected_unless_allowed() {
        for code in ["ALT-4", "CA-1-2", "CA-1-3", "T2A-2-2", "CC-2-2", "G2-2", "SZ-2", "R2G2-3", "R2F4-2"] {
            assert!(matches!(SimpleGroupId::from_code(code), Err(CatalogError::NotSimple(_))), "{code}");
            let x = SimpleGroupId::from_code_with(code, Validation::AllowNonSimple).unwrap();
            assert!(!x.is_simple());
        }
        let g22 = SimpleGroupId::from_code_with("G2-2", Validation::AllowNonSimple).unwrap();
        assert_eq!(g22.order_value(), BigUint::from(12096u32));
    }

    #[test]
    fn malformed_rejected() {
        for code in ["CA-1-6", "CD-3-2", "SZ-4", "R2G2-9", "FOO-1", "SPOR-XYZ", "CA-1", "CC-0-3"] {
            assert!(SimpleGroupId::from_code(code).is_err(), "{code}");
        }
    }

    #[test]
    fn exceptional_isomorphisms() {
        assert_eq!(g("CA-1-4").canonical(), g("ALT-5"));
        assert_eq!(g("CA-1-5").canonical(), g("ALT-5"));
        assert_eq!(g("CA-1-9").canonical(), g("ALT-6"));
        assert_eq!(g("CA-2-2").canonical(), g("CA-1-7"));
        assert_eq!(g("CA-3-2").canonical(), g("ALT-8"));
        assert_eq!(g("CC-2-3").canonical(), g("T2A-3-2"));
        assert_eq!(g("CB-3-4").canonical(), g("CC-3-4"));
        assert_eq!(g("CB-2-5").canonical(), g("CC-2-5"));
        assert_eq!(g("CB-3-3").canonical(), g("CB-3-3"));
        for a in g("T2A-3-2").aliases() {
            assert_eq!(a.canonical(), g("T2A-3-2"));
            assert_eq!(a.order_value(), BigUint::from(25920u32));
        }
    }

    #[test]
    fn multipliers() {
        let inv = |c: &str| match g(c).schur_multiplier() {
            SchurMultiplier::Known { invariants, .. } => invariants,
            SchurMultiplier::Unknown => panic!(),
        };
        assert_eq!(inv("ALT-6"), vec![6]);
        assert_eq!(inv("CA-1-5"), vec![2]);
        assert!(inv("CA-2-4").iter().any(|d| d % 6 == 0));
        assert_eq!(inv("SPOR-M22"), vec![12]);
        assert_eq!(inv("CA-2-7"), vec![3]);
        assert_eq!(inv("CD-4-3"), vec![2, 2]);
        assert_eq!(inv("CD-5-3"), vec![2]);
        assert_eq!(inv("CD-5-5"), vec![4]);
        assert_eq!(inv("T2D-5-3"), vec![4]);
        assert_eq!(inv("CD-4-4"), Vec::<u64>::new());
        let non = SimpleGroupId::from_code_with("ALT-4", Validation::AllowNonSimple).unwrap();
        assert_eq!(non.schur_multiplier(), SchurMultiplier::Unknown);
    }

    #[test]
    fn code_round_trip() {
        for code in ["ALT-5", "CA-1-7", "T2A-3-2", "CB-3-3", "T3D4-2", "T2E6-2", "SPOR-FI24", "TITS", "CYC-7"] {
            assert_eq!(g(code).code(), code);
            assert_eq!(g(&code.to_lowercase()), g(code));
        }
        assert_eq!(g("spor-fi24").name(), "Fi24'");
    }
}
