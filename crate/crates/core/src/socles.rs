//! Socles of primitive subgroups of SL(p, C) for a prime p: the non-abelian
//! simple socles solved from their parametric families, the abelian-socle
//! branch, and the explicit group lists known for p <= 11.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::arith::primes::{is_prime_u64, prime_power_u64};
use crate::catalog::{listing_key, SimpleGroupId, Sporadic};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SocleError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the abelian-socle description needs an odd prime")]
    EvenPrime,
    #[error("no explicit group list for p = {0}; available for 2, 3, 5, 7, 11")]
    NoExplicitList(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SocleKind {
    Primitive,
    Imprimitive,
}

/// Parametric family producing a candidate socle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Clause {
    /// A_{p+1}, p >= 7.
    Alternating,
    /// PSL(2, p), p >= 11.
    PslEqual,
    /// PSL(2, q) with q = 2p + 1.
    PslDoublePlusOne,
    /// PSL(2, q) with q = 2p - 1.
    PslDoubleMinusOne,
    /// PSL(2, 2^l) with p = 2^l - 1.
    PslMersenne,
    /// PSp(2n, q) with p = (q^n + 1)/2, n a power of 2.
    PspHalf,
    /// PSp(2n, 3) with p = (3^n - 1)/2.
    PspThree,
    /// PSU(n, q) with p = (q^n + 1)/(q + 1).
    Psu,
    /// Isolated cases for p in {3, 7, 11, 23}.
    Exceptional,
    /// PSL(n, q) with p = (q^n - 1)/(q - 1); the socle acts imprimitively.
    PslImprimitive,
}

impl Clause {
    pub fn tag(self) -> &'static str {
        match self {
            Clause::Alternating => "1(a)",
            Clause::PslEqual => "1(b)(i)",
            Clause::PslDoublePlusOne => "1(b)(ii)",
            Clause::PslDoubleMinusOne => "1(b)(iii)",
            Clause::PslMersenne => "1(b)(iv)",
            Clause::PspHalf => "1(c)(i)",
            Clause::PspThree => "1(c)(ii)",
            Clause::Psu => "1(d)",
            Clause::Exceptional => "1(e)",
            Clause::PslImprimitive => "2",
        }
    }

    pub fn kind(self) -> SocleKind {
        if self == Clause::PslImprimitive {
            SocleKind::Imprimitive
        } else {
            SocleKind::Primitive
        }
    }

    /// Recomputes p from the witness; `None` when the witness lacks a needed
    /// parameter or the expression is not an integer.
    pub fn evaluate(self, w: &Witness) -> Option<BigUint> {
        let big = BigUint::from;
        let pow = |b: u64, e: u64| Some(big(b).pow(u32::try_from(e).ok()?));
        let exact = |num: BigUint, den: BigUint| -> Option<BigUint> {
            let zero = BigUint::from(0u32);
            (den != zero && &num % &den == zero).then(|| num / den)
        };
        match self {
            Clause::Alternating => w.n.map(|n| big(n - 1)),
            Clause::PslEqual | Clause::Exceptional => w.p_direct.map(big),
            Clause::PslDoublePlusOne => w.q.and_then(|q| exact(big(q) - 1u32, big(2))),
            Clause::PslDoubleMinusOne => w.q.and_then(|q| exact(big(q) + 1u32, big(2))),
            Clause::PslMersenne => w.ell.and_then(|l| pow(2, l)).map(|x| x - 1u32),
            Clause::PspHalf => exact(pow(w.q?, w.n?)? + 1u32, big(2)),
            Clause::PspThree => exact(pow(3, w.n?)? - 1u32, big(2)),
            Clause::Psu => exact(pow(w.q?, w.n?)? + 1u32, big(w.q? + 1)),
            Clause::PslImprimitive => exact(pow(w.q?, w.n?)? - 1u32, big(w.q? - 1)),
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Solved parameters of a clause; unused ones stay `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Witness {
    pub n: Option<u64>,
    pub q: Option<u64>,
    pub ell: Option<u64>,
    pub k: Option<u32>,
    pub s: Option<u32>,
    /// For clauses whose equation is just "p equals this value".
    pub p_direct: Option<u64>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let fields: [(&str, Option<u64>); 6] = [
            ("n", self.n),
            ("q", self.q),
            ("l", self.ell),
            ("k", self.k.map(u64::from)),
            ("s", self.s.map(u64::from)),
            ("p", self.p_direct),
        ];
        for (name, v) in fields {
            if let Some(v) = v {
                parts.push(format!("{name}={v}"));
            }
        }
        f.write_str(&parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleCandidate {
    pub group: SimpleGroupId,
    pub kind: SocleKind,
    /// Every clause that produced this group, with its parameters.
    pub sources: Vec<(Clause, Witness)>,
}

impl SocleCandidate {
    pub fn clause_tags(&self) -> Vec<&'static str> {
        self.sources.iter().map(|(c, _)| c.tag()).collect()
    }

    /// Set when the candidate relies on the s = 1 symplectic branch.
    pub fn note(&self) -> Option<&'static str> {
        self.sources
            .iter()
            .any(|(c, w)| *c == Clause::PspHalf && w.s == Some(1))
            .then_some("symplectic branch with n = 2 (s = 1); excluded under --strict-s2")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SocleOptions {
    /// Require s >= 2 in the PSp(2n, q), n = 2^s family.
    pub strict_s2: bool,
}

fn checked_pow(b: u64, e: u64) -> Option<u128> {
    (b as u128).checked_pow(u32::try_from(e).ok()?)
}

/// q = l^(2^k) with l an odd prime.
fn odd_prime_two_power(q: u64) -> Option<(u64, u32)> {
    let (l, e) = prime_power_u64(q)?;
    (l % 2 == 1 && e.is_power_of_two()).then(|| (l, e.trailing_zeros()))
}

fn scan(p: u64, opts: SocleOptions) -> Vec<(SimpleGroupId, Clause, Witness)> {
    let mut out = Vec::new();
    let mut push = |g: Result<SimpleGroupId, _>, c: Clause, w: Witness| {
        if let Ok(g) = g {
            out.push((g, c, w));
        }
    };
    let pp = p as u128;

    if p >= 7 {
        if let Ok(n) = u32::try_from(p + 1) {
            push(SimpleGroupId::alt(n), Clause::Alternating, Witness { n: Some(p + 1), ..Default::default() });
        }
    }
    if p >= 11 {
        push(SimpleGroupId::psl(2, p), Clause::PslEqual, Witness { q: Some(p), p_direct: Some(p), ..Default::default() });
    }
    if let Some(q) = p.checked_mul(2).and_then(|x| x.checked_add(1)) {
        let ell = match prime_power_u64(q) {
            Some((l, 1)) => Some((l, None)),
            Some((3, e)) if is_prime_u64(e as u64) && e % 2 == 1 => Some((3, Some(e as u64))),
            _ => None,
        };
        if let Some((_, e)) = ell {
            push(SimpleGroupId::psl(2, q), Clause::PslDoublePlusOne, Witness { q: Some(q), ell: e, ..Default::default() });
        }
    }
    let q = 2 * p - 1;
    if q >= 5 {
        if let Some((l, k)) = odd_prime_two_power(q) {
            push(
                SimpleGroupId::psl(2, q),
                Clause::PslDoubleMinusOne,
                Witness { q: Some(q), ell: Some(l), k: Some(k), ..Default::default() },
            );
        }
    }
    if let Some(q) = p.checked_add(1).filter(|q| q.is_power_of_two()) {
        let ell = q.trailing_zeros() as u64;
        if ell % 2 == 1 && is_prime_u64(ell) {
            push(SimpleGroupId::psl(2, q), Clause::PslMersenne, Witness { q: Some(q), ell: Some(ell), ..Default::default() });
        }
    }

    // (q^n + 1)/2 = p with n = 2^s: q^n = 2p - 1 grows with both parameters
    let min_s = if opts.strict_s2 { 2 } else { 1 };
    let mut s = min_s;
    while checked_pow(3, 1u64 << s).map_or(false, |v| v < 2 * pp) {
        let n = 1u64 << s;
        let mut q = 3u64;
        while let Some(v) = checked_pow(q, n).filter(|&v| v <= 2 * pp - 1) {
            if v == 2 * pp - 1 {
                if let Some((l, k)) = odd_prime_two_power(q) {
                    if let Ok(dim) = u32::try_from(2 * n) {
                        push(
                            SimpleGroupId::psp(dim, q),
                            Clause::PspHalf,
                            Witness { n: Some(n), q: Some(q), ell: Some(l), k: Some(k), s: Some(s), ..Default::default() },
                        );
                    }
                }
            }
            q += 2;
        }
        s += 1;
    }

    let mut n = 3u64;
    while let Some(v) = checked_pow(3, n).filter(|&v| (v - 1) / 2 <= pp) {
        if is_prime_u64(n) && (v - 1) / 2 == pp {
            push(SimpleGroupId::psp(2 * n as u32, 3), Clause::PspThree, Witness { n: Some(n), q: Some(3), ..Default::default() });
        }
        n += 2;
    }

    // (q^n + 1)/(q + 1) >= q^(n-1) - q^(n-2) >= q^(n-2), increasing in q and n
    let mut n = 3u64;
    while checked_pow(2, n - 2).map_or(false, |v| v <= pp) {
        if is_prime_u64(n) {
            let mut q = 2u64;
            while let Some(v) = checked_pow(q, n) {
                let val = (v + 1) / (q as u128 + 1);
                if val > pp {
                    break;
                }
                if val == pp && (v + 1) % (q as u128 + 1) == 0 && prime_power_u64(q).is_some() {
                    push(SimpleGroupId::psu(n as u32, q), Clause::Psu, Witness { n: Some(n), q: Some(q), ..Default::default() });
                }
                q += 1;
            }
        }
        n += 1;
    }

    let exceptional: &[SimpleGroupId] = match p {
        3 => &[SimpleGroupId::Alt { n: 6 }],
        7 => &[SimpleGroupId::Lie { ty: crate::catalog::LieType::C, rank: 3, q: 2 }],
        11 => &[SimpleGroupId::Sporadic(Sporadic::M12)],
        23 => &[
            SimpleGroupId::Sporadic(Sporadic::Co2),
            SimpleGroupId::Sporadic(Sporadic::Co3),
            SimpleGroupId::Sporadic(Sporadic::M24),
        ],
        _ => &[],
    };
    for g in exceptional {
        push(Ok(g.clone()), Clause::Exceptional, Witness { p_direct: Some(p), ..Default::default() });
    }

    // (q^n - 1)/(q - 1) = 1 + q + ... + q^(n-1) > q^(n-1)
    let mut n = 2u64;
    while checked_pow(2, n - 1).map_or(false, |v| v < pp) {
        let mut q = 2u64;
        while let Some(v) = checked_pow(q, n) {
            let val = (v - 1) / (q as u128 - 1);
            if val > pp {
                break;
            }
            let parity_ok = if n == 2 { q % 2 == 0 } else { q % 2 == 1 || (n, q) == (3, 2) };
            if val == pp && parity_ok && prime_power_u64(q).is_some() {
                push(SimpleGroupId::psl(n as u32, q), Clause::PslImprimitive, Witness { n: Some(n), q: Some(q), ..Default::default() });
            }
            q += 1;
        }
        n += 1;
    }
    out
}

/// All non-abelian simple socles for degree p, merged by canonical group and
/// sorted by order.
pub fn nonabelian_socles(p: u64, opts: SocleOptions) -> Result<Vec<SocleCandidate>, SocleError> {
    if !is_prime_u64(p) {
        return Err(SocleError::NotPrime(p));
    }
    let mut merged: BTreeMap<(SocleKind, SimpleGroupId), Vec<(Clause, Witness)>> = BTreeMap::new();
    for (g, c, w) in scan(p, opts) {
        merged.entry((c.kind(), g.canonical())).or_default().push((c, w));
    }
    let mut out: Vec<SocleCandidate> =
        merged.into_iter().map(|((kind, group), sources)| SocleCandidate { group, kind, sources }).collect();
    out.sort_by_cached_key(|c| (c.kind, listing_key(&c.group)));
    Ok(out)
}

/// A subgroup K of SL(2, p) giving the primitive group (C_p x C_p) : K.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopSubgroup {
    pub label: String,
    pub name: &'static str,
    pub order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianSocleStructure {
    pub p: u64,
    pub extraspecial_order: BigUint,
    /// Order of the full normalizer G_0 in SL(p, C); any group whose order
    /// is divisible by p^4 is this one.
    pub full_order: BigUint,
    /// The K_i up to conjugacy, where known; otherwise any subgroup of
    /// SL(2, p) may occur.
    pub subgroups: Option<Vec<TopSubgroup>>,
}

impl AbelianSocleStructure {
    /// Order in PGL(p, C) of (C_p x C_p) : K.
    pub fn projective_order(&self, k: &TopSubgroup) -> BigUint {
        BigUint::from(self.p * self.p) * k.order
    }
}

pub fn abelian_socle_structure(p: u64) -> Result<AbelianSocleStructure, SocleError> {
    if !is_prime_u64(p) {
        return Err(SocleError::NotPrime(p));
    }
    if p == 2 {
        return Err(SocleError::EvenPrime);
    }
    let list: Option<&[(&'static str, u64)]> = match p {
        3 => Some(&[("C4", 4), ("Q8", 8), ("SL(2,3)", 24)]),
        5 => Some(&[("C3", 3), ("C6", 6), ("Q8", 8), ("Dic3", 12), ("SL(2,3)", 24), ("SL(2,5)", 120)]),
        7 => Some(&[
            ("C4", 4),
            ("C8", 8),
            ("Q8", 8),
            ("Q8", 8),
            ("Dic3", 12),
            ("Q16", 16),
            ("SL(2,3)", 24),
            ("SL(2,3)", 24),
            ("CSU(2,3)", 48),
            ("CSU(2,3)", 48),
            ("SL(2,7)", 336),
        ]),
        _ => None,
    };
    let subgroups = list.map(|l| {
        l.iter()
            .enumerate()
            .map(|(i, &(name, order))| TopSubgroup { label: format!("K{}", i + 1), name, order })
            .collect()
    });
    let pb = BigUint::from(p);
    Ok(AbelianSocleStructure {
        p,
        extraspecial_order: pb.pow(3),
        full_order: pb.pow(4) * (p * p - 1),
        subgroups,
    })
}

/// Socle of a listed group: simple, or elementary abelian of order p^rank.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SocleRef {
    Simple(SimpleGroupId),
    ElementaryAbelian { p: u64, rank: u32 },
}

/// Groups G/Z(G) with non-abelian composition factor known for small p,
/// after removing A5 (p = 5) and PSL(2,7) (p = 7) as primitive groups in
/// their own right.
pub fn small_p_overrides(p: u64) -> Result<Vec<(&'static str, SocleRef)>, SocleError> {
    use SimpleGroupId as G;
    let s = SocleRef::Simple;
    let psl = |q| s(G::psl(2, q).expect("simple"));
    let psu = |n, q| s(G::psu(n, q).expect("simple").canonical());
    Ok(match p {
        2 => vec![
            ("A5", s(G::Alt { n: 5 })),
            ("A4", SocleRef::ElementaryAbelian { p: 2, rank: 2 }),
            ("S4", SocleRef::ElementaryAbelian { p: 2, rank: 2 }),
        ],
        3 => vec![("A5", s(G::Alt { n: 5 })), ("A6", s(G::Alt { n: 6 })), ("PSL(2,7)", psl(7))],
        5 => vec![
            ("S5", s(G::Alt { n: 5 })),
            ("A6", s(G::Alt { n: 6 })),
            ("S6", s(G::Alt { n: 6 })),
            ("PSL(2,11)", psl(11)),
            ("PSU(4,2)", psu(4, 2)),
        ],
        7 => vec![
            ("A8", s(G::Alt { n: 8 })),
            ("S8", s(G::Alt { n: 8 })),
            ("PSL(2,13)", psl(13)),
            ("PSp(6,2)", s(G::psp(6, 2).expect("simple"))),
            ("PGL(2,7)", psl(7)),
            ("PSL(2,8)", psl(8)),
            ("R(3)", psl(8)),
            ("PSU(3,3)", psu(3, 3)),
            ("G2(2)", psu(3, 3)),
        ],
        11 => vec![
            ("A12", s(G::Alt { n: 12 })),
            ("M12", s(G::Sporadic(Sporadic::M12))),
            ("PSL(2,11)", psl(11)),
            ("PSL(2,23)", psl(23)),
            ("PSU(5,2)", psu(5, 2)),
        ],
        _ => return Err(SocleError::NoExplicitList(p)),
    })
}
