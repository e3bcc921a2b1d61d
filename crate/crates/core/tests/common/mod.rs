#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use lingroups::arith::{CycloNumber, FactoredInteger, Q};
use lingroups::catalog::{SimpleGroupId, Sporadic};
use lingroups::characters::{builtin_names, builtin_table};
use lingroups::search::enumerate_up_to;
use lingroups::socles::{nonabelian_socles, SocleKind, SocleOptions};

pub fn is_prime(n: u128) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// (l, k) with q = l^k, by trial division.
pub fn prime_power(q: u128) -> Option<(u128, u32)> {
    let l = (2..=q).find(|d| q % d == 0)?;
    let (mut x, mut k) = (q, 0);
    while x % l == 0 {
        x /= l;
        k += 1;
    }
    (x == 1).then_some((l, k))
}

#[derive(Debug)]
enum Family {
    Alt(u32),
    Psl(u32, u64),
    Psp(u32, u64),
    Psu(u32, u64),
    Named(&'static str),
}

/// Straight scan of every family's parameter grid, sharing nothing with the
/// production solver beyond the catalog's group constructors.
fn brute_force(p: u128) -> (Vec<Family>, Vec<Family>) {
    let mut prim = Vec::new();
    let mut imprim = Vec::new();
    if p >= 7 {
        prim.push(Family::Alt(p as u32 + 1));
    }
    if p >= 11 {
        prim.push(Family::Psl(2, p as u64));
    }
    let q = 2 * p + 1;
    if is_prime(q) || matches!(prime_power(q), Some((3, l)) if l > 2 && is_prime(l as u128)) {
        prim.push(Family::Psl(2, q as u64));
    }
    if p >= 3 {
        let q = 2 * p - 1;
        if let Some((l, k)) = prime_power(q) {
            if l % 2 == 1 && k.is_power_of_two() && q >= 5 {
                prim.push(Family::Psl(2, q as u64));
            }
        }
    }
    for l in 3..64u32 {
        if is_prime(l as u128) && (1u128 << l) - 1 == p {
            prim.push(Family::Psl(2, 1 << l));
        }
    }
    for q in 2..=(2 * p + 2) {
        let Some((l, k)) = prime_power(q) else { continue };
        // PSp(2n, q), p = (q^n + 1)/2, n = 2^s with s >= 1, q = l^(2^k), l odd
        if l % 2 == 1 && k.is_power_of_two() {
            let mut n = 2u32;
            while q.pow(n) + 1 < 2 * p {
                n *= 2;
            }
            if q.pow(n) + 1 == 2 * p {
                prim.push(Family::Psp(2 * n, q as u64));
            }
        }
        for n in 2..40u32 {
            let Some(qn) = q.checked_pow(n) else { break };
            if qn > (q + 1) * (p + 1) * q {
                break;
            }
            if is_prime(n as u128) && n % 2 == 1 && (qn + 1) % (q + 1) == 0 && (qn + 1) / (q + 1) == p {
                prim.push(Family::Psu(n, q as u64));
            }
            if (qn - 1) / (q - 1) == p {
                let ok = if n == 2 { q % 2 == 0 } else { q % 2 == 1 || (n, q) == (3, 2) };
                if ok {
                    imprim.push(Family::Psl(n, q as u64));
                }
            }
        }
    }
    for n in 3..40u32 {
        if is_prime(n as u128) && 3u128.checked_pow(n).map_or(false, |t| (t - 1) / 2 == p) {
            prim.push(Family::Psp(2 * n, 3));
        }
    }
    match p {
        3 => prim.push(Family::Named("ALT-6")),
        7 => prim.push(Family::Named("CC-3-2")),
        11 => prim.push(Family::Named("SPOR-M12")),
        23 => prim.extend(["SPOR-CO2", "SPOR-CO3", "SPOR-M24"].map(Family::Named)),
        _ => {}
    }
    (prim, imprim)
}

// parameter points that land on a non-simple group (PSU(3,2) at p = 3) drop out
fn resolve(f: &Family) -> Option<SimpleGroupId> {
    match *f {
        Family::Alt(n) => SimpleGroupId::alt(n).ok(),
        Family::Psl(n, q) => SimpleGroupId::psl(n, q).ok(),
        Family::Psp(n, q) => SimpleGroupId::psp(n, q).ok(),
        Family::Psu(n, q) => SimpleGroupId::psu(n, q).ok(),
        Family::Named(c) => SimpleGroupId::from_code(c).ok(),
    }
    .map(|g| g.canonical())
}

/// Primitive and imprimitive socle codes for `p` from the brute-force scan.
pub fn socle_oracle(p: u64) -> (BTreeSet<String>, BTreeSet<String>) {
    let (a, b) = brute_force(p as u128);
    let codes = |v: Vec<Family>| v.iter().filter_map(resolve).map(|g| g.code()).collect();
    (codes(a), codes(b))
}

pub fn socle_production(p: u64) -> (BTreeSet<String>, BTreeSet<String>) {
    let c = nonabelian_socles(p, SocleOptions::default()).unwrap();
    let pick = |k| c.iter().filter(|x| x.kind == k).map(|x| x.group.canonical().code()).collect();
    (pick(SocleKind::Primitive), pick(SocleKind::Imprimitive))
}


pub fn cyclo(modulus: u32) -> impl Strategy<Value = CycloNumber> {
    let len = modulus.max(2) as usize;
    prop::collection::vec((-4i64..=4, 1i64..=3), 1..=len.min(6)).prop_flat_map(move |cs| {
        prop::collection::vec(0..len as i64, cs.len()).prop_map(move |ks| {
            CycloNumber::from_terms(modulus, ks.into_iter().zip(cs.iter().map(|&(a, b)| Q::new(a.into(), b.into()))))
        })
    })
}

pub fn triple() -> impl Strategy<Value = (CycloNumber, CycloNumber, CycloNumber)> {
    (1u32..=60).prop_flat_map(|m| (cyclo(m), cyclo(m), cyclo(m)))
}

pub fn field_axioms((a, b, c): (CycloNumber, CycloNumber, CycloNumber)) -> Result<(), TestCaseError> {
    prop_assert_eq!(&a + &b, &b + &a);
    prop_assert_eq!(&a * &b, &b * &a);
    prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    prop_assert!((&a - &a).is_zero());
    if !a.is_zero() {
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }
    Ok(())
}

pub fn factorization_round_trip(n: u64) -> Result<(), TestCaseError> {
    let f = FactoredInteger::from_u64(n).unwrap();
    prop_assert_eq!(f.value(), BigUint::from(n));
    let mut prod = BigUint::one();
    for (p, e) in f.factors() {
        prop_assert!(lingroups::arith::is_prime(p));
        prod *= p.pow(*e);
    }
    prop_assert_eq!(prod, BigUint::from(n));
    let back: FactoredInteger = f.to_string().parse().unwrap();
    prop_assert_eq!(back, f.clone());
    let dec: FactoredInteger = n.to_string().parse().unwrap();
    prop_assert_eq!(dec, f);
    Ok(())
}

/// Every group of order up to 10^18 plus the sporadics, and their aliases.
pub fn catalog_codes_round_trip() -> Result<usize, String> {
    let mut groups = enumerate_up_to(&BigUint::from(10u64).pow(18), false).map_err(|e| e.to_string())?;
    groups.extend(Sporadic::all().map(SimpleGroupId::sporadic));
    for g in &groups {
        let back = SimpleGroupId::from_code(&g.code()).map_err(|e| format!("{}: {e}", g.code()))?;
        if &back != g {
            return Err(format!("{} parsed as {}", g.code(), back.code()));
        }
        for a in g.aliases() {
            let canon = SimpleGroupId::from_code(&a.code()).map_err(|e| e.to_string())?.canonical();
            if canon != g.canonical() || a.order_value() != g.order_value() {
                return Err(format!("alias {} of {}", a.code(), g.code()));
            }
        }
    }
    Ok(groups.len())
}

pub fn builtin_tables_are_orthogonal() -> Result<(), String> {
    for name in builtin_names() {
        let t = builtin_table(name).map_err(|e| e.to_string())?;
        t.validate().map_err(|e| format!("{name}: {e}"))?;
        if !t.rows_orthonormal() || !t.columns_orthogonal() {
            return Err(format!("{name} fails orthogonality"));
        }
        let mut total = BigUint::zero();
        for r in &t.irreducibles {
            let d = r[0].to_rational().filter(|d| d.is_integer() && d.is_positive()).ok_or(format!("{name}: degree"))?;
            total += BigUint::try_from(d.to_integer().pow(2)).unwrap();
        }
        if total != BigUint::from(t.order) {
            return Err(format!("{name}: sum of squared degrees"));
        }
    }
    Ok(())
}
