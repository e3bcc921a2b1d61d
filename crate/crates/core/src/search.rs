//! Finding simple groups by order: enumeration below a bound and search for
//! groups whose order divides a given integer.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::arith::primes::{is_prime_u64, prime_power_u64, primes_up_to};
use crate::arith::FactoredInteger;
use crate::catalog::{listing_key, LieType, SimpleGroupId, Sporadic, Validation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("listing cyclic groups needs a bound below 10^9")]
    CyclicBoundTooLarge,
}

#[derive(Clone, Debug)]
pub struct SearchQuery {
    pub divisor_target: FactoredInteger,
    pub max_order: Option<BigUint>,
    pub include_cyclic: bool,
}

impl SearchQuery {
    pub fn new(divisor_target: FactoredInteger) -> Self {
        Self { divisor_target, max_order: None, include_cyclic: false }
    }
}

const CLASSICAL: [LieType; 6] =
    [LieType::A, LieType::TwA, LieType::B, LieType::C, LieType::D, LieType::TwD];
const EXCEPTIONAL: [LieType; 10] = [
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

fn min_rank(ty: LieType) -> u32 {
    match ty {
        LieType::A => 1,
        LieType::TwA | LieType::B | LieType::C => 2,
        LieType::D | LieType::TwD => 4,
        _ => 0,
    }
}

/// Smallest field size admitted by the type.
fn smallest_q(ty: LieType) -> u64 {
    match ty {
        LieType::Ree2G2 => 3,
        LieType::B => 3,
        _ => 2,
    }
}

fn sorted(set: BTreeSet<SimpleGroupId>) -> Vec<SimpleGroupId> {
    let mut v: Vec<_> = set.into_iter().collect();
    v.sort_by_cached_key(listing_key);
    v
}

fn sporadic_like() -> impl Iterator<Item = SimpleGroupId> {
    Sporadic::all().map(SimpleGroupId::Sporadic).chain([SimpleGroupId::Tits])
}

/// Every simple group (up to isomorphism) of order at most `bound`, sorted
/// by order and then code.
pub fn enumerate_up_to(bound: &BigUint, include_cyclic: bool) -> Result<Vec<SimpleGroupId>, SearchError> {
    let mut found = BTreeSet::new();
    if include_cyclic {
        let b = bound.to_u64().filter(|&b| b < 1_000_000_000).ok_or(SearchError::CyclicBoundTooLarge)?;
        found.extend(primes_up_to(b).into_iter().map(|p| SimpleGroupId::Cyclic { p }));
    }
    let mut n = 5;
    loop {
        let a = SimpleGroupId::Alt { n };
        if &a.order_value() > bound {
            break;
        }
        found.insert(a);
        n += 1;
    }
    for ty in CLASSICAL.into_iter().chain(EXCEPTIONAL) {
        let mut rank = min_rank(ty);
        loop {
            let Ok(first) = SimpleGroupId::lie_with(ty, rank, smallest_q(ty), Validation::AllowNonSimple) else {
                break;
            };
            if &first.order_value() > bound {
                break;
            }
            let mut q = smallest_q(ty);
            loop {
                if let Ok(g) = SimpleGroupId::lie_with(ty, rank, q, Validation::AllowNonSimple) {
                    if &g.order_value() > bound {
                        break;
                    }
                    if g.is_simple() {
                        found.insert(g.canonical());
                    }
                }
                q += 1;
                while prime_power_u64(q).is_none() {
                    q += 1;
                }
            }
            if ty_has_fixed_rank(ty) {
                break;
            }
            rank += 1;
        }
    }
    found.extend(sporadic_like().filter(|g| &g.order_value() <= bound));
    Ok(sorted(found))
}

fn ty_has_fixed_rank(ty: LieType) -> bool {
    !CLASSICAL.contains(&ty)
}

/// Simple groups whose order divides the target, optionally bounded.
pub fn groups_with_order_dividing(query: &SearchQuery) -> Vec<SimpleGroupId> {
    let target = &query.divisor_target;
    let mut found = BTreeSet::new();
    let fits = |g: &SimpleGroupId| {
        query.max_order.as_ref().map_or(true, |m| &g.order_value() <= m) && g.order().divides(target)
    };
    if query.include_cyclic {
        for p in target.primes() {
            if let Some(p) = p.to_u64().filter(|&p| is_prime_u64(p)) {
                found.insert(SimpleGroupId::Cyclic { p });
            }
        }
        found.retain(|g| fits(g));
    }
    // n!/2 | N fails for all larger n once it fails for n
    let mut n = 5;
    while (SimpleGroupId::Alt { n }).order().divides(target) {
        let a = SimpleGroupId::Alt { n };
        if fits(&a) {
            found.insert(a);
        }
        n += 1;
    }
    // the characteristic divides the order exactly q^N times
    for (ell, e) in target.factors() {
        let Some(ell) = ell.to_u64() else { continue };
        let e = *e as u64;
        for ty in CLASSICAL.into_iter().chain(EXCEPTIONAL) {
            let mut rank = min_rank(ty);
            while ty.q_exponent(rank) <= e {
                let per_k = ty.q_exponent(rank);
                let mut k = 1u32;
                while k as u64 * per_k <= e {
                    let Some(q) = ell.checked_pow(k) else { break };
                    if let Ok(g) = SimpleGroupId::lie_with(ty, rank, q, Validation::AllowNonSimple) {
                        if g.is_simple() && fits(&g) {
                            found.insert(g.canonical());
                        }
                    }
                    k += 1;
                }
                if ty_has_fixed_rank(ty) {
                    break;
                }
                rank += 1;
            }
        }
    }
    found.extend(sporadic_like().filter(|g| fits(g)));
    sorted(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn codes(v: &[SimpleGroupId]) -> Vec<String> {
        v.iter().map(|g| g.code()).collect()
    }

    fn q(n: u64) -> SearchQuery {
        SearchQuery::new(FactoredInteger::from_u64(n).unwrap())
    }

    #[test]
    fn dividing_2520() {
        let got = groups_with_order_dividing(&q(2520));
        assert_eq!(codes(&got), ["ALT-5", "CA-1-7", "ALT-6", "CA-1-8", "ALT-7"]);
        assert_eq!(codes(&groups_with_order_dividing(&q(60))), ["ALT-5"]);
        assert!(groups_with_order_dividing(&q(1)).is_empty());
    }

    #[test]
    fn bounded_enumeration() {
        let b = |n: u64| enumerate_up_to(&BigUint::from(n), false).unwrap();
        assert!(b(59).is_empty());
        assert_eq!(codes(&b(360)), ["ALT-5", "CA-1-7", "ALT-6"]);
        assert_eq!(codes(&b(660)), ["ALT-5", "CA-1-7", "ALT-6", "CA-1-8", "CA-1-11"]);
    }

    #[test]
    fn cyclic_flag() {
        let mut query = q(60);
        query.include_cyclic = true;
        assert_eq!(codes(&groups_with_order_dividing(&query)), ["CYC-2", "CYC-3", "CYC-5", "ALT-5"]);
        let with = enumerate_up_to(&BigUint::from(10u32), true).unwrap();
        assert_eq!(codes(&with), ["CYC-2", "CYC-3", "CYC-5", "CYC-7"]);
    }

    #[test]
    fn monster_divisors_include_itself() {
        let m = SimpleGroupId::Sporadic(Sporadic::M);
        let got = groups_with_order_dividing(&SearchQuery::new(m.order()));
        assert!(got.contains(&m));
        assert!(got.contains(&SimpleGroupId::Sporadic(Sporadic::B)));
        assert!(got.iter().all(|g| g.order().divides(&m.order())));
    }
}
