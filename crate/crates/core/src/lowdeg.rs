//! Quasisimple groups with an irreducible complex representation of degree
//! d <= 2r for a prime r dividing the order, queried either by group or by
//! degree, plus the minimal projective degree of PSL(n, q).
//!
//! The two query directions are computed independently: by group, the
//! family parameters are read off the group's names; by degree, they are
//! solved from the prime r. Agreement between them is a tested invariant.

use std::collections::{BTreeMap, HashMap};
use std::io::Read;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::arith::primes::{is_prime_u64, prime_power_u64, primes_up_to};
use crate::catalog::{listing_key, CatalogError, LieType, SimpleGroupId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LowDegError {
    #[error("n must be at least 3 (got {0})")]
    RankTooSmall(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("degree must be at least 2")]
    DegreeTooSmall,
    #[error("line {line}: {message}")]
    Data { line: u64, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepDegreeRecord {
    pub group: SimpleGroupId,
    pub r: u64,
    pub d: u64,
    /// Number of representations when stated; never inferred.
    pub count: Option<u64>,
    /// Clause tags that produced the triple, sorted.
    pub clauses: Vec<String>,
}

struct Exception {
    clause: String,
    group: SimpleGroupId,
    r: u64,
    d: u64,
    count: Option<u64>,
}

const EXCEPTIONS_CSV: &str = include_str!("../data/tz_exceptions.csv");

fn exceptions() -> &'static [Exception] {
    static CELL: OnceLock<Vec<Exception>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(EXCEPTIONS_CSV.as_bytes());
        rdr.records()
            .map(|rec| {
                let rec = rec.expect("embedded exception table is well formed");
                let num = |i: usize| rec[i].parse::<u64>().expect("numeric field");
                Exception {
                    clause: rec[0].to_string(),
                    group: SimpleGroupId::from_code(&rec[1]).expect("known group code").canonical(),
                    r: num(2),
                    d: num(3),
                    count: (!rec[4].is_empty()).then(|| num(4)),
                }
            })
            .collect()
    })
}

/// Raw (clause, group, r, d, count) before merging.
type Raw = (&'static str, SimpleGroupId, u64, u64, Option<u64>);

fn pow_u128(b: u64, e: u64) -> Option<u128> {
    (b as u128).checked_pow(u32::try_from(e).ok()?)
}

fn to_prime(x: u128) -> Option<u64> {
    u64::try_from(x).ok().filter(|&r| is_prime_u64(r))
}

fn odd_prime(n: u64) -> bool {
    n % 2 == 1 && is_prime_u64(n)
}

/// Whether q is a prime or q = b^n with n an odd prime.
fn prime_or_odd_prime_power_of(q: u64, b: u64) -> bool {
    match prime_power_u64(q) {
        Some((_, 1)) => true,
        Some((l, n)) => l == b && odd_prime(n as u64),
        None => false,
    }
}

fn degrees_psl2(clause: &str, r: u64) -> Vec<(u64, Option<u64>)> {
    let d: Vec<u64> = match clause {
        "2(b)" => vec![r, (r - 1) / 2, (r + 1) / 2, r - 1, r + 1],
        "2(c)" => vec![r, r + 1, 2 * r],
        "2(d)" => vec![2 * r],
        "2(e)" => vec![r - 1, r, 2 * r - 2, 2 * r - 1, 2 * r],
        "2(f)" => vec![2 * r - 1, 2 * r],
        _ => unreachable!(),
    };
    d.into_iter().map(|d| (d, None)).collect()
}

/// 2(a): r = q + 1 gives degrees r, r-1, r-2; r = q - 1 gives r, r+1, r+2.
fn degrees_2a(q: u64, r: u64) -> Vec<(u64, Option<u64>)> {
    let ds = if r == q + 1 { [r, r - 1, r - 2] } else { [r, r + 1, r + 2] };
    ds.into_iter().map(|d| (d, None)).collect()
}

fn emit(out: &mut Vec<Raw>, clause: &'static str, g: Result<SimpleGroupId, CatalogError>, r: u64, ds: Vec<(u64, Option<u64>)>) {
    if let Ok(g) = g {
        for (d, count) in ds {
            out.push((clause, g.clone(), r, d, count));
        }
    }
}

fn merge(raw: Vec<Raw>) -> Vec<RepDegreeRecord> {
    let mut by_key: BTreeMap<(SimpleGroupId, u64, u64), Vec<(&str, Option<u64>)>> = BTreeMap::new();
    for (clause, g, r, d, count) in raw {
        let g = g.canonical();
        if d > 2 * r || !divides_order(&g, r) {
            continue;
        }
        by_key.entry((g, r, d)).or_default().push((clause, count));
    }
    by_key
        .into_iter()
        .map(|((group, r, d), mut src)| {
            src.sort();
            src.dedup();
            let count = src.iter().find_map(|(_, c)| *c);
            let mut clauses: Vec<String> = src.iter().map(|(c, _)| c.to_string()).collect();
            clauses.dedup();
            RepDegreeRecord { group, r, d, count, clauses }
        })
        .collect()
}

fn divides_order(g: &SimpleGroupId, r: u64) -> bool {
    g.order().exponent_of_u64(r) > 0
}

/// Every triple of the classification whose group is `l` (any name of it).
pub fn tz_triples_for_group(l: &SimpleGroupId) -> Vec<RepDegreeRecord> {
    let mut raw: Vec<Raw> = Vec::new();
    let canon = l.canonical();
    for alias in canon.aliases() {
        match alias {
            SimpleGroupId::Alt { n } if n >= 9 => {
                let n = n as u64;
                for r in primes_up_to(n) {
                    if 2 * r + 1 >= n {
                        raw.push(("1", alias.clone(), r, n - 1, None));
                    }
                }
            }
            SimpleGroupId::Lie { ty: LieType::A, rank: 1, q } if !matches!(q, 5 | 7 | 9) => {
                let g = Ok(alias.clone());
                if q.is_power_of_two() && q >= 8 {
                    for r in [q - 1, q + 1] {
                        if is_prime_u64(r) {
                            emit(&mut raw, "2(a)", g.clone(), r, degrees_2a(q, r));
                        }
                    }
                }
                let prime_q = prime_power_u64(q).map_or(false, |(_, e)| e == 1);
                if prime_q && q >= 11 {
                    emit(&mut raw, "2(b)", g.clone(), q, degrees_psl2("2(b)", q));
                }
                if q >= 11 && prime_or_odd_prime_power_of(q, 3) && q % 2 == 1 && is_prime_u64((q - 1) / 2) {
                    emit(&mut raw, "2(c)", g.clone(), (q - 1) / 2, degrees_psl2("2(c)", (q - 1) / 2));
                }
                if q >= 13 && prime_or_odd_prime_power_of(q, 5) && q % 4 == 1 && is_prime_u64((q - 1) / 4) {
                    emit(&mut raw, "2(d)", g.clone(), (q - 1) / 4, degrees_psl2("2(d)", (q - 1) / 4));
                }
                if q >= 13 && q % 2 == 1 && is_prime_u64((q + 1) / 2) {
                    emit(&mut raw, "2(e)", g.clone(), (q + 1) / 2, degrees_psl2("2(e)", (q + 1) / 2));
                }
                if q >= 11 && prime_or_odd_prime_power_of(q, 3) && q % 4 == 3 && is_prime_u64((q + 1) / 4) {
                    emit(&mut raw, "2(f)", g.clone(), (q + 1) / 4, degrees_psl2("2(f)", (q + 1) / 4));
                }
            }
            SimpleGroupId::Lie { ty: LieType::A, rank, q } if rank >= 2 => {
                let n = rank as u64 + 1;
                if q == 2 && n >= 5 {
                    if let Some(d) = pow_u128(2, n).and_then(|v| u64::try_from(v - 2).ok()) {
                        for r in [pow_u128(2, n - 1), pow_u128(2, n)] {
                            if let Some(r) = r.and_then(|v| to_prime(v - 1)) {
                                raw.push(("3(a)", alias.clone(), r, d, Some(1)));
                            }
                        }
                    }
                }
                if q >= 3 && odd_prime(n) {
                    if let Some(r) = pow_u128(q, n).and_then(|v| to_prime((v - 1) / (q as u128 - 1))) {
                        raw.push(("3(b)", alias.clone(), r, r - 1, Some(1)));
                        raw.push(("3(b)", alias.clone(), r, r, Some(q - 2)));
                    }
                }
            }
            SimpleGroupId::Lie { ty: LieType::TwA, rank, q } if rank >= 2 => {
                let n = rank as u64 + 1;
                if q == 2 && odd_prime(n - 1) && n - 1 >= 5 {
                    if let Some(v) = pow_u128(2, n - 1).filter(|v| (v + 1) % 3 == 0) {
                        if let Some(r) = to_prime((v + 1) / 3) {
                            raw.push(("4(a)", alias.clone(), r, 2 * r - 1, Some(2)));
                            raw.push(("4(a)", alias.clone(), r, 2 * r, Some(1)));
                        }
                    }
                }
                if odd_prime(n) {
                    if let Some(r) = pow_u128(q, n).and_then(|v| to_prime((v + 1) / (q as u128 + 1))) {
                        raw.push(("4(b)", alias.clone(), r, r - 1, Some(1)));
                        raw.push(("4(b)", alias.clone(), r, r, Some(q)));
                    }
                }
            }
            SimpleGroupId::Lie { ty: LieType::C, rank, q } => {
                let n = rank as u64;
                let three_or_five = |b: u64, num: fn(u128) -> Option<u128>| {
                    (q == b && odd_prime(n)).then(|| pow_u128(b, n).and_then(num).and_then(to_prime)).flatten()
                };
                if let Some(r) = three_or_five(3, |v| Some((v - 1) / 2)) {
                    raw.push(("5(a)", alias.clone(), r, r, Some(2)));
                    raw.push(("5(a)", alias.clone(), r, r + 1, Some(2)));
                }
                if let Some(r) = three_or_five(3, |v| ((v + 1) % 4 == 0).then(|| (v + 1) / 4)) {
                    raw.push(("5(b)", alias.clone(), r, 2 * r - 2, Some(2)));
                    raw.push(("5(b)", alias.clone(), r, 2 * r, Some(2)));
                }
                if let Some(r) = three_or_five(5, |v| Some((v - 1) / 4)) {
                    raw.push(("5(c)", alias.clone(), r, 2 * r, Some(2)));
                }
                if n.is_power_of_two() && q % 2 == 1 {
                    if let Some(r) = pow_u128(q, n).and_then(|v| to_prime((v + 1) / 2)) {
                        raw.push(("5(d)", alias.clone(), r, r - 1, Some(2)));
                        raw.push(("5(d)", alias.clone(), r, r, Some(2)));
                    }
                }
            }
            _ => {}
        }
    }
    for e in exceptions().iter().filter(|e| e.group == canon) {
        raw.push((clause_static(&e.clause), e.group.clone(), e.r, e.d, e.count));
    }
    let mut out = merge(raw);
    out.sort_by_key(|rec| (rec.r, rec.d));
    out
}

fn clause_static(tag: &str) -> &'static str {
    exceptions().iter().find(|e| e.clause == tag).map(|e| e.clause.as_str()).expect("tag from the table")
}

/// Integer n-th root when exact.
fn exact_root(x: u128, n: u32) -> Option<u64> {
    let guess = (x as f64).powf(1.0 / n as f64).round() as u64;
    (guess.saturating_sub(1)..=guess + 1).find(|&c| (c as u128).checked_pow(n) == Some(x))
}

/// Values (q^n - 1)/(q - 1) and (q^n + 1)/(q + 1), n an odd prime, up to `limit`.
fn cyclotomic_values(limit: u128) -> HashMap<u128, Vec<(&'static str, u64, u64)>> {
    let mut m: HashMap<u128, Vec<_>> = HashMap::new();
    let mut n = 3u64;
    while pow_u128(2, n - 1).map_or(false, |v| v <= 4 * limit) {
        if odd_prime(n) {
            let mut q = 2u64;
            while let Some(v) = pow_u128(q, n) {
                let minus = (v - 1) / (q as u128 - 1);
                let plus = (v + 1) / (q as u128 + 1);
                if plus > limit {
                    break;
                }
                if prime_power_u64(q).is_some() {
                    if q >= 3 && minus <= limit {
                        m.entry(minus).or_default().push(("3(b)", n, q));
                    }
                    m.entry(plus).or_default().push(("4(b)", n, q));
                }
                q += 1;
            }
        }
        n += 1;
    }
    m
}

/// Every triple of the classification with degree `d`.
pub fn tz_groups_for_degree(d: u64) -> Result<Vec<RepDegreeRecord>, LowDegError> {
    if d < 2 {
        return Err(LowDegError::DegreeTooSmall);
    }
    let mut raw: Vec<Raw> = Vec::new();
    let in_set = |ds: &[(u64, Option<u64>)]| ds.iter().find(|(x, _)| *x == d).map(|(_, c)| *c);
    let n = d + 1;
    if n >= 9 {
        if let Ok(nn) = u32::try_from(n) {
            for r in primes_up_to(n) {
                if 2 * r + 1 >= n {
                    raw.push(("1", SimpleGroupId::Alt { n: nn }, r, d, None));
                }
            }
        }
    }
    // every d-expression is at least (r - 1)/2
    let r_max = 2 * d + 1;
    let cyc = cyclotomic_values(r_max as u128);
    for r in primes_up_to(r_max).into_iter().filter(|&r| 2 * r >= d) {
        let psl2 = |q: u64| SimpleGroupId::psl(2, q);
        let ok_q = |q: u64| !matches!(q, 5 | 7 | 9);
        for q in [r - 1, r + 1] {
            if q >= 8 && q.is_power_of_two() {
                if let Some(c) = in_set(&degrees_2a(q, r)) {
                    raw.push(("2(a)", psl2(q).unwrap(), r, d, c));
                }
            }
        }
        let fams: [(&'static str, u64, bool); 5] = [
            ("2(b)", r, r >= 11),
            ("2(c)", 2 * r + 1, 2 * r + 1 >= 11 && prime_or_odd_prime_power_of(2 * r + 1, 3)),
            ("2(d)", 4 * r + 1, 4 * r + 1 >= 13 && prime_or_odd_prime_power_of(4 * r + 1, 5)),
            ("2(e)", 2 * r - 1, 2 * r - 1 >= 13),
            ("2(f)", 4 * r - 1, 4 * r - 1 >= 11 && prime_or_odd_prime_power_of(4 * r - 1, 3)),
        ];
        for (tag, q, cond) in fams {
            if cond && ok_q(q) {
                if let (Ok(g), Some(c)) = (psl2(q), in_set(&degrees_psl2(tag, r))) {
                    raw.push((tag, g, r, d, c));
                }
            }
        }
        if (r + 1).is_power_of_two() {
            let k = (r + 1).trailing_zeros() as u64;
            for n in [k + 1, k] {
                if n >= 5 && pow_u128(2, n).map_or(false, |v| v - 2 == d as u128) {
                    emit(&mut raw, "3(a)", SimpleGroupId::psl(n as u32, 2), r, vec![(d, Some(1))]);
                }
            }
        }
        for &(tag, n, q) in cyc.get(&(r as u128)).into_iter().flatten() {
            let (g, ds) = if tag == "3(b)" {
                (SimpleGroupId::psl(n as u32, q), vec![(r - 1, Some(1)), (r, Some(q - 2))])
            } else {
                (SimpleGroupId::psu(n as u32, q), vec![(r - 1, Some(1)), (r, Some(q))])
            };
            if let Some(c) = in_set(&ds) {
                emit(&mut raw, tag, g, r, vec![(d, c)]);
            }
        }
        let log_exact = |x: u128, b: u64| -> Option<u64> {
            let mut e = 0u64;
            let mut v = 1u128;
            while v < x {
                v = v.checked_mul(b as u128)?;
                e += 1;
            }
            (v == x).then_some(e)
        };
        let r128 = r as u128;
        if let Some(m) = log_exact(3 * r128 - 1, 2) {
            let n = m + 1;
            if m >= 5 && odd_prime(m) {
                if let Some(c) = in_set(&[(2 * r - 1, Some(2)), (2 * r, Some(1))]) {
                    emit(&mut raw, "4(a)", SimpleGroupId::psu(n as u32, 2), r, vec![(d, c)]);
                }
            }
        }
        let symp = |tag: &'static str, x: u128, b: u64, ds: Vec<(u64, Option<u64>)>, raw: &mut Vec<Raw>| {
            if let Some(n) = log_exact(x, b).filter(|&n| odd_prime(n)) {
                if let Some(c) = in_set(&ds) {
                    emit(raw, tag, SimpleGroupId::psp(2 * n as u32, b), r, vec![(d, c)]);
                }
            }
        };
        symp("5(a)", 2 * r128 + 1, 3, vec![(r, Some(2)), (r + 1, Some(2))], &mut raw);
        symp("5(b)", 4 * r128 - 1, 3, vec![(2 * r - 2, Some(2)), (2 * r, Some(2))], &mut raw);
        symp("5(c)", 4 * r128 + 1, 5, vec![(2 * r, Some(2))], &mut raw);
        let mut n = 2u32;
        while 3u128.checked_pow(n).map_or(false, |v| v <= 2 * r128 - 1) {
            if let Some(q) = exact_root(2 * r128 - 1, n).filter(|&q| prime_power_u64(q).is_some()) {
                if let Some(c) = in_set(&[(r - 1, Some(2)), (r, Some(2))]) {
                    emit(&mut raw, "5(d)", SimpleGroupId::psp(2 * n, q), r, vec![(d, c)]);
                }
            }
            n *= 2;
        }
    }
    for e in exceptions().iter().filter(|e| e.d == d) {
        raw.push((clause_static(&e.clause), e.group.clone(), e.r, e.d, e.count));
    }
    let mut out = merge(raw);
    out.sort_by_cached_key(|rec| (listing_key(&rec.group), rec.r));
    Ok(out)
}

/// Smallest degree d > 1 of a nontrivial projective representation of
/// PSL(n, q) in characteristic coprime to q.
pub fn min_degree_psl(n: u64, q: u64) -> Result<BigUint, LowDegError> {
    if n < 3 {
        return Err(LowDegError::RankTooSmall(n));
    }
    if prime_power_u64(q).is_none() {
        return Err(LowDegError::NotPrimePower(q));
    }
    Ok(match (n, q) {
        (3, 2) => BigUint::from(2u32),
        (3, 4) => BigUint::from(4u32),
        (4, 2) => BigUint::from(7u32),
        (4, 3) => BigUint::from(26u32),
        _ => {
            let qb = BigUint::from(q);
            let e = u32::try_from(n).map_err(|_| LowDegError::RankTooSmall(n))?;
            (qb.pow(e) - BigUint::one()) / (qb - BigUint::one()) - BigUint::from(n)
        }
    })
}

/// Row of an externally supplied degree table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExternalDegree {
    pub group: SimpleGroupId,
    /// m for the m-fold cover; 1 is the simple group itself.
    pub cover: u64,
    pub degree: u64,
    pub count: Option<u64>,
    /// 0 for complex representations.
    pub characteristic: u64,
    pub source: String,
}

pub const EXTERNAL_HEADER: [&str; 6] = ["group_code", "cover", "degree", "count", "characteristic", "source"];

pub fn load_external_degrees<R: Read>(input: R) -> Result<Vec<ExternalDegree>, LowDegError> {
    let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(input);
    let data_err = |line: u64, message: String| LowDegError::Data { line, message };
    let header = rdr.headers().map_err(|e| data_err(1, e.to_string()))?.clone();
    if header.iter().ne(EXTERNAL_HEADER) {
        return Err(data_err(1, format!("expected header {}", EXTERNAL_HEADER.join(","))));
    }
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| data_err(e.position().map_or(0, |p| p.line()), e.to_string()))?;
        let line = rec.position().map_or(0, |p| p.line());
        let num = |i: usize| {
            rec[i].parse::<u64>().map_err(|_| data_err(line, format!("{}: not a number: {:?}", EXTERNAL_HEADER[i], &rec[i])))
        };
        let group = SimpleGroupId::from_code(&rec[0])
            .map_err(|e| data_err(line, format!("unknown group code {:?}: {e}", &rec[0])))?;
        let cover = num(1)?;
        if cover == 0 {
            return Err(data_err(line, "cover must be positive".into()));
        }
        out.push(ExternalDegree {
            group,
            cover,
            degree: num(2)?,
            count: if rec[3].is_empty() { None } else { Some(num(3)?) },
            characteristic: num(4)?,
            source: rec[5].to_string(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Sporadic;

    fn pairs(g: &SimpleGroupId) -> Vec<(u64, u64)> {
        tz_triples_for_group(g).into_iter().map(|r| (r.r, r.d)).collect()
    }

    #[test]
    fn a5_thirteen_pairs() {
        let got = pairs(&SimpleGroupId::Alt { n: 5 });
        let want = [
            (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4), (3, 5), (3, 6), (5, 2), (5, 3), (5, 4), (5, 5), (5, 6),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn suzuki_sporadic() {
        let recs = tz_triples_for_group(&SimpleGroupId::Sporadic(Sporadic::Suz));
        assert_eq!(recs.iter().map(|r| (r.r, r.d, r.count)).collect::<Vec<_>>(), [
            (7, 12, Some(2)),
            (11, 12, Some(2)),
            (13, 12, Some(2))
        ]);
    }

    #[test]
    fn psl2_17() {
        let got = pairs(&SimpleGroupId::psl(2, 17).unwrap());
        assert_eq!(got, [(17, 8), (17, 9), (17, 16), (17, 17), (17, 18)]);
        let recs = tz_triples_for_group(&SimpleGroupId::psl(2, 17).unwrap());
        assert!(recs.iter().all(|r| r.clauses == ["2(b)"]));
    }

    #[test]
    fn degree_twelve() {
        let recs = tz_groups_for_degree(12).unwrap();
        let has = |code: &str, r: u64| recs.iter().any(|x| x.group.code() == code && x.r == r);
        for r in [7, 11, 13] {
            assert!(has("SPOR-SUZ", r));
            assert!(has("ALT-13", r));
        }
        assert!(has("G2-4", 7) && has("G2-4", 13));
        let l33 = recs.iter().find(|x| x.group.code() == "CA-2-3").unwrap();
        assert_eq!((l33.r, l33.count), (13, Some(1)));
        assert_eq!(l33.clauses, ["3(b)", "6(d)"]);
    }

    #[test]
    fn degree_two_is_only_a5() {
        let recs = tz_groups_for_degree(2).unwrap();
        assert!(!recs.is_empty());
        assert!(recs.iter().all(|r| r.group == SimpleGroupId::Alt { n: 5 }));
    }

    #[test]
    fn degree_26() {
        let recs = tz_groups_for_degree(26).unwrap();
        let find = |code: &str| recs.iter().find(|x| x.group.code() == code).map(|x| (x.r, x.count));
        assert_eq!(find("T3D4-2"), Some((13, Some(1))));
        assert_eq!(find("TITS"), Some((13, Some(2))));
        assert_eq!(find("CA-3-3"), Some((13, Some(2))));
        assert_eq!(find("CA-2-3"), Some((13, Some(3))));
    }

    #[test]
    fn hypotheses_hold() {
        for d in 2..=60 {
            for rec in tz_groups_for_degree(d).unwrap() {
                assert!(rec.d <= 2 * rec.r);
                assert!(rec.group.order().exponent_of_u64(rec.r) > 0, "{:?}", rec);
            }
        }
    }

    #[test]
    fn min_degree() {
        let v = |n, q| min_degree_psl(n, q).unwrap();
        assert_eq!(v(3, 2), BigUint::from(2u32));
        assert_eq!(v(3, 4), BigUint::from(4u32));
        assert_eq!(v(4, 2), BigUint::from(7u32));
        assert_eq!(v(4, 3), BigUint::from(26u32));
        assert_eq!(v(3, 3), BigUint::from(10u32));
        assert_eq!(v(5, 2), BigUint::from(26u32));
        assert_eq!(min_degree_psl(2, 7), Err(LowDegError::RankTooSmall(2)));
        assert_eq!(min_degree_psl(3, 6), Err(LowDegError::NotPrimePower(6)));
    }

    #[test]
    fn external_loader() {
        let ok = "group_code,cover,degree,count,characteristic,source\n# comment\nALT-5,2,2,2,0,atlas\nSPOR-M11,1,10,,0,x\n";
        let rows = load_external_degrees(ok.as_bytes()).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[1].count, None);
        let bad = "group_code,cover,degree,count,characteristic,source\nALT-5,1,4,1,0,a\nFOO-3,1,2,1,0,b\n";
        match load_external_degrees(bad.as_bytes()) {
            Err(LowDegError::Data { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(load_external_degrees("a,b\n".as_bytes()), Err(LowDegError::Data { line: 1, .. })));
    }
}
