//! Primality testing and factorization of machine and arbitrary-size integers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const SMALL_PRIMES: [u64; 20] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
];

/// Miller-Rabin with the first 13 prime bases is exact below this bound.
pub const DETERMINISTIC_LIMIT: u128 = 3_317_044_064_679_887_385_961_981;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

fn strong_probable_prime(n: u64, a: u64) -> bool {
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES[..12] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    SMALL_PRIMES[..12].iter().all(|&a| strong_probable_prime(n, a))
}

fn strong_probable_prime_big(n: &BigUint, a: &BigUint) -> bool {
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == nm1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == nm1 {
            return true;
        }
    }
    false
}

/// Exact below [`DETERMINISTIC_LIMIT`]; above it the answer is a strong
/// probable-prime verdict over twenty bases.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(m) = n.to_u64() {
        return is_prime_u64(m);
    }
    for &p in &SMALL_PRIMES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let bases = if n.to_u128().map_or(false, |v| v < DETERMINISTIC_LIMIT) {
        &SMALL_PRIMES[..13]
    } else {
        &SMALL_PRIMES[..]
    };
    bases
        .iter()
        .all(|&a| strong_probable_prime_big(n, &BigUint::from(a)))
}

fn pollard_brent_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, m) = (2u64, 128usize);
        let (mut g, mut r, mut q) = (1u64, 1usize, 1u64);
        let (mut x, mut ys) = (0u64, 0u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn pollard_brent_big(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
        let m = 128usize;
        let mut y = BigUint::from(2u32);
        let (mut g, mut r, mut q) = (one.clone(), 1usize, one.clone());
        let (mut x, mut ys) = (BigUint::zero(), BigUint::zero());
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    q = (&q * diff(&x, &y)) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                g = diff(&x, &ys).gcd(n);
                if g > one {
                    break;
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

fn split_u64(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent_u64(n);
    split_u64(d, out);
    split_u64(n / d, out);
}

fn split_big(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if let Some(m) = n.to_u64() {
        let mut small = Vec::new();
        split_u64(m, &mut small);
        out.extend(small.into_iter().map(BigUint::from));
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    let d = pollard_brent_big(&n);
    let rest = &n / &d;
    split_big(d, out);
    split_big(rest, out);
}

fn collect<T: Ord + Clone>(mut ps: Vec<T>) -> Vec<(T, u32)> {
    ps.sort();
    let mut out: Vec<(T, u32)> = Vec::new();
    for p in ps {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// Prime factorization by trial division up to 1000, then Pollard-Brent.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut ps = Vec::new();
    if n == 0 {
        return Vec::new();
    }
    let mut p = 2u64;
    while p < 1000 && p * p <= n {
        while n % p == 0 {
            ps.push(p);
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    split_u64(n, &mut ps);
    collect(ps)
}

pub fn factor_big(n: &BigUint) -> Vec<(BigUint, u32)> {
    if n.is_zero() {
        return Vec::new();
    }
    let mut n = n.clone();
    let mut ps = Vec::new();
    for p in 2u32..1000 {
        while (&n % p).is_zero() {
            ps.push(BigUint::from(p));
            n /= p;
        }
    }
    split_big(n, &mut ps);
    collect(ps)
}

/// `Some((p, k))` when `n = p^k` with `p` prime and `k >= 1`.
pub fn prime_power_u64(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let f = factor_u64(n);
    if f.len() == 1 {
        Some(f[0])
    } else {
        None
    }
}

pub fn is_prime_power_u64(n: u64) -> bool {
    prime_power_u64(n).is_some()
}

/// Ascending primes up to and including `limit`.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (0..=n).filter(|&k| sieve[k]).map(|k| k as u64).collect()
}

/// Ascending prime powers `q = l^k` (k >= 1) up to and including `limit`.
pub fn prime_powers_up_to(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for p in primes_up_to(limit) {
        let mut q = p;
        loop {
            out.push(q);
            match q.checked_mul(p) {
                Some(next) if next <= limit => q = next,
                _ => break,
            }
        }
    }
    out.sort_unstable();
    out
}

/// Smallest positive `g` generating the multiplicative group mod prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let qs: Vec<u64> = factor_u64(p - 1).into_iter().map(|(q, _)| q).collect();
    (2..p)
        .find(|&g| qs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("a prime has a primitive root")
}

pub fn is_primitive_root(m: u64, p: u64) -> bool {
    if p == 2 {
        return m % 2 == 1;
    }
    if m % p == 0 {
        return false;
    }
    factor_u64(p - 1)
        .into_iter()
        .all(|(q, _)| pow_mod(m, (p - 1) / q, p) != 1)
}

pub fn legendre(a: i64, p: u64) -> i32 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factor_u64(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factor_u64(n) {
        let cur = ds.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            ds.extend(cur.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}
