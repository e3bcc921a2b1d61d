//! The extraspecial group <sigma, tau> of order p^3 in SL(p, C), its
//! normalizer generators f1, f2, f3, closure enumeration, and the p + 1
//! invariant polygons.

use std::collections::{HashSet, VecDeque};

use num_integer::Integer;
use thiserror::Error;

use crate::arith::primes::{divisors, is_prime_u64, is_primitive_root, legendre};
use crate::arith::{CycloMatrix, CycloNumber, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtraError {
    #[error("p must be an odd prime (got {0})")]
    BadPrime(u64),
    #[error("d must be nonzero mod p")]
    ZeroMultiplier,
    #[error("{m} does not generate the units mod {p}")]
    NotGenerator { m: u64, p: u64 },
    #[error("generator {0} is singular")]
    Singular(usize),
    #[error("generators must be square matrices of one size")]
    Shape,
    #[error("closure for p >= 11 is disabled unless explicitly allowed")]
    LargePrime,
}

fn check_prime(p: u64) -> Result<u32, ExtraError> {
    if p == 2 || !is_prime_u64(p) || p > 1 << 20 {
        return Err(ExtraError::BadPrime(p));
    }
    Ok(p as u32)
}

fn zeta(n: u32, k: i64) -> CycloNumber {
    CycloNumber::zeta_pow(n, k)
}

fn monomial(p: usize, modulus: u32, image: impl Fn(usize) -> (usize, CycloNumber)) -> CycloMatrix {
    let cols: Vec<_> = (0..p).map(&image).collect();
    CycloMatrix::from_fn(p, modulus, |i, j| {
        if cols[j].0 == i {
            cols[j].1.clone()
        } else {
            CycloNumber::zero(modulus)
        }
    })
}

fn binom2(j: i64) -> i64 {
    j * (j - 1) / 2
}

/// e_j -> e_{j+1}.
pub fn make_sigma(p: u64) -> Result<CycloMatrix, ExtraError> {
    let n = check_prime(p)?;
    let p = p as usize;
    Ok(monomial(p, n, |j| ((j + 1) % p, CycloNumber::one(n))))
}

/// e_j -> zeta^j e_j.
pub fn make_tau(p: u64) -> Result<CycloMatrix, ExtraError> {
    let n = check_prime(p)?;
    Ok(monomial(p as usize, n, |j| (j, zeta(n, j as i64))))
}

/// e_j -> eps e_{dj}; the index map has sign (d/p), so eps = (d/p) gives
/// determinant 1.
pub fn make_lambda(p: u64, d: i64) -> Result<CycloMatrix, ExtraError> {
    let n = check_prime(p)?;
    let d = d.rem_euclid(p as i64);
    if d == 0 {
        return Err(ExtraError::ZeroMultiplier);
    }
    let eps = CycloNumber::integer(n, legendre(d, p) as i64);
    Ok(monomial(p as usize, n, |j| ((j * d as usize) % p as usize, eps.clone())))
}

/// How the free constants c1, c2, c3 are fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// All constants 1; only meaningful up to scalars.
    Projective,
    /// Determinant 1, in the smallest field Q(zeta_L) with L | 4p^2 where a
    /// scaling of the form zeta_L^a or zeta_L^a / g exists (g the quadratic
    /// Gauss sum).
    Unimodular,
}

fn f1_raw(p: u64) -> CycloMatrix {
    let n = p as u32;
    monomial(p as usize, n, |j| (j, zeta(n, binom2(j as i64))))
}

fn f2_raw(p: u64) -> CycloMatrix {
    let n = p as u32;
    CycloMatrix::from_fn(p as usize, n, |k, j| zeta(n, (j * k) as i64))
}

fn f3_raw(p: u64, m: u64) -> CycloMatrix {
    let n = p as u32;
    monomial(p as usize, n, |j| ((j * m as usize) % p as usize, CycloNumber::one(n)))
}

/// sum_k (k/p) zeta^k.
pub fn gauss_sum(p: u64) -> CycloNumber {
    let n = p as u32;
    CycloNumber::from_terms(n, (1..p as i64).map(|k| (k, Q::from_integer(legendre(k, p).into()))))
}

/// Smallest c with c^p * det = 1 among +-zeta_L^a and +-zeta_L^a / g, L | 4p^2.
fn unimodular_scalar(p: u64, det: &CycloNumber) -> CycloNumber {
    let g_inv = gauss_sum(p).inv().expect("Gauss sum is nonzero");
    // Q(zeta_2k) = Q(zeta_k) for odd k, so such L are skipped and signs tried
    for l in divisors(4 * p * p).into_iter().filter(|l| l % 4 != 2) {
        let l = l as u32;
        let m = l.lcm(&det.modulus());
        let mut bases = vec![CycloNumber::one(l)];
        if l % p as u32 == 0 {
            bases.push(g_inv.embed(l).expect("p | L"));
        }
        let bases: Vec<CycloNumber> = bases.iter().flat_map(|b| [b.clone(), b.neg()]).collect();
        for base in &bases {
            for a in 0..l as i64 {
                let c = zeta(l, a).mul(base);
                let lhs = c.pow(p as i64).expect("nonnegative power").mul(det);
                if lhs.eq_value(&CycloNumber::one(m)) {
                    return c;
                }
            }
        }
    }
    unreachable!("a scaling exists in Q(zeta_4p^2)")
}

fn scaled(raw: CycloMatrix, p: u64, norm: Normalization) -> (CycloMatrix, CycloNumber) {
    match norm {
        Normalization::Projective => (raw, CycloNumber::one(p as u32)),
        Normalization::Unimodular => {
            let c = unimodular_scalar(p, &raw.det());
            (raw.scale(&c), c)
        }
    }
}

/// e_j -> c1 zeta^{binom(j,2)} e_j.
pub fn make_f1(p: u64, norm: Normalization) -> Result<CycloMatrix, ExtraError> {
    check_prime(p)?;
    Ok(scaled(f1_raw(p), p, norm).0)
}

/// e_j -> c2 sum_k zeta^{jk} e_k.
pub fn make_f2(p: u64, norm: Normalization) -> Result<CycloMatrix, ExtraError> {
    check_prime(p)?;
    Ok(scaled(f2_raw(p), p, norm).0)
}

/// e_j -> c3 e_{mj}, m a generator of (Z/p)^*.
pub fn make_f3(p: u64, m: u64, norm: Normalization) -> Result<CycloMatrix, ExtraError> {
    check_prime(p)?;
    if !is_primitive_root(m % p, p) {
        return Err(ExtraError::NotGenerator { m, p });
    }
    Ok(scaled(f3_raw(p, m % p), p, norm).0)
}

/// sigma, tau, f1, f2, f3 over one common field.
#[derive(Clone, Debug)]
pub struct Generators {
    pub p: u64,
    pub m: u64,
    pub normalization: Normalization,
    pub modulus: u32,
    pub sigma: CycloMatrix,
    pub tau: CycloMatrix,
    pub f1: CycloMatrix,
    pub f2: CycloMatrix,
    pub f3: CycloMatrix,
    /// c1, c2, c3.
    pub constants: [CycloNumber; 3],
}

impl Generators {
    pub fn new(p: u64, m: Option<u64>, norm: Normalization) -> Result<Self, ExtraError> {
        check_prime(p)?;
        let m = m.unwrap_or_else(|| crate::arith::primes::primitive_root(p));
        if !is_primitive_root(m % p, p) {
            return Err(ExtraError::NotGenerator { m, p });
        }
        let (f1, c1) = scaled(f1_raw(p), p, norm);
        let (f2, c2) = scaled(f2_raw(p), p, norm);
        let (f3, c3) = scaled(f3_raw(p, m % p), p, norm);
        let modulus = [&f1, &f2, &f3].iter().fold(p as u32, |acc, f| acc.lcm(&f.modulus()));
        let up = |x: CycloMatrix| x.embed(modulus).expect("modulus is a common multiple");
        Ok(Self {
            p,
            m,
            normalization: norm,
            modulus,
            sigma: up(make_sigma(p)?),
            tau: up(make_tau(p)?),
            f1: up(f1),
            f2: up(f2),
            f3: up(f3),
            constants: [c1, c2, c3],
        })
    }

    pub fn all(&self) -> [&CycloMatrix; 5] {
        [&self.sigma, &self.tau, &self.f1, &self.f2, &self.f3]
    }

    pub fn dump(&self) -> String {
        let names = ["sigma", "tau", "f1", "f2", "f3"];
        let mut s = String::new();
        for (name, g) in names.iter().zip(self.all()) {
            s.push_str(&format!("# {name}\n"));
            s.push_str(&g.dump());
            s.push('\n');
        }
        s
    }
}

/// p^4 (p^2 - 1), the order of the full normalizer in SL(p, C).
pub fn g0_order(p: u64) -> u64 {
    p.pow(4) * (p * p - 1)
}

pub fn default_cap(p: u64) -> usize {
    2 * g0_order(p) as usize
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureOutcome {
    Complete { elements: Vec<CycloMatrix> },
    CapExceeded { cap: usize },
}

impl ClosureOutcome {
    pub fn size(&self) -> Option<usize> {
        match self {
            ClosureOutcome::Complete { elements } => Some(elements.len()),
            ClosureOutcome::CapExceeded { .. } => None,
        }
    }
}

fn closure(gens: &[&CycloMatrix], cap: usize, project: bool) -> Result<ClosureOutcome, ExtraError> {
    let Some(first) = gens.first() else {
        return Err(ExtraError::Shape);
    };
    let (n, modulus) = (first.dim(), gens.iter().fold(1u32, |a, g| a.lcm(&g.modulus())));
    if gens.iter().any(|g| g.dim() != n) {
        return Err(ExtraError::Shape);
    }
    let norm = |m: CycloMatrix| if project { m.normalize_projective() } else { m };
    let gens: Vec<CycloMatrix> = gens.iter().map(|g| norm(g.embed(modulus).expect("lcm"))).collect();
    if let Some(i) = gens.iter().position(|g| !g.rank_full()) {
        return Err(ExtraError::Singular(i));
    }
    let id = CycloMatrix::identity(n, modulus);
    let mut seen: HashSet<CycloMatrix> = HashSet::from([id.clone()]);
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = norm(g.mul(&x).expect("same shape"));
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Ok(ClosureOutcome::CapExceeded { cap });
                }
                seen.insert(y.clone());
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(ClosureOutcome::Complete { elements: order })
}

/// Group generated in PGL: elements are scalar-normalized matrices.
pub fn projective_closure(gens: &[&CycloMatrix], cap: usize) -> Result<ClosureOutcome, ExtraError> {
    closure(gens, cap, true)
}

/// Group generated in GL, as actual matrices.
pub fn linear_closure(gens: &[&CycloMatrix], cap: usize) -> Result<ClosureOutcome, ExtraError> {
    closure(gens, cap, false)
}

/// Refuses p >= 11 unless `allow_large`.
pub fn closure_allowed(p: u64, allow_large: bool) -> Result<(), ExtraError> {
    check_prime(p)?;
    if p >= 11 && !allow_large {
        return Err(ExtraError::LargePrime);
    }
    Ok(())
}

/// tau sigma = zeta sigma tau.
pub fn heisenberg_holds(p: u64) -> Result<bool, ExtraError> {
    let (s, t) = (make_sigma(p)?, make_tau(p)?);
    let lhs = t.mul(&s).expect("square");
    let rhs = s.mul(&t).expect("square").scale(&zeta(p as u32, 1));
    Ok(lhs == rhs)
}

pub type Vector = Vec<CycloNumber>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PolygonLabel {
    Infinity,
    Index(u64),
}

#[derive(Clone, Debug)]
pub struct PolygonSet {
    pub p: u64,
    pub polygons: Vec<(PolygonLabel, Vec<Vector>)>,
}

/// Delta_inf, Delta_0, ..., Delta_{p-1}.
pub fn polygons(p: u64) -> Result<PolygonSet, ExtraError> {
    let n = check_prime(p)?;
    let pu = p as usize;
    let sigma = make_sigma(p)?;
    let unit = |j: usize| (0..pu).map(|k| CycloNumber::integer(n, (j == k) as i64)).collect::<Vector>();
    let mut polys = vec![(PolygonLabel::Infinity, (0..pu).map(unit).collect())];
    polys.push((PolygonLabel::Index(0), (0..pu).map(|j| (0..pu).map(|k| zeta(n, (j * k) as i64)).collect()).collect()));
    for i in 1..p {
        let w: Vector = (0..pu as i64).map(|k| zeta(n, i as i64 * binom2(k))).collect();
        let mut orbit = vec![w];
        for _ in 1..pu {
            orbit.push(sigma.mul_vec(orbit.last().unwrap()));
        }
        polys.push((PolygonLabel::Index(i), orbit));
    }
    Ok(PolygonSet { p, polygons: polys })
}

/// Scalar multiple with first nonzero coordinate 1.
fn line(v: &[CycloNumber]) -> Option<Vector> {
    let lead = v.iter().find(|x| !x.is_zero())?;
    let inv = lead.inv().ok()?;
    Some(v.iter().map(|x| x.mul(&inv)).collect())
}

fn spans(vs: &[Vector]) -> bool {
    let n = vs.len();
    if n == 0 || vs.iter().any(|v| v.len() != n) {
        return false;
    }
    let modulus = vs.iter().flatten().fold(1u32, |a, x| a.lcm(&x.modulus()));
    CycloMatrix::from_fn(n, modulus, |i, j| vs[j][i].clone()).rank_full()
}

/// n vectors spanning C^n whose lines are permuted by every generator.
pub fn is_polygon(vs: &[Vector], gens: &[&CycloMatrix]) -> bool {
    if !spans(vs) {
        return false;
    }
    let modulus = vs.iter().flatten().map(|x| x.modulus()).chain(gens.iter().map(|g| g.modulus())).fold(1u32, |a, m| a.lcm(&m));
    let up = |v: &Vector| -> Vector { v.iter().map(|x| x.embed(modulus).expect("lcm")).collect() };
    let vs: Vec<Vector> = vs.iter().map(up).collect();
    let gens: Vec<CycloMatrix> = gens.iter().map(|g| g.embed(modulus).expect("lcm")).collect();
    let lines: HashSet<Vector> = match vs.iter().map(|v| line(v)).collect::<Option<_>>() {
        Some(l) => l,
        None => return false,
    };
    gens.iter().all(|g| vs.iter().all(|v| line(&up(&g.mul_vec(v))).map_or(false, |l| lines.contains(&l))))
}

/// The polygon as an unordered set of lines, for comparisons.
pub fn polygon_key(vs: &[Vector]) -> Vec<Vector> {
    let mut k: Vec<Vector> = vs.iter().filter_map(|v| line(v)).collect();
    k.sort();
    k
}

/// Exhaustive search for <sigma, tau>-polygons. A polygon's p lines are
/// permuted by D / Z(D) of order p^2, so each line is fixed by some
/// sigma^a tau^b with (a, b) != (0, 0), i.e. spanned by an eigenvector of it.
/// Every eigenvector of every such element is tried as a seed; its D-orbit
/// of lines is kept when it forms a polygon.
pub fn search_polygons(p: u64) -> Result<Vec<Vec<Vector>>, ExtraError> {
    let n = check_prime(p)?;
    let pu = p as usize;
    let (s, t) = (make_sigma(p)?, make_tau(p)?);
    let gens = [&s, &t];
    let inv_p = CycloNumber::rational(n, Q::new(1.into(), (p as i64).into()));
    let mut found: Vec<Vec<Vector>> = Vec::new();
    let mut keys: HashSet<Vec<Vector>> = HashSet::new();
    for a in 0..p {
        for b in 0..p {
            if (a, b) == (0, 0) {
                continue;
            }
            let mut g = CycloMatrix::identity(pu, n);
            for _ in 0..a {
                g = s.mul(&g).expect("square");
            }
            for _ in 0..b {
                g = g.mul(&t).expect("square");
            }
            let mut powers = vec![CycloMatrix::identity(pu, n)];
            for _ in 1..pu {
                powers.push(g.mul(powers.last().unwrap()).expect("square"));
            }
            for k in 0..p as i64 {
                let proj = powers
                    .iter()
                    .enumerate()
                    .fold(CycloMatrix::zero(pu, n), |acc, (m, gm)| acc.add(&gm.scale(&zeta(n, -k * m as i64))))
                    .scale(&inv_p);
                let Some(seed) = (0..pu).map(|j| proj.column(j)).find(|c| c.iter().any(|x| !x.is_zero())) else {
                    continue;
                };
                let mut orbit: Vec<Vector> = Vec::new();
                let mut orbit_lines: HashSet<Vector> = HashSet::new();
                let mut stack = vec![seed];
                while let Some(v) = stack.pop() {
                    let l = line(&v).expect("nonzero");
                    if orbit_lines.insert(l.clone()) {
                        orbit.push(l);
                        stack.extend(gens.iter().map(|g| g.mul_vec(&v)));
                    }
                }
                if orbit.len() == pu && is_polygon(&orbit, &gens) {
                    let key = polygon_key(&orbit);
                    if keys.insert(key.clone()) {
                        found.push(key);
                    }
                }
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_determinants() {
        for p in [3, 5, 7] {
            assert!(make_sigma(p).unwrap().det().is_one());
            assert!(make_tau(p).unwrap().det().is_one());
            for d in 1..p as i64 {
                assert!(make_lambda(p, d).unwrap().det().is_one(), "p={p} d={d}");
            }
        }
        assert_eq!(make_lambda(5, 10), Err(ExtraError::ZeroMultiplier));
        assert_eq!(make_sigma(2), Err(ExtraError::BadPrime(2)));
    }

    #[test]
    fn tau3_and_f1_3() {
        let t = make_tau(3).unwrap();
        for j in 0..3 {
            assert_eq!(t.get(j, j), &zeta(3, j as i64));
        }
        let f1 = make_f1(3, Normalization::Projective).unwrap();
        assert!(f1.get(0, 0).is_one() && f1.get(1, 1).is_one());
        assert_eq!(f1.get(2, 2), &zeta(3, 1));
    }

    #[test]
    fn fourier_square() {
        for p in [3, 5, 7] {
            let f = f2_raw(p);
            let sq = f.mul(&f).unwrap();
            for i in 0..p as usize {
                for j in 0..p as usize {
                    let want = if (i + j) % p as usize == 0 { p as i64 } else { 0 };
                    assert_eq!(sq.get(i, j), &CycloNumber::integer(p as u32, want));
                }
            }
        }
    }

    #[test]
    fn f3_index_map() {
        let f = make_f3(5, 2, Normalization::Projective).unwrap();
        for (j, k) in [(1, 2), (2, 4), (3, 1), (4, 3)] {
            assert!(f.get(k, j).is_one());
        }
        assert_eq!(make_f3(5, 4, Normalization::Projective), Err(ExtraError::NotGenerator { m: 4, p: 5 }));
    }

    #[test]
    fn unimodular_fields() {
        let g3 = Generators::new(3, None, Normalization::Unimodular).unwrap();
        assert_eq!(g3.modulus, 9);
        for p in [5, 7] {
            let g = Generators::new(p, None, Normalization::Unimodular).unwrap();
            assert_eq!(g.modulus, p as u32);
            for f in g.all() {
                assert!(f.det().is_one());
            }
        }
        for f in g3.all() {
            assert!(f.det().is_one());
        }
    }

    #[test]
    fn heisenberg() {
        for p in [3, 5, 7, 11, 13] {
            assert!(heisenberg_holds(p).unwrap());
        }
    }

    #[test]
    fn socle_closure() {
        for p in [3u64, 5, 7] {
            let (s, t) = (make_sigma(p).unwrap(), make_tau(p).unwrap());
            let c = projective_closure(&[&s, &t], 1000).unwrap();
            assert_eq!(c.size(), Some((p * p) as usize));
            assert_eq!(linear_closure(&[&s, &t], 1000).unwrap().size(), Some((p * p * p) as usize));
        }
        let s = make_sigma(3).unwrap();
        assert_eq!(projective_closure(&[&s], 2), Ok(ClosureOutcome::CapExceeded { cap: 2 }));
    }

    #[test]
    fn hessian_group() {
        let g = Generators::new(3, None, Normalization::Unimodular).unwrap();
        let gens = g.all();
        assert_eq!(linear_closure(&gens, default_cap(3)).unwrap().size(), Some(648));
        assert_eq!(projective_closure(&gens, default_cap(3)).unwrap().size(), Some(216));
    }

    #[test]
    fn polygon_membership() {
        for p in [3, 5] {
            let (s, t) = (make_sigma(p).unwrap(), make_tau(p).unwrap());
            let set = polygons(p).unwrap();
            assert_eq!(set.polygons.len(), p as usize + 1);
            for (label, poly) in &set.polygons {
                assert!(is_polygon(poly, &[&s, &t]), "{label:?}");
            }
            let n = p as u32;
            let bogus: Vec<Vector> = (0..p as usize)
                .map(|j| (0..p as usize).map(|k| CycloNumber::integer(n, if k <= j { 1 } else { 0 })).collect())
                .collect();
            assert!(!is_polygon(&bogus, &[&s, &t]));
            let g = Generators::new(p, None, Normalization::Unimodular).unwrap();
            assert!(set.polygons.iter().all(|(_, v)| is_polygon(v, &[&g.sigma, &g.tau])));
        }
    }

    #[test]
    fn exhaustive_polygons() {
        for p in [3, 5] {
            let found = search_polygons(p).unwrap();
            assert_eq!(found.len(), p as usize + 1);
            let known: HashSet<_> = polygons(p).unwrap().polygons.iter().map(|(_, v)| polygon_key(v)).collect();
            assert!(found.iter().all(|f| known.contains(f)));
        }
    }
}
