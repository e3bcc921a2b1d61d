use std::fmt;

use num_traits::Zero;

use super::cyclo::{cyclotomic_polynomial, poly_mul_acc, reduce_in_place, Q};
use super::{ArithError, CycloNumber};

/// Square matrix over Q(zeta_N), row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloMatrix {
    n: usize,
    modulus: u32,
    entries: Vec<CycloNumber>,
}

impl CycloMatrix {
    pub fn zero(n: usize, modulus: u32) -> Self {
        Self { n, modulus, entries: vec![CycloNumber::zero(modulus); n * n] }
    }

    pub fn identity(n: usize, modulus: u32) -> Self {
        Self::from_fn(n, modulus, |i, j| {
            if i == j {
                CycloNumber::one(modulus)
            } else {
                CycloNumber::zero(modulus)
            }
        })
    }

    /// Entries must already lie in Q(zeta_modulus) or a subfield index dividing it.
    pub fn from_fn(n: usize, modulus: u32, mut f: impl FnMut(usize, usize) -> CycloNumber) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let x = f(i, j);
                entries.push(if x.modulus() == modulus {
                    x
                } else {
                    x.embed(modulus).expect("entry field must embed in matrix field")
                });
            }
        }
        Self { n, modulus, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloNumber {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[CycloNumber] {
        &self.entries
    }

    pub fn embed(&self, modulus: u32) -> Result<Self, ArithError> {
        let entries = self.entries.iter().map(|e| e.embed(modulus)).collect::<Result<_, _>>()?;
        Ok(Self { n: self.n, modulus, entries })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ArithError> {
        if self.n != other.n {
            return Err(ArithError::Shape);
        }
        if self.modulus != other.modulus {
            let l = num_integer::lcm(self.modulus, other.modulus);
            return self.embed(l)?.mul(&other.embed(l)?);
        }
        let n = self.n;
        let phi = cyclotomic_polynomial(self.modulus);
        let d = phi.len() - 1;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = vec![Q::zero(); 2 * d - 1];
                let mut any = false;
                for k in 0..n {
                    let a = &self.entries[i * n + k];
                    let b = &other.entries[k * n + j];
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    poly_mul_acc(&mut acc, a.coeffs(), b.coeffs());
                    any = true;
                }
                if any {
                    reduce_in_place(&mut acc, &phi);
                    entries.push(CycloNumber::from_reduced(self.modulus, acc));
                } else {
                    entries.push(CycloNumber::zero(self.modulus));
                }
            }
        }
        Ok(Self { n, modulus: self.modulus, entries })
    }

    pub fn mul_vec(&self, v: &[CycloNumber]) -> Vec<CycloNumber> {
        (0..self.n)
            .map(|i| {
                (0..self.n).fold(CycloNumber::zero(self.modulus), |acc, k| {
                    let a = &self.entries[i * self.n + k];
                    if a.is_zero() || v[k].is_zero() {
                        acc
                    } else {
                        acc.add(&a.mul(&v[k]))
                    }
                })
            })
            .collect()
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        let entries: Vec<_> = self.entries.iter().map(|e| e.mul(c)).collect();
        let modulus = entries.first().map_or(self.modulus, |e| e.modulus());
        Self { n: self.n, modulus, entries }
    }

    pub fn add(&self, other: &Self) -> Self {
        let entries: Vec<_> = self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        let modulus = entries.first().map_or(self.modulus, |e| e.modulus());
        Self { n: self.n, modulus, entries }
    }

    pub fn column(&self, j: usize) -> Vec<CycloNumber> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    /// Scalar multiple whose first nonzero entry in row-major order is 1.
    pub fn normalize_projective(&self) -> Self {
        match self.entries.iter().find(|e| !e.is_zero()) {
            Some(lead) if !lead.is_one() => self.scale(&lead.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    pub fn is_scalar(&self) -> bool {
        let d = self.get(0, 0);
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e == d
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar() && self.get(0, 0).is_one()
    }

    /// Kronecker product; entries of `self` multiply blocks of `other`.
    pub fn kron(&self, other: &Self) -> Self {
        let l = num_integer::lcm(self.modulus, other.modulus);
        let (a, b) = (self.embed(l).unwrap(), other.embed(l).unwrap());
        let (m, n) = (a.n, b.n);
        Self::from_fn(m * n, l, |i, j| a.get(i / n, j / n).mul(b.get(i % n, j % n)))
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self) -> CycloNumber {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = CycloNumber::one(self.modulus);
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return CycloNumber::zero(self.modulus);
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                }
                det = det.neg();
            }
            let p = a[col * n + col].clone();
            det = det.mul(&p);
            let pinv = p.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].mul(&pinv);
                for j in col..n {
                    let t = f.mul(&a[col * n + j]);
                    a[r * n + j] = a[r * n + j].sub(&t);
                }
            }
        }
        det
    }

    pub fn rank_full(&self) -> bool {
        !self.det().is_zero()
    }

    /// Text block: `N=<modulus>` then one row per line, entries separated by `; `.
    pub fn dump(&self) -> String {
        let mut s = format!("N={}\n", self.modulus);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            s.push_str(&row.join("; "));
            s.push('\n');
        }
        s
    }

    pub fn parse_dump(text: &str) -> Result<Self, ArithError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let head = lines.next().ok_or_else(|| ArithError::Parse(text.to_string()))?;
        let modulus: u32 = head
            .strip_prefix("N=")
            .and_then(|m| m.parse().ok())
            .ok_or_else(|| ArithError::Parse(head.to_string()))?;
        let rows: Vec<Vec<CycloNumber>> = lines
            .map(|l| l.split(';').map(|e| CycloNumber::parse(modulus, e)).collect())
            .collect::<Result<_, _>>()?;
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(ArithError::Shape);
        }
        Ok(Self { n, modulus, entries: rows.into_iter().flatten().collect() })
    }
}

impl fmt::Display for CycloMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.dump())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, modulus: u32, vals: &[&str]) -> CycloMatrix {
        let mut it = vals.iter();
        CycloMatrix::from_fn(n, modulus, |_, _| CycloNumber::parse(modulus, it.next().unwrap()).unwrap())
    }

    #[test]
    fn product_and_det() {
        let a = m(2, 3, &["1", "z", "0", "2"]);
        let b = m(2, 3, &["z^2", "0", "1", "1"]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, m(2, 3, &["z^2 + z", "z", "2", "2"]));
        assert_eq!(a.det(), CycloNumber::integer(3, 2));
        assert_eq!(ab.det(), a.det().mul(&b.det()));
    }

    #[test]
    fn kron_det_rule() {
        let a = m(2, 4, &["z", "1", "1", "0"]);
        let b = m(3, 3, &["1", "z", "0", "0", "1", "z", "z", "0", "1"]);
        let k = a.kron(&b);
        assert_eq!(k.dim(), 6);
        let expect = a.det().pow(3).unwrap().mul(&b.det().pow(2).unwrap());
        assert!(k.det().eq_value(&expect));
    }

    #[test]
    fn dump_round_trip() {
        let a = m(2, 5, &["1/2*z", "-z^3 + 1", "0", "z^4"]);
        assert_eq!(CycloMatrix::parse_dump(&a.dump()).unwrap(), a);
    }

    #[test]
    fn normalization() {
        let a = m(2, 3, &["0", "2*z", "z", "1"]).normalize_projective();
        assert!(a.get(0, 1).is_one());
        assert_eq!(a.get(1, 0), &CycloNumber::rational(3, Q::new(1.into(), 2.into())));
    }
}
