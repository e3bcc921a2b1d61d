//! Character tables with exact cyclotomic values, induction along a class
//! fusion, restriction, inner products and Frobenius reciprocity.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{CycloNumber, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("table {0}: {1}")]
    Invalid(String, String),
    #[error("class function has {got} values, table has {want} classes")]
    Length { got: usize, want: usize },
    #[error("fusion is for {fusion_sub} <= {fusion_amb}, not {sub} <= {amb}")]
    Mismatch { fusion_sub: String, fusion_amb: String, sub: String, amb: String },
    #[error("fusion: {0}")]
    BadFusion(String),
    #[error("inner product is not rational")]
    NotRational,
    #[error("not a character: multiplicity {0} of an irreducible")]
    NotACharacter(String),
    #[error("no built-in table {0:?}")]
    UnknownBuiltin(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub name: String,
    pub size: u64,
    pub centralizer: u64,
    pub element_order: u64,
}

/// One value per class, in Q(zeta_N) with N the table's exponent.
pub type ClassFunction = Vec<CycloNumber>;

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub label: String,
    pub order: u64,
    pub exponent: u32,
    pub classes: Vec<ClassInfo>,
    pub irreducibles: Vec<ClassFunction>,
}

fn records(text: &str) -> impl Iterator<Item = (usize, Result<csv::StringRecord, csv::Error>)> + '_ {
    csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes())
        .into_records()
        .map(|r| {
            let line = r.as_ref().ok().and_then(|r| r.position()).map_or(0, |p| p.line() as usize);
            (line, r)
        })
}

fn parse_err(line: usize, message: impl Into<String>) -> CharError {
    CharError::Parse { line, message: message.into() }
}

fn field<T: std::str::FromStr>(rec: &csv::StringRecord, i: usize, line: usize) -> Result<T, CharError> {
    rec.get(i)
        .ok_or_else(|| parse_err(line, format!("missing field {i}")))?
        .parse()
        .map_err(|_| parse_err(line, format!("bad field {:?}", &rec[i])))
}

impl CharacterTable {
    /// Reads `group,<label>,<order>,<exponent>`, then `class,...` and
    /// `chi,<index>,<values...>` lines, and validates the result.
    pub fn parse(text: &str) -> Result<Self, CharError> {
        let mut header: Option<(String, u64, u32)> = None;
        let mut classes = Vec::new();
        let mut chis: Vec<(usize, usize, Vec<String>)> = Vec::new();
        for (line, rec) in records(text) {
            let rec = rec.map_err(|e| parse_err(line, e.to_string()))?;
            match rec.get(0) {
                Some("group") => header = Some((field(&rec, 1, line)?, field(&rec, 2, line)?, field(&rec, 3, line)?)),
                Some("class") => classes.push(ClassInfo {
                    name: field(&rec, 1, line)?,
                    size: field(&rec, 2, line)?,
                    centralizer: field(&rec, 3, line)?,
                    element_order: field(&rec, 4, line)?,
                }),
                Some("chi") => chis.push((line, field(&rec, 1, line)?, rec.iter().skip(2).map(String::from).collect())),
                Some(other) => return Err(parse_err(line, format!("unknown record {other:?}"))),
                None => {}
            }
        }
        let (label, order, exponent) = header.ok_or_else(|| parse_err(0, "missing group line"))?;
        if exponent == 0 {
            return Err(parse_err(0, "exponent must be positive"));
        }
        let mut irreducibles = Vec::new();
        for (k, (line, idx, vals)) in chis.into_iter().enumerate() {
            if idx != k + 1 {
                return Err(parse_err(line, format!("expected chi {}, found {idx}", k + 1)));
            }
            if vals.len() != classes.len() {
                return Err(parse_err(line, format!("{} values for {} classes", vals.len(), classes.len())));
            }
            let row = vals
                .iter()
                .map(|v| CycloNumber::parse(exponent, v).map_err(|e| parse_err(line, e.to_string())))
                .collect::<Result<_, _>>()?;
            irreducibles.push(row);
        }
        let t = Self { label, order, exponent, classes, irreducibles };
        t.validate()?;
        Ok(t)
    }

    fn invalid(&self, msg: impl Into<String>) -> CharError {
        CharError::Invalid(self.label.clone(), msg.into())
    }

    /// Class equation, centralizer orders, sum of squared degrees, and row
    /// and column orthogonality.
    pub fn validate(&self) -> Result<(), CharError> {
        if self.classes.iter().map(|c| c.size).sum::<u64>() != self.order {
            return Err(self.invalid("class sizes do not sum to the order"));
        }
        if let Some(c) = self.classes.iter().find(|c| c.size * c.centralizer != self.order) {
            return Err(self.invalid(format!("class {}: size * centralizer != order", c.name)));
        }
        if self.irreducibles.len() != self.classes.len() {
            return Err(self.invalid("number of irreducibles differs from number of classes"));
        }
        let degsq: Q = self
            .irreducibles
            .iter()
            .map(|chi| chi[0].to_rational().map(|d| &d * &d))
            .sum::<Option<Q>>()
            .ok_or_else(|| self.invalid("irrational degree"))?;
        if degsq != Q::from_integer(self.order.into()) {
            return Err(self.invalid("squared degrees do not sum to the order"));
        }
        if !self.rows_orthonormal() {
            return Err(self.invalid("row orthogonality fails"));
        }
        if !self.columns_orthogonal() {
            return Err(self.invalid("column orthogonality fails"));
        }
        Ok(())
    }

    pub fn rows_orthonormal(&self) -> bool {
        self.irreducibles.iter().enumerate().all(|(i, a)| {
            self.irreducibles.iter().enumerate().all(|(j, b)| {
                let want = if i == j { Q::one() } else { Q::zero() };
                self.inner_product(a, b) == Ok(want)
            })
        })
    }

    /// sum_chi chi(g_i) conj(chi(g_j)) = delta_ij |C(g_i)|.
    pub fn columns_orthogonal(&self) -> bool {
        let n = self.classes.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let s = self
                    .irreducibles
                    .iter()
                    .fold(CycloNumber::zero(self.exponent), |acc, chi| acc.add(&chi[i].mul(&chi[j].conj())));
                let want = if i == j { self.classes[i].centralizer as i64 } else { 0 };
                s.eq_value(&CycloNumber::integer(self.exponent, want))
            })
        })
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    fn check_len(&self, f: &ClassFunction) -> Result<(), CharError> {
        if f.len() != self.classes.len() {
            return Err(CharError::Length { got: f.len(), want: self.classes.len() });
        }
        Ok(())
    }

    /// (1/|G|) sum_classes size * phi * conj(psi).
    pub fn inner_product(&self, phi: &ClassFunction, psi: &ClassFunction) -> Result<Q, CharError> {
        self.check_len(phi)?;
        self.check_len(psi)?;
        let s = self.classes.iter().zip(phi.iter().zip(psi)).fold(CycloNumber::zero(self.exponent), |acc, (c, (a, b))| {
            acc.add(&a.mul(&b.conj()).scale(&Q::from_integer(c.size.into())))
        });
        let q = s.to_rational().ok_or(CharError::NotRational)?;
        Ok(q / Q::from_integer(self.order.into()))
    }

    /// Multiplicity of each irreducible.
    pub fn decompose(&self, phi: &ClassFunction) -> Result<Vec<Q>, CharError> {
        self.irreducibles.iter().map(|chi| self.inner_product(phi, chi)).collect()
    }

    /// True iff phi is an irreducible character; errors if phi is not a
    /// character at all.
    pub fn is_irreducible(&self, phi: &ClassFunction) -> Result<bool, CharError> {
        let mults = self.decompose(phi)?;
        if let Some(m) = mults.iter().find(|m| !m.is_integer() || m.is_negative()) {
            return Err(CharError::NotACharacter(m.to_string()));
        }
        Ok(self.inner_product(phi, phi)? == Q::one())
    }

    pub fn trivial(&self) -> ClassFunction {
        vec![CycloNumber::one(self.exponent); self.classes.len()]
    }

    pub fn irreducible(&self, index: usize) -> Option<&ClassFunction> {
        index.checked_sub(1).and_then(|i| self.irreducibles.get(i))
    }
}

/// Class map from a subgroup's table into an ambient table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fusion {
    pub sub: String,
    pub ambient: String,
    pub map: Vec<usize>,
}

impl Fusion {
    /// Reads `fusion,<sub>,<ambient>` then `map,<subclass>,<ambclass>`, one
    /// line per subgroup class.
    pub fn parse(text: &str, sub: &CharacterTable, amb: &CharacterTable) -> Result<Self, CharError> {
        let mut labels = None;
        let mut pairs: HashMap<usize, usize> = HashMap::new();
        for (line, rec) in records(text) {
            let rec = rec.map_err(|e| parse_err(line, e.to_string()))?;
            match rec.get(0) {
                Some("fusion") => labels = Some((field::<String>(&rec, 1, line)?, field::<String>(&rec, 2, line)?)),
                Some("map") => {
                    let (a, b): (String, String) = (field(&rec, 1, line)?, field(&rec, 2, line)?);
                    let i = sub.class_index(&a).ok_or_else(|| parse_err(line, format!("no class {a} in {}", sub.label)))?;
                    let j = amb.class_index(&b).ok_or_else(|| parse_err(line, format!("no class {b} in {}", amb.label)))?;
                    if pairs.insert(i, j).is_some() {
                        return Err(parse_err(line, format!("class {a} mapped twice")));
                    }
                }
                Some(other) => return Err(parse_err(line, format!("unknown record {other:?}"))),
                None => {}
            }
        }
        let (s, a) = labels.ok_or_else(|| parse_err(0, "missing fusion line"))?;
        if s != sub.label || a != amb.label {
            return Err(CharError::Mismatch { fusion_sub: s, fusion_amb: a, sub: sub.label.clone(), amb: amb.label.clone() });
        }
        let map = (0..sub.classes.len())
            .map(|i| pairs.get(&i).copied().ok_or_else(|| parse_err(0, format!("class {} unmapped", sub.classes[i].name))))
            .collect::<Result<_, _>>()?;
        Ok(Self { sub: s, ambient: a, map })
    }

    fn check_tables(&self, sub: &CharacterTable, amb: &CharacterTable) -> Result<(), CharError> {
        if self.sub != sub.label || self.ambient != amb.label || self.map.len() != sub.classes.len() {
            return Err(CharError::Mismatch {
                fusion_sub: self.sub.clone(),
                fusion_amb: self.ambient.clone(),
                sub: sub.label.clone(),
                amb: amb.label.clone(),
            });
        }
        Ok(())
    }

    /// Necessary conditions for the map to come from an embedding: the
    /// index is integral, element orders agree, C_H(h) divides C_G(h), and
    /// no ambient class receives more elements than it has.
    pub fn validate(&self, sub: &CharacterTable, amb: &CharacterTable) -> Result<(), CharError> {
        self.check_tables(sub, amb)?;
        if amb.order % sub.order != 0 {
            return Err(CharError::BadFusion("subgroup order does not divide ambient order".into()));
        }
        if amb.exponent % sub.exponent != 0 {
            return Err(CharError::BadFusion("subgroup exponent does not divide ambient exponent".into()));
        }
        let mut received = vec![0u64; amb.classes.len()];
        for (i, &j) in self.map.iter().enumerate() {
            let (h, g) = (&sub.classes[i], amb.classes.get(j).ok_or_else(|| CharError::BadFusion("class out of range".into()))?);
            if h.element_order != g.element_order {
                return Err(CharError::BadFusion(format!("{} -> {} changes element order", h.name, g.name)));
            }
            if g.centralizer % h.centralizer != 0 {
                return Err(CharError::BadFusion(format!("|C({})| does not divide |C({})|", h.name, g.name)));
            }
            received[j] += h.size;
        }
        if received.iter().zip(&amb.classes).any(|(r, c)| *r > c.size) {
            return Err(CharError::BadFusion("an ambient class is overfilled".into()));
        }
        if self.map.first() != Some(&0) || amb.classes[0].element_order != 1 {
            return Err(CharError::BadFusion("identity must map to identity".into()));
        }
        Ok(())
    }

    pub fn index(&self, sub: &CharacterTable, amb: &CharacterTable) -> u64 {
        amb.order / sub.order
    }
}

/// chi^G(g_j) = |C_G(g_j)| sum_{i -> j} chi(h_i) / |C_H(h_i)|.
pub fn induce(chi: &ClassFunction, sub: &CharacterTable, amb: &CharacterTable, fusion: &Fusion) -> Result<ClassFunction, CharError> {
    fusion.check_tables(sub, amb)?;
    sub.check_len(chi)?;
    let mut out = vec![CycloNumber::zero(amb.exponent); amb.classes.len()];
    for (i, &j) in fusion.map.iter().enumerate() {
        let term = chi[i].scale(&Q::new(1.into(), sub.classes[i].centralizer.into()));
        out[j] = out[j].add(&term);
    }
    Ok(out
        .into_iter()
        .zip(&amb.classes)
        .map(|(v, c)| v.scale(&Q::from_integer(c.centralizer.into())).embed(amb.exponent).unwrap_or(v))
        .collect())
}

/// Pullback along the fusion.
pub fn restrict(phi: &ClassFunction, sub: &CharacterTable, amb: &CharacterTable, fusion: &Fusion) -> Result<ClassFunction, CharError> {
    fusion.check_tables(sub, amb)?;
    amb.check_len(phi)?;
    Ok(fusion.map.iter().map(|&j| phi[j].clone()).collect())
}

/// <Ind tau, phi>_G == <tau, Res phi>_H. False whenever the fusion fails
/// validation: reciprocity itself holds for any class map, so a corrupted
/// fusion can only be caught structurally.
pub fn frobenius_check(tau: &ClassFunction, phi: &ClassFunction, sub: &CharacterTable, amb: &CharacterTable, fusion: &Fusion) -> bool {
    if fusion.validate(sub, amb).is_err() {
        return false;
    }
    let lhs = induce(tau, sub, amb, fusion).and_then(|ind| amb.inner_product(&ind, phi));
    let rhs = restrict(phi, sub, amb, fusion).and_then(|res| sub.inner_product(tau, &res));
    matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b)
}

const BUILTIN_TABLES: [(&str, &str); 4] = [
    ("A4", include_str!("../data/characters/A4.csv")),
    ("A5", include_str!("../data/characters/A5.csv")),
    ("S4", include_str!("../data/characters/S4.csv")),
    ("L2(7)", include_str!("../data/characters/L2_7.csv")),
];

const BUILTIN_FUSIONS: [(&str, &str, &str); 2] = [
    ("A4", "A5", include_str!("../data/characters/A4_A5.csv")),
    ("S4", "L2(7)", include_str!("../data/characters/S4_L2_7.csv")),
];

pub fn builtin_names() -> impl Iterator<Item = &'static str> {
    BUILTIN_TABLES.iter().map(|(n, _)| *n)
}

pub fn builtin_table(name: &str) -> Result<CharacterTable, CharError> {
    let (_, text) = BUILTIN_TABLES
        .iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name) || (name.eq_ignore_ascii_case("PSL(2,7)") && *n == "L2(7)"))
        .ok_or_else(|| CharError::UnknownBuiltin(name.to_string()))?;
    CharacterTable::parse(text)
}

/// (subgroup, ambient, fusion) for the embedded pairs A4 <= A5 and
/// S4 <= L2(7).
pub fn builtin_pair(sub: &str) -> Result<(CharacterTable, CharacterTable, Fusion), CharError> {
    let (s, a, text) = BUILTIN_FUSIONS
        .iter()
        .find(|(s, _, _)| s.eq_ignore_ascii_case(sub))
        .ok_or_else(|| CharError::UnknownBuiltin(sub.to_string()))?;
    let (st, at) = (builtin_table(s)?, builtin_table(a)?);
    let f = Fusion::parse(text, &st, &at)?;
    Ok((st, at, f))
}
