//! Embedded classification tables: primitive subgroups of PGL(n, C) for
//! n <= 7, completeness status up to n = 11, structure statements for
//! composite degrees, and the parameter solutions of the composite cases.

use std::sync::OnceLock;

use num_bigint::BigUint;
use thiserror::Error;

use crate::arith::primes::{is_prime_u64, prime_power_u64};
use crate::arith::FactoredInteger;
use crate::catalog::{SimpleGroupId, Validation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TablesError {
    #[error("degree {n} is not classified here (tables cover 2..=7; see `status {n}`)")]
    NotClassifiedHere { n: u64 },
    #[error("degree {n} out of range {lo}..={hi}")]
    OutOfRange { n: u64, lo: u64, hi: u64 },
    #[error("{n} is prime; use the socle enumeration")]
    PrimeDegree { n: u64 },
    #[error("{n} is not composite")]
    NotComposite { n: u64 },
    #[error("data line {line}: {message}")]
    Data { line: usize, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    CoveringInduced,
    LinearInduced,
}

impl Origin {
    pub fn letter(self) -> char {
        match self {
            Origin::CoveringInduced => 'C',
            Origin::LinearInduced => 'L',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub degree: u64,
    pub name: String,
    /// Catalog code when the group's order has a catalog formula.
    pub code: Option<String>,
    pub order: Option<FactoredInteger>,
    pub origin: Vec<Origin>,
    pub external_id: Option<String>,
    pub database: Option<String>,
    pub structure: Option<String>,
    pub fi: Vec<u64>,
    pub notes: Vec<String>,
}

impl TableEntry {
    /// The tensor-product row of degree 6, which stands for a family.
    pub fn is_placeholder(&self) -> bool {
        self.order.is_none()
    }

    /// Normal monomial subgroup data `K=...` for the abelian-socle rows.
    pub fn monomial_quotient(&self) -> Option<&str> {
        self.notes.iter().find_map(|n| n.strip_prefix("monomial-socle K="))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveTable {
    pub degree: u64,
    pub entries: Vec<TableEntry>,
    /// Groups in older lists for this degree that turned out imprimitive.
    pub removed: Vec<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatusRecord {
    pub degree: u64,
    pub complete: bool,
    pub missing: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureKind {
    Quasisimple,
    AlmostSimple,
    Product,
    Extension,
    AbelianSocle,
    TwoCore,
    OrderShape,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureClause {
    pub degree: u64,
    pub clause: String,
    pub kind: StructureKind,
    pub simple_groups: Vec<SimpleGroupId>,
    pub groups: String,
    /// Tensor-product family, described but not expanded.
    pub tensor_placeholder: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structures {
    Clauses(Vec<StructureClause>),
    EssentiallyUnclassified,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositeCases {
    pub degree: u64,
    /// Cases 1 and 2 hold structurally for every n and carry no parameters.
    pub notes: Vec<&'static str>,
    /// (p, s) with p prime and p^s = n.
    pub case3: Vec<(u64, u32)>,
    /// (s, m) with s >= 2, m >= 1 and s^m = n.
    pub case4: Vec<(u64, u32)>,
}

const PRIMITIVE: &str = include_str!("../data/tables/primitive.csv");
const STATUS: &str = include_str!("../data/tables/status.csv");
const STRUCTURES: &str = include_str!("../data/tables/structures.csv");

fn reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(text.as_bytes())
}

fn opt(s: &str) -> Option<String> {
    (!s.is_empty()).then(|| s.to_string())
}

fn rows(text: &str) -> Result<Vec<(usize, csv::StringRecord)>, TablesError> {
    reader(text)
        .into_records()
        .map(|r| {
            let r = r.map_err(|e| TablesError::Data { line: 0, message: e.to_string() })?;
            Ok((r.position().map_or(0, |p| p.line() as usize), r))
        })
        .collect()
}

fn parse_primitive(text: &str) -> Result<Vec<TableEntry>, TablesError> {
    let mut out = Vec::new();
    for (line, r) in rows(text)? {
        let err = |message: String| TablesError::Data { line, message };
        let degree = r[0].parse().map_err(|_| err(format!("bad degree {:?}", &r[0])))?;
        let order = match &r[3] {
            "" => None,
            s => Some(s.parse::<FactoredInteger>().map_err(|_| err(format!("bad order {s:?}")))?),
        };
        let origin = r[4]
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| match s.trim() {
                "C" => Ok(Origin::CoveringInduced),
                "L" => Ok(Origin::LinearInduced),
                o => Err(err(format!("bad origin {o:?}"))),
            })
            .collect::<Result<_, _>>()?;
        let fi = r[8]
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| s.trim().parse().map_err(|_| err(format!("bad count {s:?}"))))
            .collect::<Result<_, _>>()?;
        out.push(TableEntry {
            degree,
            name: r[1].to_string(),
            code: opt(&r[2]),
            order,
            origin,
            external_id: opt(&r[5]),
            database: opt(&r[6]),
            structure: opt(&r[7]),
            fi,
            notes: r[9].split("; ").filter(|s| !s.is_empty()).map(String::from).collect(),
        });
    }
    Ok(out)
}

fn primitive_rows() -> &'static [TableEntry] {
    static ROWS: OnceLock<Vec<TableEntry>> = OnceLock::new();
    ROWS.get_or_init(|| parse_primitive(PRIMITIVE).expect("embedded table parses"))
}

pub fn primitive_groups(n: u64) -> Result<PrimitiveTable, TablesError> {
    if !(2..=7).contains(&n) {
        return Err(TablesError::NotClassifiedHere { n });
    }
    let removed = match n {
        5 => vec!["A5"],
        7 => vec!["PSL(2,7)"],
        _ => vec![],
    };
    Ok(PrimitiveTable {
        degree: n,
        entries: primitive_rows().iter().filter(|e| e.degree == n).cloned().collect(),
        removed,
    })
}

/// Every row of every table.
pub fn all_entries() -> &'static [TableEntry] {
    primitive_rows()
}

/// Resolves an entry's code through the catalog; non-simple Lie-type
/// groups such as G2(2) are accepted for their order formula.
pub fn catalog_group(entry: &TableEntry) -> Option<SimpleGroupId> {
    entry.code.as_deref().and_then(|c| SimpleGroupId::from_code_with(c, Validation::AllowNonSimple).ok())
}

pub fn classification_status(n: u64) -> Result<StatusRecord, TablesError> {
    if !(2..=11).contains(&n) {
        return Err(TablesError::OutOfRange { n, lo: 2, hi: 11 });
    }
    let mut rec = StatusRecord { degree: n, complete: false, missing: vec![] };
    for (line, r) in rows(STATUS)? {
        if r[0].parse::<u64>().ok() != Some(n) {
            continue;
        }
        rec.complete = match &r[1] {
            "yes" => true,
            "no" => false,
            s => return Err(TablesError::Data { line, message: format!("bad flag {s:?}") }),
        };
        if !r[2].is_empty() {
            rec.missing.push(r[2].to_string());
        }
    }
    Ok(rec)
}

pub fn quasiprimitive_structures(n: u64) -> Result<Structures, TablesError> {
    if n == 10 {
        return Ok(Structures::EssentiallyUnclassified);
    }
    if ![4, 6, 8, 9].contains(&n) {
        return Err(TablesError::OutOfRange { n, lo: 4, hi: 10 });
    }
    let mut out = Vec::new();
    for (line, r) in rows(STRUCTURES)? {
        if r[0].parse::<u64>().ok() != Some(n) {
            continue;
        }
        let err = |message: String| TablesError::Data { line, message };
        let kind = match &r[2] {
            "quasisimple" => StructureKind::Quasisimple,
            "almost-simple" => StructureKind::AlmostSimple,
            "product" => StructureKind::Product,
            "extension" => StructureKind::Extension,
            "abelian-socle" => StructureKind::AbelianSocle,
            "two-core" => StructureKind::TwoCore,
            "order-shape" => StructureKind::OrderShape,
            k => return Err(err(format!("bad kind {k:?}"))),
        };
        let simple_groups = r[3]
            .split(';')
            .filter(|s| !s.is_empty())
            .map(|c| SimpleGroupId::from_code(c).map_err(|e| err(e.to_string())))
            .collect::<Result<_, _>>()?;
        out.push(StructureClause {
            degree: n,
            clause: r[1].to_string(),
            kind,
            simple_groups,
            groups: r[4].to_string(),
            tensor_placeholder: &r[5] == "1",
            detail: r[6].to_string(),
        });
    }
    Ok(Structures::Clauses(out))
}

fn integer_root(n: u64, m: u32) -> Option<u64> {
    let guess = (n as f64).powf(1.0 / m as f64).round() as u64;
    (guess.saturating_sub(1)..=guess + 1).find(|&s| s >= 2 && s.checked_pow(m) == Some(n))
}

pub fn composite_cases(n: u64) -> Result<CompositeCases, TablesError> {
    if n >= 2 && is_prime_u64(n) {
        return Err(TablesError::PrimeDegree { n });
    }
    if n < 4 {
        return Err(TablesError::NotComposite { n });
    }
    let case3 = prime_power_u64(n).map(|(p, s)| vec![(p, s)]).unwrap_or_default();
    let case4 = (1..=u64::BITS - n.leading_zeros())
        .filter_map(|m| integer_root(n, m).map(|s| (s, m)))
        .collect();
    Ok(CompositeCases {
        degree: n,
        notes: vec![
            "case 1: reducible or not quasi-primitive",
            "case 2: contained in a Kronecker product of representations of smaller degree",
        ],
        case3,
        case4,
    })
}

/// p^s for a case-3 pair, s^m for a case-4 pair.
pub fn case_value(base: u64, exp: u32) -> BigUint {
    BigUint::from(base).pow(exp)
}
