//! JSON output types. Deserializing with unknown fields denied is the
//! schema check: `validate` accepts a document iff it parses into
//! `Envelope` and serializes back to the same value.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Embedded,
    Derived,
    External,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Envelope {
    pub command: Vec<String>,
    pub provenance: Provenance,
    pub notes: Vec<String>,
    pub result: Payload,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Payload {
    Order(GroupInfo),
    SearchOrder { target: String, max: Option<String>, include_cyclic: bool, groups: Vec<GroupRow> },
    Socles(SoclesOut),
    Bounds(BoundsOut),
    Lowdeg { query: String, records: Vec<LowdegRow> },
    MindegPsl { n: u64, q: u64, degree: String },
    Tables(TablesOut),
    Status { degree: u64, complete: bool, missing: Vec<String> },
    Composite(CompositeOut),
    Construct(ConstructOut),
    Induce(InduceOut),
    LoadDegrees { path: String, rows: Vec<DegreeRow> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupInfo {
    pub code: String,
    pub canonical: String,
    pub name: String,
    pub order: String,
    pub order_factored: String,
    pub aliases: Vec<String>,
    pub schur_multiplier: Option<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupRow {
    pub code: String,
    pub name: String,
    pub order: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SocleRow {
    pub code: String,
    pub name: String,
    pub order: String,
    pub clauses: Vec<String>,
    pub witnesses: Vec<String>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AbelianOut {
    pub extraspecial_order: String,
    pub full_order: String,
    pub subgroups: Option<Vec<TopRow>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TopRow {
    pub label: String,
    pub k: String,
    pub k_order: u64,
    pub projective_order: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SoclesOut {
    pub p: u64,
    pub strict_s2: bool,
    pub primitive: Vec<SocleRow>,
    pub imprimitive: Vec<SocleRow>,
    pub abelian: Option<AbelianOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PrimeBound {
    pub p: u64,
    pub verdict: String,
    pub general: u32,
    pub coprime: Option<u32>,
    pub exponent_bound: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderVerdict {
    pub order: String,
    pub possible: bool,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsOut {
    pub n: u64,
    pub constant: u64,
    pub primes: Vec<PrimeBound>,
    pub index_bound_primitive: Option<String>,
    pub index_bound_any: Option<String>,
    pub order_check: Option<OrderVerdict>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LowdegRow {
    pub code: String,
    pub name: String,
    pub r: u64,
    pub d: u64,
    pub count: Option<u64>,
    pub clauses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableRow {
    pub name: String,
    pub code: Option<String>,
    pub order: Option<String>,
    pub origin: Vec<String>,
    pub external_id: Option<String>,
    pub database: Option<String>,
    pub structure: Option<String>,
    pub fi: Vec<u64>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClauseRow {
    pub clause: String,
    pub kind: String,
    pub groups: String,
    pub simple_groups: Vec<String>,
    pub tensor_placeholder: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TablesOut {
    pub degree: u64,
    pub rows: Vec<TableRow>,
    pub removed: Vec<String>,
    pub structures: Option<Vec<ClauseRow>>,
    pub unclassified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositeOut {
    pub degree: u64,
    pub notes: Vec<String>,
    pub case3: Vec<(u64, u32)>,
    pub case4: Vec<(u64, u32)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClosureOut {
    pub linear: Option<usize>,
    pub projective: Option<usize>,
    pub expected_linear: u64,
    pub cap: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolygonOut {
    pub constructed: usize,
    pub all_polygons: bool,
    pub found_by_search: usize,
    pub search_matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructOut {
    pub p: u64,
    pub m: u64,
    pub normalization: String,
    pub field_modulus: u32,
    pub constants: Vec<String>,
    pub determinants: Vec<String>,
    pub heisenberg: bool,
    pub closure: Option<ClosureOut>,
    pub polygons: Option<PolygonOut>,
    pub dump: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InduceOut {
    pub sub: String,
    pub ambient: String,
    pub index: u64,
    pub character: usize,
    pub classes: Vec<String>,
    pub values: Vec<String>,
    pub degree: String,
    pub with_trivial: String,
    pub norm: String,
    pub decomposition: Vec<String>,
    pub irreducible: Option<bool>,
    pub frobenius_all_pairs: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeRow {
    pub code: String,
    pub cover: u64,
    pub degree: u64,
    pub count: Option<u64>,
    pub characteristic: u64,
    pub source: String,
}

/// Parses and re-serializes; returns the typed value when the document
/// conforms.
pub fn validate(json: &str) -> Result<Envelope, String> {
    let raw: serde_json::Value = serde_json::from_str(json).map_err(|e| e.to_string())?;
    let env: Envelope = serde_json::from_value(raw.clone()).map_err(|e| e.to_string())?;
    let back = serde_json::to_value(&env).map_err(|e| e.to_string())?;
    if back != raw {
        return Err("document does not round-trip".into());
    }
    Ok(env)
}
