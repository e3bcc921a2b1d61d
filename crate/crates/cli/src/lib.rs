pub mod schema;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;

use lingroups::arith::{is_prime_u64, FactoredInteger, Q};
use lingroups::bounds::{self, BlichfeldtOptions, CollinsContext, PrimeVerdict, Violation};
use lingroups::catalog::{SchurMultiplier, SimpleGroupId};
use lingroups::characters::{self, CharacterTable, Fusion};
use lingroups::extraspecial::{self, Generators, Normalization};
use lingroups::lowdeg::{self, RepDegreeRecord};
use lingroups::search::{self, SearchQuery};
use lingroups::socles::{self, SocleCandidate, SocleKind, SocleOptions};
use lingroups::tables::{self, Structures};

use schema::*;

pub const DATA_DIR_VAR: &str = "LINGROUPS_DATA_DIR";

#[derive(Parser, Debug)]
#[command(name = "lingroups", version, about = "Finite linear groups of small degree: orders, socles, bounds, tables")]
pub struct Cli {
    /// Emit the JSON envelope instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Order of a simple group given by code, e.g. CA-1-7 or SPOR-M12.
    Order { code: String },
    /// Simple groups whose order divides N (e.g. 2^3*3^2*5*7 or 2520).
    SearchOrder {
        target: String,
        #[arg(long)]
        max: Option<String>,
        #[arg(long)]
        include_cyclic: bool,
    },
    /// Candidate socles of quasi-primitive groups of prime degree p.
    Socles {
        p: u64,
        #[arg(long)]
        abelian: bool,
        /// Use s >= 2 in the PSp(2n, q), n = 2^s family.
        #[arg(long)]
        strict_s2: bool,
    },
    /// Order restrictions for quasi-primitive groups of degree n.
    Bounds {
        n: u64,
        #[arg(long)]
        prime: Option<u64>,
        #[arg(long)]
        order: Option<String>,
        /// Use 5^(n-1) in place of 6^(n-1).
        #[arg(long = "blichfeldt-5")]
        blichfeldt_5: bool,
    },
    /// Low-degree representation triples (group, r, d).
    Lowdeg(LowdegArgs),
    /// Minimal degree of a nontrivial projective representation of PSL(n, q).
    MindegPsl { n: u64, q: u64 },
    /// Embedded primitive-group table for degree 2..=7, or structure
    /// statements for 8, 9, 10.
    Tables { n: u64 },
    /// Completeness of the classification for degree 2..=11.
    Status { n: u64 },
    /// Parameter solutions of the composite-degree cases.
    Composite { n: u64 },
    /// Extraspecial normalizer generators for an odd prime p.
    Construct {
        p: u64,
        #[arg(long)]
        verify_closure: bool,
        #[arg(long)]
        polygons: bool,
        #[arg(long)]
        dump: bool,
        /// Keep constants at 1 instead of scaling to determinant 1.
        #[arg(long)]
        projective: bool,
        /// Primitive root used for f3.
        #[arg(long)]
        generator: Option<u64>,
        /// Permit closure and polygon search for p >= 11.
        #[arg(long)]
        allow_large: bool,
    },
    /// Induce an irreducible character along a class fusion.
    Induce(InduceArgs),
    /// Read an external degree table (CSV).
    LoadDegrees { csv: PathBuf },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct LowdegArgs {
    #[arg(long)]
    pub degree: Option<u64>,
    #[arg(long)]
    pub group: Option<String>,
}

#[derive(Args, Debug)]
pub struct InduceArgs {
    /// Embedded pair by subgroup name: A4 (into A5) or S4 (into L2(7)).
    #[arg(long, conflicts_with_all = ["ambient", "sub", "fusion"])]
    pub builtin: Option<String>,
    #[arg(long, requires_all = ["sub", "fusion"])]
    pub ambient: Option<PathBuf>,
    #[arg(long)]
    pub sub: Option<PathBuf>,
    #[arg(long)]
    pub fusion: Option<PathBuf>,
    /// 1-based index of the subgroup irreducible.
    #[arg(long = "char")]
    pub character: usize,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Data(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) | CliError::Data(m) => m,
        }
    }
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

fn parse_factored(s: &str) -> Result<FactoredInteger, CliError> {
    s.parse().map_err(|_| CliError::Usage(format!("cannot read {s:?} as an integer like 2^3*3^2*5 or 2520")))
}

fn resolve(path: &Path) -> PathBuf {
    match std::env::var_os(DATA_DIR_VAR) {
        Some(dir) if path.is_relative() && !path.exists() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    let p = resolve(path);
    std::fs::read_to_string(&p).map_err(|e| CliError::Data(format!("{}: {e}", p.display())))
}

fn group_row(g: &SimpleGroupId) -> GroupRow {
    GroupRow { code: g.code(), name: g.name(), order: g.order_value().to_string() }
}

fn socle_row(c: &SocleCandidate) -> SocleRow {
    SocleRow {
        code: c.group.code(),
        name: c.group.name(),
        order: c.group.order_value().to_string(),
        clauses: c.clause_tags().into_iter().map(String::from).collect(),
        witnesses: c.sources.iter().map(|(_, w)| w.to_string()).collect(),
        note: c.note().map(String::from),
    }
}

fn lowdeg_row(r: &RepDegreeRecord) -> LowdegRow {
    LowdegRow { code: r.group.code(), name: r.group.name(), r: r.r, d: r.d, count: r.count, clauses: r.clauses.clone() }
}

fn verdict_name(v: PrimeVerdict) -> &'static str {
    match v {
        PrimeVerdict::Forbidden => "forbidden",
        PrimeVerdict::ExceptionalPsl2p => "forces-psl2p",
        PrimeVerdict::LargePrimeUniqueSquareFree => "large-squarefree-unique",
        PrimeVerdict::Unrestricted => "unrestricted",
    }
}

fn violation_text(v: &Violation) -> String {
    match v {
        Violation::ForbiddenPrime { p } => format!("prime {p} exceeds 2n+1"),
        Violation::ExponentTooLarge { p, exponent, bound } => format!("{p}^{exponent} exceeds bound {p}^{bound}"),
        Violation::SeveralLargePrimes { primes } => format!("several primes above n+1: {primes:?}"),
        Violation::LargePrimeSquared { p } => format!("{p}^2 divides the order with {p} > n+1"),
        Violation::ExceedsIndexBound { bound } => format!("order exceeds index bound {bound}"),
    }
}

fn q_str(q: &Q) -> String {
    q.to_string()
}

struct Out {
    provenance: Provenance,
    notes: Vec<String>,
    payload: Payload,
}

fn out(provenance: Provenance, payload: Payload) -> Out {
    Out { provenance, notes: vec![], payload }
}

fn execute(cmd: &Command) -> Result<Out, CliError> {
    match cmd {
        Command::Order { code } => {
            let g = SimpleGroupId::from_code(code).map_err(domain)?;
            let schur = match g.schur_multiplier() {
                SchurMultiplier::Known { invariants, .. } => Some(invariants),
                SchurMultiplier::Unknown => None,
            };
            Ok(out(
                Provenance::Derived,
                Payload::Order(GroupInfo {
                    code: g.code(),
                    canonical: g.canonical().code(),
                    name: g.name(),
                    order: g.order_value().to_string(),
                    order_factored: g.order().to_string(),
                    aliases: g.aliases().iter().map(|a| a.code()).collect(),
                    schur_multiplier: schur,
                }),
            ))
        }
        Command::SearchOrder { target, max, include_cyclic } => {
            let mut q = SearchQuery::new(parse_factored(target)?);
            q.max_order = max.as_deref().map(parse_factored).transpose()?.map(|m| m.value());
            q.include_cyclic = *include_cyclic;
            let groups = search::groups_with_order_dividing(&q).iter().map(group_row).collect();
            Ok(out(
                Provenance::Derived,
                Payload::SearchOrder {
                    target: q.divisor_target.to_string(),
                    max: q.max_order.as_ref().map(BigUint::to_string),
                    include_cyclic: *include_cyclic,
                    groups,
                },
            ))
        }
        Command::Socles { p, abelian, strict_s2 } => {
            let cands = socles::nonabelian_socles(*p, SocleOptions { strict_s2: *strict_s2 }).map_err(domain)?;
            let pick = |k| cands.iter().filter(|c| c.kind == k).map(socle_row).collect::<Vec<_>>();
            let abelian = if *abelian {
                let s = socles::abelian_socle_structure(*p).map_err(domain)?;
                Some(AbelianOut {
                    extraspecial_order: s.extraspecial_order.to_string(),
                    full_order: s.full_order.to_string(),
                    subgroups: s.subgroups.as_ref().map(|ks| {
                        ks.iter()
                            .map(|k| TopRow {
                                label: k.label.clone(),
                                k: k.name.to_string(),
                                k_order: k.order,
                                projective_order: s.projective_order(k).to_string(),
                            })
                            .collect()
                    }),
                })
            } else {
                None
            };
            let mut o = out(
                Provenance::Derived,
                Payload::Socles(SoclesOut {
                    p: *p,
                    strict_s2: *strict_s2,
                    primitive: pick(SocleKind::Primitive),
                    imprimitive: pick(SocleKind::Imprimitive),
                    abelian,
                }),
            );
            if *strict_s2 {
                o.notes.push("strict reading s >= 2 of the symplectic family".into());
            }
            o.notes.extend(cands.iter().filter_map(|c| c.note().map(|n| format!("{}: {n}", c.group.name()))));
            Ok(o)
        }
        Command::Bounds { n, prime, order, blichfeldt_5 } => {
            let opts = BlichfeldtOptions { constant: if *blichfeldt_5 { 5 } else { 6 } };
            if *n < 2 {
                return Err(CliError::Domain("degree n must be at least 2".into()));
            }
            let primes: Vec<u64> = match prime {
                Some(p) => vec![*p],
                None => (2..=2 * n + 1).filter(|&p| is_prime_u64(p)).collect(),
            };
            let mut rows = Vec::new();
            for p in primes {
                rows.push(PrimeBound {
                    p,
                    verdict: verdict_name(bounds::admissible_prime(*n, p).map_err(domain)?).into(),
                    general: bounds::blichfeldt_general_bound(*n, p, opts).map_err(domain)?,
                    coprime: bounds::blichfeldt_coprime_bound(*n, p).map_err(domain)?,
                    exponent_bound: bounds::blichfeldt_exponent_bound(*n, p, opts).map_err(domain)?,
                });
            }
            let order_check = order
                .as_deref()
                .map(|s| -> Result<OrderVerdict, CliError> {
                    let f = parse_factored(s)?;
                    let v = bounds::can_be_quasiprimitive(*n, &f, opts).map_err(domain)?;
                    Ok(OrderVerdict {
                        order: f.to_string(),
                        possible: v.possible,
                        violations: v.violations.iter().map(violation_text).collect(),
                    })
                })
                .transpose()?;
            Ok(out(
                Provenance::Derived,
                Payload::Bounds(BoundsOut {
                    n: *n,
                    constant: opts.constant,
                    primes: rows,
                    index_bound_primitive: bounds::collins_index_bound(*n, CollinsContext::Primitive).map(|b| b.to_string()),
                    index_bound_any: bounds::collins_index_bound(*n, CollinsContext::AnyFinite).map(|b| b.to_string()),
                    order_check,
                }),
            ))
        }
        Command::Lowdeg(a) => {
            let (query, records) = match (a.degree, &a.group) {
                (Some(d), _) => (format!("degree {d}"), lowdeg::tz_groups_for_degree(d).map_err(domain)?),
                (None, Some(code)) => {
                    let g = SimpleGroupId::from_code(code).map_err(domain)?;
                    (format!("group {}", g.code()), lowdeg::tz_triples_for_group(&g))
                }
                (None, None) => return Err(CliError::Usage("give --degree or --group".into())),
            };
            Ok(out(Provenance::Derived, Payload::Lowdeg { query, records: records.iter().map(lowdeg_row).collect() }))
        }
        Command::MindegPsl { n, q } => {
            let d = lowdeg::min_degree_psl(*n, *q).map_err(domain)?;
            Ok(out(Provenance::Derived, Payload::MindegPsl { n: *n, q: *q, degree: d.to_string() }))
        }
        Command::Tables { n } => tables_cmd(*n),
        Command::Status { n } => {
            let s = tables::classification_status(*n).map_err(domain)?;
            Ok(out(Provenance::Embedded, Payload::Status { degree: s.degree, complete: s.complete, missing: s.missing }))
        }
        Command::Composite { n } => {
            let c = tables::composite_cases(*n).map_err(domain)?;
            Ok(out(
                Provenance::Derived,
                Payload::Composite(CompositeOut {
                    degree: c.degree,
                    notes: c.notes.iter().map(|s| s.to_string()).collect(),
                    case3: c.case3,
                    case4: c.case4,
                }),
            ))
        }
        Command::Construct { p, verify_closure, polygons, dump, projective, generator, allow_large } => {
            construct_cmd(*p, *verify_closure, *polygons, *dump, *projective, *generator, *allow_large)
        }
        Command::Induce(a) => induce_cmd(a),
        Command::LoadDegrees { csv } => {
            let text = read_file(csv)?;
            let rows = lowdeg::load_external_degrees(text.as_bytes()).map_err(|e| CliError::Data(e.to_string()))?;
            Ok(out(
                Provenance::External,
                Payload::LoadDegrees {
                    path: csv.display().to_string(),
                    rows: rows
                        .iter()
                        .map(|r| DegreeRow {
                            code: r.group.code(),
                            cover: r.cover,
                            degree: r.degree,
                            count: r.count,
                            characteristic: r.characteristic,
                            source: r.source.clone(),
                        })
                        .collect(),
                },
            ))
        }
    }
}

fn tables_cmd(n: u64) -> Result<Out, CliError> {
    let structures = match tables::quasiprimitive_structures(n) {
        Ok(Structures::Clauses(cs)) => Some(Some(
            cs.iter()
                .map(|c| ClauseRow {
                    clause: c.clause.clone(),
                    kind: format!("{:?}", c.kind).to_lowercase(),
                    groups: c.groups.clone(),
                    simple_groups: c.simple_groups.iter().map(|g| g.code()).collect(),
                    tensor_placeholder: c.tensor_placeholder,
                    detail: c.detail.clone(),
                })
                .collect(),
        )),
        Ok(Structures::EssentiallyUnclassified) => Some(None),
        Err(_) => None,
    };
    let (rows, removed) = match tables::primitive_groups(n) {
        Ok(t) => (
            t.entries
                .iter()
                .map(|e| TableRow {
                    name: e.name.clone(),
                    code: e.code.clone(),
                    order: e.order.as_ref().map(|o| o.value().to_string()),
                    origin: e.origin.iter().map(|o| o.letter().to_string()).collect(),
                    external_id: e.external_id.clone(),
                    database: e.database.clone(),
                    structure: e.structure.clone(),
                    fi: e.fi.clone(),
                    notes: e.notes.clone(),
                })
                .collect(),
            t.removed.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        ),
        Err(e) if structures.is_none() => {
            return Err(CliError::Domain(format!("{e}; structure statements exist for 4, 6, 8, 9 and 10")))
        }
        Err(_) => (vec![], vec![]),
    };
    let mut o = out(
        Provenance::Embedded,
        Payload::Tables(TablesOut {
            degree: n,
            rows,
            unclassified: matches!(structures, Some(None)),
            structures: structures.flatten(),
            removed: removed.clone(),
        }),
    );
    o.notes.extend(removed.iter().map(|g| format!("{g} appears in an older list for this degree but is imprimitive")));
    Ok(o)
}

fn construct_cmd(
    p: u64,
    verify: bool,
    polygons: bool,
    dump: bool,
    projective: bool,
    generator: Option<u64>,
    allow_large: bool,
) -> Result<Out, CliError> {
    let norm = if projective { Normalization::Projective } else { Normalization::Unimodular };
    let g = Generators::new(p, generator, norm).map_err(domain)?;
    let heisenberg = extraspecial::heisenberg_holds(p).map_err(domain)?;
    let closure = if verify {
        extraspecial::closure_allowed(p, allow_large).map_err(domain)?;
        let cap = extraspecial::default_cap(p);
        let gens = g.all();
        let linear = if projective { None } else { extraspecial::linear_closure(&gens, cap).map_err(domain)?.size() };
        let proj = extraspecial::projective_closure(&gens, cap).map_err(domain)?.size();
        Some(ClosureOut { linear, projective: proj, expected_linear: extraspecial::g0_order(p), cap })
    } else {
        None
    };
    let polys = if polygons {
        extraspecial::closure_allowed(p, allow_large).map_err(domain)?;
        let set = extraspecial::polygons(p).map_err(domain)?;
        let (s, t) = (&g.sigma, &g.tau);
        let all = set.polygons.iter().all(|(_, v)| extraspecial::is_polygon(v, &[s, t]));
        let found = extraspecial::search_polygons(p).map_err(domain)?;
        let known: std::collections::HashSet<_> = set.polygons.iter().map(|(_, v)| extraspecial::polygon_key(v)).collect();
        Some(PolygonOut {
            constructed: set.polygons.len(),
            all_polygons: all,
            found_by_search: found.len(),
            search_matches: found.len() == known.len() && found.iter().all(|f| known.contains(f)),
        })
    } else {
        None
    };
    let mut o = out(
        Provenance::Derived,
        Payload::Construct(ConstructOut {
            p,
            m: g.m,
            normalization: if projective { "projective" } else { "unimodular" }.into(),
            field_modulus: g.modulus,
            constants: g.constants.iter().map(|c| c.to_string()).collect(),
            determinants: g.all().iter().map(|m| m.det().to_string()).collect(),
            heisenberg,
            closure,
            polygons: polys,
            dump: dump.then(|| g.dump()),
        }),
    );
    if verify {
        o.notes.push(format!(
            "the linear group has order p^4(p^2-1) = {}; modulo scalars it has order p^3(p^2-1) = {}",
            extraspecial::g0_order(p),
            extraspecial::g0_order(p) / p
        ));
    }
    Ok(o)
}

fn induce_cmd(a: &InduceArgs) -> Result<Out, CliError> {
    let data = |e: characters::CharError| CliError::Data(e.to_string());
    let (sub, amb, fusion, provenance) = match (&a.builtin, &a.ambient, &a.sub, &a.fusion) {
        (Some(name), ..) => {
            let (s, g, f) = characters::builtin_pair(name).map_err(domain)?;
            (s, g, f, Provenance::Embedded)
        }
        (None, Some(amb), Some(sub), Some(fus)) => {
            let g = CharacterTable::parse(&read_file(amb)?).map_err(data)?;
            let s = CharacterTable::parse(&read_file(sub)?).map_err(data)?;
            let f = Fusion::parse(&read_file(fus)?, &s, &g).map_err(data)?;
            (s, g, f, Provenance::External)
        }
        _ => return Err(CliError::Usage("give --builtin <A4|S4> or all of --ambient, --sub, --fusion".into())),
    };
    fusion.validate(&sub, &amb).map_err(data)?;
    let chi = sub.irreducible(a.character).ok_or_else(|| {
        CliError::Domain(format!("--char must be in 1..={} for {}", sub.irreducibles.len(), sub.label))
    })?;
    let ind = characters::induce(chi, &sub, &amb, &fusion).map_err(domain)?;
    let with_trivial = amb.inner_product(&ind, &amb.trivial()).map_err(domain)?;
    let norm = amb.inner_product(&ind, &ind).map_err(domain)?;
    let decomposition = amb.decompose(&ind).map_err(domain)?;
    let frob = sub
        .irreducibles
        .iter()
        .all(|t| amb.irreducibles.iter().all(|phi| characters::frobenius_check(t, phi, &sub, &amb, &fusion)));
    Ok(out(
        provenance,
        Payload::Induce(InduceOut {
            sub: sub.label.clone(),
            ambient: amb.label.clone(),
            index: fusion.index(&sub, &amb),
            character: a.character,
            classes: amb.classes.iter().map(|c| c.name.clone()).collect(),
            values: ind.iter().map(|v| v.to_string()).collect(),
            degree: ind[0].to_string(),
            with_trivial: q_str(&with_trivial),
            norm: q_str(&norm),
            decomposition: decomposition.iter().map(q_str).collect(),
            irreducible: amb.is_irreducible(&ind).ok(),
            frobenius_all_pairs: frob,
        }),
    ))
}

fn opt_str<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or("-".into(), |x| x.to_string())
}

pub fn render_text(env: &Envelope) -> String {
    let mut s = String::new();
    match &env.result {
        Payload::Order(g) => {
            let _ = writeln!(s, "{} ({})", g.name, g.code);
            let _ = writeln!(s, "order {} = {}", g.order, g.order_factored);
            if g.canonical != g.code {
                let _ = writeln!(s, "canonical {}", g.canonical);
            }
            if !g.aliases.is_empty() {
                let _ = writeln!(s, "aliases {}", g.aliases.join(" "));
            }
            if let Some(m) = &g.schur_multiplier {
                let _ = writeln!(s, "schur multiplier {m:?}");
            }
        }
        Payload::SearchOrder { groups, .. } => {
            for g in groups {
                let _ = writeln!(s, "{:<12} {:<14} {}", g.code, g.name, g.order);
            }
            let _ = writeln!(s, "{} groups", groups.len());
        }
        Payload::Socles(o) => {
            for (title, rows) in [("primitive", &o.primitive), ("imprimitive", &o.imprimitive)] {
                let _ = writeln!(s, "{title} ({}):", rows.len());
                for r in rows {
                    let _ = writeln!(s, "  {:<12} {:<14} {:<20} {} [{}]", r.code, r.name, r.order, r.clauses.join(" "), r.witnesses.join("; "));
                }
            }
            if let Some(a) = &o.abelian {
                let _ = writeln!(s, "abelian socle: extraspecial {} in a normalizer of order {}", a.extraspecial_order, a.full_order);
                for k in a.subgroups.iter().flatten() {
                    let _ = writeln!(s, "  {:<4} K={:<10} |K|={:<6} projective order {}", k.label, k.k, k.k_order, k.projective_order);
                }
            }
        }
        Payload::Bounds(b) => {
            let _ = writeln!(s, "degree {} (constant {})", b.n, b.constant);
            for p in &b.primes {
                let _ = writeln!(s, "  p={:<4} {:<24} exponent <= {} (general {}, coprime {})", p.p, p.verdict, p.exponent_bound, p.general, opt_str(&p.coprime));
            }
            let _ = writeln!(s, "index bound (primitive): {}", opt_str(&b.index_bound_primitive));
            let _ = writeln!(s, "index bound (any finite): {}", opt_str(&b.index_bound_any));
            if let Some(v) = &b.order_check {
                let _ = writeln!(s, "order {}: {}", v.order, if v.possible { "possible" } else { "impossible" });
                for x in &v.violations {
                    let _ = writeln!(s, "  {x}");
                }
            }
        }
        Payload::Lowdeg { query, records } => {
            let _ = writeln!(s, "{query}: {} records", records.len());
            for r in records {
                let _ = writeln!(s, "  {:<12} {:<14} r={:<6} d={:<6} count={:<3} {}", r.code, r.name, r.r, r.d, opt_str(&r.count), r.clauses.join(" "));
            }
        }
        Payload::MindegPsl { n, q, degree } => {
            let _ = writeln!(s, "PSL({n},{q}): minimal degree {degree}");
        }
        Payload::Tables(t) => {
            for r in &t.rows {
                let _ = writeln!(
                    s,
                    "{:<14} {:<14} {:<6} {:<16} {:<26} fi={:<8} {}",
                    r.name,
                    opt_str(&r.order),
                    r.origin.join(","),
                    opt_str(&r.external_id),
                    opt_str(&r.structure),
                    r.fi.iter().map(u64::to_string).collect::<Vec<_>>().join(","),
                    r.notes.join("; ")
                );
            }
            for c in t.structures.iter().flatten() {
                let _ = writeln!(s, "({}) {}: {}{}", c.clause, c.kind, c.groups, if c.tensor_placeholder { " [tensor]" } else { "" });
                let _ = writeln!(s, "    {}", c.detail);
            }
            if t.unclassified {
                let _ = writeln!(s, "degree {}: essentially unclassified", t.degree);
            }
        }
        Payload::Status { degree, complete, missing } => {
            let _ = writeln!(s, "degree {degree}: {}", if *complete { "complete" } else { "incomplete" });
            for m in missing {
                let _ = writeln!(s, "  - {m}");
            }
        }
        Payload::Composite(c) => {
            for n in &c.notes {
                let _ = writeln!(s, "{n}");
            }
            let _ = writeln!(s, "case 3 (p, s): {:?}", c.case3);
            let _ = writeln!(s, "case 4 (s, m): {:?}", c.case4);
        }
        Payload::Construct(c) => {
            let _ = writeln!(s, "p={} m={} {} constants in Q(z_{})", c.p, c.m, c.normalization, c.field_modulus);
            let _ = writeln!(s, "c1, c2, c3 = {}", c.constants.join(" ; "));
            let _ = writeln!(s, "det sigma, tau, f1, f2, f3 = {}", c.determinants.join(" ; "));
            let _ = writeln!(s, "heisenberg relation: {}", c.heisenberg);
            if let Some(cl) = &c.closure {
                let _ = writeln!(s, "closure linear {} projective {} (expected linear {})", opt_str(&cl.linear), opt_str(&cl.projective), cl.expected_linear);
            }
            if let Some(pg) = &c.polygons {
                let _ = writeln!(s, "polygons constructed {} valid {} found by search {} agree {}", pg.constructed, pg.all_polygons, pg.found_by_search, pg.search_matches);
            }
            if let Some(d) = &c.dump {
                s.push_str(d);
            }
        }
        Payload::Induce(i) => {
            let _ = writeln!(s, "Ind {} -> {} (index {}) of chi{}", i.sub, i.ambient, i.index, i.character);
            for (c, v) in i.classes.iter().zip(&i.values) {
                let _ = writeln!(s, "  {c:<4} {v}");
            }
            let _ = writeln!(s, "degree {} <chi,1> = {} <chi,chi> = {}", i.degree, i.with_trivial, i.norm);
            let _ = writeln!(s, "decomposition {}", i.decomposition.join(" "));
            let _ = writeln!(s, "irreducible {} frobenius {}", opt_str(&i.irreducible), i.frobenius_all_pairs);
        }
        Payload::LoadDegrees { path, rows } => {
            let _ = writeln!(s, "{path}: {} rows", rows.len());
            for r in rows {
                let _ = writeln!(s, "  {:<12} cover={} d={} count={} char={} {}", r.code, r.cover, r.degree, opt_str(&r.count), r.characteristic, r.source);
            }
        }
    }
    for n in &env.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

/// Runs one invocation; returns (exit code, stdout, stderr).
pub fn run<I, T>(args: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (0, text, String::new()) } else { (2, String::new(), text) };
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let env = Envelope {
                command: args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
                provenance: o.provenance,
                notes: o.notes,
                result: o.payload,
            };
            let text = if cli.json {
                serde_json::to_string_pretty(&env).expect("serializable") + "\n"
            } else {
                render_text(&env)
            };
            (0, text, String::new())
        }
        Err(e) => (e.exit_code(), String::new(), format!("error: {}\n", e.message())),
    }
}
