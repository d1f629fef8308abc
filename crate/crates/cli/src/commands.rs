//! The query commands. Each returns a [`Report`]: the JSON payload, the
//! plain-text rendering and the exit code.

use std::fmt::Write as _;

use lattika_core::catalog::{components, DeformationType, Witness};
use lattika_core::discriminant::discriminant_group;
use lattika_core::eichler::{criterion_applies, orbit_invariant, OrbitExplorer, OrbitInvariant};
use lattika_core::mukai::MukaiVector;
use lattika_core::{named_lattice, parse_lattice_expr, same_orbit, BigInt, Error, Lattice, LatticeVector};
use serde_json::{json, Value};

use crate::query::{int, ints, qmod2, vector, QueryResult};
use crate::style::Style;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_APPLICABLE: i32 = 3;
pub const EXIT_INFEASIBLE: i32 = 4;

/// A failed query, reported on stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::usage(e.to_string())
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub result: QueryResult,
    pub plain: String,
    pub code: i32,
}

/// Resolves a catalog name (`OG6S`, `OG6`, `U`, `E8_MINUS`,
/// `MUKAI_ABELIAN`) or parses a lattice expression.
pub fn resolve_lattice(text: &str) -> Result<Lattice, CliError> {
    named_lattice(text).or_else(|_| parse_lattice_expr(text)).map_err(CliError::from)
}

pub fn parse_vector(text: &str, lattice: &Lattice, what: &str) -> Result<LatticeVector, CliError> {
    let v: LatticeVector = text
        .parse()
        .map_err(|_| CliError::usage(format!("--{what}: expected comma-separated integers, got `{text}`")))?;
    if v.len() != lattice.rank() {
        return Err(CliError::usage(format!(
            "--{what}: lattice has rank {}, vector has {} coordinates",
            lattice.rank(),
            v.len()
        )));
    }
    if v.is_zero() {
        return Err(CliError::usage(format!("--{what}: vector must be nonzero")));
    }
    Ok(v)
}

fn lattice_name(l: &Lattice) -> String {
    l.label().map(str::to_string).unwrap_or_else(|| "<unnamed>".to_string())
}

fn list(items: impl IntoIterator<Item = String>) -> String {
    format!("[{}]", items.into_iter().collect::<Vec<_>>().join(", "))
}

pub fn cmd_discriminant(expr: &str, style: Style) -> Result<Report, CliError> {
    let lattice = parse_lattice_expr(expr)?;
    let a = discriminant_group(&lattice);
    let (pos, neg) = lattice.signature();

    let mut r = QueryResult::new("discriminant");
    r.input("expr", expr);
    r.output("lattice", lattice_name(&lattice))
        .output("rank", lattice.rank())
        .output("det", int(&lattice.det()))
        .output("signature", json!([pos, neg]))
        .output("even", lattice.is_even())
        .output("invariant_factors", ints(a.invariant_factors()))
        .output("order", int(&a.order()))
        .output("cyclic", a.is_cyclic());
    let q_values = a.generator_squares().map(|qs| qs.to_vec());
    match &q_values {
        Some(qs) => {
            r.output("q_values", Value::Array(qs.iter().map(qmod2).collect()));
            r.note("q-values are q(g) = g·g mod 2Z for the generators g of L∨/L");
        }
        None => {
            r.output("q_values", Value::Null);
            r.note("the lattice is odd, so the discriminant quadratic form is undefined");
        }
    }
    r.note("order of L∨/L equals |det G|");

    let mut p = String::new();
    let k = |s: &str| style.key(s);
    writeln!(p, "{} {}", k("lattice:"), lattice_name(&lattice)).unwrap();
    writeln!(p, "{} {}", k("rank:"), lattice.rank()).unwrap();
    writeln!(p, "{} {}", k("det:"), lattice.det()).unwrap();
    writeln!(p, "{} ({pos}, {neg})", k("signature:")).unwrap();
    writeln!(p, "{} {}", k("invariant factors:"), list(a.invariant_factors().iter().map(|d| d.to_string()))).unwrap();
    writeln!(p, "{} {}", k("order:"), a.order()).unwrap();
    writeln!(p, "{} {}", k("cyclic:"), a.is_cyclic()).unwrap();
    match &q_values {
        Some(qs) => writeln!(p, "{} {}", k("q-values:"), list(qs.iter().map(|q| q.to_string()))).unwrap(),
        None => writeln!(p, "{} undefined (odd lattice)", k("q-values:")).unwrap(),
    }
    Ok(Report {
        result: r,
        plain: p,
        code: EXIT_OK,
    })
}

/// Budget for the optional BFS oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub depth: usize,
    pub bound: u32,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { depth: 6, bound: 4 }
    }
}

impl OracleBudget {
    /// Reads `depth=D` and `bound=B` settings; missing keys keep defaults.
    pub fn parse(settings: &[String]) -> Result<Self, CliError> {
        let mut b = OracleBudget::default();
        for s in settings {
            let bad = || CliError::usage(format!("--oracle: expected depth=D or bound=B, got `{s}`"));
            let (key, value) = s.split_once('=').ok_or_else(bad)?;
            match key.trim() {
                "depth" => b.depth = value.trim().parse().map_err(|_| bad())?,
                "bound" => b.bound = value.trim().parse().map_err(|_| bad())?,
                _ => return Err(bad()),
            }
        }
        Ok(b)
    }
}

fn invariant_json(inv: &OrbitInvariant) -> Value {
    json!({
        "content": int(&inv.content),
        "square": int(&inv.square),
        "divisibility": int(&inv.divisibility),
        "disc_value": qmod2(&inv.disc_value),
    })
}

fn invariant_plain(inv: &OrbitInvariant) -> String {
    format!(
        "content {}, square {}, divisibility {}, disc value {}",
        inv.content, inv.square, inv.divisibility, inv.disc_value
    )
}

pub fn cmd_orbit(target: &str, u: &str, v: &str, oracle: Option<OracleBudget>, style: Style) -> Result<Report, CliError> {
    let lattice = resolve_lattice(target)?;
    if !lattice.is_even() {
        return Err(CliError::usage("orbit questions need an even lattice"));
    }
    let u = parse_vector(u, &lattice, "u")?;
    let v = parse_vector(v, &lattice, "v")?;
    let iu = orbit_invariant(&lattice, &u)?;
    let iv = orbit_invariant(&lattice, &v)?;

    let mut r = QueryResult::new("orbit");
    r.input("lattice", target).input("u", vector(&u)).input("v", vector(&v));
    if let Some(b) = oracle {
        r.input("oracle", json!({ "depth": b.depth, "bound": b.bound }));
    }
    r.output("lattice", lattice_name(&lattice))
        .output("u", invariant_json(&iu))
        .output("v", invariant_json(&iv));

    let mut p = String::new();
    let k = |s: &str| style.key(s);
    writeln!(p, "{} {}", k("lattice:"), lattice_name(&lattice)).unwrap();
    writeln!(p, "{} {}", k("u:"), invariant_plain(&iu)).unwrap();
    writeln!(p, "{} {}", k("v:"), invariant_plain(&iv)).unwrap();

    let mut code = EXIT_OK;
    match criterion_applies(&lattice) {
        Ok(()) => {
            let verdict = same_orbit(&lattice, &u, &v)?;
            r.output("applicable", true).output("same_orbit", verdict);
            r.note("Eichler criterion: L contains U⊕U and A_L is cyclic, so content, square and divisibility decide the orbit");
            writeln!(p, "{} {}", k("same orbit:"), style.verdict(verdict)).unwrap();
        }
        Err(reason) => {
            code = EXIT_NOT_APPLICABLE;
            r.output("applicable", false).output("reason", reason.to_string());
            r.note("Eichler criterion needs an even lattice with two certified hyperbolic planes and cyclic A_L");
            writeln!(p, "{} criterion not applicable: {reason}", k("same orbit:")).unwrap();
        }
    }

    if let Some(b) = oracle {
        let explorer = OrbitExplorer::new(&lattice)?;
        let distance = explorer.distance(&u, &v, b.bound, b.depth);
        r.output(
            "oracle",
            json!({
                "generators": explorer.generator_count(),
                "found": distance.is_some(),
                "distance": distance,
            }),
        );
        r.note("the BFS oracle only proves reachability; not found means not found within the budget");
        let found = match distance {
            Some(d) => format!("path of length {d}"),
            None => format!("no path within depth {} and bound {}", b.depth, b.bound),
        };
        writeln!(p, "{} {found} ({} generators)", k("oracle:"), explorer.generator_count()).unwrap();
    }

    Ok(Report { result: r, plain: p, code })
}

fn law_note(dt: DeformationType) -> &'static str {
    match dt {
        DeformationType::Og6s => "divisibility 2 needs q([h/2]) = d/2 to equal 3/2 mod 2, i.e. d ≡ 3 mod 4",
        DeformationType::Og6Smooth => "divisibility 2 needs d/2 ∈ {1, 3/2} mod 2, i.e. d ≡ 2 or 3 mod 4",
    }
}

fn catalog_expr(dt: DeformationType) -> &'static str {
    match dt {
        DeformationType::Og6s => "U+U+U+[-2]",
        DeformationType::Og6Smooth => "U+U+U+[-2]+[-2]",
    }
}

fn witness_json(w: &Witness) -> Value {
    json!({
        "degree": int(&BigInt::from(w.polarization.degree())),
        "d": int(&BigInt::from(w.polarization.half_degree())),
        "divisibility": int(&w.divisibility),
        "square": int(&w.square),
        "construction": w.construction.to_string(),
        "effectivity": w.effectivity.name(),
        "vector": vector(&w.vector),
    })
}

pub const TSV_HEADER: &str = "degree\tdivisibility\td\tconstruction\teffectivity\tvector";

fn witness_tsv(w: &Witness) -> String {
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}",
        w.polarization.degree(),
        w.divisibility,
        w.polarization.half_degree(),
        w.construction,
        w.effectivity.name(),
        w.vector
    )
}

/// The component table. `tsv` selects tab-separated plain output.
pub fn cmd_components(dt: DeformationType, d_max: u64, tsv: bool, style: Style) -> Result<Report, CliError> {
    if d_max == 0 {
        return Err(CliError::usage("--dmax must be at least 1"));
    }
    let rows = components(dt, d_max);

    let mut r = QueryResult::new("components");
    r.input("type", dt.name()).input("dmax", int(&BigInt::from(d_max)));
    r.output("type", dt.name())
        .output("lattice", catalog_expr(dt))
        .output("count", rows.len())
        .output("rows", Value::Array(rows.iter().map(witness_json).collect()));
    r.note("one row per connected component: degree 2d and divisibility determine the orbit");
    r.note("divisibility 1 is realized for every d by e1 + d*f1");
    r.note(law_note(dt));

    let mut p = String::new();
    if tsv {
        writeln!(p, "{TSV_HEADER}").unwrap();
        for w in &rows {
            writeln!(p, "{}", witness_tsv(w)).unwrap();
        }
    } else {
        writeln!(p, "{} {}", style.key("type:"), dt.name()).unwrap();
        writeln!(p, "{} {}", style.key("lattice:"), catalog_expr(dt)).unwrap();
        writeln!(p, "{} {}", style.key("components:"), rows.len()).unwrap();
        for w in &rows {
            writeln!(
                p,
                "  (2d, e) = ({}, {})  {} = ({})  [{}]",
                w.polarization.degree(),
                w.divisibility,
                w.construction,
                w.vector,
                w.effectivity.name()
            )
            .unwrap();
        }
    }
    Ok(Report {
        result: r,
        plain: p,
        code: EXIT_OK,
    })
}

/// A single feasibility query; infeasible types exit with code 4.
pub fn cmd_witness(dt: DeformationType, d: u64, e: u32, style: Style) -> Result<Report, CliError> {
    if d == 0 {
        return Err(CliError::usage("--d must be at least 1"));
    }
    let mut r = QueryResult::new("witness");
    r.input("type", dt.name())
        .input("d", int(&BigInt::from(d)))
        .input("e", int(&BigInt::from(e)));
    r.note(law_note(dt));
    let mut p = String::new();
    match dt.witness(d, e) {
        Ok(w) => {
            r.output("feasible", true).output("witness", witness_json(&w));
            writeln!(p, "{} {}", style.key("feasible:"), style.verdict(true)).unwrap();
            writeln!(p, "{} {} = ({})", style.key("witness:"), w.construction, w.vector).unwrap();
            writeln!(p, "{} {}", style.key("square:"), w.square).unwrap();
            writeln!(p, "{} {}", style.key("divisibility:"), w.divisibility).unwrap();
            writeln!(p, "{} {}", style.key("effectivity:"), w.effectivity.name()).unwrap();
            Ok(Report {
                result: r,
                plain: p,
                code: EXIT_OK,
            })
        }
        Err(err @ Error::Infeasible { .. }) => {
            r.output("feasible", false).output("reason", err.to_string());
            writeln!(p, "{} {} ({err})", style.key("feasible:"), style.verdict(false)).unwrap();
            Ok(Report {
                result: r,
                plain: p,
                code: EXIT_INFEASIBLE,
            })
        }
        Err(other) => Err(other.into()),
    }
}

/// Mukai vector input: either `l²` alone, or an explicit NS lattice with
/// coordinates of `l`.
#[derive(Debug, Clone)]
pub enum MukaiMiddle {
    Square(BigInt),
    Explicit { ns: String, l: String },
}

pub fn cmd_mukai(r_rank: &BigInt, middle: &MukaiMiddle, s: &BigInt, style: Style) -> Result<Report, CliError> {
    let mut r = QueryResult::new("mukai");
    r.input("r", int(r_rank)).input("s", int(s));
    let v = match middle {
        MukaiMiddle::Square(lsq) => {
            r.input("lsq", int(lsq));
            MukaiVector::from_square(r_rank.clone(), lsq.clone(), s.clone())?
        }
        MukaiMiddle::Explicit { ns, l } => {
            let lattice = resolve_lattice(ns)?;
            let lv: LatticeVector = l
                .parse()
                .map_err(|_| CliError::usage(format!("--l: expected comma-separated integers, got `{l}`")))?;
            r.input("ns", ns.as_str()).input("l", vector(&lv));
            MukaiVector::new(r_rank.clone(), lv, s.clone(), lattice)?
        }
    };
    let square = v.square();
    let dim = v.og6s_dimension();
    r.output("square", int(&square))
        .output("og6s", dim.is_some())
        .output("expected_dimension", dim.as_ref().map_or(Value::Null, int));
    r.note("v² = l² − 2rs");
    r.note("OG6S type: v = 2w with w primitive and w² = 2; expected dimension v² − 2");

    let mut p = String::new();
    writeln!(p, "{} {}", style.key("square:"), square).unwrap();
    writeln!(p, "{} {}", style.key("og6s:"), style.verdict(dim.is_some())).unwrap();
    match &dim {
        Some(d) => writeln!(p, "{} {d}", style.key("expected dimension:")).unwrap(),
        None => writeln!(p, "{} n/a", style.key("expected dimension:")).unwrap(),
    }
    Ok(Report {
        result: r,
        plain: p,
        code: EXIT_OK,
    })
}
