//! Command-line front end for `lattika-core`.
//!
//! Vectors are comma-separated integers in the lattice's basis order. For
//! the catalog lattices that is `e₁,f₁,e₂,f₂,e₃,f₃` followed by the `[−2]`
//! generators.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 Eichler criterion not
//! applicable, 4 infeasible polarization type.

pub mod commands;
pub mod query;
pub mod style;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use lattika_core::catalog::DeformationType;
use lattika_core::BigInt;

use commands::{CliError, MukaiMiddle, OracleBudget, Report, EXIT_USAGE};
pub use query::QueryResult;
use style::Style;

const VECTOR_HELP: &str = "comma-separated integers in basis order; catalog lattices use e1,f1,e2,f2,e3,f3 then the [-2] generators";

#[derive(Debug, Parser)]
#[command(name = "lattika", version, about = "Exact queries on even integral lattices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Format {
    /// Emit a JSON query result instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Discriminant group, invariant factors and q-values of a lattice
    /// expression such as `U+U+U+[-2]`.
    Discriminant {
        expr: String,
        #[command(flatten)]
        format: Format,
    },
    /// Orbit invariants of two vectors and the Eichler-criterion verdict.
    Orbit {
        /// Catalog name (OG6S, OG6, U, E8_MINUS, MUKAI_ABELIAN) or expression.
        lattice: String,
        #[arg(long, allow_hyphen_values = true, help = VECTOR_HELP)]
        u: String,
        #[arg(long, allow_hyphen_values = true, help = VECTOR_HELP)]
        v: String,
        /// Also run the BFS oracle, e.g. `--oracle depth=8 bound=5`.
        #[arg(long, num_args = 0..=2, value_name = "KEY=VALUE")]
        oracle: Option<Vec<String>>,
        #[command(flatten)]
        format: Format,
    },
    /// One witness per connected component of polarized moduli with d ≤ dmax.
    Components {
        /// og6s or og6
        #[arg(value_parser = parse_type)]
        r#type: DeformationType,
        #[arg(long)]
        dmax: u64,
        /// Tab-separated output.
        #[arg(long, conflicts_with = "json")]
        tsv: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Witness class for a single polarization type (2d, e); exits 4 when
    /// no such class exists.
    Witness {
        #[arg(value_parser = parse_type)]
        r#type: DeformationType,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        e: u32,
        #[command(flatten)]
        format: Format,
    },
    /// Square and OG6S admissibility of a Mukai vector (r, l, s).
    Mukai {
        #[arg(long, allow_hyphen_values = true)]
        r: BigInt,
        /// l² for l a generator of the rank-one lattice [l²].
        #[arg(long, allow_hyphen_values = true, required_unless_present = "ns", conflicts_with = "ns")]
        lsq: Option<BigInt>,
        #[arg(long, allow_hyphen_values = true)]
        s: BigInt,
        /// Explicit even Néron-Severi lattice; requires --l.
        #[arg(long, requires = "l")]
        ns: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "ns", help = VECTOR_HELP)]
        l: Option<String>,
        #[command(flatten)]
        format: Format,
    },
}

fn parse_type(s: &str) -> Result<DeformationType, String> {
    s.parse().map_err(|_| format!("unknown deformation type `{s}` (expected og6s or og6)"))
}

fn dispatch(command: Command, style: Style) -> (Result<Report, CliError>, bool) {
    match command {
        Command::Discriminant { expr, format } => (commands::cmd_discriminant(&expr, style), format.json),
        Command::Orbit { lattice, u, v, oracle, format } => {
            let report = oracle
                .map(|s| OracleBudget::parse(&s))
                .transpose()
                .and_then(|budget| commands::cmd_orbit(&lattice, &u, &v, budget, style));
            (report, format.json)
        }
        Command::Components { r#type, dmax, tsv, format } => {
            (commands::cmd_components(r#type, dmax, tsv, style), format.json)
        }
        Command::Witness { r#type, d, e, format } => (commands::cmd_witness(r#type, d, e, style), format.json),
        Command::Mukai { r, lsq, s, ns, l, format } => {
            let middle = match (lsq, ns, l) {
                (Some(lsq), _, _) => MukaiMiddle::Square(lsq),
                (None, Some(ns), Some(l)) => MukaiMiddle::Explicit { ns, l },
                _ => unreachable!("clap enforces --lsq or --ns with --l"),
            };
            (commands::cmd_mukai(&r, &middle, &s, style), format.json)
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let (report, json) = dispatch(cli.command, Style::from_env());
    match report {
        Ok(report) => {
            let text = if json {
                format!("{}\n", report.result.to_json())
            } else {
                report.plain
            };
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            report.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}
