use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use kstab::catalog::{default_catalog, load_catalog, run_catalog};
use kstab::invariants::{coefficient_a, report};
use kstab::math::{parse_rational, to_decimal};
use kstab::refinement::{convergence_table, Base};
use kstab::report::{
    exact_with_decimal, render_outcome_line, render_report_text, CoefficientDoc, ConvergenceDoc,
    ConvergenceRowDoc, EntryDoc, ReportDoc,
};
use kstab::{Construction, Error, Rational};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INVALID: u8 = 2;

#[derive(Parser)]
#[command(name = "kstab")]
#[command(about = "Exact K-stability invariants of blow-ups of P^1-bundle compactifications")]
#[command(version)]
struct Cli {
    /// Emit one structured JSON document instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Suppress tables; keep failures and the summary
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Print the pair coefficient a(n, r)
    Coeff {
        /// Dimension n of Y
        #[arg(long)]
        dim: u32,
        /// Index r with -K_V ~ rL, as p/q
        #[arg(long, value_parser = rational_arg)]
        index: Rational,
    },
    /// Volumes, S- and beta-invariants and the classification of one construction
    Invariants {
        #[arg(long)]
        dim: u32,
        #[arg(long, value_parser = rational_arg)]
        index: Rational,
        /// l with B ~ lL, as p/q
        #[arg(long = "l", value_parser = rational_arg)]
        l: Rational,
        /// (-K_V)^(n-1), as p/q
        #[arg(long = "vol-v", value_parser = rational_arg, default_value = "1")]
        vol_v: Rational,
    },
    /// Run a catalog file (default: the shipped catalog)
    Catalog { path: Option<PathBuf> },
    /// Finite-level coefficients a_m and their distance to a(n, r), at l = 2
    Refine {
        #[arg(long)]
        dim: u32,
        #[arg(long, value_parser = rational_arg)]
        index: Rational,
        /// ps:<s>:<d> for P^s with L = O(d), or p1p1:<d>
        #[arg(long)]
        base: String,
        /// Comma-separated levels m
        #[arg(long = "m", value_delimiter = ',', required = true)]
        m: Vec<u64>,
    },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((code, text)) => {
            // A closed pipe (e.g. `kstab catalog | head`) is not an error worth reporting.
            let mut stdout = std::io::stdout().lock();
            match stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
            {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_INVALID)
                }
                _ => ExitCode::from(code),
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

/// Runs one command, returning its exit code and everything destined for stdout.
fn run(cli: &Cli) -> Result<(u8, String), Error> {
    let mut out = String::new();
    match &cli.command {
        Commands::Coeff { dim, index } => {
            let a = coefficient_a(*dim, index)?;
            if cli.json {
                let doc = CoefficientDoc {
                    n: *dim,
                    r: index.clone(),
                    a,
                };
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializes")
                );
            } else if cli.quiet {
                let _ = writeln!(out, "{a}");
            } else {
                let _ = writeln!(out, "{}", exact_with_decimal(&a, 12));
            }
            Ok((0, out))
        }
        Commands::Invariants {
            dim,
            index,
            l,
            vol_v,
        } => {
            let c = Construction::new(*dim, index.clone(), l.clone(), vol_v.clone())?;
            let rep = report(&c)?;
            if cli.json {
                let doc = ReportDoc {
                    entries: vec![EntryDoc::new("invariants", &c, &rep, true)],
                };
                let _ = writeln!(out, "{}", doc.to_json());
            } else if cli.quiet {
                let _ = writeln!(out, "{}", rep.classification);
            } else {
                let _ = write!(out, "{}", render_report_text(&rep));
            }
            Ok((0, out))
        }
        Commands::Catalog { path } => {
            let entries = match path {
                Some(p) => load_catalog(p)?,
                None => default_catalog(),
            };
            let outcomes = run_catalog(&entries)?;
            let failed = outcomes.iter().filter(|o| !o.pass()).count();
            if cli.json {
                let _ = writeln!(out, "{}", ReportDoc::from_outcomes(&outcomes).to_json());
            } else {
                for o in &outcomes {
                    if !cli.quiet || !o.pass() {
                        let _ = writeln!(out, "{}", render_outcome_line(o));
                    }
                }
                let _ = writeln!(
                    out,
                    "{}/{} entries passed",
                    outcomes.len() - failed,
                    outcomes.len()
                );
            }
            Ok((if failed == 0 { 0 } else { EXIT_MISMATCH }, out))
        }
        Commands::Refine {
            dim,
            index,
            base,
            m,
        } => {
            let base: Base = base.parse()?;
            let c = Construction::new(
                *dim,
                index.clone(),
                Rational::from_integer(2.into()),
                Rational::from_integer(1.into()),
            )?;
            let table = convergence_table(&c, base.hilbert(), m)?;
            let target = coefficient_a(*dim, index)?;
            if cli.json {
                let doc = ConvergenceDoc {
                    n: *dim,
                    r: index.clone(),
                    base: base.to_string(),
                    target,
                    rows: table
                        .into_iter()
                        .map(|row| ConvergenceRowDoc {
                            m: row.m,
                            a_m: row.a_m,
                            error: row.error,
                        })
                        .collect(),
                };
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializes")
                );
            } else {
                if !cli.quiet {
                    let _ = writeln!(out, "# a({dim}, {index}) = {target} over {base}");
                    let _ = writeln!(out, "m, a_m, error");
                }
                for row in table {
                    let _ = writeln!(
                        out,
                        "{}, {}, {}",
                        row.m,
                        row.a_m,
                        to_decimal(&row.error, 12)
                    );
                }
            }
            Ok((0, out))
        }
    }
}
