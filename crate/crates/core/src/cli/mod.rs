//! Command-line interface. Exit codes: 0 success, 1 a claim failed, 2 usage or I/O error.

pub mod checks;
pub mod export;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::catalog::{build_system, SystemId};
use crate::golden::{self, GoldenError};
use crate::numerics::ExactRay;
use crate::penrose::RayLabel;
use crate::systems::{enumerate_bases, signature};
use checks::{describe, Check};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "witting-ks",
    version,
    about = "Penrose, Witting and E8 ray systems and their Kochen-Specker proofs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Export the rays of a system.
    Rays {
        system: SystemId,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the bases of a system and its signature.
    Bases {
        system: SystemId,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check one of the stated claims.
    Verify {
        #[arg(value_enum)]
        check: VerifyCheck,
        #[command(flatten)]
        tables: TableArgs,
    },
    /// Colorability search or parity-proof analysis.
    Ks {
        #[arg(value_enum)]
        action: KsAction,
        system: SystemId,
        /// Maximum number of parity certificates to print.
        #[arg(long, default_value_t = 10)]
        limit: usize,
        /// Maximum number of bases in a printed certificate.
        #[arg(long)]
        max_weight: Option<usize>,
    },
    /// Run every check and write the full report as JSON.
    Report {
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        tables: TableArgs,
        /// Worker threads for the parallel searches.
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(clap::Args, Debug)]
struct TableArgs {
    /// Replacement for the bundled ray table.
    #[arg(long)]
    table1: Option<PathBuf>,
    /// Replacement for the bundled basis table.
    #[arg(long)]
    table3: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyCheck {
    Equivalence,
    Tables,
    Monomial,
    Gosset,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KsAction {
    Color,
    Parity,
}

type Tables = (Vec<(RayLabel, ExactRay)>, Vec<Vec<RayLabel>>);

fn load_tables(args: &TableArgs) -> Result<Tables, GoldenError> {
    let t1 = match &args.table1 {
        Some(p) => golden::parse_table1(&golden::read_file(p)?)?,
        None => golden::table1(),
    };
    let t3 = match &args.table3 {
        Some(p) => golden::parse_table3(&golden::read_file(p)?)?,
        None => golden::table3(),
    };
    Ok((t1, t3))
}

/// Output sink that is either stdout or a file.
fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => out.write_all(text.as_bytes()),
    }
}

fn print_check(out: &mut dyn Write, c: &Check) -> std::io::Result<()> {
    writeln!(out, "{}: {}", c.name, if c.passed { "PASS" } else { "FAIL" })?;
    for d in &c.details {
        writeln!(out, "  {d}")?;
    }
    Ok(())
}

/// Systems for which a claim about proof content is made.
fn penrose_family(id: SystemId) -> bool {
    matches!(
        id,
        SystemId::PenroseEq3 | SystemId::PenroseCanonical | SystemId::Witting
    )
}

/// Runs the tool with the given arguments (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Rays {
            system,
            format,
            out: path,
        } => {
            let e = export::export_system(system)?;
            let text = match format {
                Format::Json => export::to_json(&e),
                Format::Csv => export::to_csv(&e),
            };
            emit(out, path.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
        Command::Bases { system, out: path } => {
            let sys = build_system(system)?;
            let bases = enumerate_bases(&sys)?;
            let mut text = String::new();
            for b in &bases.bases {
                text += &b.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
                text.push('\n');
            }
            text += &format!("signature: {}\n", signature(&sys, &bases));
            emit(out, path.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
        Command::Verify { check, tables } => {
            let (t1, t3) = load_tables(&tables)?;
            let c = match check {
                VerifyCheck::Equivalence => checks::check_equivalence(&t1)?,
                VerifyCheck::Tables => checks::check_tables(&t3)?,
                VerifyCheck::Monomial => checks::check_monomial(&t1)?,
                VerifyCheck::Gosset => checks::check_gosset()?,
            };
            print_check(out, &c)?;
            Ok(if c.passed { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Ks {
            action: KsAction::Color,
            system,
            ..
        } => {
            let s = checks::coloring_summary(system)?;
            writeln!(out, "{system}: {}", describe(&s.outcome))?;
            let ok = !(penrose_family(system) && s.outcome.is_colorable());
            Ok(if ok { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Ks {
            action: KsAction::Parity,
            system,
            limit,
            max_weight,
        } => {
            let p = checks::parity_summary(system, limit, max_weight)?;
            writeln!(out, "system: {system}")?;
            writeln!(out, "rank: {}", p.rank)?;
            writeln!(out, "kernel_dim: {}", p.kernel_dim)?;
            writeln!(out, "proof_count: {}", p.proof_count)?;
            if p.proof_count != "0" {
                writeln!(out, "  = 2^{}", p.kernel_dim - 1)?;
            }
            writeln!(
                out,
                "certificates: {} (all verified: {})",
                p.certificates.len(),
                p.certificates_verified
            )?;
            for c in &p.certificates {
                writeln!(out, "  {} bases: {:?}", c.len(), c)?;
            }
            let count: BigUint = p.proof_count.parse()?;
            let claim = match system {
                id if penrose_family(id) => count == BigUint::from(0u8),
                SystemId::E8 => count > BigUint::from(1_000_000_000u64),
                _ => true,
            };
            Ok(if claim && p.certificates_verified {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
        Command::Report {
            out: path,
            tables,
            threads,
        } => {
            let (t1, t3) = load_tables(&tables)?;
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.unwrap_or(0))
                .build()?;
            let doc = pool.install(|| report::build_report(&t1, &t3))?;
            let json = serde_json::to_string_pretty(&doc)? + "\n";
            match &path {
                Some(p) => {
                    std::fs::write(p, &json)?;
                    for c in &doc.claims {
                        writeln!(out, "{}: {}", c.name, if c.passed { "PASS" } else { "FAIL" })?;
                        for d in c.details.iter().filter(|d| d.starts_with("FAILED")) {
                            writeln!(out, "  {d}")?;
                        }
                    }
                    writeln!(out, "digest: {}", doc.digest)?;
                }
                None => out.write_all(json.as_bytes())?,
            }
            Ok(if doc.passed { EXIT_OK } else { EXIT_FAILED })
        }
    }
}
