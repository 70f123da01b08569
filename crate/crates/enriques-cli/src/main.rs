//! Command-line front end for the involution-invariant calculus and the
//! classification-table checks.
//!
//! Five batch operations: computing the `(r, a, delta)` invariants of an
//! involution read from matrix files, evaluating the genus formula for a
//! triple, verifying every row of a classification table, partitioning
//! the table's surface types into realized and unresolved lists, and
//! enumerating candidate action tuples for a theta triple. Exit status
//! is 0 when all requested checks pass, 1 when a check fails, and 2 on
//! malformed input or usage errors.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process;

use clap::{Parser, Subcommand, ValueEnum};
use enriques_lattice::{
    bundled_table, derive_type_lists, enumerate_candidates, extension_invariants, format_row,
    k3_real_type, k3_triple, parse_int_matrix, parse_lattice_text, parse_table, theta_triples,
    validate_involution, verify_table, ExtensionInvariants, K3Triple, SurfaceType, TableRow,
    ThetaTriple,
};

#[derive(Parser)]
#[command(
    name = "enriques",
    version,
    about = "Involution invariants and classification-table checks for real Enriques surfaces"
)]
struct Cli {
    /// Output style: prose lines, or record lines in the table and
    /// type-list grammars.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the (r, a, delta) triple of an involution, plus the
    /// extension invariants relative to an invariant sublattice.
    Invariants {
        /// File holding the ambient Gram matrix (row count, then rows).
        #[arg(long)]
        lattice: PathBuf,
        /// File holding the involution matrix in the same format.
        #[arg(long)]
        involution: PathBuf,
        /// Optional file holding basis row vectors of an invariant
        /// primitive sublattice.
        #[arg(long)]
        sublattice: Option<PathBuf>,
    },
    /// Print the real-locus surface type determined by a triple r,a,d.
    K3Type {
        /// Triple as three comma-separated integers, e.g. 10,10,0.
        #[arg(long)]
        triple: String,
    },
    /// Run every consistency check on each row of a classification
    /// table and report per-row results.
    VerifyTable {
        /// Table file; defaults to the bundled classification table.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Partition the surface types offered by a table into realized
    /// and unresolved lists.
    DeriveTypes {
        /// Table file; defaults to the bundled classification table.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// List every candidate action tuple for one theta triple.
    Enumerate {
        /// Theta triple as three comma-separated integers, e.g. 4,2,0.
        #[arg(long)]
        theta: String,
    },
}

/// Result of one invocation: the exit code and the full stdout payload.
struct Outcome {
    exit_code: i32,
    payload: String,
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            // A reader closing the pipe early (e.g. `enriques ... | head`)
            // is not an error; any other write failure is.
            match io::stdout().write_all(outcome.payload.as_bytes()) {
                Ok(()) => process::exit(outcome.exit_code),
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {
                    process::exit(outcome.exit_code)
                }
                Err(e) => {
                    eprintln!("error: failed to write output: {e}");
                    process::exit(2);
                }
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            process::exit(2);
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    match &cli.command {
        Command::Invariants {
            lattice,
            involution,
            sublattice,
        } => run_invariants(cli.format, lattice, involution, sublattice.as_deref()),
        Command::K3Type { triple } => run_k3_type(triple),
        Command::VerifyTable { table } => run_verify_table(cli.format, table.as_deref()),
        Command::DeriveTypes { table } => run_derive_types(cli.format, table.as_deref()),
        Command::Enumerate { theta } => run_enumerate(cli.format, theta),
    }
}

fn read_file(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

/// Parses `r,a,d` (optionally parenthesized) into its three components.
fn parse_triple(text: &str) -> Result<(u32, u32, u8), String> {
    let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = trimmed.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!(
            "expected a triple r,a,d with three components, found `{text}`"
        ));
    }
    let r: u32 = parts[0]
        .parse()
        .map_err(|_| format!("invalid rank component `{}`", parts[0]))?;
    let a: u32 = parts[1]
        .parse()
        .map_err(|_| format!("invalid a component `{}`", parts[1]))?;
    let d: u8 = parts[2]
        .parse()
        .map_err(|_| format!("invalid delta component `{}`", parts[2]))?;
    if d > 1 {
        return Err(format!("delta must be 0 or 1, found {d}"));
    }
    Ok((r, a, d))
}

fn show_triple(t: &K3Triple) -> String {
    format!("({},{},{})", t.r, t.a, t.delta)
}

fn load_table(path: Option<&Path>) -> Result<Vec<TableRow>, String> {
    match path {
        Some(p) => {
            let text = read_file(p)?;
            parse_table(&text).map_err(|e| format!("{}: {e}", p.display()))
        }
        None => Ok(bundled_table()),
    }
}

fn run_invariants(
    format: Format,
    lattice_path: &Path,
    involution_path: &Path,
    sublattice_path: Option<&Path>,
) -> Result<Outcome, String> {
    let lattice = parse_lattice_text(&read_file(lattice_path)?)
        .map_err(|e| format!("{}: {e}", lattice_path.display()))?;
    let matrix = parse_int_matrix(&read_file(involution_path)?)
        .map_err(|e| format!("{}: {e}", involution_path.display()))?;
    let inv = validate_involution(&lattice, &matrix).map_err(|e| e.to_string())?;
    let triple = k3_triple(&inv).map_err(|e| e.to_string())?;

    let extension = match sublattice_path {
        Some(p) => {
            let basis =
                parse_int_matrix(&read_file(p)?).map_err(|e| format!("{}: {e}", p.display()))?;
            Some(extension_invariants(&inv, &basis).map_err(|e| e.to_string())?)
        }
        None => None,
    };

    let mut out = String::new();
    match format {
        Format::Text => {
            writeln!(out, "triple: {}", show_triple(&triple)).unwrap();
            if let Some(ext) = &extension {
                writeln!(out, "h_plus: {}", ext.h_plus).unwrap();
                writeln!(out, "h_minus: {}", ext.h_minus).unwrap();
                writeln!(out, "gamma: {}", ext.gamma).unwrap();
                writeln!(out, "alpha: {}", ext.alpha).unwrap();
                writeln!(out, "delta_S: {}", ext.delta_sigma_s).unwrap();
                writeln!(out, "delta_S_cap: {}", ext.delta_sigma_cap).unwrap();
                if let Some(bits) = &ext.s_sigma_class {
                    writeln!(out, "s_sigma over sublattice basis: {}", show_bits(bits))
                        .unwrap();
                }
            }
        }
        Format::Records => {
            writeln!(out, "triple={}", show_triple(&triple)).unwrap();
            if let Some(ext) = &extension {
                writeln!(out, "extension={}", show_extension_record(ext)).unwrap();
            }
        }
    }
    Ok(Outcome {
        exit_code: 0,
        payload: out,
    })
}

fn show_bits(bits: &[u8]) -> String {
    bits.iter().map(|b| b.to_string()).collect()
}

fn show_extension_record(ext: &ExtensionInvariants) -> String {
    let mut s = format!(
        "h+:{},h-:{},gamma:{},alpha:{},dS:{},dCap:{}",
        ext.h_plus, ext.h_minus, ext.gamma, ext.alpha, ext.delta_sigma_s, ext.delta_sigma_cap
    );
    if let Some(bits) = &ext.s_sigma_class {
        s.push_str(",s:");
        s.push_str(&show_bits(bits));
    }
    s
}

fn run_k3_type(triple_text: &str) -> Result<Outcome, String> {
    let (r, a, delta) = parse_triple(triple_text)?;
    let ty = k3_real_type(K3Triple { r, a, delta }).map_err(|e| e.to_string())?;
    Ok(Outcome {
        exit_code: 0,
        payload: format!("{ty}\n"),
    })
}

fn run_verify_table(format: Format, table_path: Option<&Path>) -> Result<Outcome, String> {
    let rows = load_table(table_path)?;
    let summary = verify_table(&rows);

    let mut out = String::new();
    match format {
        Format::Text => {
            for report in &summary.reports {
                if report.passed() {
                    writeln!(out, "{}: pass", report.row_id).unwrap();
                } else {
                    writeln!(out, "{}: FAIL", report.row_id).unwrap();
                    for check in report.failed_checks() {
                        writeln!(out, "  {}: {}", check.name, check.detail).unwrap();
                    }
                }
            }
            writeln!(out, "rows={} passed={}", summary.total, summary.passed).unwrap();
        }
        Format::Records => {
            for (row, report) in rows.iter().zip(&summary.reports) {
                writeln!(out, "{}", format_row(row)).unwrap();
                if !report.passed() {
                    for check in report.failed_checks() {
                        writeln!(
                            out,
                            "# {} failed {}: {}",
                            report.row_id, check.name, check.detail
                        )
                        .unwrap();
                    }
                }
            }
            writeln!(out, "# rows={} passed={}", summary.total, summary.passed).unwrap();
        }
    }
    Ok(Outcome {
        exit_code: if summary.passed == summary.total { 0 } else { 1 },
        payload: out,
    })
}

fn run_derive_types(format: Format, table_path: Option<&Path>) -> Result<Outcome, String> {
    let rows = load_table(table_path)?;
    let lists = derive_type_lists(&rows);
    let realized = sorted_type_strings(&lists.realized);
    let unresolved = sorted_type_strings(&lists.unresolved);

    let mut out = String::new();
    match format {
        Format::Text => {
            writeln!(
                out,
                "realized={} unresolved={}",
                realized.len(),
                unresolved.len()
            )
            .unwrap();
            writeln!(out, "realized types:").unwrap();
            for t in &realized {
                writeln!(out, "  {t}").unwrap();
            }
            writeln!(out, "unresolved types:").unwrap();
            for t in &unresolved {
                writeln!(out, "  {t}").unwrap();
            }
        }
        Format::Records => {
            writeln!(
                out,
                "# realized={} unresolved={}",
                realized.len(),
                unresolved.len()
            )
            .unwrap();
            writeln!(out, "# realized").unwrap();
            for t in &realized {
                writeln!(out, "{t}").unwrap();
            }
            writeln!(out, "# unresolved").unwrap();
            for t in &unresolved {
                writeln!(out, "{t}").unwrap();
            }
        }
    }
    Ok(Outcome {
        exit_code: 0,
        payload: out,
    })
}

fn sorted_type_strings(types: &[SurfaceType]) -> Vec<String> {
    let mut out: Vec<String> = types.iter().map(|t| t.to_string()).collect();
    out.sort();
    out
}

fn run_enumerate(format: Format, theta_text: &str) -> Result<Outcome, String> {
    let (r, a, delta) = parse_triple(theta_text)?;
    let theta = ThetaTriple { r, a, delta };
    if !theta_triples().contains(&theta) {
        return Err(format!(
            "{theta} is not among the 16 admissible theta triples"
        ));
    }
    let candidates = enumerate_candidates(theta).map_err(|e| e.to_string())?;

    let mut out = String::new();
    match format {
        Format::Text => {
            writeln!(out, "theta={theta} candidates={}", candidates.len()).unwrap();
            for c in &candidates {
                writeln!(
                    out,
                    "sigma={} tausigma={} gamma={} alpha={}",
                    show_triple(&c.sigma),
                    show_triple(&c.tausigma),
                    c.gamma,
                    c.alpha
                )
                .unwrap();
            }
        }
        Format::Records => {
            writeln!(out, "# theta={theta} candidates={}", candidates.len()).unwrap();
            for c in &candidates {
                writeln!(
                    out,
                    "sigma={}; tausigma={}; gamma={}; alpha={}",
                    show_triple(&c.sigma),
                    show_triple(&c.tausigma),
                    c.gamma,
                    c.alpha
                )
                .unwrap();
            }
        }
    }
    Ok(Outcome {
        exit_code: 0,
        payload: out,
    })
}
