//! Command-line front end: every capability of the library behind a
//! deterministic, pipeable interface. Data goes to stdout (or `--out`),
//! diagnostics to stderr. Exit codes: 0 success, 1 failed check or
//! fast-path/oracle disagreement, 2 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ringlat::render::{self, TableOp};
use ringlat::{
    check_suite, classify_all, classify_code, membership_code, min_distance, reduced_code,
    report_tables, ExplicitIdeal, FiniteAlgebraTable, OutputFormat, ReportKind, RingSpec, SuiteId,
    SuiteReport,
};

#[derive(Parser)]
#[command(
    name = "ringlat",
    version,
    about = "Ideal lattices of finite commutative rings, their logic algebras and block codes",
    after_help = "Ring specs look like Z4, Z6, Z2xZ4 or 2^1x2^2; composite moduli are split \
                  into prime-power factors. Set RINGLAT_WIDTH to widen text table cells."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format: text, json or csv
    #[arg(long, global = true, default_value = "text")]
    format: String,
    /// Write data output to a file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the ideals of a ring with exponent vectors and cardinalities
    Ideals {
        /// Ring spec, e.g. Z2xZ4
        spec: String,
        /// Also print each ideal's member set (needs |A| <= 256)
        #[arg(long)]
        members: bool,
        /// Re-derive everything from explicit element sets and compare
        #[arg(long)]
        oracle: bool,
    },
    /// Print a Cayley table of the ideal lattice, row operand first
    Table {
        spec: String,
        /// One of imp, oplus, sum, product, ann
        #[arg(long)]
        op: String,
        /// Recompute every entry from explicit element sets and compare
        #[arg(long)]
        oracle: bool,
    },
    /// Run axiom suites against the ideal lattice; exit 1 on any failure
    Check {
        spec: String,
        /// Suite to run (repeatable); defaults to the ten suites that hold
        /// for every finite commutative ring
        #[arg(long = "suite", value_name = "SUITE")]
        suites: Vec<String>,
    },
    /// Print a block code with its minimum distance and classification
    Code {
        spec: String,
        /// membership or reduced
        #[arg(long)]
        kind: String,
    },
    /// List all MV-algebras with n elements, one per multiplicative partition
    Classify { n: u64 },
    /// Regenerate a summary table: table1, table2 or table3
    Report {
        kind: String,
        /// Largest n (table1/table3) or ring order (table2)
        #[arg(long)]
        max: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn cell_width() -> usize {
    match std::env::var("RINGLAT_WIDTH") {
        Ok(raw) => raw.parse().unwrap_or_else(|_| {
            eprintln!("warning: RINGLAT_WIDTH `{raw}` is not a number, ignoring");
            0
        }),
        Err(_) => 0,
    }
}

fn emit(out: &Option<PathBuf>, data: &str) -> ringlat::Result<()> {
    match out {
        Some(path) => std::fs::write(path, data)
            .map_err(|e| ringlat::Error::InvalidArgument(format!("cannot write {path:?}: {e}"))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(data.as_bytes())
                .map_err(|e| ringlat::Error::InvalidArgument(e.to_string()))
        }
    }
}

fn json_line(value: serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("valid json");
    s.push('\n');
    s
}

fn run(cli: Cli) -> ringlat::Result<ExitCode> {
    let format: OutputFormat = cli.format.parse()?;
    match cli.command {
        Command::Ideals {
            spec,
            members,
            oracle,
        } => {
            let spec: RingSpec = spec.parse()?;
            if oracle && !verify_ideals_oracle(&spec)? {
                return Ok(ExitCode::from(1));
            }
            let data = match format {
                OutputFormat::Text => render::ideals_text(&spec, members)?,
                OutputFormat::Json => json_line(render::ideals_json(&spec, members)?),
                OutputFormat::Csv => render::ideals_csv(&spec),
            };
            emit(&cli.out, &data)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { spec, op, oracle } => {
            let spec: RingSpec = spec.parse()?;
            let op: TableOp = op.parse()?;
            let table = FiniteAlgebraTable::from_ideal_lattice(&spec)?;
            if oracle && !verify_table_oracle(&spec, &table, op)? {
                return Ok(ExitCode::from(1));
            }
            let data = match format {
                OutputFormat::Text => render::table_text(&table, op, cell_width()),
                OutputFormat::Json => json_line(render::table_json(&spec, &table, op)),
                OutputFormat::Csv => render::table_csv(&table, op),
            };
            emit(&cli.out, &data)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { spec, suites } => {
            let spec: RingSpec = spec.parse()?;
            let suites: Vec<SuiteId> = if suites.is_empty() {
                SuiteId::UNIVERSAL.to_vec()
            } else {
                suites
                    .iter()
                    .map(|s| s.parse())
                    .collect::<ringlat::Result<_>>()?
            };
            let table = FiniteAlgebraTable::from_ideal_lattice(&spec)?;
            let reports: Vec<SuiteReport> =
                suites.iter().map(|&id| check_suite(&table, id)).collect();
            let data = match format {
                OutputFormat::Text => render::suite_reports_text(&table, &reports),
                OutputFormat::Json => {
                    json_line(render::suite_reports_json(&spec, &table, &reports))
                }
                OutputFormat::Csv => render::suite_reports_csv(&table, &reports),
            };
            emit(&cli.out, &data)?;
            if reports.iter().any(|r| !r.pass) {
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Code { spec, kind } => {
            let spec: RingSpec = spec.parse()?;
            let code = match kind.as_str() {
                "membership" => membership_code(&spec)?,
                "reduced" => reduced_code(&FiniteAlgebraTable::from_ideal_lattice(&spec)?)?,
                other => {
                    return Err(ringlat::Error::InvalidArgument(format!(
                        "unknown code kind `{other}`; expected membership or reduced"
                    )))
                }
            };
            let d = min_distance(&code)?;
            let class = classify_code(&code)?;
            let data = match format {
                OutputFormat::Text => render::code_text(&code, Some(d), Some(class)),
                OutputFormat::Json => json_line(render::code_json(&code, Some(d), Some(class))),
                OutputFormat::Csv => render::code_csv(&code, Some(d), Some(class)),
            };
            emit(&cli.out, &data)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { n } => {
            let c = classify_all(n)?;
            let data = match format {
                OutputFormat::Text => render::classification_text(&c, cell_width()),
                OutputFormat::Json => json_line(render::classification_json(&c)),
                OutputFormat::Csv => render::classification_csv(&c),
            };
            emit(&cli.out, &data)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { kind, max } => {
            let kind: ReportKind = kind.parse()?;
            let report = report_tables(kind, max)?;
            let data = match format {
                OutputFormat::Text => render::report_text(&report),
                OutputFormat::Json => json_line(render::report_json(&report)),
                OutputFormat::Csv => render::report_csv(&report),
            };
            emit(&cli.out, &data)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Compare the exponent-vector enumeration with the brute-force fixpoint
/// enumeration. Prints both sides on disagreement.
fn verify_ideals_oracle(spec: &RingSpec) -> ringlat::Result<bool> {
    let indexed = spec.ideals();
    let oracle = spec.ideals_oracle()?;
    let mut fast: Vec<ExplicitIdeal> = indexed
        .iter()
        .map(|i| i.materialize())
        .collect::<ringlat::Result<_>>()?;
    fast.sort();
    if fast == oracle {
        return Ok(true);
    }
    eprintln!(
        "oracle disagreement on {spec}: fast path found {} ideals, oracle {}",
        fast.len(),
        oracle.len()
    );
    for side in [("fast", &fast), ("oracle", &oracle)] {
        let sizes: Vec<usize> = side.1.iter().map(ExplicitIdeal::cardinality).collect();
        eprintln!("  {} cardinalities: {sizes:?}", side.0);
    }
    Ok(false)
}

/// Recompute every table entry via explicit element sets. Prints both values
/// on disagreement.
fn verify_table_oracle(
    spec: &RingSpec,
    table: &FiniteAlgebraTable,
    op: TableOp,
) -> ringlat::Result<bool> {
    let ideals = spec.ideals();
    let sets: Vec<ExplicitIdeal> = ideals
        .iter()
        .map(|i| i.materialize())
        .collect::<ringlat::Result<_>>()?;
    let mut ok = true;
    for i in 0..table.size() {
        for j in 0..table.size() {
            let slow = match op {
                TableOp::Sum => sets[i].sum(&sets[j])?,
                TableOp::Product => sets[i].product(&sets[j])?,
                TableOp::Imp => sets[j].quotient(&sets[i])?,
                TableOp::Oplus => sets[j].quotient(&sets[i].annihilator()?)?,
                TableOp::Ann => sets[i].annihilator()?,
            };
            let fast = &sets[op.entry(table, i, j)];
            if *fast != slow {
                ok = false;
                eprintln!(
                    "oracle disagreement on {spec}: {}({},{}) fast={} oracle side has {} elements",
                    op.as_str(),
                    table.name(i),
                    table.name(j),
                    table.name(op.entry(table, i, j)),
                    slow.cardinality()
                );
            }
            if matches!(op, TableOp::Ann) {
                break;
            }
        }
    }
    Ok(ok)
}
