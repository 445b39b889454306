//! The `mec` command line.
//!
//! Exit statuses: 0 success, 1 verification mismatch, 2 input error,
//! 3 budget refusal.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{expected_border_interval, ops_experiment, write_csv, BoundsRecord, Mode};
use crate::cover::{compute_mnc, CoverFlavor};
use crate::enhanced::{compute_mec, coverage_by_occurrence};
use crate::enumerate::DEFAULT_BUDGET;
use crate::error::AnalysisError;
use crate::oracle::OracleReport;
use crate::prefix::{border_array_from_prefix, prefix_table_indeterminate, prefix_table_regular, PrefixTable};
use crate::strings::{parse_indeterminate, parse_regular, Alphabet, IndeterminateMode};
use crate::table::{format_aligned, format_tables, NamedArray, TableStyle};
use crate::verify::{default_mec, verify_exhaustive, verify_random_indeterminate, MecImpl, VerifySummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "mec", version, about = "Minimum enhanced cover arrays from prefix tables")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print π, β, γ, MNC, PR, CPR, MEC and CMEC of one string.
    Tables(TablesArgs),
    /// Compare every array with the brute-force oracles.
    Verify(VerifyArgs),
    /// Count operations of ECP and ECB and write the experiment CSV.
    Experiment(ExperimentArgs),
    /// Exact expected-border intervals for k = 1..K and the bounds CSV.
    Appendix(AppendixArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputMode {
    Regular,
    Bracket,
    Iupac,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Aligned,
    Tsv,
    Json,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    /// The string itself; read from --file or standard input when absent.
    #[arg(long, conflicts_with = "file")]
    pub input: Option<String>,
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Symbols of the alphabet in order, e.g. "abc"; inferred when absent.
    #[arg(long)]
    pub alphabet: Option<String>,
    #[arg(long, value_enum, default_value_t = InputMode::Regular)]
    pub mode: InputMode,
    #[arg(long, value_enum, default_value_t = OutputFormat::Aligned)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// regular: every string over σ letters of length ≤ max-n.
    /// bracket: seeded random indeterminate strings (needs --samples, --seed).
    #[arg(long, value_enum, default_value_t = InputMode::Regular)]
    pub mode: InputMode,
    #[arg(long, default_value_t = 2)]
    pub sigma: usize,
    #[arg(long, default_value_t = 14)]
    pub max_n: usize,
    #[arg(long)]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(long, default_value_t = 2)]
    pub min_n: usize,
    #[arg(long, default_value_t = 16)]
    pub max_n: usize,
    #[arg(long, default_value_t = 2)]
    pub sigma: usize,
    /// Sample this many strings per length instead of enumerating all.
    #[arg(long, requires = "seed")]
    pub samples: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// CSV destination; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AppendixArgs {
    #[arg(long, default_value_t = 2)]
    pub sigma: usize,
    /// Largest cap; rows are produced for every k in 1..=K.
    #[arg(long, default_value_t = 11)]
    pub k: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// CSV destination; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs with the production MEC.
pub fn main_with_args<I: IntoIterator<Item = OsString>>(args: I) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(
        args,
        &default_mec,
        &mut std::io::stdin().lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// Parses `args` and runs, verifying `mec` in the verify subcommand.
pub fn run<I: IntoIterator<Item = OsString>>(
    args: I,
    mec: &MecImpl,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let result = match cli.command {
        Command::Tables(a) => cmd_tables(&a, stdin, out),
        Command::Verify(a) => cmd_verify(&a, mec, out, err),
        Command::Experiment(a) => cmd_experiment(&a, out),
        Command::Appendix(a) => cmd_appendix(&a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                AnalysisError::Budget(_) => EXIT_BUDGET,
                _ => EXIT_INPUT,
            }
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> AnalysisError {
    AnalysisError::InvalidArgument(e.to_string())
}

fn read_input(a: &TablesArgs, stdin: &mut dyn Read) -> Result<String, AnalysisError> {
    let mut text = match (&a.input, &a.file) {
        (Some(s), _) => return Ok(s.clone()),
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|source| AnalysisError::Io {
            path: path.clone(),
            source,
        })?,
        (None, None) => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|source| AnalysisError::Io {
                path: "<stdin>".into(),
                source,
            })?;
            s
        }
    };
    while text.ends_with('\n') || text.ends_with('\r') {
        text.pop();
    }
    Ok(text)
}

/// The arrays of one input in display order, and the letter cells.
fn table_rows(a: &TablesArgs, text: &str) -> Result<(Vec<String>, Vec<NamedArray>), AnalysisError> {
    let alphabet = a
        .alphabet
        .as_deref()
        .map(|s| Alphabet::new(s.chars()))
        .transpose()
        .map_err(invalid)?;
    let (cells, pi, beta, flavor): (Vec<String>, PrefixTable, Option<Vec<usize>>, CoverFlavor) = match a.mode {
        InputMode::Regular => {
            let x = parse_regular(text, alphabet.as_ref()).map_err(invalid)?;
            let pi = prefix_table_regular(&x);
            let beta = border_array_from_prefix(&pi).values().to_vec();
            let cells = x.to_string().chars().map(String::from).collect();
            (cells, pi, Some(beta), CoverFlavor::Regular)
        }
        InputMode::Bracket | InputMode::Iupac => {
            let mode = if a.mode == InputMode::Iupac {
                IndeterminateMode::Iupac
            } else {
                IndeterminateMode::Bracket
            };
            let x = parse_indeterminate(text, mode, alphabet.as_ref()).map_err(invalid)?;
            let cells = match x.to_iupac().filter(|_| a.mode == InputMode::Iupac) {
                Some(codes) => codes.chars().map(String::from).collect(),
                None => x
                    .letters()
                    .iter()
                    .map(|l| {
                        let members: String = l.members().map(|m| x.alphabet().symbol(m)).collect();
                        if l.is_singleton() {
                            members
                        } else {
                            format!("[{members}]")
                        }
                    })
                    .collect(),
            };
            (cells, prefix_table_indeterminate(&x), None, CoverFlavor::Rooted)
        }
    };
    let mnc = compute_mnc(&pi, flavor);
    let mec = compute_mec(&pi, &mnc, None);
    let state = coverage_by_occurrence(&pi, mnc.b());
    let gamma_name = if flavor == CoverFlavor::Rooted {
        "gamma_R"
    } else {
        "gamma"
    };
    let mut arrays = vec![NamedArray::new("pi", pi.values())];
    if let Some(beta) = beta {
        arrays.push(NamedArray::new("beta", beta));
    }
    arrays.extend([
        NamedArray::new(gamma_name, mnc.gamma().values()),
        NamedArray::new("MNC", mnc.mnc()),
        NamedArray::new("PR", state.pr),
        NamedArray::new("CPR", state.cpr),
        NamedArray::new("MEC", mec.mec),
        NamedArray::new("CMEC", mec.cmec),
    ]);
    Ok((cells, arrays))
}

fn cmd_tables(a: &TablesArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, AnalysisError> {
    let text = read_input(a, stdin)?;
    let (cells, arrays) = table_rows(a, &text)?;
    let rendered = match a.format {
        OutputFormat::Aligned => format_aligned(Some(("x", &cells)), &arrays),
        OutputFormat::Tsv => format_tables(&arrays, TableStyle::Tsv),
        OutputFormat::Json => format_tables(&arrays, TableStyle::JsonLines),
    }
    .map_err(invalid)?;
    write_all(out, rendered.as_bytes())?;
    Ok(EXIT_OK)
}

fn write_all(out: &mut dyn Write, bytes: &[u8]) -> Result<(), AnalysisError> {
    out.write_all(bytes).map_err(|source| AnalysisError::Io {
        path: "<stdout>".into(),
        source,
    })
}

fn cmd_verify(a: &VerifyArgs, mec: &MecImpl, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, AnalysisError> {
    let summary: VerifySummary = match a.mode {
        InputMode::Regular => verify_exhaustive(a.sigma, a.max_n, a.budget, mec)?,
        InputMode::Bracket | InputMode::Iupac => {
            let (Some(samples), Some(seed)) = (a.samples, a.seed) else {
                return Err(invalid("random indeterminate verification needs --samples and --seed"));
            };
            if samples > a.budget {
                return Err(crate::error::BudgetExceeded {
                    requested: samples.into(),
                    limit: a.budget.into(),
                }
                .into());
            }
            if a.max_n == 0 || !(1..=26).contains(&a.sigma) {
                return Err(invalid("need --max-n ≥ 1 and --sigma in 1..=26"));
            }
            verify_random_indeterminate(samples as usize, a.max_n, a.sigma, seed)
        }
    };
    let mut text = String::from(OracleReport::TSV_HEADER);
    text.push('\n');
    for r in &summary.mismatches {
        text.push_str(&r.tsv_row());
        text.push('\n');
    }
    write_all(out, text.as_bytes())?;
    let _ = writeln!(
        err,
        "{} strings, {} comparisons, {} mismatches",
        summary.strings, summary.comparisons, summary.mismatch_count
    );
    Ok(if summary.is_clean() { EXIT_OK } else { EXIT_MISMATCH })
}

fn csv_to(out: &mut dyn Write, path: Option<&PathBuf>, records: &[impl serde::Serialize]) -> Result<(), AnalysisError> {
    match path {
        Some(p) => write_csv(records, p),
        None => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in records {
                w.serialize(r).map_err(|source| AnalysisError::Csv {
                    path: "<stdout>".into(),
                    source,
                })?;
            }
            let bytes = w.into_inner().map_err(|e| invalid(e.error()))?;
            write_all(out, &bytes)
        }
    }
}

fn cmd_experiment(a: &ExperimentArgs, out: &mut dyn Write) -> Result<i32, AnalysisError> {
    let mode = match (a.samples, a.seed) {
        (Some(samples), Some(seed)) => Mode::Sampled { samples, seed },
        _ => Mode::Exhaustive,
    };
    let table = ops_experiment(a.min_n, a.max_n, a.sigma, mode, a.budget)?;
    csv_to(out, a.out.as_ref(), &table.rows)?;
    Ok(EXIT_OK)
}

fn cmd_appendix(a: &AppendixArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, AnalysisError> {
    if a.k == 0 {
        return Err(invalid("--k must be at least 1"));
    }
    let results = (1..=a.k)
        .map(|k| expected_border_interval(k, a.sigma, a.budget))
        .collect::<Result<Vec<_>, _>>()?;
    let records: Vec<BoundsRecord> = results.iter().map(|r| r.to_record()).collect();
    csv_to(out, a.out.as_ref(), &records)?;
    let last = results.last().expect("k ≥ 1");
    // the summary goes to stderr when the CSV occupies stdout
    let summary = format!("{}\n", last.summary_line());
    if a.out.is_some() {
        write_all(out, summary.as_bytes())?;
    } else {
        let _ = err.write_all(summary.as_bytes());
    }
    Ok(EXIT_OK)
}
