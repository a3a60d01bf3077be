//! Command-line front end.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0    | success |
//! | 1    | `oracle-check` found a mismatch |
//! | 2    | tie detected under `--ties error` |
//! | 3    | malformed CSV or query file |
//! | 4    | I/O failure |
//! | 5    | invalid request (unknown function, query not a partial order, every function dropped) |
//! | 6    | instance exceeds the oracle caps |
//! | 64   | bad command-line usage |

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use itertools::Itertools;

use crate::depth::{depth_report, ufg_depth};
use crate::dominance::{poset_from_function, sample_from_suite, DominanceError, FunctionOutcome, TiePolicy, TieOutcome};
use crate::io::report::{decimal_string, rational_string};
use crate::io::{parse_edge_list, parse_suite_csv, write_atomic, write_hasse_dot, write_report_json, ReportContext, SuiteDocument};
use crate::oracle::{brute_force_ufg, brute_force_weights, depth_profile_over_space, OracleError};
use crate::poset::Poset;
use crate::ufg::{enumerate_ufg, PosetSample};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_TIE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_INVALID: i32 = 5;
pub const EXIT_TOO_LARGE: i32 = 6;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "ufgdepth", version, about = "Union-free generic depth of benchmark posets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Ties {
    Error,
    Drop,
}

impl From<Ties> for TiePolicy {
    fn from(t: Ties) -> Self {
        match t {
            Ties::Error => TiePolicy::Error,
            Ties::Drop => TiePolicy::DropFunction,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full pipeline: posets, ufg sets, depth report, optional diagrams.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        ties: Ties,
        #[arg(long = "max-ufg-size")]
        max_ufg_size: Option<usize>,
        #[arg(long = "out-report")]
        out_report: PathBuf,
        #[arg(long = "out-hasse-dir")]
        out_hasse_dir: Option<PathBuf>,
    },
    /// Depth of a user-supplied poset given as an `a<b` edge list.
    Depth {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        ties: Ties,
        #[arg(long)]
        query: PathBuf,
    },
    /// Prints the observed ufg sets with weights and normalizer.
    Ufg {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        ties: Ties,
    },
    /// Recomputes sets and depths by brute force and diffs them.
    OracleCheck {
        #[arg(long)]
        input: PathBuf,
    },
    /// Hasse diagram of a single test function.
    Hasse {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        function: String,
        #[arg(long)]
        out: PathBuf,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

fn io_failure(path: &Path, err: std::io::Error) -> Failure {
    Failure::new(EXIT_IO, format!("{}: {err}", path.display()))
}

fn dominance_failure(err: DominanceError) -> Failure {
    let code = match err {
        DominanceError::TieDetected { .. } => EXIT_TIE,
        DominanceError::NonFiniteValue(_)
        | DominanceError::TableTooSmall { .. }
        | DominanceError::WrongValueCount { .. }
        | DominanceError::DuplicateName { .. } => EXIT_PARSE,
        _ => EXIT_INVALID,
    };
    Failure::new(code, err.to_string())
}

fn oracle_failure(err: OracleError) -> Failure {
    Failure::new(EXIT_TOO_LARGE, err.to_string())
}

fn load(path: &Path) -> Result<SuiteDocument, Failure> {
    let bytes = std::fs::read(path).map_err(|e| io_failure(path, e))?;
    let mut doc = parse_suite_csv(&bytes)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    doc.source = Some(path.display().to_string());
    Ok(doc)
}

fn load_sample(path: &Path, policy: TiePolicy) -> Result<(PosetSample, Vec<TieOutcome>), Failure> {
    let doc = load(path)?;
    sample_from_suite(&doc.table, policy).map_err(dominance_failure)
}

fn report_dropped(err: &mut dyn Write, dropped: &[TieOutcome]) {
    for tie in dropped {
        let pairs = tie.tied_pairs.iter().map(|(a, b)| format!("{a}={b}")).join(", ");
        let _ = writeln!(err, "dropped {}: indifferent {}", tie.function, pairs);
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    write_atomic(path, bytes).map_err(|e| io_failure(path, e))
}

/// File name for the diagram of unique poset `k`.
pub fn hasse_file_name(k: usize) -> String {
    format!("poset_{k:03}.dot")
}

fn analyze(
    out: &mut dyn Write,
    err: &mut dyn Write,
    input: &Path,
    policy: TiePolicy,
    max_ufg_size: Option<usize>,
    out_report: &Path,
    out_hasse_dir: Option<&Path>,
) -> Result<(), Failure> {
    let (sample, dropped) = load_sample(input, policy)?;
    report_dropped(err, &dropped);
    let family = enumerate_ufg(&sample, max_ufg_size);
    let report = depth_report(&sample, &family).expect("family was built from this sample");
    let ctx = ReportContext {
        tie_policy: policy,
        dropped: &dropped,
        max_ufg_size,
    };
    write_file(out_report, &write_report_json(&report, &ctx))?;
    if let Some(dir) = out_hasse_dir {
        std::fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
        for (k, p) in sample.unique_posets().iter().enumerate() {
            let dot = write_hasse_dot(p, sample.universe(), &format!("poset_{k}"));
            write_file(&dir.join(hasse_file_name(k)), dot.as_bytes())?;
        }
    }
    let _ = writeln!(
        out,
        "{} functions, {} unique posets, {} ufg sets{}; depth min {} max {} range {}",
        sample.n_total(),
        sample.unique_posets().len(),
        report.family_size,
        if report.truncated { " (truncated)" } else { "" },
        rational_string(&report.dispersion.min),
        rational_string(&report.dispersion.max),
        rational_string(&report.dispersion.range),
    );
    Ok(())
}

fn depth(out: &mut dyn Write, err: &mut dyn Write, input: &Path, policy: TiePolicy, query: &Path) -> Result<(), Failure> {
    let (sample, dropped) = load_sample(input, policy)?;
    report_dropped(err, &dropped);
    let text = std::fs::read_to_string(query).map_err(|e| io_failure(query, e))?;
    let edges = parse_edge_list(&text).map_err(|(line, raw)| {
        Failure::new(EXIT_PARSE, format!("{}:{line}: expected `a<b`, found {raw:?}", query.display()))
    })?;
    let universe = sample.universe();
    let mut pairs = Vec::new();
    for (a, b) in &edges {
        let lookup = |label: &str| {
            universe
                .index_of(label)
                .ok_or_else(|| Failure::new(EXIT_INVALID, format!("unknown optimizer {label:?} in query")))
        };
        pairs.push((lookup(a)?, lookup(b)?));
    }
    let q = Poset::from_pairs_closed(universe.len(), pairs)
        .map_err(|e| Failure::new(EXIT_INVALID, format!("query is not a partial order: {e}")))?;
    let family = enumerate_ufg(&sample, None);
    let d = ufg_depth(&sample, &family, &q).expect("query built over the sample universe");
    let _ = writeln!(out, "{}\t{}", rational_string(&d), decimal_string(&d));
    Ok(())
}

fn ufg(out: &mut dyn Write, err: &mut dyn Write, input: &Path, policy: TiePolicy) -> Result<(), Failure> {
    let (sample, dropped) = load_sample(input, policy)?;
    report_dropped(err, &dropped);
    let family = enumerate_ufg(&sample, None);
    for (k, names) in sample.provenance().iter().enumerate() {
        let _ = writeln!(out, "poset {k}: multiplicity {} ({})", sample.multiplicities()[k], names.join(", "));
    }
    for (set, w) in family.sets().iter().zip(family.weights()) {
        let _ = writeln!(out, "{{{}}}\t{}\t{}", set.iter().join(","), rational_string(w), decimal_string(w));
    }
    let _ = match family.normalizer() {
        Some(c) => writeln!(out, "sets {}\tc_n {}\t{}", family.len(), rational_string(c), decimal_string(c)),
        None => writeln!(out, "sets 0\tc_n undefined"),
    };
    Ok(())
}

fn oracle_check(out: &mut dyn Write, err: &mut dyn Write, input: &Path) -> Result<(), Failure> {
    let (sample, dropped) = load_sample(input, TiePolicy::DropFunction)?;
    report_dropped(err, &dropped);
    let fast = enumerate_ufg(&sample, None);
    let slow = brute_force_ufg(&sample).map_err(oracle_failure)?;
    let slow_weights = brute_force_weights(&sample).map_err(oracle_failure)?;
    let mut mismatches = 0;
    if fast.sets() != slow.sets() {
        mismatches += 1;
        let _ = writeln!(out, "MISMATCH ufg sets: fast {:?} oracle {:?}", fast.sets(), slow.sets());
    } else if fast.weights() != slow_weights.as_slice() {
        mismatches += 1;
        let _ = writeln!(out, "MISMATCH ufg weights");
    } else {
        let _ = writeln!(out, "ok   ufg sets ({})", fast.len());
    }
    let profile = depth_profile_over_space(&sample).map_err(oracle_failure)?;
    let mut depth_mismatches = 0;
    for (q, expected) in &profile {
        let got = ufg_depth(&sample, &fast, q).expect("same universe");
        if got != *expected {
            depth_mismatches += 1;
            let _ = writeln!(out, "MISMATCH depth of {q:?}: fast {} oracle {}", rational_string(&got), rational_string(expected));
        }
    }
    if depth_mismatches == 0 {
        let _ = writeln!(out, "ok   depth over all {} posets", profile.len());
    }
    mismatches += depth_mismatches;
    if mismatches > 0 {
        return Err(Failure::new(EXIT_MISMATCH, format!("{mismatches} mismatches")));
    }
    Ok(())
}

fn hasse(input: &Path, function: &str, target: &Path) -> Result<(), Failure> {
    let doc = load(input)?;
    let poset = match poset_from_function(&doc.table, function, TiePolicy::Error).map_err(dominance_failure)? {
        FunctionOutcome::Poset(p) => p,
        FunctionOutcome::Dropped(_) => unreachable!("error policy never drops"),
    };
    write_file(target, write_hasse_dot(&poset, doc.table.universe(), function).as_bytes())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Analyze {
            input,
            ties,
            max_ufg_size,
            out_report,
            out_hasse_dir,
        } => analyze(out, err, input, (*ties).into(), *max_ufg_size, out_report, out_hasse_dir.as_deref()),
        Command::Depth { input, ties, query } => depth(out, err, input, (*ties).into(), query),
        Command::Ufg { input, ties } => ufg(out, err, input, (*ties).into()),
        Command::OracleCheck { input } => oracle_check(out, err, input),
        Command::Hasse { input, function, out: target } => hasse(input, function, target),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
