//! Command-line front end.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::chain::Parity;
use crate::instance::Instance;
use crate::io::{to_dot, write_edge_list};
use crate::report::{invariants, srg_for, PdMethod, SdimChoice};
use crate::resolving::claims::claimed_representations;
use crate::tables::table_tsv;
use crate::verify::{run_verification, VerifyConfig};

#[derive(Debug, Parser)]
#[command(name = "chainres", version, about = "Partition and strong metric dimension of chain cycles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Edgelist,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PdArg {
    Chain,
    Exact,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SdimArg {
    Cover,
    Brute,
    Formula,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Family {
    Even,
    Odd,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build an instance and write it as an edge list or DOT.
    Build {
        /// even:8,10,8 | odd:5,7,5 | cycle:N | path:N | file:PATH
        spec: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the representation table of example 1 (even:8,10,8) or 2 (odd:5,7,5) as TSV.
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute pd and sdim of an instance as JSON.
    Invariants {
        spec: String,
        /// Defaults to chain for chain cycles, exact otherwise.
        #[arg(long, value_enum)]
        pd_method: Option<PdArg>,
        #[arg(long, value_enum, default_value = "cover")]
        sdim_method: SdimArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Strong resolving graph with the predicted edge set and their diff, as JSON.
    Srg {
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form representation claims against computed ones, as JSON.
    Claims {
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep a chain family and a random corpus; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum)]
        family: Family,
        /// Cycle lengths, comma-separated.
        #[arg(long = "n", value_delimiter = ',', required = true)]
        n_values: Vec<usize>,
        /// Chain lengths, comma-separated.
        #[arg(long = "m", value_delimiter = ',', required = true)]
        m_values: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random connected graphs (n <= 9) to check.
        #[arg(long, default_value_t = 0)]
        corpus: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

type Failure = (u8, String);

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    (2, e.to_string())
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// Runs a parsed command; `Ok(true)` means every check passed.
fn execute(cmd: Command) -> Result<bool, Failure> {
    match cmd {
        Command::Build { spec, format, out } => {
            let inst = Instance::parse(&spec).map_err(usage)?;
            let text = match format {
                Format::Edgelist => write_edge_list(inst.graph()),
                Format::Dot => to_dot(inst.labeled(), &inst.name()),
            };
            emit(&out, &text)?;
            Ok(true)
        }
        Command::Tables { which, out } => {
            emit(&out, &table_tsv(which).map_err(usage)?)?;
            Ok(true)
        }
        Command::Invariants { spec, pd_method, sdim_method, out } => {
            let inst = Instance::parse(&spec).map_err(usage)?;
            let pd = pd_method.map(|p| match p {
                PdArg::Chain => PdMethod::Chain,
                PdArg::Exact => PdMethod::Exact,
            });
            let sdim = match sdim_method {
                SdimArg::Cover => SdimChoice::Cover,
                SdimArg::Brute => SdimChoice::Brute,
                SdimArg::Formula => SdimChoice::Formula,
            };
            let report = invariants(&inst, pd, sdim).map_err(usage)?;
            emit(&out, &json(&report))?;
            Ok(report.passed())
        }
        Command::Srg { spec, out } => {
            let inst = Instance::parse(&spec).map_err(usage)?;
            let report = srg_for(&inst).map_err(usage)?;
            emit(&out, &json(&report))?;
            Ok(report.diff.as_ref().is_none_or(|d| d.missing.is_empty() && d.extra.is_empty()))
        }
        Command::Claims { spec, out } => {
            let inst = Instance::parse(&spec).map_err(usage)?;
            let cc = inst.chain().ok_or_else(|| usage("claims needs a chain-cycle instance (even:... or odd:...)"))?;
            emit(&out, &json(&claimed_representations(cc)))?;
            Ok(true)
        }
        Command::Verify { family, n_values, m_values, seed, corpus, out } => {
            let family = match family {
                Family::Even => Parity::Even,
                Family::Odd => Parity::Odd,
            };
            let cfg = VerifyConfig { family, n_values, m_values, seed, corpus };
            let run = run_verification(&cfg).map_err(usage)?;
            emit(&out, &json(&run))?;
            eprint!("{}", run.human_summary());
            Ok(run.passed())
        }
    }
}

/// Exit status: 0 on success, 1 when a theorem-level check fails, 2 on usage or input errors.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
