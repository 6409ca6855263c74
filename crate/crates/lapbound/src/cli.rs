//! Command-line front end.
//!
//! Exit statuses: 0 success; 1 usage, parse or evaluation errors; for
//! `check`, 2 when any row is VIOLATED and 3 when the only problem is an
//! equality-prediction disagreement.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use lapbound_core::{evaluate_catalog, generate, BoundId, EvalConfig, Graph, Profile, Verdict};

use crate::dsl::{parse_family_dsl, parse_family_range, to_dsl};
use crate::edgelist::read_edge_list;
use crate::error::HarnessError;
use crate::fuzz::{run_fuzz, tally_rows, FuzzConfig, Model};
use crate::invariants::invariants;
use crate::report::{rows, write_records, write_rows, Format};
use crate::sweep::sweep;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VIOLATED: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lapbound",
    version,
    about = "Laplacian spectral invariants and bound verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dump every invariant of one graph.
    Invariants {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Evaluate the bound catalog on one graph.
    Check {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Evaluate the catalog on a seeded random corpus.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, value_enum, default_value = "gnp")]
        model: Model,
        /// Edge probability for the gnp model.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        /// Directory receiving `<bound_id>_<index>.el` counterexamples.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Evaluate the catalog over a family range such as `S:3..10`.
    Sweep {
        #[arg(long)]
        family: String,
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Edge-list file.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Family string, e.g. `K:5` or `GNP:10:0.3:42`.
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Debug, Args)]
pub struct Grid {
    /// Comma-separated bound ids; all when omitted.
    #[arg(long, value_delimiter = ',', value_parser = parse_bound)]
    pub bounds: Option<Vec<BoundId>>,
    /// Comma-separated exponents for the alpha-parameterised bounds.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub alphas: Option<Vec<f64>>,
    /// Comma-separated moment orders.
    #[arg(long, value_delimiter = ',')]
    pub ks: Option<Vec<u32>>,
    /// Treat P2_LOWER and KF_NEW as inapplicable when the merged Grone
    /// sequence is not non-increasing.
    #[arg(long)]
    pub strict_applicability: bool,
}

fn parse_bound(s: &str) -> Result<BoundId, String> {
    s.parse().map_err(|e: lapbound_core::Error| e.to_string())
}

impl Grid {
    pub fn eval_config(&self) -> EvalConfig {
        let d = EvalConfig::default();
        EvalConfig {
            alphas: self.alphas.clone().unwrap_or(d.alphas),
            ks: self.ks.clone().unwrap_or(d.ks),
            strict_applicability: self.strict_applicability,
            bounds: self.bounds.clone(),
        }
    }
}

impl Input {
    /// The graph and the id it is reported under.
    pub fn load(&self) -> Result<(String, Graph), HarnessError> {
        match (&self.graph, &self.family) {
            (Some(path), None) => Ok((path.display().to_string(), read_edge_list(path)?)),
            (None, Some(text)) => {
                let spec = parse_family_dsl(text)?;
                Ok((to_dsl(&spec), generate(&spec)?))
            }
            _ => Err(HarnessError::Usage(
                "exactly one of --graph and --family is required".into(),
            )),
        }
    }
}

/// Exit status for a set of catalog rows.
pub fn check_status(verdicts: impl IntoIterator<Item = (Verdict, bool)>) -> i32 {
    let mut status = EXIT_OK;
    for (v, agreement) in verdicts {
        if v == Verdict::Violated {
            return EXIT_VIOLATED;
        }
        if !agreement {
            status = EXIT_DISAGREEMENT;
        }
    }
    status
}

pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, HarnessError> {
    match cli.command {
        Command::Invariants {
            input,
            grid,
            format,
        } => {
            let (id, g) = input.load()?;
            let p = Profile::new(g)?;
            let eval = grid.eval_config();
            let doc = invariants(&id, &p, &eval.alphas, &eval.ks);
            match format {
                Format::Json => {
                    serde_json::to_writer_pretty(&mut *out, &doc)?;
                    writeln!(out)?;
                }
                Format::Csv => {
                    // key,value pairs; list values are space separated.
                    let value = serde_json::to_value(&doc)?;
                    let mut w = csv::Writer::from_writer(out);
                    w.write_record(["key", "value"])?;
                    for (k, v) in value.as_object().expect("struct serializes to an object") {
                        w.write_record([k.as_str(), &flatten(v)])?;
                    }
                    w.flush()?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Check {
            input,
            grid,
            format,
        } => {
            let (id, g) = input.load()?;
            let p = Profile::new(g)?;
            let results = evaluate_catalog(&p, &grid.eval_config());
            write_rows(&rows(&id, p.graph(), &results), format, out)?;
            Ok(check_status(
                results.iter().map(|r| (r.verdict, r.agreement)),
            ))
        }
        Command::Fuzz {
            seed,
            count,
            model,
            p,
            n_min,
            n_max,
            out_dir,
            grid,
            format,
        } => {
            let cfg = FuzzConfig {
                seed,
                count,
                model,
                p,
                n_min,
                n_max,
                eval: grid.eval_config(),
                out_dir,
            };
            let report = run_fuzz(&cfg)?;
            match format {
                Format::Json => {
                    serde_json::to_writer_pretty(&mut *out, &report)?;
                    writeln!(out)?;
                }
                Format::Csv => write_records(&tally_rows(&report), Format::Csv, out)?,
            }
            Ok(EXIT_OK)
        }
        Command::Sweep {
            family,
            grid,
            format,
        } => {
            let specs = parse_family_range(&family)?;
            write_rows(&sweep(&specs, &grid.eval_config())?, format, out)?;
            Ok(EXIT_OK)
        }
    }
}

fn flatten(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::Null => String::new(),
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Array(items) => items.iter().map(flatten).collect::<Vec<_>>().join(" "),
        serde_json::Value::Object(map) => map.values().map(flatten).collect::<Vec<_>>().join(":"),
        other => other.to_string(),
    }
}

/// Parses `args` (program name first), runs, and returns the exit status.
/// Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            if shown {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let _ = write!(err, "{}", e.render());
            return EXIT_ERROR;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
