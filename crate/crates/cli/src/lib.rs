//! The `weightsieve` command-line tool.
//!
//! Exit codes: 0 all checks passed / search completed, 1 some check failed,
//! 2 input or usage error, 3 search truncated by the candidate cap.

pub mod builtin;
pub mod document;
pub mod report;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use weightsieve_core::search::{enumerate, enumerate_two_point_dims, SearchSpec, DEFAULT_CANDIDATE_CAP};
use weightsieve_core::{BigInt, Canonical, CheckKind, Error, Suite};

use crate::document::DataDocument;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TRUNCATED: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "weightsieve",
    version,
    about = "Exact feasibility checks for circle-action fixed-point weight data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the check suite on a data document and print a JSON report.
    Check {
        /// Data document; `-` reads standard input.
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        filters: FilterArgs,
    },
    /// Enumerate canonical survivors as JSON lines, then a summary line.
    Enumerate {
        #[arg(long = "dim-complex")]
        dim_complex: usize,
        #[arg(long)]
        points: usize,
        #[arg(long = "max-weight")]
        max_weight: u32,
        #[command(flatten)]
        filters: FilterArgs,
        /// JSON-lines output file; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Keep only data whose weights have gcd 1.
        #[arg(long)]
        gcd_normalize: bool,
        /// Abort with exit code 3 after this many generated candidates.
        #[arg(long, default_value_t = DEFAULT_CANDIDATE_CAP)]
        cap: u64,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Generate every candidate and filter afterwards (reference mode).
        #[arg(long)]
        no_staging: bool,
    },
    /// Two fixed points, complex dimensions 1 to 4: which admit survivors.
    TwoPoint {
        #[arg(long = "max-weight")]
        max_weight: u32,
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Print a builtin dataset as a data document.
    Builtin {
        /// remark | s6 A B | cp2 | sphere2 A | t1-contradiction
        name: String,
        params: Vec<String>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct FilterArgs {
    /// `paper`, `all`, or a comma-separated list of check names.
    #[arg(long, default_value = "paper")]
    pub filters: String,
    /// Also require the χ_y profile symmetry N_i = N_{n-i}.
    #[arg(long)]
    pub kosniowski: bool,
}

impl FilterArgs {
    pub fn suite(&self) -> Result<Suite, String> {
        let base = match self.filters.as_str() {
            "paper" => Suite::paper(),
            "all" => Suite::all(),
            list => Suite::new(
                list.split(',')
                    .map(|s| s.trim().parse::<CheckKind>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| e.to_string())?,
            ),
        };
        let suite = if self.kosniowski {
            base.with(CheckKind::Kosniowski)
        } else {
            base
        };
        if suite.is_empty() {
            return Err("filter list is empty".into());
        }
        Ok(suite)
    }
}

fn usage_error(err: &mut dyn Write, msgs: &[String]) -> i32 {
    for m in msgs {
        let _ = writeln!(err, "error: {m}");
    }
    EXIT_USAGE
}

fn read_input(path: &PathBuf) -> io::Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        File::open(path)?.read_to_string(&mut text)?;
    }
    Ok(text)
}

fn cmd_check(path: &PathBuf, filters: &FilterArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let suite = match filters.suite() {
        Ok(s) => s,
        Err(e) => return usage_error(err, &[e]),
    };
    let text = match read_input(path) {
        Ok(t) => t,
        Err(e) => return usage_error(err, &[format!("{}: {e}", path.display())]),
    };
    let data = match DataDocument::parse(&text).and_then(|d| d.to_data()) {
        Ok(d) => d,
        Err(errs) => return usage_error(err, &errs),
    };
    let report = match suite.run(&data) {
        Ok(r) => r,
        Err(e) => return usage_error(err, &[e.to_string()]),
    };
    let doc = report::report_document(&data, &suite, &report);
    let _ = writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&doc).expect("report serializes")
    );
    if report.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn cmd_enumerate(spec: SearchSpec, output: Option<&PathBuf>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Err(e) = spec.validate() {
        return usage_error(err, &[e.to_string()]);
    }
    let mut file_sink;
    let sink: &mut dyn Write = match output {
        Some(path) => match File::create(path) {
            Ok(f) => {
                file_sink = BufWriter::new(f);
                &mut file_sink
            }
            Err(e) => return usage_error(err, &[format!("{}: {e}", path.display())]),
        },
        None => out,
    };
    let mut io_error = None;
    let result = enumerate::<BigInt, _>(&spec, |s: &Canonical| {
        if io_error.is_none() {
            let line = serde_json::to_string(&DataDocument::from_canonical(s)).expect("document serializes");
            if let Err(e) = writeln!(sink, "{line}") {
                io_error = Some(e);
            }
        }
    });
    let (counters, truncated, code) = match result {
        Ok(c) => (c, false, EXIT_PASS),
        Err(Error::Truncated { partial, .. }) => (*partial, true, EXIT_TRUNCATED),
        Err(e) => return usage_error(err, &[e.to_string()]),
    };
    let summary = report::summary_line(&spec, &counters, truncated);
    let _ = writeln!(sink, "{summary}");
    if let Err(e) = sink.flush() {
        io_error.get_or_insert(e);
    }
    if let Some(e) = io_error {
        return usage_error(err, &[format!("writing output: {e}")]);
    }
    if truncated {
        let _ = writeln!(
            err,
            "search truncated: candidate cap {} reached; output is partial",
            spec.candidate_cap
        );
    }
    code
}

fn cmd_two_point(max_weight: u32, workers: usize, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let report = match enumerate_two_point_dims::<BigInt>(max_weight, workers) {
        Ok(r) => r,
        Err(e) => return usage_error(err, &[e.to_string()]),
    };
    let rows: Vec<_> = report
        .rows
        .iter()
        .map(|r| {
            let mut m = report::counters_json(&r.counters);
            m.insert("complex_dimension".into(), json!(r.complex_dimension));
            m.insert(
                "survivor_data".into(),
                json!(r.survivors.iter().map(DataDocument::from_canonical).collect::<Vec<_>>()),
            );
            serde_json::Value::Object(m)
        })
        .collect();
    let doc = json!({
        "max_weight": max_weight,
        "rows": rows,
        "dimensions_with_survivors": report.dims_with_survivors(),
    });
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializes"));
    EXIT_PASS
}

fn cmd_builtin(name: &str, params: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match builtin::lookup(name, params) {
        Ok(data) => {
            let doc = DataDocument::from_data(&data);
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializes"));
            EXIT_PASS
        }
        Err(e) => usage_error(err, &[e]),
    }
}

pub fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match cli.command {
        Command::Check { input, filters } => cmd_check(&input, &filters, out, err),
        Command::Enumerate {
            dim_complex,
            points,
            max_weight,
            filters,
            output,
            gcd_normalize,
            cap,
            workers,
            no_staging,
        } => {
            let suite = match filters.suite() {
                Ok(s) => s,
                Err(e) => return usage_error(err, &[e]),
            };
            let spec = SearchSpec {
                complex_dimension: dim_complex,
                num_points: points,
                max_weight,
                suite,
                gcd_normalize,
                staged: !no_staging,
                candidate_cap: cap,
                workers,
            };
            cmd_enumerate(spec, output.as_ref(), out, err)
        }
        Command::TwoPoint { max_weight, workers } => cmd_two_point(max_weight, workers, out, err),
        Command::Builtin { name, params } => cmd_builtin(&name, &params, out, err),
    }
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            code
        }
    }
}
