//! The `digrid` command line.
//!
//! Exit codes: 0 on success, 1 for domain or validation errors (including a
//! closed form disagreeing with BFS), 2 for I/O errors. With
//! `--format json` exactly one JSON document is written to standard output
//! and every number in it is a decimal string.

use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use digrid_core::metrics::{is_strongly_connected, transmissions};
use digrid_core::orientations::{
    comb_orientation, conjectured_orientation, ladder_orientation, snake_hampath_orientation,
};
use digrid_core::search::{DEFAULT_EDGE_BUDGET, MAX_EDGE_BUDGET, SearchOptions};
use digrid_core::{GridDims, Orientation, SearchError, wiener_index};
use serde_json::json;

use crate::checkpoint::CheckpointError;
use crate::driver::{self, DriverError};
use crate::format::{self, FormatError};
use crate::report;
use crate::table::{self, TableFormat};

#[derive(Debug, Parser)]
#[command(name = "digrid", version, about = "Wiener index of oriented grid graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Wiener index of one orientation, checked against its closed form.
    Wiener(WienerArgs),
    /// Comb vs conjectured comparison rows with verdicts.
    Compare(TableArgs),
    /// Comb and conjectured values over a range of grids.
    Table(TableArgs),
    /// Search for a maximum-Wiener orientation.
    Search(SearchArgs),
    /// Write an orientation as JSON and/or Graphviz DOT.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NamedOrientation {
    Comb,
    Conj,
    Ladder,
    Snake,
}

impl NamedOrientation {
    fn name(self) -> &'static str {
        match self {
            NamedOrientation::Comb => "comb",
            NamedOrientation::Conj => "conj",
            NamedOrientation::Ladder => "ladder",
            NamedOrientation::Snake => "snake",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableOutput {
    Csv,
    Md,
    Json,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Named orientation.
    #[arg(long, value_enum, conflicts_with = "file")]
    pub orient: Option<NamedOrientation>,
    /// Rows (ignored for `ladder`, which has two).
    #[arg(long = "m")]
    pub m: Option<usize>,
    /// Columns.
    #[arg(long = "n")]
    pub n: Option<usize>,
    /// Orientation file in JSON.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WienerArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Also print the transmission of every vertex.
    #[arg(long)]
    pub transmissions: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Inclusive row range, `A..B` or a single value.
    #[arg(long)]
    pub m_range: String,
    /// Inclusive column range.
    #[arg(long)]
    pub n_range: String,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableOutput,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long = "m")]
    pub m: usize,
    #[arg(long = "n")]
    pub n: usize,
    /// Enumerate every orientation (the default).
    #[arg(long, conflicts_with = "local")]
    pub exhaustive: bool,
    /// Hill climbing; reports a lower bound.
    #[arg(long)]
    pub local: bool,
    /// Evaluate one orientation per orbit of the grid symmetries and reversal.
    #[arg(long)]
    pub symmetry: bool,
    #[arg(long, env = "DIGRID_JOBS", default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 64)]
    pub restarts: usize,
    #[arg(long, default_value_t = 32)]
    pub max_plateau_moves: usize,
    #[arg(long, default_value_t = 64)]
    pub witness_cap: usize,
    /// Resume from and write progress to this file.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    #[arg(long, default_value_t = 1 << 22)]
    pub checkpoint_interval: u64,
    /// Allow exhaustive runs above the default edge budget.
    #[arg(long)]
    pub big: bool,
    /// Directory for witness orientations (JSON and DOT).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long)]
    pub dot: Option<PathBuf>,
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Write the compact bit-string form instead of the arc list.
    #[arg(long)]
    pub bits: bool,
}

#[derive(Debug)]
pub enum CliError {
    Domain(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Io(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Domain(m) | CliError::Io(m) => m,
        }
    }
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

fn io_error(path: &Path, e: io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

impl From<DriverError> for CliError {
    fn from(e: DriverError) -> Self {
        match e {
            DriverError::Checkpoint(CheckpointError::Io { .. }) => CliError::Io(e.to_string()),
            e => CliError::Domain(e.to_string()),
        }
    }
}

/// A successful command's output, plus an exit code for commands that
/// produce output and still fail (formula mismatch).
struct Outcome {
    stdout: String,
    code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: 0 }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Wiener(a) => cmd_wiener(&a, err),
        Command::Compare(a) => cmd_table(&a, true),
        Command::Table(a) => cmd_table(&a, false),
        Command::Search(a) => cmd_search(&a, err),
        Command::Export(a) => cmd_export(&a),
    };
    match result {
        Ok(o) => {
            if out.write_all(o.stdout.as_bytes()).is_err() {
                return 2;
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

fn dims_of(m: Option<usize>, n: Option<usize>) -> Result<GridDims, CliError> {
    match (m, n) {
        (Some(m), Some(n)) => GridDims::new(m, n).map_err(domain),
        _ => Err(CliError::Domain("--m and --n are required with --orient".into())),
    }
}

/// Loads the orientation and a label for it.
fn load_source(s: &SourceArgs) -> Result<(Orientation, Option<NamedOrientation>), CliError> {
    if let Some(path) = &s.file {
        let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
        let o = format::parse_orientation(&text)
            .map_err(|e: FormatError| CliError::Domain(format!("{}: {e}", path.display())))?;
        return Ok((o, None));
    }
    let Some(kind) = s.orient else {
        return Err(CliError::Domain("give --orient comb|conj|ladder|snake or --file PATH".into()));
    };
    let o = match kind {
        NamedOrientation::Ladder => {
            let n = s.n.ok_or_else(|| CliError::Domain("--n is required for ladder".into()))?;
            ladder_orientation(n).map_err(domain)?
        }
        NamedOrientation::Comb => comb_orientation(dims_of(s.m, s.n)?).map_err(domain)?,
        NamedOrientation::Conj => conjectured_orientation(dims_of(s.m, s.n)?).map_err(domain)?,
        NamedOrientation::Snake => snake_hampath_orientation(dims_of(s.m, s.n)?),
    };
    Ok((o, Some(kind)))
}

fn cmd_wiener(a: &WienerArgs, err: &mut dyn Write) -> Result<Outcome, CliError> {
    let (o, kind) = load_source(&a.source)?;
    let dims = o.dims();
    let g = o.materialize();
    let w = wiener_index(&g);
    let strong = is_strongly_connected(&g);
    let formula = kind.and_then(|k| table::formula_for(k.name(), dims.m(), dims.n()));
    let matches = formula.is_none_or(|f| f == w);
    let label = kind.map_or("file", NamedOrientation::name);
    let per_vertex = a.transmissions.then(|| transmissions(&g));

    let stdout = match a.format {
        OutputFormat::Json => {
            let mut doc = json!({
                "orientation": label,
                "m": dims.m().to_string(),
                "n": dims.n().to_string(),
                "wiener": w.to_string(),
                "strongly_connected": strong,
                "formula": formula.map(|f| f.to_string()),
                "formula_match": formula.map(|_| matches),
            });
            if let Some(ts) = &per_vertex {
                doc["transmissions"] = ts
                    .iter()
                    .map(|t| {
                        let v = dims.vertex(t.vertex);
                        json!({ "row": v.row.to_string(), "col": v.col.to_string(), "value": t.value.to_string() })
                    })
                    .collect();
            }
            format!("{}\n", serde_json::to_string_pretty(&doc).expect("json values serialize"))
        }
        OutputFormat::Text => {
            let mut s = format!("orientation: {label} {dims}\nW = {w}\nstrongly connected: {strong}\n");
            if let Some(f) = formula {
                s += &format!("formula = {f} ({})\n", if matches { "match" } else { "MISMATCH" });
            }
            for t in per_vertex.iter().flatten() {
                s += &format!("w{} = {}\n", dims.vertex(t.vertex), t.value);
            }
            s
        }
    };
    if !matches {
        let _ = writeln!(err, "error: closed form {} disagrees with BFS value {w}", formula.unwrap_or_default());
    }
    Ok(Outcome { stdout, code: if matches { 0 } else { 1 } })
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad range bound {t:?} in {s:?}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok(a..=b)
}

fn cmd_table(a: &TableArgs, verdicts: bool) -> Result<Outcome, CliError> {
    let ms = parse_range(&a.m_range).map_err(CliError::Domain)?;
    let ns = parse_range(&a.n_range).map_err(CliError::Domain)?;
    if *ms.start() == 0 || *ns.start() == 0 {
        return Err(CliError::Domain("grid dimensions start at 1".into()));
    }
    let rows = table::table_rows(ms, ns).map_err(domain)?;
    let format = match a.format {
        TableOutput::Csv => TableFormat::Csv,
        TableOutput::Md => TableFormat::Markdown,
        TableOutput::Json => TableFormat::Json,
    };
    Ok(Outcome::ok(table::render(&rows, format, verdicts)))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| io_error(path, e))
}

fn cmd_search(a: &SearchArgs, err: &mut dyn Write) -> Result<Outcome, CliError> {
    let dims = GridDims::new(a.m, a.n).map_err(domain)?;
    let opts = SearchOptions {
        use_symmetry: a.symmetry,
        worker_count: a.jobs,
        checkpoint_interval: a.checkpoint_interval,
        seed: a.seed,
        restarts: a.restarts,
        max_plateau_moves: a.max_plateau_moves,
        witness_cap: a.witness_cap,
        edge_budget: if a.big { MAX_EDGE_BUDGET } else { DEFAULT_EDGE_BUDGET },
    };
    let report = if a.local {
        driver::local_search(dims, &opts)?
    } else {
        match driver::exhaustive_search(dims, &opts, a.checkpoint.as_deref()) {
            Err(DriverError::Search(e @ SearchError::BudgetExceeded { .. })) if !a.big => {
                return Err(CliError::Domain(format!("{e}; pass --big to raise the budget to {MAX_EDGE_BUDGET} edges")));
            }
            r => r?,
        }
    };
    if let Some(dir) = &a.out {
        fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
        for (i, o) in report.witnesses.iter().enumerate() {
            write_file(&dir.join(format!("witness_{i:03}.json")), &format::serialize_orientation(o))?;
            write_file(&dir.join(format!("witness_{i:03}.dot")), &format::to_dot(o))?;
        }
        let _ = writeln!(err, "wrote {} witnesses to {}", report.witnesses.len(), dir.display());
    }
    let stdout = match a.format {
        OutputFormat::Json => {
            format!("{}\n", serde_json::to_string_pretty(&report::report_json(&report)).expect("json values serialize"))
        }
        OutputFormat::Text => report::report_text(&report),
    };
    Ok(Outcome::ok(stdout))
}

fn cmd_export(a: &ExportArgs) -> Result<Outcome, CliError> {
    let (o, _) = load_source(&a.source)?;
    let doc = if a.bits { format::serialize_orientation_bits(&o) } else { format::serialize_orientation(&o) };
    if a.dot.is_none() && a.json.is_none() {
        return Ok(Outcome::ok(doc + "\n"));
    }
    if let Some(p) = &a.json {
        write_file(p, &(doc + "\n"))?;
    }
    if let Some(p) = &a.dot {
        write_file(p, &format::to_dot(&o))?;
    }
    Ok(Outcome::ok(String::new()))
}
