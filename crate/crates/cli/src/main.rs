use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use habw_dsl::FieldSpec;
use habw_harness::{
    analyze_source, corpus_json, load_corpus, render_detailed, render_text, run_corpus, CorpusReport, ErrorKind,
    RunOptions,
};
use serde_json::{json, Value};

const OK: u8 = 0;
const CHECK_FAILED: u8 = 1;
const USAGE: u8 = 2;
const INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "habw", version, about = "Homological invariants of graded rings and modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Ext window used by depth, pd and gdim. Defaults to 2n+4 for n variables.
    #[arg(long, global = true, env = "HABW_DEFAULT_BOUND")]
    bound: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for corpus runs.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Coefficient field overriding the declared one: GF:<p> or QQ.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldSpec>,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant records for a file's ring and modules.
    Analyze {
        file: PathBuf,
        /// Restrict to one module.
        #[arg(long)]
        module: Option<String>,
    },
    /// Run every check and expectation in a file.
    Verify { file: PathBuf },
    /// Run every `.habw` file in a directory.
    Corpus { dir: PathBuf },
    /// Print the tool version.
    Version,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    if s.eq_ignore_ascii_case("QQ") {
        return Ok(FieldSpec::Rationals);
    }
    let p = s
        .strip_prefix("GF:")
        .ok_or_else(|| format!("expected GF:<p> or QQ, got `{s}`"))?;
    p.parse::<u64>()
        .map(FieldSpec::Prime)
        .map_err(|_| format!("invalid characteristic `{p}`"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = RunOptions {
        bound: cli.bound,
        field: cli.field,
        seed: cli.seed,
        jobs: cli.jobs,
        ..RunOptions::default()
    };
    let start = Instant::now();
    let (report, detailed) = match &cli.command {
        Command::Version => {
            println!("habw {}", env!("CARGO_PKG_VERSION"));
            return ExitCode::from(OK);
        }
        Command::Analyze { file, module } => match read(file) {
            Ok(src) => {
                let f = analyze_source(&file.display().to_string(), &src, &opts, module.as_deref());
                (CorpusReport { files: vec![f] }, true)
            }
            Err(code) => return code,
        },
        Command::Verify { file } => match load(file, false, &opts) {
            Ok(r) => (r, false),
            Err(code) => return code,
        },
        Command::Corpus { dir } => match load(dir, true, &opts) {
            Ok(r) => (r, false),
            Err(code) => return code,
        },
    };
    let wall = start.elapsed().as_millis() as u64;
    match cli.format {
        Format::Json => println!("{}", envelope(&report, cli.seed, wall)),
        Format::Text if detailed => print!("{}", render_detailed(&report)),
        Format::Text => print!("{}", render_text(&report)),
    }
    ExitCode::from(exit_code(&report))
}

fn read(path: &Path) -> Result<String, ExitCode> {
    std::fs::read_to_string(path).map_err(|e| {
        eprintln!("habw: {}: {e}", path.display());
        ExitCode::from(USAGE)
    })
}

fn load(path: &Path, want_dir: bool, opts: &RunOptions) -> Result<CorpusReport, ExitCode> {
    if want_dir && !path.is_dir() {
        eprintln!("habw: {}: not a directory", path.display());
        return Err(ExitCode::from(USAGE));
    }
    let entries = load_corpus(path).map_err(|e| {
        eprintln!("habw: {}: {e}", path.display());
        ExitCode::from(USAGE)
    })?;
    Ok(run_corpus(&entries, opts))
}

fn envelope(report: &CorpusReport, seed: u64, wall_ms: u64) -> String {
    let mut v = corpus_json(report);
    if let Value::Object(map) = &mut v {
        map.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        map.insert("seed".into(), json!(seed));
        map.insert("wall_time_ms".into(), json!(wall_ms));
    }
    serde_json::to_string_pretty(&v).unwrap_or_default()
}

fn exit_code(report: &CorpusReport) -> u8 {
    for f in &report.files {
        if let Some(e) = &f.error {
            eprintln!("habw: {}: {}", f.path, e.message);
        }
    }
    match report.error_kind() {
        Some(ErrorKind::Internal) => INTERNAL,
        Some(ErrorKind::Input) => USAGE,
        None if report.ok() => OK,
        None => CHECK_FAILED,
    }
}
