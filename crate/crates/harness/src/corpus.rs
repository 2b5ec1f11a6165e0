use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use habw_core::exactalg::{Field, PrimeField, Rationals, Ring};
use habw_core::invariants::{default_bound, ring_depth, GdimValue, PdValue, SampleSpec, Status, Verdict};
use habw_core::modcalc::{ses_from_cover, split_ses, ShortExactSequence};
use habw_core::{AlgebraError, Result};
use habw_dsl::{elaborate, parse, to_polynomial, Diagnostic, Directive, Elaborated, FieldSpec, SourceFile, Value};
use rayon::prelude::*;

use crate::analysis::{analyze_module, analyze_ring, ModuleRecord, RingRecord};
use crate::check::TheoremCheck;
use crate::theorems::*;

#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Ext window; the default depends on the number of variables.
    pub bound: Option<usize>,
    /// Overrides the field declared in each file.
    pub field: Option<FieldSpec>,
    pub seed: u64,
    pub jobs: usize,
    pub sample: SampleSpec,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            bound: None,
            field: None,
            seed: 0,
            jobs: 1,
            sample: SampleSpec::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Syntax or validation error in the source.
    Input,
    /// A violated internal invariant.
    Internal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FileError {
    pub kind: ErrorKind,
    pub message: String,
}

impl FileError {
    fn input(d: &Diagnostic) -> Self {
        FileError {
            kind: ErrorKind::Input,
            message: d.to_string(),
        }
    }

    fn algebra(e: AlgebraError) -> Self {
        let kind = if matches!(e, AlgebraError::Internal(_)) {
            ErrorKind::Internal
        } else {
            ErrorKind::Input
        };
        FileError {
            kind,
            message: e.to_string(),
        }
    }
}

/// An expectation whose computed value differs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub target: String,
    pub key: String,
    pub tag: String,
    pub line: u32,
    pub expected: Value,
    pub actual: Value,
}

pub struct FileReport {
    pub path: String,
    pub ring: Option<RingRecord>,
    pub modules: Vec<ModuleRecord>,
    pub checks: Vec<TheoremCheck>,
    pub expectations_checked: usize,
    pub mismatches: Vec<Mismatch>,
    pub error: Option<FileError>,
}

impl FileReport {
    fn failed(path: &str, error: FileError) -> Self {
        FileReport {
            path: path.to_string(),
            ring: None,
            modules: Vec::new(),
            checks: Vec::new(),
            expectations_checked: 0,
            mismatches: Vec::new(),
            error: Some(error),
        }
    }

    /// Every check passed or was skipped and every expectation held.
    pub fn ok(&self) -> bool {
        self.error.is_none() && self.mismatches.is_empty() && !self.checks.iter().any(|c| c.failed())
    }
}

pub struct CorpusReport {
    pub files: Vec<FileReport>,
}

impl CorpusReport {
    pub fn ok(&self) -> bool {
        self.files.iter().all(|f| f.ok())
    }

    pub fn checks(&self) -> impl Iterator<Item = &TheoremCheck> {
        self.files.iter().flat_map(|f| f.checks.iter())
    }

    pub fn error_kind(&self) -> Option<ErrorKind> {
        let kinds: Vec<ErrorKind> = self.files.iter().filter_map(|f| f.error.as_ref().map(|e| e.kind)).collect();
        if kinds.contains(&ErrorKind::Internal) {
            Some(ErrorKind::Internal)
        } else {
            kinds.first().copied()
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub path: PathBuf,
    pub source: String,
}

/// The `.habw` files of a directory, sorted by file name, or a single file.
pub fn load_corpus(path: &Path) -> std::io::Result<Vec<CorpusEntry>> {
    let mut paths = if path.is_dir() {
        fs::read_dir(path)?
            .map(|e| e.map(|e| e.path()))
            .collect::<std::io::Result<Vec<_>>>()?
            .into_iter()
            .filter(|p| p.extension().is_some_and(|e| e == "habw"))
            .collect()
    } else {
        vec![path.to_path_buf()]
    };
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let source = fs::read_to_string(&p)?;
            Ok(CorpusEntry { path: p, source })
        })
        .collect()
}

pub fn run_file(path: &Path, opts: &RunOptions) -> std::io::Result<FileReport> {
    let source = fs::read_to_string(path)?;
    Ok(run_source(&path.display().to_string(), &source, opts))
}

/// Files run in parallel on `opts.jobs` threads; the report keeps input order.
pub fn run_corpus(entries: &[CorpusEntry], opts: &RunOptions) -> CorpusReport {
    let run = || {
        entries
            .par_iter()
            .map(|e| run_source(&e.path.display().to_string(), &e.source, opts))
            .collect()
    };
    let files = match rayon::ThreadPoolBuilder::new().num_threads(opts.jobs.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(_) => entries
            .iter()
            .map(|e| run_source(&e.path.display().to_string(), &e.source, opts))
            .collect(),
    };
    CorpusReport { files }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Mode {
    Verify,
    /// Invariant records only, for one module or all of them.
    Analyze(Option<String>),
}

/// Runs every check and expectation of one file.
pub fn run_source(path: &str, source: &str, opts: &RunOptions) -> FileReport {
    dispatch(path, source, opts, &Mode::Verify)
}

/// Ring and module records without checks or expectations.
pub fn analyze_source(path: &str, source: &str, opts: &RunOptions, module: Option<&str>) -> FileReport {
    dispatch(path, source, opts, &Mode::Analyze(module.map(str::to_string)))
}

fn dispatch(path: &str, source: &str, opts: &RunOptions, mode: &Mode) -> FileReport {
    let file = match parse(source) {
        Ok(f) => f,
        Err(d) => return FileReport::failed(path, FileError::input(&d)),
    };
    if let Mode::Analyze(Some(name)) = mode {
        if !file.modules().any(|m| &m.name == name) {
            return FileReport::failed(
                path,
                FileError {
                    kind: ErrorKind::Input,
                    message: format!("unknown module `{name}`"),
                },
            );
        }
    }
    match opts.field.unwrap_or(file.ring.field) {
        FieldSpec::Prime(p) => match PrimeField::new(p) {
            Ok(f) => run_parsed(path, &file, f, opts, mode),
            Err(e) => FileReport::failed(path, FileError::algebra(e)),
        },
        FieldSpec::Rationals => run_parsed(path, &file, Rationals, opts, mode),
    }
}

fn run_parsed<F: Field>(path: &str, file: &SourceFile, field: F, opts: &RunOptions, mode: &Mode) -> FileReport {
    let env = match elaborate(file, field.clone()) {
        Ok(e) => e,
        Err(d) => return FileReport::failed(path, FileError::input(&d)),
    };
    match evaluate(path, file, &env, field, opts, mode) {
        Ok(r) => r,
        Err(e) => FileReport::failed(path, FileError::algebra(e)),
    }
}

fn evaluate<F: Field>(
    path: &str,
    file: &SourceFile,
    env: &Elaborated<F>,
    field: F,
    opts: &RunOptions,
    mode: &Mode,
) -> Result<FileReport> {
    let ring = &env.ring;
    let bound = opts.bound.unwrap_or_else(|| default_bound(ring.nvars()));
    let wants_fpid = match mode {
        Mode::Verify => file.checks().any(|c| c.directive == Directive::Fpid),
        Mode::Analyze(_) => true,
    };
    let ring_record = analyze_ring(ring, bound, wants_fpid.then_some(&opts.sample))?;
    let selected = |n: &String| match mode {
        Mode::Analyze(Some(only)) => n == only,
        _ => true,
    };
    let modules = env
        .modules
        .iter()
        .filter(|(n, _)| selected(n))
        .map(|(n, m)| analyze_module(n, m, bound))
        .collect::<Result<Vec<_>>>()?;
    if let Mode::Analyze(_) = mode {
        return Ok(FileReport {
            path: path.to_string(),
            ring: Some(ring_record),
            modules,
            checks: Vec::new(),
            expectations_checked: 0,
            mismatches: Vec::new(),
            error: None,
        });
    }

    let mut checks = Vec::new();
    for (n, m) in &env.modules {
        checks.push(verify_ab(n, m, bound)?);
    }
    for c in file.checks() {
        run_directive(&c.directive, env, &field, bound, opts, &mut checks)?;
    }

    let mut mismatches = Vec::new();
    let mut checked = 0;
    for block in file.expects() {
        for e in &block.items {
            checked += 1;
            let actual = if block.target == file.ring.name {
                ring_value(ring, &ring_record, &e.key)?
            } else {
                let rec = modules.iter().find(|r| r.name == block.target).expect("validated by the parser");
                module_value(rec, &e.key)
            };
            if actual != e.value {
                mismatches.push(Mismatch {
                    target: block.target.clone(),
                    key: e.key.clone(),
                    tag: e.tag.clone(),
                    line: e.pos.line,
                    expected: e.value,
                    actual,
                });
            }
        }
    }
    Ok(FileReport {
        path: path.to_string(),
        ring: Some(ring_record),
        modules,
        checks,
        expectations_checked: checked,
        mismatches,
        error: None,
    })
}

fn sequence<F: Field>(env: &Elaborated<F>, names: &[String]) -> Result<ShortExactSequence<F>> {
    let get = |n: &String| env.module(n).expect("validated by the parser");
    match names {
        [m] => Ok(ses_from_cover(get(m))),
        [l, n] => split_ses(get(l), get(n)),
        _ => Err(AlgebraError::Malformed("a sequence takes one or two modules".into())),
    }
}

fn label(names: &[String]) -> String {
    match names {
        [m] => format!("0 -> syz {m} -> F -> {m} -> 0"),
        _ => format!("0 -> {} -> {} + {} -> {} -> 0", names[0], names[0], names[1], names[1]),
    }
}

fn run_directive<F: Field>(
    d: &Directive,
    env: &Elaborated<F>,
    field: &F,
    bound: usize,
    opts: &RunOptions,
    out: &mut Vec<TheoremCheck>,
) -> Result<()> {
    let ring = &env.ring;
    let get = |n: &str| env.module(n).expect("validated by the parser");
    match d {
        Directive::Ab(m) => out.push(verify_ab(m, get(m), bound)?),
        Directive::Horseshoe(ns) => {
            let ses = sequence(env, ns)?;
            out.push(verify_horseshoe(&label(ns), &ses, bound)?);
            out.push(verify_gdim_ses(&label(ns), &ses, bound)?);
        }
        Directive::DepthSes(ns) => out.push(verify_depth_ses(&label(ns), &sequence(env, ns)?)?),
        Directive::ChangeOfRings { module, element } => {
            let x = to_polynomial(ring.poly(), element)?;
            out.push(verify_change_of_rings(module, get(module), &x, bound)?);
        }
        Directive::Gorenstein(x) => {
            let x = x.as_ref().map(|e| to_polynomial(ring.poly(), e)).transpose()?;
            out.push(verify_gorenstein_quotient(ring, x.as_ref(), bound)?);
        }
        Directive::Fpid => out.push(verify_gor_fpid(ring, bound, &opts.sample)?),
        Directive::Irreducible => out.push(verify_irreducibility(ring, bound, opts.seed)?),
        Directive::RxSes { module, var } => out.push(verify_rx_ses(module, get(module), var)?),
        Directive::DirectLimit(n) => out.push(verify_direct_limit_truncations(field.clone(), *n)?),
    }
    Ok(())
}

fn verdict_value(v: &Verdict) -> Value {
    match v.status {
        Status::True => Value::Bool(true),
        Status::False => Value::Bool(false),
        Status::Undetermined => Value::Undetermined,
    }
}

fn ring_value<F: Field>(ring: &Arc<Ring<F>>, rec: &RingRecord, key: &str) -> Result<Value> {
    Ok(match key {
        "cm" => Value::Bool(rec.cohen_macaulay),
        "depth" => Value::Int(ring_depth(ring)? as i64),
        "dim" => Value::Int(rec.dimension),
        "gorenstein" => verdict_value(&rec.gorenstein),
        "irreducible" => rec.zero_ideal_irreducible.as_ref().map_or(Value::Undetermined, verdict_value),
        "socle" => rec.socle_dimension.map_or(Value::Undetermined, |s| Value::Int(s as i64)),
        _ => unreachable!("validated by the parser"),
    })
}

fn module_value(rec: &ModuleRecord, key: &str) -> Value {
    match key {
        "depth" => rec.depth.map_or(Value::Infinite, |d| Value::Int(d as i64)),
        "gdim" => match (rec.gdim.certified(), rec.gdim.value) {
            (Some(v), _) => Value::Int(v as i64),
            (None, GdimValue::Infinite) => Value::Infinite,
            _ => Value::Undetermined,
        },
        "pd" => match rec.gdim.pd.value {
            PdValue::Finite(v) => Value::Int(v as i64),
            PdValue::Infinite => Value::Infinite,
            PdValue::Undetermined => Value::Undetermined,
        },
        "gclass" => verdict_value(&rec.gclass),
        _ => unreachable!("validated by the parser"),
    }
}
