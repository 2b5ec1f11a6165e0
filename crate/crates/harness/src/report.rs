//! Text and JSON renderings of a run. Neither contains timings or thread
//! counts, so output is identical for every `--jobs`.

use std::fmt::Write;

use habw_core::invariants::{GdimResult, GdimValue, PdValue, Verdict};
use habw_dsl::Value;
use serde_json::{json, Value as Json};

use crate::analysis::{ModuleRecord, RingRecord};
use crate::check::{Outcome, TheoremCheck};
use crate::corpus::{CorpusReport, ErrorKind, FileReport};

fn value_json(v: &Value) -> Json {
    match v {
        Value::Int(n) => json!(n),
        Value::Infinite => json!("infinite"),
        Value::Undetermined => json!("undetermined"),
        Value::Bool(b) => json!(b),
    }
}

fn verdict_json(v: &Verdict) -> Json {
    json!({
        "status": v.status.name(),
        "witness": v.witness.as_ref().map(|w| w.to_string()),
        "bound": v.bound,
    })
}

fn gdim_value(g: &GdimResult) -> Json {
    match g.value {
        GdimValue::Finite(v) => json!(v),
        GdimValue::Infinite => json!("infinite"),
        GdimValue::Undetermined => json!("undetermined"),
    }
}

fn gdim_json(g: &GdimResult) -> Json {
    json!({
        "value": gdim_value(g),
        "certification": g.certification.name(),
        "bound": g.bound,
        "witness": g.witness.as_ref().map(|w| w.to_string()),
    })
}

fn pd_json(g: &GdimResult) -> Json {
    match g.pd.value {
        PdValue::Finite(v) => json!(v),
        PdValue::Infinite => json!("infinite"),
        PdValue::Undetermined => json!("undetermined"),
    }
}

fn ring_json(r: &RingRecord) -> Json {
    json!({
        "description": r.description,
        "nvars": r.nvars,
        "dimension": r.dimension,
        "depth": r.depth,
        "cohen_macaulay": r.cohen_macaulay,
        "gorenstein": verdict_json(&r.gorenstein),
        "gdim_residue_field": gdim_json(&r.gdim_residue_field),
        "socle_dimension": r.socle_dimension,
        "zero_ideal_irreducible": r.zero_ideal_irreducible.as_ref().map(verdict_json),
        "fpid": r.fpid.as_ref().map(|w| json!({
            "depth": w.depth,
            "at_depth": verdict_json(&w.at_depth),
            "below_depth": w.below_depth.as_ref().map(verdict_json),
        })),
    })
}

fn module_json(m: &ModuleRecord) -> Json {
    let betti: Vec<Json> = m
        .betti
        .iter()
        .map(|(&(i, j), &b)| json!({ "i": i, "j": j, "rank": b }))
        .collect();
    json!({
        "name": m.name,
        "description": m.description,
        "zero": m.zero,
        "depth": m.depth.map_or(json!("infinite"), |d| json!(d)),
        "pd": pd_json(&m.gdim),
        "gdim": gdim_json(&m.gdim),
        "gclass": verdict_json(&m.gclass),
        // Over a Noetherian ring the dual of a finitely generated module is
        // always finitely presented in every degree.
        "dual_fp_infinity": true,
        "betti": betti,
        "resolution_finite": m.resolution_finite,
        "composes_to_zero": m.composes_to_zero,
        "euler_holds": m.euler_holds,
        "ext": m.ext.iter().map(|e| json!({
            "i": e.i,
            "vanishes": e.vanishes,
            "hilbert": e.hilbert.iter().map(|&(d, h)| json!({ "degree": d, "dim": h })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

fn check_json(c: &TheoremCheck) -> Json {
    let reason = match &c.outcome {
        Outcome::Pass => None,
        Outcome::Fail(r) | Outcome::Skipped(r) => Some(r.clone()),
    };
    json!({
        "theorem": c.theorem.name(),
        "instance": c.instance,
        "outcome": c.outcome.name(),
        "reason": reason,
        "detail": c.detail,
    })
}

pub fn file_json(f: &FileReport) -> Json {
    let mismatches: Vec<Json> = f
        .mismatches
        .iter()
        .map(|m| {
            json!({
                "target": m.target,
                "key": m.key,
                "tag": m.tag,
                "line": m.line,
                "expected": value_json(&m.expected),
                "actual": value_json(&m.actual),
            })
        })
        .collect();
    json!({
        "path": f.path,
        "ok": f.ok(),
        "ring": f.ring.as_ref().map(ring_json),
        "modules": f.modules.iter().map(module_json).collect::<Vec<_>>(),
        "checks": f.checks.iter().map(check_json).collect::<Vec<_>>(),
        "expectations_checked": f.expectations_checked,
        "mismatches": mismatches,
        "error": f.error.as_ref().map(|e| json!({
            "kind": match e.kind { ErrorKind::Input => "input", ErrorKind::Internal => "internal" },
            "message": e.message,
        })),
    })
}

fn totals(r: &CorpusReport) -> (usize, usize, usize) {
    let (mut pass, mut fail, mut skip) = (0, 0, 0);
    for c in r.checks() {
        match c.outcome {
            Outcome::Pass => pass += 1,
            Outcome::Fail(_) => fail += 1,
            Outcome::Skipped(_) => skip += 1,
        }
    }
    (pass, fail, skip)
}

pub fn corpus_json(r: &CorpusReport) -> Json {
    let (pass, fail, skip) = totals(r);
    json!({
        "ok": r.ok(),
        "files": r.files.iter().map(file_json).collect::<Vec<_>>(),
        "summary": {
            "files": r.files.len(),
            "modules": r.files.iter().map(|f| f.modules.len()).sum::<usize>(),
            "pass": pass,
            "fail": fail,
            "skipped": skip,
            "expectations": r.files.iter().map(|f| f.expectations_checked).sum::<usize>(),
            "mismatches": r.files.iter().map(|f| f.mismatches.len()).sum::<usize>(),
        },
    })
}

fn render_module_detail(out: &mut String, m: &ModuleRecord) {
    let top = m.betti.keys().map(|&(i, _)| i).max();
    for i in 0..=top.unwrap_or(0) {
        let row: Vec<String> = m
            .betti
            .range((i, i32::MIN)..=(i, i32::MAX))
            .map(|(&(_, j), &b)| format!("{b}@{j}"))
            .collect();
        if !row.is_empty() {
            let _ = writeln!(out, "  betti {i}: {}", row.join(" "));
        }
    }
    for e in &m.ext {
        let hf: Vec<String> = e.hilbert.iter().map(|&(d, h)| format!("{h}@{d}")).collect();
        let _ = writeln!(out, "  ext {}: {}{}", e.i, hf.join(" "), if e.vanishes { " (zero)" } else { "" });
    }
    if let Some(w) = &m.gdim.witness {
        let _ = writeln!(out, "  witness: {w}");
    }
}

fn value_text(v: &Value) -> String {
    match v {
        Value::Int(n) => n.to_string(),
        Value::Infinite => "infinite".into(),
        Value::Undetermined => "undetermined".into(),
        Value::Bool(b) => b.to_string(),
    }
}

fn gdim_text(g: &GdimResult) -> String {
    let v = match g.value {
        GdimValue::Finite(v) => v.to_string(),
        GdimValue::Infinite => "infinite".into(),
        GdimValue::Undetermined => "undetermined".into(),
    };
    format!("{v} ({})", g.certification.name())
}

pub fn render_text(r: &CorpusReport) -> String {
    render(r, false)
}

/// Like [`render_text`], with Betti tables and Ext samples under each module.
pub fn render_detailed(r: &CorpusReport) -> String {
    render(r, true)
}

fn render(r: &CorpusReport, detailed: bool) -> String {
    let mut out = String::new();
    for f in &r.files {
        let _ = writeln!(out, "== {}", f.path);
        if let Some(e) = &f.error {
            let _ = writeln!(out, "error: {}", e.message);
            continue;
        }
        if let Some(ring) = &f.ring {
            let _ = writeln!(
                out,
                "ring {}: dim {}, depth {}, CM {}, Gorenstein {}",
                ring.description,
                ring.dimension,
                ring.depth,
                ring.cohen_macaulay,
                ring.gorenstein.status.name()
            );
        }
        for m in &f.modules {
            let depth = m.depth.map_or("infinite".to_string(), |d| d.to_string());
            let pd = match m.gdim.pd.value {
                PdValue::Finite(v) => v.to_string(),
                PdValue::Infinite => "infinite".into(),
                PdValue::Undetermined => "undetermined".into(),
            };
            let _ = writeln!(
                out,
                "module {}: depth {depth}, pd {pd}, gdim {}, G-class {}",
                m.name,
                gdim_text(&m.gdim),
                m.gclass.status.name()
            );
            if detailed {
                render_module_detail(&mut out, m);
            }
        }
        for c in &f.checks {
            let _ = writeln!(out, "{c}");
        }
        for m in &f.mismatches {
            let _ = writeln!(
                out,
                "MISMATCH line {}: {}.{} expected {} (@{}), got {}",
                m.line,
                m.target,
                m.key,
                value_text(&m.expected),
                m.tag,
                value_text(&m.actual)
            );
        }
    }
    let (pass, fail, skip) = totals(r);
    let mism: usize = r.files.iter().map(|f| f.mismatches.len()).sum();
    let _ = writeln!(out, "summary: {pass} passed, {fail} failed, {skip} skipped, {mism} mismatches");
    out
}
