use std::path::PathBuf;

use habw_dsl::{FieldSpec, Value};
use habw_harness::*;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn shipped_corpus_passes() {
    let entries = load_corpus(&corpus_dir()).unwrap();
    let report = run_corpus(&entries, &RunOptions { jobs: 4, ..Default::default() });
    for f in &report.files {
        assert!(f.error.is_none(), "{}: {:?}", f.path, f.error);
        assert!(f.mismatches.is_empty(), "{}: {:?}", f.path, f.mismatches);
    }
    let failed: Vec<String> = report.checks().filter(|c| c.failed()).map(|c| c.to_string()).collect();
    assert!(failed.is_empty(), "{failed:#?}");
    let total = report.checks().count();
    let skipped = report.checks().filter(|c| c.skipped()).count();
    assert!(skipped * 10 <= total, "{skipped} of {total} skipped");
    assert!(report.files.len() >= 12);
    assert!(report.files.iter().map(|f| f.modules.len()).sum::<usize>() >= 25);
}

#[test]
fn empty_corpus_passes() {
    let dir = tempfile::tempdir().unwrap();
    let entries = load_corpus(dir.path()).unwrap();
    let report = run_corpus(&entries, &RunOptions::default());
    assert!(report.ok());
    assert!(report.files.is_empty());
}

#[test]
fn wrong_expected_depth_is_reported() {
    let src = "ring R = GF(32003)[x,y];\nmodule K = residue;\nexpect K { depth = 1 @control; }\n";
    let f = run_source("control.habw", src, &RunOptions::default());
    assert!(!f.ok());
    assert_eq!(f.mismatches.len(), 1);
    let m = &f.mismatches[0];
    assert_eq!((m.target.as_str(), m.key.as_str(), m.line), ("K", "depth", 3));
    assert_eq!((m.expected, m.actual), (Value::Int(1), Value::Int(0)));
    assert!(render_text(&CorpusReport { files: vec![f] }).contains("MISMATCH line 3: K.depth expected 1 (@control), got 0"));
}

#[test]
fn parse_errors_carry_positions() {
    let f = run_source("bad.habw", "ring R = GF(4)[x];\n", &RunOptions::default());
    let e = f.error.unwrap();
    assert_eq!(e.kind, ErrorKind::Input);
    assert!(e.message.starts_with("1:13:"), "{}", e.message);
}

#[test]
fn field_override_switches_to_rationals() {
    let src = "ring R = GF(32003)[x,y]/(x*y);\nmodule K = residue;\nexpect K { gdim = 1 @derived; }\n";
    let opts = RunOptions { field: Some(FieldSpec::Rationals), ..Default::default() };
    let f = run_source("q.habw", src, &opts);
    assert!(f.ok(), "{:?}", f.mismatches);
    assert!(f.ring.unwrap().description.starts_with("QQ["));
}

#[test]
fn report_order_is_independent_of_parallelism() {
    let entries = load_corpus(&corpus_dir()).unwrap();
    let one = run_corpus(&entries, &RunOptions { jobs: 1, ..Default::default() });
    let four = run_corpus(&entries, &RunOptions { jobs: 4, ..Default::default() });
    assert_eq!(corpus_json(&one).to_string(), corpus_json(&four).to_string());
    assert_eq!(render_text(&one), render_text(&four));
}

#[test]
fn json_keys_are_sorted() {
    let f = run_source("k.habw", "ring R = GF(32003)[x];\nmodule K = residue;\n", &RunOptions::default());
    let text = file_json(&f).to_string();
    let keys: Vec<&str> = ["\"checks\"", "\"error\"", "\"expectations_checked\"", "\"mismatches\"", "\"modules\"", "\"ok\"", "\"path\"", "\"ring\""]
        .into_iter()
        .collect();
    let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{text}");
}
