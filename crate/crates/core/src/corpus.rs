//! Batch verification of a manifest of session files.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cache::Cache;
use crate::error::{Error, Result};
use crate::report::{Aggregate, Summary, Verdict, VerificationReport};
use crate::session::{parse_session, run_session, RunOptions, Session};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub path: String,
    #[serde(default = "default_expected")]
    pub expected: Verdict,
}

fn default_expected() -> Verdict {
    Verdict::Pass
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryReport {
    pub path: String,
    pub expected: Verdict,
    pub verdict: Verdict,
    pub reports: Value,
    pub diagnostics: Vec<String>,
}

impl EntryReport {
    pub fn ok(&self) -> bool {
        self.verdict == self.expected
    }

    /// Exit code contribution: 0 when the verdict is the expected one.
    pub fn exit_code(&self) -> i32 {
        match (self.ok(), self.verdict.exit_code()) {
            (true, _) => 0,
            (false, 0) => 1,
            (false, c) => c,
        }
    }
}

/// The verdict of a whole session, most severe first.
pub fn combine(reports: &[VerificationReport]) -> Verdict {
    let rank = |v: Verdict| match v {
        Verdict::Violated => 4,
        Verdict::InputError => 3,
        Verdict::ResourceLimit => 2,
        Verdict::HypothesisNotMet => 1,
        Verdict::Pass => 0,
    };
    reports.iter().map(|r| r.verdict).max_by_key(|v| rank(*v)).unwrap_or(Verdict::Pass)
}

pub fn read_manifest(path: &Path) -> Result<Vec<ManifestEntry>> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse { line: e.line(), col: e.column(), msg: e.to_string() })
}

fn payload(reports: &[VerificationReport], diagnostics: &[String], verdict: Verdict) -> Value {
    json!({ "verdict": verdict, "reports": reports, "diagnostics": diagnostics })
}

/// Runs one session file; the result is the JSON payload stored in the cache.
pub fn run_file(path: &Path, opts: &RunOptions, cache: Option<&Cache>) -> Value {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return payload(&[], &[format!("{}: {e}", path.display())], Verdict::InputError),
    };
    let session = match parse_session(&text) {
        Ok(s) => s,
        Err(diags) => {
            let d: Vec<String> = diags.iter().map(|e| e.to_string()).collect();
            return payload(&[], &d, Verdict::InputError);
        }
    };
    run_parsed(&session, opts, cache)
}

/// Runs a parsed session through the cache when one is given.
pub fn run_parsed(session: &Session, opts: &RunOptions, cache: Option<&Cache>) -> Value {
    let compute = || match run_session(session, opts) {
        Ok(reps) => payload(&reps, &[], combine(&reps)),
        Err(e) => payload(&[], &[e.to_string()], Verdict::from_error(&e)),
    };
    match cache {
        Some(c) => match c.get_or_compute(&opts.fingerprint(), &session.to_string(), compute) {
            Ok((v, _)) => v,
            Err(e) => payload(&[], &[e.to_string()], Verdict::InputError),
        },
        None => compute(),
    }
}

/// Verifies every manifest entry concurrently; entries keep manifest order.
pub fn run_corpus(manifest: &Path, opts: &RunOptions, cache: Option<&Cache>) -> Result<Aggregate<EntryReport>> {
    let entries = read_manifest(manifest)?;
    let base = manifest.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."));
    Ok(run_entries(&base, &entries, opts, cache))
}

pub fn run_entries(base: &Path, entries: &[ManifestEntry], opts: &RunOptions, cache: Option<&Cache>) -> Aggregate<EntryReport> {
    let out: Vec<EntryReport> = entries
        .par_iter()
        .map(|e| {
            let v = run_file(&base.join(&e.path), opts, cache);
            let verdict = serde_json::from_value(v["verdict"].clone()).unwrap_or(Verdict::InputError);
            let diagnostics = serde_json::from_value(v["diagnostics"].clone()).unwrap_or_default();
            EntryReport { path: e.path.clone(), expected: e.expected, verdict, reports: v["reports"].clone(), diagnostics }
        })
        .collect();
    let pass = out.iter().filter(|e| e.ok()).count();
    Aggregate { summary: Summary { pass, fail: out.len() - pass }, entries: out }
}

/// Violation outranks input errors, which outrank resource limits.
pub fn aggregate_exit_code(agg: &Aggregate<EntryReport>) -> i32 {
    let codes: Vec<i32> = agg.entries.iter().map(EntryReport::exit_code).collect();
    [1, 2, 3].into_iter().find(|c| codes.contains(c)).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::to_json;

    #[test]
    fn empty_corpus() {
        let dir = tempfile::tempdir().unwrap();
        let m = dir.path().join("manifest.json");
        std::fs::write(&m, "[]").unwrap();
        let agg = run_corpus(&m, &RunOptions::default(), None).unwrap();
        assert_eq!(to_json(&agg).unwrap(), r#"{"entries":[],"summary":{"fail":0,"pass":0}}"#);
        assert_eq!(aggregate_exit_code(&agg), 0);
    }

    #[test]
    fn malformed_entry_is_isolated() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(
            dir.path().join("good.mgcm"),
            "ring S = poly(char=32003; x,y : deg=(1));\nmodule O = ring(S);\nverify thm31 O;\n",
        )
        .unwrap();
        std::fs::write(dir.path().join("bad.mgcm"), "ring S = poly(char=32003; x : deg=(1));\nideal I = (x, );\n").unwrap();
        let m = dir.path().join("manifest.json");
        std::fs::write(&m, r#"[{"path":"good.mgcm","expected":"pass"},{"path":"bad.mgcm","expected":"pass"}]"#).unwrap();
        let cache = Cache::new(dir.path().join("cache")).unwrap();
        let agg = run_corpus(&m, &RunOptions::default(), Some(&cache)).unwrap();
        assert_eq!(agg.entries[0].verdict, Verdict::Pass);
        assert_eq!(agg.entries[1].verdict, Verdict::InputError);
        assert!(agg.entries[1].diagnostics[0].contains("empty generator at line 2"));
        assert_eq!(aggregate_exit_code(&agg), 2);
        let warm = run_corpus(&m, &RunOptions::default(), Some(&cache)).unwrap();
        assert_eq!(to_json(&agg).unwrap(), to_json(&warm).unwrap());
    }
}
