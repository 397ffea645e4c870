//! Verification reports and their JSON/CSV encodings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    HypothesisNotMet,
    Violated,
    InputError,
    ResourceLimit,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::HypothesisNotMet => "hypothesis-not-met",
            Verdict::Violated => "violated",
            Verdict::InputError => "input-error",
            Verdict::ResourceLimit => "resource-limit",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Pass | Verdict::HypothesisNotMet => 0,
            Verdict::Violated => 1,
            Verdict::InputError => 2,
            Verdict::ResourceLimit => 3,
        }
    }

    pub fn is_failure(&self) -> bool {
        self.exit_code() != 0
    }

    pub fn from_error(e: &Error) -> Self {
        match e {
            Error::ResourceLimit(_) => Verdict::ResourceLimit,
            _ => Verdict::InputError,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HypStatus {
    Pass,
    Fail,
    Assumed,
    Proxy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub status: HypStatus,
    pub witness: Option<String>,
}

impl Hypothesis {
    pub fn checked(name: &str, ok: bool, witness: Option<String>) -> Self {
        Hypothesis { name: name.into(), status: if ok { HypStatus::Pass } else { HypStatus::Fail }, witness }
    }

    pub fn holds(&self) -> bool {
        self.status != HypStatus::Fail
    }
}

/// One CSV row: a single computed value and how it compares to what the
/// statement predicts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub object: String,
    pub check: String,
    pub i: Option<i64>,
    pub degree: Option<String>,
    pub value: String,
    pub expected: String,
    pub verdict: String,
    pub mode: String,
    pub window: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub instance: String,
    pub characteristic: u64,
    pub hypotheses: Vec<Hypothesis>,
    pub left: Option<bool>,
    pub right: Option<bool>,
    pub verdict: Verdict,
    pub window: Option<String>,
    pub modes: Vec<String>,
    /// Failing `(check, i, degree)` or generator, one per failure.
    pub witnesses: Vec<String>,
    pub rows: Vec<Row>,
    pub note: Option<String>,
}

impl VerificationReport {
    pub fn new(theorem: &str, instance: &str, characteristic: u64) -> Self {
        VerificationReport {
            theorem: theorem.into(),
            instance: instance.into(),
            characteristic,
            hypotheses: Vec::new(),
            left: None,
            right: None,
            verdict: Verdict::Pass,
            window: None,
            modes: Vec::new(),
            witnesses: Vec::new(),
            rows: Vec::new(),
            note: None,
        }
    }

    pub fn error(theorem: &str, instance: &str, characteristic: u64, e: &Error) -> Self {
        let mut r = Self::new(theorem, instance, characteristic);
        r.verdict = Verdict::from_error(e);
        r.note = Some(e.to_string());
        r
    }

    pub fn add_mode(&mut self, m: &str) {
        if !self.modes.iter().any(|x| x == m) {
            self.modes.push(m.into());
            self.modes.sort();
        }
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(Hypothesis::holds)
    }

    /// Adds a row comparing `value` with `expected`; returns whether they agree.
    #[allow(clippy::too_many_arguments)]
    pub fn record(
        &mut self,
        check: &str,
        i: Option<i64>,
        degree: Option<String>,
        value: impl ToString,
        expected: impl ToString,
        mode: &str,
    ) -> bool {
        let (value, expected) = (value.to_string(), expected.to_string());
        let ok = value == expected;
        if !ok {
            let mut w = check.to_string();
            if let Some(i) = i {
                w.push_str(&format!(" i={i}"));
            }
            if let Some(d) = &degree {
                w.push_str(&format!(" n={d}"));
            }
            w.push_str(&format!(": {value} != {expected}"));
            self.witnesses.push(w);
        }
        self.rows.push(Row {
            object: self.instance.clone(),
            check: check.into(),
            i,
            degree,
            value,
            expected,
            verdict: if ok { "pass" } else { "fail" }.into(),
            mode: mode.into(),
            window: self.window.clone().unwrap_or_default(),
        });
        ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

/// A batch of reports; `entries` keep their input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Aggregate<T: Serialize> {
    pub entries: Vec<T>,
    pub summary: Summary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::UnknownFormat(s.into())),
        }
    }
}

/// Compact JSON with keys sorted at every level.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    // serde_json's default map is ordered by key
    let v = serde_json::to_value(value).map_err(|e| Error::Io(e.to_string()))?;
    serde_json::to_string(&v).map_err(|e| Error::Io(e.to_string()))
}

pub const CSV_HEADER: [&str; 9] = ["object", "check", "i", "degree", "value", "expected", "verdict", "mode", "window"];

pub fn rows_to_csv<'a>(rows: impl IntoIterator<Item = &'a Row>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in rows {
        let i = r.i.map(|i| i.to_string()).unwrap_or_default();
        let d = r.degree.clone().unwrap_or_default();
        w.write_record([&r.object, &r.check, &i, &d, &r.value, &r.expected, &r.verdict, &r.mode, &r.window])
            .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

pub fn emit_reports(reports: &[VerificationReport], format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let fail = reports.iter().filter(|r| r.verdict.is_failure()).count();
            to_json(&Aggregate { entries: reports.to_vec(), summary: Summary { pass: reports.len() - fail, fail } })
        }
        Format::Csv => rows_to_csv(reports.iter().flat_map(|r| r.rows.iter())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::Multidegree;

    #[test]
    fn empty_aggregate() {
        assert_eq!(emit_reports(&[], Format::Json).unwrap(), r#"{"entries":[],"summary":{"fail":0,"pass":0}}"#);
        assert_eq!(emit_reports(&[], Format::Csv).unwrap(), "object,check,i,degree,value,expected,verdict,mode,window\n");
        assert_eq!("xml".parse::<Format>(), Err(Error::UnknownFormat("xml".into())));
    }

    #[test]
    fn single_cell_row() {
        let mut r = VerificationReport::new("table", "O", 32003);
        r.window = Some("[(-1,-1),(1,1)]".into());
        assert!(r.record("h0", Some(0), Some(Multidegree(vec![1, -2]).to_csv()), 2, 2, "koszul-colimit"));
        let csv = emit_reports(&[r.clone()], Format::Csv).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[1], r#"O,h0,0,(1|-2),2,2,pass,koszul-colimit,"[(-1,-1),(1,1)]""#);
        let a = emit_reports(&[r.clone()], Format::Json).unwrap();
        assert_eq!(a, emit_reports(&[r], Format::Json).unwrap());
        assert!(a.find("\"characteristic\"").unwrap() < a.find("\"hypotheses\"").unwrap());
    }
}
