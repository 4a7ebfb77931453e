use std::fmt::Write as _;
use std::time::Duration;

use serde_json::{json, Value};

use crate::series::RationalSeries;

/// What a case compares: a series, or a textual digest such as the
/// canonical text of a reduced Gröbner basis.
#[derive(Debug, Clone, PartialEq)]
pub enum CaseValue {
    Series(RationalSeries),
    Text(String),
}

impl CaseValue {
    pub fn to_json(&self) -> Value {
        match self {
            CaseValue::Series(s) => s.to_json(),
            CaseValue::Text(t) => Value::String(t.clone()),
        }
    }
}

impl std::fmt::Display for CaseValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CaseValue::Series(s) => write!(f, "{s}"),
            CaseValue::Text(t) => f.write_str(&t.replace('\n', "; ")),
        }
    }
}

impl From<RationalSeries> for CaseValue {
    fn from(s: RationalSeries) -> Self {
        CaseValue::Series(s)
    }
}

impl From<String> for CaseValue {
    fn from(s: String) -> Self {
        CaseValue::Text(s)
    }
}

#[derive(Debug, Clone)]
pub struct CaseResult {
    pub name: String,
    /// `None` for the n = infinity cases.
    pub n: Option<u32>,
    pub pass: bool,
    pub expected: CaseValue,
    pub actual: CaseValue,
    pub detail: Option<String>,
}

impl CaseResult {
    /// Passes iff `expected == actual`.
    pub fn compare(
        name: impl Into<String>,
        n: Option<u32>,
        expected: impl Into<CaseValue>,
        actual: impl Into<CaseValue>,
    ) -> Self {
        let expected = expected.into();
        let actual = actual.into();
        Self {
            name: name.into(),
            n,
            pass: expected == actual,
            expected,
            actual,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "name": self.name,
            "n": self.n,
            "pass": self.pass,
            "expected": self.expected.to_json(),
            "actual": self.actual.to_json(),
        });
        if let Some(d) = &self.detail {
            v["detail"] = Value::String(d.clone());
        }
        v
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "cases": self.cases.iter().map(CaseResult::to_json).collect::<Vec<_>>(),
            "pass": self.pass(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let n = c.n.map_or_else(|| "inf".to_string(), |n| n.to_string());
            let status = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status} {} n={n}", c.name);
            if !c.pass {
                let _ = writeln!(out, "    expected: {}", c.expected);
                let _ = writeln!(out, "    actual:   {}", c.actual);
            }
            if let Some(d) = &c.detail {
                let _ = writeln!(out, "    {d}");
            }
        }
        let passed = self.cases.iter().filter(|c| c.pass).count();
        let _ = writeln!(
            out,
            "suite {}: {passed}/{} passed in {:.2?}",
            self.suite,
            self.cases.len(),
            self.elapsed
        );
        out
    }
}
