use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;
use crate::finite_field::{ratio_text, SnappedRational};
use crate::Rational;

/// One side of a checked identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Quantity {
    Integer(i64),
    Real(f64),
    /// Printed as `"num/den"`.
    Rational(#[serde(with = "ratio_text")] Rational),
    /// The side could not be computed.
    Missing,
}

impl Quantity {
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Quantity::Integer(n) => Some(*n as f64),
            Quantity::Real(x) => Some(*x),
            Quantity::Rational(r) => Some(*r.numer() as f64 / *r.denom() as f64),
            Quantity::Missing => None,
        }
    }

    /// Exact value, for integer and rational sides.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Quantity::Integer(n) => Some(Rational::from_integer(*n)),
            Quantity::Rational(r) => Some(*r),
            _ => None,
        }
    }

    /// Text used in CSV and human output.
    pub fn to_text(&self) -> String {
        match self {
            Quantity::Integer(n) => n.to_string(),
            Quantity::Real(x) => format_float(*x),
            Quantity::Rational(r) => format!("{}/{}", r.numer(), r.denom()),
            Quantity::Missing => String::new(),
        }
    }
}

impl From<SnappedRational> for Quantity {
    fn from(s: SnappedRational) -> Self {
        Quantity::Rational(s.value)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Passed,
    Failed,
    Skipped,
}

/// Outcome of one identity at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    pub lhs: Quantity,
    pub rhs: Quantity,
    /// Relative or absolute distance for real checks, `|lhs − rhs|` for
    /// exact ones; `null` in JSON when not finite.
    #[serde(with = "finite_or_null")]
    pub residual: f64,
    /// Declared tolerance; zero for exact comparisons.
    pub tolerance: f64,
    pub status: Status,
    /// Raw floating values and snap residuals behind the comparison.
    pub raw: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    pub elapsed_ms: f64,
}

impl CheckResult {
    fn base(name: &str, parameters: Params) -> Self {
        Self {
            name: name.to_string(),
            parameters: parameters.0,
            lhs: Quantity::Missing,
            rhs: Quantity::Missing,
            residual: f64::INFINITY,
            tolerance: 0.0,
            status: Status::Failed,
            raw: BTreeMap::new(),
            detail: None,
            elapsed_ms: 0.0,
        }
    }

    /// `|lhs − rhs| / |rhs|`, or the absolute difference when `rhs = 0`.
    pub fn relative(name: &str, parameters: Params, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        let diff = (lhs - rhs).abs();
        let residual = if rhs == 0.0 { diff } else { diff / rhs.abs() };
        Self::real(name, parameters, lhs, rhs, residual, tolerance)
    }

    /// `|lhs − rhs|`.
    pub fn absolute(name: &str, parameters: Params, lhs: f64, rhs: f64, tolerance: f64) -> Self {
        Self::real(name, parameters, lhs, rhs, (lhs - rhs).abs(), tolerance)
    }

    fn real(name: &str, parameters: Params, lhs: f64, rhs: f64, residual: f64, tolerance: f64) -> Self {
        let passed = residual <= tolerance;
        Self {
            lhs: Quantity::Real(lhs),
            rhs: Quantity::Real(rhs),
            residual,
            tolerance,
            status: if passed { Status::Passed } else { Status::Failed },
            ..Self::base(name, parameters)
        }
    }

    /// Exact equality of two integer or rational sides.
    pub fn exact(name: &str, parameters: Params, lhs: Quantity, rhs: Quantity) -> Self {
        let (passed, residual) = match (lhs.as_rational(), rhs.as_rational()) {
            (Some(l), Some(r)) => {
                let d = l - r;
                (l == r, (*d.numer() as f64 / *d.denom() as f64).abs())
            }
            _ => (false, f64::INFINITY),
        };
        Self {
            lhs,
            rhs,
            residual,
            status: if passed { Status::Passed } else { Status::Failed },
            ..Self::base(name, parameters)
        }
    }

    /// An inequality `lhs ≤ rhs` between exact sides.
    pub fn at_most(name: &str, parameters: Params, lhs: Quantity, rhs: Quantity) -> Self {
        let passed = match (lhs.as_rational(), rhs.as_rational()) {
            (Some(l), Some(r)) => l <= r,
            _ => false,
        };
        let residual = match (lhs.as_f64(), rhs.as_f64()) {
            (Some(l), Some(r)) => (l - r).max(0.0),
            _ => f64::INFINITY,
        };
        Self {
            lhs,
            rhs,
            residual,
            status: if passed { Status::Passed } else { Status::Failed },
            ..Self::base(name, parameters)
        }
    }

    pub fn skipped(name: &str, parameters: Params, reason: impl Into<String>) -> Self {
        Self {
            residual: 0.0,
            status: Status::Skipped,
            detail: Some(reason.into()),
            ..Self::base(name, parameters)
        }
    }

    /// A check whose evaluation raised an error; raw values carried by a
    /// snap failure are kept.
    pub fn errored(name: &str, parameters: Params, err: &Error) -> Self {
        let mut check = Self { detail: Some(err.to_string()), ..Self::base(name, parameters) };
        if let Error::Snap { re, im, denominator, residual, tolerance } = err {
            check.record("re", *re);
            check.record("im", *im);
            check.record("snap_denominator", *denominator as f64);
            check.record("snap_residual", *residual);
            check.tolerance = *tolerance;
        }
        check
    }

    /// Builds the check, turning an evaluation error into a failed check.
    pub fn from_result(name: &str, parameters: Params, f: impl FnOnce(Params) -> crate::Result<CheckResult>) -> Self {
        match f(parameters.clone()) {
            Ok(c) => c,
            Err(e) => Self::errored(name, parameters, &e),
        }
    }

    /// Stores a raw value; non-finite values are dropped (JSON has no
    /// representation for them).
    pub fn record(&mut self, key: &str, value: f64) {
        if value.is_finite() {
            self.raw.insert(key.to_string(), value);
        }
    }

    pub fn with_raw(mut self, entries: &[(&str, f64)]) -> Self {
        for (k, v) in entries {
            self.record(k, *v);
        }
        self
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Passed
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Failed
    }
}

/// Runs `f` and stamps the elapsed wall time on its check.
pub fn timed(f: impl FnOnce() -> CheckResult) -> CheckResult {
    let start = Instant::now();
    let mut check = f();
    check.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    check
}

/// Ordered parameter map.
#[derive(Debug, Clone, Default)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.0.insert(key.to_string(), value.to_string());
        self
    }

    pub fn real(self, key: &str, value: f64) -> Self {
        self.with(key, format_float(value))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub results: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Statements the suite deliberately leaves untested.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: Option<u64>, results: Vec<CheckResult>) -> Self {
        let count = |s: Status| results.iter().filter(|c| c.status == s).count();
        Self {
            suite: suite.to_string(),
            seed,
            passed: count(Status::Passed),
            failed: count(Status::Failed),
            skipped: count(Status::Skipped),
            results,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn is_success(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|c| c.failed())
    }
}

/// Every suite of one harness run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub primes_max: u64,
    pub suites: Vec<SuiteReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl VerificationReport {
    pub fn new(seed: u64, primes_max: u64, suites: Vec<SuiteReport>) -> Self {
        Self {
            seed,
            primes_max,
            passed: suites.iter().map(|s| s.passed).sum(),
            failed: suites.iter().map(|s| s.failed).sum(),
            skipped: suites.iter().map(|s| s.skipped).sum(),
            suites,
        }
    }

    pub fn is_success(&self) -> bool {
        self.failed == 0
    }

    /// Pretty JSON with sorted keys and floats rounded to 15 significant
    /// digits; parsing and re-emitting gives the same bytes.
    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        canonicalize(&mut value);
        serde_json::to_string_pretty(&value).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// One row per check: `suite,name,params,lhs,rhs,residual,passed`.
    /// `params` is `key=value` pairs joined by `;`, `passed` is `true`,
    /// `false` or `skip`.
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record(["suite", "name", "params", "lhs", "rhs", "residual", "passed"])
            .expect("in-memory write");
        for suite in &self.suites {
            for check in &suite.results {
                let params = check.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";");
                let passed = match check.status {
                    Status::Passed => "true",
                    Status::Failed => "false",
                    Status::Skipped => "skip",
                };
                writer
                    .write_record([
                        suite.suite.as_str(),
                        check.name.as_str(),
                        params.as_str(),
                        check.lhs.to_text().as_str(),
                        check.rhs.to_text().as_str(),
                        format_float(check.residual).as_str(),
                        passed,
                    ])
                    .expect("in-memory write");
            }
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }
}

/// Rounds to 15 significant digits.
pub fn round_significant(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().expect("formatted float parses")
}

/// Shortest text of the value rounded to 15 significant digits.
pub fn format_float(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    serde_json::to_string(&round_significant(x)).expect("finite float")
}

fn canonicalize(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64 number");
            *v = serde_json::Number::from_f64(round_significant(x)).map_or(Value::Null, Value::Number);
        }
        Value::Array(items) => items.iter_mut().for_each(canonicalize),
        Value::Object(map) => map.values_mut().for_each(canonicalize),
        _ => {}
    }
}

mod finite_or_null {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        if x.is_finite() {
            s.serialize_f64(*x)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
    }
}
