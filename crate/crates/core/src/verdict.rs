//! Structured check results and the line-oriented verdict report.

use std::fmt;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

/// An `(input, expected, actual)` triple.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Witness {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl Witness {
    pub fn new(
        input: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) -> Self {
        Witness {
            input: input.into(),
            expected: expected.into(),
            actual: actual.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaVerdict {
    pub check_id: String,
    /// Ordered `(name, value)` pairs.
    pub params: Vec<(String, String)>,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub runtime_ms: u64,
}

impl LemmaVerdict {
    pub fn new(check_id: impl Into<String>) -> Self {
        LemmaVerdict {
            check_id: check_id.into(),
            params: Vec::new(),
            status: Status::Pass,
            witnesses: Vec::new(),
            runtime_ms: 0,
        }
    }

    pub fn param(mut self, name: &str, value: impl fmt::Display) -> Self {
        self.params.push((name.to_string(), value.to_string()));
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn params_string(&self) -> String {
        if self.params.is_empty() {
            return "-".to_string();
        }
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn write_to(&self, out: &mut String, timings: bool) {
        out.push_str(&format!(
            "{} {} {} {}",
            self.check_id,
            self.params_string(),
            self.status,
            self.witnesses.len()
        ));
        if timings {
            out.push_str(&format!(" {}", self.runtime_ms));
        }
        out.push('\n');
        if self.status != Status::Pass {
            for w in &self.witnesses {
                out.push_str(&format!(
                    "  input={} expected={} actual={}\n",
                    w.input, w.expected, w.actual
                ));
            }
        }
    }
}

/// Accumulates failures and recorded exceptions while a check runs.
pub(crate) struct CheckBuilder {
    verdict: LemmaVerdict,
    started: Instant,
    failed: bool,
}

impl CheckBuilder {
    pub(crate) fn new(check_id: &str) -> Self {
        CheckBuilder {
            verdict: LemmaVerdict::new(check_id),
            started: Instant::now(),
            failed: false,
        }
    }

    pub(crate) fn param(&mut self, name: &str, value: impl fmt::Display) -> &mut Self {
        self.verdict
            .params
            .push((name.to_string(), value.to_string()));
        self
    }

    /// Records a mismatch and marks the check failed.
    pub(crate) fn fail(
        &mut self,
        input: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) {
        self.failed = true;
        self.verdict
            .witnesses
            .push(Witness::new(input, expected, actual));
    }

    /// Records an observation without failing.
    pub(crate) fn note(
        &mut self,
        input: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) {
        self.verdict
            .witnesses
            .push(Witness::new(input, expected, actual));
    }

    pub(crate) fn expect_eq<T: PartialEq + fmt::Debug>(
        &mut self,
        input: impl Into<String>,
        expected: T,
        actual: T,
    ) -> bool {
        if expected == actual {
            true
        } else {
            self.fail(input, format!("{expected:?}"), format!("{actual:?}"));
            false
        }
    }

    pub(crate) fn expect(&mut self, input: impl Into<String>, ok: bool) -> bool {
        if !ok {
            self.fail(input, "true", "false");
        }
        ok
    }

    pub(crate) fn skip(mut self, reason: impl Into<String>) -> LemmaVerdict {
        self.verdict.status = Status::Skipped;
        self.verdict
            .witnesses
            .push(Witness::new("precondition", reason, "unmet"));
        self.verdict.runtime_ms = elapsed_ms(self.started);
        self.verdict
    }

    pub(crate) fn finish(mut self) -> LemmaVerdict {
        self.verdict.status = if self.failed {
            Status::Fail
        } else {
            Status::Pass
        };
        self.verdict.runtime_ms = elapsed_ms(self.started);
        self.verdict
    }
}

fn elapsed_ms(since: Instant) -> u64 {
    u64::try_from(since.elapsed().as_millis()).unwrap_or(u64::MAX)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

pub fn totals(verdicts: &[LemmaVerdict]) -> Totals {
    let mut t = Totals::default();
    for v in verdicts {
        match v.status {
            Status::Pass => t.pass += 1,
            Status::Fail => t.fail += 1,
            Status::Skipped => t.skipped += 1,
        }
    }
    t
}

/// Renders verdicts followed by the `TOTAL` line.
pub fn render_report(verdicts: &[LemmaVerdict], timings: bool) -> String {
    let mut out = String::new();
    for v in verdicts {
        v.write_to(&mut out, timings);
    }
    let t = totals(verdicts);
    out.push_str(&format!(
        "TOTAL pass={} fail={} skipped={}\n",
        t.pass, t.fail, t.skipped
    ));
    out
}
