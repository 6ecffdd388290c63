use std::fmt::Write;
use std::time::Duration;

use super::{Expect, Status, Verdict};

/// One checked sample.
#[derive(Debug, Clone)]
pub struct Row {
    pub id: String,
    pub binding: String,
    pub expect: Expect,
    pub verdict: Verdict,
    pub elapsed: Duration,
}

impl Row {
    /// A verdict other than the one the case asked for.
    pub fn is_problem(&self) -> bool {
        !self.verdict.status.meets(self.expect)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub nongeneric: usize,
    pub expected: usize,
    pub problems: usize,
}

#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    pub rows: Vec<Row>,
}

impl SuiteReport {
    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for r in &self.rows {
            t.total += 1;
            match r.verdict.status {
                Status::Pass => t.pass += 1,
                Status::NonGeneric => t.nongeneric += 1,
                Status::Fail | Status::InsufficientPrecision => t.fail += 1,
            }
            if r.expect != Expect::Pass && r.verdict.status.meets(r.expect) {
                t.expected += 1;
            }
            if r.is_problem() {
                t.problems += 1;
            }
        }
        t
    }

    pub fn ok(&self) -> bool {
        self.rows.iter().all(|r| !r.is_problem())
    }

    pub fn total_time(&self) -> Duration {
        self.rows.iter().map(|r| r.elapsed).sum()
    }

    /// Tab-separated report. Timings are opt-in so that identical inputs
    /// give identical text.
    pub fn render(&self, timings: bool) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let mut detail = r.verdict.detail();
            if r.expect != Expect::Pass {
                let tag = if r.verdict.status.meets(r.expect) { "as expected" } else { "UNEXPECTED" };
                detail = format!("[expect {}: {tag}] {detail}", r.expect);
            }
            if timings {
                detail = format!("{detail} ({:.3}s)", r.elapsed.as_secs_f64());
            }
            let _ = writeln!(out, "{}\t{}\t{}\t{}", r.id, r.binding, r.verdict.status.as_str(), detail);
        }
        let t = self.tally();
        let _ = writeln!(out, "total/pass/fail/nongeneric: {}/{}/{}/{}", t.total, t.pass, t.fail, t.nongeneric);
        let _ = writeln!(out, "expected non-pass: {}, unexpected: {}", t.expected, t.problems);
        if timings {
            let _ = writeln!(out, "wall time summed over checks: {:.3}s", self.total_time().as_secs_f64());
        }
        out
    }
}
