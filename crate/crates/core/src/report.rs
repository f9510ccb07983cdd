//! Clause-by-clause check reports with witness index tuples.

use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

/// Witness tuples kept per clause; the total count is always exact.
pub const MAX_WITNESSES: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
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

/// Collects failing index tuples for one clause.
#[derive(Debug, Default)]
pub struct Witnesses {
    tuples: Vec<Vec<usize>>,
    count: usize,
    note: Option<String>,
}

impl Witnesses {
    pub fn push(&mut self, tuple: impl Into<Vec<usize>>) {
        self.count += 1;
        if self.tuples.len() < MAX_WITNESSES {
            self.tuples.push(tuple.into());
        }
    }

    pub fn fail_if(&mut self, bad: bool, tuple: impl Into<Vec<usize>>) {
        if bad {
            self.push(tuple);
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.note = Some(note.into());
    }

    pub fn count(&self) -> usize {
        self.count
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseResult {
    pub claim: String,
    pub clause: String,
    pub status: Status,
    pub witnesses: Vec<Vec<usize>>,
    pub witness_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Advisory clauses are computed and shown but never fail a report.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub advisory: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub claim: String,
    pub header: Option<String>,
    pub clauses: Vec<ClauseResult>,
}

impl CheckReport {
    pub fn new(claim: impl Into<String>) -> Self {
        CheckReport { claim: claim.into(), header: None, clauses: Vec::new() }
    }

    pub fn with_header(mut self, header: impl Into<String>) -> Self {
        self.header = Some(header.into());
        self
    }

    /// Renames the report and every clause's claim field.
    pub fn with_claim(mut self, claim: impl Into<String>) -> Self {
        self.claim = claim.into();
        for c in &mut self.clauses {
            c.claim = self.claim.clone();
        }
        self
    }

    /// Runs `body`, timing it; the clause passes iff no witness was pushed.
    pub fn check(&mut self, clause: impl Into<String>, body: impl FnOnce(&mut Witnesses)) -> bool {
        let start = Instant::now();
        let mut w = Witnesses::default();
        body(&mut w);
        let ok = w.count == 0;
        self.push_clause(clause.into(), if ok { Status::Pass } else { Status::Fail }, w, start.elapsed(), false);
        ok
    }

    /// Like [`check`](Self::check) but never counts against the report.
    pub fn advise(&mut self, clause: impl Into<String>, body: impl FnOnce(&mut Witnesses)) {
        let start = Instant::now();
        let mut w = Witnesses::default();
        body(&mut w);
        let status = if w.count == 0 { Status::Pass } else { Status::Fail };
        self.push_clause(clause.into(), status, w, start.elapsed(), true);
    }

    pub fn pass_or_fail(&mut self, clause: impl Into<String>, ok: bool, note: Option<String>) -> bool {
        let mut w = Witnesses { note, ..Witnesses::default() };
        if !ok {
            w.count = 1;
        }
        self.push_clause(clause.into(), if ok { Status::Pass } else { Status::Fail }, w, Duration::ZERO, false);
        ok
    }

    pub fn skip(&mut self, clause: impl Into<String>, reason: impl Into<String>) {
        let w = Witnesses { note: Some(reason.into()), ..Witnesses::default() };
        self.push_clause(clause.into(), Status::Skipped, w, Duration::ZERO, false);
    }

    fn push_clause(&mut self, clause: String, status: Status, w: Witnesses, elapsed: Duration, advisory: bool) {
        self.clauses.push(ClauseResult {
            claim: self.claim.clone(),
            clause,
            status,
            witnesses: w.tuples,
            witness_count: w.count,
            note: w.note,
            advisory,
            elapsed,
        });
    }

    /// Appends another report's clauses as `prefix/clause`.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for mut c in other.clauses {
            c.clause = if prefix.is_empty() { c.clause } else { format!("{prefix}/{}", c.clause) };
            c.claim = self.claim.clone();
            self.clauses.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.advisory || c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClauseResult> {
        self.clauses.iter().filter(|c| !c.advisory && c.status == Status::Fail)
    }

    pub fn clause(&self, name: &str) -> Option<&ClauseResult> {
        self.clauses.iter().find(|c| c.clause == name)
    }

    pub fn status_of(&self, name: &str) -> Option<Status> {
        self.clause(name).map(|c| c.status)
    }

    /// `(clause, status)` pairs; the shape compared across fields.
    pub fn outcomes(&self) -> Vec<(String, Status)> {
        self.clauses.iter().map(|c| (c.clause.clone(), c.status)).collect()
    }

    pub fn total_elapsed(&self) -> Duration {
        self.clauses.iter().map(|c| c.elapsed).sum()
    }

    /// Machine-readable records. Timing is omitted unless requested so that
    /// reports on identical inputs are byte-identical.
    pub fn to_json(&self, include_timing: bool) -> serde_json::Value {
        let records: Vec<serde_json::Value> = self
            .clauses
            .iter()
            .map(|c| {
                let mut v = serde_json::to_value(c).expect("clause serializes");
                let timing = if include_timing {
                    serde_json::json!(c.elapsed.as_secs_f64() * 1e3)
                } else {
                    serde_json::Value::Null
                };
                v["timing"] = timing;
                v
            })
            .collect();
        serde_json::Value::Array(records)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.claim)?;
        if let Some(h) = &self.header {
            for line in h.lines() {
                writeln!(f, "   {line}")?;
            }
        }
        for c in &self.clauses {
            let tag = if c.advisory { format!("{} (advisory)", c.status) } else { c.status.to_string() };
            write!(f, "  [{tag}] {}", c.clause)?;
            if let Some(n) = &c.note {
                write!(f, ": {n}")?;
            }
            writeln!(f)?;
            if c.witness_count > 0 {
                let shown: Vec<String> = c
                    .witnesses
                    .iter()
                    .map(|t| format!("({})", t.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")))
                    .collect();
                writeln!(f, "      {} witness(es): {}", c.witness_count, shown.join(" "))?;
            }
        }
        Ok(())
    }
}
