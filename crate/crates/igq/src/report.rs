use serde::Serialize;

use crate::suite::{CheckResult, Status};

/// The parsed command line, echoed into the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invocation {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub space: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_mode: Option<String>,
    pub checks: Vec<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub invocation: Invocation,
    pub rows: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(invocation: Invocation, rows: Vec<CheckResult>) -> Report {
        let mut summary = Summary::default();
        for r in &rows {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Inconclusive => summary.inconclusive += 1,
            }
        }
        Report { tool_version: env!("CARGO_PKG_VERSION").to_string(), invocation, rows, summary }
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let inv = &self.invocation;
        let mut target = Vec::new();
        if let Some(n) = inv.n {
            target.push(format!("n={n}"));
        }
        if let Some(k) = inv.k {
            target.push(format!("k={k}"));
        }
        if let Some(s) = &inv.space {
            target.push(format!("space={s}"));
        }
        if let Some(q) = &inv.q_mode {
            target.push(format!("q={q}"));
        }
        let mut out = format!("# igq {} {}\n\n", inv.command, target.join(" "));
        out.push_str("| claim | computed | expected | status |\n|---|---|---|---|\n");
        for r in &self.rows {
            let status = match r.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Inconclusive => "INCONCLUSIVE",
            };
            out.push_str(&format!("| {} | {} | {} | {} |\n", cell(&r.claim_id), cell(&r.computed), cell(&r.expected), status));
        }
        let s = self.summary;
        out.push_str(&format!("\n{} pass, {} fail, {} inconclusive (tool {})\n", s.pass, s.fail, s.inconclusive, self.tool_version));
        out
    }

    /// Per-row wall clock, meant for stderr.
    pub fn timing_footer(&self) -> String {
        let mut out = String::from("# timings (ms)\n");
        let mut total = 0;
        for r in &self.rows {
            out.push_str(&format!("#   {:>8}  {}\n", r.millis, r.claim_id));
            total += r.millis;
        }
        out.push_str(&format!("#   {total:>8}  total\n"));
        out
    }
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}
