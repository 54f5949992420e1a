use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::bijections::BijectionReport;
use crate::error::{invalid, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// Everything a command emits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: u32,
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub result: Payload,
}

/// Counts are carried as decimal strings so big values survive JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub n: usize,
    pub structured: Option<String>,
    pub brute: Option<String>,
    pub closed_form: Option<String>,
    pub fixture: Option<String>,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Counts {
        family: String,
        rows: Vec<CountRow>,
        all_agree: bool,
    },
    Elements {
        family: String,
        n: usize,
        count: usize,
        elements: Vec<String>,
    },
    Mapped {
        bijection: String,
        inverse: bool,
        input: String,
        output: String,
    },
    Reports {
        reports: Vec<BijectionReport>,
        all_pass: bool,
    },
    Permanent {
        source: String,
        order: usize,
        value: String,
    },
    Simples {
        n: usize,
        classes: BTreeMap<String, Vec<String>>,
        total: usize,
        matches_brute: Option<bool>,
        avoids_2431: Option<bool>,
        all_pass: bool,
    },
}

impl OutputRecord {
    pub fn new(command: &str, params: BTreeMap<String, String>, result: Payload) -> Self {
        OutputRecord { schema_version: SCHEMA_VERSION, command: command.to_string(), params, result }
    }

    /// False when a check carried by the payload failed.
    pub fn passed(&self) -> bool {
        match &self.result {
            Payload::Counts { all_agree, .. } => *all_agree,
            Payload::Reports { all_pass, .. } => *all_pass,
            Payload::Simples { all_pass, .. } => *all_pass,
            _ => true,
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("records serialize");
                s.push('\n');
                Ok(s)
            }
            Format::Csv => match &self.result {
                Payload::Counts { rows, .. } => Ok(counts_csv(rows)),
                _ => invalid(format!("csv output is only available for counts, not `{}`", self.command)),
            },
            Format::Plain => Ok(self.plain()),
        }
    }

    fn plain(&self) -> String {
        let mut out = String::new();
        match &self.result {
            Payload::Counts { family, rows, all_agree } => {
                let _ = writeln!(out, "family {family}");
                let _ = writeln!(out, "{:>4}  {:>14}  {:>14}  {:>14}  {:>14}  agree", "n", "structured", "brute", "closed", "fixture");
                for r in rows {
                    let _ = writeln!(
                        out,
                        "{:>4}  {:>14}  {:>14}  {:>14}  {:>14}  {}",
                        r.n,
                        dash(&r.structured),
                        dash(&r.brute),
                        dash(&r.closed_form),
                        dash(&r.fixture),
                        yes_no(r.agree)
                    );
                }
                let _ = writeln!(out, "{}", if *all_agree { "all agree" } else { "DISAGREEMENT" });
            }
            Payload::Elements { family, n, count, elements } => {
                let _ = writeln!(out, "# {family} n={n} count={count}");
                for e in elements {
                    let _ = writeln!(out, "{e}");
                }
            }
            Payload::Mapped { output, .. } => {
                let _ = writeln!(out, "{output}");
            }
            Payload::Reports { reports, all_pass } => {
                for r in reports {
                    let _ = writeln!(
                        out,
                        "{} {} n={} domain={} codomain={} forward={} inverse={}",
                        if r.is_bijection { "PASS" } else { "FAIL" },
                        r.family,
                        r.n,
                        r.domain_size,
                        r.codomain_size,
                        yes_no(r.forward_ok),
                        yes_no(r.inverse_ok)
                    );
                    for m in &r.mismatches {
                        let _ = writeln!(out, "    {m}");
                    }
                }
                let _ = writeln!(out, "{}", if *all_pass { "all pass" } else { "FAILURES" });
            }
            Payload::Permanent { value, .. } => {
                let _ = writeln!(out, "{value}");
            }
            Payload::Simples { n, classes, total, matches_brute, avoids_2431, all_pass } => {
                let _ = writeln!(out, "# simples n={n} total={total}");
                for (class, members) in classes {
                    let _ = writeln!(out, "{class} ({}): {}", members.len(), members.join(" "));
                }
                if let Some(b) = matches_brute {
                    let _ = writeln!(out, "matches brute force: {}", yes_no(*b));
                }
                if let Some(b) = avoids_2431 {
                    let _ = writeln!(out, "avoids 2431: {}", yes_no(*b));
                }
                if !all_pass {
                    let _ = writeln!(out, "FAILURES");
                }
            }
        }
        out
    }
}

fn dash(v: &Option<String>) -> &str {
    v.as_deref().unwrap_or("-")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn counts_csv(rows: &[CountRow]) -> String {
    let mut out = String::from("n,structured,brute,closed_form,fixture,agree\n");
    for r in rows {
        let cell = |v: &Option<String>| v.clone().unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n,
            cell(&r.structured),
            cell(&r.brute),
            cell(&r.closed_form),
            cell(&r.fixture),
            r.agree
        );
    }
    out
}
