//! Human, JSON and CSV renderings of eval results, tables and suite reports.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use specfun_verify::SuiteReport;

use crate::error::{exit, CliError, Result};
use crate::eval::Outcome;
use crate::num::{human, machine, Num};
use crate::tables::{Cell, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::usage(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn csv_string(header: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::io("<csv>", std::io::Error::other(e));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::io("<csv>", std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

// eval

/// Named reals serialized as a JSON object, keeping 17-digit formatting.
struct Fields<'a>(&'a [(&'a str, f64)]);

impl Serialize for Fields<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, &Num(*v))?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct EvalDoc<'a> {
    target: &'a str,
    params: Fields<'a>,
    value: Num,
    #[serde(skip_serializing_if = "Option::is_none")]
    extras: Option<Fields<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    terms_used: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    est_error: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    converged: Option<bool>,
}

pub fn eval(target: &str, params: &[(&str, f64)], out: &Outcome, format: Format) -> Result<String> {
    match format {
        Format::Human => {
            let mut s = format!("{}\n", human(out.value));
            for (k, v) in &out.extras {
                s.push_str(&format!("  {k}: {}\n", human(*v)));
            }
            if let Some(series) = out.series {
                s.push_str(&format!(
                    "  terms: {}, est. error: {}, converged: {}\n",
                    series.terms_used,
                    human(series.est_error),
                    series.converged
                ));
            }
            Ok(s)
        }
        Format::Json => {
            let doc = EvalDoc {
                target,
                params: Fields(params),
                value: Num(out.value),
                extras: (!out.extras.is_empty()).then_some(Fields(&out.extras)),
                terms_used: out.series.map(|s| s.terms_used),
                est_error: out.series.map(|s| Num(s.est_error)),
                converged: out.series.map(|s| s.converged),
            };
            json(&doc)
        }
        Format::Csv => {
            let mut header: Vec<String> = vec!["target".into()];
            let mut row: Vec<String> = vec![target.into()];
            for (k, v) in params {
                header.push(k.to_string());
                row.push(machine(*v));
            }
            header.push("value".into());
            row.push(machine(out.value));
            for (k, v) in &out.extras {
                header.push(k.to_string());
                row.push(machine(*v));
            }
            if let Some(s) = out.series {
                header.extend(["terms_used", "est_error", "converged"].map(String::from));
                row.extend([s.terms_used.to_string(), machine(s.est_error), s.converged.to_string()]);
            }
            csv_string(&header, &[row])
        }
    }
}

// tables

#[derive(Serialize)]
#[serde(untagged)]
enum JsonCell<'a> {
    Text(&'a str),
    Int(u64),
    Num(Num),
    Bool(bool),
}

#[derive(Serialize)]
struct TableDoc<'a> {
    table: &'a str,
    columns: &'a [&'static str],
    rows: Vec<Vec<JsonCell<'a>>>,
}

pub fn table(t: &Table, format: Format) -> Result<String> {
    match format {
        Format::Human => {
            let mut s = t.columns.join(" ");
            s.push('\n');
            for row in &t.rows {
                let cells: Vec<String> = row
                    .iter()
                    .map(|c| match c {
                        Cell::Text(v) => v.clone(),
                        Cell::Int(v) => v.to_string(),
                        Cell::Real(v) => human(*v),
                        Cell::Fixed(v, d) => format!("{v:.d$}"),
                        Cell::Bool(v) => if *v { "yes" } else { "no" }.to_string(),
                    })
                    .collect();
                s.push_str(&cells.join(" "));
                s.push('\n');
            }
            Ok(s)
        }
        Format::Json => {
            let rows = t
                .rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| match c {
                            Cell::Text(v) => JsonCell::Text(v),
                            Cell::Int(v) => JsonCell::Int(*v),
                            Cell::Real(v) | Cell::Fixed(v, _) => JsonCell::Num(Num(*v)),
                            Cell::Bool(v) => JsonCell::Bool(*v),
                        })
                        .collect()
                })
                .collect();
            json(&TableDoc {
                table: t.name,
                columns: &t.columns,
                rows,
            })
        }
        Format::Csv => {
            let header: Vec<String> = t.columns.iter().map(|c| c.to_string()).collect();
            let rows: Vec<Vec<String>> = t
                .rows
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| match c {
                            Cell::Text(v) => v.clone(),
                            Cell::Int(v) => v.to_string(),
                            Cell::Real(v) | Cell::Fixed(v, _) => machine(*v),
                            Cell::Bool(v) => v.to_string(),
                        })
                        .collect()
                })
                .collect();
            csv_string(&header, &rows)
        }
    }
}

// suite reports

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// No violations, but some points failed to evaluate.
    Error,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ViolationDoc {
    pub point: Num,
    pub margin: Num,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailureDoc {
    pub point: Num,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub suite: String,
    pub status: Status,
    pub points: usize,
    pub min_margin: Num,
    pub worst_point: Num,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub worst_lhs: Option<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub worst_rhs: Option<Num>,
    pub tolerance: Num,
    pub violations: Vec<ViolationDoc>,
    #[serde(default)]
    pub failures: Vec<FailureDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<Num>,
}

impl From<&SuiteReport> for ReportDoc {
    fn from(r: &SuiteReport) -> Self {
        let status = if !r.violations.is_empty() {
            Status::Fail
        } else if !r.failures.is_empty() {
            Status::Error
        } else {
            Status::Pass
        };
        ReportDoc {
            suite: r.suite.clone(),
            status,
            points: r.points,
            min_margin: Num(r.min_margin),
            worst_point: Num(r.worst_point),
            worst_lhs: r.worst_lhs.map(Num),
            worst_rhs: r.worst_rhs.map(Num),
            tolerance: Num(r.tolerance),
            violations: r
                .violations
                .iter()
                .map(|v| ViolationDoc {
                    point: Num(v.point),
                    margin: Num(v.margin),
                })
                .collect(),
            failures: r
                .failures
                .iter()
                .map(|f| FailureDoc {
                    point: Num(f.point),
                    error: f.error.clone(),
                })
                .collect(),
            note: r.note.clone(),
            elapsed_ms: r.elapsed_ms.map(Num),
        }
    }
}

/// One verify run: per-suite reports plus totals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunDoc {
    pub suites: usize,
    pub passed: usize,
    pub violations: usize,
    pub failures: usize,
    pub reports: Vec<ReportDoc>,
}

impl RunDoc {
    pub fn new(reports: Vec<ReportDoc>) -> Self {
        RunDoc {
            suites: reports.len(),
            passed: reports.iter().filter(|r| r.status == Status::Pass).count(),
            violations: reports.iter().map(|r| r.violations.len()).sum(),
            failures: reports.iter().map(|r| r.failures.len()).sum(),
            reports,
        }
    }

    pub fn without_timing(mut self) -> Self {
        for r in &mut self.reports {
            r.elapsed_ms = None;
        }
        self
    }

    pub fn exit_code(&self) -> u8 {
        if self.violations > 0 {
            exit::VIOLATION
        } else if self.failures > 0 {
            exit::DOMAIN
        } else {
            exit::OK
        }
    }
}

const MAX_LISTED: usize = 5;

fn human_run(run: &RunDoc) -> String {
    let width = run.reports.iter().map(|r| r.suite.chars().count()).max().unwrap_or(0);
    let mut s = String::new();
    for r in &run.reports {
        let pad = width - r.suite.chars().count();
        s.push_str(&format!(
            "{:<5} {}{} {:>6} pts  min margin {} at {}  (tol {})",
            r.status.label(),
            r.suite,
            " ".repeat(pad),
            r.points,
            human(r.min_margin.0),
            human(r.worst_point.0),
            human(r.tolerance.0),
        ));
        if let Some(ms) = r.elapsed_ms {
            s.push_str(&format!("  {} ms", human(ms.0)));
        }
        s.push('\n');
        if r.status != Status::Pass {
            if let (Some(l), Some(rhs)) = (r.worst_lhs, r.worst_rhs) {
                s.push_str(&format!("      worst point sides: lhs {}, rhs {}\n", human(l.0), human(rhs.0)));
            }
        }
        for v in r.violations.iter().take(MAX_LISTED) {
            s.push_str(&format!("      violation at {}: margin {}\n", human(v.point.0), human(v.margin.0)));
        }
        if r.violations.len() > MAX_LISTED {
            s.push_str(&format!("      … {} more violations\n", r.violations.len() - MAX_LISTED));
        }
        for f in r.failures.iter().take(MAX_LISTED) {
            s.push_str(&format!("      failed at {}: {}\n", human(f.point.0), f.error));
        }
        if r.failures.len() > MAX_LISTED {
            s.push_str(&format!("      … {} more point failures\n", r.failures.len() - MAX_LISTED));
        }
        if let Some(note) = &r.note {
            s.push_str(&format!("      note: {note}\n"));
        }
    }
    s.push_str(&format!(
        "{} suites: {} passed, {} violations, {} point failures\n",
        run.suites, run.passed, run.violations, run.failures
    ));
    s
}

fn csv_run(run: &RunDoc) -> Result<String> {
    let timed = run.reports.iter().any(|r| r.elapsed_ms.is_some());
    let mut header: Vec<String> = [
        "suite",
        "status",
        "points",
        "min_margin",
        "worst_point",
        "worst_lhs",
        "worst_rhs",
        "tolerance",
        "violations",
        "failures",
        "note",
    ]
    .map(String::from)
    .to_vec();
    if timed {
        header.push("elapsed_ms".into());
    }
    let opt = |x: Option<Num>| x.map(|n| machine(n.0)).unwrap_or_default();
    let rows: Vec<Vec<String>> = run
        .reports
        .iter()
        .map(|r| {
            let mut row = vec![
                r.suite.clone(),
                format!("{:?}", r.status).to_lowercase(),
                r.points.to_string(),
                machine(r.min_margin.0),
                machine(r.worst_point.0),
                opt(r.worst_lhs),
                opt(r.worst_rhs),
                machine(r.tolerance.0),
                r.violations.len().to_string(),
                r.failures.len().to_string(),
                r.note.clone().unwrap_or_default(),
            ];
            if timed {
                row.push(opt(r.elapsed_ms));
            }
            row
        })
        .collect();
    csv_string(&header, &rows)
}

pub fn run(run: &RunDoc, format: Format) -> Result<String> {
    match format {
        Format::Human => Ok(human_run(run)),
        Format::Json => json(run),
        Format::Csv => csv_run(run),
    }
}
