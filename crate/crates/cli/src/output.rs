//! Report envelope and the three output formats.
//!
//! Every subcommand emits the same JSON shape:
//! `{"command", "parameters", "result", "elapsed_ms"}`. Plain and CSV
//! renderings carry no timing, so byte-identical reruns stay byte-identical.

use serde::{Deserialize, Serialize};

use sumsetlab::{BoundReport, Finding, SumSet, SweepMode, Variant, VerificationReport};

/// Output format selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// Common wrapper for machine-readable reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Envelope<P, R> {
    pub command: String,
    pub parameters: P,
    pub result: R,
    pub elapsed_ms: u64,
}

/// Echo of the input literals exactly as parsed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reps: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeParams {
    #[serde(flatten)]
    pub input: InputEcho,
    pub alpha: usize,
    pub variant: Variant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundParams {
    #[serde(flatten)]
    pub input: InputEcho,
    pub alpha: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyParams {
    pub mode: SweepMode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reps: Option<Vec<usize>>,
    pub alphas: Vec<usize>,
    pub universe_max: i64,
    pub regime: sumsetlab::Regime,
    pub cap: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeResult {
    pub variant: Variant,
    pub alpha: usize,
    pub source_total: i64,
    pub cardinality: usize,
    pub values: Vec<i64>,
}

impl From<&SumSet> for ComputeResult {
    fn from(s: &SumSet) -> Self {
        ComputeResult {
            variant: s.variant(),
            alpha: s.alpha(),
            source_total: s.source_total(),
            cardinality: s.len(),
            values: s.values().to_vec(),
        }
    }
}

pub fn to_json<P: Serialize, R: Serialize>(envelope: &Envelope<P, R>) -> String {
    let mut text = serde_json::to_string_pretty(envelope).expect("reports are serializable");
    text.push('\n');
    text
}

fn join<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

pub fn plain_compute(result: &ComputeResult) -> String {
    format!(
        "variant: {}\nalpha: {}\nsource-total: {}\ncardinality: {}\nvalues: {}\n",
        result.variant,
        result.alpha,
        result.source_total,
        result.cardinality,
        join(&result.values, " "),
    )
}

pub fn csv_compute(result: &ComputeResult) -> String {
    let mut out = String::from("value\n");
    for v in &result.values {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

fn opt<T: std::fmt::Display>(value: &Option<T>) -> String {
    value.as_ref().map(T::to_string).unwrap_or_default()
}

pub fn plain_bound(report: &BoundReport) -> String {
    let mut out = format!(
        "object: {}\nregime: {}\nk: {}\nalpha: {}\n",
        report.object, report.regime, report.k, report.alpha
    );
    if let Some(m) = report.m {
        out.push_str(&format!("m: {m}\n"));
    }
    out.push_str(&format!("bound: {}\n", report.bound));
    if let Some(achieved) = report.achieved {
        out.push_str(&format!("achieved: {achieved}\n"));
    }
    if let Some(extremal) = report.extremal {
        out.push_str(&format!("extremal: {extremal}\n"));
    }
    out
}

pub fn csv_bound(report: &BoundReport) -> String {
    format!(
        "object,regime,k,alpha,m,bound,achieved,extremal\n{},{},{},{},{},{},{},{}\n",
        report.object,
        report.regime,
        report.k,
        report.alpha,
        opt(&report.m),
        report.bound,
        opt(&report.achieved),
        opt(&report.extremal),
    )
}

fn finding_line(f: &Finding) -> String {
    let mut line = format!(
        "  {{{}}} alpha={} achieved={} bound={} structure={}",
        join(&f.elements, ","),
        f.alpha,
        f.achieved,
        f.bound,
        f.structure.kind,
    );
    if let Some(d) = f.structure.dilation {
        line.push_str(&format!(" d={d}"));
    }
    if let Some(e) = &f.structure.exception {
        line.push_str(&format!(" tag={}", e.tag));
    }
    line.push('\n');
    line
}

pub fn plain_verify(report: &VerificationReport) -> String {
    let mut out = format!(
        "mode: {}\nobject: {}\nregime: {}\nk: {}\n",
        report.mode, report.object, report.regime, report.k
    );
    if let Some(reps) = &report.reps {
        out.push_str(&format!("reps: {}\n", join(reps, ",")));
    }
    out.push_str(&format!(
        "alphas: {}\nuniverse-max: {}\ncandidates: {}\nevaluations: {}\n",
        join(&report.alphas, " "),
        report.universe_max,
        report.total_candidates,
        report.evaluations,
    ));
    out.push_str(&format!("extremal: {}\n", report.extremal.len()));
    for f in &report.extremal {
        out.push_str(&finding_line(f));
    }
    out.push_str(&format!(
        "counterexamples: {}\n",
        report.counterexamples.len()
    ));
    for f in &report.counterexamples {
        out.push_str(&finding_line(f));
    }
    out.push_str(&format!("anomalies: {}\n", report.anomalies.len()));
    for f in &report.anomalies {
        out.push_str(&finding_line(f));
    }
    for note in &report.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    out.push_str(&format!("verdict: {}\n", report.verdict));
    out
}

pub fn csv_verify(report: &VerificationReport) -> String {
    let mut out = String::from("role,elements,alpha,achieved,bound,structure,dilation,exception\n");
    let mut push = |role: &str, f: &Finding| {
        out.push_str(&format!(
            "{role},{},{},{},{},{},{},{}\n",
            join(&f.elements, " "),
            f.alpha,
            f.achieved,
            f.bound,
            f.structure.kind,
            opt(&f.structure.dilation),
            f.structure
                .exception
                .as_ref()
                .map(|e| e.tag.to_string())
                .unwrap_or_default(),
        ));
    };
    for f in &report.extremal {
        push("extremal", f);
    }
    for f in &report.counterexamples {
        push("counterexample", f);
    }
    for f in &report.anomalies {
        push("anomaly", f);
    }
    out
}
