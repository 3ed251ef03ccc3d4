//! Extremality tests, structure classification, and exhaustive sweeps.
//!
//! An input is *extremal* at `alpha` when `|Sigma_alpha|` equals the
//! closed-form lower bound. The inverse theorems predict that, under their
//! hypotheses, extremal inputs are dilated intervals (`d*[1,k]` resp.
//! `d*[0,k-1]`, with repetitions carried along for sequences). Outside the
//! hypotheses a closed catalogue of exceptional families applies; anything
//! extremal that matches neither is surfaced as an anomaly, never dropped.

use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{self, BoundReport};
use crate::error::{Error, Result};
use crate::input::{IntSet, MultiSeq, ObjectKind, Regime, SumInput};
use crate::sumset;

/// Default ceiling on candidates per sweep.
pub const DEFAULT_CANDIDATE_CAP: u64 = 100_000_000;

const BATCH: usize = 4096;

/// Shape detected by [`classify_structure`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StructureKind {
    /// `{d, 2d, ..., kd}` (terms, for sequences), `d >= 1`.
    #[serde(rename = "dilated-interval-1k")]
    DilatedInterval1K,
    /// `{0, d, 2d, ..., (k-1)d}`, `d >= 1`.
    #[serde(rename = "dilated-interval-0k1")]
    DilatedInterval0K1,
    /// Not an interval, but in the exceptional-family catalogue.
    #[serde(rename = "exception")]
    Exception,
    #[serde(rename = "unstructured")]
    Unstructured,
}

impl StructureKind {
    pub fn name(self) -> &'static str {
        match self {
            StructureKind::DilatedInterval1K => "dilated-interval-1k",
            StructureKind::DilatedInterval0K1 => "dilated-interval-0k1",
            StructureKind::Exception => "exception",
            StructureKind::Unstructured => "unstructured",
        }
    }
}

impl std::fmt::Display for StructureKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// The closed catalogue of extremal families outside the inverse theorems'
/// hypotheses. R1/R2 cover positive and with-zero sets, R3/R4 the sequence
/// analogues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ExceptionTag {
    /// Any positive set, `alpha in {k-1, k}`.
    #[serde(rename = "R1i-alpha-ge-k-1")]
    R1i,
    /// Any positive pair `{a1, a2}`, every `alpha`.
    #[serde(rename = "R1ii-k2")]
    R1ii,
    /// `{a1, a2, a1+a2}`, `alpha <= 1`.
    #[serde(rename = "R1iii-sumclosed-k3")]
    R1iii,
    /// Any with-zero set, `alpha in {k-1, k}`.
    #[serde(rename = "R2i-alpha-ge-k-1")]
    R2i,
    /// `{0, a1, a2}`, every `alpha`.
    #[serde(rename = "R2ii-zero-k3")]
    R2ii,
    /// `{0, a1, a2, a1+a2}`, every `alpha`.
    #[serde(rename = "R2iii-zero-sumclosed-k4")]
    R2iii,
    /// Any positive sequence, `alpha in {n-1, n}`.
    #[serde(rename = "R3i-alpha-ge-n-1")]
    R3i,
    /// Two-term sequences: any terms when `r1 = 1`, else only `a2 = 2 a1`.
    #[serde(rename = "R3ii-k2")]
    R3ii,
    /// `(a1, a2, a1+a2)` with `r1 = r2 = 1`, every `alpha`.
    #[serde(rename = "R3iii-sumclosed-k3")]
    R3iii,
    /// Any with-zero sequence, `alpha in {n-1, n}`.
    #[serde(rename = "R4i-alpha-ge-n-1")]
    R4i,
    /// `(0, a1, a2)` with reps `(r0, 1, r2)`, every `alpha`.
    #[serde(rename = "R4ii-zero-k3")]
    R4ii,
    /// `(0, a1, a2, a1+a2)` with reps `(r0, 1, 1, r3)`, every `alpha`.
    #[serde(rename = "R4iii-zero-sumclosed-k4")]
    R4iii,
}

impl ExceptionTag {
    pub fn name(self) -> &'static str {
        match self {
            ExceptionTag::R1i => "R1i-alpha-ge-k-1",
            ExceptionTag::R1ii => "R1ii-k2",
            ExceptionTag::R1iii => "R1iii-sumclosed-k3",
            ExceptionTag::R2i => "R2i-alpha-ge-k-1",
            ExceptionTag::R2ii => "R2ii-zero-k3",
            ExceptionTag::R2iii => "R2iii-zero-sumclosed-k4",
            ExceptionTag::R3i => "R3i-alpha-ge-n-1",
            ExceptionTag::R3ii => "R3ii-k2",
            ExceptionTag::R3iii => "R3iii-sumclosed-k3",
            ExceptionTag::R4i => "R4i-alpha-ge-n-1",
            ExceptionTag::R4ii => "R4ii-zero-k3",
            ExceptionTag::R4iii => "R4iii-zero-sumclosed-k4",
        }
    }
}

impl std::fmt::Display for ExceptionTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A matched exceptional family with the parameters instantiating it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionMatch {
    pub tag: ExceptionTag,
    pub witness: Vec<i64>,
}

/// Structural classification of one input: dilated interval, catalogued
/// exception, or unstructured. Interval detection takes precedence; a
/// matching exception tag is recorded alongside it when both apply.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureClass {
    pub kind: StructureKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dilation: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exception: Option<ExceptionMatch>,
}

/// Detects the dilated-interval shapes: `d*[1,k]` (all values `i * d`) and
/// `d*[0,k-1]` (leading zero, remaining values `i * d`). Exception families
/// are alpha-dependent and handled by [`match_exception`].
pub fn classify_structure(input: &SumInput) -> StructureClass {
    let vals = input.values();
    let k = vals.len();
    if vals[0] > 0 {
        let d = vals[0];
        if vals
            .iter()
            .enumerate()
            .all(|(i, &v)| v == (i as i64 + 1) * d)
        {
            return StructureClass {
                kind: StructureKind::DilatedInterval1K,
                dilation: Some(d),
                exception: None,
            };
        }
    } else if vals[0] == 0 && k >= 2 {
        let d = vals[1];
        if vals.iter().enumerate().all(|(i, &v)| v == i as i64 * d) {
            return StructureClass {
                kind: StructureKind::DilatedInterval0K1,
                dilation: Some(d),
                exception: None,
            };
        }
    }
    StructureClass {
        kind: StructureKind::Unstructured,
        dilation: None,
        exception: None,
    }
}

/// Returns the first catalogued family covering `input` at `alpha`, if any.
pub fn match_exception(input: &SumInput, alpha: usize) -> Result<Option<ExceptionMatch>> {
    let regime = input.regime();
    if regime == Regime::General {
        return Err(Error::UnsupportedRegime(regime));
    }
    let n = input.n();
    if alpha > n {
        return Err(Error::AlphaRange { alpha, max: n });
    }
    let vals = input.values();
    let k = vals.len();
    let hit = |tag, witness: &[i64]| {
        Some(ExceptionMatch {
            tag,
            witness: witness.to_vec(),
        })
    };

    let found = match (input, regime) {
        (SumInput::Set(_), Regime::Positive) => {
            if alpha + 1 >= k {
                hit(ExceptionTag::R1i, vals)
            } else if k == 2 {
                hit(ExceptionTag::R1ii, vals)
            } else if k == 3 && alpha <= 1 && vals[2] == vals[0] + vals[1] {
                hit(ExceptionTag::R1iii, &vals[..2])
            } else {
                None
            }
        }
        (SumInput::Set(_), Regime::WithZero) => {
            if alpha + 1 >= k {
                hit(ExceptionTag::R2i, vals)
            } else if k == 3 {
                hit(ExceptionTag::R2ii, &vals[1..])
            } else if k == 4 && vals[3] == vals[1] + vals[2] {
                hit(ExceptionTag::R2iii, &vals[1..3])
            } else {
                None
            }
        }
        (SumInput::Seq(seq), Regime::Positive) => {
            let reps = seq.reps();
            if alpha + 1 >= n {
                hit(ExceptionTag::R3i, vals)
            } else if k == 2 && (reps[0] == 1 || vals[1] == 2 * vals[0]) {
                hit(ExceptionTag::R3ii, vals)
            } else if k == 3 && reps[0] == 1 && reps[1] == 1 && vals[2] == vals[0] + vals[1] {
                hit(ExceptionTag::R3iii, &vals[..2])
            } else {
                None
            }
        }
        (SumInput::Seq(seq), Regime::WithZero) => {
            let reps = seq.reps();
            if alpha + 1 >= n {
                hit(ExceptionTag::R4i, vals)
            } else if k == 3 && reps[1] == 1 {
                hit(ExceptionTag::R4ii, &vals[1..])
            } else if k == 4 && reps[1] == 1 && reps[2] == 1 && vals[3] == vals[1] + vals[2] {
                hit(ExceptionTag::R4iii, &vals[1..3])
            } else {
                None
            }
        }
        (_, Regime::General) => unreachable!(),
    };
    Ok(found)
}

/// Full structural annotation at a given `alpha`: interval classification
/// first, exception tag recorded additionally; inputs that are only
/// catalogue members get `kind = exception`.
pub fn annotate_structure(input: &SumInput, alpha: usize) -> Result<StructureClass> {
    let mut class = classify_structure(input);
    let exception = match_exception(input, alpha)?;
    match class.kind {
        StructureKind::Unstructured => {
            if exception.is_some() {
                class.kind = StructureKind::Exception;
                class.exception = exception;
            }
        }
        _ => class.exception = exception,
    }
    Ok(class)
}

/// Whether `input` attains the applicable lower bound at `alpha`, together
/// with the evaluated [`BoundReport`].
pub fn is_extremal(input: &SumInput, alpha: usize) -> Result<(bool, BoundReport)> {
    let report = bounds::bound_for_computed(input, alpha)?;
    Ok((report.extremal == Some(true), report))
}

/// What a sweep enumerates: all `k`-element sets, or all term tuples for a
/// fixed repetition pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CandidateSpace {
    Sets { k: usize },
    Seqs { reps: Vec<usize> },
}

impl CandidateSpace {
    pub fn sets(k: usize) -> Self {
        CandidateSpace::Sets { k }
    }

    pub fn seqs(reps: Vec<usize>) -> Self {
        CandidateSpace::Seqs { reps }
    }

    /// Distinct values per candidate.
    pub fn k(&self) -> usize {
        match self {
            CandidateSpace::Sets { k } => *k,
            CandidateSpace::Seqs { reps } => reps.len(),
        }
    }

    /// Total length per candidate (`k` for sets).
    pub fn n(&self) -> usize {
        match self {
            CandidateSpace::Sets { k } => *k,
            CandidateSpace::Seqs { reps } => reps.iter().sum(),
        }
    }

    pub fn reps(&self) -> Option<&[usize]> {
        match self {
            CandidateSpace::Sets { .. } => None,
            CandidateSpace::Seqs { reps } => Some(reps),
        }
    }

    fn object_kind(&self) -> ObjectKind {
        match self {
            CandidateSpace::Sets { .. } => ObjectKind::Set,
            CandidateSpace::Seqs { .. } => ObjectKind::Sequence,
        }
    }

    fn validate(&self, regime: Regime) -> Result<()> {
        let k = self.k();
        if k == 0 {
            return Err(Error::EmptyInput);
        }
        if let CandidateSpace::Seqs { reps } = self {
            if let Some(index) = reps.iter().position(|&r| r == 0) {
                return Err(Error::ZeroRepetition { index });
            }
        }
        match regime {
            Regime::Positive => Ok(()),
            Regime::WithZero if k >= 2 => Ok(()),
            Regime::WithZero => Err(Error::TooFewElements {
                what: "with-zero sweep",
                k,
                min: 2,
            }),
            Regime::General => Err(Error::UnsupportedRegime(regime)),
        }
    }
}

/// Sweep knobs shared by every verification driver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    /// Candidates take their nonzero values from `[1, universe_max]`.
    pub universe_max: i64,
    /// `Positive` or `WithZero` (with-zero forces 0 as the least value).
    pub regime: Regime,
    /// Maximum number of candidates before refusing to run.
    pub candidate_cap: u64,
    /// Worker threads; 0 picks the available parallelism.
    pub workers: usize,
}

impl SweepConfig {
    pub fn new(universe_max: i64, regime: Regime) -> Self {
        Self {
            universe_max,
            regime,
            candidate_cap: DEFAULT_CANDIDATE_CAP,
            workers: 0,
        }
    }

    pub fn with_cap(mut self, cap: u64) -> Self {
        self.candidate_cap = cap;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepMode {
    Direct,
    Inverse,
    Explore,
}

impl std::fmt::Display for SweepMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SweepMode::Direct => "direct",
            SweepMode::Inverse => "inverse",
            SweepMode::Explore => "explore",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    TheoremConfirmed,
    CounterexampleFound,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::TheoremConfirmed => "theorem-confirmed",
            Verdict::CounterexampleFound => "counterexample-found",
        })
    }
}

/// One candidate observation: its elements (terms), the restriction it was
/// evaluated at, and how its cardinality compares to the bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub elements: Vec<i64>,
    pub alpha: usize,
    pub achieved: u64,
    pub bound: u64,
    pub structure: StructureClass,
}

/// Outcome of a sweep. Lists are ordered lexicographically by element tuple
/// (then by `alpha`), independent of the worker count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub mode: SweepMode,
    pub object: ObjectKind,
    pub regime: Regime,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reps: Option<Vec<usize>>,
    pub alphas: Vec<usize>,
    pub universe_max: i64,
    pub total_candidates: u64,
    pub evaluations: u64,
    pub extremal: Vec<Finding>,
    pub counterexamples: Vec<Finding>,
    /// Extremal inputs matching neither interval form nor catalogue.
    pub anomalies: Vec<Finding>,
    pub notes: Vec<String>,
    pub verdict: Verdict,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    acc
}

fn bound_value(space: &CandidateSpace, regime: Regime, alpha: usize) -> Result<u64> {
    match space {
        CandidateSpace::Sets { k } => match regime {
            Regime::Positive => bounds::lower_bound_set_positive(*k, alpha),
            Regime::WithZero => bounds::lower_bound_set_with_zero(*k, alpha),
            Regime::General => Err(Error::UnsupportedRegime(regime)),
        },
        CandidateSpace::Seqs { reps } => {
            let n: usize = reps.iter().sum();
            if alpha == n {
                return Ok(1);
            }
            match regime {
                Regime::Positive => bounds::lower_bound_seq_positive(reps, alpha),
                Regime::WithZero => bounds::lower_bound_seq_with_zero(reps, alpha),
                Regime::General => Err(Error::UnsupportedRegime(regime)),
            }
        }
    }
}

struct Classified {
    finding: Finding,
    extremal: bool,
    counterexample: bool,
    anomaly: bool,
}

fn run_sweep(
    space: &CandidateSpace,
    alphas: &[usize],
    config: &SweepConfig,
    mode: SweepMode,
    mut notes: Vec<String>,
) -> Result<VerificationReport> {
    let start = Instant::now();
    space.validate(config.regime)?;
    if alphas.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = space.n();
    for &alpha in alphas {
        if alpha > n {
            return Err(Error::AlphaRange { alpha, max: n });
        }
    }
    let with_zero = config.regime == Regime::WithZero;
    let choose = if with_zero { space.k() - 1 } else { space.k() };
    if config.universe_max < choose as i64 {
        return Err(Error::UniverseTooSmall {
            universe_max: config.universe_max,
            needed: choose,
        });
    }
    let candidates = binomial(config.universe_max as u64, choose as u64);
    if candidates > config.candidate_cap as u128 {
        return Err(Error::CapExceeded {
            candidates,
            cap: config.candidate_cap,
        });
    }

    let bounds_per_alpha: Vec<u64> = alphas
        .iter()
        .map(|&a| bound_value(space, config.regime, a))
        .collect::<Result<_>>()?;

    let predicted = match config.regime {
        Regime::Positive => StructureKind::DilatedInterval1K,
        Regime::WithZero => StructureKind::DilatedInterval0K1,
        Regime::General => unreachable!(),
    };

    let evaluate = |values: &Vec<i64>| -> Result<Vec<Classified>> {
        let input: SumInput = match space {
            CandidateSpace::Sets { .. } => IntSet::new(values.clone())?.into(),
            CandidateSpace::Seqs { reps } => MultiSeq::new(values.clone(), reps.clone())?.into(),
        };
        let cards = sumset::at_least_cardinalities(&input)?;
        let mut out = Vec::new();
        for (&alpha, &bound) in alphas.iter().zip(&bounds_per_alpha) {
            let achieved = cards[alpha];
            let keep = match mode {
                SweepMode::Direct => achieved <= bound,
                SweepMode::Inverse | SweepMode::Explore => achieved == bound,
            };
            if !keep {
                continue;
            }
            let structure = annotate_structure(&input, alpha)?;
            let attained = achieved == bound;
            let counterexample = match mode {
                SweepMode::Direct => achieved < bound,
                SweepMode::Inverse => attained && structure.kind != predicted,
                SweepMode::Explore => false,
            };
            let anomaly = mode == SweepMode::Explore
                && attained
                && structure.kind == StructureKind::Unstructured;
            out.push(Classified {
                finding: Finding {
                    elements: values.clone(),
                    alpha,
                    achieved,
                    bound,
                    structure,
                },
                extremal: attained,
                counterexample,
                anomaly,
            });
        }
        Ok(out)
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Capacity(format!("worker pool: {e}")))?;

    let mut extremal = Vec::new();
    let mut counterexamples = Vec::new();
    let mut anomalies = Vec::new();
    let mut total_candidates = 0u64;

    let mut iter = (1..=config.universe_max).combinations(choose).map(|mut c| {
        if with_zero {
            c.insert(0, 0);
        }
        c
    });
    loop {
        let batch: Vec<Vec<i64>> = iter.by_ref().take(BATCH).collect();
        if batch.is_empty() {
            break;
        }
        total_candidates += batch.len() as u64;
        // Indexed parallel map keeps lexicographic order, so reports do not
        // depend on the worker count.
        let rows: Vec<Vec<Classified>> =
            pool.install(|| batch.par_iter().map(evaluate).collect::<Result<_>>())?;
        for row in rows {
            for item in row {
                if item.extremal {
                    extremal.push(item.finding.clone());
                }
                if item.counterexample {
                    counterexamples.push(item.finding.clone());
                }
                if item.anomaly {
                    anomalies.push(item.finding);
                }
            }
        }
    }

    if !anomalies.is_empty() {
        notes.push(format!(
            "{} extremal input(s) match neither a dilated interval nor a catalogued family",
            anomalies.len()
        ));
    }
    let verdict = if counterexamples.is_empty() {
        Verdict::TheoremConfirmed
    } else {
        Verdict::CounterexampleFound
    };
    Ok(VerificationReport {
        mode,
        object: space.object_kind(),
        regime: config.regime,
        k: space.k(),
        reps: space.reps().map(<[usize]>::to_vec),
        alphas: alphas.to_vec(),
        universe_max: config.universe_max,
        total_candidates,
        evaluations: total_candidates * alphas.len() as u64,
        extremal,
        counterexamples,
        anomalies,
        notes,
        verdict,
        elapsed: start.elapsed(),
    })
}

/// Enumerates every candidate, keeps the extremal ones, and annotates each
/// with its structure classification and any exception tag. No theorem is
/// assumed; unmatched extremal inputs land in `anomalies`.
pub fn enumerate_extremal(
    space: &CandidateSpace,
    alpha: usize,
    config: &SweepConfig,
) -> Result<VerificationReport> {
    run_sweep(space, &[alpha], config, SweepMode::Explore, Vec::new())
}

/// Sweeps the universe under an inverse theorem's hypotheses and reports as
/// counterexamples any extremal input that is not the predicted dilated
/// interval. Hypothesis violations are errors; use [`enumerate_extremal`]
/// to explore outside them.
pub fn verify_inverse(
    space: &CandidateSpace,
    alpha: usize,
    config: &SweepConfig,
) -> Result<VerificationReport> {
    let k = space.k();
    let n = space.n();
    let mut notes = Vec::new();
    let (min_k, max_alpha) = match (space, config.regime) {
        (CandidateSpace::Sets { .. }, Regime::Positive) => (4, k.saturating_sub(2)),
        (CandidateSpace::Sets { .. }, Regime::WithZero) => (5, k.saturating_sub(2)),
        (CandidateSpace::Seqs { .. }, Regime::Positive) => (4, n.saturating_sub(2)),
        (CandidateSpace::Seqs { .. }, Regime::WithZero) => (5, n.saturating_sub(1)),
        (_, Regime::General) => return Err(Error::UnsupportedRegime(Regime::General)),
    };
    if k < min_k {
        return Err(Error::Hypothesis(format!(
            "inverse theorem for {} {}s requires k >= {min_k} (got k = {k})",
            config.regime,
            space.object_kind(),
        )));
    }
    if alpha > max_alpha {
        return Err(Error::Hypothesis(format!(
            "inverse theorem for {} {}s requires alpha <= {max_alpha} (got alpha = {alpha})",
            config.regime,
            space.object_kind(),
        )));
    }
    if matches!(space, CandidateSpace::Seqs { .. })
        && config.regime == Regime::WithZero
        && alpha + 1 == n
    {
        notes.push(
            "boundary case alpha = n-1: the with-zero inverse statement is ambiguous here \
             (the positive-sequence hypothesis stops at alpha <= n-2) and every with-zero \
             sequence attains the bound"
                .to_string(),
        );
    }
    run_sweep(space, &[alpha], config, SweepMode::Inverse, notes)
}

/// Sweeps every candidate over every `alpha` in the given list, asserting
/// the direct inequality `|Sigma_alpha| >= bound`; violations are listed as
/// counterexamples (none are expected).
pub fn verify_direct(
    space: &CandidateSpace,
    alphas: &[usize],
    config: &SweepConfig,
) -> Result<VerificationReport> {
    run_sweep(space, alphas, config, SweepMode::Direct, Vec::new())
}
