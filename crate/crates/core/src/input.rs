//! Canonical input types: finite integer sets and multiset sequences.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest value of `n * max|a_i|` accepted at construction. Keeps every
/// partial sum well inside `i64` so all downstream arithmetic is exact.
pub const MAX_TOTAL_MAGNITUDE: i64 = i64::MAX / 8;

/// Sign shape of an input, which decides whether the closed-form bounds apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    /// All elements strictly positive.
    Positive,
    /// Smallest element is 0 and there are at least two elements.
    WithZero,
    /// Anything else (negative elements, or the singleton {0}).
    General,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Regime::Positive => "positive",
            Regime::WithZero => "with-zero",
            Regime::General => "general",
        })
    }
}

fn regime_of(least: i64, k: usize) -> Regime {
    if least > 0 {
        Regime::Positive
    } else if least == 0 && k >= 2 {
        Regime::WithZero
    } else {
        Regime::General
    }
}

fn check_capacity(count: usize, values: &[i64]) -> Result<()> {
    let max_abs = values.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
    let magnitude = count as u128 * max_abs as u128;
    if magnitude > MAX_TOTAL_MAGNITUDE as u128 {
        return Err(Error::Capacity(format!(
            "n * max|a_i| = {magnitude} exceeds {MAX_TOTAL_MAGNITUDE}"
        )));
    }
    Ok(())
}

/// A nonempty finite set of distinct integers, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntSet {
    elements: Vec<i64>,
}

impl IntSet {
    /// Builds a set from the given elements, sorting them. Duplicates are
    /// rejected, not merged.
    pub fn new(mut elements: Vec<i64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptyInput);
        }
        elements.sort_unstable();
        for pair in elements.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateElement(pair[0]));
            }
        }
        check_capacity(elements.len(), &elements)?;
        Ok(Self { elements })
    }

    /// The interval `{lo, lo+1, ..., hi}`.
    pub fn interval(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::EmptyInput);
        }
        Self::new((lo..=hi).collect())
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    /// Number of elements.
    pub fn k(&self) -> usize {
        self.elements.len()
    }

    /// Sum of all elements.
    pub fn total(&self) -> i64 {
        self.elements.iter().sum()
    }

    pub fn regime(&self) -> Regime {
        regime_of(self.elements[0], self.elements.len())
    }

    /// The dilate `d * A = {d a : a in A}`, `d >= 1`.
    pub fn dilate(&self, d: i64) -> Result<Self> {
        assert!(d >= 1, "dilation factor must be positive");
        Self::new(self.elements.iter().map(|&a| a * d).collect())
    }
}

/// A finite sequence with `k` distinct terms and per-term repetition counts:
/// term `i` occurs `reps[i]` times, total length `n = sum(reps)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiSeq {
    terms: Vec<i64>,
    reps: Vec<usize>,
}

impl MultiSeq {
    /// Builds a sequence from paired term/repetition lists. Pairs are sorted
    /// by term; duplicate terms are rejected.
    pub fn new(terms: Vec<i64>, reps: Vec<usize>) -> Result<Self> {
        if terms.len() != reps.len() {
            return Err(Error::LengthMismatch {
                terms: terms.len(),
                reps: reps.len(),
            });
        }
        if terms.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(index) = reps.iter().position(|&r| r == 0) {
            return Err(Error::ZeroRepetition { index });
        }
        let mut pairs: Vec<(i64, usize)> = terms.into_iter().zip(reps).collect();
        pairs.sort_unstable();
        for pair in pairs.windows(2) {
            if pair[0].0 == pair[1].0 {
                return Err(Error::DuplicateElement(pair[0].0));
            }
        }
        let (terms, reps): (Vec<i64>, Vec<usize>) = pairs.into_iter().unzip();
        let n: usize = reps.iter().sum();
        check_capacity(n, &terms)?;
        Ok(Self { terms, reps })
    }

    /// Builds a sequence from a raw multiset literal, e.g. `[3, 1, 3, 3]`
    /// canonicalizes to terms `(1, 3)` with reps `(1, 3)`.
    pub fn from_multiset(values: &[i64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut sorted = values.to_vec();
        sorted.sort_unstable();
        let mut terms = Vec::new();
        let mut reps = Vec::new();
        for v in sorted {
            if terms.last() == Some(&v) {
                *reps.last_mut().unwrap() += 1;
            } else {
                terms.push(v);
                reps.push(1);
            }
        }
        Self::new(terms, reps)
    }

    /// Views a set as the sequence where every element occurs once.
    pub fn from_set(set: &IntSet) -> Self {
        Self {
            terms: set.elements().to_vec(),
            reps: vec![1; set.k()],
        }
    }

    /// The sequence interval `[lo, hi]` carrying the given repetitions.
    pub fn interval(lo: i64, hi: i64, reps: Vec<usize>) -> Result<Self> {
        Self::new((lo..=hi).collect(), reps)
    }

    pub fn terms(&self) -> &[i64] {
        &self.terms
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    /// Number of distinct terms.
    pub fn k(&self) -> usize {
        self.terms.len()
    }

    /// Total length, counting repetitions.
    pub fn n(&self) -> usize {
        self.reps.iter().sum()
    }

    /// Sum of all terms with multiplicity.
    pub fn total(&self) -> i64 {
        self.terms
            .iter()
            .zip(&self.reps)
            .map(|(&t, &r)| t * r as i64)
            .sum()
    }

    pub fn regime(&self) -> Regime {
        regime_of(self.terms[0], self.terms.len())
    }

    pub fn dilate(&self, d: i64) -> Result<Self> {
        assert!(d >= 1, "dilation factor must be positive");
        Self::new(
            self.terms.iter().map(|&a| a * d).collect(),
            self.reps.clone(),
        )
    }
}

/// Whether an operation ran on a set or a multiset sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObjectKind {
    Set,
    Sequence,
}

impl std::fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ObjectKind::Set => "set",
            ObjectKind::Sequence => "sequence",
        })
    }
}

/// Either input object, for operations defined on both.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SumInput {
    Set(IntSet),
    Seq(MultiSeq),
}

impl SumInput {
    /// Distinct values, increasing.
    pub fn values(&self) -> &[i64] {
        match self {
            SumInput::Set(s) => s.elements(),
            SumInput::Seq(s) => s.terms(),
        }
    }

    /// Number of distinct values.
    pub fn k(&self) -> usize {
        self.values().len()
    }

    /// Total length with multiplicity (equals `k` for sets).
    pub fn n(&self) -> usize {
        match self {
            SumInput::Set(s) => s.k(),
            SumInput::Seq(s) => s.n(),
        }
    }

    pub fn total(&self) -> i64 {
        match self {
            SumInput::Set(s) => s.total(),
            SumInput::Seq(s) => s.total(),
        }
    }

    pub fn regime(&self) -> Regime {
        match self {
            SumInput::Set(s) => s.regime(),
            SumInput::Seq(s) => s.regime(),
        }
    }

    pub fn is_sequence(&self) -> bool {
        matches!(self, SumInput::Seq(_))
    }

    pub fn object_kind(&self) -> ObjectKind {
        match self {
            SumInput::Set(_) => ObjectKind::Set,
            SumInput::Seq(_) => ObjectKind::Sequence,
        }
    }
}

impl From<IntSet> for SumInput {
    fn from(set: IntSet) -> Self {
        SumInput::Set(set)
    }
}

impl From<MultiSeq> for SumInput {
    fn from(seq: MultiSeq) -> Self {
        SumInput::Seq(seq)
    }
}
