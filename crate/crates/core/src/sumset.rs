//! Restricted sum sets and the operations that produce them.

use serde::{Deserialize, Serialize};

use crate::dp::ReachTable;
use crate::error::{Error, Result};
use crate::input::{IntSet, MultiSeq, SumInput};

/// Which side of the size restriction a sum set was computed under.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Subsets of size (subsequences of length) at least `alpha`.
    AtLeast,
    /// Subsets of size at most `k - alpha` (length at most `n - alpha`).
    AtMost,
}

impl Variant {
    pub fn toggled(self) -> Self {
        match self {
            Variant::AtLeast => Variant::AtMost,
            Variant::AtMost => Variant::AtLeast,
        }
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Variant::AtLeast => "at-least",
            Variant::AtMost => "at-most",
        })
    }
}

/// A computed restricted sum set: sorted distinct sums plus the provenance
/// needed to reflect or re-derive it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumSet {
    values: Vec<i64>,
    variant: Variant,
    alpha: usize,
    source_total: i64,
}

impl SumSet {
    pub(crate) fn from_sorted(
        values: Vec<i64>,
        variant: Variant,
        alpha: usize,
        source_total: i64,
    ) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(!values.is_empty());
        Self {
            values,
            variant,
            alpha,
            source_total,
        }
    }

    /// Sorted, strictly increasing sums.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// `s(A)` / `s('A')`: the sum of every element of the source object.
    pub fn source_total(&self) -> i64 {
        self.source_total
    }

    /// Cardinality of the sum set.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, value: i64) -> bool {
        self.values.binary_search(&value).is_ok()
    }
}

fn check_alpha(alpha: usize, max: usize) -> Result<()> {
    if alpha > max {
        return Err(Error::AlphaRange { alpha, max });
    }
    Ok(())
}

fn from_table(table: &ReachTable, variant: Variant, alpha: usize, source_total: i64) -> SumSet {
    let n = table.n();
    let values = match variant {
        Variant::AtLeast => table.sums_in(alpha, n),
        Variant::AtMost => table.sums_in(0, n - alpha),
    };
    SumSet::from_sorted(values, variant, alpha, source_total)
}

/// `{ s(B) : B subset of A, |B| >= alpha }`.
pub fn subset_sums_at_least(set: &IntSet, alpha: usize) -> Result<SumSet> {
    check_alpha(alpha, set.k())?;
    let table = ReachTable::build(set.elements(), &vec![1; set.k()])?;
    Ok(from_table(&table, Variant::AtLeast, alpha, set.total()))
}

/// `{ s(B) : B subset of A, |B| <= k - alpha }`.
pub fn subset_sums_at_most(set: &IntSet, alpha: usize) -> Result<SumSet> {
    check_alpha(alpha, set.k())?;
    let table = ReachTable::build(set.elements(), &vec![1; set.k()])?;
    Ok(from_table(&table, Variant::AtMost, alpha, set.total()))
}

/// Sums of subsequences of length at least `alpha`, i.e. over multiplicity
/// vectors `0 <= c_i <= r_i` with `sum(c_i) >= alpha`.
pub fn subseq_sums_at_least(seq: &MultiSeq, alpha: usize) -> Result<SumSet> {
    check_alpha(alpha, seq.n())?;
    let table = ReachTable::build(seq.terms(), seq.reps())?;
    Ok(from_table(&table, Variant::AtLeast, alpha, seq.total()))
}

/// Sums of subsequences of length at most `n - alpha`.
pub fn subseq_sums_at_most(seq: &MultiSeq, alpha: usize) -> Result<SumSet> {
    check_alpha(alpha, seq.n())?;
    let table = ReachTable::build(seq.terms(), seq.reps())?;
    Ok(from_table(&table, Variant::AtMost, alpha, seq.total()))
}

/// Dispatches to the set or sequence computation.
pub fn sums(input: &SumInput, alpha: usize, variant: Variant) -> Result<SumSet> {
    match (input, variant) {
        (SumInput::Set(s), Variant::AtLeast) => subset_sums_at_least(s, alpha),
        (SumInput::Set(s), Variant::AtMost) => subset_sums_at_most(s, alpha),
        (SumInput::Seq(s), Variant::AtLeast) => subseq_sums_at_least(s, alpha),
        (SumInput::Seq(s), Variant::AtMost) => subseq_sums_at_most(s, alpha),
    }
}

/// `|Sigma_alpha|` for every `alpha` at once; index `alpha` of the result
/// holds the at-least cardinality. Cheaper than materializing each sum set
/// when only counts are needed (verification sweeps).
pub fn at_least_cardinalities(input: &SumInput) -> Result<Vec<u64>> {
    let table = match input {
        SumInput::Set(s) => ReachTable::build(s.elements(), &vec![1; s.k()])?,
        SumInput::Seq(s) => ReachTable::build(s.terms(), s.reps())?,
    };
    Ok(table.at_least_cardinalities())
}

/// Reflects every sum through `total`: the image of `Sigma^alpha` is
/// `Sigma_alpha` and vice versa. An involution; `total` must match the
/// stored source total.
pub fn reflect(sums: &SumSet, total: i64) -> Result<SumSet> {
    if total != sums.source_total {
        return Err(Error::TotalMismatch {
            stored: sums.source_total,
            given: total,
        });
    }
    let values = sums.values.iter().rev().map(|&x| total - x).collect();
    Ok(SumSet::from_sorted(
        values,
        sums.variant.toggled(),
        sums.alpha,
        total,
    ))
}
