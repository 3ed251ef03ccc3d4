//! Closed-form lower bounds on `|Sigma_alpha|` for the positive and
//! with-zero regimes, and the m-index that the sequence formulas pivot on.
//!
//! All arithmetic is exact integer arithmetic; every halved product is even
//! by construction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::input::{ObjectKind, Regime, SumInput};
use crate::sumset::{self, Variant};

/// The position of `alpha` among the repetition prefix sums: the unique
/// `m` with `sum(reps[..m-1]) <= alpha < sum(reps[..m])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphaIndex {
    /// 1-based term index.
    pub m: usize,
    /// `sum(reps[..m-1])`.
    pub prefix_below: usize,
    /// `sum(reps[..m])`.
    pub prefix_at: usize,
    /// True iff `alpha == prefix_below`.
    pub boundary: bool,
}

fn validate_reps(reps: &[usize]) -> Result<usize> {
    if reps.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(index) = reps.iter().position(|&r| r == 0) {
        return Err(Error::ZeroRepetition { index });
    }
    Ok(reps.iter().sum())
}

/// Locates `alpha` among the prefix sums of `reps`. Requires
/// `alpha < sum(reps)`; the full-length case has no m-index (the sum set is
/// a singleton there).
pub fn m_index(reps: &[usize], alpha: usize) -> Result<AlphaIndex> {
    let n = validate_reps(reps)?;
    if alpha >= n {
        return Err(Error::AlphaRange { alpha, max: n - 1 });
    }
    let mut below = 0usize;
    for (i, &r) in reps.iter().enumerate() {
        if alpha < below + r {
            return Ok(AlphaIndex {
                m: i + 1,
                prefix_below: below,
                prefix_at: below + r,
                boundary: alpha == below,
            });
        }
        below += r;
    }
    unreachable!("alpha < n guarantees a prefix window");
}

fn to_u64(value: u128) -> Result<u64> {
    u64::try_from(value).map_err(|_| Error::Capacity(format!("bound value {value} overflows u64")))
}

fn tri(x: u128) -> u128 {
    x * (x + 1) / 2
}

/// Minimum `|Sigma_alpha(A)|` over sets of `k` positive integers:
/// `k(k+1)/2 - alpha(alpha+1)/2 + 1`.
pub fn lower_bound_set_positive(k: usize, alpha: usize) -> Result<u64> {
    if k < 1 {
        return Err(Error::EmptyInput);
    }
    if alpha > k {
        return Err(Error::AlphaRange { alpha, max: k });
    }
    to_u64(tri(k as u128) - tri(alpha as u128) + 1)
}

/// Minimum `|Sigma_alpha(A)|` over sets of `k >= 2` nonnegative integers
/// containing 0: `(k-1)k/2 - (alpha-1)alpha/2 + 1`.
pub fn lower_bound_set_with_zero(k: usize, alpha: usize) -> Result<u64> {
    if k < 2 {
        return Err(Error::TooFewElements {
            what: "with-zero set bound",
            k,
            min: 2,
        });
    }
    if alpha > k {
        return Err(Error::AlphaRange { alpha, max: k });
    }
    let lo = if alpha == 0 {
        0
    } else {
        tri(alpha as u128 - 1)
    };
    to_u64(tri(k as u128 - 1) - lo + 1)
}

/// Minimum `|Sigma_alpha|` over sequences of `k` distinct positive terms
/// with repetitions `reps`:
/// `sum(i r_i) - sum_{i<=m}(i r_i) + m (sum_{i<=m} r_i - alpha) + 1`.
pub fn lower_bound_seq_positive(reps: &[usize], alpha: usize) -> Result<u64> {
    let index = m_index(reps, alpha)?;
    let weighted_tail: u128 = reps
        .iter()
        .enumerate()
        .skip(index.m)
        .map(|(i, &r)| (i as u128 + 1) * r as u128)
        .sum();
    to_u64(weighted_tail + index.m as u128 * (index.prefix_at - alpha) as u128 + 1)
}

/// With-zero analogue of [`lower_bound_seq_positive`], with `(i-1)` weights
/// and an `(m-1)` multiplier.
pub fn lower_bound_seq_with_zero(reps: &[usize], alpha: usize) -> Result<u64> {
    if reps.len() < 2 {
        return Err(Error::TooFewElements {
            what: "with-zero sequence bound",
            k: reps.len(),
            min: 2,
        });
    }
    let index = m_index(reps, alpha)?;
    let weighted_tail: u128 = reps
        .iter()
        .enumerate()
        .skip(index.m)
        .map(|(i, &r)| i as u128 * r as u128)
        .sum();
    to_u64(weighted_tail + (index.m as u128 - 1) * (index.prefix_at - alpha) as u128 + 1)
}

fn uniform_m(rep: usize, alpha: usize) -> usize {
    alpha / rep + 1
}

/// Uniform-repetition specialization (every term repeated `rep` times),
/// positive terms: `rep [k(k+1)/2 - m(m+1)/2] + m (m rep - alpha) + 1`.
pub fn lower_bound_seq_uniform_positive(k: usize, rep: usize, alpha: usize) -> Result<u64> {
    check_uniform(k, rep, alpha)?;
    let m = uniform_m(rep, alpha) as u128;
    to_u64(rep as u128 * (tri(k as u128) - tri(m)) + m * (m * rep as u128 - alpha as u128) + 1)
}

/// Uniform-repetition specialization, with-zero terms:
/// `rep [(k-1)k/2 - (m-1)m/2] + (m-1)(m rep - alpha) + 1`.
pub fn lower_bound_seq_uniform_with_zero(k: usize, rep: usize, alpha: usize) -> Result<u64> {
    check_uniform(k, rep, alpha)?;
    let m = uniform_m(rep, alpha) as u128;
    to_u64(
        rep as u128 * (tri(k as u128 - 1) - tri(m - 1))
            + (m - 1) * (m * rep as u128 - alpha as u128)
            + 1,
    )
}

fn check_uniform(k: usize, rep: usize, alpha: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::TooFewElements {
            what: "uniform-repetition bound",
            k,
            min: 2,
        });
    }
    if rep == 0 {
        return Err(Error::ZeroRepetition { index: 0 });
    }
    if alpha >= rep * k {
        return Err(Error::AlphaRange {
            alpha,
            max: rep * k - 1,
        });
    }
    Ok(())
}

/// Minimum `|Sigma(A)|` (no size restriction) over sets of `k >= 2`
/// positive integers: `k(k+1)/2 + 1`.
pub fn lower_bound_all_subsets_positive(k: usize) -> Result<u64> {
    if k < 2 {
        return Err(Error::TooFewElements {
            what: "unrestricted subset-sum bound",
            k,
            min: 2,
        });
    }
    to_u64(tri(k as u128) + 1)
}

/// With-zero analogue of [`lower_bound_all_subsets_positive`]:
/// `(k-1)k/2 + 1`.
pub fn lower_bound_all_subsets_with_zero(k: usize) -> Result<u64> {
    if k < 2 {
        return Err(Error::TooFewElements {
            what: "unrestricted subset-sum bound",
            k,
            min: 2,
        });
    }
    to_u64(tri(k as u128 - 1) + 1)
}

/// Minimum `|Sigma|` over uniform sequences of `k >= 2` distinct positive
/// terms: `rep * k(k+1)/2 + 1`.
pub fn lower_bound_all_subseqs_positive(k: usize, rep: usize) -> Result<u64> {
    if k < 2 {
        return Err(Error::TooFewElements {
            what: "unrestricted subsequence-sum bound",
            k,
            min: 2,
        });
    }
    if rep == 0 {
        return Err(Error::ZeroRepetition { index: 0 });
    }
    to_u64(rep as u128 * tri(k as u128) + 1)
}

/// With-zero analogue of [`lower_bound_all_subseqs_positive`]:
/// `rep * (k-1)k/2 + 1`.
pub fn lower_bound_all_subseqs_with_zero(k: usize, rep: usize) -> Result<u64> {
    if k < 2 {
        return Err(Error::TooFewElements {
            what: "unrestricted subsequence-sum bound",
            k,
            min: 2,
        });
    }
    if rep == 0 {
        return Err(Error::ZeroRepetition { index: 0 });
    }
    to_u64(rep as u128 * tri(k as u128 - 1) + 1)
}

/// One bound evaluation: which formula applied, its value, and (when
/// computed) the cardinality actually achieved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub regime: Regime,
    pub object: ObjectKind,
    /// Number of distinct elements / terms.
    pub k: usize,
    pub alpha: usize,
    /// m-index; present for sequences with `alpha < n`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub bound: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub achieved: Option<u64>,
    /// `Some(true)` iff the bound is attained; `None` when not evaluated.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extremal: Option<bool>,
}

/// Evaluates the applicable lower bound for `input` at `alpha`, without
/// computing the sum set. Mixed-sign inputs are rejected: the theorems
/// cover only the positive and with-zero regimes.
pub fn bound_for(input: &SumInput, alpha: usize) -> Result<BoundReport> {
    let regime = input.regime();
    if regime == Regime::General {
        return Err(Error::UnsupportedRegime(regime));
    }
    let k = input.k();
    let n = input.n();
    if alpha > n {
        return Err(Error::AlphaRange { alpha, max: n });
    }
    let (bound, m) = match input {
        SumInput::Set(_) => {
            let bound = match regime {
                Regime::Positive => lower_bound_set_positive(k, alpha)?,
                Regime::WithZero => lower_bound_set_with_zero(k, alpha)?,
                Regime::General => unreachable!(),
            };
            (bound, None)
        }
        SumInput::Seq(seq) => {
            if alpha == n {
                // Only the full sequence qualifies; the sum set is a singleton.
                (1, None)
            } else {
                let bound = match regime {
                    Regime::Positive => lower_bound_seq_positive(seq.reps(), alpha)?,
                    Regime::WithZero => lower_bound_seq_with_zero(seq.reps(), alpha)?,
                    Regime::General => unreachable!(),
                };
                (bound, Some(m_index(seq.reps(), alpha)?.m))
            }
        }
    };
    Ok(BoundReport {
        regime,
        object: input.object_kind(),
        k,
        alpha,
        m,
        bound,
        achieved: None,
        extremal: None,
    })
}

/// [`bound_for`] plus the achieved cardinality `|Sigma_alpha(input)|` and
/// the extremality verdict.
pub fn bound_for_computed(input: &SumInput, alpha: usize) -> Result<BoundReport> {
    let mut report = bound_for(input, alpha)?;
    let achieved = sumset::sums(input, alpha, Variant::AtLeast)?.len() as u64;
    report.achieved = Some(achieved);
    report.extremal = Some(achieved == report.bound);
    Ok(report)
}
