//! Cardinality-indexed reachability tables over packed bit rows.
//!
//! Row `c` marks every sum expressible by picking exactly `c` items from the
//! multiset inserted so far; bit `b` of a row stands for the sum
//! `min_sum + b`. Inserting an item ORs each row, shifted by the item's
//! value, into the row one cardinality higher. The whole table costs
//! `O(n^2 * range / 64)` word operations and is exact for any sign mix.

use crate::error::{Error, Result};

/// Upper limit on `(n + 1) * range` bits per table (1 GiB of bit cells).
/// Large-magnitude elements make the pseudo-polynomial table explode; callers
/// get a capacity error instead of an allocation stampede.
const BIT_BUDGET: u128 = 1 << 33;

pub(crate) struct ReachTable {
    min_sum: i64,
    words: usize,
    /// `rows[c]` = sums reachable with exactly `c` picks.
    rows: Vec<Vec<u64>>,
}

impl ReachTable {
    /// Builds the table for a multiset given as distinct terms with
    /// repetition counts (a plain set is all-ones `reps`).
    pub fn build(terms: &[i64], reps: &[usize]) -> Result<Self> {
        debug_assert_eq!(terms.len(), reps.len());
        let n: usize = reps.iter().sum();
        let min_sum: i64 = terms
            .iter()
            .zip(reps)
            .filter(|(&t, _)| t < 0)
            .map(|(&t, &r)| t * r as i64)
            .sum();
        let max_sum: i64 = terms
            .iter()
            .zip(reps)
            .filter(|(&t, _)| t > 0)
            .map(|(&t, &r)| t * r as i64)
            .sum();
        let range = (max_sum as i128 - min_sum as i128 + 1) as u128;
        if (n as u128 + 1) * range > BIT_BUDGET {
            return Err(Error::Capacity(format!(
                "reachability table needs {} bit cells (budget {BIT_BUDGET})",
                (n as u128 + 1) * range
            )));
        }
        let words = (range as usize).div_ceil(64);
        let mut rows = vec![vec![0u64; words]; n + 1];
        set_bit(&mut rows[0], (0 - min_sum) as usize);

        let mut inserted = 0usize;
        for (&term, &rep) in terms.iter().zip(reps) {
            for _ in 0..rep {
                // Descending so the item just inserted is not reused within
                // this insertion step.
                for c in (0..=inserted).rev() {
                    let (lo, hi) = rows.split_at_mut(c + 1);
                    or_shifted(&mut hi[0], &lo[c], term);
                }
                inserted += 1;
            }
        }
        Ok(Self {
            min_sum,
            words,
            rows,
        })
    }

    /// Number of items inserted (`n`).
    pub fn n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Sorted sums reachable with cardinality in `lo..=hi`.
    pub fn sums_in(&self, lo: usize, hi: usize) -> Vec<i64> {
        let mut acc = vec![0u64; self.words];
        for row in &self.rows[lo..=hi.min(self.n())] {
            for (a, w) in acc.iter_mut().zip(row) {
                *a |= w;
            }
        }
        let mut out = Vec::new();
        for (wi, &word) in acc.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(self.min_sum + (wi * 64 + b) as i64);
                bits &= bits - 1;
            }
        }
        out
    }

    /// `result[alpha]` = number of distinct sums over cardinalities
    /// `>= alpha`, for every `alpha` in `0..=n`, from one suffix-union pass.
    pub fn at_least_cardinalities(&self) -> Vec<u64> {
        let n = self.n();
        let mut acc = vec![0u64; self.words];
        let mut out = vec![0u64; n + 1];
        for alpha in (0..=n).rev() {
            for (a, w) in acc.iter_mut().zip(&self.rows[alpha]) {
                *a |= w;
            }
            out[alpha] = acc.iter().map(|w| w.count_ones() as u64).sum();
        }
        out
    }
}

fn set_bit(row: &mut [u64], bit: usize) {
    row[bit / 64] |= 1u64 << (bit % 64);
}

/// `dst |= src << shift` in bit-position space; `shift` may be negative.
fn or_shifted(dst: &mut [u64], src: &[u64], shift: i64) {
    let len = src.len();
    if shift >= 0 {
        let w = (shift / 64) as usize;
        let b = (shift % 64) as u32;
        for i in (w..len).rev() {
            let mut v = src[i - w] << b;
            if b > 0 && i > w {
                v |= src[i - w - 1] >> (64 - b);
            }
            dst[i] |= v;
        }
    } else {
        let s = -shift;
        let w = (s / 64) as usize;
        let b = (s % 64) as u32;
        for i in 0..len.saturating_sub(w) {
            let mut v = src[i + w] >> b;
            if b > 0 && i + w + 1 < len {
                v |= src[i + w + 1] << (64 - b);
            }
            dst[i] |= v;
        }
    }
}
