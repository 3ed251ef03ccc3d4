//! Brute-force oracle: computes restricted sums by explicit enumeration.
//!
//! Deliberately naive and structurally independent of the bit-row tables, so
//! the two can check each other. Meant for tests and verification sweeps.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::input::SumInput;
use crate::sumset::{SumSet, Variant};

/// Default limit on enumerated subsets / multiplicity vectors.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;

/// Enumerates every subset (for sets) or multiplicity vector (for
/// sequences) and keeps the sums passing the size restriction.
pub fn brute_force_sums(input: &SumInput, alpha: usize, variant: Variant) -> Result<SumSet> {
    brute_force_sums_capped(input, alpha, variant, DEFAULT_ENUMERATION_CAP)
}

/// [`brute_force_sums`] with an explicit enumeration cap.
pub fn brute_force_sums_capped(
    input: &SumInput,
    alpha: usize,
    variant: Variant,
    cap: u64,
) -> Result<SumSet> {
    let n = input.n();
    if alpha > n {
        return Err(Error::AlphaRange { alpha, max: n });
    }
    let keep = |size: usize| match variant {
        Variant::AtLeast => size >= alpha,
        Variant::AtMost => size <= n - alpha,
    };

    let mut values = BTreeSet::new();
    match input {
        SumInput::Set(set) => {
            let k = set.k();
            let candidates = 1u128 << k.min(127);
            if candidates > cap as u128 {
                return Err(Error::CapExceeded { candidates, cap });
            }
            for mask in 0u64..(1u64 << k) {
                if keep(mask.count_ones() as usize) {
                    let sum = set
                        .elements()
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &a)| a)
                        .sum();
                    values.insert(sum);
                }
            }
        }
        SumInput::Seq(seq) => {
            let candidates: u128 = seq.reps().iter().map(|&r| r as u128 + 1).product();
            if candidates > cap as u128 {
                return Err(Error::CapExceeded { candidates, cap });
            }
            let mut counts = vec![0usize; seq.k()];
            loop {
                let length: usize = counts.iter().sum();
                if keep(length) {
                    let sum = counts
                        .iter()
                        .zip(seq.terms())
                        .map(|(&c, &t)| c as i64 * t)
                        .sum();
                    values.insert(sum);
                }
                // Odometer over 0..=r_i per position.
                let mut pos = 0;
                loop {
                    if pos == counts.len() {
                        return Ok(SumSet::from_sorted(
                            values.into_iter().collect(),
                            variant,
                            alpha,
                            input.total(),
                        ));
                    }
                    if counts[pos] < seq.reps()[pos] {
                        counts[pos] += 1;
                        break;
                    }
                    counts[pos] = 0;
                    pos += 1;
                }
            }
        }
    }
    Ok(SumSet::from_sorted(
        values.into_iter().collect(),
        variant,
        alpha,
        input.total(),
    ))
}
