//! Parsing of comma-separated literals and alpha ranges. Errors name the
//! offending token.

/// Parses a comma-separated list of integers (optional sign allowed).
pub fn int_list(raw: &str, flag: &str) -> Result<Vec<i64>, String> {
    raw.split(',')
        .map(str::trim)
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| format!("invalid integer token '{tok}' in --{flag}"))
        })
        .collect()
}

/// Parses a comma-separated list of positive counts.
pub fn count_list(raw: &str, flag: &str) -> Result<Vec<usize>, String> {
    raw.split(',')
        .map(str::trim)
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| format!("invalid count token '{tok}' in --{flag}"))
        })
        .collect()
}

/// Parses an inclusive range `LO..HI` into the list `LO, LO+1, ..., HI`.
pub fn alpha_range(raw: &str) -> Result<Vec<usize>, String> {
    let (lo, hi) = raw
        .split_once("..")
        .ok_or_else(|| format!("invalid range '{raw}': expected LO..HI"))?;
    let lo: usize = lo
        .trim()
        .parse()
        .map_err(|_| format!("invalid range bound '{lo}' in '{raw}'"))?;
    let hi: usize = hi
        .trim()
        .parse()
        .map_err(|_| format!("invalid range bound '{hi}' in '{raw}'"))?;
    if lo > hi {
        return Err(format!("empty range '{raw}': {lo} > {hi}"));
    }
    Ok((lo..=hi).collect())
}
