//! The biplane existence pattern and its scan.
//!
//! For `n ≥ 2` the candidate biplane is `((n²+n+2)/2, n+1, 2)`. The pattern
//! predicts that it exists when
//!
//! * `n ≡ 1, 2 (mod 4)` and `n - 1` is a perfect square, or
//! * `n ≡ 0, 3 (mod 4)` and `n - 1` is a prime power.
//!
//! The predicate itself is uncapped. The original observation covers
//! `2 ≤ n ≤ 10` for the first branch and `3 ≤ n ≤ 12` for the second; callers
//! apply such caps, so scans can probe larger `n` and report BRC verdicts
//! without claiming existence.

use std::fmt;

use serde::Serialize;

use crate::catalog::known_biplanes;
use crate::numbertheory::{
    brc_check, is_perfect_square, is_prime_power, BrcVerdict, NumberTheoryError,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PatternError {
    #[error("need n >= 2, got {0}")]
    TooSmall(u64),
    #[error("(n^2 + n + 3)/3 is not an integer for n = {0} (need n = 0 or 2 mod 3)")]
    NotDivisible(u64),
    #[error("parameters overflow for n = {0}")]
    Overflow(u64),
    #[error(transparent)]
    NumberTheory(#[from] NumberTheoryError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    SquareBranch,
    PrimepowerBranch,
    None,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::SquareBranch => "square",
            Self::PrimepowerBranch => "prime-power",
            Self::None => "-",
        })
    }
}

pub fn biplane_pattern(n: u64) -> Result<(bool, Branch), PatternError> {
    if n < 2 {
        return Err(PatternError::TooSmall(n));
    }
    let m = n - 1;
    let branch = match n % 4 {
        1 | 2 if is_perfect_square(m as i64)? => Branch::SquareBranch,
        0 | 3 if is_prime_power(m)? => Branch::PrimepowerBranch,
        _ => Branch::None,
    };
    Ok((branch != Branch::None, branch))
}

/// `((n²+n+2)/2, n+1, 2)`.
pub fn biplane_params(n: u64) -> Result<(u64, u64, u64), PatternError> {
    if n < 2 {
        return Err(PatternError::TooSmall(n));
    }
    let top = n
        .checked_mul(n)
        .and_then(|sq| sq.checked_add(n + 2))
        .ok_or(PatternError::Overflow(n))?;
    Ok((top / 2, n + 1, 2))
}

/// `((n²+n+3)/3, n+1, 3)`, defined for `n ≡ 0, 2 (mod 3)`.
pub fn triplane_params(n: u64) -> Result<(u64, u64, u64), PatternError> {
    if n < 2 {
        return Err(PatternError::TooSmall(n));
    }
    let top = n
        .checked_mul(n)
        .and_then(|sq| sq.checked_add(n + 3))
        .ok_or(PatternError::Overflow(n))?;
    if top % 3 != 0 {
        return Err(PatternError::NotDivisible(n));
    }
    Ok((top / 3, n + 1, 3))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PatternRow {
    pub n: u64,
    pub pattern_holds: bool,
    pub branch: Branch,
    pub biplane_params: (u64, u64, u64),
    pub brc: BrcVerdict,
    /// Membership in the list of biplanes known to exist (seven entries).
    pub known_exists: bool,
}

pub fn pattern_row(n: u64) -> Result<PatternRow, PatternError> {
    let (pattern_holds, branch) = biplane_pattern(n)?;
    let params = biplane_params(n)?;
    let brc = brc_check(params.0, params.1, params.2)?;
    Ok(PatternRow {
        n,
        pattern_holds,
        branch,
        biplane_params: params,
        brc,
        known_exists: known_biplanes().contains(&params),
    })
}

/// One row per `n` in `2..=n_max`, sorted by `n`. Empty when `n_max < 2`.
pub fn pattern_scan(n_max: u64) -> Result<Vec<PatternRow>, PatternError> {
    (2..=n_max).map(pattern_row).collect()
}

/// Fixed-column table: n, pattern, branch, n', k', brc, known.
pub fn render_table(rows: &[PatternRow]) -> String {
    let mut out = format!(
        "{:>4}  {:<7}  {:<11}  {:>6}  {:>4}  {:<5}  {}\n",
        "n", "pattern", "branch", "n'", "k'", "brc", "known (as of the source list)"
    );
    for row in rows {
        out.push_str(&format!(
            "{:>4}  {:<7}  {:<11}  {:>6}  {:>4}  {:<5}  {}\n",
            row.n,
            row.pattern_holds,
            row.branch.to_string(),
            row.biplane_params.0,
            row.biplane_params.1,
            if row.brc.passes { "pass" } else { "fail" },
            row.known_exists
        ));
    }
    out
}
