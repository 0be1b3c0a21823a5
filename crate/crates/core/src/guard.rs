//! Size limits for exhaustive computations.
//!
//! Each limit can be raised (never lowered) by setting `HECKE_GUARD_OVERRIDE`
//! to an integer.

use thiserror::Error;

pub const GUARD_ENV: &str = "HECKE_GUARD_OVERRIDE";

/// Largest |U| for the literal N_mu membership test.
pub const DIRECT_TEST_MAX_U: u64 = 1_000_000;
/// Largest |U| for group-algebra computations.
pub const ORACLE_MAX_U: u64 = 4_096;
/// Largest |G| for group-algebra computations.
pub const ORACLE_MAX_G: u64 = 200_000;
/// Largest number of candidates a command-line enumeration may visit.
pub const ENUM_MAX: u64 = 2_000_000;
/// Bounds for the three-way dimension count.
pub const DIM_CHECK_MAX_N: usize = 5;
pub const DIM_CHECK_MAX_Q: u32 = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{what} = {size} exceeds the limit {limit} (set {GUARD_ENV} to raise it)")]
pub struct GuardExceeded {
    pub what: &'static str,
    pub size: u64,
    pub limit: u64,
}

/// The effective limit: `base`, or the override when that is larger.
pub fn limit(base: u64) -> u64 {
    std::env::var(GUARD_ENV).ok().and_then(|v| v.trim().parse::<u64>().ok()).map_or(base, |o| o.max(base))
}

pub fn check(what: &'static str, size: u64, base: u64) -> Result<(), GuardExceeded> {
    let limit = limit(base);
    if size > limit {
        return Err(GuardExceeded { what, size, limit });
    }
    Ok(())
}

/// `q^e`, saturating at `u64::MAX`.
pub fn saturating_pow(q: u64, e: u64) -> u64 {
    (0..e).fold(1u64, |acc, _| acc.saturating_mul(q))
}

/// |U| = q^{n(n-1)/2}.
pub fn unipotent_order(q: u32, n: usize) -> u64 {
    saturating_pow(q as u64, (n * n.saturating_sub(1) / 2) as u64)
}

/// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i).
pub fn gl_order(q: u32, n: usize) -> u64 {
    let qn = saturating_pow(q as u64, n as u64);
    (0..n as u64).fold(1u64, |acc, i| acc.saturating_mul(qn - saturating_pow(q as u64, i)))
}

/// |N| = n! (q-1)^n.
pub fn monomial_count(q: u32, n: usize) -> u64 {
    let factorial = (1..=n as u64).fold(1u64, |acc, k| acc.saturating_mul(k));
    factorial.saturating_mul(saturating_pow(q as u64 - 1, n as u64))
}
