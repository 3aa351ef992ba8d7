//! Frobenius numbers as the largest `t` with `p_A(t) = 0`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactmath::DenominatorSet;

pub const DEFAULT_SCAN_LIMIT: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusResult {
    pub a: DenominatorSet,
    /// Largest non-representable `t`, or `-1` when there is none.
    pub value: i128,
    /// Every non-representable `t`, ascending.
    pub witness_gap: Vec<u64>,
}

pub fn frobenius_number(a: &DenominatorSet) -> Result<FrobeniusResult> {
    frobenius_number_with_limit(a, DEFAULT_SCAN_LIMIT)
}

/// Scans `t = 0, 1, 2, ...` and stops after `min(A)` consecutive
/// representable values; past that point adding `min(A)` keeps every value
/// representable.
///
/// `p_A(t) > 0` is tracked as a reachability bit rather than a full count.
pub fn frobenius_number_with_limit(a: &DenominatorSet, scan_limit: u64) -> Result<FrobeniusResult> {
    let gcd = a.gcd();
    if gcd != 1 {
        return Err(Error::FrobeniusUndefined { gcd });
    }
    let mut coins: Vec<usize> = a
        .elements()
        .iter()
        .filter_map(|&x| usize::try_from(x).ok())
        .collect();
    coins.sort_unstable();
    coins.dedup();
    let run_needed = coins[0];

    let mut reachable: Vec<bool> = Vec::new();
    let mut gaps = Vec::new();
    let mut run = 0usize;
    let mut t = 0usize;
    while run < run_needed {
        if t as u64 >= scan_limit {
            return Err(Error::ScanLimit { limit: scan_limit });
        }
        let ok = t == 0 || coins.iter().take_while(|&&c| c <= t).any(|&c| reachable[t - c]);
        reachable.push(ok);
        if ok {
            run += 1;
        } else {
            run = 0;
            gaps.push(t as u64);
        }
        t += 1;
    }
    Ok(FrobeniusResult {
        a: a.clone(),
        value: gaps.last().map_or(-1, |&g| g as i128),
        witness_gap: gaps,
    })
}

/// `(a1 - 1)(a2 - 1) - 1` for a coprime pair.
pub fn frobenius_two(a1: u64, a2: u64) -> Result<i128> {
    let gcd = a1.gcd(&a2);
    if a1 == 0 || a2 == 0 || gcd != 1 {
        return Err(Error::FrobeniusUndefined { gcd });
    }
    Ok((a1 as i128 - 1) * (a2 as i128 - 1) - 1)
}
