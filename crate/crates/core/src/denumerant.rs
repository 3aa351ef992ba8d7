//! Exact counts `p_A(t)` of representations `t = m_1 a_1 + ... + m_n a_n`
//! with `m_j >= 0`.
//!
//! [`count_range`] is the working oracle (coin-change DP).
//! [`gf_coefficients_oracle`] computes the same numbers a second way, by
//! multiplying out truncated geometric series, so the two can check each
//! other. Both are linear in `t_max` in memory; `t` is limited to `usize`.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::exactmath::DenominatorSet;

/// `counts[t] = p_A(t)` for `t = 0..=t_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTable {
    #[serde(serialize_with = "serialize_set")]
    pub a: DenominatorSet,
    #[serde(serialize_with = "serialize_counts")]
    pub counts: Vec<BigUint>,
}

fn serialize_set<S: serde::Serializer>(a: &DenominatorSet, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(a.elements())
}

fn serialize_counts<S: serde::Serializer>(c: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(c.iter().map(|x| x.to_string()))
}

impl CountTable {
    pub fn t_max(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn get(&self, t: usize) -> &BigUint {
        &self.counts[t]
    }
}

/// One DP pass: for each coin, `dp[s] += dp[s - a]` with `s` ascending.
pub fn count_range(a: &DenominatorSet, t_max: usize) -> CountTable {
    let mut dp = vec![BigUint::zero(); t_max + 1];
    dp[0] = BigUint::from(1u32);
    for &coin in a.elements() {
        let Ok(coin) = usize::try_from(coin) else { continue };
        for s in coin..=t_max {
            let (lo, hi) = dp.split_at_mut(s);
            hi[0] += &lo[s - coin];
        }
    }
    CountTable {
        a: a.clone(),
        counts: dp,
    }
}

pub fn count(a: &DenominatorSet, t: usize) -> BigUint {
    count_range(a, t).counts.swap_remove(t)
}

/// Coefficients of `prod_i (1 + z^a_i + z^(2 a_i) + ...)` through `z^t_max`,
/// by full truncated polynomial multiplication.
pub fn gf_coefficients_oracle(a: &DenominatorSet, t_max: usize) -> CountTable {
    let mut acc = vec![BigUint::zero(); t_max + 1];
    acc[0] = BigUint::from(1u32);
    for &coin in a.elements() {
        let geometric: Vec<usize> = match usize::try_from(coin) {
            Ok(c) if c <= t_max => (0..=t_max).step_by(c).collect(),
            _ => vec![0],
        };
        let mut next = vec![BigUint::zero(); t_max + 1];
        for (i, x) in acc.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for &e in geometric.iter().take_while(|&&e| i + e <= t_max) {
                next[i + e] += x;
            }
        }
        acc = next;
    }
    CountTable {
        a: a.clone(),
        counts: acc,
    }
}
