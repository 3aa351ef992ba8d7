//! Bernoulli numbers and the series `B(z) = z/(e^z - 1)`.
//!
//! The convention here is fixed by that generating function, so
//! `B_1 = -1/2`. Tables using `B_1 = +1/2` (the `z e^z/(e^z - 1)`
//! convention) produce wrong polynomial parts and must not be mixed in.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::binomial;

use crate::error::{Error, Result};
use crate::exactmath::{ExactRational, TruncatedPowerSeries};

static CACHE: RwLock<Vec<ExactRational>> = RwLock::new(Vec::new());

/// `B_0, ..., B_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<ExactRational>,
}

impl BernoulliTable {
    pub fn values(&self) -> &[ExactRational] {
        &self.values
    }

    pub fn get(&self, j: usize) -> &ExactRational {
        &self.values[j]
    }

    /// Largest index held.
    pub fn upto(&self) -> usize {
        self.values.len() - 1
    }
}

/// Extends `values` in place using `sum_{j=0}^{m} binom(m+1, j) B_j = 0`.
fn extend_by_recurrence(values: &mut Vec<ExactRational>, upto: usize) {
    if values.is_empty() {
        values.push(ExactRational::one());
    }
    for m in values.len()..=upto {
        if m >= 3 && m % 2 == 1 {
            values.push(ExactRational::zero());
            continue;
        }
        let acc: ExactRational = values
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_zero())
            .map(|(j, b)| b * ExactRational::from(binomial(BigInt::from(m + 1), BigInt::from(j))))
            .sum();
        values.push(-acc / ExactRational::from(m + 1));
    }
}

/// `B_0..=B_K`, served from a process-wide cache that only ever grows.
pub fn bernoulli_table(upto: usize) -> BernoulliTable {
    {
        let cache = CACHE.read().unwrap_or_else(|e| e.into_inner());
        if cache.len() > upto {
            return BernoulliTable {
                values: cache[..=upto].to_vec(),
            };
        }
    }
    let mut cache = CACHE.write().unwrap_or_else(|e| e.into_inner());
    extend_by_recurrence(&mut cache, upto);
    BernoulliTable {
        values: cache[..=upto].to_vec(),
    }
}

/// `B_j` alone.
pub fn bernoulli_number(j: usize) -> ExactRational {
    bernoulli_table(j).values.swap_remove(j)
}

fn factorial(n: usize) -> ExactRational {
    (1..=n).map(ExactRational::from).product()
}

/// `z/(e^z - 1)` through `z^K`: coefficient `B_j / j!`.
pub fn bernoulli_series(order: usize) -> TruncatedPowerSeries {
    bernoulli_series_from(bernoulli_table(order).values())
}

/// Same as [`bernoulli_series`] but from caller-supplied `B_j` values; the
/// order is `values.len() - 1`.
pub fn bernoulli_series_from(values: &[ExactRational]) -> TruncatedPowerSeries {
    let mut fact = ExactRational::one();
    TruncatedPowerSeries::from_fn(values.len() - 1, |j| {
        if j > 0 {
            fact *= &ExactRational::from(j);
        }
        &values[j] / &fact
    })
}

/// `log(z/(e^z - 1))` through `z^K`: coefficient `(-1)^(j-1) B_j / (j * j!)`.
pub fn bernoulli_log_series(order: usize) -> Result<TruncatedPowerSeries> {
    if order == 0 {
        return Err(Error::EmptyLogSeries);
    }
    let table = bernoulli_table(order);
    Ok(TruncatedPowerSeries::from_fn(order, |j| {
        if j == 0 {
            return ExactRational::zero();
        }
        let c = table.get(j) / (factorial(j) * ExactRational::from(j));
        if j % 2 == 1 {
            c
        } else {
            -c
        }
    }))
}

/// `(e^z - 1)/z = sum z^j / (j+1)!` through `z^K`.
pub fn exp_quotient_series(order: usize) -> TruncatedPowerSeries {
    TruncatedPowerSeries::from_fn(order, |j| factorial(j + 1).recip())
}
