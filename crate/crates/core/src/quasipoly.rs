//! `p_A` as a quasi-polynomial: one polynomial constituent per residue
//! class modulo `L = lcm(A)`, recovered by exact Lagrange interpolation of
//! DP counts, and the remainder `Q_A = p_A - P_A`.

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::denumerant::count_range;
use crate::error::{Error, Result};
use crate::exactmath::{DenominatorSet, ExactRational, RationalPolynomial};
use crate::polypart::{polypart, Method};

/// Largest `L * (n + 2)` accepted without an explicit override.
pub const DEFAULT_SAMPLE_LIMIT: u128 = 10_000_000;

/// `p_A(t) = constituents[t mod L](t)` for every `t >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: u64,
    constituents: Vec<RationalPolynomial>,
    a: DenominatorSet,
}

impl QuasiPolynomial {
    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn constituents(&self) -> &[RationalPolynomial] {
        &self.constituents
    }

    pub fn constituent(&self, residue: u64) -> &RationalPolynomial {
        &self.constituents[residue as usize]
    }

    pub fn denominators(&self) -> &DenominatorSet {
        &self.a
    }

    pub fn eval(&self, t: u64) -> ExactRational {
        self.constituent(t % self.period).eval(&BigInt::from(t))
    }

    /// Largest constituent degree; `None` when every constituent is zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.constituents.iter().filter_map(RationalPolynomial::degree).max()
    }

    /// Subtracts the same polynomial from every constituent.
    pub fn minus_polynomial(&self, p: &RationalPolynomial) -> QuasiPolynomial {
        QuasiPolynomial {
            period: self.period,
            constituents: self.constituents.iter().map(|c| c - p).collect(),
            a: self.a.clone(),
        }
    }
}

#[derive(Serialize)]
struct QuasiJson<'a> {
    a: &'a [u64],
    period: u64,
    constituents: Vec<&'a [ExactRational]>,
}

impl Serialize for QuasiPolynomial {
    /// `{"a": [...], "period": L, "constituents": [["num/den", ...], ...]}`
    /// with each constituent's coefficients ascending by power.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuasiJson {
            a: self.a.elements(),
            period: self.period,
            constituents: self.constituents.iter().map(|c| c.coefficients()).collect(),
        }
        .serialize(s)
    }
}

/// `Q_A = p_A - P_A`, kept constituent-wise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPart {
    pub values: QuasiPolynomial,
    pub polynomial_part: RationalPolynomial,
}

impl QPart {
    pub fn constituents(&self) -> &[RationalPolynomial] {
        self.values.constituents()
    }
}

pub fn period(a: &DenominatorSet) -> Result<u64> {
    a.lcm().ok_or(Error::PeriodOverflow)
}

/// Unique polynomial of degree `< points.len()` through the given points.
/// The `x` values must be distinct.
pub fn lagrange_interpolate(points: &[(ExactRational, ExactRational)]) -> RationalPolynomial {
    let mut result = RationalPolynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = RationalPolynomial::constant(1);
        let mut denom = ExactRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &RationalPolynomial::linear_root(xj.clone());
                denom *= &(xi - xj);
            }
        }
        result = &result + &basis.scale(&(yi / denom));
    }
    result
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InterpolationOptions {
    /// `None` disables the cost guard.
    pub sample_limit: Option<u128>,
}

impl Default for InterpolationOptions {
    fn default() -> Self {
        Self {
            sample_limit: Some(DEFAULT_SAMPLE_LIMIT),
        }
    }
}

pub fn interpolate_quasipolynomial(a: &DenominatorSet) -> Result<QuasiPolynomial> {
    interpolate_quasipolynomial_with(a, InterpolationOptions::default())
}

/// For each residue `r`, interpolates through `t = r, r+L, ..., r+(n-1)L`
/// and then confirms the result at `r+nL` and `r+(n+1)L`.
pub fn interpolate_quasipolynomial_with(
    a: &DenominatorSet,
    options: InterpolationOptions,
) -> Result<QuasiPolynomial> {
    let l = period(a)?;
    let n = a.len() as u64;
    let samples = l as u128 * (n as u128 + 2);
    if let Some(limit) = options.sample_limit {
        if samples > limit {
            return Err(Error::CostLimit { samples, limit });
        }
    }
    let t_max = usize::try_from(samples - 1).map_err(|_| Error::CostLimit {
        samples,
        limit: usize::MAX as u128,
    })?;
    let table = count_range(a, t_max);
    let value = |t: u64| ExactRational::from(BigInt::from(table.get(t as usize).clone()));

    let mut constituents = Vec::with_capacity(l as usize);
    for r in 0..l {
        let points: Vec<_> = (0..n)
            .map(|j| {
                let t = r + j * l;
                (ExactRational::from(t), value(t))
            })
            .collect();
        let poly = lagrange_interpolate(&points);
        for j in [n, n + 1] {
            let t = r + j * l;
            if poly.eval(&BigInt::from(t)) != value(t) {
                return Err(Error::InterpolationMismatch { residue: r, t });
            }
        }
        constituents.push(poly);
    }
    Ok(QuasiPolynomial {
        period: l,
        constituents,
        a: a.clone(),
    })
}

pub fn q_part(a: &DenominatorSet) -> Result<QPart> {
    q_part_with(a, InterpolationOptions::default())
}

pub fn q_part_with(a: &DenominatorSet, options: InterpolationOptions) -> Result<QPart> {
    let quasi = interpolate_quasipolynomial_with(a, options)?;
    let p = polypart(a, Method::SeriesConstantTerm).poly;
    Ok(QPart {
        values: quasi.minus_polynomial(&p),
        polynomial_part: p,
    })
}

/// Witness for the mean-zero property of `Q_A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AverageZeroReport {
    /// Constant term of each constituent, by residue.
    pub constants: Vec<ExactRational>,
    pub all_constant: bool,
    pub sum: ExactRational,
}

impl AverageZeroReport {
    pub fn holds(&self) -> bool {
        self.all_constant && self.sum.is_zero()
    }

    pub fn mean(&self) -> ExactRational {
        &self.sum / ExactRational::from(self.constants.len())
    }
}

/// For pairwise coprime `A`: every `Q_A` constituent is constant and the
/// constants sum to zero over one period.
pub fn average_zero_check(a: &DenominatorSet) -> Result<AverageZeroReport> {
    average_zero_check_with(a, InterpolationOptions::default())
}

pub fn average_zero_check_with(
    a: &DenominatorSet,
    options: InterpolationOptions,
) -> Result<AverageZeroReport> {
    if !a.is_pairwise_coprime() {
        return Err(Error::NotPairwiseCoprime);
    }
    Ok(average_zero_report(&q_part_with(a, options)?))
}

pub fn average_zero_report(q: &QPart) -> AverageZeroReport {
    let constituents = q.constituents();
    let all_constant = constituents.iter().all(|c| c.degree().unwrap_or(0) == 0);
    let constants: Vec<_> = constituents.iter().map(|c| c.coefficient(0)).collect();
    let sum = constants.iter().sum();
    AverageZeroReport {
        constants,
        all_constant,
        sum,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeDropReport {
    /// `n - 2`, or `None` for `n = 1` where `Q_A` must vanish.
    pub bound: Option<usize>,
    /// Largest constituent degree of `Q_A`; `None` when `Q_A` is zero.
    pub max_degree: Option<usize>,
}

impl DegreeDropReport {
    pub fn holds(&self) -> bool {
        match (self.max_degree, self.bound) {
            (None, _) => true,
            (Some(d), Some(b)) => d <= b,
            (Some(_), None) => false,
        }
    }
}

/// For `gcd(A) = 1`: every `Q_A` constituent has degree at most `n - 2`.
pub fn degree_drop_check(a: &DenominatorSet) -> Result<DegreeDropReport> {
    degree_drop_check_with(a, InterpolationOptions::default())
}

pub fn degree_drop_check_with(
    a: &DenominatorSet,
    options: InterpolationOptions,
) -> Result<DegreeDropReport> {
    let gcd = a.gcd();
    if gcd != 1 {
        return Err(Error::GcdNotOne { gcd });
    }
    Ok(degree_drop_report(&q_part_with(a, options)?))
}

pub fn degree_drop_report(q: &QPart) -> DegreeDropReport {
    DegreeDropReport {
        bound: q.values.denominators().len().checked_sub(2),
        max_degree: q.values.max_degree(),
    }
}

/// Reconstructs counts for `t = 0..=t_max` from the quasi-polynomial.
pub fn reconstruct_counts(quasi: &QuasiPolynomial, t_max: u64) -> Vec<ExactRational> {
    (0..=t_max).map(|t| quasi.eval(t)).collect()
}

/// True when `reconstruct_counts` agrees with the DP for all `t <= t_max`.
pub fn matches_counts(quasi: &QuasiPolynomial, t_max: u64) -> bool {
    let table = count_range(quasi.denominators(), t_max as usize);
    table
        .counts
        .iter()
        .zip(0u64..)
        .all(|(c, t): (&BigUint, u64)| quasi.eval(t) == ExactRational::from(BigInt::from(c.clone())))
}
