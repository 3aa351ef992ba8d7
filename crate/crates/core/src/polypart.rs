//! The polynomial part `P_A(t)` of the restricted partition function,
//! computed four independent ways.
//!
//! Three methods read the coefficient of `t^(n-1-m)` as
//! `(-1)^m / ((n-1-m)! a_1...a_n)` times `[z^m] B(a_1 z)...B(a_n z)`, and
//! differ only in how that coefficient is produced:
//!
//! - [`Method::Compositions`] expands the product over weak compositions of
//!   `m` into `n` parts;
//! - [`Method::PowerSums`] expands `exp(sum_j (-1)^(j-1) B_j s_j z^j/(j j!))`
//!   over partitions of `m`, with `s_j` the power sums of `A`;
//! - [`Method::SeriesConstantTerm`] multiplies truncated series directly.
//!
//! [`Method::PartialFractions`] uses no Bernoulli numbers at all: it expands
//! `U(z) = G(1 - z)` around `z = 0`, reads the principal-part coefficients
//! `c_l`, and sums `c_l * binom(t + l - 1, l - 1)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use serde::Serialize;

use crate::bernoulli::{bernoulli_series_from, bernoulli_table};
use crate::exactmath::{
    rising_binomial_poly, DenominatorSet, ExactRational, RationalPolynomial, TruncatedPowerSeries,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Compositions,
    PowerSums,
    #[serde(rename = "series")]
    SeriesConstantTerm,
    #[serde(rename = "pfrac")]
    PartialFractions,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Compositions,
        Method::PowerSums,
        Method::SeriesConstantTerm,
        Method::PartialFractions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Compositions => "compositions",
            Method::PowerSums => "powersums",
            Method::SeriesConstantTerm => "series",
            Method::PartialFractions => "pfrac",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialPartResult {
    pub poly: RationalPolynomial,
    pub method: Method,
    pub a: DenominatorSet,
}

/// `s_i = a_1^i + ... + a_n^i` for `i = 1..=m_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSums {
    sums: Vec<BigUint>,
}

impl PowerSums {
    /// `s_i`, for `1 <= i <= m_max`.
    pub fn get(&self, i: usize) -> &BigUint {
        assert!(i >= 1, "power sums start at s_1");
        &self.sums[i - 1]
    }

    pub fn m_max(&self) -> usize {
        self.sums.len()
    }

    pub fn as_slice(&self) -> &[BigUint] {
        &self.sums
    }
}

pub fn power_sums(a: &DenominatorSet, m_max: usize) -> PowerSums {
    let bases: Vec<BigUint> = a.elements().iter().map(|&x| BigUint::from(x)).collect();
    let mut powers = bases.clone();
    let mut sums = Vec::with_capacity(m_max);
    for i in 1..=m_max {
        if i > 1 {
            for (p, b) in powers.iter_mut().zip(&bases) {
                *p *= b;
            }
        }
        sums.push(powers.iter().sum());
    }
    PowerSums { sums }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn product_of(a: &DenominatorSet) -> BigInt {
    a.elements().iter().map(|&x| BigInt::from(x)).product()
}

/// Turns `w_m = [z^m] B(a_1 z)...B(a_n z)` for `m = 0..n-1` into `P_A(t)`.
fn assemble(a: &DenominatorSet, inner: &[ExactRational]) -> RationalPolynomial {
    let n = a.len();
    let prod = product_of(a);
    let mut coefficients = vec![ExactRational::zero(); n];
    for (m, w) in inner.iter().enumerate() {
        let denom = factorial(n - 1 - m) * &prod;
        let c = w / ExactRational::from(denom);
        coefficients[n - 1 - m] = if m % 2 == 0 { c } else { -c };
    }
    RationalPolynomial::from_coefficients(coefficients)
}

/// Bernoulli values through `B_(n-1)`, either the standard table or the
/// caller's override.
fn bernoulli_values(a: &DenominatorSet, table: Option<&[ExactRational]>) -> Vec<ExactRational> {
    let need = a.len();
    match table {
        Some(values) => {
            assert!(values.len() >= need, "need B_0..B_{} in the override table", need - 1);
            values[..need].to_vec()
        }
        None => bernoulli_table(need - 1).values().to_vec(),
    }
}

fn compositions_inner(a: &DenominatorSet, bern: &[ExactRational]) -> Vec<ExactRational> {
    let n = a.len();
    // terms[i][k] = a_i^k B_k / k!
    let terms: Vec<Vec<ExactRational>> = a
        .elements()
        .iter()
        .map(|&ai| {
            let ai = ExactRational::from(ai);
            (0..n)
                .map(|k| &bern[k] * ai.pow(k as u32) / ExactRational::from(factorial(k)))
                .collect()
        })
        .collect();
    // Parts whose Bernoulli factor is identically zero (odd k >= 3) are skipped.
    let usable: Vec<usize> = (0..n).filter(|&k| k < 3 || k % 2 == 0).collect();

    fn walk(
        pos: usize,
        remaining: usize,
        acc: &ExactRational,
        terms: &[Vec<ExactRational>],
        usable: &[usize],
        total: &mut ExactRational,
    ) {
        if pos + 1 == terms.len() {
            if usable.contains(&remaining) {
                *total += acc * &terms[pos][remaining];
            }
            return;
        }
        for &k in usable.iter().take_while(|&&k| k <= remaining) {
            let factor = &terms[pos][k];
            if factor.is_zero() {
                continue;
            }
            walk(pos + 1, remaining - k, &(acc * factor), terms, usable, total);
        }
    }

    (0..n)
        .map(|m| {
            let mut total = ExactRational::zero();
            walk(0, m, &ExactRational::one(), &terms, &usable, &mut total);
            total
        })
        .collect()
}

/// Partitions of `m` as multiplicity vectors `k[1..=m]` (index 0 unused),
/// visited in lexicographic order of their descending part lists.
fn for_each_partition(m: usize, mut visit: impl FnMut(&[usize])) {
    fn rec(remaining: usize, max_part: usize, mult: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if remaining == 0 {
            visit(mult);
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            mult[part] += 1;
            rec(remaining - part, part, mult, visit);
            mult[part] -= 1;
        }
    }
    let mut mult = vec![0; m + 1];
    rec(m, m, &mut mult, &mut visit);
}

fn powersums_inner(a: &DenominatorSet, bern: &[ExactRational]) -> Vec<ExactRational> {
    let n = a.len();
    let sums = power_sums(a, n.saturating_sub(1));
    // base[j] = B_j s_j / (j * j!)
    let base: Vec<ExactRational> = (0..n)
        .map(|j| {
            if j == 0 {
                return ExactRational::zero();
            }
            let s = ExactRational::from(BigInt::from(sums.get(j).clone()));
            &bern[j] * s / ExactRational::from(factorial(j) * j)
        })
        .collect();

    (0..n)
        .map(|m| {
            let mut total = ExactRational::zero();
            for_each_partition(m, |k| {
                let mut term = ExactRational::one();
                let mut sign_exponent = 0;
                for (j, &kj) in k.iter().enumerate().skip(1) {
                    if kj == 0 {
                        continue;
                    }
                    if j >= 2 {
                        sign_exponent += kj;
                    }
                    term = term * base[j].pow(kj as u32) / ExactRational::from(factorial(kj));
                }
                if sign_exponent % 2 == 1 {
                    term = -term;
                }
                total += term;
            });
            total
        })
        .collect()
}

fn series_inner(a: &DenominatorSet, bern: &[ExactRational]) -> Vec<ExactRational> {
    let b = bernoulli_series_from(bern);
    let product = a
        .elements()
        .iter()
        .map(|&ai| b.dilate(&ExactRational::from(ai)))
        .fold(TruncatedPowerSeries::one(a.len() - 1), |acc, s| {
            acc.mul(&s).expect("common order")
        });
    product.coefficients().to_vec()
}

/// `(1 - (1 - z)^a) / z` through `z^order`.
fn shifted_geometric_unit(a: u64, order: usize) -> TruncatedPowerSeries {
    let a = BigInt::from(a);
    TruncatedPowerSeries::from_fn(order, |j| {
        let k = BigInt::from(j + 1);
        if k > a {
            return ExactRational::zero();
        }
        let c = ExactRational::from(binomial(a.clone(), k));
        if j % 2 == 0 {
            c
        } else {
            -c
        }
    })
}

/// Principal-part coefficients `c_1..=c_n` of `G(z)` at `z = 1`, i.e.
/// `G(z) = c_1/(1-z) + ... + c_n/(1-z)^n + (terms regular at 1)`.
pub fn principal_part_coefficients(a: &DenominatorSet) -> Vec<ExactRational> {
    let n = a.len();
    let order = n - 1;
    let unit = a
        .elements()
        .iter()
        .map(|&ai| shifted_geometric_unit(ai, order))
        .fold(TruncatedPowerSeries::one(order), |acc, h| {
            acc.mul(&h).expect("common order")
        });
    let inverse = unit.invert().expect("constant term a_1...a_n is nonzero");
    (1..=n).map(|l| inverse.coefficient(n - l).clone()).collect()
}

fn partial_fractions_poly(a: &DenominatorSet) -> RationalPolynomial {
    principal_part_coefficients(a)
        .iter()
        .enumerate()
        .fold(RationalPolynomial::zero(), |acc, (i, c)| {
            let basis = rising_binomial_poly(i + 1).expect("l >= 1");
            &acc + &basis.scale(c)
        })
}

/// `P_A(t)` by the requested method, with the standard Bernoulli table.
pub fn polypart(a: &DenominatorSet, method: Method) -> PolynomialPartResult {
    polypart_with_bernoulli(a, method, None)
}

/// `P_A(t)` with an optional override for `B_0..B_(n-1)`. Only the three
/// Bernoulli-based methods read the override. Useful for checking that a
/// wrong convention is caught.
pub fn polypart_with_bernoulli(
    a: &DenominatorSet,
    method: Method,
    bernoulli: Option<&[ExactRational]>,
) -> PolynomialPartResult {
    let poly = match method {
        Method::Compositions => assemble(a, &compositions_inner(a, &bernoulli_values(a, bernoulli))),
        Method::PowerSums => assemble(a, &powersums_inner(a, &bernoulli_values(a, bernoulli))),
        Method::SeriesConstantTerm => assemble(a, &series_inner(a, &bernoulli_values(a, bernoulli))),
        Method::PartialFractions => partial_fractions_poly(a),
    };
    PolynomialPartResult {
        poly,
        method,
        a: a.clone(),
    }
}

pub fn polypart_compositions(a: &DenominatorSet) -> PolynomialPartResult {
    polypart(a, Method::Compositions)
}

pub fn polypart_powersums(a: &DenominatorSet) -> PolynomialPartResult {
    polypart(a, Method::PowerSums)
}

pub fn polypart_series(a: &DenominatorSet) -> PolynomialPartResult {
    polypart(a, Method::SeriesConstantTerm)
}

pub fn polypart_partial_fractions(a: &DenominatorSet) -> PolynomialPartResult {
    polypart(a, Method::PartialFractions)
}

/// Outcome of running every method on the same `A`.
#[derive(Clone, Debug)]
pub struct MethodComparison {
    pub results: Vec<PolynomialPartResult>,
}

impl MethodComparison {
    pub fn agree(&self) -> bool {
        self.results.windows(2).all(|w| w[0].poly == w[1].poly)
    }

    /// First pair of methods whose polynomials differ.
    pub fn first_disagreement(&self) -> Option<(&PolynomialPartResult, &PolynomialPartResult)> {
        let first = self.results.first()?;
        self.results
            .iter()
            .find(|r| r.poly != first.poly)
            .map(|r| (first, r))
    }

    pub fn poly(&self) -> &RationalPolynomial {
        &self.results[0].poly
    }
}

pub fn polypart_all(a: &DenominatorSet) -> MethodComparison {
    polypart_all_with_bernoulli(a, None)
}

pub fn polypart_all_with_bernoulli(
    a: &DenominatorSet,
    bernoulli: Option<&[ExactRational]>,
) -> MethodComparison {
    MethodComparison {
        results: Method::ALL
            .into_iter()
            .map(|m| polypart_with_bernoulli(a, m, bernoulli))
            .collect(),
    }
}

/// `1 / ((n-1)! a_1...a_n)`, the coefficient of `t^(n-1)` in `P_A`.
pub fn expected_leading_coefficient(a: &DenominatorSet) -> ExactRational {
    ExactRational::from(factorial(a.len() - 1) * product_of(a)).recip()
}
