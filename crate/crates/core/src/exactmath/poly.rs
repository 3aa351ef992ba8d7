use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::ExactRational;
use crate::error::{Error, Result};

/// Dense polynomial in `t` with rational coefficients, ascending powers.
///
/// The zero polynomial has no coefficients; any other polynomial has a
/// nonzero last coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coefficients: Vec<ExactRational>,
}

impl RationalPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<ExactRational>) -> Self {
        Self::from_coefficients(vec![c.into()])
    }

    /// Builds from ascending coefficients, dropping trailing zeros.
    pub fn from_coefficients(mut coefficients: Vec<ExactRational>) -> Self {
        while coefficients.last().is_some_and(ExactRational::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    /// `t - root`
    pub fn linear_root(root: impl Into<ExactRational>) -> Self {
        Self::from_coefficients(vec![-root.into(), ExactRational::one()])
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<ExactRational> {
        self.coefficients
    }

    /// Coefficient of `t^power`, zero past the degree.
    pub fn coefficient(&self, power: usize) -> ExactRational {
        self.coefficients.get(power).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial (minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&ExactRational> {
        self.coefficients.last()
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, t: &BigInt) -> ExactRational {
        self.eval_rational(&ExactRational::from(t.clone()))
    }

    pub fn eval_rational(&self, t: &ExactRational) -> ExactRational {
        self.coefficients
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, factor: &ExactRational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            coefficients: self.coefficients.iter().map(|c| c * factor).collect(),
        }
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        RationalPolynomial::from_coefficients(
            (0..len).map(|i| self.coefficient(i) + rhs.coefficient(i)).collect(),
        )
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        RationalPolynomial::from_coefficients(
            (0..len).map(|i| self.coefficient(i) - rhs.coefficient(i)).collect(),
        )
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![ExactRational::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, x) in self.coefficients.iter().enumerate() {
            for (j, y) in rhs.coefficients.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        RationalPolynomial::from_coefficients(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial {
            coefficients: self.coefficients.iter().map(|c| -c).collect(),
        }
    }
}

/// Human form, descending powers: `1/2*t + 3/4`. Zero terms are omitted and
/// the zero polynomial prints as `0`.
impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match power {
                0 => write!(f, "{magnitude}")?,
                _ if magnitude.is_one() => write!(f, "t")?,
                _ => write!(f, "{magnitude}*t")?,
            }
            if power > 1 {
                write!(f, "^{power}")?;
            }
        }
        Ok(())
    }
}

/// `binom(t + l - 1, l - 1)` as a polynomial in `t`:
/// `(t+1)(t+2)...(t+l-1) / (l-1)!`.
pub fn rising_binomial_poly(l: usize) -> Result<RationalPolynomial> {
    if l == 0 {
        return Err(Error::ZeroBinomialIndex);
    }
    let mut p = RationalPolynomial::constant(1);
    for k in 1..l {
        let factor = RationalPolynomial::from_coefficients(vec![
            ExactRational::new(k, k),
            ExactRational::new(1, k),
        ]);
        p = &p * &factor;
    }
    Ok(p)
}
