use super::ExactRational;
use crate::error::{Error, Result};

/// Power series in `z` known through `z^order`. Holds exactly `order + 1`
/// coefficients; nothing beyond `order` is ever read or written.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedPowerSeries {
    order: usize,
    coefficients: Vec<ExactRational>,
}

impl TruncatedPowerSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            coefficients: vec![ExactRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coefficients[0] = ExactRational::one();
        s
    }

    /// Pads with zeros or truncates so the series is known through `order`.
    pub fn from_coefficients(order: usize, mut coefficients: Vec<ExactRational>) -> Self {
        coefficients.resize(order + 1, ExactRational::zero());
        Self { order, coefficients }
    }

    /// Builds from a coefficient function `j -> [z^j]`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> ExactRational) -> Self {
        Self {
            order,
            coefficients: (0..=order).map(f).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coefficients
    }

    pub fn coefficient(&self, j: usize) -> &ExactRational {
        &self.coefficients[j]
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::from_fn(self.order, |j| &self.coefficients[j] + &other.coefficients[j]))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::from_fn(self.order, |j| &self.coefficients[j] - &other.coefficients[j]))
    }

    pub fn scale(&self, factor: &ExactRational) -> Self {
        Self::from_fn(self.order, |j| &self.coefficients[j] * factor)
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let mut out = Self::zero(self.order);
        for (i, x) in self.coefficients.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coefficients[..=self.order - i].iter().enumerate() {
                out.coefficients[i + j] += x * y;
            }
        }
        Ok(out)
    }

    /// `exp(self)` for a series with zero constant term, via
    /// `n y_n = sum_{k=1}^{n} k x_k y_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coefficients[0].is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let mut y = Self::one(self.order);
        for n in 1..=self.order {
            let mut acc = ExactRational::zero();
            for k in 1..=n {
                let x = &self.coefficients[k];
                if !x.is_zero() {
                    acc += x * &y.coefficients[n - k] * ExactRational::from(k);
                }
            }
            y.coefficients[n] = acc / ExactRational::from(n);
        }
        Ok(y)
    }

    /// Multiplicative inverse for a series with nonzero constant term.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coefficients[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let c0_inv = c0.recip();
        let mut y = Self::zero(self.order);
        y.coefficients[0] = c0_inv.clone();
        for n in 1..=self.order {
            let acc: ExactRational = (1..=n)
                .filter(|&k| !self.coefficients[k].is_zero())
                .map(|k| &self.coefficients[k] * &y.coefficients[n - k])
                .sum();
            y.coefficients[n] = -(acc * &c0_inv);
        }
        Ok(y)
    }

    /// The series `f(c z)`, i.e. coefficient `j` multiplied by `c^j`.
    pub fn dilate(&self, c: &ExactRational) -> Self {
        let mut power = ExactRational::one();
        let mut out = Vec::with_capacity(self.order + 1);
        for x in &self.coefficients {
            out.push(x * &power);
            power *= c;
        }
        Self {
            order: self.order,
            coefficients: out,
        }
    }

    /// Same series known through a lower order.
    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coefficients(order, self.coefficients[..=order.min(self.order)].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d)
    }

    fn series(order: usize, c: &[(i64, i64)]) -> TruncatedPowerSeries {
        TruncatedPowerSeries::from_coefficients(order, c.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn mul_examples() {
        let a = series(2, &[(1, 1), (1, 1)]);
        let b = series(2, &[(1, 1), (-1, 1)]);
        assert_eq!(a.mul(&b).unwrap(), series(2, &[(1, 1), (0, 1), (-1, 1)]));

        let x = series(3, &[(2, 1), (-1, 3), (5, 7), (1, 2)]);
        assert_eq!(x.mul(&TruncatedPowerSeries::one(3)).unwrap(), x);

        assert_eq!(
            a.mul(&TruncatedPowerSeries::one(3)),
            Err(Error::OrderMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn bernoulli_square_by_direct_convolution() {
        let b = [q(1, 1), q(-1, 2), q(1, 12), q(0, 1), q(-1, 720)];
        // independent convolution over all index pairs
        let mut expected = vec![q(0, 1); 5];
        for i in 0..5 {
            for j in 0..5 {
                if i + j <= 4 {
                    expected[i + j] = &expected[i + j] + &b[i] * &b[j];
                }
            }
        }
        // z^4: 2*(-1/720) + (1/12)^2 = 1/240
        assert_eq!(expected, vec![q(1, 1), q(-1, 1), q(5, 12), q(-1, 12), q(1, 240)]);
        let s = TruncatedPowerSeries::from_coefficients(4, b.to_vec());
        assert_eq!(s.mul(&s).unwrap().coefficients(), &expected[..]);
    }

    #[test]
    fn exp_examples() {
        for k in 0..5 {
            assert_eq!(TruncatedPowerSeries::zero(k).exp().unwrap(), TruncatedPowerSeries::one(k));
        }
        let z = series(3, &[(0, 1), (1, 1)]);
        assert_eq!(z.exp().unwrap(), series(3, &[(1, 1), (1, 1), (1, 2), (1, 6)]));
        assert_eq!(
            TruncatedPowerSeries::one(2).exp(),
            Err(Error::NonZeroConstantTerm)
        );
    }

    #[test]
    fn invert_examples() {
        let x = series(3, &[(1, 1), (-1, 1)]);
        assert_eq!(x.invert().unwrap(), series(3, &[(1, 1), (1, 1), (1, 1), (1, 1)]));
        assert_eq!(TruncatedPowerSeries::one(4).invert().unwrap(), TruncatedPowerSeries::one(4));
        let y = series(2, &[(2, 1), (1, 1)]);
        let inv = y.invert().unwrap();
        assert_eq!(inv, series(2, &[(1, 2), (-1, 4), (1, 8)]));
        assert_eq!(y.mul(&inv).unwrap(), TruncatedPowerSeries::one(2));
        assert_eq!(series(2, &[(0, 1), (1, 1)]).invert(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn dilate_scales_powers() {
        let s = series(3, &[(1, 1), (1, 1), (1, 1), (1, 1)]);
        assert_eq!(s.dilate(&q(2, 1)), series(3, &[(1, 1), (2, 1), (4, 1), (8, 1)]));
    }

    fn arb_series(order: usize, zero_constant: bool) -> impl Strategy<Value = TruncatedPowerSeries> {
        prop::collection::vec((-9i64..=9, 1i64..=5), order + 1).prop_map(move |c| {
            let mut coeffs: Vec<_> = c.into_iter().map(|(n, d)| q(n, d)).collect();
            if zero_constant {
                coeffs[0] = q(0, 1);
            }
            TruncatedPowerSeries::from_coefficients(order, coeffs)
        })
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(a in arb_series(4, false), b in arb_series(4, false), c in arb_series(4, false)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        }

        #[test]
        fn invert_then_mul_is_one(a in arb_series(5, false)) {
            prop_assume!(!a.coefficient(0).is_zero());
            let inv = a.invert().unwrap();
            prop_assert_eq!(a.mul(&inv).unwrap(), TruncatedPowerSeries::one(5));
        }

        #[test]
        fn exp_turns_sums_into_products(a in arb_series(4, true), b in arb_series(4, true)) {
            let lhs = a.add(&b).unwrap().exp().unwrap();
            let rhs = a.exp().unwrap().mul(&b.exp().unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn coefficients_stay_normalized(a in arb_series(4, true), b in arb_series(4, false)) {
            let e = a.exp().unwrap();
            let m = e.mul(&b).unwrap();
            prop_assert!(m.coefficients().iter().chain(e.coefficients()).all(ExactRational::is_normalized));
        }
    }
}
