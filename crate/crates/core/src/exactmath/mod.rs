//! Exact arithmetic: rationals, dense polynomials in `t`, truncated power
//! series in `z`, and the input multiset `A`.

mod denominators;
mod poly;
mod rational;
mod series;

pub use denominators::DenominatorSet;
pub use poly::{rising_binomial_poly, RationalPolynomial};
pub use rational::ExactRational;
pub use series::TruncatedPowerSeries;
