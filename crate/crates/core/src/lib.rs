//! Exact computation of the restricted partition function
//! `p_A(t) = #{(m_1, ..., m_n) >= 0 : m_1 a_1 + ... + m_n a_n = t}`,
//! its polynomial part `P_A(t)`, the quasi-polynomial remainder
//! `Q_A = p_A - P_A`, and Frobenius numbers.
//!
//! Everything is exact: rationals are arbitrary precision and there is no
//! floating point on any computation path.
//!
//! ```
//! use restricted_partitions::{polypart_all, DenominatorSet};
//!
//! let a: DenominatorSet = "1,2".parse().unwrap();
//! let cmp = polypart_all(&a);
//! assert!(cmp.agree());
//! assert_eq!(cmp.poly().to_string(), "1/2*t + 3/4");
//! ```

pub mod bernoulli;
pub mod cli;
pub mod denumerant;
mod error;
pub mod exactmath;
pub mod frobenius;
pub mod polypart;
pub mod quasipoly;

pub use bernoulli::{bernoulli_log_series, bernoulli_series, bernoulli_table, BernoulliTable};
pub use denumerant::{count, count_range, gf_coefficients_oracle, CountTable};
pub use error::{Error, Result};
pub use exactmath::{
    rising_binomial_poly, DenominatorSet, ExactRational, RationalPolynomial, TruncatedPowerSeries,
};
pub use frobenius::{frobenius_number, frobenius_two, FrobeniusResult};
pub use polypart::{
    expected_leading_coefficient, polypart, polypart_all, polypart_compositions,
    polypart_partial_fractions, polypart_powersums, polypart_series, power_sums, Method,
    MethodComparison, PolynomialPartResult, PowerSums,
};
pub use quasipoly::{
    average_zero_check, degree_drop_check, interpolate_quasipolynomial, period, q_part, QPart,
    QuasiPolynomial,
};
