//! Exact truncated power series and rational polynomials.
//!
//! cargo run --example power_series

use num_bigint::BigInt;
use restricted_partitions::{rising_binomial_poly, ExactRational, RationalPolynomial, TruncatedPowerSeries};

fn main() {
    let order = 6;
    let one_minus_z = TruncatedPowerSeries::from_coefficients(order, vec![1.into(), (-1).into()]);
    let geometric = one_minus_z.invert().unwrap();
    println!("1/(1-z) = {:?}", strings(geometric.coefficients()));

    let z = TruncatedPowerSeries::from_coefficients(order, vec![0.into(), 1.into()]);
    println!("exp(z)  = {:?}", strings(z.exp().unwrap().coefficients()));

    let two_plus_z = TruncatedPowerSeries::from_coefficients(2, vec![2.into(), 1.into()]);
    println!("1/(2+z) = {:?}", strings(two_plus_z.invert().unwrap().coefficients()));

    for l in 1..=4 {
        println!("binom(t+{}, {}) = {}", l - 1, l - 1, rising_binomial_poly(l).unwrap());
    }

    let p = RationalPolynomial::from_coefficients(vec![ExactRational::new(3, 4), ExactRational::new(1, 2)]);
    println!("({p}) at t=5 = {}", p.eval(&BigInt::from(5)));
}

fn strings(c: &[ExactRational]) -> Vec<String> {
    c.iter().map(ToString::to_string).collect()
}
