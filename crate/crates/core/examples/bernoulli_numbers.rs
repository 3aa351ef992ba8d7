//! Bernoulli numbers from z/(e^z - 1), and the log/exp identity that links
//! the product of dilated series to power sums.
//!
//! cargo run --example bernoulli_numbers

use restricted_partitions::bernoulli::exp_quotient_series;
use restricted_partitions::{bernoulli_log_series, bernoulli_series, bernoulli_table, TruncatedPowerSeries};

fn main() {
    let table = bernoulli_table(12);
    for (j, b) in table.values().iter().enumerate() {
        println!("B_{j:<2} = {b}");
    }

    let order = 8;
    let b = bernoulli_series(order);
    let check = b.mul(&exp_quotient_series(order)).unwrap();
    println!("\nz/(e^z-1) * (e^z-1)/z == 1 through z^{order}: {}", check == TruncatedPowerSeries::one(order));

    let log = bernoulli_log_series(order).unwrap();
    let coefficients: Vec<String> = log.coefficients().iter().map(ToString::to_string).collect();
    println!("log(z/(e^z-1)) = [{}]", coefficients.join(", "));
    println!("exp(log(...)) == z/(e^z-1): {}", log.exp().unwrap() == b);
}
