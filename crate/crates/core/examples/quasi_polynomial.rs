//! Interpolating p_A as a quasi-polynomial and inspecting Q_A = p_A - P_A.
//!
//! cargo run --example quasi_polynomial -- 2,3

use restricted_partitions::quasipoly::{average_zero_report, degree_drop_report};
use restricted_partitions::{interpolate_quasipolynomial, q_part, DenominatorSet};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2,3".to_string());
    let a: DenominatorSet = arg.parse().expect("comma-separated positive integers");

    let quasi = interpolate_quasipolynomial(&a).expect("small enough to interpolate");
    println!("A = {a}, period {}", quasi.period());
    for (r, c) in quasi.constituents().iter().enumerate() {
        println!("  t = {r} mod {}: p_A(t) = {c}", quasi.period());
    }

    let q = q_part(&a).unwrap();
    println!("P_A(t) = {}", q.polynomial_part);
    for (r, c) in q.constituents().iter().enumerate() {
        println!("  t = {r} mod {}: Q_A(t) = {c}", quasi.period());
    }

    let avg = average_zero_report(&q);
    println!(
        "Q_A constant on every class: {}, sum over a period: {}",
        avg.all_constant, avg.sum
    );
    if a.gcd() == 1 {
        let drop = degree_drop_report(&q);
        println!("max deg Q_A = {:?}, bound n-2 = {:?}", drop.max_degree, drop.bound);
    }
}
