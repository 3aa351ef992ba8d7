//! Counting representations t = m_1 a_1 + ... + m_n a_n two independent
//! ways, and watching p_A(t) approach its leading term.
//!
//! cargo run --example counting

use num_bigint::BigInt;
use restricted_partitions::{count_range, gf_coefficients_oracle, polypart_series, DenominatorSet, ExactRational};

fn main() {
    let a = DenominatorSet::new(vec![3, 5, 7]).unwrap();
    let dp = count_range(&a, 40);
    let gf = gf_coefficients_oracle(&a, 40);
    println!("A = {a}");
    println!("DP and generating-function oracle agree through t=40: {}", dp == gf);
    let row: Vec<String> = dp.counts.iter().map(ToString::to_string).collect();
    println!("p_A(0..=40) = {}", row.join(" "));

    let p = polypart_series(&a).poly;
    println!("\nP_A(t) = {p}");
    let big = count_range(&a, 10_000);
    for t in [10usize, 100, 1_000, 10_000] {
        let exact = ExactRational::from(BigInt::from(big.get(t).clone()));
        let poly = p.eval(&BigInt::from(t));
        println!("t = {t:>6}: p_A(t) = {exact:>8}, p_A(t) - P_A(t) = {}", &exact - &poly);
    }
}
