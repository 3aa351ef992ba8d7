//! The polynomial part P_A(t) by all four methods, side by side.
//!
//! cargo run --example polynomial_part -- 3,5,7

use restricted_partitions::polypart::principal_part_coefficients;
use restricted_partitions::{expected_leading_coefficient, polypart_all, power_sums, DenominatorSet};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "3,5,7".to_string());
    let a: DenominatorSet = match arg.parse() {
        Ok(a) => a,
        Err(e) => {
            eprintln!("bad set {arg:?}: {e}");
            std::process::exit(2);
        }
    };

    let sums = power_sums(&a, a.len().saturating_sub(1));
    let shown: Vec<String> = sums.as_slice().iter().map(ToString::to_string).collect();
    println!("A = {a}, power sums s_1.. = [{}]", shown.join(", "));

    let cmp = polypart_all(&a);
    for r in &cmp.results {
        println!("{:>13}: P(t) = {}", r.method.name(), r.poly);
    }
    println!("all four agree: {}", cmp.agree());
    println!(
        "leading coefficient {} (expected 1/((n-1)! a_1...a_n) = {})",
        cmp.poly().coefficient(a.len() - 1),
        expected_leading_coefficient(&a)
    );

    let c: Vec<String> = principal_part_coefficients(&a).iter().map(ToString::to_string).collect();
    println!("principal part of G at z=1, c_1..c_n = [{}]", c.join(", "));
}
