//! Frobenius numbers as the largest zero of p_A, with the two-element
//! closed form for comparison.
//!
//! cargo run --example frobenius

use restricted_partitions::{frobenius_number, frobenius_two, DenominatorSet};

fn main() {
    for v in [vec![3, 5], vec![6, 9, 20], vec![5, 7, 11], vec![1, 9]] {
        let a = DenominatorSet::new(v).unwrap();
        let r = frobenius_number(&a).unwrap();
        println!("{a}: Frobenius number {}, {} gaps", r.value, r.witness_gap.len());
    }

    println!();
    for (x, y) in [(3, 5), (2, 7), (11, 13)] {
        let scanned = frobenius_number(&DenominatorSet::new(vec![x, y]).unwrap()).unwrap().value;
        println!("({x},{y}): scan {scanned}, (a-1)(b-1)-1 = {}", frobenius_two(x, y).unwrap());
    }

    match frobenius_number(&DenominatorSet::new(vec![4, 6]).unwrap()) {
        Ok(_) => unreachable!(),
        Err(e) => println!("\n{{4,6}}: {e}"),
    }
}
