use std::process::{Command, Output};

use num_bigint::BigInt;
use restricted_partitions::{count_range, DenominatorSet, ExactRational, RationalPolynomial};
use serde_json::Value;

fn rpart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rpart"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

fn rationals(v: &Value) -> Vec<ExactRational> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().parse().unwrap())
        .collect()
}

#[test]
fn ppart_json_matches_documented_shape() {
    let o = rpart(&["ppart", "-a", "1,2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"a":[1,2],"degree":1,"coefficients":["3/4","1/2"],"methods_agree":true}"#
    );
}

#[test]
fn ppart_human_and_single_method() {
    let o = rpart(&["ppart", "-a", "1,2"]);
    assert!(stdout(&o).starts_with("P(t) = 1/2*t + 3/4\n"));
    let o = rpart(&["ppart", "-a", "3,5,7", "--method", "pfrac", "--json"]);
    let v = json(&o);
    assert_eq!(v["method"], "pfrac");
    assert!(v.get("methods_agree").is_none());
    assert_eq!(v["degree"], 2);
}

#[test]
fn bernoulli_human() {
    let o = rpart(&["bernoulli", "--upto", "2"]);
    assert_eq!(stdout(&o), "B_0 = 1\nB_1 = -1/2\nB_2 = 1/6\n");
}

#[test]
fn count_single_and_table() {
    let o = rpart(&["count", "-a", "1,2", "-t", "6", "--json"]);
    assert_eq!(json(&o)["count"], "4");
    let o = rpart(&["count", "-a", "2,3", "--upto", "4", "--json"]);
    let v = json(&o);
    assert_eq!(v["upto"], 4);
    assert_eq!(v["counts"], serde_json::json!(["1", "0", "1", "1", "1"]));
}

#[test]
fn quasi_json_round_trips_to_counts() {
    let o = rpart(&["quasi", "-a", "4,6", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let period = v["period"].as_u64().unwrap();
    assert_eq!(period, 12);
    let constituents: Vec<RationalPolynomial> = v["constituents"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| RationalPolynomial::from_coefficients(rationals(c)))
        .collect();
    let table = count_range(&DenominatorSet::new(vec![4, 6]).unwrap(), 100);
    for t in 0..=100u64 {
        let got = constituents[(t % period) as usize].eval(&BigInt::from(t));
        assert_eq!(got, ExactRational::from(BigInt::from(table.get(t as usize).clone())), "t={t}");
    }
}

#[test]
fn ppart_json_round_trips_through_coefficients() {
    let o = rpart(&["ppart", "-a", "1,1,1", "--json"]);
    let p = RationalPolynomial::from_coefficients(rationals(&json(&o)["coefficients"]));
    // {1,1,1} has no periodic part, so P_A reproduces every count
    let table = count_range(&DenominatorSet::new(vec![1, 1, 1]).unwrap(), 30);
    for (t, c) in table.counts.iter().enumerate() {
        assert_eq!(p.eval(&BigInt::from(t)), ExactRational::from(BigInt::from(c.clone())));
    }
}

#[test]
fn qcheck_exit_codes() {
    let ok = rpart(&["qcheck", "-a", "3,5,7"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let bad = rpart(&["qcheck", "-a", "4,6"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("precondition: pairwise coprime"));
}

#[test]
fn frobenius_outputs() {
    let o = rpart(&["frobenius", "-a", "6,9,20", "--gaps", "--json"]);
    let v = json(&o);
    assert_eq!(v["frobenius"], 43);
    assert_eq!(v["gaps"].as_array().unwrap().last().unwrap(), 43);
    let o = rpart(&["frobenius", "-a", "1,7", "--json"]);
    assert_eq!(json(&o)["frobenius"], -1);
    let o = rpart(&["frobenius", "-a", "4,6"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["count", "-a", "0,5", "-t", "1"][..],
        &["count", "-a", "3,5"],
        &["ppart"],
        &["ppart", "-a", ""],
        &["frobnicate"],
        &["count", "-a", "3", "-t", "1", "--upto", "3"],
    ] {
        let o = rpart(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn selftest_passes_and_is_deterministic() {
    let a = rpart(&["selftest", "--seed", "11"]);
    let b = rpart(&["selftest", "--seed", "11"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 3);
}

#[test]
fn selftest_catches_flipped_bernoulli_sign() {
    let o = rpart(&["selftest", "--flip-b1"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().starts_with("FAIL four-way"), "{text}");
}
