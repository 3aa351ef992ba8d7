//! Randomized cross-checks at reduced sizes, for `rpart selftest`.

use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bernoulli::bernoulli_table;
use crate::denumerant::{count_range, gf_coefficients_oracle};
use crate::exactmath::{DenominatorSet, ExactRational};
use crate::polypart::polypart_all_with_bernoulli;
use crate::quasipoly::interpolate_quasipolynomial;

pub const DEFAULT_SEED: u64 = 20_260_101;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SelftestOptions {
    pub seed: u64,
    /// Runs the Bernoulli-based methods with `B_1 = +1/2`. The four-way
    /// suite is expected to fail.
    pub flip_b1: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub passed: usize,
    pub first_counterexample: Option<String>,
}

impl SuiteOutcome {
    pub fn ok(&self) -> bool {
        self.first_counterexample.is_none()
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "ok" } else { "FAIL" };
        write!(f, "{status} {}: {}/{} cases", self.name, self.passed, self.cases)?;
        if let Some(c) = &self.first_counterexample {
            write!(f, "; first counterexample: {c}")?;
        }
        Ok(())
    }
}

/// `n` elements in `1..=max_element`, `n` drawn from `n_range`.
pub fn random_set(rng: &mut impl Rng, n_range: std::ops::RangeInclusive<usize>, max_element: u64) -> DenominatorSet {
    let n = rng.random_range(n_range);
    DenominatorSet::new((0..n).map(|_| rng.random_range(1..=max_element)).collect()).expect("nonempty, positive")
}

fn four_way(rng: &mut ChaCha8Rng, flip_b1: bool) -> SuiteOutcome {
    let cases = 60;
    let mut table = bernoulli_table(8).values().to_vec();
    if flip_b1 {
        table[1] = -&table[1];
    }
    let mut passed = 0;
    let mut first = None;
    for _ in 0..cases {
        let a = random_set(rng, 1..=5, 15);
        let cmp = polypart_all_with_bernoulli(&a, Some(&table));
        match cmp.first_disagreement() {
            None => passed += 1,
            Some((x, y)) => {
                first.get_or_insert_with(|| {
                    format!("A={a}: {} gives {}, {} gives {}", x.method, x.poly, y.method, y.poly)
                });
            }
        }
    }
    SuiteOutcome {
        name: "four-way polynomial part",
        cases,
        passed,
        first_counterexample: first,
    }
}

fn dual_oracle(rng: &mut ChaCha8Rng) -> SuiteOutcome {
    let cases = 40;
    let mut passed = 0;
    let mut first = None;
    for _ in 0..cases {
        let a = random_set(rng, 1..=5, 25);
        let t_max = rng.random_range(0..=300);
        let dp = count_range(&a, t_max);
        let gf = gf_coefficients_oracle(&a, t_max);
        match (0..=t_max).find(|&t| dp.get(t) != gf.get(t)) {
            None => passed += 1,
            Some(t) => {
                first.get_or_insert_with(|| {
                    format!("A={a}, t={t}: expected {}, got {}", gf.get(t), dp.get(t))
                });
            }
        }
    }
    SuiteOutcome {
        name: "dual-oracle counting",
        cases,
        passed,
        first_counterexample: first,
    }
}

fn reconstruction(rng: &mut ChaCha8Rng) -> SuiteOutcome {
    let cases = 15;
    let mut passed = 0;
    let mut first = None;
    let mut done = 0;
    while done < cases {
        let a = random_set(rng, 1..=4, 12);
        let Some(l) = a.lcm().filter(|&l| l <= 500) else { continue };
        done += 1;
        let t_max = 3 * l;
        let outcome = interpolate_quasipolynomial(&a).map_err(|e| e.to_string()).and_then(|quasi| {
            let table = count_range(&a, t_max as usize);
            match (0..=t_max).find(|&t| {
                quasi.eval(t) != ExactRational::from(BigInt::from(table.get(t as usize).clone()))
            }) {
                None => Ok(()),
                Some(t) => Err(format!("t={t}: expected {}, got {}", table.get(t as usize), quasi.eval(t))),
            }
        });
        match outcome {
            Ok(()) => passed += 1,
            Err(msg) => {
                first.get_or_insert_with(|| format!("A={a}, {msg}"));
            }
        }
    }
    SuiteOutcome {
        name: "quasi-polynomial reconstruction",
        cases,
        passed,
        first_counterexample: first,
    }
}

/// Runs every suite; the caller decides the exit code from
/// [`SuiteOutcome::ok`].
pub fn run_selftest(options: SelftestOptions) -> Vec<SuiteOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    vec![
        four_way(&mut rng, options.flip_b1),
        dual_oracle(&mut rng),
        reconstruction(&mut rng),
    ]
}
