//! Rendering of results as human text or single JSON objects.

use num_bigint::BigUint;
use serde::Serialize;

use crate::bernoulli::BernoulliTable;
use crate::denumerant::CountTable;
use crate::exactmath::{DenominatorSet, ExactRational, RationalPolynomial};
use crate::frobenius::FrobeniusResult;
use crate::polypart::Method;
use crate::quasipoly::QuasiPolynomial;

/// Anything the CLI prints.
pub enum Output<'a> {
    Bernoulli(&'a BernoulliTable),
    PolynomialPart {
        a: &'a DenominatorSet,
        poly: &'a RationalPolynomial,
        /// `None` when every method was run.
        method: Option<Method>,
        methods_agree: Option<bool>,
    },
    Count {
        a: &'a DenominatorSet,
        t: usize,
        count: &'a BigUint,
    },
    CountTable(&'a CountTable),
    Quasi(&'a QuasiPolynomial),
    Frobenius {
        result: &'a FrobeniusResult,
        gaps: bool,
    },
}

#[derive(Serialize)]
struct BernoulliJson<'a> {
    upto: usize,
    values: &'a [ExactRational],
}

#[derive(Serialize)]
struct PolyJson<'a> {
    a: &'a [u64],
    degree: Option<usize>,
    coefficients: &'a [ExactRational],
    #[serde(skip_serializing_if = "Option::is_none")]
    method: Option<Method>,
    #[serde(skip_serializing_if = "Option::is_none")]
    methods_agree: Option<bool>,
}

#[derive(Serialize)]
struct CountJson<'a> {
    a: &'a [u64],
    t: usize,
    count: String,
}

#[derive(Serialize)]
struct CountTableJson<'a> {
    a: &'a [u64],
    upto: usize,
    counts: Vec<String>,
}

#[derive(Serialize)]
struct FrobeniusJson<'a> {
    a: &'a [u64],
    frobenius: i128,
    #[serde(skip_serializing_if = "Option::is_none")]
    gaps: Option<&'a [u64]>,
}

/// `P(t) = 1/2*t + 3/4`
pub fn format_polynomial(poly: &RationalPolynomial) -> String {
    format!("P(t) = {poly}")
}

pub fn emit(result: &Output<'_>, json: bool) -> String {
    if json {
        emit_json(result)
    } else {
        emit_human(result)
    }
}

fn emit_json(result: &Output<'_>) -> String {
    let value = match result {
        Output::Bernoulli(table) => serde_json::to_string(&BernoulliJson {
            upto: table.upto(),
            values: table.values(),
        }),
        Output::PolynomialPart {
            a,
            poly,
            method,
            methods_agree,
        } => serde_json::to_string(&PolyJson {
            a: a.elements(),
            degree: poly.degree(),
            coefficients: poly.coefficients(),
            method: *method,
            methods_agree: *methods_agree,
        }),
        Output::Count { a, t, count } => serde_json::to_string(&CountJson {
            a: a.elements(),
            t: *t,
            count: count.to_string(),
        }),
        Output::CountTable(table) => serde_json::to_string(&CountTableJson {
            a: table.a.elements(),
            upto: table.t_max(),
            counts: table.counts.iter().map(ToString::to_string).collect(),
        }),
        Output::Quasi(quasi) => serde_json::to_string(quasi),
        Output::Frobenius { result, gaps } => serde_json::to_string(&FrobeniusJson {
            a: result.a.elements(),
            frobenius: result.value,
            gaps: gaps.then_some(&result.witness_gap[..]),
        }),
    };
    value.expect("plain data serializes")
}

fn emit_human(result: &Output<'_>) -> String {
    match result {
        Output::Bernoulli(table) => table
            .values()
            .iter()
            .enumerate()
            .map(|(j, b)| format!("B_{j} = {b}"))
            .collect::<Vec<_>>()
            .join("\n"),
        Output::PolynomialPart {
            poly,
            method,
            methods_agree,
            ..
        } => {
            let mut out = format_polynomial(poly);
            if let Some(m) = method {
                out.push_str(&format!("\nmethod: {m}"));
            }
            if let Some(agree) = methods_agree {
                let verdict = if *agree { "yes" } else { "NO" };
                out.push_str(&format!("\nmethods agree: {verdict}"));
            }
            out
        }
        Output::Count { a, t, count } => format!("p_{a}({t}) = {count}"),
        Output::CountTable(table) => table
            .counts
            .iter()
            .enumerate()
            .map(|(t, c)| format!("{t} {c}"))
            .collect::<Vec<_>>()
            .join("\n"),
        Output::Quasi(quasi) => {
            let l = quasi.period();
            let mut lines = vec![format!("period {l}")];
            for (r, c) in quasi.constituents().iter().enumerate() {
                lines.push(format!("t = {r} mod {l}: {c}"));
            }
            lines.join("\n")
        }
        Output::Frobenius { result, gaps } => {
            let mut out = format!("Frobenius number of {}: {}", result.a, result.value);
            if *gaps {
                let list: Vec<String> = result.witness_gap.iter().map(u64::to_string).collect();
                out.push_str(&format!("\ngaps ({}): {}", list.len(), list.join(",")));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::bernoulli_table;

    #[test]
    fn polypart_json() {
        let a = DenominatorSet::new(vec![1, 2]).unwrap();
        let poly = RationalPolynomial::from_coefficients(vec![
            ExactRational::new(3, 4),
            ExactRational::new(1, 2),
        ]);
        let out = emit(
            &Output::PolynomialPart {
                a: &a,
                poly: &poly,
                method: None,
                methods_agree: Some(true),
            },
            true,
        );
        assert_eq!(
            out,
            r#"{"a":[1,2],"degree":1,"coefficients":["3/4","1/2"],"methods_agree":true}"#
        );
    }

    #[test]
    fn bernoulli_human() {
        assert_eq!(
            emit(&Output::Bernoulli(&bernoulli_table(2)), false),
            "B_0 = 1\nB_1 = -1/2\nB_2 = 1/6"
        );
    }

    #[test]
    fn zero_polynomial_human() {
        assert_eq!(format_polynomial(&RationalPolynomial::zero()), "P(t) = 0");
    }
}
