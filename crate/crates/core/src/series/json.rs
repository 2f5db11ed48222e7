//! JSON form of a series: `{"order": N, "coeffs": [[[e.., "num", "den"], ..], ..]}`.
//!
//! `coeffs[n]` lists the nonzero terms of the `t^n` coefficient. Each term
//! is its exponents (x, then y, then u, for whichever variables the ring
//! has) followed by numerator and denominator as decimal strings.

use serde_json::{json, Value};

use super::ring::{rational_parts, Ring};
use super::trunc::TruncSeries;

pub fn series_to_value<C: Ring>(s: &TruncSeries<C>) -> Value {
    let coeffs: Vec<Value> = s
        .coeffs()
        .iter()
        .map(|c| {
            Value::Array(
                c.terms()
                    .into_iter()
                    .map(|(m, r)| {
                        let (num, den) = rational_parts(&r);
                        let mut term: Vec<Value> =
                            m.exponents().into_iter().map(Value::from).collect();
                        term.push(Value::String(num));
                        term.push(Value::String(den));
                        Value::Array(term)
                    })
                    .collect(),
            )
        })
        .collect();
    json!({ "order": s.order(), "coeffs": coeffs })
}

pub fn series_json<C: Ring>(s: &TruncSeries<C>) -> String {
    series_to_value(s).to_string()
}
