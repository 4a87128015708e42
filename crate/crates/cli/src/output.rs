//! JSON encoding of exact values and plain-text rendering.

use num_bigint::BigInt;
use serde_json::{json, Value};
use weil_core::rat::fmt_rat;
use weil_core::{B1Class, B2Class, CartanForm, QuadElem, Rat};

pub fn r(x: &Rat) -> Value {
    Value::String(fmt_rat(x))
}

pub fn int(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

pub fn rats(xs: &[Rat]) -> Value {
    Value::Array(xs.iter().map(r).collect())
}

pub fn matrix(m: &[Vec<Rat>]) -> Value {
    Value::Array(m.iter().map(|row| rats(row)).collect())
}

pub fn cartan(f: &CartanForm) -> Value {
    ints(&[f.a().clone(), f.b().clone(), f.c().clone()])
}

pub fn b1(t: &B1Class) -> Value {
    rats(&t.coords())
}

pub fn b2(c: &B2Class) -> Value {
    rats(&c.x)
}

/// `{"re": .., "im": ..}` for `re + im * theta`.
pub fn quad(x: &QuadElem) -> Value {
    json!({"re": r(x.re()), "im": r(x.im())})
}

pub fn b1_quad(t: &B1Class<QuadElem>) -> Value {
    Value::Array(t.coords().iter().map(quad).collect())
}

/// Pretty JSON, or `key: value` lines with strings unquoted.
pub fn render(v: &Value, as_json: bool) -> String {
    if as_json {
        return serde_json::to_string_pretty(v).expect("serializable");
    }
    match v {
        Value::Object(map) => map
            .iter()
            .map(|(k, x)| format!("{k}: {}", plain(x)))
            .collect::<Vec<_>>()
            .join("\n"),
        other => plain(other),
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
