use matverify::rational::format_rational;
use matverify::{ElementSet, Error, Rational, UncertainInstance};
use serde_json::{json, Value};

/// A failed command: bad input (exit 1) or a broken internal check (exit 2).
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Internal(_) => 2,
        }
    }

    pub fn record(&self) -> Value {
        let (kind, message) = match self {
            Failure::Input(m) => ("input", m),
            Failure::Internal(m) => ("internal", m),
        };
        json!({ "record": "error", "kind": kind, "message": message })
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

pub type Outcome = Result<(), Failure>;

pub fn emit(record: Value) {
    println!("{record}");
}

pub fn rat(v: &Rational) -> Value {
    Value::String(format_rational(v))
}

pub fn names(inst: &UncertainInstance, s: &ElementSet) -> Value {
    json!(inst.matroid().names_of(s))
}
