//! Reading polynomials and moulds from files.
//!
//! A file holds either plain polynomial text (`xxy - 2*xyx + yxx`), a JSON
//! string with the same text, an object `{"poly": "…"}`, or mould JSON (an
//! object with `alphabet` and `depths`).

use std::fs;
use std::path::Path;

use moulde::mould::json::from_value;
use moulde::mould::{ma, Mould};
use moulde::words::{NCPoly, WordsError};
use serde_json::Value;

use crate::Failure;

#[derive(Clone, Debug)]
pub enum Input {
    Words(NCPoly),
    Mould(Mould),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Words(_) => "polynomial",
            Input::Mould(_) => "mould",
        }
    }

    pub fn words(self, what: &str) -> Result<NCPoly, Failure> {
        match self {
            Input::Words(b) => Ok(b),
            Input::Mould(_) => Err(Failure::usage(format!("{what} needs a polynomial input, got a mould"))),
        }
    }

    /// The mould itself, or `ma` of a polynomial.
    pub fn mould(self) -> Result<Mould, Failure> {
        match self {
            Input::Mould(m) => Ok(m),
            Input::Words(b) => ma(&b).map_err(|e| Failure::usage(format!("cannot form ma of the input: {e}"))),
        }
    }
}

fn parse_words(path: &Path, text: &str) -> Result<NCPoly, Failure> {
    NCPoly::parse(text).map_err(|e| match e {
        WordsError::Parse { offset, message } => {
            Failure::usage(format!("{}: parse error at offset {offset}: {message}", path.display()))
        }
        e => Failure::usage(format!("{}: {e}", path.display())),
    })
}

pub fn parse_input(path: &Path, text: &str) -> Result<Input, Failure> {
    let trimmed = text.trim();
    if !trimmed.starts_with('{') && !trimmed.starts_with('"') {
        return parse_words(path, trimmed).map(Input::Words);
    }
    let v: Value =
        serde_json::from_str(trimmed).map_err(|e| Failure::usage(format!("{}: invalid JSON: {e}", path.display())))?;
    match &v {
        Value::String(s) => parse_words(path, s).map(Input::Words),
        Value::Object(o) if o.contains_key("depths") => {
            from_value(&v).map(Input::Mould).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
        }
        Value::Object(o) => match o.get("poly") {
            Some(Value::String(s)) => parse_words(path, s).map(Input::Words),
            _ => Err(Failure::usage(format!("{}: expected a \"poly\" string or a mould", path.display()))),
        },
        _ => Err(Failure::usage(format!("{}: expected a polynomial or a mould", path.display()))),
    }
}

pub fn read_input(path: &Path) -> Result<Input, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse_input(path, &text)
}
