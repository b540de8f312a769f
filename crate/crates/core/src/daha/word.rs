use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::QtScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenSym {
    T(usize),
    Tinv(usize),
    X(usize),
    Pi,
    Y(usize),
    Eps(usize),
    PiTilde,
    Scalar(QtScalar),
}

/// A product of generators, applied right to left.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GeneratorWord {
    syms: Vec<GenSym>,
}

impl GeneratorWord {
    pub fn new(syms: Vec<GenSym>) -> Self {
        GeneratorWord { syms }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn symbols(&self) -> &[GenSym] {
        &self.syms
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    /// `self · other`: `other` acts first.
    pub fn then_after(&self, other: &GeneratorWord) -> GeneratorWord {
        let mut s = self.syms.clone();
        s.extend(other.syms.iter().cloned());
        GeneratorWord { syms: s }
    }

    /// Check every index against rank `n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        for s in &self.syms {
            let (what, i, ok) = match s {
                GenSym::T(i) | GenSym::Tinv(i) => ("T", *i, *i >= 1 && *i < n),
                GenSym::X(i) => ("X", *i, *i >= 1 && *i <= n),
                GenSym::Y(i) => ("Y", *i, *i >= 1 && *i <= n),
                GenSym::Eps(k) => ("Eps", *k, *k <= n),
                _ => continue,
            };
            if !ok {
                return Err(Error::IndexOutOfRange { what, index: i, rank: n });
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.syms.iter().map(sym_to_json).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("word must be a JSON list".into()))?;
        arr.iter().map(sym_from_json).collect::<Result<Vec<_>>>().map(GeneratorWord::new)
    }
}

fn sym_to_json(s: &GenSym) -> Value {
    match s {
        GenSym::T(i) => json!(["T", i]),
        GenSym::Tinv(i) => json!(["Tinv", i]),
        GenSym::X(i) => json!(["X", i]),
        GenSym::Pi => json!(["Pi"]),
        GenSym::Y(i) => json!(["Y", i]),
        GenSym::Eps(k) => json!(["Eps", k]),
        GenSym::PiTilde => json!(["PiTilde"]),
        GenSym::Scalar(c) => json!(["Scalar", c.to_string()]),
    }
}

/// Split a tagged JSON symbol `["Tag", arg?]` into its parts.
pub(crate) fn tagged(v: &Value) -> Result<(&str, Option<&Value>)> {
    let arr = v.as_array().filter(|a| !a.is_empty() && a.len() <= 2);
    let arr = arr.ok_or_else(|| Error::Parse(format!("bad symbol {v}")))?;
    let tag = arr[0].as_str().ok_or_else(|| Error::Parse(format!("bad symbol tag in {v}")))?;
    Ok((tag, arr.get(1)))
}

pub(crate) fn index_arg(tag: &str, arg: Option<&Value>) -> Result<usize> {
    arg.and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("symbol {tag} needs a nonnegative integer index")))
}

fn sym_from_json(v: &Value) -> Result<GenSym> {
    let (tag, arg) = tagged(v)?;
    let idx = || index_arg(tag, arg);
    Ok(match tag {
        "T" => GenSym::T(idx()?),
        "Tinv" => GenSym::Tinv(idx()?),
        "X" => GenSym::X(idx()?),
        "Y" => GenSym::Y(idx()?),
        "Eps" => GenSym::Eps(idx()?),
        "Pi" => GenSym::Pi,
        "PiTilde" => GenSym::PiTilde,
        "Scalar" => {
            let s = arg
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("Scalar needs a string argument".into()))?;
            GenSym::Scalar(s.parse().map_err(|e| Error::Parse(format!("{e}")))?)
        }
        other => return Err(Error::Parse(format!("unknown generator {other:?}"))),
    })
}

impl fmt::Display for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSym::T(i) => write!(f, "T{i}"),
            GenSym::Tinv(i) => write!(f, "T{i}^-1"),
            GenSym::X(i) => write!(f, "X{i}"),
            GenSym::Pi => f.write_str("pi"),
            GenSym::Y(i) => write!(f, "Y{i}"),
            GenSym::Eps(k) => write!(f, "eps{k}"),
            GenSym::PiTilde => f.write_str("pi~"),
            GenSym::Scalar(c) => write!(f, "({c})"),
        }
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syms.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.syms.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let w = GeneratorWord::new(vec![
            GenSym::T(1),
            GenSym::Tinv(3),
            GenSym::X(2),
            GenSym::Pi,
            GenSym::Y(1),
            GenSym::Eps(2),
            GenSym::PiTilde,
        ]);
        let j = w.to_json();
        assert_eq!(j.to_string(), r#"[["T",1],["Tinv",3],["X",2],["Pi"],["Y",1],["Eps",2],["PiTilde"]]"#);
        assert_eq!(GeneratorWord::from_json(&j).unwrap(), w);
    }

    #[test]
    fn validation_rejects_bad_indices() {
        assert!(GeneratorWord::new(vec![GenSym::T(2)]).validate(2).is_err());
        assert!(GeneratorWord::new(vec![GenSym::Eps(3)]).validate(3).is_ok());
        assert!(GeneratorWord::from_json(&serde_json::json!([["Q", 1]])).is_err());
    }
}
