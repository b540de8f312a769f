//! Text and JSON forms of module vectors.
//!
//! Text: `(q-1)*x_1 + (q-1)*x_2`, with an optional tableau factor such as
//! `x_1*e(1,2|3)` for induced modules. JSON: a list of
//! `{"exponents": [...], "tableau": [[...]], "coeff": "..."}` records, where
//! `tableau` is omitted for the polynomial module.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalar::{Field, QtScalar, ScalarError};
use crate::syt::StandardTableau;
use crate::vector::{Exps, Key, Vector};

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn monomial_text(k: &Key, tableaux: Option<&[StandardTableau]>) -> String {
    let mut parts = Vec::new();
    for (i, &e) in k.exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x_{}", i + 1)),
            _ => parts.push(format!("x_{}^{e}", i + 1)),
        }
    }
    if let Some(t) = tableaux {
        parts.push(t[k.tab as usize].to_string());
    }
    parts.join("*")
}

fn coeff_text(c: &QtScalar) -> String {
    if c.numer().len() > 1 || !c.is_polynomial() {
        format!("({c})")
    } else {
        c.to_string()
    }
}

/// Printable form; `tableaux` labels the tableau index of each key.
/// [`format_vector`] over any field.
pub fn format_any<K: Field>(v: &Vector<K>, tableaux: Option<&[StandardTableau]>) -> String {
    format_vector(&v.map_coeffs(|c| c.to_display()), tableaux)
}

pub fn format_vector(v: &Vector<QtScalar>, tableaux: Option<&[StandardTableau]>) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (k, c)) in v.iter().enumerate() {
        let negative = c.numer().len() == 1 && c.numer().leading_coeff().is_some_and(|x| x.sign() == num_bigint::Sign::Minus);
        let mag = if negative { c.neg() } else { c.clone() };
        let mono = monomial_text(k, tableaux);
        let body = match (mag.is_one(), mono.is_empty()) {
            (true, true) => "1".to_string(),
            (true, false) => mono,
            (false, true) => coeff_text(&mag),
            (false, false) => format!("{}*{mono}", coeff_text(&mag)),
        };
        match (idx, negative) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

/// Split `s` at top-level occurrences of `seps`, keeping the separator that
/// precedes each piece. A sign right after `^` belongs to an exponent.
fn split_top(s: &str, seps: &[char]) -> Vec<(Option<char>, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut lead: Option<char> = None;
    let mut prev_sig: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let sign = ch == '+' || ch == '-';
        let unary = sign && matches!(prev_sig, Some('^' | '*' | '/' | '('));
        if depth == 0 && seps.contains(&ch) && !unary {
            if sign && prev_sig.is_none() {
                lead = Some(ch);
            } else {
                out.push((lead, std::mem::take(&mut cur)));
                lead = Some(ch);
            }
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev_sig = Some(ch);
        }
    }
    out.push((lead, cur));
    out
}

fn parse_tableau_text(s: &str) -> Result<StandardTableau> {
    let inner = s
        .strip_prefix("e(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| perr(format!("bad tableau {s:?}")))?;
    let rows = inner
        .split('|')
        .map(|r| {
            r.split(',')
                .map(|e| e.trim().parse::<u8>().map_err(|_| perr(format!("bad tableau {s:?}"))))
                .collect::<Result<Vec<u8>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    StandardTableau::from_rows(rows)
}

fn lookup_tab(t: &StandardTableau, tableaux: &[StandardTableau]) -> Result<u32> {
    tableaux
        .iter()
        .position(|x| x == t)
        .map(|p| p as u32)
        .ok_or_else(|| perr(format!("tableau {t} does not belong to this module")))
}

/// Parse the text form at rank `n`. For induced modules, pass the tableau
/// list; every term must then carry exactly one tableau factor.
pub fn parse_vector(text: &str, n: usize, tableaux: Option<&[StandardTableau]>) -> Result<Vector<QtScalar>> {
    let mut v = Vector::zero();
    let text = text.trim();
    if text == "0" {
        return Ok(v);
    }
    for (sign, term) in split_top(text, &['+', '-']) {
        let term = term.trim();
        if term.is_empty() {
            return Err(perr(format!("empty term in {text:?}")));
        }
        let mut coeff = QtScalar::int(if sign == Some('-') { -1 } else { 1 });
        let mut exps: Exps = smallvec::smallvec![0; n];
        let mut tab: Option<u32> = None;
        for (_, factor) in split_top(term, &['*']) {
            let f = factor.trim();
            if let Some(rest) = f.strip_prefix("x_") {
                let (idx, pow) = match rest.split_once('^') {
                    Some((a, b)) => (a, b.trim().parse::<u8>().map_err(|_| perr(format!("bad exponent in {f:?}")))?),
                    None => (rest, 1),
                };
                let i: usize = idx.trim().parse().map_err(|_| perr(format!("bad variable {f:?}")))?;
                if i == 0 || i > n {
                    return Err(Error::IndexOutOfRange { what: "x", index: i, rank: n });
                }
                exps[i - 1] += pow;
            } else if f.starts_with("e(") {
                let list = tableaux.ok_or_else(|| perr("tableau factor in a polynomial vector"))?;
                if tab.replace(lookup_tab(&parse_tableau_text(f)?, list)?).is_some() {
                    return Err(perr(format!("two tableau factors in {term:?}")));
                }
            } else {
                let c: QtScalar = f.parse().map_err(|e: ScalarError| perr(e.to_string()))?;
                coeff = coeff.mul(&c);
            }
        }
        let tab = match (tableaux, tab) {
            (Some(_), None) => return Err(perr(format!("term {term:?} has no tableau factor"))),
            (_, t) => t.unwrap_or(0),
        };
        v.add_term(Key { exps, tab }, coeff);
    }
    Ok(v)
}

pub fn vector_to_json(v: &Vector<QtScalar>, tableaux: Option<&[StandardTableau]>) -> Value {
    Value::Array(
        v.iter()
            .map(|(k, c)| {
                let mut rec = json!({ "exponents": k.exps.to_vec(), "coeff": c.to_string() });
                if let Some(t) = tableaux {
                    rec["tableau"] = json!(t[k.tab as usize].rows());
                }
                rec
            })
            .collect(),
    )
}

pub fn vector_from_json(j: &Value, n: usize, tableaux: Option<&[StandardTableau]>) -> Result<Vector<QtScalar>> {
    let arr = j.as_array().ok_or_else(|| perr("vector JSON must be a list"))?;
    let mut v = Vector::zero();
    for rec in arr {
        let exps: Vec<u8> = rec
            .get("exponents")
            .and_then(Value::as_array)
            .ok_or_else(|| perr("record needs \"exponents\""))?
            .iter()
            .map(|e| e.as_u64().and_then(|x| u8::try_from(x).ok()).ok_or_else(|| perr("bad exponent")))
            .collect::<Result<_>>()?;
        if exps.len() != n {
            return Err(perr(format!("exponent vector {exps:?} does not have length {n}")));
        }
        let c: QtScalar = rec
            .get("coeff")
            .and_then(Value::as_str)
            .ok_or_else(|| perr("record needs a string \"coeff\""))?
            .parse()
            .map_err(|e: ScalarError| perr(e.to_string()))?;
        let tab = match (tableaux, rec.get("tableau")) {
            (Some(list), Some(t)) => {
                let rows: Vec<Vec<u8>> =
                    serde_json::from_value(t.clone()).map_err(|e| perr(format!("bad tableau: {e}")))?;
                lookup_tab(&StandardTableau::from_rows(rows)?, list)?
            }
            (Some(_), None) => return Err(perr("induced vector record needs \"tableau\"")),
            (None, Some(_)) => return Err(perr("tableau given for a polynomial vector")),
            (None, None) => 0,
        };
        v.add_term(Key::new(&exps, tab), c);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qt;

    #[test]
    fn text_round_trip() {
        let v = parse_vector("(q-1)*x_1 + (q-1)*x_2", 2, None).unwrap();
        assert_eq!(v.get(&Key::new(&[1, 0], 0)), Some(&qt("q-1")));
        assert_eq!(format_vector(&v, None), "(q-1)*x_1 + (q-1)*x_2");
        let w = parse_vector("-q^-1*x_1*x_2 + 3 - x_2^2 + 1/(1+q)*x_1^2", 2, None).unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.get(&Key::new(&[1, 1], 0)), Some(&qt("-1/q")));
        let back = parse_vector(&format_vector(&w, None), 2, None).unwrap();
        assert_eq!(back, w);
        assert_eq!(format_vector(&Vector::zero(), None), "0");
        assert!(parse_vector("x_3", 2, None).is_err());
        assert!(parse_vector("x_1 +", 2, None).is_err());
    }

    #[test]
    fn tableau_terms() {
        let tabs = crate::syt::enumerate_syt(&crate::syt::YoungDiagram::new(vec![2, 1]).unwrap());
        let v = parse_vector("x_1*e(1,2|3) - q*e(1,3|2)", 3, Some(&tabs)).unwrap();
        assert_eq!(v.len(), 2);
        let text = format_vector(&v, Some(&tabs));
        assert_eq!(parse_vector(&text, 3, Some(&tabs)).unwrap(), v);
        let j = vector_to_json(&v, Some(&tabs));
        assert_eq!(vector_from_json(&j, 3, Some(&tabs)).unwrap(), v);
        assert!(parse_vector("x_1", 3, Some(&tabs)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let v = parse_vector("(q^2-t)/(1-q*t)*x_1^2 + x_2", 2, None).unwrap();
        let j = vector_to_json(&v, None);
        assert_eq!(vector_from_json(&j, 2, None).unwrap(), v);
        assert!(vector_from_json(&json!([{"exponents": [1], "coeff": "1"}]), 2, None).is_err());
    }
}
