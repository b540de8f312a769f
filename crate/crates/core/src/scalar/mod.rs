//! Exact arithmetic in `Q(q,t)` and its prime-field specializations.

mod field;
mod intpoly;
mod modp;
mod parse;
mod qt;
mod upoly;

pub use field::{ipow, pow, Field};
pub use intpoly::IntPoly2;
pub use modp::{ModP, ModPoint, P as MODULUS};
pub use qt::{q_factorial, q_int, QtScalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}

/// Shorthand for parsing scalar literals; panics on malformed input.
pub fn qt(text: &str) -> QtScalar {
    text.parse().unwrap_or_else(|e| panic!("bad scalar literal {text:?}: {e}"))
}

#[cfg(test)]
mod tests;
