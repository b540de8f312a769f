use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{Field, QtScalar, ScalarError};

/// The Mersenne prime 2^61 - 1.
pub const P: u64 = (1u64 << 61) - 1;

/// Element of `Z/pZ`, `p = 2^61 - 1`, stored reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ModP(u64);

/// A specialization `q -> q0`, `t -> t0` in the prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModPoint {
    pub q: ModP,
    pub t: ModP,
}

impl ModPoint {
    pub fn new(q: u64, t: u64) -> Self {
        ModPoint { q: ModP::new(q), t: ModP::new(t) }
    }
}

impl ModP {
    pub fn new(v: u64) -> Self {
        ModP(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn reduce128(x: u128) -> u64 {
        let lo = (x as u64) & P;
        let hi = (x >> 61) as u64;
        let s = lo + hi;
        let s = (s & P) + (s >> 61);
        if s >= P {
            s - P
        } else {
            s
        }
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = ModP(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn from_bigint(b: &BigInt) -> Self {
        let r = b % BigInt::from(P);
        let r = if r < BigInt::from(0) { r + BigInt::from(P) } else { r };
        ModP(r.to_u64().expect("reduced residue fits in u64"))
    }
}

impl fmt::Debug for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for ModP {
    type Point = ModPoint;

    fn zero() -> Self {
        ModP(0)
    }

    fn one() -> Self {
        ModP(1)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    #[inline]
    fn add(&self, o: &Self) -> Self {
        let s = self.0 + o.0;
        ModP(if s >= P { s - P } else { s })
    }

    #[inline]
    fn sub(&self, o: &Self) -> Self {
        ModP(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }

    #[inline]
    fn mul(&self, o: &Self) -> Self {
        ModP(Self::reduce128(self.0 as u128 * o.0 as u128))
    }

    fn neg(&self) -> Self {
        ModP(if self.0 == 0 { 0 } else { P - self.0 })
    }

    fn inv(&self) -> Result<Self, ScalarError> {
        if self.0 == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self.pow(P - 2))
    }

    fn from_i64(v: i64) -> Self {
        if v >= 0 {
            ModP::new(v as u64)
        } else {
            ModP::new(v.unsigned_abs()).neg()
        }
    }

    fn from_bigint(v: &BigInt) -> Self {
        ModP::from_bigint(v)
    }

    fn from_qt(a: &QtScalar, at: &ModPoint) -> Result<Self, ScalarError> {
        a.eval(&at.q, &at.t)
    }

    fn to_display(&self) -> QtScalar {
        QtScalar::int(self.0 as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        for v in [1u64, 2, 3, 12345678901234, P - 1] {
            let x = ModP::new(v);
            assert_eq!(x.mul(&x.inv().unwrap()), ModP::one());
        }
        assert!(ModP::zero().inv().is_err());
    }

    #[test]
    fn negative_integers_wrap() {
        assert_eq!(ModP::from_i64(-1).add(&ModP::one()), ModP::zero());
        assert_eq!(ModP::from_bigint(&BigInt::from(-5)), ModP::from_i64(-5));
    }
}
