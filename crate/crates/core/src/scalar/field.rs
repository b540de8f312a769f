use std::fmt::Debug;

use num_bigint::BigInt;

use super::{QtScalar, ScalarError};

/// Coefficient field for module vectors. Every realization is generic over
/// this, so the same action code runs in `Q(q,t)` or in a prime field at a
/// fixed specialization of `(q, t)`.
pub trait Field: Clone + PartialEq + Debug + Send + Sync + 'static {
    /// Data needed to specialize an element of `Q(q,t)` into this field.
    type Point: Clone + Debug + Send + Sync;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, ScalarError>;

    fn div(&self, o: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&o.inv()?))
    }

    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }

    fn from_i64(v: i64) -> Self;

    fn from_bigint(v: &BigInt) -> Self;

    /// Image of an exact scalar; fails at a pole.
    fn from_qt(a: &QtScalar, at: &Self::Point) -> Result<Self, ScalarError>;

    /// Lossless exact form, if this field is `Q(q,t)` itself.
    fn as_qt(&self) -> Option<&QtScalar> {
        None
    }

    /// Printable exact form; prime-field elements print as their residue.
    fn to_display(&self) -> QtScalar;

    /// Pivot preference for row reduction; smaller is better.
    fn weight(&self) -> (u32, usize) {
        (0, 0)
    }
}

/// `x^e` by repeated squaring.
pub fn pow<K: Field>(x: &K, mut e: u32) -> K {
    let mut base = x.clone();
    let mut acc = K::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base);
        }
        e >>= 1;
        if e > 0 {
            base = base.mul(&base);
        }
    }
    acc
}

/// `x^e` for a possibly negative exponent.
pub fn ipow<K: Field>(x: &K, e: i32) -> Result<K, ScalarError> {
    let p = pow(x, e.unsigned_abs());
    if e < 0 {
        p.inv()
    } else {
        Ok(p)
    }
}
