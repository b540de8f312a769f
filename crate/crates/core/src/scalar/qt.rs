use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::field::{pow, Field};
use super::{parse, IntPoly2, ScalarError};

/// Reduced fraction in `Q(q,t)`.
///
/// The denominator is nonzero with positive graded-lex leading coefficient,
/// numerator and denominator are coprime, and zero is `0/1`. Because the
/// representation is canonical, structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QtScalar {
    num: IntPoly2,
    den: IntPoly2,
}

impl QtScalar {
    /// Canonical representative of `num/den`.
    pub fn normalize(num: IntPoly2, den: IntPoly2) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero_value());
        }
        if den.is_one() {
            return Ok(QtScalar { num, den });
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if d.leading_coeff().is_some_and(|c| c.is_negative()) {
            n = n.neg();
            d = d.neg();
        }
        Ok(QtScalar { num: n, den: d })
    }

    fn zero_value() -> Self {
        QtScalar { num: IntPoly2::zero(), den: IntPoly2::one() }
    }

    pub fn from_poly(p: IntPoly2) -> Self {
        QtScalar { num: p, den: IntPoly2::one() }
    }

    pub fn int(v: i64) -> Self {
        Self::from_poly(IntPoly2::constant(BigInt::from(v)))
    }

    pub fn q() -> Self {
        Self::from_poly(IntPoly2::q())
    }

    pub fn t() -> Self {
        Self::from_poly(IntPoly2::t())
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i32) -> Self {
        Self::mono_pow(e, 0)
    }

    pub fn t_pow(e: i32) -> Self {
        Self::mono_pow(0, e)
    }

    /// `q^a t^b` for integer exponents.
    pub fn mono_pow(a: i32, b: i32) -> Self {
        let num = IntPoly2::monomial(BigInt::one(), a.max(0) as u32, b.max(0) as u32);
        let den = IntPoly2::monomial(BigInt::one(), (-a).max(0) as u32, (-b).max(0) as u32);
        QtScalar { num, den }
    }

    pub fn numer(&self) -> &IntPoly2 {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly2 {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn neg(&self) -> Self {
        QtScalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    fn combine(&self, o: &Self, negate: bool) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { o.neg() } else { o.clone() };
        }
        let join = |x: &IntPoly2, y: &IntPoly2| if negate { x.sub(y) } else { x.add(y) };
        if self.den == o.den {
            let n = join(&self.num, &o.num);
            if self.den.is_one() {
                return Self::from_poly(n);
            }
            return Self::normalize(n, self.den.clone()).expect("nonzero denominator");
        }
        let g = self.den.gcd(&o.den);
        if g.is_one() {
            let n = join(&self.num.mul(&o.den), &o.num.mul(&self.den));
            if n.is_zero() {
                return Self::zero_value();
            }
            return QtScalar { num: n, den: self.den.mul(&o.den) };
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = o.den.div_exact(&g).expect("gcd divides");
        let n = join(&self.num.mul(&d1), &o.num.mul(&b1));
        if n.is_zero() {
            return Self::zero_value();
        }
        let g2 = n.gcd(&g);
        if g2.is_one() {
            return QtScalar { num: n, den: b1.mul(&o.den) };
        }
        let num = n.div_exact(&g2).expect("gcd divides");
        let den = b1.mul(&o.den.div_exact(&g2).expect("gcd divides"));
        QtScalar { num, den }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero_value();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let cut = |x: &IntPoly2, g: &IntPoly2| {
            if g.is_one() {
                x.clone()
            } else {
                x.div_exact(g).expect("gcd divides")
            }
        };
        let num = cut(&self.num, &g1).mul(&cut(&o.num, &g2));
        let den = cut(&self.den, &g2).mul(&cut(&o.den, &g1));
        QtScalar { num, den }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (mut n, mut d) = (self.den.clone(), self.num.clone());
        if d.leading_coeff().is_some_and(|c| c.is_negative()) {
            n = n.neg();
            d = d.neg();
        }
        Ok(QtScalar { num: n, den: d })
    }

    pub fn div(&self, o: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let m = e.unsigned_abs();
        Ok(QtScalar { num: base.num.pow(m), den: base.den.pow(m) })
    }

    /// Substitute `q -> q0`, `t -> t0` in any field.
    pub fn eval<K: Field>(&self, q0: &K, t0: &K) -> Result<K, ScalarError> {
        let n = eval_poly(&self.num, q0, t0);
        if self.den.is_one() {
            return Ok(n);
        }
        let d = eval_poly(&self.den, q0, t0);
        if d.is_zero() {
            return Err(ScalarError::PoleAtPoint);
        }
        Ok(n.mul(&d.inv()?))
    }
}

fn eval_poly<K: Field>(p: &IntPoly2, q0: &K, t0: &K) -> K {
    let mut acc = K::zero();
    for (a, b, c) in p.terms() {
        let term = K::from_bigint(c).mul(&pow(q0, a)).mul(&pow(t0, b));
        acc = acc.add(&term);
    }
    acc
}

/// `[m]_q = 1 + q + ... + q^(m-1)`.
pub fn q_int(m: u32) -> QtScalar {
    QtScalar::from_poly(IntPoly2::from_terms((0..m).map(|e| (e, 0, BigInt::one()))))
}

/// `[m]_q! = [1]_q [2]_q ... [m]_q`.
pub fn q_factorial(m: u32) -> QtScalar {
    (1..=m).fold(QtScalar::int(1), |acc, i| acc.mul(&q_int(i)))
}

impl Field for QtScalar {
    type Point = ();

    fn zero() -> Self {
        Self::zero_value()
    }

    fn one() -> Self {
        Self::int(1)
    }

    fn is_zero(&self) -> bool {
        QtScalar::is_zero(self)
    }

    fn add(&self, o: &Self) -> Self {
        QtScalar::add(self, o)
    }

    fn sub(&self, o: &Self) -> Self {
        QtScalar::sub(self, o)
    }

    fn mul(&self, o: &Self) -> Self {
        QtScalar::mul(self, o)
    }

    fn neg(&self) -> Self {
        QtScalar::neg(self)
    }

    fn inv(&self) -> Result<Self, ScalarError> {
        QtScalar::inv(self)
    }

    fn from_i64(v: i64) -> Self {
        Self::int(v)
    }

    fn from_bigint(v: &BigInt) -> Self {
        Self::from_poly(IntPoly2::constant(v.clone()))
    }

    fn from_qt(a: &QtScalar, _: &()) -> Result<Self, ScalarError> {
        Ok(a.clone())
    }

    fn as_qt(&self) -> Option<&QtScalar> {
        Some(self)
    }

    fn to_display(&self) -> QtScalar {
        self.clone()
    }

    fn weight(&self) -> (u32, usize) {
        (self.num.total_degree(), self.num.len())
    }
}

impl fmt::Display for QtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return self.num.write_compact(f);
        }
        if self.num.len() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            self.num.write_compact(f)?;
        }
        f.write_str("/")?;
        if is_bare_factor(&self.den) {
            self.den.write_compact(f)
        } else {
            write!(f, "({})", self.den)
        }
    }
}

/// True if the printed polynomial binds tighter than `/`: a constant or a
/// single variable power with coefficient one.
fn is_bare_factor(p: &IntPoly2) -> bool {
    if !p.is_monomial() {
        return false;
    }
    let (a, b, c) = p.terms().next().unwrap();
    (a == 0 && b == 0) || (c.is_one() && (a == 0 || b == 0))
}

impl fmt::Debug for QtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for QtScalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse_scalar(s)
    }
}

impl From<i64> for QtScalar {
    fn from(v: i64) -> Self {
        Self::int(v)
    }
}
