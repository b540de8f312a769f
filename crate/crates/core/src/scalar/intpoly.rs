use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::upoly::{self, BPoly, UPoly};

/// Packed exponent pair. The high half is the total degree and the low half
/// the q-exponent, so integer order on the key is graded-lex order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mono(u64);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn new(q: u32, t: u32) -> Mono {
        Mono(((q as u64 + t as u64) << 32) | q as u64)
    }

    pub fn q(self) -> u32 {
        self.0 as u32
    }

    pub fn t(self) -> u32 {
        ((self.0 >> 32) as u32) - self.q()
    }

    pub fn degree(self) -> u32 {
        (self.0 >> 32) as u32
    }

    fn mul(self, o: Mono) -> Mono {
        Mono(self.0 + o.0)
    }

    fn divides(self, o: Mono) -> bool {
        self.q() <= o.q() && self.t() <= o.t()
    }

    fn div(self, o: Mono) -> Mono {
        Mono::new(self.q() - o.q(), self.t() - o.t())
    }

    fn meet(self, o: Mono) -> Mono {
        Mono::new(self.q().min(o.q()), self.t().min(o.t()))
    }
}

/// Sparse polynomial in `Z[q,t]`, terms kept in ascending graded-lex order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly2 {
    terms: Vec<(Mono, BigInt)>,
}

impl IntPoly2 {
    pub fn zero() -> Self {
        IntPoly2 { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn monomial(c: BigInt, qe: u32, te: u32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly2 { terms: vec![(Mono::new(qe, te), c)] }
    }

    /// Build from arbitrary `(q_exp, t_exp, coeff)` triples; duplicates are summed.
    pub fn from_terms<I>(it: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, BigInt)>,
    {
        let mut v: Vec<(Mono, BigInt)> =
            it.into_iter().map(|(a, b, c)| (Mono::new(a, b), c)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        Self::from_sorted_dups(v)
    }

    fn from_sorted_dups(v: Vec<(Mono, BigInt)>) -> Self {
        let mut out: Vec<(Mono, BigInt)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|(_, c)| c.is_zero()) {
            out.pop();
        }
        IntPoly2 { terms: out }
    }

    /// Terms in graded-lex ascending order as `(q_exp, t_exp, coeff)`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, u32, &BigInt)> + '_ {
        self.terms.iter().map(|(m, c)| (m.q(), m.t(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::ONE && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Mono::ONE)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.last().map_or(0, |(m, _)| m.degree())
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn neg(&self) -> Self {
        IntPoly2 { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.merge(o, true)
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &o.terms;
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        IntPoly2 { terms: out }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.terms.len() == 1 {
            return self.mul_term(o.terms[0].0, &o.terms[0].1);
        }
        if self.terms.len() == 1 {
            return o.mul_term(self.terms[0].0, &self.terms[0].1);
        }
        let mut v = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                v.push((ma.mul(*mb), ca * cb));
            }
        }
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Self::from_sorted_dups(v)
    }

    fn mul_term(&self, m: Mono, c: &BigInt) -> Self {
        IntPoly2 { terms: self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly2 { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    /// Largest monomial dividing every term.
    fn monomial_content(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else { return Mono::ONE };
        let mut m = *first;
        for (x, _) in it {
            m = m.meet(*x);
            if m == Mono::ONE {
                break;
            }
        }
        m
    }

    fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_mono(&self, m: Mono) -> Self {
        if m == Mono::ONE {
            return self.clone();
        }
        IntPoly2 { terms: self.terms.iter().map(|(a, c)| (a.div(m), c.clone())).collect() }
    }

    fn div_int(&self, d: &BigInt) -> Self {
        if d.is_one() {
            return self.clone();
        }
        IntPoly2 { terms: self.terms.iter().map(|(m, c)| (*m, c / d)).collect() }
    }

    fn to_bpoly(&self) -> BPoly {
        let mut out: BPoly = Vec::new();
        for (m, c) in &self.terms {
            let (qe, te) = (m.q() as usize, m.t() as usize);
            if out.len() <= te {
                out.resize(te + 1, Vec::new());
            }
            let row = &mut out[te];
            if row.len() <= qe {
                row.resize(qe + 1, BigInt::zero());
            }
            row[qe] += c;
        }
        for row in out.iter_mut() {
            upoly::trim(row);
        }
        upoly::btrim(&mut out);
        out
    }

    fn from_bpoly(p: &BPoly) -> Self {
        let mut v = Vec::new();
        for (te, row) in p.iter().enumerate() {
            for (qe, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    v.push((Mono::new(qe as u32, te as u32), c.clone()));
                }
            }
        }
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        IntPoly2 { terms: v }
    }

    fn to_upoly_q(&self) -> UPoly {
        let mut out: UPoly = Vec::new();
        for (m, c) in &self.terms {
            let e = m.q() as usize;
            if out.len() <= e {
                out.resize(e + 1, BigInt::zero());
            }
            out[e] += c;
        }
        out
    }

    fn to_upoly_t(&self) -> UPoly {
        let mut out: UPoly = Vec::new();
        for (m, c) in &self.terms {
            let e = m.t() as usize;
            if out.len() <= e {
                out.resize(e + 1, BigInt::zero());
            }
            out[e] += c;
        }
        out
    }

    fn from_upoly(p: &UPoly, in_q: bool) -> Self {
        let v = p
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| {
                let m = if in_q { Mono::new(e as u32, 0) } else { Mono::new(0, e as u32) };
                (m, c.clone())
            })
            .collect::<Vec<_>>();
        let mut p = IntPoly2 { terms: v };
        p.terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        p
    }

    fn only_q(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.t() == 0)
    }

    fn only_t(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.q() == 0)
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            let (m, c) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (a, x) in &self.terms {
                if !m.divides(*a) {
                    return None;
                }
                let (qc, r) = x.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                out.push((a.div(*m), qc));
            }
            return Some(IntPoly2 { terms: out });
        }
        let q = upoly::bdiv_exact(&self.to_bpoly(), &d.to_bpoly())?;
        Some(Self::from_bpoly(&q))
    }

    /// gcd with positive graded-lex leading coefficient; gcd(0, 0) = 0.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.sign_normalized();
        }
        if o.is_zero() {
            return self.sign_normalized();
        }
        let ma = self.monomial_content();
        let mb = o.monomial_content();
        let ca = self.int_content();
        let cb = o.int_content();
        let mono = ma.meet(mb);
        let ic = ca.gcd(&cb);
        let head = IntPoly2 { terms: vec![(mono, ic)] };
        if self.terms.len() == 1 || o.terms.len() == 1 {
            return head;
        }
        let a = self.div_mono(ma).div_int(&ca);
        let b = o.div_mono(mb).div_int(&cb);
        if a.is_constant() || b.is_constant() {
            return head;
        }
        let g = if a.only_q() && b.only_q() {
            Self::from_upoly(&upoly::gcd(&a.to_upoly_q(), &b.to_upoly_q()), true)
        } else if a.only_t() && b.only_t() {
            Self::from_upoly(&upoly::gcd(&a.to_upoly_t(), &b.to_upoly_t()), false)
        } else if a.only_q() || a.only_t() || b.only_q() || b.only_t() {
            // One side lives in a single variable: the gcd divides its content
            // with respect to the other variable.
            let (uni, other, in_q) = if a.only_q() {
                (&a, &b, true)
            } else if a.only_t() {
                (&a, &b, false)
            } else if b.only_q() {
                (&b, &a, true)
            } else {
                (&b, &a, false)
            };
            let u = if in_q { uni.to_upoly_q() } else { uni.to_upoly_t() };
            let cont = if in_q {
                upoly::bcontent(&other.to_bpoly())
            } else {
                upoly::bcontent(&other.to_bpoly_swapped())
            };
            Self::from_upoly(&upoly::gcd(&u, &cont), in_q)
        } else {
            Self::from_bpoly(&upoly::bgcd(&a.to_bpoly(), &b.to_bpoly()))
        };
        g.sign_normalized().mul(&head)
    }

    /// Outer variable q, inner variable t.
    fn to_bpoly_swapped(&self) -> BPoly {
        let mut out: BPoly = Vec::new();
        for (m, c) in &self.terms {
            let (qe, te) = (m.q() as usize, m.t() as usize);
            if out.len() <= qe {
                out.resize(qe + 1, Vec::new());
            }
            let row = &mut out[qe];
            if row.len() <= te {
                row.resize(te + 1, BigInt::zero());
            }
            row[te] += c;
        }
        for row in out.iter_mut() {
            upoly::trim(row);
        }
        upoly::btrim(&mut out);
        out
    }

    pub fn sign_normalized(&self) -> Self {
        if self.leading_coeff().is_some_and(|c| c.is_negative()) {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Evaluate with a caller-supplied ring: `lift` maps integers in, `qp`/`tp`
    /// are the substituted values, and `mul`/`add` are ring ops.
    pub fn eval_with<R: Clone>(
        &self,
        lift: impl Fn(&BigInt) -> R,
        qpow: impl Fn(u32) -> R,
        tpow: impl Fn(u32) -> R,
        mul: impl Fn(&R, &R) -> R,
        add: impl Fn(&R, &R) -> R,
        zero: R,
    ) -> R {
        let mut acc = zero;
        for (m, c) in &self.terms {
            let term = mul(&mul(&lift(c), &qpow(m.q())), &tpow(m.t()));
            acc = add(&acc, &term);
        }
        acc
    }

    pub(crate) fn write_compact(&self, f: &mut impl fmt::Write) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    f.write_char('-')?;
                }
            } else {
                f.write_char(if neg { '-' } else { '+' })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || *m == Mono::ONE {
                parts.push(mag.to_string());
            }
            for (name, e) in [("q", m.q()), ("t", m.t())] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for IntPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_compact(f)
    }
}

impl fmt::Debug for IntPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly2({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[(u32, u32, i64)]) -> IntPoly2 {
        IntPoly2::from_terms(v.iter().map(|&(a, b, c)| (a, b, BigInt::from(c))))
    }

    #[test]
    fn grlex_iteration_order() {
        let f = p(&[(0, 2, 1), (1, 0, 1), (2, 0, 1), (0, 0, 1), (1, 1, 1)]);
        let order: Vec<(u32, u32)> = f.terms().map(|(a, b, _)| (a, b)).collect();
        assert_eq!(order, vec![(0, 0), (1, 0), (0, 2), (1, 1), (2, 0)]);
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let f = p(&[(1, 0, 1), (0, 0, -1)]);
        let g = f.sub(&f);
        assert!(g.is_zero());
        assert_eq!(p(&[(1, 0, 2), (1, 0, -2)]), IntPoly2::zero());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = p(&[(1, 1, 1), (1, 0, -1)]); // q*t - q
        let b = p(&[(0, 1, 1), (0, 0, -1)]); // t - 1
        assert_eq!(a.gcd(&b), b);
        let x = p(&[(2, 0, 1), (0, 1, -1)]);
        let y = p(&[(1, 1, 1), (0, 0, 1)]);
        let z = p(&[(1, 0, 1), (0, 2, 3)]);
        assert_eq!(x.mul(&y).gcd(&x.mul(&z)), x);
    }

    #[test]
    fn display_is_compact() {
        assert_eq!(p(&[(1, 0, 1), (0, 0, -1)]).to_string(), "q-1");
        assert_eq!(p(&[(2, 0, 1), (0, 1, -1)]).to_string(), "q^2-t");
        assert_eq!(p(&[(1, 1, -3), (0, 0, 1)]).to_string(), "-3*q*t+1");
    }
}
