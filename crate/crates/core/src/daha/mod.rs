//! Generator actions shared by every realization of the positive DAHA.

pub mod poly;
pub mod word;

use crate::error::{Error, Result};
use crate::scalar::{ipow, q_int, Field, QtScalar, ScalarError};
use crate::vector::{Key, Vector};

pub use poly::{PolyModule, TVariant};
pub use word::{GenSym, GeneratorWord};

/// Frequently used field constants, specialized once per realization.
#[derive(Clone, Debug)]
pub struct Consts<K: Field> {
    pub point: K::Point,
    pub q: K,
    pub q_inv: K,
    pub t: K,
    pub t_inv: K,
    pub one_minus_q: K,
    pub q_minus_one: K,
    pub q_inv_minus_one: K,
    pub one_minus_q_inv: K,
}

impl<K: Field> Consts<K> {
    pub fn new(point: K::Point) -> Result<Self> {
        let lift = |s: &str| K::from_qt(&crate::scalar::qt(s), &point);
        Ok(Consts {
            q: lift("q")?,
            q_inv: lift("1/q")?,
            t: lift("t")?,
            t_inv: lift("1/t")?,
            one_minus_q: lift("1-q")?,
            q_minus_one: lift("q-1")?,
            q_inv_minus_one: lift("1/q-1")?,
            one_minus_q_inv: lift("1-1/q")?,
            point,
        })
    }

    pub fn lift(&self, a: &QtScalar) -> Result<K, ScalarError> {
        K::from_qt(a, &self.point)
    }

    pub fn q_pow(&self, e: i32) -> K {
        ipow(&self.q, e).expect("q is invertible")
    }

    /// `[m]_q` in this field.
    pub fn q_int(&self, m: u32) -> Result<K, ScalarError> {
        self.lift(&q_int(m))
    }
}

/// A graded module for the positive DAHA of rank `n`, given by its
/// primitive actions. Everything else (`Y_i`, `ε_k`, words) is derived.
pub trait Realization<K: Field>: Send + Sync {
    fn rank(&self) -> usize;
    fn consts(&self) -> &Consts<K>;

    /// Basis keys of total degree `d`, in increasing key order.
    fn basis(&self, d: u32) -> Vec<Key>;

    fn apply_t(&self, v: &Vector<K>, i: usize) -> Vector<K>;
    fn apply_t_inv(&self, v: &Vector<K>, i: usize) -> Vector<K>;
    fn apply_pi(&self, v: &Vector<K>) -> Vector<K>;

    fn apply_x(&self, v: &Vector<K>, i: usize) -> Vector<K> {
        v.times_x(i)
    }

    fn describe(&self) -> String;
}

fn check(what: &'static str, index: usize, lo: usize, hi: usize, rank: usize) -> Result<()> {
    if index < lo || index > hi {
        return Err(Error::IndexOutOfRange { what, index, rank });
    }
    Ok(())
}

pub fn check_t_index(n: usize, i: usize) -> Result<()> {
    check("T", i, 1, n.saturating_sub(1), n)
}

pub fn check_x_index(n: usize, i: usize) -> Result<()> {
    check("X", i, 1, n, n)
}

/// `Y_i = q^(n-i+1) T_{i-1}…T_1 π T_{n-1}^{-1}…T_i^{-1}`.
pub fn apply_y<K: Field, M: Realization<K> + ?Sized>(m: &M, v: &Vector<K>, i: usize) -> Result<Vector<K>> {
    let n = m.rank();
    check("Y", i, 1, n, n)?;
    let mut w = v.clone();
    for j in i..n {
        w = m.apply_t_inv(&w, j);
    }
    w = m.apply_pi(&w);
    for j in 1..i {
        w = m.apply_t(&w, j);
    }
    Ok(w.scale(&m.consts().q_pow((n - i + 1) as i32)))
}

/// The partial trivial idempotent `ε_k`, by the recursion from `ε_n = 1`.
pub fn apply_eps<K: Field, M: Realization<K> + ?Sized>(m: &M, v: &Vector<K>, k: usize) -> Result<Vector<K>> {
    let n = m.rank();
    if k > n {
        return Err(Error::IndexOutOfRange { what: "Eps", index: k, rank: n });
    }
    let c = m.consts();
    let mut v = v.clone();
    for stage in (k..n.saturating_sub(1)).rev() {
        let mut acc = v.clone();
        let mut w = v;
        let mut qj = K::one();
        for j in 1..(n - stage) {
            w = m.apply_t_inv(&w, stage + j);
            qj = qj.mul(&c.q);
            acc.axpy(&qj, &w);
        }
        let norm = c.q_int((n - stage) as u32)?.inv()?;
        v = acc.scale(&norm);
    }
    Ok(v)
}

/// `π̃ = X_1 T_1^{-1}…T_{n-1}^{-1}`.
pub fn apply_pi_tilde<K: Field, M: Realization<K> + ?Sized>(m: &M, v: &Vector<K>) -> Vector<K> {
    let n = m.rank();
    let mut w = v.clone();
    for j in (1..n).rev() {
        w = m.apply_t_inv(&w, j);
    }
    m.apply_x(&w, 1)
}

/// `θ_i = q^(i-1) T_{i-1}^{-1}…T_1^{-1} π T_{n-1}…T_i`.
pub fn apply_theta<K: Field, M: Realization<K> + ?Sized>(m: &M, v: &Vector<K>, i: usize) -> Result<Vector<K>> {
    let n = m.rank();
    check("theta", i, 1, n, n)?;
    let mut w = v.clone();
    for j in i..n {
        w = m.apply_t(&w, j);
    }
    w = m.apply_pi(&w);
    for j in 1..i {
        w = m.apply_t_inv(&w, j);
    }
    Ok(w.scale(&m.consts().q_pow(i as i32 - 1)))
}

/// Checked single-generator application.
pub fn apply_sym<K: Field, M: Realization<K> + ?Sized>(m: &M, v: &Vector<K>, s: &GenSym) -> Result<Vector<K>> {
    let n = m.rank();
    Ok(match s {
        GenSym::T(i) => {
            check_t_index(n, *i)?;
            m.apply_t(v, *i)
        }
        GenSym::Tinv(i) => {
            check_t_index(n, *i)?;
            m.apply_t_inv(v, *i)
        }
        GenSym::X(i) => {
            check_x_index(n, *i)?;
            m.apply_x(v, *i)
        }
        GenSym::Pi => m.apply_pi(v),
        GenSym::Y(i) => apply_y(m, v, *i)?,
        GenSym::Eps(k) => apply_eps(m, v, *k)?,
        GenSym::PiTilde => apply_pi_tilde(m, v),
        GenSym::Scalar(c) => v.scale(&m.consts().lift(c)?),
    })
}

/// Apply a word right to left; the empty word is the identity.
pub fn apply_word<K: Field, M: Realization<K> + ?Sized>(m: &M, v: &Vector<K>, w: &GeneratorWord) -> Result<Vector<K>> {
    let mut out = v.clone();
    for s in w.symbols().iter().rev() {
        out = apply_sym(m, &out, s)?;
    }
    Ok(out)
}

/// All exponent vectors of length `n` and total degree `d`, in key order.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u8>> {
    fn rec(n: usize, d: u32, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() + 1 == n {
            cur.push(d as u8);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=d).rev() {
            cur.push(e as u8);
            rec(n, d - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}
