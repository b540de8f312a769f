//! The polynomial representation on `Q(q,t)[x_1..x_n]`.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::scalar::{pow, Field};
use crate::vector::{Exps, Key, Vector};

use super::{check_t_index, check_x_index, monomials, Consts, Realization};

/// Which coefficient the Demazure–Lusztig operator carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TVariant {
    /// `s_i f + (1-q) x_i (f - s_i f)/(x_i - x_{i+1})`.
    Standard,
    /// The same with `(q-1)`; violates the quadratic relation.
    SignFlipped,
}

pub struct PolyModule<K: Field> {
    n: usize,
    consts: Consts<K>,
    variant: TVariant,
}

impl<K: Field> PolyModule<K> {
    pub fn new(n: usize, point: K::Point) -> Result<Self> {
        Self::with_variant(n, point, TVariant::Standard)
    }

    pub fn with_variant(n: usize, point: K::Point, variant: TVariant) -> Result<Self> {
        assert!(n >= 1, "rank must be positive");
        Ok(PolyModule { n, consts: Consts::new(point)?, variant })
    }

    pub fn variant(&self) -> TVariant {
        self.variant
    }

    /// Checked `T_i`.
    pub fn t(&self, f: &Vector<K>, i: usize) -> Result<Vector<K>> {
        check_t_index(self.n, i)?;
        Ok(self.apply_t(f, i))
    }

    /// Checked `T_i^{-1}`.
    pub fn t_inv(&self, f: &Vector<K>, i: usize) -> Result<Vector<K>> {
        check_t_index(self.n, i)?;
        Ok(self.apply_t_inv(f, i))
    }

    /// Checked `X_i`.
    pub fn x(&self, f: &Vector<K>, i: usize) -> Result<Vector<K>> {
        check_x_index(self.n, i)?;
        Ok(self.apply_x(f, i))
    }

    pub fn pi(&self, f: &Vector<K>) -> Vector<K> {
        self.apply_pi(f)
    }
}

fn swap_key(k: &Key, i: usize) -> Key {
    let mut nk = k.clone();
    nk.exps.swap(i - 1, i);
    nk
}

/// Exact quotient of `f` by `x_i - x_{i+1}`.
///
/// Panics if the remainder is nonzero: callers only divide antisymmetrized
/// inputs, so a remainder means the operator conventions are broken.
pub fn divide_by_root<K: Field>(f: &Vector<K>, i: usize) -> Vector<K> {
    let (a, b) = (i - 1, i);
    // Group by the exponents outside positions a, b; inside a group, work on
    // the bivariate remainder keyed by (exp_a, exp_b).
    let mut groups: BTreeMap<(Exps, u32), BTreeMap<(u8, u8), K>> = BTreeMap::new();
    for (k, c) in f.iter() {
        let mut rest = k.exps.clone();
        let (ea, eb) = (rest[a], rest[b]);
        rest[a] = 0;
        rest[b] = 0;
        groups.entry((rest, k.tab)).or_default().insert((ea, eb), c.clone());
    }
    let mut out = Vector::zero();
    for ((rest, tab), mut rem) in groups {
        while let Some(((ea, eb), c)) = rem.pop_last() {
            assert!(ea > 0, "nonzero remainder in divided difference at x_{i}");
            let mut exps = rest.clone();
            exps[a] = ea - 1;
            exps[b] = eb;
            out.add_term(Key { exps, tab }, c.clone());
            let slot = rem.entry((ea - 1, eb + 1)).or_insert_with(K::zero);
            *slot = slot.add(&c);
            if slot.is_zero() {
                rem.remove(&(ea - 1, eb + 1));
            }
        }
    }
    out
}

impl<K: Field> Realization<K> for PolyModule<K> {
    fn rank(&self) -> usize {
        self.n
    }

    fn consts(&self) -> &Consts<K> {
        &self.consts
    }

    fn basis(&self, d: u32) -> Vec<Key> {
        monomials(self.n, d).iter().map(|e| Key::new(e, 0)).collect()
    }

    fn apply_t(&self, f: &Vector<K>, i: usize) -> Vector<K> {
        let sf = f.map_keys(|k| Some(swap_key(k, i)));
        let dd = divide_by_root(&f.sub(&sf), i);
        let c = match self.variant {
            TVariant::Standard => &self.consts.one_minus_q,
            TVariant::SignFlipped => &self.consts.q_minus_one,
        };
        let mut out = sf;
        out.axpy(c, &dd.times_x(i));
        out
    }

    fn apply_t_inv(&self, f: &Vector<K>, i: usize) -> Vector<K> {
        let mut out = self.apply_t(f, i).scale(&self.consts.q_inv);
        out.axpy(&self.consts.one_minus_q_inv, f);
        out
    }

    fn apply_pi(&self, f: &Vector<K>) -> Vector<K> {
        let n = self.n;
        let mut out = Vector::zero();
        for (k, c) in f.iter() {
            let last = k.exps[n - 1];
            let mut exps = Exps::with_capacity(n);
            exps.push(last);
            exps.extend_from_slice(&k.exps[..n - 1]);
            let coeff = c.mul(&pow(&self.consts.t, last as u32));
            out.add_term(Key { exps, tab: k.tab }, coeff);
        }
        out
    }

    fn describe(&self) -> String {
        match self.variant {
            TVariant::Standard => format!("poly(n={})", self.n),
            TVariant::SignFlipped => format!("poly-signflip(n={})", self.n),
        }
    }
}

/// `Ξ`: set `x_{n+1}` to zero and drop the last variable.
pub fn xi_truncate<K: Field>(f: &Vector<K>) -> Vector<K> {
    f.map_keys(|k| {
        let n1 = k.exps.len();
        (k.exps[n1 - 1] == 0).then(|| Key { exps: Exps::from_slice(&k.exps[..n1 - 1]), tab: k.tab })
    })
}
