//! Sparse vectors over monomial (or monomial ⊗ tableau) keys.

use std::cmp::Ordering;
use std::collections::btree_map::{self, BTreeMap};

use smallvec::SmallVec;

use crate::scalar::Field;

pub type Exps = SmallVec<[u8; 10]>;

/// Basis label `x^exps ⊗ e_tab`. For the polynomial module `tab` is always 0.
///
/// Ordered by total degree, then exponent vectors in descending lex order
/// (so `x_1` precedes `x_2`), then tableau index.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Key {
    pub exps: Exps,
    pub tab: u32,
}

impl Key {
    pub fn new(exps: &[u8], tab: u32) -> Self {
        Key { exps: Exps::from_slice(exps), tab }
    }

    pub fn one(n: usize) -> Self {
        Key { exps: smallvec::smallvec![0; n], tab: 0 }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn rank(&self) -> usize {
        self.exps.len()
    }
}

impl Ord for Key {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| o.exps.cmp(&self.exps))
            .then_with(|| self.tab.cmp(&o.tab))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Finite linear combination of keys with no stored zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct Vector<K> {
    terms: BTreeMap<Key, K>,
}

impl<K: Field> Default for Vector<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Field> Vector<K> {
    pub fn zero() -> Self {
        Vector { terms: BTreeMap::new() }
    }

    pub fn basis(key: Key) -> Self {
        Self::term(key, K::one())
    }

    pub fn term(key: Key, c: K) -> Self {
        let mut v = Self::zero();
        v.add_term(key, c);
        v
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Key, K)>) -> Self {
        let mut v = Self::zero();
        for (k, c) in it {
            v.add_term(k, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn get(&self, key: &Key) -> Option<&K> {
        self.terms.get(key)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Key, K> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, Key, K> {
        self.terms.keys()
    }

    /// `self += c * key`.
    pub fn add_term(&mut self, key: Key, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &K, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &other.terms {
            self.add_term(k.clone(), x.mul(c));
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.axpy(&K::one(), o);
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.axpy(&K::one().neg(), o);
        r
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Vector { terms: self.terms.iter().map(|(k, x)| (k.clone(), x.mul(c))).collect() }
    }

    pub fn neg(&self) -> Self {
        Vector { terms: self.terms.iter().map(|(k, x)| (k.clone(), x.neg())).collect() }
    }

    /// Apply a key-wise linear map given as a per-key image function.
    pub fn map_keys(&self, mut f: impl FnMut(&Key) -> Option<Key>) -> Self {
        let mut r = Self::zero();
        for (k, x) in &self.terms {
            if let Some(nk) = f(k) {
                r.add_term(nk, x.clone());
            }
        }
        r
    }

    /// Multiply by `x_i` (1-based).
    pub fn times_x(&self, i: usize) -> Self {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|(k, x)| {
                    let mut nk = k.clone();
                    nk.exps[i - 1] += 1;
                    (nk, x.clone())
                })
                .collect(),
        }
    }

    /// Distinct degrees of the stored keys.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.terms.keys().map(Key::degree).collect();
        d.dedup();
        d
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|k| k.degree() == d)
    }

    pub fn map_coeffs<L: Field>(&self, mut f: impl FnMut(&K) -> L) -> Vector<L> {
        Vector::from_terms(self.terms.iter().map(|(k, x)| (k.clone(), f(x))))
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Key, K)> {
        self.terms.into_iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{qt, QtScalar};

    #[test]
    fn cancellation_removes_keys() {
        let k = Key::new(&[1, 0], 0);
        let mut v = Vector::term(k.clone(), qt("q"));
        v.add_term(k, qt("-q"));
        assert!(v.is_zero());
    }

    #[test]
    fn key_order_is_degree_then_descending_exponents() {
        let mut keys = [Key::new(&[0, 1], 0), Key::new(&[0, 0], 0), Key::new(&[1, 0], 0)];
        keys.sort();
        assert_eq!(keys[0].exps.as_slice(), &[0, 0]);
        assert_eq!(keys[1].exps.as_slice(), &[1, 0]);
        assert_eq!(keys[2].exps.as_slice(), &[0, 1]);
    }

    #[test]
    fn multiplication_by_variables_commutes() {
        let v: Vector<QtScalar> = Vector::from_terms([
            (Key::new(&[1, 0, 2], 0), qt("q-1")),
            (Key::new(&[0, 2, 1], 0), qt("t/q")),
        ]);
        assert_eq!(v.times_x(1).times_x(3), v.times_x(3).times_x(1));
        assert!(v.times_x(2).is_homogeneous_of(4));
    }
}
