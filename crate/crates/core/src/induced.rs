//! Induced modules `Q(q,t)[X_1..X_n] ⊗ U_λ^(n)` and their connecting maps.

use std::sync::Arc;

use crate::daha::{monomials, Consts, Realization};
use crate::error::{Error, Result};
use crate::scalar::{pow, Field};
use crate::syt::{Seed, YoungDiagram};
use crate::vector::{Exps, Key, Vector};

pub struct InducedModule<K: Field> {
    seed: Arc<Seed<K>>,
    consts: Consts<K>,
}

impl<K: Field> InducedModule<K> {
    pub fn new(lambda: &YoungDiagram, n: usize, point: K::Point) -> Result<Self> {
        let consts = Consts::new(point)?;
        let seed = Arc::new(Seed::new(lambda, n, &consts)?);
        Ok(InducedModule { seed, consts })
    }

    pub fn seed(&self) -> &Seed<K> {
        &self.seed
    }

    pub fn lambda(&self) -> &YoungDiagram {
        &self.seed.lambda
    }
}

/// `x_i · (x^α - x^{s_i α})/(x_i - x_{i+1})` as `(exponents, sign)` terms.
fn shifted_divided_difference(exps: &Exps, i: usize) -> Vec<(Exps, bool)> {
    let (a, b) = (exps[i - 1], exps[i]);
    if a == b {
        return Vec::new();
    }
    let (hi, lo, positive) = if a > b { (a, b, true) } else { (b, a, false) };
    (0..hi - lo)
        .map(|j| {
            let mut e = exps.clone();
            e[i - 1] = hi - j;
            e[i] = lo + j;
            (e, positive)
        })
        .collect()
}

impl<K: Field> Realization<K> for InducedModule<K> {
    fn rank(&self) -> usize {
        self.seed.n
    }

    fn consts(&self) -> &Consts<K> {
        &self.consts
    }

    fn basis(&self, d: u32) -> Vec<Key> {
        let dim = self.seed.dim() as u32;
        monomials(self.seed.n, d)
            .iter()
            .flat_map(|e| (0..dim).map(move |tab| Key::new(e, tab)))
            .collect()
    }

    fn apply_t(&self, v: &Vector<K>, i: usize) -> Vector<K> {
        let c = &self.consts;
        let mut out = Vector::zero();
        for (k, x) in v.iter() {
            let mut sw = k.exps.clone();
            sw.swap(i - 1, i);
            for (tab, a) in self.seed.t_image(i, k.tab) {
                out.add_term(Key { exps: sw.clone(), tab: *tab }, a.mul(x));
            }
            let pos = c.one_minus_q.mul(x);
            let neg = pos.neg();
            for (e, sign) in shifted_divided_difference(&k.exps, i) {
                out.add_term(Key { exps: e, tab: k.tab }, if sign { pos.clone() } else { neg.clone() });
            }
        }
        out
    }

    fn apply_t_inv(&self, v: &Vector<K>, i: usize) -> Vector<K> {
        let c = &self.consts;
        let mut out = Vector::zero();
        for (k, x) in v.iter() {
            let mut sw = k.exps.clone();
            sw.swap(i - 1, i);
            for (tab, a) in self.seed.t_scaled_image(i, k.tab) {
                out.add_term(Key { exps: sw.clone(), tab: *tab }, a.mul(x));
            }
            let pos = c.q_inv_minus_one.mul(x);
            let neg = pos.neg();
            for (e, sign) in shifted_divided_difference(&k.exps, i) {
                out.add_term(Key { exps: e, tab: k.tab }, if sign { pos.clone() } else { neg.clone() });
            }
            out.add_term(k.clone(), c.one_minus_q_inv.mul(x));
        }
        out
    }

    fn apply_pi(&self, v: &Vector<K>) -> Vector<K> {
        let n = self.seed.n;
        let mut out = Vector::zero();
        for (k, x) in v.iter() {
            let last = k.exps[n - 1];
            let mut exps = Exps::with_capacity(n);
            exps.push(last);
            exps.extend_from_slice(&k.exps[..n - 1]);
            let scaled = x.mul(&pow(&self.consts.t, last as u32));
            for (tab, a) in self.seed.pi_image(k.tab) {
                out.add_term(Key { exps: exps.clone(), tab: *tab }, a.mul(&scaled));
            }
        }
        out
    }

    fn describe(&self) -> String {
        format!("murnaghan(lambda={}, n={})", self.seed.lambda, self.seed.n)
    }
}

/// A connecting map `V^(n+1) -> V^(n)` on keys.
#[derive(Clone, Debug)]
pub struct Connector {
    /// Tableau relabelling `κ`; `None` means the polynomial case (one tableau).
    kappa: Option<Vec<Option<u32>>>,
    /// Keep keys with a positive last exponent (dropping that exponent).
    /// Only used to build a deliberately broken map.
    keep_top: bool,
}

impl Connector {
    /// `Ξ`: set the last variable to zero.
    pub fn xi() -> Self {
        Connector { kappa: None, keep_top: false }
    }

    /// `Π = 1(α_{n+1} = 0) ⊗ κ`.
    pub fn pi<K: Field>(upper: &InducedModule<K>, lower: &InducedModule<K>) -> Result<Self> {
        Ok(Connector { kappa: Some(upper.seed().kappa_table(lower.seed())?), keep_top: false })
    }

    /// The same map, but also passing keys that contain the last variable.
    pub fn broken(&self) -> Self {
        Connector { kappa: self.kappa.clone(), keep_top: true }
    }

    pub fn map_key(&self, k: &Key) -> Option<Key> {
        let n1 = k.exps.len();
        if k.exps[n1 - 1] > 0 && !self.keep_top {
            return None;
        }
        let tab = match &self.kappa {
            None => k.tab,
            Some(t) => t[k.tab as usize]?,
        };
        Some(Key { exps: Exps::from_slice(&k.exps[..n1 - 1]), tab })
    }

    pub fn apply<K: Field>(&self, v: &Vector<K>) -> Vector<K> {
        v.map_keys(|k| self.map_key(k))
    }
}

/// `Π` on an induced vector at rank `n+1`.
pub fn pi_connect<K: Field>(upper: &InducedModule<K>, lower: &InducedModule<K>, v: &Vector<K>) -> Result<Vector<K>> {
    if v.keys().any(|k| k.rank() != upper.rank()) {
        return Err(Error::ShapeMismatch("vector rank differs from the upper module".into()));
    }
    Ok(Connector::pi(upper, lower)?.apply(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::daha::{PolyModule, Realization};
    use crate::scalar::{qt, QtScalar};

    fn x(e: &[u8], tab: u32) -> Vector<QtScalar> {
        Vector::basis(Key::new(e, tab))
    }

    #[test]
    fn divided_difference_terms() {
        let e = Exps::from_slice(&[1, 0]);
        let dd = shifted_divided_difference(&e, 1);
        assert_eq!(dd, vec![(Exps::from_slice(&[1, 0]), true)]);
        assert!(shifted_divided_difference(&Exps::from_slice(&[2, 2]), 1).is_empty());
        assert_eq!(shifted_divided_difference(&Exps::from_slice(&[0, 2]), 1).len(), 2);
    }

    #[test]
    fn empty_shape_matches_polynomials() {
        let lam = YoungDiagram::empty();
        for n in 1..=3usize {
            let ind = InducedModule::<QtScalar>::new(&lam, n, ()).unwrap();
            let pol = PolyModule::<QtScalar>::new(n, ()).unwrap();
            for d in 0..=3 {
                for k in pol.basis(d) {
                    let v = Vector::basis(k);
                    for i in 1..n {
                        assert_eq!(ind.apply_t(&v, i), pol.apply_t(&v, i));
                        assert_eq!(ind.apply_t_inv(&v, i), pol.apply_t_inv(&v, i));
                    }
                    assert_eq!(ind.apply_pi(&v), pol.apply_pi(&v));
                }
            }
        }
    }

    #[test]
    fn t_on_x1() {
        let lam = YoungDiagram::new(vec![1]).unwrap();
        let ind = InducedModule::<QtScalar>::new(&lam, 3, ()).unwrap();
        for tab in 0..ind.seed().dim() as u32 {
            let got = ind.apply_t(&x(&[1, 0, 0], tab), 1);
            let mut expect = Vector::zero();
            for (j, a) in ind.seed().t_image(1, tab) {
                expect.add_term(Key::new(&[0, 1, 0], *j), a.clone());
            }
            expect.add_term(Key::new(&[1, 0, 0], tab), qt("1-q"));
            assert_eq!(got, expect);
            let one = ind.apply_t(&x(&[0, 0, 0], tab), 2);
            assert_eq!(one.len(), ind.seed().t_image(2, tab).len());
        }
    }

    #[test]
    fn pi_on_last_variable() {
        let lam = YoungDiagram::new(vec![1]).unwrap();
        let ind = InducedModule::<QtScalar>::new(&lam, 3, ()).unwrap();
        let got = ind.apply_pi(&x(&[0, 0, 1], 0));
        for (k, c) in got.iter() {
            assert_eq!(k.exps.as_slice(), &[1, 0, 0]);
            let (_, a) = ind.seed().pi_image(0).iter().find(|(j, _)| *j == k.tab).unwrap();
            assert_eq!(c, &a.mul(&qt("t")));
        }
    }

    #[test]
    fn connectors() {
        let lam = YoungDiagram::new(vec![1]).unwrap();
        let up = InducedModule::<QtScalar>::new(&lam, 4, ()).unwrap();
        let lo = InducedModule::<QtScalar>::new(&lam, 3, ()).unwrap();
        let pi = Connector::pi(&up, &lo).unwrap();
        for tab in 0..up.seed().dim() as u32 {
            assert!(pi.apply(&x(&[0, 0, 0, 1], tab)).is_zero());
            assert!(!pi.broken().apply(&x(&[0, 0, 0, 1], tab)).is_zero() || pi.map_key(&Key::new(&[0, 0, 0, 0], tab)).is_none());
        }
        let e = InducedModule::<QtScalar>::new(&YoungDiagram::empty(), 4, ()).unwrap();
        let e3 = InducedModule::<QtScalar>::new(&YoungDiagram::empty(), 3, ()).unwrap();
        let pe = Connector::pi(&e, &e3).unwrap();
        for d in 0..=3 {
            for k in e.basis(d) {
                let v: Vector<QtScalar> = Vector::basis(k);
                assert_eq!(pe.apply(&v), Connector::xi().apply(&v));
            }
        }
    }
}
