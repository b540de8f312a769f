//! Exact incremental row reduction over sparse vectors.

use std::collections::HashMap;

use crate::scalar::Field;
use crate::vector::{Key, Vector};

struct Row<K> {
    pivot: Key,
    /// Scaled so the pivot entry is 1; zero at every earlier pivot.
    v: Vector<K>,
    /// `v` as a combination of accepted generators (by generator index).
    combo: Vec<(usize, K)>,
}

/// Semi-echelon form built one generator at a time.
///
/// The pivot of a new row is the entry with the smallest field weight,
/// ties going to the smallest key, so the result is reproducible.
pub struct Echelon<K: Field> {
    rows: Vec<Row<K>>,
    pivot_row: HashMap<Key, usize>,
    seen: usize,
    accepted: Vec<usize>,
}

impl<K: Field> Default for Echelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

fn add_combo<K: Field>(acc: &mut HashMap<usize, K>, c: &K, combo: &[(usize, K)]) {
    for (g, x) in combo {
        let e = acc.entry(*g).or_insert_with(K::zero);
        *e = e.add(&x.mul(c));
    }
}

impl<K: Field> Echelon<K> {
    pub fn new() -> Self {
        Echelon { rows: Vec::new(), pivot_row: HashMap::new(), seen: 0, accepted: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Indices (in insertion order) of generators that raised the rank.
    pub fn accepted(&self) -> &[usize] {
        &self.accepted
    }

    /// Residual of `v` and the row multipliers that were subtracted.
    fn reduce(&self, v: &Vector<K>) -> (Vector<K>, Vec<(usize, K)>) {
        let mut r = v.clone();
        let mut used = Vec::new();
        for (j, row) in self.rows.iter().enumerate() {
            if let Some(c) = r.get(&row.pivot).cloned() {
                r.axpy(&c.neg(), &row.v);
                used.push((j, c));
            }
        }
        (r, used)
    }

    /// Add a generator; returns whether it was independent of the earlier ones.
    pub fn insert(&mut self, v: &Vector<K>) -> bool {
        let gen = self.seen;
        self.seen += 1;
        let (r, used) = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        let (pivot, pc) = r
            .iter()
            .min_by(|a, b| a.1.weight().cmp(&b.1.weight()).then_with(|| a.0.cmp(b.0)))
            .map(|(k, c)| (k.clone(), c.clone()))
            .expect("nonzero residual");
        let s = pc.inv().expect("pivot is nonzero");
        let mut acc: HashMap<usize, K> = HashMap::new();
        acc.insert(gen, K::one());
        for (j, c) in &used {
            add_combo(&mut acc, &c.neg(), &self.rows[*j].combo);
        }
        let mut combo: Vec<(usize, K)> =
            acc.into_iter().filter(|(_, x)| !x.is_zero()).map(|(g, x)| (g, x.mul(&s))).collect();
        combo.sort_by_key(|(g, _)| *g);
        self.pivot_row.insert(pivot.clone(), self.rows.len());
        self.rows.push(Row { pivot, v: r.scale(&s), combo });
        self.accepted.push(gen);
        true
    }

    pub fn contains(&self, v: &Vector<K>) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Coordinates of `v` against the accepted generators, or `None` if
    /// `v` is outside their span. Entries are `(generator index, coeff)`.
    pub fn coordinates(&self, v: &Vector<K>) -> Option<Vec<(usize, K)>> {
        let (r, used) = self.reduce(v);
        if !r.is_zero() {
            return None;
        }
        let mut acc = HashMap::new();
        for (j, c) in &used {
            add_combo(&mut acc, c, &self.rows[*j].combo);
        }
        let mut out: Vec<(usize, K)> = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        out.sort_by_key(|(g, _)| *g);
        Some(out)
    }

    pub fn has_pivot(&self, k: &Key) -> bool {
        self.pivot_row.contains_key(k)
    }
}

/// Rank of a list of vectors.
pub fn rank<K: Field>(vs: &[Vector<K>]) -> usize {
    let mut e = Echelon::new();
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{qt, QtScalar};

    fn vec2(a: &str, b: &str) -> Vector<QtScalar> {
        Vector::from_terms([(Key::new(&[1, 0], 0), qt(a)), (Key::new(&[0, 1], 0), qt(b))])
    }

    #[test]
    fn dependent_generators_are_rejected() {
        let mut e = Echelon::new();
        assert!(e.insert(&vec2("q", "t")));
        assert!(!e.insert(&vec2("2*q", "2*t")));
        assert!(e.insert(&vec2("1", "1")));
        assert_eq!(e.accepted(), &[0, 2]);
        assert_eq!(e.rank(), 2);
        assert!(!e.insert(&Vector::zero()));
    }

    #[test]
    fn coordinates_reconstruct_the_input() {
        let gens = [vec2("q", "t"), vec2("1", "q-1"), vec2("q^2", "q*t")];
        let mut e = Echelon::new();
        for g in &gens {
            e.insert(g);
        }
        assert_eq!(e.rank(), 2);
        let target = vec2("q+3", "t+3*q-3").scale(&qt("1/(1+t)"));
        let coords = e.coordinates(&target).unwrap();
        let mut back = Vector::zero();
        for (g, c) in &coords {
            back.axpy(c, &gens[*g]);
        }
        assert_eq!(back, target);
        let outside = Vector::basis(Key::new(&[2, 0], 0));
        assert!(e.coordinates(&outside).is_none());
    }

    #[test]
    fn rank_over_a_prime_field_is_a_lower_bound() {
        use crate::scalar::{ModP, ModPoint};
        let gens = [vec2("q", "t"), vec2("1", "1")];
        let exact = rank(&gens);
        // q = t makes the two rows proportional.
        let pt = ModPoint::new(5, 5);
        let spec: Vec<Vector<ModP>> =
            gens.iter().map(|g| g.map_coeffs(|c| ModP::from_qt(c, &pt).unwrap())).collect();
        assert_eq!(exact, 2);
        assert_eq!(rank(&spec), 1);
    }
}
