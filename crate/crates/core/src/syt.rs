//! Young diagrams, standard tableaux, and the seminormal seed modules of the
//! affine Hecke algebra pulled back along `π ↦ T_1^{-1}…T_{n-1}^{-1}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::daha::Consts;
use crate::error::{Error, Result};
use crate::scalar::{Field, QtScalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YoungDiagram {
    parts: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(YoungDiagram { parts })
    }

    pub fn empty() -> Self {
        YoungDiagram { parts: Vec::new() }
    }

    /// Parse `2,1`; `0` or the empty string is the empty diagram.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Smallest rank `n` for which the padded shape exists: `|λ| + λ_1`.
    pub fn threshold(&self) -> usize {
        self.size() + self.parts.first().copied().unwrap_or(0)
    }

    /// `λ^(n) = (n - |λ|, λ_1, λ_2, …)`.
    pub fn pad(&self, n: usize) -> Result<YoungDiagram> {
        let min = self.threshold().max(1);
        if n < min {
            return Err(Error::RankTooSmall { n, min });
        }
        let mut parts = vec![n - self.size()];
        parts.extend_from_slice(&self.parts);
        Ok(YoungDiagram { parts })
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

/// Bijective increasing filling, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<u8>>,
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<u8>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        YoungDiagram::new(shape.clone())?;
        let n: usize = shape.iter().sum();
        let mut seen = vec![false; n + 1];
        for r in &rows {
            for &e in r {
                let e = e as usize;
                if e == 0 || e > n || seen[e] {
                    return Err(Error::ShapeMismatch(format!("{rows:?} is not a filling by 1..{n}")));
                }
                seen[e] = true;
            }
        }
        for (ri, r) in rows.iter().enumerate() {
            for (ci, &e) in r.iter().enumerate() {
                let right_ok = ci + 1 >= r.len() || r[ci + 1] > e;
                let down_ok = rows.get(ri + 1).and_then(|d| d.get(ci)).is_none_or(|&b| b > e);
                if !right_ok || !down_ok {
                    return Err(Error::ShapeMismatch(format!("{rows:?} is not standard")));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram { parts: self.rows.iter().map(Vec::len).collect() }
    }

    /// `(row, column)`, 0-based, of entry `i`.
    pub fn position(&self, i: usize) -> Option<(usize, usize)> {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&e| e as usize == i) {
                return Some((r, c));
            }
        }
        None
    }

    /// Content `column - row` of the box holding `i`.
    pub fn content(&self, i: usize) -> Result<i32> {
        let (r, c) = self
            .position(i)
            .ok_or(Error::EntryOutOfRange { entry: i, size: self.size() })?;
        Ok(c as i32 - r as i32)
    }

    fn reading_word(&self) -> Vec<u8> {
        self.rows.concat()
    }

    /// Exchange the entries `i` and `i+1` (may not be standard).
    fn swap_entries(&self, i: usize) -> StandardTableau {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&e| match e as usize {
                        x if x == i => (i + 1) as u8,
                        x if x == i + 1 => i as u8,
                        _ => e,
                    })
                    .collect()
            })
            .collect();
        StandardTableau { rows }
    }

    /// Delete the largest entry, which must sit at the end of a row.
    fn remove_largest(&self) -> StandardTableau {
        let n = self.size() as u8;
        let mut rows: Vec<Vec<u8>> =
            self.rows.iter().map(|r| r.iter().copied().filter(|&e| e != n).collect()).collect();
        rows.retain(|r| !r.is_empty());
        StandardTableau { rows }
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u8::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "e({})", rows.join("|"))
    }
}

/// All standard tableaux of `shape`, sorted by row-reading word.
pub fn enumerate_syt(shape: &YoungDiagram) -> Vec<StandardTableau> {
    fn rec(shape: &[usize], rows: &mut Vec<Vec<u8>>, next: u8, total: usize, out: &mut Vec<StandardTableau>) {
        if next as usize > total {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            let above_ok = r == 0 || rows[r - 1].len() > len;
            if len < shape[r] && above_ok {
                rows[r].push(next);
                rec(shape, rows, next + 1, total, out);
                rows[r].pop();
            }
        }
    }
    let parts = shape.parts();
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); parts.len()];
    rec(parts, &mut rows, 1, shape.size(), &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}

pub type SparseRow<K> = Vec<(u32, K)>;

/// Exact seminormal coefficients of `T_i` on `e_τ`.
fn seminormal_t(tabs: &[StandardTableau], index: &HashMap<StandardTableau, u32>, tau: usize, i: usize) -> Vec<(u32, QtScalar)> {
    let t = &tabs[tau];
    let (r1, c1) = t.position(i).expect("entry present");
    let (r2, c2) = t.position(i + 1).expect("entry present");
    if r1 == r2 {
        return vec![(tau as u32, QtScalar::int(1))];
    }
    if c1 == c2 {
        return vec![(tau as u32, QtScalar::int(-1).mul(&QtScalar::q()))];
    }
    let a = c1 as i32 - r1 as i32;
    let b = c2 as i32 - r2 as i32;
    let qa = QtScalar::q_pow(a);
    let qb = QtScalar::q_pow(b);
    let diag = QtScalar::int(1)
        .sub(&QtScalar::q())
        .mul(&qa)
        .div(&qa.sub(&qb))
        .expect("distinct contents");
    let other = index[&t.swap_entries(i)];
    let off = if a - b > 1 {
        QtScalar::int(1)
    } else {
        let num = QtScalar::q_pow(b + 1).sub(&qa).mul(&QtScalar::q_pow(a + 1).sub(&qb));
        let den = qb.sub(&qa).pow(2).expect("nonzero");
        num.div(&den).expect("distinct contents").neg()
    };
    vec![(other, off), (tau as u32, diag)]
}

/// The seed module `U_λ^(n)` with all generator matrices precomputed.
pub struct Seed<K: Field> {
    pub n: usize,
    pub lambda: YoungDiagram,
    pub shape: YoungDiagram,
    pub tableaux: Vec<StandardTableau>,
    index: HashMap<StandardTableau, u32>,
    /// `t[i-1][τ]` is the image of `e_τ` under `T_i`.
    t: Vec<Vec<SparseRow<K>>>,
    /// `q^{-1} T_i` column by column.
    t_scaled: Vec<Vec<SparseRow<K>>>,
    t_inv: Vec<Vec<SparseRow<K>>>,
    pi: Vec<SparseRow<K>>,
}

/// Sparse linear combination of tableau basis vectors.
pub type SeedVector<K> = BTreeMap<u32, K>;

fn apply_rows<K: Field>(m: &[SparseRow<K>], v: &SeedVector<K>) -> SeedVector<K> {
    let mut out: SeedVector<K> = BTreeMap::new();
    for (tau, c) in v {
        for (sigma, a) in &m[*tau as usize] {
            let e = out.entry(*sigma).or_insert_with(K::zero);
            *e = e.add(&a.mul(c));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

impl<K: Field> Seed<K> {
    pub fn new(lambda: &YoungDiagram, n: usize, consts: &Consts<K>) -> Result<Self> {
        let shape = lambda.pad(n)?;
        let tableaux = enumerate_syt(&shape);
        let index: HashMap<StandardTableau, u32> =
            tableaux.iter().enumerate().map(|(j, t)| (t.clone(), j as u32)).collect();
        let lift_row = |row: Vec<(u32, QtScalar)>| -> Result<SparseRow<K>> {
            row.into_iter().map(|(j, c)| Ok((j, consts.lift(&c)?))).collect()
        };
        let q_inv = QtScalar::q_pow(-1);
        let one_minus_q_inv = QtScalar::int(1).sub(&q_inv);
        let (mut t, mut t_scaled, mut t_inv) = (Vec::new(), Vec::new(), Vec::new());
        for i in 1..n {
            let (mut ti, mut ts, mut tv) = (Vec::new(), Vec::new(), Vec::new());
            for tau in 0..tableaux.len() {
                let exact = seminormal_t(&tableaux, &index, tau, i);
                let scaled: Vec<(u32, QtScalar)> =
                    exact.iter().map(|(j, c)| (*j, c.mul(&q_inv))).collect();
                let mut inv = scaled.clone();
                match inv.iter_mut().find(|(j, _)| *j == tau as u32) {
                    Some(slot) => slot.1 = slot.1.add(&one_minus_q_inv),
                    None => inv.push((tau as u32, one_minus_q_inv.clone())),
                }
                inv.retain(|(_, c)| !c.is_zero());
                ti.push(lift_row(exact)?);
                ts.push(lift_row(scaled)?);
                tv.push(lift_row(inv)?);
            }
            t.push(ti);
            t_scaled.push(ts);
            t_inv.push(tv);
        }
        let mut seed = Seed { n, lambda: lambda.clone(), shape, tableaux, index, t, t_scaled, t_inv, pi: Vec::new() };
        let pi = (0..seed.tableaux.len())
            .map(|tau| {
                let mut v: SeedVector<K> = BTreeMap::from([(tau as u32, K::one())]);
                for j in (1..n).rev() {
                    v = seed.apply_t_inv(&v, j);
                }
                v.into_iter().collect()
            })
            .collect();
        seed.pi = pi;
        Ok(seed)
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<u32> {
        self.index.get(t).copied()
    }

    pub fn t_image(&self, i: usize, tau: u32) -> &SparseRow<K> {
        &self.t[i - 1][tau as usize]
    }

    pub fn t_scaled_image(&self, i: usize, tau: u32) -> &SparseRow<K> {
        &self.t_scaled[i - 1][tau as usize]
    }

    pub fn pi_image(&self, tau: u32) -> &SparseRow<K> {
        &self.pi[tau as usize]
    }

    pub fn apply_t(&self, v: &SeedVector<K>, i: usize) -> SeedVector<K> {
        apply_rows(&self.t[i - 1], v)
    }

    pub fn apply_t_inv(&self, v: &SeedVector<K>, i: usize) -> SeedVector<K> {
        apply_rows(&self.t_inv[i - 1], v)
    }

    pub fn apply_pi(&self, v: &SeedVector<K>) -> SeedVector<K> {
        apply_rows(&self.pi, v)
    }

    /// Checked `T_i` on a seed vector.
    pub fn t_checked(&self, v: &SeedVector<K>, i: usize) -> Result<SeedVector<K>> {
        crate::daha::check_t_index(self.n, i)?;
        Ok(self.apply_t(v, i))
    }

    /// `θ_i = q^{i-1} T_{i-1}^{-1}…T_1^{-1} π T_{n-1}…T_i` on a seed vector.
    pub fn apply_theta(&self, v: &SeedVector<K>, i: usize, consts: &Consts<K>) -> SeedVector<K> {
        let mut w = v.clone();
        for j in i..self.n {
            w = self.apply_t(&w, j);
        }
        w = self.apply_pi(&w);
        for j in 1..i {
            w = self.apply_t_inv(&w, j);
        }
        let s = consts.q_pow(i as i32 - 1);
        w.into_iter().map(|(k, c)| (k, c.mul(&s))).collect()
    }

    /// Scalar `c` with `θ_i e_τ = c e_τ`, or `NotAnEigenvector`.
    pub fn theta_eigenvalue(&self, tau: u32, i: usize, consts: &Consts<K>) -> Result<K> {
        if i == 0 || i > self.n {
            return Err(Error::EntryOutOfRange { entry: i, size: self.n });
        }
        let v = BTreeMap::from([(tau, K::one())]);
        let w = self.apply_theta(&v, i, consts);
        match (w.len(), w.get(&tau)) {
            (1, Some(c)) => Ok(c.clone()),
            _ => Err(Error::NotAnEigenvector),
        }
    }

    /// `κ`: tableau indices at rank `n` from this seed at rank `n+1`.
    /// Entry `j` is the image of tableau `j` (or `None` if killed).
    pub fn kappa_table(&self, lower: &Seed<K>) -> Result<Vec<Option<u32>>> {
        if lower.lambda != self.lambda || lower.n + 1 != self.n {
            return Err(Error::ShapeMismatch(format!(
                "κ needs ranks n+1 -> n of one shape, got {} -> {}",
                self.n, lower.n
            )));
        }
        let corner = (0usize, self.shape.parts()[0] - 1);
        Ok(self
            .tableaux
            .iter()
            .map(|t| {
                (t.position(self.n) == Some(corner))
                    .then(|| lower.index_of(&t.remove_largest()).expect("restriction is standard"))
            })
            .collect())
    }
}

/// `κ` applied to a seed vector.
pub fn kappa_connect<K: Field>(upper: &Seed<K>, lower: &Seed<K>, v: &SeedVector<K>) -> Result<SeedVector<K>> {
    let table = upper.kappa_table(lower)?;
    let mut out = BTreeMap::new();
    for (tau, c) in v {
        if let Some(j) = table[*tau as usize] {
            out.insert(j, c.clone());
        }
    }
    Ok(out)
}

/// Convenience: θ eigenvalue of `τ` in its own seed at rank `|τ|`.
pub fn theta_eigencheck(tau: &StandardTableau, i: usize) -> Result<QtScalar> {
    let shape = tau.shape();
    let n = shape.size();
    let lambda = YoungDiagram { parts: shape.parts()[1..].to_vec() };
    let consts = Consts::<QtScalar>::new(())?;
    let seed = Seed::new(&lambda, n, &consts)?;
    let idx = seed.index_of(tau).expect("tableau of this shape");
    seed.theta_eigenvalue(idx, i, &consts)
}

#[cfg(test)]
mod tests;
