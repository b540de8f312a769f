//! The flavored spaces `L_k(V) = X_1⋯X_k ε_k(V)` and the operators
//! `T_i`, `z_i`, `d_+`, `d_-`, `φ` acting between them.

use std::fmt;

use serde_json::{json, Value};

use crate::daha::{apply_eps, apply_y, Realization};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::scalar::{Field, QtScalar};
use crate::vector::Vector;

/// A vector of `L_k`, tagged with its flavor.
#[derive(Clone, Debug, PartialEq)]
pub struct LVector<K: Field> {
    pub k: usize,
    pub v: Vector<K>,
}

impl<K: Field> LVector<K> {
    pub fn new(k: usize, v: Vector<K>) -> Self {
        LVector { k, v }
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }
}

fn check_flavor(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::IndexOutOfRange { what: "flavor", index: k, rank: n });
    }
    Ok(())
}

/// `X_1⋯X_k ε_k(w)`.
pub fn lift_to_flavor<K: Field, M: Realization<K> + ?Sized>(m: &M, w: &Vector<K>, k: usize) -> Result<Vector<K>> {
    check_flavor(m.rank(), k)?;
    let mut v = apply_eps(m, w, k)?;
    for i in 1..=k {
        v = m.apply_x(&v, i);
    }
    Ok(v)
}

/// `X_1⋯X_k ε_k(b)` over the degree `d-k` basis `b`, zeros dropped.
pub fn lk_spanning_set<K: Field, M: Realization<K> + ?Sized>(m: &M, k: usize, d: u32) -> Result<Vec<LVector<K>>> {
    check_flavor(m.rank(), k)?;
    if d < k as u32 {
        return Err(Error::DegreeTooSmall { d, k });
    }
    let mut out = Vec::new();
    for b in m.basis(d - k as u32) {
        let v = lift_to_flavor(m, &Vector::basis(b), k)?;
        if !v.is_zero() {
            out.push(LVector::new(k, v));
        }
    }
    Ok(out)
}

/// An independent subset of a spanning set with its reduction data.
pub struct GradedBasis<K: Field> {
    pub k: usize,
    pub d: u32,
    pub generators: Vec<LVector<K>>,
    echelon: Echelon<K>,
}

impl<K: Field> GradedBasis<K> {
    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn contains(&self, v: &Vector<K>) -> bool {
        self.echelon.contains(v)
    }

    /// Coefficients of `v` on `generators`, or `None` outside the span.
    pub fn coordinates(&self, v: &Vector<K>) -> Option<Vec<K>> {
        let sparse = self.echelon.coordinates(v)?;
        let mut out = vec![K::zero(); self.generators.len()];
        let pos = self.echelon.accepted();
        for (g, c) in sparse {
            let at = pos.iter().position(|&p| p == g).expect("coordinates use accepted generators");
            out[at] = c;
        }
        Some(out)
    }
}

/// Row-reduce a spanning set; `(k, d)` label an empty input.
pub fn extract_basis<K: Field>(set: &[LVector<K>], k: usize, d: u32) -> Result<GradedBasis<K>> {
    let rank = set.iter().flat_map(|l| l.v.keys()).map(|key| key.rank()).next();
    for l in set {
        let bad_key = l.v.keys().any(|key| key.degree() != d || Some(key.rank()) != rank);
        if l.k != k || bad_key {
            return Err(Error::InconsistentFlavors);
        }
    }
    let mut echelon = Echelon::new();
    let mut generators = Vec::new();
    for l in set {
        if echelon.insert(&l.v) {
            generators.push(l.clone());
        }
    }
    Ok(GradedBasis { k, d, generators, echelon })
}

/// `T_i` on `L_k`, for `1 ≤ i ≤ k-1`.
pub fn op_t<K: Field, M: Realization<K> + ?Sized>(m: &M, v: &LVector<K>, i: usize) -> Result<LVector<K>> {
    if i == 0 || i + 1 > v.k {
        return Err(Error::IndexOutOfRange { what: "T", index: i, rank: v.k });
    }
    Ok(LVector::new(v.k, m.apply_t(&v.v, i)))
}

pub fn op_t_inv<K: Field, M: Realization<K> + ?Sized>(m: &M, v: &LVector<K>, i: usize) -> Result<LVector<K>> {
    if i == 0 || i + 1 > v.k {
        return Err(Error::IndexOutOfRange { what: "Tinv", index: i, rank: v.k });
    }
    Ok(LVector::new(v.k, m.apply_t_inv(&v.v, i)))
}

/// `d_+ = q^k X_1 T_1^{-1}⋯T_k^{-1}`.
pub fn op_d_plus<K: Field, M: Realization<K> + ?Sized>(m: &M, v: &LVector<K>) -> Result<LVector<K>> {
    let n = m.rank();
    if v.k >= n {
        return Err(Error::FlavorAtMax(n));
    }
    let mut w = v.v.clone();
    for j in (1..=v.k).rev() {
        w = m.apply_t_inv(&w, j);
    }
    let w = m.apply_x(&w, 1).scale(&m.consts().q_pow(v.k as i32));
    Ok(LVector::new(v.k + 1, w))
}

/// `d_- = (q-1) Σ_{j=0}^{n-k} q^j T_{k+j-1}^{-1}⋯T_k^{-1}`.
pub fn op_d_minus<K: Field, M: Realization<K> + ?Sized>(m: &M, v: &LVector<K>) -> Result<LVector<K>> {
    let n = m.rank();
    if v.k == 0 {
        return Err(Error::FlavorAtMin);
    }
    check_flavor(n, v.k)?;
    let c = m.consts();
    let mut acc = v.v.clone();
    let mut w = v.v.clone();
    let mut qj = K::one();
    for j in 1..=(n - v.k) {
        w = m.apply_t_inv(&w, v.k + j - 1);
        qj = qj.mul(&c.q);
        acc.axpy(&qj, &w);
    }
    Ok(LVector::new(v.k - 1, acc.scale(&c.q_minus_one)))
}

/// `z_i = (qt)^{-1} Y_i`, for `1 ≤ i ≤ k`.
pub fn op_z<K: Field, M: Realization<K> + ?Sized>(m: &M, v: &LVector<K>, i: usize) -> Result<LVector<K>> {
    if i == 0 || i > v.k {
        return Err(Error::IndexOutOfRange { what: "z", index: i, rank: v.k });
    }
    let c = m.consts();
    let w = apply_y(m, &v.v, i)?.scale(&c.q_inv.mul(&c.t_inv));
    Ok(LVector::new(v.k, w))
}

/// `q^{k-1} X_1 T_1^{-1}⋯T_{k-1}^{-1}`, for `k ≥ 1`.
pub fn phi_closed_form<K: Field, M: Realization<K> + ?Sized>(m: &M, v: &LVector<K>) -> Result<LVector<K>> {
    if v.k == 0 {
        return Err(Error::FlavorOutOfRange { k: 0, n: m.rank() });
    }
    let mut w = v.v.clone();
    for j in (1..v.k).rev() {
        w = m.apply_t_inv(&w, j);
    }
    Ok(LVector::new(v.k, m.apply_x(&w, 1).scale(&m.consts().q_pow(v.k as i32 - 1))))
}

/// `φ = [d_+, d_-]/(q-1)`, checked against its closed form.
pub fn op_phi<K: Field, M: Realization<K> + ?Sized>(m: &M, v: &LVector<K>) -> Result<LVector<K>> {
    let n = m.rank();
    if v.k == 0 || v.k + 1 > n {
        return Err(Error::FlavorOutOfRange { k: v.k, n });
    }
    let pm = op_d_plus(m, &op_d_minus(m, v)?)?;
    let mp = op_d_minus(m, &op_d_plus(m, v)?)?;
    let c = m.consts();
    let comm = pm.v.sub(&mp.v).scale(&c.q_minus_one.inv()?);
    let closed = phi_closed_form(m, v)?;
    if closed.v != comm {
        return Err(Error::ClosedFormMismatch("phi"));
    }
    Ok(closed)
}

/// `X_1⋯X_{k-1} ε_{k-1}((q^{n-k+1}-1) X_k w)`: the value of `d_-` on
/// `X_1⋯X_k ε_k(w)`.
pub fn d_minus_closed_form<K: Field, M: Realization<K> + ?Sized>(m: &M, w: &Vector<K>, k: usize) -> Result<LVector<K>> {
    let n = m.rank();
    if k == 0 {
        return Err(Error::FlavorAtMin);
    }
    check_flavor(n, k)?;
    let c = m.consts();
    let s = c.q_pow((n - k + 1) as i32).sub(&K::one());
    let inner = m.apply_x(w, k).scale(&s);
    Ok(LVector::new(k - 1, lift_to_flavor(m, &inner, k - 1)?))
}

/// Certify `v ∈ L_k` in each degree it occupies: span membership plus
/// `T_i v = v` for `k < i < n`.
pub fn in_lk<K: Field, M: Realization<K> + ?Sized>(m: &M, v: &LVector<K>) -> Result<bool> {
    let n = m.rank();
    for i in (v.k + 1)..n {
        if m.apply_t(&v.v, i) != v.v {
            return Ok(false);
        }
    }
    for d in v.v.degrees() {
        let part = Vector::from_terms(v.v.iter().filter(|(key, _)| key.degree() == d).map(|(a, b)| (a.clone(), b.clone())));
        if d < v.k as u32 {
            return Ok(false);
        }
        let span = lk_spanning_set(m, v.k, d)?;
        let basis = extract_basis(&span, v.k, d)?;
        if !basis.contains(&part) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One letter of a word in the 𝔹 operators.
#[derive(Clone, Debug, PartialEq)]
pub enum BOp {
    T(usize),
    Tinv(usize),
    Z(usize),
    DPlus,
    DMinus,
    Phi,
    Scalar(QtScalar),
}

impl BOp {
    /// `(flavor shift, degree shift)`.
    pub fn shift(&self) -> (i32, i32) {
        match self {
            BOp::DPlus => (1, 1),
            BOp::DMinus => (-1, 0),
            BOp::Phi => (0, 1),
            _ => (0, 0),
        }
    }
}

impl fmt::Display for BOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BOp::T(i) => write!(f, "T_{i}"),
            BOp::Tinv(i) => write!(f, "T_{i}^-1"),
            BOp::Z(i) => write!(f, "z_{i}"),
            BOp::DPlus => write!(f, "d+"),
            BOp::DMinus => write!(f, "d-"),
            BOp::Phi => write!(f, "phi"),
            BOp::Scalar(c) => write!(f, "({c})"),
        }
    }
}

pub fn apply_bop<K: Field, M: Realization<K> + ?Sized>(m: &M, v: &LVector<K>, op: &BOp) -> Result<LVector<K>> {
    match op {
        BOp::T(i) => op_t(m, v, *i),
        BOp::Tinv(i) => op_t_inv(m, v, *i),
        BOp::Z(i) => op_z(m, v, *i),
        BOp::DPlus => op_d_plus(m, v),
        BOp::DMinus => op_d_minus(m, v),
        BOp::Phi => op_phi(m, v),
        BOp::Scalar(c) => Ok(LVector::new(v.k, v.v.scale(&m.consts().lift(c)?))),
    }
}

/// A 𝔹 word, applied right to left.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BWord(pub Vec<BOp>);

impl BWord {
    pub fn apply<K: Field, M: Realization<K> + ?Sized>(&self, m: &M, v: &LVector<K>) -> Result<LVector<K>> {
        let mut out = v.clone();
        for op in self.0.iter().rev() {
            out = apply_bop(m, &out, op)?;
        }
        Ok(out)
    }

    pub fn shift(&self) -> (i32, i32) {
        self.0.iter().fold((0, 0), |(a, b), op| {
            let (x, y) = op.shift();
            (a + x, b + y)
        })
    }

    /// JSON tags: `["T",i]`, `["Tinv",i]`, `["z",i]`, `["dplus"]`,
    /// `["dminus"]`, `["phi"]`, `["Scalar","q-1"]`.
    pub fn from_json(j: &Value) -> Result<Self> {
        let bad = |msg: String| Error::Parse(msg);
        let arr = j.as_array().ok_or_else(|| bad("word must be a JSON list".into()))?;
        let mut ops = Vec::new();
        for s in arr {
            let parts = s.as_array().ok_or_else(|| bad(format!("symbol {s} is not a list")))?;
            let tag = parts.first().and_then(Value::as_str).ok_or_else(|| bad(format!("symbol {s} has no tag")))?;
            let idx = || -> Result<usize> {
                parts
                    .get(1)
                    .and_then(Value::as_u64)
                    .map(|x| x as usize)
                    .ok_or_else(|| bad(format!("symbol {s} needs an index")))
            };
            ops.push(match tag {
                "T" => BOp::T(idx()?),
                "Tinv" => BOp::Tinv(idx()?),
                "z" | "Z" => BOp::Z(idx()?),
                "dplus" => BOp::DPlus,
                "dminus" => BOp::DMinus,
                "phi" => BOp::Phi,
                "Scalar" => {
                    let text = parts.get(1).and_then(Value::as_str).ok_or_else(|| bad(format!("symbol {s} needs a scalar string")))?;
                    BOp::Scalar(text.parse().map_err(|e: crate::scalar::ScalarError| bad(e.to_string()))?)
                }
                other => return Err(bad(format!("unknown operator {other:?}"))),
            });
        }
        Ok(BWord(ops))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.0
                .iter()
                .map(|op| match op {
                    BOp::T(i) => json!(["T", i]),
                    BOp::Tinv(i) => json!(["Tinv", i]),
                    BOp::Z(i) => json!(["z", i]),
                    BOp::DPlus => json!(["dplus"]),
                    BOp::DMinus => json!(["dminus"]),
                    BOp::Phi => json!(["phi"]),
                    BOp::Scalar(c) => json!(["Scalar", c.to_string()]),
                })
                .collect(),
        )
    }

    /// Whether the JSON word uses any 𝔹-only tag.
    pub fn looks_like(j: &Value) -> bool {
        j.as_array().is_some_and(|a| {
            a.iter().any(|s| {
                matches!(s.get(0).and_then(Value::as_str), Some("z" | "Z" | "dplus" | "dminus" | "phi"))
            })
        })
    }
}

impl fmt::Display for BWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}
