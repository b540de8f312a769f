//! Truncated stable limits `𝔏_k(C)` of the towers `L_k(V^(n))` along the
//! connecting maps of a compatible sequence.
//!
//! Dimensions are computed in a prime field: `dim L_k(V^(n))(d)` is the trace
//! of the idempotent `ε_k` on `V^(n)(d-k)`, an integer that survives reduction
//! exactly. A transition map whose rank mod p equals the target dimension is
//! certainly surjective; anything short of that is settled exactly.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::Serialize;

use crate::bqt::{apply_bop, lift_to_flavor, BOp, LVector};
use crate::daha::{apply_eps, Realization};
use crate::error::{Error, Result};
use crate::family::{AnyModule, SeqSpec};
use crate::induced::Connector;
use crate::io::format_vector;
use crate::linalg::{rank, Echelon};
use crate::scalar::{Field, ModP, ModPoint, QtScalar};
use crate::vector::Vector;
use crate::verify::spec::{bqt_relations, displacement, Binding, Claim, Letter, Term};
use crate::verify::{sample_points, Counterexample, Mode, RelationReport, Status};

/// Stand-in rank for "every n" when instantiating relation ranges on towers.
const ALL_N: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitConfig {
    pub window: usize,
    pub ncap: usize,
    pub seed: u64,
    /// Accept mod-p transition ranks without an exact recount.
    pub probabilistic: bool,
}

impl Default for LimitConfig {
    fn default() -> Self {
        LimitConfig { window: 2, ncap: 8, seed: 0, probabilistic: false }
    }
}

/// Data for one rank of a cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankStat {
    pub n: usize,
    pub dim: usize,
    /// Rank of `Π^(n)` from `L_k(V^(n+1))(d)` to `L_k(V^(n))(d)`.
    pub transition_rank: Option<usize>,
}

/// `dim 𝔏_k(C)(d)` with the truncation that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub k: usize,
    pub d: u32,
    pub dim: Option<usize>,
    pub n_stabilized: Option<usize>,
    pub mode: Mode,
    pub history: Vec<RankStat>,
}

impl Cell {
    pub fn resolved(&self) -> bool {
        self.dim.is_some()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DimTable {
    pub sequence: String,
    pub k_max: usize,
    pub d_max: u32,
    pub window: usize,
    pub n_cap: usize,
    pub seed: u64,
    pub cells: Vec<Cell>,
}

impl DimTable {
    pub fn cell(&self, k: usize, d: u32) -> Option<&Cell> {
        self.cells.iter().find(|c| c.k == k && c.d == d)
    }

    /// `rows[k][d]`, `None` where unresolved.
    pub fn rows(&self) -> Vec<Vec<Option<usize>>> {
        (0..=self.k_max).map(|k| (0..=self.d_max).map(|d| self.cell(k, d).and_then(|c| c.dim)).collect()).collect()
    }

    pub fn unresolved(&self) -> Vec<(usize, u32)> {
        self.cells.iter().filter(|c| !c.resolved()).map(|c| (c.k, c.d)).collect()
    }
}

/// A compatible family `(v_n)` of `L_k(V^(n))(d)`, stored on its window
/// `n_lo..n_lo+len-1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Tower {
    pub k: usize,
    pub d: u32,
    pub n_lo: usize,
    pub components: Vec<Vector<QtScalar>>,
}

impl Tower {
    pub fn n_hi(&self) -> usize {
        self.n_lo + self.components.len() - 1
    }

    pub fn top(&self) -> &Vector<QtScalar> {
        self.components.last().expect("towers are nonempty")
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Vector::is_zero)
    }

    pub fn component(&self, n: usize) -> Option<&Vector<QtScalar>> {
        n.checked_sub(self.n_lo).and_then(|i| self.components.get(i))
    }
}

/// An exact basis of `L_k(V^(n))(d)` with its reduction data.
struct Piece {
    vectors: Vec<Vector<QtScalar>>,
    echelon: Echelon<QtScalar>,
}

type Cache<T> = Mutex<HashMap<(usize, u32, usize), Arc<T>>>;

/// Stable-limit computations for one compatible sequence.
pub struct StableLimit {
    seq: SeqSpec,
    cfg: LimitConfig,
    cells: Mutex<HashMap<(usize, u32), Cell>>,
    modules: Mutex<HashMap<usize, Arc<AnyModule<QtScalar>>>>,
    pieces: Cache<Piece>,
    /// Images of `pieces[(k, d, n+1)]` under `Π^(n)`.
    lifts: Cache<Echelon<QtScalar>>,
}

impl StableLimit {
    pub fn new(seq: SeqSpec, cfg: LimitConfig) -> Result<Self> {
        if cfg.window < 2 {
            return Err(Error::ShapeMismatch(format!("window length must be at least 2, got {}", cfg.window)));
        }
        Ok(StableLimit {
            seq,
            cfg,
            cells: Mutex::new(HashMap::new()),
            modules: Mutex::new(HashMap::new()),
            pieces: Mutex::new(HashMap::new()),
            lifts: Mutex::new(HashMap::new()),
        })
    }

    pub fn seq(&self) -> &SeqSpec {
        &self.seq
    }

    pub fn config(&self) -> &LimitConfig {
        &self.cfg
    }

    fn first_rank(&self, k: usize) -> usize {
        self.seq.n_start().max(k).max(1)
    }

    /// Dimension and stabilization data for `𝔏_k(C)(d)`.
    pub fn cell(&self, k: usize, d: u32) -> Result<Cell> {
        if let Some(c) = self.cells.lock().expect("cache").get(&(k, d)) {
            return Ok(c.clone());
        }
        let c = self.compute_cell(k, d)?;
        self.cells.lock().expect("cache").insert((k, d), c.clone());
        Ok(c)
    }

    fn compute_cell(&self, k: usize, d: u32) -> Result<Cell> {
        let n0 = self.first_rank(k);
        let mode = if self.cfg.probabilistic { Mode::Probabilistic } else { Mode::Exact };
        if d < k as u32 {
            let history = vec![RankStat { n: n0, dim: 0, transition_rank: None }];
            return Ok(Cell { k, d, dim: Some(0), n_stabilized: Some(n0), mode, history });
        }
        let points = sample_points(self.cfg.seed, 3);
        let w = self.cfg.window;
        let mut history: Vec<RankStat> = Vec::new();
        let mut lower: Option<AnyModule<ModP>> = None;
        for n in n0..=self.cfg.ncap {
            let m = self.seq.module(n)?.build::<ModP>(points[0])?;
            let (dim, span) = dim_and_span(&m, k, d)?;
            if let Some(low) = &lower {
                let conn = self.seq.connector(&m, low)?;
                let images: Vec<Vector<ModP>> = span.iter().map(|v| conn.apply(v)).collect();
                let target = history.last().expect("previous rank").dim;
                let mut r = rank(&images);
                if r < target {
                    r = self.recount_transition(k, d, n - 1, &points[1..])?.max(r);
                }
                history.last_mut().expect("previous rank").transition_rank = Some(r);
            }
            history.push(RankStat { n, dim, transition_rank: None });
            if history.len() >= w {
                let win = &history[history.len() - w..];
                let stable = win.iter().all(|s| s.dim == win[0].dim)
                    && win[..w - 1].iter().all(|s| s.transition_rank == Some(win[0].dim));
                if stable {
                    let n_s = win[0].n;
                    return Ok(Cell { k, d, dim: Some(win[0].dim), n_stabilized: Some(n_s), mode, history });
                }
            }
            lower = Some(m);
        }
        Ok(Cell { k, d, dim: None, n_stabilized: None, mode, history })
    }

    /// Rank of `Π^(n)` on `L_k(d)`: more prime-field samples, then exactly.
    fn recount_transition(&self, k: usize, d: u32, n: usize, points: &[ModPoint]) -> Result<usize> {
        let mut best = 0;
        for pt in points {
            let up = self.seq.module(n + 1)?.build::<ModP>(*pt)?;
            let low = self.seq.module(n)?.build::<ModP>(*pt)?;
            let conn = self.seq.connector(&up, &low)?;
            let (_, span) = dim_and_span(&up, k, d)?;
            best = best.max(rank(&span.iter().map(|v| conn.apply(v)).collect::<Vec<_>>()));
        }
        if self.cfg.probabilistic {
            return Ok(best);
        }
        let conn = self.connector(n)?;
        let images: Vec<_> = self.piece(k, d, n + 1)?.vectors.iter().map(|v| conn.apply(v)).collect();
        Ok(rank(&images))
    }

    fn module(&self, n: usize) -> Result<Arc<AnyModule<QtScalar>>> {
        if let Some(m) = self.modules.lock().expect("cache").get(&n) {
            return Ok(m.clone());
        }
        let m = Arc::new(self.seq.module(n)?.build::<QtScalar>(())?);
        self.modules.lock().expect("cache").insert(n, m.clone());
        Ok(m)
    }

    /// `Π^(n)`: rank `n+1` to rank `n`.
    fn connector(&self, n: usize) -> Result<Connector> {
        self.seq.connector(&*self.module(n + 1)?, &*self.module(n)?)
    }

    /// Exact basis of `L_k(V^(n))(d)`. Inputs to `X_1⋯X_k ε_k` are chosen
    /// by independence at a prime-field point, which is inherited exactly;
    /// if that falls short of the trace, every input is used.
    fn piece(&self, k: usize, d: u32, n: usize) -> Result<Arc<Piece>> {
        if let Some(p) = self.pieces.lock().expect("cache").get(&(k, d, n)) {
            return Ok(p.clone());
        }
        let m = self.module(n)?;
        let keys = m.basis(d - k as u32);
        let probe = self.seq.module(n)?.build::<ModP>(sample_points(self.cfg.seed, 1)[0])?;
        let (dim, _) = dim_and_span(&probe, k, d)?;
        let mut ech = Echelon::new();
        let mut chosen = Vec::with_capacity(dim);
        for key in &keys {
            if chosen.len() == dim {
                break;
            }
            if ech.insert(&lift_to_flavor(&probe, &Vector::basis(key.clone()), k)?) {
                chosen.push(key.clone());
            }
        }
        if chosen.len() < dim {
            chosen = keys;
        }
        let mut echelon = Echelon::new();
        let mut vectors = Vec::with_capacity(dim);
        for key in chosen {
            let v = lift_to_flavor(&*m, &Vector::basis(key), k)?;
            if echelon.insert(&v) {
                vectors.push(v);
            }
        }
        let p = Arc::new(Piece { vectors, echelon });
        self.pieces.lock().expect("cache").insert((k, d, n), p.clone());
        Ok(p)
    }

    /// A basis of `𝔏_k(C)(d)` as towers on the window starting at `n_lo`,
    /// which must lie in the stable range.
    pub fn towers_at(&self, k: usize, d: u32, n_lo: usize) -> Result<Vec<Tower>> {
        let cell = self.cell(k, d)?;
        let (dim, n_s) = match (cell.dim, cell.n_stabilized) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::NoStabilization { k, d, ncap: self.cfg.ncap }),
        };
        if n_lo < n_s {
            return Err(Error::RankTooSmall { n: n_lo, min: n_s });
        }
        let top = n_lo + self.cfg.window - 1;
        let basis = self.piece(k, d, top)?.vectors.clone();
        if basis.len() != dim {
            return Err(Error::ShapeMismatch(format!(
                "exact dimension {} of L_{k}(V^({top}))({d}) disagrees with the certified {dim}",
                basis.len()
            )));
        }
        basis.into_iter().map(|v| self.tower_from_top(k, d, n_lo, top, v)).collect()
    }

    fn tower_from_top(&self, k: usize, d: u32, n_lo: usize, top: usize, v: Vector<QtScalar>) -> Result<Tower> {
        let mut comps = vec![v];
        for n in (n_lo..top).rev() {
            let below = self.connector(n)?.apply(comps.last().expect("nonempty"));
            comps.push(below);
        }
        comps.reverse();
        Ok(Tower { k, d, n_lo, components: comps })
    }

    /// `(dim 𝔏_k(C)(d), basis towers)` on the first stable window.
    pub fn limit_component(&self, k: usize, d: u32) -> Result<(usize, Vec<Tower>)> {
        let cell = self.cell(k, d)?;
        match (cell.dim, cell.n_stabilized) {
            (Some(dim), Some(n_s)) => Ok((dim, self.towers_at(k, d, n_s)?)),
            _ => Err(Error::NoStabilization { k, d, ncap: self.cfg.ncap }),
        }
    }

    /// The component at rank `n`, pushing down or lifting as needed.
    pub fn restrict(&self, v: &Tower, n: usize) -> Result<Vector<QtScalar>> {
        if let Some(c) = v.component(n) {
            return Ok(c.clone());
        }
        if n < v.n_lo {
            let mut c = v.components[0].clone();
            for m in (n..v.n_lo).rev() {
                c = self.connector(m)?.apply(&c);
            }
            return Ok(c);
        }
        Ok(self.move_window(v, n + 1 - v.components.len())?.top().clone())
    }

    /// The same family on the window starting at `n_lo`.
    pub fn move_window(&self, v: &Tower, n_lo: usize) -> Result<Tower> {
        let len = v.components.len();
        let mut comps: Vec<Vector<QtScalar>> = Vec::with_capacity(len);
        if n_lo <= v.n_lo {
            for n in n_lo..n_lo + len {
                comps.push(self.restrict(v, n)?);
            }
            return Ok(Tower { components: comps, n_lo, ..v.clone() });
        }
        let mut all = v.components.clone();
        let mut n = v.n_hi();
        while n < n_lo + len - 1 {
            let lifted = self.lift(v.k, v.d, n, all.last().expect("nonempty"))?;
            all.push(lifted);
            n += 1;
        }
        let skip = all.len() - len;
        Ok(Tower { components: all.split_off(skip), n_lo, ..v.clone() })
    }

    /// A preimage at rank `n+1` of `x` under `Π^(n)` inside `L_k(d)`.
    fn lift(&self, k: usize, d: u32, n: usize, x: &Vector<QtScalar>) -> Result<Vector<QtScalar>> {
        let piece = self.piece(k, d, n + 1)?;
        let cached = self.lifts.lock().expect("cache").get(&(k, d, n)).cloned();
        let ech = match cached {
            Some(e) => e,
            None => {
                let conn = self.connector(n)?;
                let mut e = Echelon::new();
                for g in &piece.vectors {
                    e.insert(&conn.apply(g));
                }
                let e = Arc::new(e);
                self.lifts.lock().expect("cache").insert((k, d, n), e.clone());
                e
            }
        };
        let coords = ech.coordinates(x).ok_or(Error::NoStabilization { k, d, ncap: self.cfg.ncap })?;
        let mut out = Vector::zero();
        for (g, c) in coords {
            out.axpy(&c, &piece.vectors[g]);
        }
        Ok(out)
    }

    /// Tower invariants: homogeneity, membership in `L_k`, and `Π(v_{n+1}) = v_n`.
    pub fn check_compatible(&self, v: &Tower) -> Result<bool> {
        for (i, c) in v.components.iter().enumerate() {
            let n = v.n_lo + i;
            if !c.is_homogeneous_of(v.d) || !self.piece(v.k, v.d, n)?.echelon.contains(c) {
                return Ok(false);
            }
            if i > 0 && self.connector(n - 1)?.apply(c) != v.components[i - 1] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Smallest rank at which `op` is defined on flavor `k`.
    fn rank_needed(op: &BOp, k: usize) -> usize {
        match op {
            BOp::DPlus | BOp::Phi => k + 1,
            BOp::T(i) | BOp::Tinv(i) => (i + 1).max(k),
            BOp::Z(i) => (*i).max(k),
            BOp::DMinus | BOp::Scalar(_) => k.max(1),
        }
    }

    /// Act at every rank of the window (moved up if needed) and check the
    /// result is again a compatible family.
    pub fn limit_act(&self, op: &BOp, v: &Tower) -> Result<Tower> {
        let (dk, dd) = op.shift();
        let k2 = usize::try_from(v.k as i64 + dk as i64).map_err(|_| Error::FlavorAtMin)?;
        let d2 = (v.d as i64 + dd as i64) as u32;
        let out_cell = self.cell(k2, d2)?;
        let n_s = out_cell.n_stabilized.ok_or(Error::NoStabilization { k: k2, d: d2, ncap: self.cfg.ncap })?;
        let n_lo = v.n_lo.max(Self::rank_needed(op, v.k)).max(n_s);
        let v = if n_lo > v.n_lo { self.move_window(v, n_lo)? } else { v.clone() };
        let mut comps = Vec::with_capacity(v.components.len());
        for (i, c) in v.components.iter().enumerate() {
            let m = self.module(v.n_lo + i)?;
            comps.push(apply_bop(&*m, &LVector::new(v.k, c.clone()), op)?.v);
        }
        let out = Tower { k: k2, d: d2, n_lo: v.n_lo, components: comps };
        if !self.check_compatible(&out)? {
            return Err(Error::ShapeMismatch(format!("{op} broke compatibility of a tower at flavor {}", v.k)));
        }
        Ok(out)
    }

    /// `Σ c_j v_j` on a common window.
    pub fn combine(&self, terms: &[(QtScalar, Tower)]) -> Result<Option<Tower>> {
        let Some(n_lo) = terms.iter().map(|(_, t)| t.n_lo).max() else {
            return Ok(None);
        };
        let (k, d) = (terms[0].1.k, terms[0].1.d);
        if terms.iter().any(|(_, t)| t.k != k || t.d != d) {
            return Err(Error::InconsistentFlavors);
        }
        let mut acc = vec![Vector::zero(); self.cfg.window];
        for (c, t) in terms {
            let t = self.move_window(t, n_lo)?;
            for (a, x) in acc.iter_mut().zip(&t.components) {
                a.axpy(c, x);
            }
        }
        Ok(Some(Tower { k, d, n_lo, components: acc }))
    }

    /// The graded dimensions `dim 𝔏_k(C)(d)` for `k <= k_max`, `d <= d_max`.
    pub fn dim_table(&self, k_max: usize, d_max: u32) -> Result<DimTable> {
        let keys: Vec<(usize, u32)> = (0..=k_max).flat_map(|k| (0..=d_max).map(move |d| (k, d))).collect();
        let cells = keys.par_iter().map(|&(k, d)| self.cell(k, d)).collect::<Result<Vec<_>>>()?;
        Ok(DimTable {
            sequence: self.seq.to_string(),
            k_max,
            d_max,
            window: self.cfg.window,
            n_cap: self.cfg.ncap,
            seed: self.cfg.seed,
            cells,
        })
    }

    /// `(rank of d_+^k on 𝔏_0(C)(d), dim 𝔏_0(C)(d))`.
    pub fn d_plus_power_rank(&self, k: usize, d: u32) -> Result<(usize, usize)> {
        let (dim, towers) = self.limit_component(0, d)?;
        let mut images = Vec::with_capacity(towers.len());
        for t in towers {
            let mut t = t;
            for _ in 0..k {
                t = self.limit_act(&BOp::DPlus, &t)?;
            }
            images.push(t);
        }
        let Some(n_lo) = images.iter().map(|t| t.n_lo).max() else {
            return Ok((0, dim));
        };
        let tops = images.iter().map(|t| Ok(self.move_window(t, n_lo)?.top().clone())).collect::<Result<Vec<_>>>()?;
        Ok((rank(&tops), dim))
    }

    /// The fifteen 𝔹 relations on basis towers of `𝔏_k(C)(d)`,
    /// `k <= k_max`, `d <= d_max`.
    pub fn check_tower_relations(&self, k_max: usize, d_max: u32) -> Result<Vec<RelationReport>> {
        let specs = bqt_relations();
        let mut reports = Vec::with_capacity(specs.len());
        for spec in &specs {
            let Claim::Equation { lhs, rhs } = &spec.claim else { continue };
            let (mut instances, mut checked, mut cex) = (0, 0, None);
            let (mut flavors, mut degrees, mut windows) = (Vec::new(), Vec::new(), Vec::new());
            'outer: for b in spec.bindings(ALL_N) {
                let k = b.k as usize;
                if k > k_max {
                    continue;
                }
                instances += 1;
                for d in k as u32..=d_max {
                    let n_lo = self.instance_rank(lhs.iter().chain(rhs), &b, k, d)?;
                    let towers = self.towers_at(k, d, n_lo)?;
                    flavors.push(k);
                    degrees.push(d);
                    windows.push(n_lo);
                    for t in &towers {
                        checked += 1;
                        let l = self.eval_side(lhs, t, &b)?;
                        let r = self.eval_side(rhs, t, &b)?;
                        let residual = match (l, r) {
                            (None, None) => continue,
                            (Some(x), None) | (None, Some(x)) => x,
                            (Some(x), Some(y)) => self
                                .combine(&[(QtScalar::int(1), x), (QtScalar::int(-1), y)])?
                                .expect("two terms"),
                        };
                        if !residual.is_zero() {
                            cex = Some(Counterexample {
                                indices: format!("i={}, j={}, k={k}", b.i, b.j),
                                flavor: Some(k),
                                degree: d,
                                vector: format!("tower with top {}", self.format_at(t.n_hi(), t.top())),
                                residual: self.format_at(residual.n_hi(), residual.top()),
                                error: None,
                            });
                            break 'outer;
                        }
                    }
                }
            }
            flavors.sort_unstable();
            flavors.dedup();
            degrees.sort_unstable();
            degrees.dedup();
            windows.sort_unstable();
            windows.dedup();
            let status = if cex.is_some() {
                Status::Fail
            } else if checked == 0 {
                Status::Vacuous
            } else {
                Status::Pass
            };
            reports.push(RelationReport {
                relation_id: format!("tower.{}", spec.id),
                anchor: spec.anchor.to_string(),
                statement: spec.statement(),
                realization: format!("towers of L({}) with window starts {:?}, length {}", self.seq, windows, self.cfg.window),
                applicability: format!("{} (n unbounded), k <= {k_max}", spec.applicability()),
                domain: "basis towers of each stable piece".into(),
                quantifier: "every basis tower of each listed graded piece (sufficient by linearity)",
                instances,
                flavors,
                degrees,
                vectors_checked: checked,
                status,
                counterexample: cex,
                mode: Mode::Exact,
                seed: self.cfg.seed,
                points: vec![],
                millis: None,
            });
        }
        Ok(reports)
    }

    /// Text form of a rank-`n` component, with tableau labels where needed.
    pub fn format_at(&self, n: usize, v: &Vector<QtScalar>) -> String {
        match self.module(n) {
            Ok(m) => format_vector(v, m.tableaux()),
            Err(_) => format_vector(v, None),
        }
    }

    /// A window start past the stable rank of every piece a relation visits.
    fn instance_rank<'a>(&self, terms: impl Iterator<Item = &'a Term>, b: &Binding, k: usize, d: u32) -> Result<usize> {
        let mut need = self.first_rank(k).max(k + 2);
        for t in terms {
            for cut in 0..=t.word.len() {
                let suffix = &t.word[t.word.len() - cut..];
                let (f, dd) = displacement(suffix, b, Some(k as i64));
                let f = f.expect("flavored start") as usize;
                need = need.max(f + 1);
                let cell = self.cell(f, d + dd as u32)?;
                let n_s = cell.n_stabilized.ok_or(Error::NoStabilization { k: f, d: d + dd as u32, ncap: self.cfg.ncap })?;
                need = need.max(n_s);
            }
        }
        Ok(need)
    }

    fn eval_side(&self, side: &[Term], t: &Tower, b: &Binding) -> Result<Option<Tower>> {
        let mut parts = Vec::new();
        for term in side {
            if term.sum_j.is_some() {
                return Err(Error::ShapeMismatch("sums are not used by 𝔹 relations".into()));
            }
            let mut cur = t.clone();
            for l in term.word.iter().rev() {
                cur = self.limit_act(&to_bop(l, b)?, &cur)?;
            }
            parts.push((term.coeff.eval(b), cur));
        }
        self.combine(&parts)
    }
}

fn to_bop(l: &Letter, b: &Binding) -> Result<BOp> {
    let ix = |x: &crate::verify::spec::Ix| x.eval(b) as usize;
    Ok(match l {
        Letter::T(x) => BOp::T(ix(x)),
        Letter::Tinv(x) => BOp::Tinv(ix(x)),
        Letter::Z(x) => BOp::Z(ix(x)),
        Letter::DPlus => BOp::DPlus,
        Letter::DMinus => BOp::DMinus,
        Letter::Phi => BOp::Phi,
        other => return Err(Error::ShapeMismatch(format!("{other} does not act on towers"))),
    })
}

/// `dim L_k(V)(d)` as the trace of `ε_k` on `V(d-k)`, and the spanning set.
fn dim_and_span<M: Realization<ModP> + ?Sized>(m: &M, k: usize, d: u32) -> Result<(usize, Vec<Vector<ModP>>)> {
    let basis = m.basis(d - k as u32);
    let mut trace = ModP::zero();
    let mut span = Vec::with_capacity(basis.len());
    for key in basis.iter() {
        let e = apply_eps(m, &Vector::basis(key.clone()), k)?;
        if let Some(c) = e.get(key) {
            trace = trace.add(c);
        }
        let mut v = e;
        for i in 1..=k {
            v = m.apply_x(&v, i);
        }
        if !v.is_zero() {
            span.push(v);
        }
    }
    let dim = usize::try_from(trace.value())
        .ok()
        .filter(|&r| r <= basis.len())
        .ok_or_else(|| Error::ShapeMismatch("trace of an idempotent is not a small integer".into()))?;
    Ok((dim, span))
}

/// Convenience wrapper with the default rank cap.
pub fn limit_component(seq: &SeqSpec, k: usize, d: u32, window_len: usize) -> Result<(usize, Vec<Tower>)> {
    StableLimit::new(seq.clone(), LimitConfig { window: window_len, ..LimitConfig::default() })?.limit_component(k, d)
}

pub fn dim_table(seq: &SeqSpec, k_max: usize, d_max: u32, cfg: LimitConfig) -> Result<DimTable> {
    StableLimit::new(seq.clone(), cfg)?.dim_table(k_max, d_max)
}

#[cfg(test)]
mod tests;
