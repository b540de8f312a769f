//! Evaluates relation specs on concrete realizations.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::spec::{
    aux_identities, bqt_relations, compat_axioms, daha_relations, Base, Binding, Claim, Domain, Letter, RelationSpec,
    RunOf, Term,
};
use crate::bqt::{lk_spanning_set, op_d_minus, op_d_plus, op_z, phi_closed_form, LVector};
use crate::daha::{apply_eps, apply_pi_tilde, apply_theta, apply_y, check_t_index, check_x_index, Consts, Realization};
use crate::error::{Error, Result};
use crate::family::{AnyModule, ModuleSpec, SeqSpec};
use crate::induced::Connector;
use crate::io::format_any;
use crate::scalar::{Field, ModP, ModPoint, QtScalar, ScalarError, MODULUS};
use crate::syt::{enumerate_syt, Seed, StandardTableau, YoungDiagram};
use crate::vector::Vector;

const QUANTIFIER: &str = "every spanning vector of each listed graded piece (sufficient by linearity)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Probabilistic,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Probabilistic => "probabilistic",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub d_max: u32,
    pub k_max: Option<usize>,
    pub mode: Mode,
    pub seed: u64,
    pub timings: bool,
}

impl CheckConfig {
    pub fn exact(d_max: u32) -> Self {
        CheckConfig { d_max, k_max: None, mode: Mode::Exact, seed: 0, timings: false }
    }

    pub fn k_max(mut self, k: usize) -> Self {
        self.k_max = Some(k);
        self
    }

    pub fn probabilistic(mut self, seed: u64) -> Self {
        self.mode = Mode::Probabilistic;
        self.seed = seed;
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// No index instance or no vector fell in range.
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub indices: String,
    pub flavor: Option<usize>,
    pub degree: u32,
    pub vector: String,
    /// `lhs - rhs`, or the offending image for non-equational claims.
    pub residual: String,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub relation_id: String,
    pub anchor: String,
    pub statement: String,
    pub realization: String,
    pub applicability: String,
    pub domain: String,
    pub quantifier: &'static str,
    pub instances: usize,
    pub flavors: Vec<usize>,
    pub degrees: Vec<u32>,
    pub vectors_checked: usize,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub mode: Mode,
    pub seed: u64,
    /// `(q, t)` residues in probabilistic mode.
    pub points: Vec<[u64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    /// One line: id, status, and a counterexample hint.
    pub fn summary(&self) -> String {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Vacuous => "vacuous",
        };
        let mut line = format!("{:<28} {:<8} {} vectors  [{}]", self.relation_id, status, self.vectors_checked, self.realization);
        if let Some(c) = &self.counterexample {
            line.push_str(&format!("  at {} ({}) residual {}", c.vector, c.indices, c.residual));
        }
        line
    }
}

pub fn all_pass(reports: &[RelationReport]) -> bool {
    reports.iter().all(RelationReport::passed)
}

/// What a suite is run against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Module(ModuleSpec),
    /// The step `V^(n+1) -> V^(n)` of a compatible sequence.
    Step { seq: SeqSpec, n: usize, broken: bool },
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Module(m) => write!(f, "{m}"),
            Target::Step { seq, n, broken } => {
                write!(f, "{seq}, Pi^({n}): V^({}) -> V^({n})", n + 1)?;
                if *broken {
                    write!(f, " [connector keeps x_{} terms]", n + 1)?;
                }
                Ok(())
            }
        }
    }
}

struct Built<K: Field> {
    lower: AnyModule<K>,
    upper: Option<AnyModule<K>>,
    conn: Option<Connector>,
    /// Spanning sets of `L_k(d)` keyed by `(k, d)`.
    flavored: HashMap<(usize, u32), Vec<Vector<K>>>,
}

#[derive(Clone)]
struct State<K: Field> {
    v: Vector<K>,
    flavor: Option<usize>,
    upper: bool,
}

fn index(x: i64, rank: usize) -> Result<usize> {
    usize::try_from(x).map_err(|_| Error::IndexOutOfRange { what: "index", index: 0, rank })
}

fn untagged() -> Error {
    Error::ShapeMismatch("flavored operator applied to an untagged vector".into())
}

impl<K: Field> Built<K> {
    fn new(target: &Target, point: K::Point) -> Result<Self> {
        Ok(match target {
            Target::Module(spec) => {
                Built { lower: spec.build(point)?, upper: None, conn: None, flavored: HashMap::new() }
            }
            Target::Step { seq, n, broken } => {
                let lower = seq.module(*n)?.build(point.clone())?;
                let upper = seq.module(n + 1)?.build(point)?;
                let mut conn = seq.connector(&upper, &lower)?;
                if *broken {
                    conn = conn.broken();
                }
                Built { lower, upper: Some(upper), conn: Some(conn), flavored: HashMap::new() }
            }
        })
    }

    fn prepare_flavors(&mut self, k_max: usize, d_max: u32) -> Result<()> {
        for k in 0..=k_max.min(self.lower.rank()) {
            for d in k as u32..=d_max {
                let set = lk_spanning_set(&self.lower, k, d)?;
                self.flavored.insert((k, d), set.into_iter().map(|l| l.v).collect());
            }
        }
        Ok(())
    }

    fn consts(&self) -> &Consts<K> {
        self.lower.consts()
    }

    fn module(&self, upper: bool) -> Result<&AnyModule<K>> {
        if upper {
            self.upper.as_ref().ok_or_else(|| Error::ShapeMismatch("no upper module".into()))
        } else {
            Ok(&self.lower)
        }
    }

    fn apply_letter(&self, l: &Letter, s: State<K>, b: &Binding) -> Result<State<K>> {
        let m = self.module(s.upper)?;
        let n = m.rank();
        let ix = |x: &super::spec::Ix| index(x.eval(b), n);
        let State { v, mut flavor, mut upper } = s;
        let flavored = |k: Option<usize>| k.map(|k| LVector::new(k, v.clone())).ok_or_else(untagged);
        let v = match l {
            Letter::T(x) => {
                let i = ix(x)?;
                check_t_index(n, i)?;
                m.apply_t(&v, i)
            }
            Letter::Tinv(x) => {
                let i = ix(x)?;
                check_t_index(n, i)?;
                m.apply_t_inv(&v, i)
            }
            Letter::X(x) => {
                let i = ix(x)?;
                check_x_index(n, i)?;
                m.apply_x(&v, i)
            }
            Letter::Y(x) => apply_y(m, &v, ix(x)?)?,
            Letter::Pi => m.apply_pi(&v),
            Letter::PiTilde => apply_pi_tilde(m, &v),
            Letter::Eps(x) => apply_eps(m, &v, ix(x)?)?,
            Letter::Run { of, from, to, ascending } => {
                let mut st = State { v, flavor, upper };
                for i in Letter::run_indices(from.eval(b), to.eval(b), *ascending).into_iter().rev() {
                    let one = super::spec::lit(i);
                    let g = match of {
                        RunOf::T => Letter::T(one),
                        RunOf::Tinv => Letter::Tinv(one),
                        RunOf::X => Letter::X(one),
                    };
                    st = self.apply_letter(&g, st, b)?;
                }
                return Ok(st);
            }
            Letter::Z(x) => op_z(m, &flavored(flavor)?, ix(x)?)?.v,
            Letter::DPlus => {
                let out = op_d_plus(m, &flavored(flavor)?)?;
                flavor = Some(out.k);
                out.v
            }
            Letter::DMinus => {
                let out = op_d_minus(m, &flavored(flavor)?)?;
                flavor = Some(out.k);
                out.v
            }
            Letter::Phi => phi_closed_form(m, &flavored(flavor)?)?.v,
            Letter::Flavor(x) => {
                flavor = Some(ix(x)?);
                v
            }
            Letter::Conn => {
                let conn = self.conn.as_ref().filter(|_| upper).ok_or_else(|| Error::ShapeMismatch("connector needs an upper vector".into()))?;
                upper = false;
                conn.apply(&v)
            }
        };
        Ok(State { v, flavor, upper })
    }

    fn eval_word(&self, word: &[Letter], mut s: State<K>, b: &Binding) -> Result<State<K>> {
        for l in word.iter().rev() {
            s = self.apply_letter(l, s, b)?;
        }
        Ok(s)
    }

    fn eval_side(&self, side: &[Term], s: &State<K>, b: &Binding) -> Result<Vector<K>> {
        let mut acc = Vector::zero();
        for t in side {
            let js: Vec<i64> = match &t.sum_j {
                Some((lo, hi)) => (lo.eval(b)..=hi.eval(b)).collect(),
                None => vec![b.j],
            };
            for jv in js {
                let bj = Binding { j: jv, ..*b };
                let c = self.consts().lift(&t.coeff.eval(&bj))?;
                let out = self.eval_word(&t.word, s.clone(), &bj)?;
                acc.axpy(&c, &out.v);
            }
        }
        Ok(acc)
    }

    fn tableau_of(&self, m: &AnyModule<K>, tab: u32) -> Result<StandardTableau> {
        match m.tableaux() {
            Some(ts) => Ok(ts[tab as usize].clone()),
            None => StandardTableau::from_rows(vec![(1..=m.rank() as u8).collect()]),
        }
    }

    /// Vectors a relation instance is tested on, with their degrees.
    fn domain(&self, d: &Domain, b: &Binding, cfg: &CheckConfig) -> Result<Vec<(u32, State<K>)>> {
        let basis = |upper: bool, degs: std::ops::RangeInclusive<u32>| -> Result<Vec<(u32, State<K>)>> {
            let m = self.module(upper)?;
            Ok(degs
                .flat_map(|deg| m.basis(deg).into_iter().map(move |key| (deg, key)))
                .map(|(deg, key)| (deg, State { v: Vector::basis(key), flavor: None, upper }))
                .collect())
        };
        match d {
            Domain::Basis => basis(false, 0..=cfg.d_max),
            Domain::Seed => basis(false, 0..=0),
            Domain::Upper => basis(true, 0..=cfg.d_max),
            Domain::UpperSeed => basis(true, 0..=0),
            Domain::BothRanks => {
                let mut out = basis(false, 0..=cfg.d_max)?;
                out.extend(basis(true, 0..=cfg.d_max)?);
                Ok(out)
            }
            Domain::EpsImage(x) => {
                let k = index(x.eval(b), self.lower.rank())?;
                let mut out = Vec::new();
                for (deg, s) in basis(false, 0..=cfg.d_max)? {
                    let v = apply_eps(&self.lower, &s.v, k)?;
                    if !v.is_zero() {
                        out.push((deg, State { v, ..s }));
                    }
                }
                Ok(out)
            }
            Domain::Flavor => {
                let k = index(b.k, self.lower.rank())?;
                let mut out = Vec::new();
                for deg in k as u32..=cfg.d_max {
                    let set = match self.flavored.get(&(k, deg)) {
                        Some(s) => s.clone(),
                        None => lk_spanning_set(&self.lower, k, deg)?.into_iter().map(|l| l.v).collect(),
                    };
                    out.extend(set.into_iter().map(|v| (deg, State { v, flavor: Some(k), upper: false })));
                }
                Ok(out)
            }
        }
    }

    /// `None` if the claim holds on `s`, else the residual.
    fn check_one(&self, claim: &Claim, s: &State<K>, deg: u32, b: &Binding) -> Result<Option<Vector<K>>> {
        let fails = |v: Vector<K>| Ok(Some(v));
        match claim {
            Claim::Equation { lhs, rhs } => {
                let r = self.eval_side(lhs, s, b)?.sub(&self.eval_side(rhs, s, b)?);
                Ok((!r.is_zero()).then_some(r))
            }
            Claim::GradedModule => {
                let m = self.module(s.upper)?;
                let v = &s.v;
                for i in 1..m.rank() {
                    let tv = m.apply_t(v, i);
                    if !tv.is_homogeneous_of(deg) {
                        return fails(tv);
                    }
                    let back = m.apply_t_inv(&tv, i).sub(v);
                    if !back.is_zero() {
                        return fails(back);
                    }
                    let fwd = m.apply_t(&m.apply_t_inv(v, i), i).sub(v);
                    if !fwd.is_zero() {
                        return fails(fwd);
                    }
                }
                for i in 1..=m.rank() {
                    let xv = m.apply_x(v, i);
                    if !xv.is_homogeneous_of(deg + 1) {
                        return fails(xv);
                    }
                    let yv = apply_y(m, v, i)?;
                    if !yv.is_homogeneous_of(deg) {
                        return fails(yv);
                    }
                }
                let pv = m.apply_pi(v);
                Ok((!pv.is_homogeneous_of(deg)).then_some(pv))
            }
            Claim::ConnDegree => {
                let out = self.eval_word(&[Letter::Conn], s.clone(), b)?.v;
                Ok((!out.is_homogeneous_of(deg)).then_some(out))
            }
            Claim::ThetaSpectrum => {
                let m = self.module(s.upper)?;
                let i = index(b.i, m.rank())?;
                let (key, _) = s.v.iter().next().ok_or(Error::NotAnEigenvector)?;
                let c = self.tableau_of(m, key.tab)?.content(i)?;
                let r = apply_theta(m, &s.v, i)?.sub(&s.v.scale(&self.consts().q_pow(c)));
                Ok((!r.is_zero()).then_some(r))
            }
        }
    }

    fn tableaux_for(&self, upper: bool) -> Option<&[StandardTableau]> {
        self.module(upper).ok().and_then(AnyModule::tableaux)
    }

    fn run(&self, spec: &RelationSpec, cfg: &CheckConfig) -> Result<Outcome> {
        let mut out = Outcome::default();
        for b in spec.bindings(self.lower.rank()) {
            if spec.domain == Domain::Flavor && cfg.k_max.is_some_and(|km| b.k as usize > km) {
                continue;
            }
            out.instances += 1;
            for (deg, s) in self.domain(&spec.domain, &b, cfg)? {
                out.vectors += 1;
                out.degrees.insert(deg);
                if let Some(k) = s.flavor {
                    out.flavors.insert(k);
                }
                let (residual, error) = match self.check_one(&spec.claim, &s, deg, &b) {
                    Ok(None) => continue,
                    Ok(Some(r)) => (r, None),
                    Err(e) => (Vector::zero(), Some(e.to_string())),
                };
                let tabs = self.tableaux_for(s.upper);
                out.cex = Some(Counterexample {
                    indices: binding_text(spec, &b),
                    flavor: s.flavor,
                    degree: deg,
                    vector: format_any(&s.v, tabs),
                    residual: format_any(&residual, self.tableaux_for(false).or(tabs)),
                    error,
                });
                return Ok(out);
            }
        }
        Ok(out)
    }
}

fn binding_text(spec: &RelationSpec, b: &Binding) -> String {
    let mut parts = vec![format!("n={}", b.n)];
    for (var, _, _) in &spec.vars {
        let name = match var {
            Base::I => "i",
            Base::J => "j",
            Base::K => "k",
            Base::N | Base::Lit => continue,
        };
        parts.push(format!("{name}={}", b.get(*var)));
    }
    parts.join(", ")
}

#[derive(Default)]
struct Outcome {
    instances: usize,
    vectors: usize,
    flavors: BTreeSet<usize>,
    degrees: BTreeSet<u32>,
    cex: Option<Counterexample>,
}

/// Deterministic `(q, t)` specializations drawn from `seed`.
pub fn sample_points(seed: u64, count: usize) -> Vec<ModPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| ModPoint::new(rng.gen_range(2..MODULUS - 1), rng.gen_range(2..MODULUS - 1))).collect()
}

fn run_on<K: Field>(target: &Target, specs: &[RelationSpec], cfg: &CheckConfig, point: K::Point) -> Result<Vec<(Outcome, u64)>> {
    let mut built = Built::<K>::new(target, point)?;
    if specs.iter().any(|s| s.domain == Domain::Flavor) {
        let k_max = cfg.k_max.unwrap_or(usize::MAX);
        built.prepare_flavors(k_max, cfg.d_max)?;
    }
    specs
        .par_iter()
        .map(|s| {
            let start = Instant::now();
            let o = built.run(s, cfg)?;
            Ok((o, start.elapsed().as_millis() as u64))
        })
        .collect()
}

/// Run `specs` against `target`; one report per spec, in order.
pub fn run_specs(target: &Target, specs: &[RelationSpec], cfg: &CheckConfig) -> Result<Vec<RelationReport>> {
    let (runs, points) = match cfg.mode {
        Mode::Exact => (vec![run_on::<QtScalar>(target, specs, cfg, ())?], vec![]),
        Mode::Probabilistic => {
            let mut runs = Vec::new();
            let mut used = Vec::new();
            let mut draw = 0u64;
            while runs.len() < 2 {
                let pt = sample_points(cfg.seed.wrapping_add(draw), 1)[0];
                draw += 1;
                match run_on::<ModP>(target, specs, cfg, pt) {
                    Ok(r) => {
                        runs.push(r);
                        used.push([pt.q.value(), pt.t.value()]);
                    }
                    Err(Error::Scalar(ScalarError::PoleAtPoint)) if draw < 16 => continue,
                    Err(e) => return Err(e),
                }
            }
            (runs, used)
        }
    };
    let realization = target.to_string();
    let mut reports = Vec::with_capacity(specs.len());
    for (idx, spec) in specs.iter().enumerate() {
        let mut merged = Outcome::default();
        let mut millis = 0;
        for run in &runs {
            let (o, ms) = &run[idx];
            millis += ms;
            merged.instances = o.instances;
            merged.vectors += o.vectors;
            merged.flavors.extend(&o.flavors);
            merged.degrees.extend(&o.degrees);
            if merged.cex.is_none() {
                merged.cex = o.cex.clone();
            }
        }
        let status = if merged.cex.is_some() {
            Status::Fail
        } else if merged.vectors == 0 {
            Status::Vacuous
        } else {
            Status::Pass
        };
        reports.push(RelationReport {
            relation_id: spec.id.to_string(),
            anchor: spec.anchor.to_string(),
            statement: spec.statement(),
            realization: realization.clone(),
            applicability: spec.applicability(),
            domain: spec.domain.to_string(),
            quantifier: QUANTIFIER,
            instances: merged.instances,
            flavors: merged.flavors.into_iter().collect(),
            degrees: merged.degrees.into_iter().collect(),
            vectors_checked: merged.vectors,
            status,
            counterexample: merged.cex,
            mode: cfg.mode,
            seed: cfg.seed,
            points: points.clone(),
            millis: cfg.timings.then_some(millis),
        });
    }
    Ok(reports)
}

pub fn check_daha_relations(m: &ModuleSpec, cfg: &CheckConfig) -> Result<Vec<RelationReport>> {
    run_specs(&Target::Module(m.clone()), &daha_relations(), cfg)
}

pub fn check_bqt_relations(m: &ModuleSpec, cfg: &CheckConfig) -> Result<Vec<RelationReport>> {
    run_specs(&Target::Module(m.clone()), &bqt_relations(), cfg)
}

pub fn check_aux_identities(m: &ModuleSpec, cfg: &CheckConfig) -> Result<Vec<RelationReport>> {
    run_specs(&Target::Module(m.clone()), &aux_identities(), cfg)
}

/// The compatible-sequence axioms for `Π^(n)`; Murnaghan towers also get
/// the seed-level axioms for `κ^(n)`.
pub fn check_compatibility(seq: &SeqSpec, n: usize, cfg: &CheckConfig) -> Result<Vec<RelationReport>> {
    check_compatibility_with(seq, n, cfg, false)
}

/// As [`check_compatibility`], optionally with a connector that keeps
/// `x_{n+1}` terms.
pub fn check_compatibility_with(seq: &SeqSpec, n: usize, cfg: &CheckConfig, broken: bool) -> Result<Vec<RelationReport>> {
    if n < seq.n_start() {
        return Err(Error::RankTooSmall { n, min: seq.n_start() });
    }
    let specs = compat_axioms(matches!(seq, SeqSpec::Murnaghan(_)));
    run_specs(&Target::Step { seq: seq.clone(), n, broken }, &specs, cfg)
}

/// Partitions of `m`, largest part first.
pub fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if m == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=m.min(max)).rev() {
            cur.push(p);
            rec(m - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// `θ_i e_τ = q^{c_τ(i)} e_τ` for every seed `U_λ^(n)` with `|λ| <= max_size`
/// and `n <= n_max`, exactly.
pub fn check_theta_spectra(max_size: usize, n_max: usize) -> Result<RelationReport> {
    let consts = Consts::<QtScalar>::new(())?;
    let (mut checks, mut degrees, mut cex) = (0usize, BTreeSet::new(), None);
    let mut shapes = Vec::new();
    'outer: for size in 0..=max_size {
        for parts in partitions(size) {
            let lambda = YoungDiagram::new(parts)?;
            for n in lambda.threshold().max(1)..=n_max {
                let seed = Seed::new(&lambda, n, &consts)?;
                shapes.push(format!("{lambda}@{n}"));
                for (idx, tau) in seed.tableaux.iter().enumerate() {
                    for i in 1..=n {
                        checks += 1;
                        degrees.insert(0);
                        let want = consts.q_pow(tau.content(i)?);
                        match seed.theta_eigenvalue(idx as u32, i, &consts) {
                            Ok(c) if c == want => {}
                            got => {
                                cex = Some(Counterexample {
                                    indices: format!("n={n}, i={i}"),
                                    flavor: None,
                                    degree: 0,
                                    vector: format!("e{tau}"),
                                    residual: match got {
                                        Ok(c) => format!("eigenvalue {c}, expected {want}"),
                                        Err(e) => e.to_string(),
                                    },
                                    error: None,
                                });
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    }
    let status = if cex.is_some() { Status::Fail } else { Status::Pass };
    Ok(RelationReport {
        relation_id: "aux.theta_spectrum".into(),
        anchor: "theta_i(e_tau) = q^{c_tau(i)} e_tau".into(),
        statement: "theta_i e_tau = q^c_tau(i) e_tau on the seed".into(),
        realization: format!("seeds |lambda| <= {max_size}, n <= {n_max}"),
        applicability: "1 <= i <= n, tau in SYT(lambda^(n))".into(),
        domain: Domain::Seed.to_string(),
        quantifier: QUANTIFIER,
        instances: shapes.len(),
        flavors: vec![],
        degrees: degrees.into_iter().collect(),
        vectors_checked: checks,
        status,
        counterexample: cex,
        mode: Mode::Exact,
        seed: 0,
        points: vec![],
        millis: None,
    })
}

/// Count of standard tableaux touched by [`check_theta_spectra`].
pub fn theta_check_count(max_size: usize, n_max: usize) -> Result<usize> {
    let mut total = 0;
    for size in 0..=max_size {
        for parts in partitions(size) {
            let lambda = YoungDiagram::new(parts)?;
            for n in lambda.threshold().max(1)..=n_max {
                total += enumerate_syt(&lambda.pad(n)?).len() * n;
            }
        }
    }
    Ok(total)
}
