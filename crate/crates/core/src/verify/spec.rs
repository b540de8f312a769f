//! Relations as data: operator words with symbolic indices.

use std::collections::BTreeSet;
use std::fmt;

use crate::scalar::{qt, QtScalar};

/// What an index expression is measured from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    Lit,
    I,
    J,
    K,
    N,
}

/// An integer linear form in `i, j, k, n`, e.g. `i+1` or `n-k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Ix {
    pub ci: i64,
    pub cj: i64,
    pub ck: i64,
    pub cn: i64,
    pub off: i64,
}

pub const fn lit(v: i64) -> Ix {
    Ix { ci: 0, cj: 0, ck: 0, cn: 0, off: v }
}
pub const fn i(off: i64) -> Ix {
    Ix { ci: 1, cj: 0, ck: 0, cn: 0, off }
}
pub const fn j(off: i64) -> Ix {
    Ix { ci: 0, cj: 1, ck: 0, cn: 0, off }
}
pub const fn k(off: i64) -> Ix {
    Ix { ci: 0, cj: 0, ck: 1, cn: 0, off }
}
pub const fn n(off: i64) -> Ix {
    Ix { ci: 0, cj: 0, ck: 0, cn: 1, off }
}

impl std::ops::Add for Ix {
    type Output = Ix;
    fn add(self, o: Ix) -> Ix {
        Ix { ci: self.ci + o.ci, cj: self.cj + o.cj, ck: self.ck + o.ck, cn: self.cn + o.cn, off: self.off + o.off }
    }
}

impl std::ops::Neg for Ix {
    type Output = Ix;
    fn neg(self) -> Ix {
        Ix { ci: -self.ci, cj: -self.cj, ck: -self.ck, cn: -self.cn, off: -self.off }
    }
}

impl std::ops::Sub for Ix {
    type Output = Ix;
    fn sub(self, o: Ix) -> Ix {
        self + (-o)
    }
}

/// Values of the index variables for one instance of a relation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Binding {
    pub i: i64,
    pub j: i64,
    pub k: i64,
    pub n: i64,
}

impl Binding {
    pub fn get(&self, b: Base) -> i64 {
        match b {
            Base::Lit => 0,
            Base::I => self.i,
            Base::J => self.j,
            Base::K => self.k,
            Base::N => self.n,
        }
    }

    fn set(&mut self, b: Base, v: i64) {
        match b {
            Base::I => self.i = v,
            Base::J => self.j = v,
            Base::K => self.k = v,
            Base::N => self.n = v,
            Base::Lit => {}
        }
    }
}

impl Ix {
    pub fn eval(&self, b: &Binding) -> i64 {
        self.ci * b.i + self.cj * b.j + self.ck * b.k + self.cn * b.n + self.off
    }

    fn var(b: Base) -> Ix {
        match b {
            Base::Lit => lit(0),
            Base::I => i(0),
            Base::J => j(0),
            Base::K => k(0),
            Base::N => n(0),
        }
    }
}

impl fmt::Display for Ix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, name) in [(self.cn, "n"), (self.ck, "k"), (self.ci, "i"), (self.cj, "j")] {
            let sign = if c < 0 { "-" } else if out.is_empty() { "" } else { "+" };
            match c.abs() {
                0 => continue,
                1 => out.push_str(&format!("{sign}{name}")),
                a => out.push_str(&format!("{sign}{a}{name}")),
            }
        }
        if out.is_empty() {
            out = self.off.to_string();
        } else if self.off != 0 {
            out.push_str(&format!("{:+}", self.off));
        }
        f.write_str(&out)
    }
}

/// Side conditions on a binding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cond {
    Le(Ix, Ix),
    Lt(Ix, Ix),
    NotIn(Ix, Ix, Ix),
    Apart(Ix, Ix),
}

impl Cond {
    pub fn holds(&self, b: &Binding) -> bool {
        match self {
            Cond::Le(x, y) => x.eval(b) <= y.eval(b),
            Cond::Lt(x, y) => x.eval(b) < y.eval(b),
            Cond::NotIn(x, y, z) => {
                let v = x.eval(b);
                v != y.eval(b) && v != z.eval(b)
            }
            Cond::Apart(x, y) => (x.eval(b) - y.eval(b)).abs() > 1,
        }
    }
}

impl fmt::Display for Cond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cond::Le(x, y) => write!(f, "{x} <= {y}"),
            Cond::Lt(x, y) => write!(f, "{x} < {y}"),
            Cond::NotIn(x, y, z) => write!(f, "{x} not in {{{y},{z}}}"),
            Cond::Apart(x, y) => write!(f, "|{x}-({y})| > 1"),
        }
    }
}

/// Generators that come in runs such as `T_k^{-1}⋯T_{n-1}^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunOf {
    T,
    Tinv,
    X,
}

/// One operator in a relation word.
#[derive(Clone, Debug, PartialEq)]
pub enum Letter {
    T(Ix),
    Tinv(Ix),
    X(Ix),
    Y(Ix),
    Pi,
    PiTilde,
    Eps(Ix),
    /// `G_a G_{a±1} ⋯ G_b` as written; empty when `b` lies behind `a`.
    Run { of: RunOf, from: Ix, to: Ix, ascending: bool },
    Z(Ix),
    DPlus,
    DMinus,
    Phi,
    /// Tag the current vector as lying in flavor `k`.
    Flavor(Ix),
    /// The connecting map from rank `n+1` to rank `n`.
    Conn,
}

pub fn asc(of: RunOf, from: Ix, to: Ix) -> Letter {
    Letter::Run { of, from, to, ascending: true }
}

pub fn desc(of: RunOf, from: Ix, to: Ix) -> Letter {
    Letter::Run { of, from, to, ascending: false }
}

impl Letter {
    /// Indices of a run, left to right as written.
    pub fn run_indices(from: i64, to: i64, ascending: bool) -> Vec<i64> {
        if ascending {
            (from..=to).collect()
        } else {
            (to..=from).rev().collect()
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::T(x) => write!(f, "T_{{{x}}}"),
            Letter::Tinv(x) => write!(f, "T_{{{x}}}^-1"),
            Letter::X(x) => write!(f, "X_{{{x}}}"),
            Letter::Y(x) => write!(f, "Y_{{{x}}}"),
            Letter::Pi => write!(f, "pi"),
            Letter::PiTilde => write!(f, "pi~"),
            Letter::Eps(x) => write!(f, "eps_{{{x}}}"),
            Letter::Run { of, from, to, ascending: _ } => {
                let (g, suffix) = match of {
                    RunOf::T => ("T", ""),
                    RunOf::Tinv => ("T", "^-1"),
                    RunOf::X => ("X", ""),
                };
                write!(f, "({g}_{{{from}}}{suffix}..{g}_{{{to}}}{suffix})")
            }
            Letter::Z(x) => write!(f, "z_{{{x}}}"),
            Letter::DPlus => write!(f, "d+"),
            Letter::DMinus => write!(f, "d-"),
            Letter::Phi => write!(f, "phi"),
            Letter::Flavor(x) => write!(f, "[L_{{{x}}}]"),
            Letter::Conn => write!(f, "Pi"),
        }
    }
}

/// Coefficient of a term.
#[derive(Clone, Debug, PartialEq)]
pub enum Coeff {
    C(QtScalar),
    /// `c · q^e`.
    QPow(QtScalar, Ix),
    /// `q^e - 1`.
    QPowMinusOne(Ix),
}

impl Coeff {
    pub fn eval(&self, b: &Binding) -> QtScalar {
        match self {
            Coeff::C(c) => c.clone(),
            Coeff::QPow(c, e) => c.mul(&QtScalar::q_pow(e.eval(b) as i32)),
            Coeff::QPowMinusOne(e) => QtScalar::q_pow(e.eval(b) as i32).sub(&QtScalar::int(1)),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::C(c) => write!(f, "({c})"),
            Coeff::QPow(c, e) => write!(f, "({c})*q^({e})"),
            Coeff::QPowMinusOne(e) => write!(f, "(q^({e})-1)"),
        }
    }
}

/// `coeff · word`, optionally summed over `j` from `lo` to `hi`.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: Coeff,
    pub word: Vec<Letter>,
    pub sum_j: Option<(Ix, Ix)>,
}

pub fn term(word: Vec<Letter>) -> Term {
    Term { coeff: Coeff::C(QtScalar::int(1)), word, sum_j: None }
}

pub fn scaled(c: &str, word: Vec<Letter>) -> Term {
    Term { coeff: Coeff::C(qt(c)), word, sum_j: None }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((lo, hi)) = &self.sum_j {
            write!(f, "sum_{{j={lo}..{hi}}} ")?;
        }
        write!(f, "{}", self.coeff)?;
        for l in &self.word {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

pub fn side_text(s: &[Term]) -> String {
    if s.is_empty() {
        return "0".into();
    }
    s.iter().map(ToString::to_string).collect::<Vec<_>>().join(" + ")
}

/// Which vectors a relation is tested on.
#[derive(Clone, Debug, PartialEq)]
pub enum Domain {
    /// Every basis vector of each degree.
    Basis,
    /// `ε_x(b)` for every basis vector `b`.
    EpsImage(Ix),
    /// The spanning set of `L_k` in each degree.
    Flavor,
    /// Basis of the upper module `V^(n+1)`.
    Upper,
    /// Degree-zero basis (the seed).
    Seed,
    /// Bases of both `V^(n)` and `V^(n+1)`.
    BothRanks,
    /// Degree-zero basis of the upper module.
    UpperSeed,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Basis => write!(f, "basis vectors of each degree"),
            Domain::EpsImage(x) => write!(f, "eps_{{{x}}} of basis vectors"),
            Domain::Flavor => write!(f, "spanning vectors X_1..X_k eps_k(b) of L_k in each degree"),
            Domain::Upper => write!(f, "basis vectors of V^(n+1) of each degree"),
            Domain::Seed => write!(f, "degree-0 basis"),
            Domain::BothRanks => write!(f, "basis vectors of V^(n) and V^(n+1) of each degree"),
            Domain::UpperSeed => write!(f, "degree-0 basis of V^(n+1)"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Daha,
    Bqt,
    Aux,
    Compat,
}

/// What a relation asserts.
#[derive(Clone, Debug, PartialEq)]
pub enum Claim {
    /// `lhs = rhs` on every domain vector.
    Equation { lhs: Vec<Term>, rhs: Vec<Term> },
    /// Generators of `V^(n)` and `V^(n+1)` respect the grading and `T_i` is invertible.
    GradedModule,
    /// The connecting map sends degree-`d` vectors to degree `d`.
    ConnDegree,
    /// `θ_i e_τ = q^{c_τ(i)} e_τ` on the seed.
    ThetaSpectrum,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationSpec {
    pub id: &'static str,
    pub anchor: &'static str,
    pub suite: Suite,
    /// Enumerated in order; bounds may use earlier variables.
    pub vars: Vec<(Base, Ix, Ix)>,
    pub conds: Vec<Cond>,
    pub domain: Domain,
    pub claim: Claim,
}

impl RelationSpec {
    /// All bindings at rank `n` (or lower rank `n` for the compat suite).
    pub fn bindings(&self, rank: usize) -> Vec<Binding> {
        let base = Binding { n: rank as i64, ..Binding::default() };
        let mut acc = vec![base];
        for (var, lo, hi) in &self.vars {
            let mut next = Vec::new();
            for b in acc {
                for v in lo.eval(&b)..=hi.eval(&b) {
                    let mut nb = b;
                    nb.set(*var, v);
                    next.push(nb);
                }
            }
            acc = next;
        }
        acc.retain(|b| self.conds.iter().all(|c| c.holds(b)));
        acc
    }

    pub fn applicability(&self) -> String {
        let mut parts: Vec<String> = self
            .vars
            .iter()
            .map(|(v, lo, hi)| format!("{lo} <= {} <= {hi}", Ix::var(*v)))
            .collect();
        parts.extend(self.conds.iter().map(ToString::to_string));
        parts.join(", ")
    }

    pub fn statement(&self) -> String {
        match &self.claim {
            Claim::Equation { lhs, rhs } => format!("{} = {}", side_text(lhs), side_text(rhs)),
            Claim::GradedModule => "deg T_i = deg Y_i = deg pi = 0, deg X_i = 1, T_i T_i^-1 = 1".into(),
            Claim::ConnDegree => "deg Pi(v) = deg v".into(),
            Claim::ThetaSpectrum => "theta_i e_tau = q^c_tau(i) e_tau".into(),
        }
    }
}

/// Net `(flavor, degree)` change of a word, from an optional starting flavor.
pub fn displacement(word: &[Letter], b: &Binding, flavor: Option<i64>) -> (Option<i64>, i64) {
    let (mut f, mut d) = (flavor, 0);
    for l in word.iter().rev() {
        match l {
            Letter::X(_) => d += 1,
            Letter::Run { of: RunOf::X, from, to, ascending } => {
                d += Letter::run_indices(from.eval(b), to.eval(b), *ascending).len() as i64
            }
            Letter::PiTilde | Letter::Phi => d += 1,
            Letter::DPlus => {
                f = f.map(|k| k + 1);
                d += 1;
            }
            Letter::DMinus => f = f.map(|k| k - 1),
            Letter::Flavor(x) => f = Some(x.eval(b)),
            _ => {}
        }
    }
    (f, d)
}

impl RelationSpec {
    /// Every term of an equation moves flavor and degree by the same amount.
    pub fn balanced(&self, rank: usize) -> bool {
        let Claim::Equation { lhs, rhs } = &self.claim else {
            return true;
        };
        self.bindings(rank).iter().all(|b| {
            let start = (self.domain == Domain::Flavor).then_some(b.k);
            let mut seen = BTreeSet::new();
            for t in lhs.iter().chain(rhs) {
                let js: Vec<i64> = match &t.sum_j {
                    Some((lo, hi)) => (lo.eval(b)..=hi.eval(b)).collect(),
                    None => vec![b.j],
                };
                for jv in js {
                    let bj = Binding { j: jv, ..*b };
                    seen.insert(displacement(&t.word, &bj, start));
                }
            }
            seen.len() <= 1
        })
    }
}

fn eq(lhs: Vec<Term>, rhs: Vec<Term>) -> Claim {
    Claim::Equation { lhs, rhs }
}

use Letter::*;

/// The eleven defining relations of the positive DAHA.
pub fn daha_relations() -> Vec<RelationSpec> {
    let ti = || vec![(Base::I, lit(1), n(-1))];
    let mk = |id, anchor, vars, conds, claim| RelationSpec {
        id,
        anchor,
        suite: Suite::Daha,
        vars,
        conds,
        domain: Domain::Basis,
        claim,
    };
    vec![
        mk(
            "daha.1",
            "(T_i - 1)(T_i + q) = 0",
            ti(),
            vec![],
            eq(vec![term(vec![T(i(0)), T(i(0))]), scaled("q-1", vec![T(i(0))]), scaled("-q", vec![])], vec![]),
        ),
        mk(
            "daha.2",
            "T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}",
            vec![(Base::I, lit(1), n(-2))],
            vec![],
            eq(vec![term(vec![T(i(0)), T(i(1)), T(i(0))])], vec![term(vec![T(i(1)), T(i(0)), T(i(1))])]),
        ),
        mk(
            "daha.3",
            "T_i T_j = T_j T_i, |i-j| > 1",
            vec![(Base::I, lit(1), n(-1)), (Base::J, i(2), n(-1))],
            vec![],
            eq(vec![term(vec![T(i(0)), T(j(0))])], vec![term(vec![T(j(0)), T(i(0))])]),
        ),
        mk(
            "daha.4",
            "T_i^{-1} X_i T_i^{-1} = q^{-1} X_{i+1}",
            ti(),
            vec![],
            eq(vec![term(vec![Tinv(i(0)), X(i(0)), Tinv(i(0))])], vec![scaled("1/q", vec![X(i(1))])]),
        ),
        mk(
            "daha.5",
            "T_i X_j = X_j T_i, j not in {i, i+1}",
            vec![(Base::I, lit(1), n(-1)), (Base::J, lit(1), n(0))],
            vec![Cond::NotIn(j(0), i(0), i(1))],
            eq(vec![term(vec![T(i(0)), X(j(0))])], vec![term(vec![X(j(0)), T(i(0))])]),
        ),
        mk(
            "daha.6",
            "X_i X_j = X_j X_i",
            vec![(Base::I, lit(1), n(0)), (Base::J, i(1), n(0))],
            vec![],
            eq(vec![term(vec![X(i(0)), X(j(0))])], vec![term(vec![X(j(0)), X(i(0))])]),
        ),
        mk(
            "daha.7",
            "T_i Y_i T_i = q Y_{i+1}",
            ti(),
            vec![],
            eq(vec![term(vec![T(i(0)), Y(i(0)), T(i(0))])], vec![scaled("q", vec![Y(i(1))])]),
        ),
        mk(
            "daha.8",
            "T_i Y_j = Y_j T_i, j not in {i, i+1}",
            vec![(Base::I, lit(1), n(-1)), (Base::J, lit(1), n(0))],
            vec![Cond::NotIn(j(0), i(0), i(1))],
            eq(vec![term(vec![T(i(0)), Y(j(0))])], vec![term(vec![Y(j(0)), T(i(0))])]),
        ),
        mk(
            "daha.9",
            "Y_i Y_j = Y_j Y_i",
            vec![(Base::I, lit(1), n(0)), (Base::J, i(1), n(0))],
            vec![],
            eq(vec![term(vec![Y(i(0)), Y(j(0))])], vec![term(vec![Y(j(0)), Y(i(0))])]),
        ),
        mk(
            "daha.10",
            "Y_1 T_1 X_1 = X_2 Y_1 T_1",
            vec![],
            vec![Cond::Le(lit(2), n(0))],
            eq(vec![term(vec![Y(lit(1)), T(lit(1)), X(lit(1))])], vec![term(vec![X(lit(2)), Y(lit(1)), T(lit(1))])]),
        ),
        mk(
            "daha.11",
            "Y_1 X_1 ... X_n = t X_1 ... X_n Y_1",
            vec![],
            vec![],
            eq(
                vec![term(vec![Y(lit(1)), asc(RunOf::X, lit(1), n(0))])],
                vec![scaled("t", vec![asc(RunOf::X, lit(1), n(0)), Y(lit(1))])],
            ),
        ),
    ]
}

/// The fifteen relations of 𝔹, as maps out of `L_k`.
pub fn bqt_relations() -> Vec<RelationSpec> {
    let mk = |id, anchor, mut vars: Vec<(Base, Ix, Ix)>, conds, claim| {
        vars.insert(0, (Base::K, lit(0), n(0)));
        RelationSpec { id, anchor, suite: Suite::Bqt, vars, conds, domain: Domain::Flavor, claim }
    };
    let tk = || vec![(Base::I, lit(1), k(-1))];
    vec![
        mk(
            "bqt.1",
            "(T_i - 1)(T_i + q) = 0",
            tk(),
            vec![],
            eq(vec![term(vec![T(i(0)), T(i(0))]), scaled("q-1", vec![T(i(0))]), scaled("-q", vec![])], vec![]),
        ),
        mk(
            "bqt.2",
            "T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}",
            vec![(Base::I, lit(1), k(-2))],
            vec![],
            eq(vec![term(vec![T(i(0)), T(i(1)), T(i(0))])], vec![term(vec![T(i(1)), T(i(0)), T(i(1))])]),
        ),
        mk(
            "bqt.3",
            "T_i T_j = T_j T_i if |i-j| > 1",
            vec![(Base::I, lit(1), k(-1)), (Base::J, i(2), k(-1))],
            vec![],
            eq(vec![term(vec![T(i(0)), T(j(0))])], vec![term(vec![T(j(0)), T(i(0))])]),
        ),
        mk(
            "bqt.4",
            "T_i^{-1} z_{i+1} T_i^{-1} = q^{-1} z_i for 1 <= i <= k-1",
            tk(),
            vec![],
            eq(vec![term(vec![Tinv(i(0)), Z(i(1)), Tinv(i(0))])], vec![scaled("1/q", vec![Z(i(0))])]),
        ),
        mk(
            "bqt.5",
            "z_i T_j = T_j z_i if i not in {j, j+1}",
            vec![(Base::I, lit(1), k(0)), (Base::J, lit(1), k(-1))],
            vec![Cond::NotIn(i(0), j(0), j(1))],
            eq(vec![term(vec![Z(i(0)), T(j(0))])], vec![term(vec![T(j(0)), Z(i(0))])]),
        ),
        mk(
            "bqt.6",
            "z_i z_j = z_j z_i for 1 <= i,j <= k",
            vec![(Base::I, lit(1), k(0)), (Base::J, i(1), k(0))],
            vec![],
            eq(vec![term(vec![Z(i(0)), Z(j(0))])], vec![term(vec![Z(j(0)), Z(i(0))])]),
        ),
        mk(
            "bqt.7",
            "d_-^2 T_{k-1} = d_-^2 for k >= 2",
            vec![],
            vec![Cond::Le(lit(2), k(0))],
            eq(vec![term(vec![DMinus, DMinus, T(k(-1))])], vec![term(vec![DMinus, DMinus])]),
        ),
        mk(
            "bqt.8",
            "d_- T_i = T_i d_- for 1 <= i <= k-2",
            vec![(Base::I, lit(1), k(-2))],
            vec![],
            eq(vec![term(vec![DMinus, T(i(0))])], vec![term(vec![T(i(0)), DMinus])]),
        ),
        mk(
            "bqt.9",
            "T_1 d_+^2 = d_+^2",
            vec![],
            vec![Cond::Le(k(0), n(-2))],
            eq(vec![term(vec![T(lit(1)), DPlus, DPlus])], vec![term(vec![DPlus, DPlus])]),
        ),
        mk(
            "bqt.10",
            "d_+ T_i = T_{i+1} d_+ for 1 <= i <= k-1",
            vec![(Base::I, lit(1), k(-1))],
            vec![Cond::Le(k(0), n(-1))],
            eq(vec![term(vec![DPlus, T(i(0))])], vec![term(vec![T(i(1)), DPlus])]),
        ),
        mk(
            "bqt.11",
            "q phi d_- = d_- phi T_{k-1} for k >= 2",
            vec![],
            vec![Cond::Le(lit(2), k(0)), Cond::Le(k(0), n(-1))],
            eq(vec![scaled("q", vec![Phi, DMinus])], vec![term(vec![DMinus, Phi, T(k(-1))])]),
        ),
        mk(
            "bqt.12",
            "T_1 phi d_+ = q d_+ phi for k >= 1",
            vec![],
            vec![Cond::Le(lit(1), k(0)), Cond::Le(k(0), n(-2))],
            eq(vec![term(vec![T(lit(1)), Phi, DPlus])], vec![scaled("q", vec![DPlus, Phi])]),
        ),
        mk(
            "bqt.13",
            "z_i d_- = d_- z_i",
            vec![(Base::I, lit(1), k(-1))],
            vec![],
            eq(vec![term(vec![Z(i(0)), DMinus])], vec![term(vec![DMinus, Z(i(0))])]),
        ),
        mk(
            "bqt.14",
            "d_+ z_i = z_{i+1} d_+",
            vec![(Base::I, lit(1), k(0))],
            vec![Cond::Le(k(0), n(-1))],
            eq(vec![term(vec![DPlus, Z(i(0))])], vec![term(vec![Z(i(1)), DPlus])]),
        ),
        mk(
            "bqt.15",
            "z_1 (q d_+ d_- - d_- d_+) = qt (d_+ d_- - d_- d_+) z_k for k >= 1",
            vec![],
            vec![Cond::Le(lit(1), k(0)), Cond::Le(k(0), n(-1))],
            eq(
                vec![scaled("q", vec![Z(lit(1)), DPlus, DMinus]), scaled("-1", vec![Z(lit(1)), DMinus, DPlus])],
                vec![scaled("q*t", vec![DPlus, DMinus, Z(k(0))]), scaled("-q*t", vec![DMinus, DPlus, Z(k(0))])],
            ),
        ),
    ]
}

/// Derived identities: π and π̃ conjugations, ε laws, Jucys–Murphy
/// expansions, and the closed forms of `φ` and `d_-`.
pub fn aux_identities() -> Vec<RelationSpec> {
    let mk = |id, anchor, vars, conds, domain, claim| RelationSpec {
        id,
        anchor,
        suite: Suite::Aux,
        vars,
        conds,
        domain,
        claim,
    };
    let b = || Domain::Basis;
    let kr = || (Base::K, lit(0), n(0));
    let pik = |kk: Ix| vec![X(lit(1)), asc(RunOf::Tinv, lit(1), kk - lit(1))];
    let twice = |w: Vec<Letter>| {
        let mut v = w.clone();
        v.extend(w);
        v
    };
    // Σ_{j=0}^{n-k-1} q^j (T_k^-1..T_{k+j-1}^-1) T_{k+j}^-1 (T_{k+j-1}^-1..T_k^-1)
    let jm_conj = Term {
        coeff: Coeff::QPow(qt("q-1"), j(0)),
        word: vec![
            asc(RunOf::Tinv, k(0), k(-1) + j(0)),
            Tinv(k(0) + j(0)),
            desc(RunOf::Tinv, k(-1) + j(0), k(0)),
        ],
        sum_j: Some((lit(0), n(-1) - k(0))),
    };
    let jm_printed = Term {
        coeff: Coeff::QPow(qt("q-1"), j(0)),
        word: vec![desc(RunOf::Tinv, k(0) + j(0), k(0))],
        sum_j: Some((lit(0), n(-1) - k(0))),
    };
    let jm_lhs = Term {
        coeff: Coeff::QPow(QtScalar::int(1), n(0) - k(0)),
        word: vec![asc(RunOf::Tinv, k(0), n(-1)), desc(RunOf::Tinv, n(-1), k(0))],
        sum_j: None,
    };
    vec![
        mk("aux.pi_x", "pi X_i = X_{i+1} pi for 1 <= i <= n-1", vec![(Base::I, lit(1), n(-1))], vec![], b(),
            eq(vec![term(vec![Pi, X(i(0))])], vec![term(vec![X(i(1)), Pi])])),
        mk("aux.pi_t", "pi T_i = T_{i+1} pi (checked for 1 <= i <= n-2)", vec![(Base::I, lit(1), n(-2))], vec![], b(),
            eq(vec![term(vec![Pi, T(i(0))])], vec![term(vec![T(i(1)), Pi])])),
        mk("aux.pi2_t", "pi^2 T_{n-1} = T_1 pi^2", vec![], vec![Cond::Le(lit(2), n(0))], b(),
            eq(vec![term(vec![Pi, Pi, T(n(-1))])], vec![term(vec![T(lit(1)), Pi, Pi])])),
        mk("aux.pi_def", "pi = q^{-n} Y_1 T_1 ... T_{n-1}", vec![], vec![], b(),
            eq(vec![term(vec![Pi])], vec![Term { coeff: Coeff::QPow(QtScalar::int(1), -n(0)), word: vec![Y(lit(1)), asc(RunOf::T, lit(1), n(-1))], sum_j: None }])),
        mk("aux.eps_idempotent", "eps_k^2 = eps_k", vec![kr()], vec![], b(),
            eq(vec![term(vec![Eps(k(0)), Eps(k(0))])], vec![term(vec![Eps(k(0))])])),
        mk("aux.eps_absorb_right", "eps_k T_i = eps_k for k+1 <= i <= n-1", vec![kr(), (Base::I, k(1), n(-1))], vec![], b(),
            eq(vec![term(vec![Eps(k(0)), T(i(0))])], vec![term(vec![Eps(k(0))])])),
        mk("aux.eps_absorb_left", "T_i eps_k = eps_k for k+1 <= i <= n-1", vec![kr(), (Base::I, k(1), n(-1))], vec![], b(),
            eq(vec![term(vec![T(i(0)), Eps(k(0))])], vec![term(vec![Eps(k(0))])])),
        mk("aux.eps_commute", "T_i eps_k = eps_k T_i for 1 <= i <= k-1", vec![kr(), (Base::I, lit(1), k(-1))], vec![], b(),
            eq(vec![term(vec![T(i(0)), Eps(k(0))])], vec![term(vec![Eps(k(0)), T(i(0))])])),
        mk("aux.eps_min", "eps_k eps_l = eps_min(k,l)", vec![kr(), (Base::J, lit(0), n(0))], vec![Cond::Le(k(0), j(0))], b(),
            eq(vec![term(vec![Eps(k(0)), Eps(j(0))])], vec![term(vec![Eps(k(0))])])),
        mk("aux.eps_min_rev", "eps_l eps_k = eps_min(k,l)", vec![kr(), (Base::J, lit(0), n(0))], vec![Cond::Le(k(0), j(0))], b(),
            eq(vec![term(vec![Eps(j(0)), Eps(k(0))])], vec![term(vec![Eps(k(0))])])),
        mk("aux.pitilde_y", "pi~ Y_i = Y_{i+1} pi~ for 1 <= i <= n-1", vec![(Base::I, lit(1), n(-1))], vec![], b(),
            eq(vec![term(vec![PiTilde, Y(i(0))])], vec![term(vec![Y(i(1)), PiTilde])])),
        mk("aux.pitilde_yn", "pi~ t Y_n = Y_1 pi~", vec![], vec![], b(),
            eq(vec![scaled("t", vec![PiTilde, Y(n(0))])], vec![term(vec![Y(lit(1)), PiTilde])])),
        mk("aux.pitilde_t", "pi~ T_i = T_{i+1} pi~ for 1 <= i <= n-2", vec![(Base::I, lit(1), n(-2))], vec![], b(),
            eq(vec![term(vec![PiTilde, T(i(0))])], vec![term(vec![T(i(1)), PiTilde])])),
        mk("aux.pitilde2_t", "pi~^2 T_{n-1} = T_1 pi~^2", vec![], vec![Cond::Le(lit(2), n(0))], b(),
            eq(vec![term(vec![PiTilde, PiTilde, T(n(-1))])], vec![term(vec![T(lit(1)), PiTilde, PiTilde])])),
        mk("aux.pik_t", "(X_1 T_1^{-1}..T_{k-1}^{-1}) T_i = T_{i+1} (X_1 T_1^{-1}..T_{k-1}^{-1}) for 1 <= i <= k-2",
            vec![(Base::K, lit(2), n(0)), (Base::I, lit(1), k(-2))], vec![], b(),
            eq(vec![term([pik(k(0)), vec![T(i(0))]].concat())], vec![term([vec![T(i(1))], pik(k(0))].concat())])),
        mk("aux.pik2_t", "(X_1 T_1^{-1}..T_{k-1}^{-1})^2 T_{k-1} = T_1 (X_1 T_1^{-1}..T_{k-1}^{-1})^2",
            vec![(Base::K, lit(2), n(0))], vec![], b(),
            eq(vec![term([twice(pik(k(0))), vec![T(k(-1))]].concat())], vec![term([vec![T(lit(1))], twice(pik(k(0)))].concat())])),
        mk("aux.jucys_murphy", "q^{n-k} T_k^{-1}..T_{n-1}^{-1} T_{n-1}^{-1}..T_k^{-1} = 1 + (q-1) sum_j q^j (T_k^{-1}..T_{k+j-1}^{-1}) T_{k+j}^{-1} (T_{k+j-1}^{-1}..T_k^{-1})",
            vec![(Base::K, lit(1), n(-1))], vec![], b(),
            eq(vec![jm_lhs.clone()], vec![term(vec![]), jm_conj])),
        mk("aux.jucys_murphy_printed", "q^{n-k} T_k^{-1}..T_{n-1}^{-1} T_{n-1}^{-1}..T_k^{-1} = 1 + (q-1)(T_k^{-1} + q T_{k+1}^{-1} T_k^{-1} + ... + q^{n-k-1} T_{n-1}^{-1}..T_k^{-1}) on eps_k images",
            vec![(Base::K, lit(1), n(-1))], vec![], Domain::EpsImage(k(0)),
            eq(vec![jm_lhs], vec![term(vec![]), jm_printed])),
        mk("aux.phi_closed_form", "phi = [d_+, d_-]/(q-1) = q^{k-1} X_1 T_1^{-1}..T_{k-1}^{-1}",
            vec![(Base::K, lit(1), n(-1))], vec![], Domain::Flavor,
            eq(vec![scaled("1/(q-1)", vec![DPlus, DMinus]), scaled("-1/(q-1)", vec![DMinus, DPlus])],
               vec![Term { coeff: Coeff::QPow(QtScalar::int(1), k(-1)), word: pik(k(0)), sum_j: None }])),
        mk("aux.d_minus_closed_form", "d_- X_1..X_k eps_k(w) = X_1..X_{k-1} eps_{k-1}((q^{n-k+1}-1) X_k w)",
            vec![(Base::K, lit(1), n(0))], vec![], b(),
            eq(vec![term(vec![DMinus, Flavor(k(0)), asc(RunOf::X, lit(1), k(0)), Eps(k(0))])],
               vec![Term { coeff: Coeff::QPowMinusOne(n(1) - k(0)), word: vec![Flavor(k(-1)), asc(RunOf::X, lit(1), k(-1)), Eps(k(-1)), X(k(0))], sum_j: None }])),
        mk("aux.theta_spectrum", "theta_i(e_tau) = q^{c_tau(i)} e_tau", vec![(Base::I, lit(1), n(0))], vec![], Domain::Seed, Claim::ThetaSpectrum),
    ]
}

/// Axioms of a compatible sequence between ranks `n+1` and `n`.
pub fn compat_axioms(with_seed_axioms: bool) -> Vec<RelationSpec> {
    let mk = |id, anchor, vars, domain, claim| RelationSpec {
        id,
        anchor,
        suite: Suite::Compat,
        vars,
        conds: vec![],
        domain,
        claim,
    };
    let mut out = vec![
        mk("compat.1", "each V^(n) is a graded D_n^+ module", vec![], Domain::BothRanks, Claim::GradedModule),
        mk("compat.2", "Pi^(n) is degree-preserving", vec![], Domain::Upper, Claim::ConnDegree),
        mk("compat.3", "Pi^(n) is an A_n^X module map (T_i)", vec![(Base::I, lit(1), n(-1))], Domain::Upper,
            eq(vec![term(vec![Conn, T(i(0))])], vec![term(vec![T(i(0)), Conn])])),
        mk("compat.3x", "Pi^(n) is an A_n^X module map (X_i)", vec![(Base::I, lit(1), n(0))], Domain::Upper,
            eq(vec![term(vec![Conn, X(i(0))])], vec![term(vec![X(i(0)), Conn])])),
        mk("compat.4", "Pi^(n) X_{n+1} = 0", vec![], Domain::Upper, eq(vec![term(vec![Conn, X(n(1))])], vec![])),
        mk("compat.5", "Pi^(n) pi^(n+1) T_n = pi^(n) Pi^(n)", vec![], Domain::Upper,
            eq(vec![term(vec![Conn, Pi, T(n(0))])], vec![term(vec![Pi, Conn])])),
    ];
    if with_seed_axioms {
        out.push(mk("precompat.hecke", "kappa^(n) is an H_n module map", vec![(Base::I, lit(1), n(-1))], Domain::UpperSeed,
            eq(vec![term(vec![Conn, T(i(0))])], vec![term(vec![T(i(0)), Conn])])));
        out.push(mk("precompat.pi", "kappa^(n) pi^(n+1) T_n = pi^(n) kappa^(n)", vec![], Domain::UpperSeed,
            eq(vec![term(vec![Conn, Pi, T(n(0))])], vec![term(vec![Pi, Conn])])));
    }
    out
}
