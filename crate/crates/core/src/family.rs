//! Descriptors for the concrete modules and towers, buildable over any field.

use std::fmt;

use crate::daha::{Consts, PolyModule, Realization, TVariant};
use crate::error::{Error, Result};
use crate::induced::{Connector, InducedModule};
use crate::scalar::Field;
use crate::syt::{StandardTableau, YoungDiagram};
use crate::vector::{Key, Vector};

/// Which module to build at a given rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    Poly { n: usize, variant: TVariant },
    Murnaghan { lambda: YoungDiagram, n: usize },
}

impl ModuleSpec {
    pub fn poly(n: usize) -> Self {
        ModuleSpec::Poly { n, variant: TVariant::Standard }
    }

    pub fn murnaghan(lambda: YoungDiagram, n: usize) -> Self {
        ModuleSpec::Murnaghan { lambda, n }
    }

    pub fn rank(&self) -> usize {
        match self {
            ModuleSpec::Poly { n, .. } | ModuleSpec::Murnaghan { n, .. } => *n,
        }
    }

    pub fn build<K: Field>(&self, point: K::Point) -> Result<AnyModule<K>> {
        match self {
            ModuleSpec::Poly { n, variant } => {
                if *n == 0 {
                    return Err(Error::RankTooSmall { n: 0, min: 1 });
                }
                Ok(AnyModule::Poly(PolyModule::with_variant(*n, point, *variant)?))
            }
            ModuleSpec::Murnaghan { lambda, n } => Ok(AnyModule::Ind(InducedModule::new(lambda, *n, point)?)),
        }
    }
}

impl fmt::Display for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSpec::Poly { n, variant: TVariant::Standard } => write!(f, "poly(n={n})"),
            ModuleSpec::Poly { n, variant: TVariant::SignFlipped } => write!(f, "poly-signflip(n={n})"),
            ModuleSpec::Murnaghan { lambda, n } => write!(f, "murnaghan(lambda={lambda}, n={n})"),
        }
    }
}

/// A built module of either kind.
pub enum AnyModule<K: Field> {
    Poly(PolyModule<K>),
    Ind(InducedModule<K>),
}

impl<K: Field> AnyModule<K> {
    /// Tableau labels for vector I/O, if the module carries a seed.
    pub fn tableaux(&self) -> Option<&[StandardTableau]> {
        match self {
            AnyModule::Poly(_) => None,
            AnyModule::Ind(m) => Some(&m.seed().tableaux),
        }
    }
}

macro_rules! delegate {
    ($self:ident, $m:ident => $e:expr) => {
        match $self {
            AnyModule::Poly($m) => $e,
            AnyModule::Ind($m) => $e,
        }
    };
}

impl<K: Field> Realization<K> for AnyModule<K> {
    fn rank(&self) -> usize {
        delegate!(self, m => m.rank())
    }

    fn consts(&self) -> &Consts<K> {
        delegate!(self, m => m.consts())
    }

    fn basis(&self, d: u32) -> Vec<Key> {
        delegate!(self, m => m.basis(d))
    }

    fn apply_t(&self, v: &Vector<K>, i: usize) -> Vector<K> {
        delegate!(self, m => m.apply_t(v, i))
    }

    fn apply_t_inv(&self, v: &Vector<K>, i: usize) -> Vector<K> {
        delegate!(self, m => m.apply_t_inv(v, i))
    }

    fn apply_pi(&self, v: &Vector<K>) -> Vector<K> {
        delegate!(self, m => m.apply_pi(v))
    }

    fn describe(&self) -> String {
        delegate!(self, m => m.describe())
    }
}

/// A compatible sequence: the polynomial tower or a Murnaghan-type tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeqSpec {
    Pol,
    Murnaghan(YoungDiagram),
}

impl SeqSpec {
    /// Smallest rank in the sequence.
    pub fn n_start(&self) -> usize {
        match self {
            SeqSpec::Pol => 1,
            SeqSpec::Murnaghan(l) => l.threshold().max(1),
        }
    }

    pub fn module(&self, n: usize) -> Result<ModuleSpec> {
        if n < self.n_start() {
            return Err(Error::RankTooSmall { n, min: self.n_start() });
        }
        Ok(match self {
            SeqSpec::Pol => ModuleSpec::poly(n),
            SeqSpec::Murnaghan(l) => ModuleSpec::murnaghan(l.clone(), n),
        })
    }

    /// The connecting map from rank `n+1` to rank `n`.
    pub fn connector<K: Field>(&self, upper: &AnyModule<K>, lower: &AnyModule<K>) -> Result<Connector> {
        match (upper, lower) {
            (AnyModule::Poly(_), AnyModule::Poly(_)) => Ok(Connector::xi()),
            (AnyModule::Ind(u), AnyModule::Ind(l)) => Connector::pi(u, l),
            _ => Err(Error::ShapeMismatch("connector between different module kinds".into())),
        }
    }
}

impl fmt::Display for SeqSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeqSpec::Pol => write!(f, "C_pol"),
            SeqSpec::Murnaghan(l) => write!(f, "murnaghan({l})"),
        }
    }
}
