use crate::scalar::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("{what} index {index} out of range for rank {rank}")]
    IndexOutOfRange { what: &'static str, index: usize, rank: usize },
    #[error("rank {n} is below the threshold {min} for this shape")]
    RankTooSmall { n: usize, min: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("tableau entry {entry} out of range 1..={size}")]
    EntryOutOfRange { entry: usize, size: usize },
    #[error("result is not proportional to the input tableau vector")]
    NotAnEigenvector,
    #[error("degree {d} is below the flavor {k}")]
    DegreeTooSmall { d: u32, k: usize },
    #[error("d_+ is undefined at the top flavor k = n = {0}")]
    FlavorAtMax(usize),
    #[error("d_- is undefined at flavor 0")]
    FlavorAtMin,
    #[error("operator undefined at flavor {k} for rank {n}")]
    FlavorOutOfRange { k: usize, n: usize },
    #[error("inputs have inconsistent flavor, degree, or rank")]
    InconsistentFlavors,
    #[error("no stabilization below rank cap {ncap} (flavor {k}, degree {d})")]
    NoStabilization { k: usize, d: u32, ncap: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("{0} disagrees with its closed form")]
    ClosedFormMismatch(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
