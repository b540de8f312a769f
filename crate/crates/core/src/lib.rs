pub mod bqt;
pub mod daha;
pub mod error;
pub mod family;
pub mod induced;
pub mod io;
pub mod limit;
pub mod linalg;
pub mod scalar;
pub mod syt;
pub mod vector;
pub mod verify;

pub use error::{Error, Result};
