pub mod cli;
pub mod dicke_family;
pub mod error;
pub mod linalg;
pub mod robustness;
pub mod separability;
pub mod state;

pub use error::{Error, Result};
