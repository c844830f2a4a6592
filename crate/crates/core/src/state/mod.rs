//! State representations: pure states, density operators, symmetric
//! (Dicke-basis) states and their Majorana points.

pub mod density;
pub mod file;
pub mod majorana;
pub mod pure;
pub mod symmetric;

pub use density::DensityOperator;
pub use majorana::{majorana_to_symmetric, symmetric_to_majorana, BlochVector, MajoranaPoints};
pub use pure::PureState;
pub use symmetric::{dicke_state, SymmetricState};
