//! Concrete matrix representations.

mod aux;
mod matrix;
pub mod rmatrix;
pub mod spin;
pub mod uq;

pub use aux::AuxMatrix;
pub use matrix::{EntryMismatch, OperatorMatrix};
pub use rmatrix::{build_r, build_r_at, check_rll, check_ybe};
pub use spin::{build_lax, build_lax_at, SpinRep};
pub use uq::{coproduct_apply, Chevalley, ChevalleyRep};
