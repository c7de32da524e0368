//! Exact coefficient arithmetic: rationals, Laurent polynomials, their
//! fraction field and formal Laurent series.

mod laurent;
mod monomial;
mod ratfunc;
mod rational;
mod series;
mod symbol;
mod text;

pub use laurent::LaurentPoly;
pub use monomial::Monomial;
pub use ratfunc::RatFunc;
pub use rational::{ParseRationalError, Rational};
pub use series::{series_expand, series_expand_to, LaurentSeries};
pub use symbol::{Sym, NUM_SYMBOLS, SYMBOL_NAMES};
pub use text::ParsePolyError;

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("division by zero")]
    DivisionByZero,
    #[error("symbol {0} has no value")]
    UnboundSymbol(Sym),
    #[error("not expandable in {0}: {1}")]
    NotExpandable(Sym, String),
}
