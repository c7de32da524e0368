//! Exact symbolic verification of reflection-equation, current-algebra and
//! q-Onsager identities over the field of rational functions in the
//! deformation parameter and spectral parameters.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod comodule;
pub mod currents;
pub mod free;
pub mod reflection;
pub mod rep;
pub mod report;
pub mod scalars;
