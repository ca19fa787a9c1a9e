#![no_std]

extern crate alloc;

pub mod bell;
pub mod error;
pub mod hurwitz;
pub mod identities;
pub mod oracle;
pub mod precision;
pub mod quad;
pub mod rational;
pub mod real;
pub mod trig;

pub use error::{Error, Result};
pub use precision::{make_context, PrecisionContext, RationalArg};
pub use real::{BigComplex, BigReal};
