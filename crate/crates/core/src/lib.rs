//! Exact arithmetic for the even-index and odd-index Fibonacci partition
//! triangles.
//!
//! Both triangles are additive functions on valued translation quivers: each
//! entry is a weighted sum of its upper neighbours minus the entry two rows
//! above. The [`quiver`] module evaluates such functions for any truncated
//! quiver; [`triangles`] instantiates the two concrete quivers and the
//! convention-aware accessors `d`, `d'` and `d''`. The remaining modules
//! check the relations between the two triangles, fit their diagonals as
//! polynomials and count restricted Delannoy paths.
//!
//! Every value is an arbitrary-precision integer.
#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod delannoy;
pub mod error;
pub mod fibfacts;
pub mod golden;
pub mod identities;
pub mod polyfit;
pub mod quiver;
pub mod triangles;

pub use error::Error;
pub use num_bigint::BigInt;
pub use quiver::{AdditiveTable, Coord, TranslationQuiver, Valuation};
pub use triangles::{EvenQuiver, OddQuiver, TriangleKind, ValueTable};

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
