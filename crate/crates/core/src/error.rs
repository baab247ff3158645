//! Error type shared by every module of the core crate.

use core::fmt;

use crate::quiver::Coord;

/// Everything that can go wrong while building or querying a triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A mesh needs an arrow that the quiver does not have.
    UndefinedArrow {
        /// Start of the missing arrow.
        from: Coord,
        /// End of the missing arrow.
        to: Coord,
    },
    /// A mesh refers to a coordinate that has not been evaluated.
    MissingDependency(Coord),
    /// No value was supplied for a projective vertex.
    MissingProjectiveValue(Coord),
    /// A mesh depends on a vertex in the same or a later row.
    DependencyCycle {
        /// Vertex being evaluated.
        at: Coord,
        /// Offending dependency.
        depends_on: Coord,
    },
    /// The vertex is projective, so it has no mesh.
    ProjectiveVertex(Coord),
    /// The coordinate is not a vertex of the quiver.
    NotAVertex(Coord),
    /// A row beyond the table's last row was requested.
    RowOutOfRange {
        /// Requested row.
        t: i64,
        /// Last stored row.
        max_row: i64,
    },
    /// Arguments outside an operation's domain.
    OutOfRange(&'static str),
    /// A table of the wrong kind was passed.
    WrongKind,
    /// `(s, j)` does not correspond to any vertex of the even triangle.
    InconsistentConcordance {
        /// Layer index.
        s: i64,
        /// Offset index.
        j: i64,
    },
    /// Fibonacci numbers are indexed from 1.
    ZeroFibonacciIndex,
    /// A fitted diagonal does not have the expected degree.
    DegreeMismatch {
        /// Expected degree.
        expected: usize,
        /// Degree found by the fit.
        found: usize,
    },
    /// Too few samples to fit or verify a polynomial.
    NotEnoughSamples {
        /// Samples needed.
        needed: usize,
        /// Samples available.
        available: usize,
    },
    /// Sample abscissae are not consecutive integers.
    NonConsecutiveSamples,
    /// Exhaustive enumeration was asked for a size it cannot handle.
    TooLargeForEnumeration {
        /// Requested size.
        n: u32,
        /// Largest size accepted.
        limit: u32,
    },
    /// A sequence operator was applied to a too-short sequence.
    EmptyInput,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UndefinedArrow { from, to } => write!(f, "undefined arrow {from} -> {to}"),
            Error::MissingDependency(c) => write!(f, "missing dependency {c}"),
            Error::MissingProjectiveValue(c) => {
                write!(f, "missing value for projective vertex {c}")
            }
            Error::DependencyCycle { at, depends_on } => {
                write!(f, "dependency cycle: {at} depends on {depends_on}")
            }
            Error::ProjectiveVertex(c) => write!(f, "{c} is projective"),
            Error::NotAVertex(c) => write!(f, "{c} is not a vertex"),
            Error::RowOutOfRange { t, max_row } => {
                write!(f, "row {t} out of range (table ends at row {max_row})")
            }
            Error::OutOfRange(what) => write!(f, "out of range: {what}"),
            Error::WrongKind => f.write_str("table has the wrong triangle kind"),
            Error::InconsistentConcordance { s, j } => {
                write!(f, "no vertex corresponds to a_{s}[{j}]")
            }
            Error::ZeroFibonacciIndex => f.write_str("Fibonacci numbers are indexed from 1"),
            Error::DegreeMismatch { expected, found } => {
                write!(f, "expected degree {expected}, fit has degree {found}")
            }
            Error::NotEnoughSamples { needed, available } => {
                write!(f, "need {needed} samples, have {available}")
            }
            Error::NonConsecutiveSamples => f.write_str("sample abscissae must be consecutive"),
            Error::TooLargeForEnumeration { n, limit } => {
                write!(f, "n = {n} exceeds the enumeration limit {limit}")
            }
            Error::EmptyInput => f.write_str("sequence too short"),
        }
    }
}

impl core::error::Error for Error {}
