//! Reference values as they appear in the published tables.
//!
//! These are transcribed, not computed, and serve as regression anchors for
//! the evaluators.

use crate::polyfit::Family;

/// Even triangle, rows 0 through 12, entries `d_0(t) ..= d_{⌊t/2⌋}(t)`.
pub const EVEN_ROWS: &[&[u64]] = &[
    &[1],
    &[1],
    &[1, 2],
    &[1, 3],
    &[1, 4, 7],
    &[1, 5, 12],
    &[1, 6, 18, 29],
    &[1, 7, 25, 53],
    &[1, 8, 33, 85, 130],
    &[1, 9, 42, 126, 247],
    &[1, 10, 52, 177, 414, 611],
    &[1, 11, 63, 239, 642, 1192],
    &[1, 12, 75, 313, 943, 2062, 2965],
];

/// Odd triangle, rows 0 through 12, entries `d'_0(t) ..= d'_{t-1}(t)`.
pub const ODD_ROWS: &[&[u64]] = &[
    &[1],
    &[1],
    &[1, 1],
    &[1, 2, 1],
    &[1, 3, 4, 1],
    &[1, 4, 8, 5, 1],
    &[1, 5, 13, 17, 6, 1],
    &[1, 6, 19, 35, 24, 7, 1],
    &[1, 7, 26, 60, 77, 32, 8, 1],
    &[1, 8, 34, 93, 162, 117, 41, 9, 1],
    &[1, 9, 43, 135, 288, 364, 167, 51, 10, 1],
    &[1, 10, 53, 187, 465, 778, 581, 228, 62, 11, 1],
    &[1, 11, 64, 250, 704, 1420, 1773, 870, 301, 74, 12, 1],
];

/// Differences `g(i,t) - g(i-1,t-1)` into odd row `t`, rows 0 through 12,
/// as displayed: the final entry of each row `t ≥ 2`, which is always 0,
/// is not shown.
pub const SE_DIFFERENCE_ROWS: &[&[u64]] = &[
    &[1],
    &[1],
    &[1],
    &[1, 1],
    &[1, 2, 2],
    &[1, 3, 5, 1],
    &[1, 4, 9, 9, 1],
    &[1, 5, 14, 22, 7, 1],
    &[1, 6, 20, 41, 42, 8, 1],
    &[1, 7, 27, 67, 102, 40, 9, 1],
    &[1, 8, 35, 101, 195, 202, 50, 10, 1],
    &[1, 9, 44, 144, 330, 490, 217, 61, 11, 1],
    &[1, 10, 54, 197, 517, 955, 995, 289, 73, 12, 1],
];

/// The pylon `d_i(2i)`, `i = 0..=5`.
pub const EVEN_PYLON: &[u64] = &[1, 2, 7, 29, 130, 611];

/// Second-to-last entries `d_n(2n+1)` of the odd rows of the even
/// triangle, `n = 0..=5`.
pub const SECOND_LAST_COLUMN: &[u64] = &[1, 3, 12, 53, 247, 1192];

/// Central Delannoy numbers, `n = 0..=4`.
pub const CENTRAL_DELANNOY: &[u64] = &[1, 3, 13, 63, 321];

/// A diagonal polynomial as printed, in the binomial basis
/// `C(t,0), C(t,1), ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrintedPolynomial {
    /// Diagonal family.
    pub family: Family,
    /// Diagonal index.
    pub index: i64,
    /// Coefficients of `C(t,0), C(t,1), ...`.
    pub binomial_coeffs: &'static [i64],
    /// The printed monomial form.
    pub printed: &'static str,
}

/// Every printed diagonal polynomial. The entry for `d_2` disagrees with the
/// table; see [`crate::polyfit`].
pub const PRINTED_POLYNOMIALS: &[PrintedPolynomial] = &[
    PrintedPolynomial {
        family: Family::Even,
        index: 0,
        binomial_coeffs: &[1],
        printed: "1",
    },
    PrintedPolynomial {
        family: Family::Even,
        index: 1,
        binomial_coeffs: &[0, 1],
        printed: "t",
    },
    PrintedPolynomial {
        family: Family::Even,
        index: 2,
        binomial_coeffs: &[-3, 0, 1],
        printed: "(1/2)(t^2-t-6)",
    },
    PrintedPolynomial {
        family: Family::Even,
        index: 3,
        binomial_coeffs: &[-3, -3, 2, 1],
        printed: "(1/6)(t^3+3t^2-22t-18)",
    },
    PrintedPolynomial {
        family: Family::OddPrime,
        index: 0,
        binomial_coeffs: &[1],
        printed: "1",
    },
    PrintedPolynomial {
        family: Family::OddPrime,
        index: 1,
        binomial_coeffs: &[-1, 1],
        printed: "t-1",
    },
    PrintedPolynomial {
        family: Family::OddPrime,
        index: 2,
        binomial_coeffs: &[-2, 0, 1],
        printed: "(1/2)(t^2-t-4)",
    },
    PrintedPolynomial {
        family: Family::OddPrime,
        index: 3,
        binomial_coeffs: &[0, -3, 1, 1],
        printed: "(1/6)(t^3-19t)",
    },
    PrintedPolynomial {
        family: Family::OddDouble,
        index: 0,
        binomial_coeffs: &[1],
        printed: "1",
    },
    PrintedPolynomial {
        family: Family::OddDouble,
        index: 1,
        binomial_coeffs: &[0, 1],
        printed: "t",
    },
    PrintedPolynomial {
        family: Family::OddDouble,
        index: 2,
        binomial_coeffs: &[-4, 1, 1],
        printed: "(1/2)(t^2+t-8)",
    },
    PrintedPolynomial {
        family: Family::OddDouble,
        index: 3,
        binomial_coeffs: &[-3, -4, 2, 1],
        printed: "(1/6)(t^3+3t^2-28t-18)",
    },
];
