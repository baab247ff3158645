//! The even-index and odd-index Fibonacci partition triangles.
//!
//! The even triangle lives on the quiver with vertices `0 ≤ 2i ≤ t`; the
//! pylon is the right edge `(i, 2i)`. The odd triangle lives on `(0,0)`
//! together with all `0 ≤ i < t`, and carries two pylons, `(i, 2i)` and
//! `(i, 2i-1)`. Both triangles are the additive functions taking the value
//! 1 on every projective vertex.
//!
//! Lookups extend the stored entries to every integer diagonal:
//!
//! * even: `d_i(t) = 0` for `i < 0` and `d_i(t) = d_{t-i}(t)`;
//! * odd: `d'_i(t) = 0` off the triangle and `d''_i(t) = d'_{t-i-1}(t)`,
//!   which makes `d''_{-1}(0) = d'_0(0) = 1` the only nonzero negative entry.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::quiver::{evaluate_additive, AdditiveTable, Coord, TranslationQuiver, Valuation};
use crate::Result;

/// Which of the two triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TriangleKind {
    /// The even-index triangle; row `t` yields `f_{2t+2}`.
    Even,
    /// The odd-index triangle; row `t` yields `f_{2t+1}`.
    Odd,
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TriangleKind::Even => "even",
            TriangleKind::Odd => "odd",
        })
    }
}

impl FromStr for TriangleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" | "ev" | "EVEN" => Ok(TriangleKind::Even),
            "odd" | "ODD" => Ok(TriangleKind::Odd),
            _ => Err(Error::OutOfRange("triangle kind must be `even` or `odd`")),
        }
    }
}

const SE_PYLON: Valuation = Valuation::new(3, 1);
const SE_PLAIN: Valuation = Valuation::new(2, 1);
const SE_BETWEEN_PYLONS: Valuation = Valuation::new(1, 1);
const SE_RIGHT: Valuation = Valuation::new(1, 2);

/// The quiver of the even triangle, truncated after `max_row`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvenQuiver {
    max_row: i64,
}

impl EvenQuiver {
    /// Rows `0..=max_row`.
    pub fn new(max_row: u32) -> Self {
        EvenQuiver {
            max_row: i64::from(max_row),
        }
    }
}

/// Builds the even quiver: projectives `(0,t)`, `τ(i,t) = (i-1,t-2)`,
/// south-east arrows into the pylon valued `(3,1)`, all others `(2,1)`.
pub fn build_even_quiver(max_row: u32) -> EvenQuiver {
    EvenQuiver::new(max_row)
}

impl TranslationQuiver for EvenQuiver {
    fn max_row(&self) -> i64 {
        self.max_row
    }

    fn row_range(&self, t: i64) -> Range<i64> {
        if t < 0 {
            0..0
        } else {
            0..t / 2 + 1
        }
    }

    fn is_projective(&self, z: Coord) -> bool {
        z.i == 0
    }

    fn tau(&self, z: Coord) -> Option<Coord> {
        (self.is_vertex(z) && z.i >= 1).then(|| Coord::new(z.i - 1, z.t - 2))
    }

    fn se_valuation(&self, from: Coord) -> Option<Valuation> {
        if from.i < 0 || 2 * from.i >= from.t || from.t > self.max_row {
            return None;
        }
        let to = from.south_east();
        Some(if 2 * to.i == to.t { SE_PYLON } else { SE_PLAIN })
    }
}

/// The quiver of the odd triangle, truncated after `max_row`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddQuiver {
    max_row: i64,
}

impl OddQuiver {
    /// Rows `0..=max_row`.
    pub fn new(max_row: u32) -> Self {
        OddQuiver {
            max_row: i64::from(max_row),
        }
    }
}

/// Builds the odd quiver: projectives `(0,t)` and `(i,i+1)` for `i ≥ 2`,
/// `τ(i,t) = (i-1,t-2)` elsewhere. South-east arrows from the first pylon
/// to the second are valued `(1,1)`, those with `2i < t` `(2,1)`, the rest
/// `(1,2)`.
pub fn build_odd_quiver(max_row: u32) -> OddQuiver {
    OddQuiver::new(max_row)
}

fn on_odd_pylon(c: Coord) -> bool {
    c.t == 2 * c.i || c.t == 2 * c.i - 1
}

impl TranslationQuiver for OddQuiver {
    fn max_row(&self) -> i64 {
        self.max_row
    }

    fn row_range(&self, t: i64) -> Range<i64> {
        match t {
            t if t < 0 => 0..0,
            0 => 0..1,
            t => 0..t,
        }
    }

    fn is_projective(&self, z: Coord) -> bool {
        z.i == 0 || (z.i >= 2 && z.t == z.i + 1)
    }

    fn tau(&self, z: Coord) -> Option<Coord> {
        (self.is_vertex(z) && !self.is_projective(z)).then(|| Coord::new(z.i - 1, z.t - 2))
    }

    fn se_valuation(&self, from: Coord) -> Option<Valuation> {
        if from == Coord::new(0, 0) || from.i < 0 || from.i >= from.t || from.t > self.max_row {
            return None;
        }
        let to = from.south_east();
        Some(if on_odd_pylon(from) && on_odd_pylon(to) {
            SE_BETWEEN_PYLONS
        } else if 2 * from.i < from.t {
            SE_PLAIN
        } else {
            SE_RIGHT
        })
    }
}

/// One of the two triangles, evaluated through the generic mesh engine.
///
/// Row `t` of the even triangle stores `d_0(t) ..= d_{⌊t/2⌋}(t)`; row `t ≥ 1`
/// of the odd triangle stores `d'_0(t) ..= d'_{t-1}(t)` and row 0 stores
/// `d'_0(0)`. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueTable {
    kind: TriangleKind,
    backing: AdditiveTable,
}

/// The even triangle on rows `0..=max_row`.
pub fn even_table(max_row: u32) -> ValueTable {
    let q = EvenQuiver::new(max_row);
    let backing = evaluate_additive(&q, |_| Some(BigInt::one()), q.max_row())
        .expect("the even quiver is a valid translation quiver");
    ValueTable {
        kind: TriangleKind::Even,
        backing,
    }
}

/// The odd triangle on rows `0..=max_row`.
pub fn odd_table(max_row: u32) -> ValueTable {
    let q = OddQuiver::new(max_row);
    let backing = evaluate_additive(&q, |_| Some(BigInt::one()), q.max_row())
        .expect("the odd quiver is a valid translation quiver");
    ValueTable {
        kind: TriangleKind::Odd,
        backing,
    }
}

/// Builds the triangle of the given kind.
pub fn table(kind: TriangleKind, max_row: u32) -> ValueTable {
    match kind {
        TriangleKind::Even => even_table(max_row),
        TriangleKind::Odd => odd_table(max_row),
    }
}

impl ValueTable {
    /// Which triangle this is.
    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    /// Last stored row.
    pub fn max_row(&self) -> i64 {
        self.backing.max_row()
    }

    /// The additive function backing this table.
    pub fn additive(&self) -> &AdditiveTable {
        &self.backing
    }

    /// Stored entries of row `t`, leftmost first.
    pub fn row(&self, t: i64) -> Result<&[BigInt]> {
        self.backing
            .row(t)
            .map(|(_, values)| values)
            .ok_or(Error::RowOutOfRange {
                t,
                max_row: self.max_row(),
            })
    }

    /// Iterates over `(t, row)` for every stored row.
    pub fn rows(&self) -> impl Iterator<Item = (i64, &[BigInt])> + '_ {
        (0..=self.max_row()).filter_map(move |t| self.row(t).ok().map(|r| (t, r)))
    }

    fn check_row(&self, t: i64) -> Result<()> {
        if t < 0 || t > self.max_row() {
            Err(Error::RowOutOfRange {
                t,
                max_row: self.max_row(),
            })
        } else {
            Ok(())
        }
    }

    fn stored(&self, i: i64, t: i64) -> BigInt {
        self.backing
            .get(Coord::new(i, t))
            .cloned()
            .unwrap_or_default()
    }

    fn expect_kind(&self, kind: TriangleKind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::WrongKind)
        }
    }

    /// `d_i(t)` for any integer `i`.
    pub fn even_lookup(&self, i: i64, t: i64) -> Result<BigInt> {
        self.expect_kind(TriangleKind::Even)?;
        self.check_row(t)?;
        let i = if 2 * i > t { t - i } else { i };
        Ok(if i < 0 {
            BigInt::zero()
        } else {
            self.stored(i, t)
        })
    }

    /// `d'_i(t)` for any integer `i`.
    pub fn odd_lookup_prime(&self, i: i64, t: i64) -> Result<BigInt> {
        self.expect_kind(TriangleKind::Odd)?;
        self.check_row(t)?;
        Ok(self.stored(i, t))
    }

    /// `d''_i(t) = d'_{t-i-1}(t)` for any integer `i`.
    pub fn odd_lookup_double(&self, i: i64, t: i64) -> Result<BigInt> {
        self.odd_lookup_prime(t - i - 1, t)
    }

    /// Hook sum for the even triangle, `0 ≤ 2i ≤ t`, `t ≥ 1`:
    ///
    /// ```text
    /// g_i(t) = g_i(t-1) + Σ_{0≤j<i} g_j(t-i+j)
    /// ```
    ///
    /// where on the pylon `g_i(2i-1)` stands for `g_{i-1}(2i-1)`. Reads only
    /// the previous rows, never the mesh relation.
    pub fn even_hook(&self, i: i64, t: i64) -> Result<BigInt> {
        self.expect_kind(TriangleKind::Even)?;
        if t < 1 || i < 0 || 2 * i > t {
            return Err(Error::OutOfRange("even hook needs 0 <= 2i <= t and t >= 1"));
        }
        self.check_row(t)?;
        let west = if 2 * i == t {
            self.stored(i - 1, t - 1)
        } else {
            self.stored(i, t - 1)
        };
        (0..i).try_fold(west, |acc, j| Ok(acc + self.even_lookup(j, t - i + j)?))
    }

    /// Hook sum `g'_i(t) = g'_i(t-1) + Σ_{0≤j<i} g'_j(t-i+j)` for `2i ≤ t`.
    pub fn odd_hook_prime(&self, i: i64, t: i64) -> Result<BigInt> {
        self.expect_kind(TriangleKind::Odd)?;
        if t < 1 || i < 0 || 2 * i > t {
            return Err(Error::OutOfRange(
                "odd hook (a) needs 0 <= 2i <= t and t >= 1",
            ));
        }
        self.check_row(t)?;
        (0..i).try_fold(self.odd_lookup_prime(i, t - 1)?, |acc, j| {
            Ok(acc + self.odd_lookup_prime(j, t - i + j)?)
        })
    }

    /// Hook sum `g''_i(t) = g''_i(t-1) + Σ_{0≤j<i} g''_j(t-i+j)`, valid when
    /// the vertex `(t-1-i, t)` lies strictly right of the first pylon.
    pub fn odd_hook_double(&self, i: i64, t: i64) -> Result<BigInt> {
        self.expect_kind(TriangleKind::Odd)?;
        let position = t - 1 - i;
        if t < 1 || i < 0 || position < 0 || 2 * position <= t {
            return Err(Error::OutOfRange(
                "odd hook (b) needs 2(t-1-i) > t and i >= 0",
            ));
        }
        self.check_row(t)?;
        (0..i).try_fold(self.odd_lookup_double(i, t - 1)?, |acc, j| {
            Ok(acc + self.odd_lookup_double(j, t - i + j)?)
        })
    }
}

fn dense_get(rows: &[Vec<BigInt>], i: i64, t: i64) -> BigInt {
    usize::try_from(t)
        .ok()
        .and_then(|t| rows.get(t))
        .zip(usize::try_from(i).ok())
        .and_then(|(row, i)| row.get(i))
        .cloned()
        .unwrap_or_default()
}

/// Even triangle from the explicit two-case recurrence, without the quiver
/// machinery:
///
/// ```text
/// d_i(t)  = 2 d_{i-1}(t-1) + d_i(t-1) - d_{i-1}(t-2)    (2i < t)
/// d_i(2i) = 3 d_{i-1}(2i-1) - d_{i-1}(2i-2)
/// ```
pub fn even_rows_by_recurrence(max_row: u32) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_row as usize + 1);
    for t in 0..=i64::from(max_row) {
        let mut row = vec![BigInt::one()];
        for i in 1..=t / 2 {
            let v = if 2 * i == t {
                dense_get(&rows, i - 1, t - 1) * 3u32 - dense_get(&rows, i - 1, t - 2)
            } else {
                dense_get(&rows, i - 1, t - 1) * 2u32 + dense_get(&rows, i, t - 1)
                    - dense_get(&rows, i - 1, t - 2)
            };
            row.push(v);
        }
        rows.push(row);
    }
    rows
}

/// Odd triangle from the closed recurrences implied by its valuations:
///
/// ```text
/// g(i,t) = 2 g(i-1,t-1) + g(i,t-1) - g(i-1,t-2)    (2i ≤ t)
/// g(i,t) = g(i-1,t-1) + 2 g(i,t-1) - g(i-1,t-2)    (2i > t)
/// ```
///
/// with value 1 on the projectives and 0 off the triangle.
pub fn odd_rows_by_recurrence(max_row: u32) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_row as usize + 1);
    rows.push(vec![BigInt::one()]);
    for t in 1..=i64::from(max_row) {
        let mut row = Vec::with_capacity(t as usize);
        for i in 0..t {
            let projective = i == 0 || (i >= 2 && i == t - 1);
            let v = if projective {
                BigInt::one()
            } else if 2 * i <= t {
                dense_get(&rows, i - 1, t - 1) * 2u32 + dense_get(&rows, i, t - 1)
                    - dense_get(&rows, i - 1, t - 2)
            } else {
                dense_get(&rows, i - 1, t - 1) + dense_get(&rows, i, t - 1) * 2u32
                    - dense_get(&rows, i - 1, t - 2)
            };
            row.push(v);
        }
        rows.push(row);
    }
    rows
}

/// `(s, j)` with `d_i(t) = a_s[j]`: `s = ⌈t/2⌉`, `j = t - 2i`.
pub fn concordance_even(i: i64, t: i64) -> Result<(i64, i64)> {
    if i < 0 || 2 * i > t {
        return Err(Error::OutOfRange("even concordance needs 0 <= 2i <= t"));
    }
    Ok(((t + 1) / 2, t - 2 * i))
}

/// Inverse of [`concordance_even`]: the row has the parity of `j` and is
/// `2s` or `2s-1`.
pub fn concordance_even_inverse(s: i64, j: i64) -> Result<(i64, i64)> {
    let t = if j.rem_euclid(2) == 0 {
        2 * s
    } else {
        2 * s - 1
    };
    if j < 0 || t < j {
        return Err(Error::InconsistentConcordance { s, j });
    }
    Ok(((t - j) / 2, t))
}

/// Which odd accessor a coordinate refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OddAccessor {
    /// `d'_i(t)`, counted from the left boundary.
    Prime,
    /// `d''_i(t)`, counted from the right boundary.
    Double,
}

/// `(s, j)` with `d'_i(t) = u_s[t-2i]` or `d''_i(t) = u_s[2+2i-t]`,
/// `s = ⌈t/2⌉`.
pub fn concordance_odd(i: i64, t: i64, which: OddAccessor) -> Result<(i64, i64)> {
    let position = match which {
        OddAccessor::Prime => i,
        OddAccessor::Double => t - i - 1,
    };
    if !(OddQuiver { max_row: t }).is_vertex(Coord::new(position, t)) {
        return Err(Error::OutOfRange("not an entry of the odd triangle"));
    }
    let s = (t + 1) / 2;
    Ok(match which {
        OddAccessor::Prime => (s, t - 2 * i),
        OddAccessor::Double => (s, 2 + 2 * i - t),
    })
}
