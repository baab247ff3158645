//! Relations between the even and odd triangles, checked entry by entry.
//!
//! Every checker sweeps an `(i, t)` domain and records each point where the
//! two sides differ. Lookups go through the convention-extended accessors of
//! [`ValueTable`], so zero and symmetry conventions are exercised as well.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::fibfacts::{even_partition_sum, fib, odd_partition_sum, odd_partition_sum_as_printed};
use crate::golden;
use crate::quiver::Coord;
use crate::triangles::{even_rows_by_recurrence, odd_rows_by_recurrence, TriangleKind, ValueTable};
use crate::Result;

/// Names of the checked relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// `d'_i(t) = d_i(t) - d_{i-1}(t-1)`.
    T1,
    /// `d''_i(t) = d_{i+1}(t) - d_{i+1}(t-1)`.
    T2,
    /// `d_i(t-1) = d'_{i+1}(t) - d'_{i+1}(t-1)`.
    T3,
    /// `d_i(t-1) = d''_i(t) - d''_{i-1}(t-1)`.
    T4,
    /// `d_i(t-1) = d'_i(t) - d''_{i-2}(t-1)`.
    T5,
    /// `d_i(2i) = d'_i(2i+1) - d''_{i-2}(2i)`.
    Knight,
    /// `d''_i(t) = d'_{i+2}(t+1) - 2d'_{i+2}(t) + d'_{i+2}(t-1)`.
    C3a,
    /// `d'_i(t) = d''_i(t+1) - 2d''_{i-1}(t) + d''_{i-2}(t-1)`.
    C3b,
    /// `d''_i(t) = 2d'_{i+1}(t) - d'_{i+1}(t-1) - d'_{i+2}(t) + d'_{i+2}(t-1)`.
    Na,
    /// `d'_i(t) = 2d''_{i-2}(t) - d''_{i-1}(t+1) - d''_{i-1}(t) + d''_i(t+1)`.
    Nb,
    /// `d''_i(t) = d'_{i+2}(t+1) + d'_{i+3}(t) - d'_{i+3}(t+1)`.
    NPrimeA,
    /// `d'_i(t) = d''_{i-2}(t-1) + d''_i(t) - d''_{i-1}(t-1)`.
    NPrimeB,
    /// `Σ_{j≤i} d_j(t-i+j) = d''_i(t+1)`.
    C4a,
    /// `Σ_{j≤i} d'_j(t-i+j) = d_i(t)`.
    C4b,
    /// `Σ_{j≤i} d'_j(t-i+j) = Σ_{j≤t-i} d'_j(i+j)`.
    C4Symmetry,
    /// Nb with `d''_i(t-1)` in the last term.
    NbPrinted,
    /// N'a on `2i ≤ t-4`.
    NPrimeAWide,
    /// N'b on `2i < t`.
    NPrimeBWide,
    /// `E d''_i = Δ d_{i+1}`.
    ShiftDouble,
    /// `d_i = Δ d'_{i+1}`.
    DeltaPrime,
    /// Hook sums of the even triangle.
    HookEven,
    /// Hook sums `g'` of the odd triangle.
    HookOddPrime,
    /// Hook sums `g''` of the odd triangle.
    HookOddDouble,
    /// Even row sums against `f_{2t+2}`.
    SumEven,
    /// Odd row sums against `f_{2t+1}`.
    SumOdd,
    /// Odd row sums with the typeset weights.
    SumOddPrinted,
    /// Quiver evaluation against the closed recurrence, even triangle.
    OracleEven,
    /// Quiver evaluation against the closed recurrences, odd triangle.
    OracleOdd,
    /// Even rows against the published table.
    GoldenEven,
    /// Odd rows against the published table.
    GoldenOdd,
    /// South-east differences against the published table.
    GoldenSeDifference,
    /// South-east differences are nonnegative.
    SeDifferenceNonnegative,
    /// Restricted Delannoy counts against the second-last even column.
    Delannoy,
    /// Restricted Delannoy counts by dynamic programming against explicit
    /// enumeration.
    DelannoyEnumeration,
}

impl IdentityId {
    /// Short label.
    pub fn label(self) -> &'static str {
        use IdentityId::*;
        match self {
            T1 => "T1",
            T2 => "T2",
            T3 => "T3",
            T4 => "T4",
            T5 => "T5",
            Knight => "KNIGHT",
            C3a => "C3a",
            C3b => "C3b",
            Na => "Na",
            Nb => "Nb",
            NPrimeA => "N'a",
            NPrimeB => "N'b",
            C4a => "C4a",
            C4b => "C4b",
            C4Symmetry => "C4sym",
            NbPrinted => "Nb-printed",
            NPrimeAWide => "N'a-wide",
            NPrimeBWide => "N'b-wide",
            ShiftDouble => "E-d''",
            DeltaPrime => "D-d'",
            HookEven => "HOOK",
            HookOddPrime => "HOOK'",
            HookOddDouble => "HOOK''",
            SumEven => "SUM-even",
            SumOdd => "SUM-odd",
            SumOddPrinted => "SUM-odd-printed",
            OracleEven => "ORACLE-even",
            OracleOdd => "ORACLE-odd",
            GoldenEven => "GOLDEN-even",
            GoldenOdd => "GOLDEN-odd",
            GoldenSeDifference => "GOLDEN-se",
            SeDifferenceNonnegative => "SE-nonneg",
            Delannoy => "DELANNOY",
            DelannoyEnumeration => "DELANNOY-enum",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A point where the two sides of an identity differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// Where the identity was evaluated.
    pub at: Coord,
    /// Left-hand side.
    pub lhs: BigInt,
    /// Right-hand side.
    pub rhs: BigInt,
}

/// Outcome of sweeping one identity over a domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    /// Which identity.
    pub id: IdentityId,
    /// Human-readable description of the domain.
    pub range: String,
    /// Number of points evaluated.
    pub checked: usize,
    /// Every failing point.
    pub counterexamples: Vec<Counterexample>,
}

impl IdentityCheck {
    /// No counterexamples.
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub(crate) fn new(id: IdentityId, range: String) -> Self {
        IdentityCheck {
            id,
            range,
            checked: 0,
            counterexamples: Vec::new(),
        }
    }

    pub(crate) fn record(&mut self, at: Coord, lhs: BigInt, rhs: BigInt) {
        self.checked += 1;
        if lhs != rhs {
            self.counterexamples.push(Counterexample { at, lhs, rhs });
        }
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(
            f,
            "{:<16} {status} {} points, {}",
            self.id, self.checked, self.range
        )?;
        if let Some(c) = self.counterexamples.first() {
            write!(
                f,
                "; {} counterexamples, first at {}: {} != {}",
                self.counterexamples.len(),
                c.at,
                c.lhs,
                c.rhs
            )?;
        }
        Ok(())
    }
}

fn require(tbl: &ValueTable, kind: TriangleKind, rows: i64) -> Result<()> {
    if tbl.kind() != kind {
        return Err(Error::WrongKind);
    }
    if tbl.max_row() < rows {
        return Err(Error::RowOutOfRange {
            t: rows,
            max_row: tbl.max_row(),
        });
    }
    Ok(())
}

/// Sweeps `t` over `t_from..=t_max` and `i` from -3 to `i_max(t)`.
fn sweep<F>(
    id: IdentityId,
    range: &str,
    t_from: i64,
    t_max: i64,
    i_max: impl Fn(i64) -> i64,
    sides: F,
) -> Result<IdentityCheck>
where
    F: Fn(i64, i64) -> Result<(BigInt, BigInt)>,
{
    let mut check = IdentityCheck::new(id, format!("{range}, {t_from} <= t <= {t_max}"));
    for t in t_from..=t_max {
        for i in -3..=i_max(t) {
            let (lhs, rhs) = sides(i, t)?;
            check.record(Coord::new(i, t), lhs, rhs);
        }
    }
    Ok(check)
}

fn half(n: i64) -> i64 {
    n.div_euclid(2)
}

/// T1 through T5 for `1 ≤ t ≤ t_max`.
///
/// T1 and T2 hold for every `i` and are swept over `-3 ≤ i ≤ t+3`, T3 and
/// T4 over `2i ≤ t-2`, T5 over `2i ≤ t`.
pub fn check_triangle_relations(
    even: &ValueTable,
    odd: &ValueTable,
    t_max: i64,
) -> Result<Vec<IdentityCheck>> {
    require(even, TriangleKind::Even, t_max)?;
    require(odd, TriangleKind::Odd, t_max)?;
    let d = |i, t| even.even_lookup(i, t);
    let p = |i, t| odd.odd_lookup_prime(i, t);
    let q = |i, t| odd.odd_lookup_double(i, t);
    Ok(alloc::vec![
        sweep(
            IdentityId::T1,
            "-3 <= i <= t+3",
            1,
            t_max,
            |t| t + 3,
            |i, t| { Ok((p(i, t)?, d(i, t)? - d(i - 1, t - 1)?)) }
        )?,
        sweep(
            IdentityId::T2,
            "-3 <= i <= t+3",
            1,
            t_max,
            |t| t + 3,
            |i, t| { Ok((q(i, t)?, d(i + 1, t)? - d(i + 1, t - 1)?)) }
        )?,
        sweep(
            IdentityId::T3,
            "-3 <= i, 2i <= t-2",
            1,
            t_max,
            |t| half(t - 2),
            |i, t| { Ok((d(i, t - 1)?, p(i + 1, t)? - p(i + 1, t - 1)?)) }
        )?,
        sweep(
            IdentityId::T4,
            "-3 <= i, 2i <= t-2",
            1,
            t_max,
            |t| half(t - 2),
            |i, t| { Ok((d(i, t - 1)?, q(i, t)? - q(i - 1, t - 1)?)) }
        )?,
        sweep(
            IdentityId::T5,
            "-3 <= i, 2i <= t",
            1,
            t_max,
            half,
            |i, t| { Ok((d(i, t - 1)?, p(i, t)? - q(i - 2, t - 1)?)) }
        )?,
    ])
}

/// `d'_i(2i+1) - d''_{i-2}(2i)`, which reproduces the pylon entry `d_i(2i)`
/// from the odd triangle alone.
pub fn knight_move(odd: &ValueTable, i: i64) -> Result<BigInt> {
    if odd.kind() != TriangleKind::Odd {
        return Err(Error::WrongKind);
    }
    if i < 1 {
        return Err(Error::OutOfRange("knight move needs i >= 1"));
    }
    Ok(odd.odd_lookup_prime(i, 2 * i + 1)? - odd.odd_lookup_double(i - 2, 2 * i)?)
}

/// Knight moves against the pylon for `1 ≤ i ≤ i_max`.
pub fn check_knight(even: &ValueTable, odd: &ValueTable, i_max: i64) -> Result<IdentityCheck> {
    require(even, TriangleKind::Even, 2 * i_max)?;
    require(odd, TriangleKind::Odd, 2 * i_max + 1)?;
    let mut check = IdentityCheck::new(IdentityId::Knight, format!("1 <= i <= {i_max}"));
    for i in 1..=i_max {
        check.record(
            Coord::new(i, 2 * i),
            even.even_lookup(i, 2 * i)?,
            knight_move(odd, i)?,
        );
    }
    Ok(check)
}

/// The second differences and their two-layer reformulations, for
/// `t ≤ t_max`; the odd table must reach `t_max + 1`.
///
/// Nb is checked with `d''_i(t+1)` as its last term, N'a on `2i ≤ t-5` and
/// N'b on `2i ≤ t-2`; see [`check_printed_forms`] for the other readings.
pub fn check_second_differences(odd: &ValueTable, t_max: i64) -> Result<Vec<IdentityCheck>> {
    require(odd, TriangleKind::Odd, t_max + 1)?;
    let p = |i, t| odd.odd_lookup_prime(i, t);
    let q = |i, t| odd.odd_lookup_double(i, t);
    Ok(alloc::vec![
        sweep(
            IdentityId::C3a,
            "-3 <= i, 2i <= t-4",
            4,
            t_max,
            |t| half(t - 4),
            |i, t| {
                Ok((
                    q(i, t)?,
                    p(i + 2, t + 1)? - p(i + 2, t)? * 2 + p(i + 2, t - 1)?,
                ))
            }
        )?,
        sweep(
            IdentityId::C3b,
            "-3 <= i, 2i < t",
            1,
            t_max,
            |t| half(t - 1),
            |i, t| { Ok((p(i, t)?, q(i, t + 1)? - q(i - 1, t)? * 2 + q(i - 2, t - 1)?)) }
        )?,
        sweep(
            IdentityId::Na,
            "-3 <= i, 2i <= t-4",
            4,
            t_max,
            |t| half(t - 4),
            |i, t| {
                Ok((
                    q(i, t)?,
                    p(i + 1, t)? * 2 - p(i + 1, t - 1)? - p(i + 2, t)? + p(i + 2, t - 1)?,
                ))
            }
        )?,
        sweep(
            IdentityId::Nb,
            "-3 <= i, 2i < t",
            1,
            t_max,
            |t| half(t - 1),
            |i, t| {
                Ok((
                    p(i, t)?,
                    q(i - 2, t)? * 2 - q(i - 1, t + 1)? - q(i - 1, t)? + q(i, t + 1)?,
                ))
            }
        )?,
        sweep(
            IdentityId::NPrimeA,
            "-3 <= i, 2i <= t-5",
            5,
            t_max,
            |t| half(t - 5),
            |i, t| { Ok((q(i, t)?, p(i + 2, t + 1)? + p(i + 3, t)? - p(i + 3, t + 1)?)) }
        )?,
        sweep(
            IdentityId::NPrimeB,
            "-3 <= i, 2i <= t-2",
            2,
            t_max,
            |t| half(t - 2),
            |i, t| { Ok((p(i, t)?, q(i - 2, t - 1)? + q(i, t)? - q(i - 1, t - 1)?)) }
        )?,
    ])
}

/// The readings of Nb, N'a and N'b that do not hold: Nb with `d''_i(t-1)`,
/// N'a on `2i ≤ t-4` and N'b on `2i < t`. These are expected to fail.
pub fn check_printed_forms(odd: &ValueTable, t_max: i64) -> Result<Vec<IdentityCheck>> {
    require(odd, TriangleKind::Odd, t_max + 1)?;
    let p = |i, t| odd.odd_lookup_prime(i, t);
    let q = |i, t| odd.odd_lookup_double(i, t);
    Ok(alloc::vec![
        sweep(
            IdentityId::NbPrinted,
            "-3 <= i, 2i < t",
            1,
            t_max,
            |t| half(t - 1),
            |i, t| {
                Ok((
                    p(i, t)?,
                    q(i - 2, t)? * 2 - q(i - 1, t + 1)? - q(i - 1, t)? + q(i, t - 1)?,
                ))
            }
        )?,
        sweep(
            IdentityId::NPrimeAWide,
            "-3 <= i, 2i <= t-4",
            4,
            t_max,
            |t| half(t - 4),
            |i, t| { Ok((q(i, t)?, p(i + 2, t + 1)? + p(i + 3, t)? - p(i + 3, t + 1)?)) }
        )?,
        sweep(
            IdentityId::NPrimeBWide,
            "-3 <= i, 2i < t",
            1,
            t_max,
            |t| half(t - 1),
            |i, t| { Ok((p(i, t)?, q(i - 2, t - 1)? + q(i, t)? - q(i - 1, t - 1)?)) }
        )?,
    ])
}

/// Summation along south-east arrows from the left boundary, `t ≤ t_max`.
pub fn check_summations(
    even: &ValueTable,
    odd: &ValueTable,
    t_max: i64,
) -> Result<Vec<IdentityCheck>> {
    require(even, TriangleKind::Even, t_max)?;
    require(odd, TriangleKind::Odd, t_max + 1)?;
    let d = |i, t| even.even_lookup(i, t);
    let p = |i, t| odd.odd_lookup_prime(i, t);
    let q = |i, t| odd.odd_lookup_double(i, t);
    let prime_run =
        |i: i64, t: i64| (0..=i).try_fold(BigInt::zero(), |acc, j| Ok(acc + p(j, t - i + j)?));

    let mut a = IdentityCheck::new(IdentityId::C4a, format!("0 <= i, 2i <= t-1, t <= {t_max}"));
    let mut b = IdentityCheck::new(IdentityId::C4b, format!("0 <= i <= t, t <= {t_max}"));
    let mut sym = IdentityCheck::new(IdentityId::C4Symmetry, format!("0 <= i <= t, t <= {t_max}"));
    for t in 0..=t_max {
        for i in 0..=t {
            if 2 * i < t {
                let run = (0..=i).try_fold(BigInt::zero(), |acc, j| {
                    Ok::<_, Error>(acc + d(j, t - i + j)?)
                })?;
                a.record(Coord::new(i, t), run, q(i, t + 1)?);
            }
            let run = prime_run(i, t)?;
            b.record(Coord::new(i, t), run.clone(), d(i, t)?);
            sym.record(Coord::new(i, t), run, prime_run(t - i, t)?);
        }
    }
    Ok(alloc::vec![a, b, sym])
}

/// `(Δu)(t) = u(t+1) - u(t)`.
pub fn delta(u: &[BigInt]) -> Result<Vec<BigInt>> {
    match u.len() {
        0 => Err(Error::EmptyInput),
        1 => Err(Error::NotEnoughSamples {
            needed: 2,
            available: 1,
        }),
        _ => Ok(u.windows(2).map(|w| &w[1] - &w[0]).collect()),
    }
}

/// `(Eu)(t) = u(t+1)`.
pub fn shift(u: &[BigInt]) -> Result<Vec<BigInt>> {
    match u.split_first() {
        None => Err(Error::EmptyInput),
        Some((_, rest)) => Ok(rest.to_vec()),
    }
}

/// `E d''_i = Δ d_{i+1}` for `-2 ≤ i ≤ i_max`, and `d_i = Δ d'_{i+1}` for
/// `0 ≤ i ≤ i_max` on `t ≥ 2i+1`, both for `t ≤ t_max`.
///
/// The second relation fails on the pylon `t = 2i`, where `d_i(2i)` is
/// not a single step difference.
pub fn check_operators(
    even: &ValueTable,
    odd: &ValueTable,
    i_max: i64,
    t_max: i64,
) -> Result<Vec<IdentityCheck>> {
    require(even, TriangleKind::Even, t_max + 1)?;
    require(odd, TriangleKind::Odd, t_max + 1)?;
    let column = |f: &dyn Fn(i64) -> Result<BigInt>, from: i64| -> Result<Vec<BigInt>> {
        (from..=t_max + 1).map(f).collect()
    };

    let mut shift_double = IdentityCheck::new(
        IdentityId::ShiftDouble,
        format!("-2 <= i <= {i_max}, 0 <= t <= {t_max}"),
    );
    for i in -2..=i_max {
        let lhs = shift(&column(&|t| odd.odd_lookup_double(i, t), 0)?)?;
        let rhs = delta(&column(&|t| even.even_lookup(i + 1, t), 0)?)?;
        for (t, (l, r)) in lhs.into_iter().zip(rhs).enumerate() {
            shift_double.record(Coord::new(i, t as i64), l, r);
        }
    }

    let mut delta_prime = IdentityCheck::new(
        IdentityId::DeltaPrime,
        format!("0 <= i <= {i_max}, 2i+1 <= t <= {t_max}"),
    );
    for i in 0..=i_max {
        let from = 2 * i + 1;
        if from > t_max {
            continue;
        }
        let rhs = delta(&column(&|t| odd.odd_lookup_prime(i + 1, t), from)?)?;
        for (t, r) in (from..).zip(rhs) {
            delta_prime.record(Coord::new(i, t), even.even_lookup(i, t)?, r);
        }
    }
    Ok(alloc::vec![shift_double, delta_prime])
}

/// Rows `0..=t_max` of `g(i,t) - g(i-1,t-1)` over the full odd row,
/// `i = 0..t`, with `g(-1, ·) = 0`. Row 0 is `[1]`.
pub fn se_difference_table(odd: &ValueTable, t_max: i64) -> Result<Vec<Vec<BigInt>>> {
    require(odd, TriangleKind::Odd, t_max)?;
    (0..=t_max)
        .map(|t| {
            (0..t.max(1))
                .map(|i| {
                    let above = if i == 0 {
                        BigInt::zero()
                    } else {
                        odd.odd_lookup_prime(i - 1, t - 1)?
                    };
                    Ok(odd.odd_lookup_prime(i, t)? - above)
                })
                .collect()
        })
        .collect()
}

/// South-east differences against the published rows and for sign.
pub fn check_se_differences(odd: &ValueTable, t_max: i64) -> Result<Vec<IdentityCheck>> {
    let table = se_difference_table(odd, t_max)?;
    let golden_rows = golden::SE_DIFFERENCE_ROWS.len() as i64 - 1;
    let mut golden_check = IdentityCheck::new(
        IdentityId::GoldenSeDifference,
        format!("t <= {}", golden_rows.min(t_max)),
    );
    let mut sign = IdentityCheck::new(IdentityId::SeDifferenceNonnegative, format!("t <= {t_max}"));
    for (t, row) in table.iter().enumerate() {
        for (i, v) in row.iter().enumerate() {
            let at = Coord::new(i as i64, t as i64);
            sign.record(at, BigInt::from(v.is_negative() as u8), BigInt::zero());
            if let Some(expected) = golden::SE_DIFFERENCE_ROWS.get(t) {
                let shown = expected.get(i).copied().unwrap_or(0);
                golden_check.record(at, v.clone(), BigInt::from(shown));
            }
        }
    }
    Ok(alloc::vec![golden_check, sign])
}

/// Hook sums at every vertex where they apply, `1 ≤ t ≤ t_max`.
pub fn check_hooks(even: &ValueTable, odd: &ValueTable, t_max: i64) -> Result<Vec<IdentityCheck>> {
    require(even, TriangleKind::Even, t_max)?;
    require(odd, TriangleKind::Odd, t_max)?;
    let mut h = IdentityCheck::new(IdentityId::HookEven, format!("0 <= 2i <= t <= {t_max}"));
    let mut hp = IdentityCheck::new(IdentityId::HookOddPrime, format!("0 <= 2i <= t <= {t_max}"));
    let mut hpp = IdentityCheck::new(
        IdentityId::HookOddDouble,
        format!("vertex right of 2p = t, t <= {t_max}"),
    );
    for t in 1..=t_max {
        for i in 0..=t / 2 {
            h.record(
                Coord::new(i, t),
                even.even_hook(i, t)?,
                even.even_lookup(i, t)?,
            );
            hp.record(
                Coord::new(i, t),
                odd.odd_hook_prime(i, t)?,
                odd.odd_lookup_prime(i, t)?,
            );
        }
        for position in (t / 2 + 1)..t {
            let i = t - 1 - position;
            hpp.record(
                Coord::new(i, t),
                odd.odd_hook_double(i, t)?,
                odd.odd_lookup_double(i, t)?,
            );
        }
    }
    Ok(alloc::vec![h, hp, hpp])
}

/// Row sums against Fibonacci numbers for `0 ≤ t ≤ t_max`, including the
/// typeset odd weighting, which is expected to fail.
pub fn check_partition_sums(
    even: &ValueTable,
    odd: &ValueTable,
    t_max: i64,
) -> Result<Vec<IdentityCheck>> {
    require(even, TriangleKind::Even, t_max)?;
    require(odd, TriangleKind::Odd, t_max)?;
    let range = format!("0 <= t <= {t_max}");
    let mut e = IdentityCheck::new(IdentityId::SumEven, range.clone());
    let mut o = IdentityCheck::new(IdentityId::SumOdd, range.clone());
    let mut printed = IdentityCheck::new(IdentityId::SumOddPrinted, range);
    for t in 0..=t_max {
        let at = Coord::new(0, t);
        let f_odd = fib(2 * t as u64 + 1)?;
        e.record(at, even_partition_sum(even, t)?, fib(2 * t as u64 + 2)?);
        o.record(at, odd_partition_sum(odd, t)?, f_odd.clone());
        printed.record(at, odd_partition_sum_as_printed(odd, t)?, f_odd);
    }
    Ok(alloc::vec![e, o, printed])
}

fn compare_rows<'a>(
    id: IdentityId,
    range: String,
    left: impl Iterator<Item = (i64, &'a [BigInt])>,
    right: impl Fn(i64, usize) -> Option<BigInt>,
    right_len: impl Fn(i64) -> Option<usize>,
) -> IdentityCheck {
    let mut check = IdentityCheck::new(id, range);
    for (t, row) in left {
        let Some(len) = right_len(t) else { continue };
        for i in 0..row.len().max(len) {
            let lhs = row.get(i).cloned().unwrap_or_default();
            let rhs = right(t, i).unwrap_or_default();
            check.record(Coord::new(i as i64, t), lhs, rhs);
        }
    }
    check
}

/// Quiver evaluation against the closed recurrences and against the
/// published rows.
pub fn check_oracles(even: &ValueTable, odd: &ValueTable) -> Result<Vec<IdentityCheck>> {
    require(even, TriangleKind::Even, 0)?;
    require(odd, TriangleKind::Odd, 0)?;
    let even_rec = even_rows_by_recurrence(even.max_row() as u32);
    let odd_rec = odd_rows_by_recurrence(odd.max_row() as u32);
    let dense = |rows: &[Vec<BigInt>], t: i64, i: usize| rows.get(t as usize)?.get(i).cloned();
    let golden_get =
        |rows: &[&[u64]], t: i64, i: usize| rows.get(t as usize)?.get(i).map(|&v| BigInt::from(v));
    let golden_len = |rows: &[&[u64]], t: i64| rows.get(t as usize).map(|r| r.len());
    Ok(alloc::vec![
        compare_rows(
            IdentityId::OracleEven,
            format!("t <= {}", even.max_row()),
            even.rows(),
            |t, i| dense(&even_rec, t, i),
            |t| even_rec.get(t as usize).map(Vec::len),
        ),
        compare_rows(
            IdentityId::OracleOdd,
            format!("t <= {}", odd.max_row()),
            odd.rows(),
            |t, i| dense(&odd_rec, t, i),
            |t| odd_rec.get(t as usize).map(Vec::len),
        ),
        compare_rows(
            IdentityId::GoldenEven,
            "published rows".into(),
            even.rows(),
            |t, i| golden_get(golden::EVEN_ROWS, t, i),
            |t| golden_len(golden::EVEN_ROWS, t),
        ),
        compare_rows(
            IdentityId::GoldenOdd,
            "published rows".into(),
            odd.rows(),
            |t, i| golden_get(golden::ODD_ROWS, t, i),
            |t| golden_len(golden::ODD_ROWS, t),
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangles::{even_table, odd_table};

    fn tables(t: u32) -> (ValueTable, ValueTable) {
        (even_table(t), odd_table(t))
    }

    fn all_pass(checks: &[IdentityCheck]) {
        for c in checks {
            assert!(c.passed(), "{c}");
            assert!(c.checked > 0, "{c}");
        }
    }

    #[test]
    fn relation_worked_entries() {
        let (even, odd) = tables(8);
        let d = |i, t| even.even_lookup(i, t).unwrap();
        let p = |i, t| odd.odd_lookup_prime(i, t).unwrap();
        let q = |i, t| odd.odd_lookup_double(i, t).unwrap();
        assert_eq!(p(2, 6), d(2, 6) - d(1, 5));
        assert_eq!(p(2, 6), BigInt::from(13));
        assert_eq!(q(1, 6), BigInt::from(6));
        assert_eq!(d(2, 6) - d(2, 5), BigInt::from(6));
        assert_eq!(d(3, 6), p(3, 7) - q(1, 6));
        assert_eq!(d(3, 6), BigInt::from(29));
    }

    #[test]
    fn triangle_relations_hold() {
        let (even, odd) = tables(40);
        all_pass(&check_triangle_relations(&even, &odd, 40).unwrap());
    }

    #[test]
    fn knight_moves_reach_pylon() {
        let (_, odd) = tables(15);
        let pylon: Vec<_> = (1..=7).map(|i| knight_move(&odd, i).unwrap()).collect();
        let expected: Vec<BigInt> = [2, 7, 29, 130, 611, 2965, 14726]
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(pylon, expected);
        assert!(knight_move(&odd, 0).is_err());
        assert!(knight_move(&odd, 8).is_err());
    }

    #[test]
    fn second_differences_and_sums_hold() {
        let (even, odd) = tables(41);
        all_pass(&check_second_differences(&odd, 40).unwrap());
        all_pass(&check_summations(&even, &odd, 40).unwrap());
        all_pass(&[check_knight(&even, &odd, 20).unwrap()]);
    }

    #[test]
    fn second_difference_worked_entries() {
        let (even, odd) = tables(8);
        let p = |i, t| odd.odd_lookup_prime(i, t).unwrap();
        let q = |i, t| odd.odd_lookup_double(i, t).unwrap();
        assert_eq!(q(1, 6), p(3, 7) - p(3, 6) * 2 + p(3, 5));
        assert_eq!(p(2, 6), q(2, 7) - q(1, 6) * 2 + q(0, 5));
        assert_eq!(p(0, 4) + p(1, 5) + p(2, 6), even.even_lookup(2, 6).unwrap());
        assert_eq!(
            even.even_lookup(0, 4).unwrap() + even.even_lookup(1, 5).unwrap(),
            q(1, 6)
        );
    }

    #[test]
    fn printed_readings_fail() {
        let (_, odd) = tables(41);
        let checks = check_printed_forms(&odd, 40).unwrap();
        assert!(checks.iter().all(|c| !c.passed()));
        let wide = &checks[1];
        assert!(wide
            .counterexamples
            .iter()
            .any(|c| c.at == Coord::new(1, 6)));
    }

    #[test]
    fn operators() {
        let fibs: Vec<BigInt> = (1..=10).map(|n| fib(n).unwrap()).collect();
        assert_eq!(delta(&shift(&fibs).unwrap()).unwrap(), fibs[..8].to_vec());
        let ones = alloc::vec![BigInt::from(1); 4];
        assert!(delta(&ones).unwrap().iter().all(Zero::is_zero));
        assert_eq!(delta(&[]), Err(Error::EmptyInput));
        assert_eq!(shift(&[]), Err(Error::EmptyInput));
        assert!(delta(&ones[..1]).is_err());
        let (even, odd) = tables(51);
        all_pass(&check_operators(&even, &odd, 5, 50).unwrap());
    }

    #[test]
    fn se_differences() {
        let (_, odd) = tables(12);
        let table = se_difference_table(&odd, 12).unwrap();
        let row9: Vec<BigInt> = [1, 7, 27, 67, 102, 40, 9, 1, 0]
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(table[9], row9);
        assert_eq!(table[1], [BigInt::from(1)]);
        assert_eq!(table[0], [BigInt::from(1)]);
        all_pass(&check_se_differences(&odd, 12).unwrap());
    }

    #[test]
    fn hooks_sums_and_oracles() {
        let (even, odd) = tables(30);
        all_pass(&check_hooks(&even, &odd, 30).unwrap());
        let sums = check_partition_sums(&even, &odd, 30).unwrap();
        all_pass(&sums[..2]);
        assert!(!sums[2].passed());
        all_pass(&check_oracles(&even, &odd).unwrap());
    }

    #[test]
    fn short_tables_are_rejected() {
        let (even, odd) = tables(10);
        assert!(check_triangle_relations(&even, &odd, 11).is_err());
        assert!(check_second_differences(&odd, 10).is_err());
        assert_eq!(
            check_triangle_relations(&odd, &odd, 5),
            Err(Error::WrongKind)
        );
    }
}
