//! Delannoy paths that never cross the diagonal horizontally.
//!
//! A path from `(0,0)` to `(n,n)` uses the steps `E = (1,0)`, `N = (0,1)`
//! and `D = (1,1)`. It is rejected when it contains
//! `(m-1,m) → (m,m) → (m+1,m)`, two consecutive `E` steps through a
//! diagonal point.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::identities::{IdentityCheck, IdentityId};
use crate::quiver::Coord;
use crate::triangles::{TriangleKind, ValueTable};
use crate::Result;

/// Largest `n` accepted by [`enumerate_restricted_delannoy`].
pub const ENUMERATION_LIMIT: u32 = 7;

/// One unit move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// `(1,0)`.
    E,
    /// `(0,1)`.
    N,
    /// `(1,1)`.
    D,
}

impl Step {
    /// All steps.
    pub const ALL: [Step; 3] = [Step::E, Step::N, Step::D];

    fn offset(self) -> (usize, usize) {
        match self {
            Step::E => (1, 0),
            Step::N => (0, 1),
            Step::D => (1, 1),
        }
    }
}

/// Position together with the step that reached it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathState {
    /// Column.
    pub x: usize,
    /// Row.
    pub y: usize,
    /// `None` at the origin.
    pub last_step: Option<Step>,
}

impl PathState {
    /// Whether `step` completes the forbidden pattern.
    pub fn forbids(&self, step: Step) -> bool {
        step == Step::E && self.last_step == Some(Step::E) && self.x == self.y
    }
}

fn slot(step: Option<Step>) -> usize {
    match step {
        None => 0,
        Some(Step::E) => 1,
        Some(Step::N) => 2,
        Some(Step::D) => 3,
    }
}

fn count(n: usize, restricted: bool) -> BigInt {
    // column[y][slot(last)] for the current x; only x and x + 1 are live
    let empty = || vec![<[BigInt; 4]>::default(); n + 1];
    let mut column = empty();
    column[0][0] = BigInt::one();
    for x in 0..=n {
        let mut next = empty();
        for y in 0..=n {
            for last in [None, Some(Step::E), Some(Step::N), Some(Step::D)] {
                let here = core::mem::take(&mut column[y][slot(last)]);
                if here.is_zero() {
                    continue;
                }
                let state = PathState {
                    x,
                    y,
                    last_step: last,
                };
                for step in Step::ALL {
                    let (dx, dy) = step.offset();
                    if x + dx > n || y + dy > n || (restricted && state.forbids(step)) {
                        continue;
                    }
                    let target = if dx == 0 {
                        &mut column[y + dy]
                    } else {
                        &mut next[y + dy]
                    };
                    target[slot(Some(step))] += &here;
                }
                if x == n && y == n {
                    column[y][slot(last)] = here;
                }
            }
        }
        if x == n {
            return column[n].iter().sum();
        }
        column = next;
    }
    unreachable!("loop returns at x = n")
}

/// Restricted paths to `(n,n)`, by dynamic programming over [`PathState`].
pub fn count_restricted_delannoy(n: usize) -> BigInt {
    count(n, true)
}

/// All Delannoy paths to `(n,n)`: the central Delannoy number.
pub fn count_delannoy(n: usize) -> BigInt {
    count(n, false)
}

/// Every restricted path to `(n,n)`, generated explicitly.
pub fn restricted_delannoy_paths(n: u32) -> Result<Vec<Vec<Step>>> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLargeForEnumeration {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let n = n as usize;
    let mut done = Vec::new();
    let mut stack = vec![(
        PathState {
            x: 0,
            y: 0,
            last_step: None,
        },
        Vec::new(),
    )];
    while let Some((state, path)) = stack.pop() {
        if state.x == n && state.y == n {
            done.push(path);
            continue;
        }
        for step in Step::ALL {
            let (dx, dy) = step.offset();
            if state.x + dx > n || state.y + dy > n {
                continue;
            }
            let mut next = path.clone();
            next.push(step);
            stack.push((
                PathState {
                    x: state.x + dx,
                    y: state.y + dy,
                    last_step: Some(step),
                },
                next,
            ));
        }
    }
    done.retain(|path| !contains_forbidden(path));
    Ok(done)
}

/// Scans a complete path for `(m-1,m) → (m,m) → (m+1,m)`.
pub fn contains_forbidden(path: &[Step]) -> bool {
    let (mut x, mut y) = (0usize, 0usize);
    let mut previous = None;
    for &step in path {
        if step == Step::E && previous == Some(Step::E) && x == y {
            return true;
        }
        let (dx, dy) = step.offset();
        x += dx;
        y += dy;
        previous = Some(step);
    }
    false
}

/// Number of restricted paths to `(n,n)` by explicit enumeration,
/// `n ≤ 7`.
pub fn enumerate_restricted_delannoy(n: u32) -> Result<BigInt> {
    Ok(BigInt::from(restricted_delannoy_paths(n)?.len()))
}

/// Restricted counts against `d_n(2n+1)` for `0 ≤ n ≤ n_max`.
pub fn check_second_last_column(even: &ValueTable, n_max: i64) -> Result<IdentityCheck> {
    if even.kind() != TriangleKind::Even {
        return Err(Error::WrongKind);
    }
    if even.max_row() < 2 * n_max + 1 {
        return Err(Error::RowOutOfRange {
            t: 2 * n_max + 1,
            max_row: even.max_row(),
        });
    }
    let mut check = IdentityCheck::new(IdentityId::Delannoy, format!("0 <= n <= {n_max}"));
    for n in 0..=n_max {
        let lhs = count_restricted_delannoy(n as usize);
        let rhs = even.even_lookup(n, 2 * n + 1)?;
        check.record(Coord::new(n, 2 * n + 1), lhs, rhs);
    }
    Ok(check)
}

/// Dynamic programming against enumeration for `0 ≤ n ≤ n_max ≤ 7`.
pub fn check_enumeration(n_max: u32) -> Result<IdentityCheck> {
    let mut check = IdentityCheck::new(
        IdentityId::DelannoyEnumeration,
        format!("0 <= n <= {n_max}"),
    );
    for n in 0..=n_max {
        let lhs = count_restricted_delannoy(n as usize);
        let rhs = enumerate_restricted_delannoy(n)?;
        check.record(Coord::new(n as i64, n as i64), lhs, rhs);
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::{CENTRAL_DELANNOY, SECOND_LAST_COLUMN};
    use crate::triangles::even_table;

    #[test]
    fn restricted_counts() {
        for (n, &v) in SECOND_LAST_COLUMN.iter().enumerate() {
            assert_eq!(count_restricted_delannoy(n), BigInt::from(v));
        }
    }

    #[test]
    fn unrestricted_counts() {
        for (n, &v) in CENTRAL_DELANNOY.iter().enumerate() {
            assert_eq!(count_delannoy(n), BigInt::from(v));
        }
    }

    #[test]
    fn enumeration_agrees() {
        let paths = restricted_delannoy_paths(1).unwrap();
        assert_eq!(paths.len(), 3);
        assert!(contains_forbidden(&[Step::N, Step::E, Step::E, Step::N]));
        assert!(!contains_forbidden(&[Step::E, Step::E, Step::N, Step::N]));
        assert!(!contains_forbidden(&[Step::N, Step::D, Step::E, Step::N]));
        assert!(check_enumeration(7).unwrap().passed());
        assert_eq!(
            enumerate_restricted_delannoy(8),
            Err(Error::TooLargeForEnumeration { n: 8, limit: 7 })
        );
    }

    #[test]
    fn second_last_column() {
        let even = even_table(25);
        let check = check_second_last_column(&even, 12).unwrap();
        assert!(check.passed());
        assert_eq!(check.checked, 13);
        assert!(check_second_last_column(&even, 13).is_err());
    }
}
