//! Fibonacci numbers and the row sums of the two triangles.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::triangles::{TriangleKind, ValueTable};
use crate::Result;

/// Memoized Fibonacci numbers `f_1 = f_2 = 1`.
///
/// Grows monotonically through `&mut self`; share a sequence between
/// threads only after [`FibSequence::extend_to`] has covered every index
/// that will be read.
#[derive(Debug, Clone)]
pub struct FibSequence {
    // memo[n] = f_n, memo[0] = f_0 = 0 is kept only to simplify indexing
    memo: Vec<BigInt>,
}

impl Default for FibSequence {
    fn default() -> Self {
        FibSequence {
            memo: vec![BigInt::zero(), BigInt::one()],
        }
    }
}

impl FibSequence {
    /// Empty memo.
    pub fn new() -> Self {
        Self::default()
    }

    /// Makes `f_1 ..= f_n` available.
    pub fn extend_to(&mut self, n: usize) {
        while self.memo.len() <= n {
            let k = self.memo.len();
            let next = &self.memo[k - 1] + &self.memo[k - 2];
            self.memo.push(next);
        }
    }

    /// `f_n`, extending the memo as needed.
    pub fn get(&mut self, n: usize) -> Result<&BigInt> {
        if n == 0 {
            return Err(Error::ZeroFibonacciIndex);
        }
        self.extend_to(n);
        Ok(&self.memo[n])
    }

    /// `f_n` if already memoized.
    pub fn cached(&self, n: usize) -> Option<&BigInt> {
        (n > 0).then(|| self.memo.get(n)).flatten()
    }
}

/// `f_n` for `n ≥ 1`.
pub fn fib(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::ZeroFibonacciIndex);
    }
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 1..n {
        let next = &a + &b;
        a = core::mem::replace(&mut b, next);
    }
    Ok(b)
}

/// `3·Σ_{0≤i<t/2} 2^{t-2i-1}·d_i(t) + d_{t/2}(t)`, the last term present only
/// for even `t`. Equals `f_{2t+2}`.
pub fn even_partition_sum(tbl: &ValueTable, t: i64) -> Result<BigInt> {
    if tbl.kind() != TriangleKind::Even {
        return Err(Error::WrongKind);
    }
    if t < 0 {
        return Err(Error::RowOutOfRange {
            t,
            max_row: tbl.max_row(),
        });
    }
    let mut weighted = BigInt::zero();
    let mut i = 0;
    while 2 * i < t {
        weighted += tbl.even_lookup(i, t)? << (t - 2 * i - 1) as usize;
        i += 1;
    }
    let pylon = if t % 2 == 0 {
        tbl.even_lookup(t / 2, t)?
    } else {
        BigInt::zero()
    };
    Ok(weighted * 3u32 + pylon)
}

/// `Σ_{i=0}^{⌊t/2⌋} 2^{t-2i}·d'_i(t) + Σ_{i=0}^{⌊(t-3)/2⌋} 2^{t-2i-3}·d''_i(t)`.
/// Equals `f_{2t+1}`.
///
/// The second sum uses the exponent `t-2i-3`; with that exponent the row
/// sums are Fibonacci numbers for every `t`.
pub fn odd_partition_sum(tbl: &ValueTable, t: i64) -> Result<BigInt> {
    if tbl.kind() != TriangleKind::Odd {
        return Err(Error::WrongKind);
    }
    if t < 0 {
        return Err(Error::RowOutOfRange {
            t,
            max_row: tbl.max_row(),
        });
    }
    let mut sum = BigInt::zero();
    for i in 0..=t / 2 {
        sum += tbl.odd_lookup_prime(i, t)? << (t - 2 * i) as usize;
    }
    let mut i = 0;
    while 2 * i + 3 <= t {
        sum += tbl.odd_lookup_double(i, t)? << (t - 2 * i - 3) as usize;
        i += 1;
    }
    Ok(sum)
}

/// The odd row sum exactly as typeset next to the odd triangle: both sums
/// weighted by `2^{t-2i}`, the first over `i < t/2`, the second over
/// `i < (t-3)/2`. Kept to document that it misses `f_{2t+1}`.
pub fn odd_partition_sum_as_printed(tbl: &ValueTable, t: i64) -> Result<BigInt> {
    if tbl.kind() != TriangleKind::Odd {
        return Err(Error::WrongKind);
    }
    let mut sum = BigInt::zero();
    let mut i = 0;
    while 2 * i < t {
        sum += tbl.odd_lookup_prime(i, t)? << (t - 2 * i) as usize;
        i += 1;
    }
    let mut i = 0;
    while 2 * i < t - 3 {
        sum += tbl.odd_lookup_double(i, t)? << (t - 2 * i) as usize;
        i += 1;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangles::{even_table, odd_table};

    #[test]
    fn fibonacci_values() {
        assert_eq!(fib(1), Ok(BigInt::from(1)));
        assert_eq!(fib(2), Ok(BigInt::from(1)));
        assert_eq!(fib(12), Ok(BigInt::from(144)));
        assert_eq!(fib(13), Ok(BigInt::from(233)));
        assert_eq!(fib(26), Ok(BigInt::from(121_393)));
        assert_eq!(fib(0), Err(Error::ZeroFibonacciIndex));
    }

    #[test]
    fn memo_agrees_with_direct() {
        let mut seq = FibSequence::new();
        assert_eq!(seq.get(0), Err(Error::ZeroFibonacciIndex));
        for n in 1..=200usize {
            assert_eq!(seq.get(n).unwrap(), &fib(n as u64).unwrap());
        }
        assert!(seq.cached(200).is_some());
        assert!(seq.cached(201).is_none());
    }

    #[test]
    fn delta_shift_reproduces_fib() {
        for n in 1..=500u64 {
            assert_eq!(fib(n + 2).unwrap() - fib(n + 1).unwrap(), fib(n).unwrap());
        }
    }

    #[test]
    fn worked_rows() {
        let even = even_table(6);
        assert_eq!(even_partition_sum(&even, 5), Ok(BigInt::from(144)));
        assert_eq!(even_partition_sum(&even, 6), Ok(BigInt::from(377)));
        assert_eq!(even_partition_sum(&even, 0), Ok(BigInt::from(1)));
        let odd = odd_table(9);
        assert_eq!(odd_partition_sum(&odd, 5), Ok(BigInt::from(89)));
        assert_eq!(odd_partition_sum(&odd, 6), Ok(BigInt::from(233)));
        assert_eq!(odd_partition_sum(&odd, 9), Ok(BigInt::from(4181)));
        assert_eq!(odd_partition_sum(&odd, 0), Ok(BigInt::from(1)));
        assert!(odd_partition_sum(&odd, 10).is_err());
        assert_eq!(odd_partition_sum(&even, 1), Err(Error::WrongKind));
    }

    #[test]
    fn printed_odd_form_misses_worked_rows() {
        let odd = odd_table(6);
        assert_ne!(odd_partition_sum_as_printed(&odd, 5), Ok(BigInt::from(89)));
        assert_ne!(odd_partition_sum_as_printed(&odd, 6), Ok(BigInt::from(233)));
    }
}
