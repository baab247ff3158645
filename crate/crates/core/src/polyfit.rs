//! Diagonals of the triangles as polynomials in the binomial basis.
//!
//! A diagonal such as `t ↦ d_3(t)` agrees with an integer-valued polynomial
//! from some row on. Polynomials are kept as integer coefficients over
//! `C(t,0), C(t,1), ..., C(t,k)`, found by exact forward differences.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::golden::PRINTED_POLYNOMIALS;
use crate::triangles::{TriangleKind, ValueTable};
use crate::Result;

/// Which entries of a triangle a diagonal runs through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `d_i(t)` of the even triangle.
    Even,
    /// `d'_i(t)` of the odd triangle, counted from the left boundary.
    OddPrime,
    /// `d''_i(t)` of the odd triangle, counted from the right boundary.
    OddDouble,
}

impl Family {
    /// Triangle the family lives in.
    pub fn kind(self) -> TriangleKind {
        match self {
            Family::Even => TriangleKind::Even,
            Family::OddPrime | Family::OddDouble => TriangleKind::Odd,
        }
    }

    /// `d`, `d'` or `d''`.
    pub fn symbol(self) -> &'static str {
        match self {
            Family::Even => "d",
            Family::OddPrime => "d'",
            Family::OddDouble => "d''",
        }
    }

    /// First row on which diagonal `i` has an entry.
    pub fn first_row(self, i: i64) -> i64 {
        match self {
            Family::Even => 2 * i,
            Family::OddPrime if i == 0 => 0,
            Family::OddPrime | Family::OddDouble => i + 1,
        }
    }

    /// Entry `i` of row `t`, with the table's conventions.
    pub fn lookup(self, tbl: &ValueTable, i: i64, t: i64) -> Result<BigInt> {
        match self {
            Family::Even => tbl.even_lookup(i, t),
            Family::OddPrime => tbl.odd_lookup_prime(i, t),
            Family::OddDouble => tbl.odd_lookup_double(i, t),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "d" => Ok(Family::Even),
            "d'" | "d′" | "dp" | "dprime" | "prime" => Ok(Family::OddPrime),
            "d''" | "d″" | "dpp" | "ddouble" | "double" => Ok(Family::OddDouble),
            _ => Err(Error::OutOfRange("family must be d, d' or d''")),
        }
    }
}

/// `C(t, k)` for any integer `t`: `t(t-1)...(t-k+1) / k!`.
pub fn binomial(t: i64, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for m in 0..k as i64 {
        num *= t - m;
        den *= m + 1;
    }
    num / den
}

/// Integer combination of `C(t,0), ..., C(t,k)`, valid from row `t_min`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialPoly {
    coeffs: Vec<BigInt>,
    /// First row from which the polynomial reproduces the data.
    pub t_min: i64,
}

impl BinomialPoly {
    /// Builds the polynomial, dropping trailing zero coefficients.
    pub fn new(coeffs: Vec<BigInt>, t_min: i64) -> Self {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        BinomialPoly { coeffs, t_min }
    }

    /// From small integer coefficients.
    pub fn from_i64(coeffs: &[i64], t_min: i64) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), t_min)
    }

    /// Coefficients of `C(t,0), C(t,1), ...`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Leading binomial coefficient equals 1.
    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Same coefficients, ignoring `t_min`.
    pub fn same_polynomial(&self, other: &BinomialPoly) -> bool {
        self.coeffs == other.coeffs
    }

    /// `Σ c_k·C(t,k)`.
    pub fn evaluate(&self, t: i64) -> BigInt {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| c * binomial(t, k))
            .sum()
    }

    /// Binomial-basis form such as `C(t,2)+C(t,1)-4`.
    pub fn render_binomial(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let basis = (k > 0).then(|| format!("C(t,{k})"));
            push_term(&mut out, c, basis.as_deref());
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Monomial coefficients scaled to integers: `(numerator, denominator)`
    /// with `p(t) = Σ numerator[m]·t^m / denominator` in lowest terms.
    pub fn monomial_form(&self) -> (Vec<BigInt>, BigInt) {
        let degree = self.degree();
        let scale: BigInt = (1..=degree as u64).map(BigInt::from).product();
        let mut numerator = vec![BigInt::zero(); degree + 1];
        let mut falling = vec![BigInt::one()];
        let mut factorial = BigInt::one();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                factorial *= k as u64;
                // falling *= (t - (k-1))
                let mut next = vec![BigInt::zero(); falling.len() + 1];
                for (m, a) in falling.iter().enumerate() {
                    next[m + 1] += a;
                    next[m] -= a * (k as u64 - 1);
                }
                falling = next;
            }
            let weight = c * (&scale / &factorial);
            for (m, a) in falling.iter().enumerate() {
                numerator[m] += &weight * a;
            }
        }
        let g = numerator.iter().fold(scale.clone(), |g, a| g.gcd(a));
        let numerator = numerator.into_iter().map(|a| a / &g).collect();
        (numerator, scale / g)
    }

    /// Expanded form such as `(1/2)(t^2+t-8)`.
    pub fn render_expanded(&self) -> String {
        let (numerator, denominator) = self.monomial_form();
        let mut body = String::new();
        for (m, c) in numerator.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let basis = match m {
                0 => None,
                1 => Some(String::from("t")),
                m => Some(format!("t^{m}")),
            };
            push_term(&mut body, c, basis.as_deref());
        }
        if body.is_empty() {
            body.push('0');
        }
        if denominator.is_one() {
            body
        } else {
            format!("(1/{denominator})({body})")
        }
    }
}

fn push_term(out: &mut String, c: &BigInt, basis: Option<&str>) {
    let negative = c.is_negative();
    if negative {
        out.push('-');
    } else if !out.is_empty() {
        out.push('+');
    }
    let magnitude = c.abs();
    match basis {
        Some(b) if magnitude.is_one() => out.push_str(b),
        Some(b) => {
            let _ = write!(out, "{magnitude}{b}");
        }
        None => {
            let _ = write!(out, "{magnitude}");
        }
    }
}

impl fmt::Display for BinomialPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_binomial())
    }
}

/// Outcome of [`binomial_fit`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fit {
    /// Minimal-degree interpolant; `t_min` is the first sample's abscissa.
    pub poly: BinomialPoly,
    /// `false` when the degree reached `samples - 1`, so the data could be
    /// of higher degree.
    pub verified: bool,
}

/// Minimal-degree integer polynomial through samples at consecutive `t`.
pub fn binomial_fit(samples: &[(i64, BigInt)]) -> Result<Fit> {
    if samples.len() < 2 {
        return Err(Error::NotEnoughSamples {
            needed: 2,
            available: samples.len(),
        });
    }
    if samples.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
        return Err(Error::NonConsecutiveSamples);
    }
    let t0 = samples[0].0;

    // newton[k] = Δ^k p(t0); degree = deepest level with a nonzero entry
    let mut level: Vec<BigInt> = samples.iter().map(|(_, v)| v.clone()).collect();
    let mut newton = Vec::with_capacity(samples.len());
    let mut degree = 0;
    for k in 0..samples.len() {
        if level.iter().any(|v| !v.is_zero()) {
            degree = k;
        }
        newton.push(level[0].clone());
        level = level.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    newton.truncate(degree + 1);

    // C(t - t0, k) = Σ_j C(-t0, k - j)·C(t, j)
    let mut coeffs = vec![BigInt::zero(); degree + 1];
    for (k, a) in newton.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, c) in coeffs.iter_mut().enumerate().take(k + 1) {
            *c += a * binomial(-t0, k - j);
        }
    }

    Ok(Fit {
        poly: BinomialPoly::new(coeffs, t0),
        verified: degree + 1 < samples.len(),
    })
}

/// `Σ c_k·C(t,k)`; free-function form of [`BinomialPoly::evaluate`].
pub fn evaluate_binomial_poly(p: &BinomialPoly, t: i64) -> BigInt {
    p.evaluate(t)
}

/// Fits diagonal `i` of `family` on rows up to `window_end`.
///
/// The polynomial is interpolated through the last `i + 2` entries, which
/// also confirms the degree, and `t_min` is pushed back for as long as the
/// polynomial keeps matching. A degree other than `i` is an error.
pub fn diagonal_polynomial(
    tbl: &ValueTable,
    family: Family,
    i: i64,
    window_end: i64,
) -> Result<BinomialPoly> {
    if tbl.kind() != family.kind() {
        return Err(Error::WrongKind);
    }
    if i < 0 {
        return Err(Error::OutOfRange("diagonal index must be nonnegative"));
    }
    if window_end > tbl.max_row() {
        return Err(Error::RowOutOfRange {
            t: window_end,
            max_row: tbl.max_row(),
        });
    }
    let first = family.first_row(i);
    let needed = i as usize + 2;
    let available = usize::try_from(window_end - first + 1).unwrap_or(0);
    if available < needed {
        return Err(Error::NotEnoughSamples { needed, available });
    }

    let start = window_end + 1 - needed as i64;
    let samples = (start..=window_end)
        .map(|t| Ok((t, family.lookup(tbl, i, t)?)))
        .collect::<Result<Vec<_>>>()?;
    let fit = binomial_fit(&samples)?;
    if fit.poly.degree() != i as usize || !fit.verified {
        return Err(Error::DegreeMismatch {
            expected: i as usize,
            found: fit.poly.degree(),
        });
    }

    let mut poly = fit.poly;
    let mut t_min = start;
    while t_min > first && poly.evaluate(t_min - 1) == family.lookup(tbl, i, t_min - 1)? {
        t_min -= 1;
    }
    poly.t_min = t_min;
    Ok(poly)
}

/// A printed diagonal polynomial next to the fitted one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedComparison {
    /// Diagonal family.
    pub family: Family,
    /// Diagonal index.
    pub index: i64,
    /// The polynomial as printed.
    pub printed: BinomialPoly,
    /// Printed monomial form.
    pub printed_text: &'static str,
    /// The fitted polynomial.
    pub fitted: BinomialPoly,
}

impl PrintedComparison {
    /// Printed and fitted polynomials coincide.
    pub fn matches(&self) -> bool {
        self.printed.same_polynomial(&self.fitted)
    }
}

/// Fits every diagonal that has a printed polynomial and pairs the two.
pub fn compare_with_printed(
    even: &ValueTable,
    odd: &ValueTable,
    window_end: i64,
) -> Result<Vec<PrintedComparison>> {
    PRINTED_POLYNOMIALS
        .iter()
        .map(|p| {
            let tbl = if p.family == Family::Even { even } else { odd };
            let fitted = diagonal_polynomial(tbl, p.family, p.index, window_end)?;
            Ok(PrintedComparison {
                family: p.family,
                index: p.index,
                printed: BinomialPoly::from_i64(p.binomial_coeffs, fitted.t_min),
                printed_text: p.printed,
                fitted,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangles::{even_table, odd_table};

    fn samples(t0: i64, values: &[i64]) -> Vec<(i64, BigInt)> {
        values
            .iter()
            .enumerate()
            .map(|(k, &v)| (t0 + k as i64, BigInt::from(v)))
            .collect()
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::from(0));
        assert_eq!(binomial(-3, 2), BigInt::from(6));
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(7, 0), BigInt::from(1));
    }

    #[test]
    fn fit_identity_and_constant() {
        let fit = binomial_fit(&samples(3, &[3, 4, 5, 6])).unwrap();
        assert!(fit.verified);
        assert_eq!(fit.poly, BinomialPoly::from_i64(&[0, 1], 3));
        let fit = binomial_fit(&samples(0, &[1, 1, 1])).unwrap();
        assert_eq!(fit.poly, BinomialPoly::from_i64(&[1], 0));
    }

    #[test]
    fn fit_even_third_diagonal() {
        let fit = binomial_fit(&samples(6, &[29, 53, 85, 126, 177, 239, 313])).unwrap();
        assert!(fit.verified);
        assert_eq!(
            fit.poly.coeffs(),
            BinomialPoly::from_i64(&[-3, -3, 2, 1], 0).coeffs()
        );
        assert_eq!(fit.poly.evaluate(8), BigInt::from(85));
    }

    #[test]
    fn unverifiable_fit_is_flagged() {
        let fit = binomial_fit(&samples(0, &[0, 1, 8])).unwrap();
        assert!(!fit.verified);
        assert_eq!(fit.poly.degree(), 2);
        assert!(binomial_fit(&samples(0, &[1])).is_err());
        let gap = [(0, BigInt::from(1)), (2, BigInt::from(1))];
        assert_eq!(binomial_fit(&gap), Err(Error::NonConsecutiveSamples));
    }

    #[test]
    fn evaluation_reproduces_table_rows() {
        let d3 = BinomialPoly::from_i64(&[-3, -3, 2, 1], 6);
        assert_eq!(evaluate_binomial_poly(&d3, 8), BigInt::from(85));
        let dp3 = BinomialPoly::from_i64(&[0, -3, 1, 1], 5);
        assert_eq!(dp3.evaluate(8), BigInt::from(60));
    }

    #[test]
    fn renders() {
        let p = BinomialPoly::from_i64(&[-4, 1, 1], 6);
        assert_eq!(p.render_binomial(), "C(t,2)+C(t,1)-4");
        assert_eq!(p.render_expanded(), "(1/2)(t^2+t-8)");
        let p = BinomialPoly::from_i64(&[0, -3, 1, 1], 5);
        assert_eq!(p.render_expanded(), "(1/6)(t^3-19t)");
        assert_eq!(BinomialPoly::from_i64(&[-1, 1], 0).render_expanded(), "t-1");
        assert_eq!(
            BinomialPoly::from_i64(&[0, 0, -1], 0).render_binomial(),
            "-C(t,2)"
        );
        assert_eq!(BinomialPoly::from_i64(&[0], 0).render_binomial(), "0");
    }

    #[test]
    fn diagonals() {
        let odd = odd_table(40);
        let dp2 = diagonal_polynomial(&odd, Family::OddPrime, 2, 40).unwrap();
        assert_eq!(dp2, BinomialPoly::from_i64(&[-2, 0, 1], 3));
        let dpp2 = diagonal_polynomial(&odd, Family::OddDouble, 2, 40).unwrap();
        assert_eq!(dpp2, BinomialPoly::from_i64(&[-4, 1, 1], 6));
        let even = even_table(40);
        let d2 = diagonal_polynomial(&even, Family::Even, 2, 40).unwrap();
        assert_eq!(d2, BinomialPoly::from_i64(&[-3, 1, 1], 4));
        assert_eq!(
            diagonal_polynomial(&odd, Family::Even, 2, 40),
            Err(Error::WrongKind)
        );
        assert!(matches!(
            diagonal_polynomial(&even, Family::Even, 3, 8),
            Err(Error::NotEnoughSamples { .. })
        ));
    }

    #[test]
    fn family_parses() {
        assert_eq!("d''".parse::<Family>(), Ok(Family::OddDouble));
        assert_eq!("d″".parse::<Family>(), Ok(Family::OddDouble));
        assert_eq!("d'".parse::<Family>(), Ok(Family::OddPrime));
        assert!("e".parse::<Family>().is_err());
    }
}
