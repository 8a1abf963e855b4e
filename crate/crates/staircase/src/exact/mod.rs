//! Exact big-integer combinatorics of truncated staircases.
//!
//! Everything here is integer arithmetic: the generating function is built by
//! two independent routes (a distinct-part knapsack DP and the Gaussian
//! binomial identity), with a brute-force enumerator as a third, slower
//! oracle. No floating point enters this module.

mod checks;
mod scan;

pub use checks::{
    check_log_concave, check_unimodal, default_bulk_window, LogConcavityReport, UnimodalityReport,
    DEFAULT_BULK_TAU_DENOM, DEFAULT_BULK_TAU_NUMER,
};
pub use scan::{scan_unimodality, scan_unimodality_serial, ShapeScanRow};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::IntegerPolynomial;
use crate::shape::StaircaseShape;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("shape parameters must be positive (n={n}, b={b})")]
    InvalidShape { n: u32, b: u32 },
    #[error("gaussian binomial requires b <= n (got n={n}, b={b})")]
    BinomialDomain { n: u32, b: u32 },
    #[error("identity route requires b <= n (got n={n}, b={b}); clamp b to n first")]
    IdentityDomain { n: u32, b: u32 },
    #[error("the zero polynomial has no coefficient profile")]
    ZeroPolynomial,
    #[error("index window [{lo}, {hi}] invalid for degree {degree} (need 1 <= lo <= hi <= degree-1)")]
    WindowOutOfBounds { lo: usize, hi: usize, degree: usize },
}

/// Counts partitions of `ell` into at most `b` distinct parts of size at most
/// `n` by exhaustive recursion over the largest part.
///
/// Deliberately free of generating functions and memoization: this is the
/// independent oracle the polynomial routes are checked against, so it shares
/// no machinery with them. Exponential in the worst case; intended for small
/// shapes.
pub fn enumerate_strict_count(shape: &StaircaseShape, ell: usize) -> BigUint {
    fn rec(remaining: usize, max_part: usize, parts_left: u32) -> BigUint {
        if remaining == 0 {
            return BigUint::one();
        }
        if parts_left == 0 || max_part == 0 {
            return BigUint::zero();
        }
        let mut total = BigUint::zero();
        for largest in 1..=max_part.min(remaining) {
            total += rec(remaining - largest, largest - 1, parts_left - 1);
        }
        total
    }
    rec(ell, shape.n() as usize, shape.effective_b())
}

/// The Gaussian binomial `(n choose b)_q` as a polynomial of degree
/// `b*(n-b)`, computed by the q-Pascal recurrence
/// `C(i,j) = C(i-1,j-1) + q^j * C(i-1,j)` in exact integers.
///
/// The quotient-of-products definition is used only as a test oracle (via
/// exact polynomial long division); no floating division here.
pub fn gaussian_binomial(n: u32, b: u32) -> Result<IntegerPolynomial, ExactError> {
    if b > n {
        return Err(ExactError::BinomialDomain { n, b });
    }
    Ok(gaussian_binomial_row(n, b).pop().expect("row is nonempty"))
}

/// All of `(n choose 0)_q ..= (n choose b)_q` in one Pascal pass; requires
/// `b <= n`.
pub(crate) fn gaussian_binomial_row(n: u32, b: u32) -> Vec<IntegerPolynomial> {
    debug_assert!(b <= n);
    let cap = b as usize;
    // row[j] = C(i, j)_q for j <= min(i, cap)
    let mut row: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]];
    for i in 1..=n as usize {
        let jmax = i.min(cap);
        let mut next: Vec<Vec<BigUint>> = Vec::with_capacity(jmax + 1);
        next.push(vec![BigUint::one()]);
        for j in 1..=jmax {
            let mut acc = row[j - 1].clone();
            if let Some(upper) = row.get(j) {
                let need = j + upper.len();
                if acc.len() < need {
                    acc.resize(need, BigUint::zero());
                }
                for (k, c) in upper.iter().enumerate() {
                    acc[j + k] += c;
                }
            }
            next.push(acc);
        }
        row = next;
    }
    row.into_iter().map(IntegerPolynomial::from_coeffs).collect()
}

/// The rank generating function `F(q) = sum_l c(l) q^l`, built by dynamic
/// programming over distinct part values `1..=n` with at most `b` parts
/// (0/1 knapsack). Degree is exactly `shape.degree_bound()`.
pub fn staircase_gf_dp(shape: &StaircaseShape) -> IntegerPolynomial {
    let n = shape.n() as usize;
    let b = shape.effective_b() as usize;
    let degree = shape.degree_bound();
    // dp[j][s] = number of j-subsets of {1..v} with sum s, after processing v
    let mut dp: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); degree + 1]; b + 1];
    dp[0][0] = BigUint::one();
    for v in 1..=n {
        for j in (1..=b).rev() {
            let (lower, upper) = dp.split_at_mut(j);
            let src = &lower[j - 1];
            let dst = &mut upper[0];
            for s in (v..=degree).rev() {
                if !src[s - v].is_zero() {
                    dst[s] += &src[s - v];
                }
            }
        }
    }
    let mut coeffs = vec![BigUint::zero(); degree + 1];
    for row in &dp {
        for (s, c) in row.iter().enumerate() {
            coeffs[s] += c;
        }
    }
    IntegerPolynomial::from_coeffs(coeffs)
}

/// The same generating function assembled from the identity
/// `F(q) = sum_{a=0}^{b} q^{a(a+1)/2} * (n choose a)_q`.
///
/// Requires `b <= n`; callers holding a clamped shape should pass the
/// effective `b`. Must agree with [`staircase_gf_dp`] coefficientwise.
pub fn staircase_gf_identity(shape: &StaircaseShape) -> Result<IntegerPolynomial, ExactError> {
    let (n, b) = (shape.n(), shape.b());
    if b > n {
        return Err(ExactError::IdentityDomain { n, b });
    }
    let row = gaussian_binomial_row(n, b);
    let mut acc = IntegerPolynomial::zero();
    for (a, binom) in row.iter().enumerate() {
        acc.add_shifted(binom, a * (a + 1) / 2);
    }
    Ok(acc)
}

/// Verdicts for the two tail chains: `c(0) <= ... <= c(n)` ascending and
/// `c((b-1)n) >= ... >= c(bn - b(b-1)/2)` descending.
///
/// Both hold for every shape by the paper's injective maps, so a `false`
/// here signals an implementation bug rather than a mathematical event.
/// When `(b-1)*n` exceeds the degree the descending chain is empty and
/// vacuously true.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailMonotonicity {
    pub ascending_ok: bool,
    pub descending_ok: bool,
}

pub fn tail_monotonicity(shape: &StaircaseShape) -> TailMonotonicity {
    let gf = staircase_gf_dp(shape);
    tail_monotonicity_of(shape, &gf)
}

/// Same check against an already computed generating function.
pub fn tail_monotonicity_of(shape: &StaircaseShape, gf: &IntegerPolynomial) -> TailMonotonicity {
    let coeffs = gf.coeffs();
    let n = shape.n() as usize;
    let b = shape.effective_b() as usize;
    let degree = gf.degree();

    let ascending_ok = (0..n.min(degree)).all(|i| coeffs[i] <= coeffs[i + 1]);

    let start = (b - 1) * n;
    let descending_ok = if start >= degree {
        true
    } else {
        (start..degree).all(|i| coeffs[i] >= coeffs[i + 1])
    };

    TailMonotonicity {
        ascending_ok,
        descending_ok,
    }
}
