//! Exact and asymptotic analysis of distinct-part partitions fitting inside
//! truncated staircases.
//!
//! A truncated staircase is the partition shape `(n, n-1, ..., n-b+1)`. The
//! coefficient `c(l)` counts partitions of `l` into at most `b` distinct parts
//! of size at most `n`, and this crate studies the shape of that coefficient
//! sequence from three directions:
//!
//! * [`exact`] — big-integer enumeration, Gaussian binomials, the rank
//!   generating function built by two independent routes, and unimodality /
//!   log-concavity checkers.
//! * [`density`] — exact-rational piecewise polynomials: the Irwin-Hall
//!   density `I_b` (the b-fold self-convolution of the unit indicator), its
//!   derivatives, log-concavity margins, and the convolution lemma.
//! * [`saddle`] — floating-point contour integration: Cauchy coefficient
//!   extraction on the line `e(theta + i*alpha)`, the derivative integrals
//!   `J_m`, and their Irwin-Hall leading-order comparison.
//!
//! The crate is data-parallel by default (the `parallel` feature, on by
//! default, routes batch scans, margin grids, and per-coefficient extraction
//! through rayon). Every parallel entry point keeps a `_serial` twin with
//! identical output, used as the fallback when the feature is disabled and by
//! the benchmark suite.

pub mod density;
pub mod exact;
mod par;
pub mod saddle;

mod numfmt;
mod poly;
mod shape;

pub use poly::IntegerPolynomial;
pub use shape::StaircaseShape;
