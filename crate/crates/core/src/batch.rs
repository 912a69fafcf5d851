//! Batch verdicts over many polynomials.
//!
//! Every check is an independent pure computation, so a batch fans out
//! across threads when the `parallel` feature is enabled (the default) and
//! falls back to a plain sequential map otherwise. Output order always
//! matches input order.

use crate::certify::{self, RealRootednessVerdict};
use crate::error::Error;
use crate::poly::Polynomial;

/// Run [`certify::check_both`] on every polynomial, in parallel when the
/// `parallel` feature is on.
pub fn check_both_all(polys: &[Polynomial]) -> Vec<Result<RealRootednessVerdict, Error>> {
    crate::map_slice(polys, certify::check_both)
}

/// Sequential equivalent of [`check_both_all`], kept unconditionally for
/// benchmarking the parallel speedup.
pub fn check_both_all_seq(polys: &[Polynomial]) -> Vec<Result<RealRootednessVerdict, Error>> {
    polys.iter().map(certify::check_both).collect()
}

/// Run the criterion and the oracle independently on every polynomial,
/// without folding their answers together, so callers can compare them.
#[allow(clippy::type_complexity)]
pub fn check_methods_all(
    polys: &[Polynomial],
) -> Vec<(Result<RealRootednessVerdict, Error>, Result<RealRootednessVerdict, Error>)> {
    crate::map_slice(polys, |p| (certify::check_criterion(p), certify::check_sturm_oracle(p)))
}
