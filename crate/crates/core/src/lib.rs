//! Exact real-rootedness certification over the rationals.
//!
//! Decides and *certifies* whether all zeros of a rational-coefficient
//! univariate polynomial are real and distinct, by two independent exact
//! routes (the derivative-Wronskian positivity criterion and a classical
//! Sturm oracle), and realizes every certified input as the top of a finite
//! orthogonal-polynomial sequence: monic three-term recurrence, positivity
//! (Favard) certificate, Jacobi matrix, and a discrete orthogonality
//! measure with Christoffel weights.
//!
//! All decisions run in exact rational arithmetic; floating point appears
//! only in cross-checks (Jacobi eigenvalues, orthogonality residuals) and
//! in user-facing approximations of irrational roots.
//!
//! Batch checks and node refinement are data-parallel via rayon when the
//! default `parallel` feature is on; disable it for a fully sequential
//! build.

pub mod batch;
pub mod certify;
pub mod corpus;
pub mod error;
mod intpoly;
pub mod oprl;
pub mod poly;
pub mod realroot;
pub mod rational;

pub use error::Error;
pub use poly::Polynomial;
pub use rational::Rat;

/// Map a pure function over a slice, in parallel when the `parallel`
/// feature is enabled. Result order matches input order either way.
#[cfg(feature = "parallel")]
pub(crate) fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}
