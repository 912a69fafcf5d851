//! Scalar helpers over arbitrary-precision rationals.
//!
//! Every coefficient, evaluation point, and recurrence coefficient in this
//! crate is a `Rat` in canonical form: fully reduced, positive denominator.
//! `num_rational::BigRational` maintains that invariant on construction and
//! through arithmetic.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::ToPrimitive;

/// Exact scalar type used throughout the crate.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The rational n/d. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of a rational as -1, 0, or +1.
pub fn sign(x: &Rat) -> i8 {
    match x.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Nearest-effort conversion to `f64`, robust to numerators and denominators
/// far outside the `f64` range (both huge -> scale down before dividing).
pub fn to_f64(x: &Rat) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let nbits = x.numer().bits();
    let dbits = x.denom().bits();
    let shift = nbits.max(dbits).saturating_sub(512);
    let n = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
    let d = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
    n / d
}

/// 10^-k as an exact rational.
pub fn pow10_neg(k: u32) -> Rat {
    Rat::new(BigInt::from(1), BigInt::from(10u32).pow(k))
}
