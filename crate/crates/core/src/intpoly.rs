//! Primitive-integer polynomial helpers.
//!
//! Remainder sequences (gcd, Sturm chains) run over integer coefficient
//! vectors with the content divided out after every step. Each entry is a
//! positive-rational multiple of the exact rational remainder, so sign
//! structure is preserved while coefficient growth stays bounded.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Polynomial;
use crate::rational::Rat;

/// Integer polynomial, ascending powers, trailing zeros stripped.
pub(crate) type IntPoly = Vec<BigInt>;

pub(crate) fn normalize(v: &mut IntPoly) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

pub(crate) fn is_zero(v: &IntPoly) -> bool {
    v.is_empty()
}

pub(crate) fn degree(v: &IntPoly) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

/// Scale a rational polynomial by the positive rational that makes it a
/// primitive integer polynomial. Signs of all coefficients are unchanged.
pub(crate) fn from_poly(p: &Polynomial) -> IntPoly {
    if p.is_zero() {
        return Vec::new();
    }
    let mut denom_lcm = BigInt::one();
    for c in p.coeffs() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    make_primitive(ints)
}

pub(crate) fn to_poly(v: &IntPoly) -> Polynomial {
    Polynomial::new(v.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

/// Divide out the content (positive gcd of all coefficients).
pub(crate) fn make_primitive(mut v: IntPoly) -> IntPoly {
    normalize(&mut v);
    if v.is_empty() {
        return v;
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
        if g.is_one() {
            return v;
        }
    }
    for c in &mut v {
        *c = &*c / &g;
    }
    v
}

pub(crate) fn neg(v: &IntPoly) -> IntPoly {
    v.iter().map(|c| -c).collect()
}

pub(crate) fn derivative(v: &IntPoly) -> IntPoly {
    if v.len() <= 1 {
        return Vec::new();
    }
    v.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect()
}

/// Remainder of `a` by `b` up to a positive integer multiple: every
/// reduction step scales the running remainder by |lc(b)| (never by a
/// negative), so the result has the sign structure of the exact rational
/// remainder. Requires `b` nonzero.
pub(crate) fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = degree(b).expect("pseudo_rem: zero divisor");
    let lead = &b[db];
    let lead_abs = lead.abs();
    let lead_sign = if lead.is_negative() { -1 } else { 1 };
    let mut r = a.clone();
    normalize(&mut r);
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = if lead_sign < 0 { -r[dr].clone() } else { r[dr].clone() };
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * &lead_abs;
        }
        for i in 0..=db {
            let t = &factor * &b[i];
            r[shift + i] = &r[shift + i] - &t;
        }
        debug_assert!(r[dr].is_zero());
        normalize(&mut r);
    }
    r
}

/// Sign of the value at a rational point, computed entirely over integers:
/// sign(p(n/d)) = sign(sum c_k n^k d^(deg-k)) since d > 0.
pub(crate) fn sign_at(v: &IntPoly, x: &Rat) -> i8 {
    if v.is_empty() {
        return 0;
    }
    let n = x.numer();
    let d = x.denom();
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in v.iter().rev() {
        acc = acc * n + c * &dpow;
        dpow *= d;
    }
    sign_of(&acc)
}

/// Sign at +infinity (the leading coefficient's sign).
pub(crate) fn sign_at_pos_inf(v: &IntPoly) -> i8 {
    v.last().map_or(0, sign_of)
}

/// Sign at -infinity (leading sign flipped for odd degree).
pub(crate) fn sign_at_neg_inf(v: &IntPoly) -> i8 {
    match degree(v) {
        None => 0,
        Some(d) => {
            let s = sign_of(v.last().unwrap());
            if d % 2 == 1 {
                -s
            } else {
                s
            }
        }
    }
}

fn sign_of(c: &BigInt) -> i8 {
    if c.is_zero() {
        0
    } else if c.is_negative() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn primitive_scaling_preserves_signs() {
        // 3/2 x^2 - 9/4 -> primitive 2x^2 - 3
        let p = Polynomial::new(vec![ratio(-9, 4), rat(0), ratio(3, 2)]);
        let v = from_poly(&p);
        assert_eq!(v, vec![BigInt::from(-3), BigInt::from(0), BigInt::from(2)]);
    }

    #[test]
    fn pseudo_rem_matches_rational_remainder_sign() {
        // rem((x^2 + 1) / -2x) = 1; negative-lead divisor must not flip it
        let a = vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)];
        let b = vec![BigInt::from(0), BigInt::from(-2)];
        let r = pseudo_rem(&a, &b);
        assert_eq!(r, vec![BigInt::from(2)]); // positive multiple of 1
    }

    #[test]
    fn sign_at_rational_points() {
        // x^2 - 2 at 3/2 is 1/4 > 0, at 1 is -1 < 0
        let v = vec![BigInt::from(-2), BigInt::from(0), BigInt::from(1)];
        assert_eq!(sign_at(&v, &ratio(3, 2)), 1);
        assert_eq!(sign_at(&v, &rat(1)), -1);
        assert_eq!(sign_at_pos_inf(&v), 1);
        assert_eq!(sign_at_neg_inf(&v), 1);
        let odd = vec![BigInt::from(0), BigInt::from(1)];
        assert_eq!(sign_at_neg_inf(&odd), -1);
    }
}
