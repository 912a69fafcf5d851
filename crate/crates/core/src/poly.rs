//! Dense univariate polynomials over arbitrary-precision rationals.
//!
//! Coefficients are stored in ascending power order: `coeffs[k]` multiplies
//! x^k. The representation is canonical: the vector is empty for the zero
//! polynomial, and the last element is nonzero otherwise. All operations are
//! exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::intpoly;
use crate::rational::{rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    // ---- Constructors ----

    /// Construct from coefficients in ascending power order. Trailing zeros
    /// are stripped, so `new(vec![0, 0])` is the zero polynomial.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        let mut p = Polynomial { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from integer coefficients, ascending.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Polynomial { coeffs: vec![Rat::one()] }
    }

    /// The indeterminate x.
    pub fn x() -> Self {
        Polynomial { coeffs: vec![Rat::zero(), Rat::one()] }
    }

    /// A constant polynomial.
    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The monic product of linear factors (x - r) over the given roots.
    pub fn from_roots(roots: &[Rat]) -> Self {
        let mut p = Polynomial::one();
        for r in roots {
            p = &p * &Polynomial::new(vec![-r.clone(), Rat::one()]);
        }
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    // ---- Queries ----

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// Read-only access to the coefficient slice (ascending).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// True if the leading coefficient is 1.
    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    // ---- Evaluation and calculus ----

    /// Exact Horner evaluation.
    pub fn evaluate(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Approximate Horner evaluation in f64 over pre-converted coefficients.
    pub fn evaluate_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + crate::rational::to_f64(c);
        }
        acc
    }

    /// Formal derivative. The derivative of a constant is zero.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * rat(k as i64))
            .collect();
        Polynomial::new(coeffs)
    }

    /// k-fold derivative; `k > degree` yields zero.
    pub fn nth_derivative(&self, k: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..k {
            if p.is_zero() {
                break;
            }
            p = p.derivative();
        }
        p
    }

    // ---- Scaling ----

    /// Multiply every coefficient by a scalar.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divide by the leading coefficient. Zero stays zero.
    pub fn make_monic(&self) -> Self {
        match self.leading_coeff() {
            None => Polynomial::zero(),
            Some(lc) => {
                let inv = Rat::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    // ---- Division, gcd, square-freeness ----

    /// Euclidean division: `self = q * d + r` with `r` zero or
    /// `deg r < deg d`, all exact.
    pub fn div_rem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial), Error> {
        if d.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let lead = d.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = &rem[k] / &lead;
            for i in 0..dd {
                let t = &c * &d.coeffs[i];
                rem[k - dd + i] = &rem[k - dd + i] - &t;
            }
            rem[k] = Rat::zero();
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Monic greatest common divisor via a primitive remainder sequence.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial, Error> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        if self.is_zero() {
            return Ok(other.make_monic());
        }
        if other.is_zero() {
            return Ok(self.make_monic());
        }
        let mut a = intpoly::from_poly(self);
        let mut b = intpoly::from_poly(other);
        if intpoly::degree(&a) < intpoly::degree(&b) {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = intpoly::pseudo_rem(&a, &b);
            if intpoly::is_zero(&r) {
                return Ok(intpoly::to_poly(&b).make_monic());
            }
            a = b;
            b = intpoly::make_primitive(r);
        }
    }

    /// True iff the polynomial has no repeated factor, i.e. gcd(p, p') is
    /// constant. Requires degree >= 1.
    pub fn is_squarefree(&self) -> Result<bool, Error> {
        match self.degree() {
            Some(d) if d >= 1 => {}
            actual => return Err(Error::DegreeTooSmall { required: 1, actual }),
        }
        let g = self.gcd(&self.derivative())?;
        Ok(g.degree() == Some(0))
    }
}

// ---- Ring operators on references ----

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                coeffs[i + j] = &coeffs[i + j] + &t;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{abs}")?,
                1 => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    write!(f, "x")?;
                }
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    write!(f, "x^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn construction_strips_trailing_zeros() {
        // [-1, 0, 1] is x^2 - 1
        let p = Polynomial::from_i64(&[-1, 0, 1]);
        assert_eq!(p.degree(), Some(2));
        // [0, 0] is the zero polynomial
        assert!(Polynomial::from_i64(&[0, 0]).is_zero());
        // [1/2, -3] is -3x + 1/2
        let q = Polynomial::new(vec![ratio(1, 2), rat(-3)]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(q.leading_coeff(), Some(&rat(-3)));
    }

    #[test]
    fn derivative_examples() {
        let p = Polynomial::from_i64(&[-1, 0, 1]); // x^2 - 1
        assert_eq!(p.derivative(), Polynomial::from_i64(&[0, 2]));
        assert!(Polynomial::from_i64(&[5]).derivative().is_zero());
        let c = Polynomial::from_i64(&[0, -3, 0, 1]); // x^3 - 3x
        assert_eq!(c.derivative(), Polynomial::from_i64(&[-3, 0, 3]));
    }

    #[test]
    fn nth_derivative_examples() {
        let c = Polynomial::from_i64(&[0, -3, 0, 1]); // x^3 - 3x
        assert_eq!(c.nth_derivative(2), Polynomial::from_i64(&[0, 6]));
        assert_eq!(c.nth_derivative(0), c);
        assert!(Polynomial::from_i64(&[-1, 0, 1]).nth_derivative(3).is_zero());
    }

    #[test]
    fn evaluate_examples() {
        let p = Polynomial::from_i64(&[-1, 0, 1]);
        assert_eq!(p.evaluate(&rat(2)), rat(3));
        assert_eq!(Polynomial::zero().evaluate(&rat(7)), rat(0));
        assert_eq!(Polynomial::from_i64(&[2, 0, 2]).evaluate(&rat(0)), rat(2));
    }

    #[test]
    fn ring_operations() {
        let a = Polynomial::from_i64(&[-1, 1]); // x - 1
        let b = Polynomial::from_i64(&[1, 1]); // x + 1
        assert_eq!(&a * &b, Polynomial::from_i64(&[-1, 0, 1]));
        assert!((&a - &a).is_zero());
        let sq = Polynomial::from_i64(&[0, 0, 1]);
        assert_eq!(&sq + &Polynomial::one(), Polynomial::from_i64(&[1, 0, 1]));
    }

    #[test]
    fn div_rem_examples() {
        // (x^2 - 1) / x: quotient x, remainder -1
        let p = Polynomial::from_i64(&[-1, 0, 1]);
        let (q, r) = p.div_rem(&Polynomial::x()).unwrap();
        assert_eq!(q, Polynomial::x());
        assert_eq!(r, Polynomial::from_i64(&[-1]));

        // long division by hand: x^3 - 3x = x * (x^2 - 1) + (-2x)
        let c = Polynomial::from_i64(&[0, -3, 0, 1]);
        let (q, r) = c.div_rem(&p).unwrap();
        assert_eq!(q, Polynomial::x());
        assert_eq!(r, Polynomial::from_i64(&[0, -2]));

        // p / p = (1, 0)
        let (q, r) = p.div_rem(&p).unwrap();
        assert_eq!(q, Polynomial::one());
        assert!(r.is_zero());
    }

    #[test]
    fn div_rem_by_zero_fails() {
        let p = Polynomial::from_i64(&[1, 1]);
        assert_eq!(p.div_rem(&Polynomial::zero()), Err(Error::DivisionByZeroPolynomial));
    }

    #[test]
    fn gcd_examples() {
        let p = Polynomial::from_i64(&[-1, 0, 1]); // x^2 - 1
        let l = Polynomial::from_i64(&[-1, 1]); // x - 1
        assert_eq!(p.gcd(&l).unwrap(), l);

        let q = Polynomial::from_i64(&[1, 0, 1]); // x^2 + 1
        assert_eq!(q.gcd(&Polynomial::x()).unwrap(), Polynomial::one());

        // (x-1)^2 (x+1) = x^3 - x^2 - x + 1; gcd with its derivative is x - 1,
        // found by running Euclid on (x^3 - x^2 - x + 1, 3x^2 - 2x - 1) by hand
        let c = Polynomial::from_i64(&[1, -1, -1, 1]);
        assert_eq!(c.gcd(&c.derivative()).unwrap(), l);

        assert_eq!(
            Polynomial::zero().gcd(&Polynomial::zero()),
            Err(Error::BothZero)
        );
    }

    #[test]
    fn squarefree_examples() {
        assert!(Polynomial::from_i64(&[-1, 0, 1]).is_squarefree().unwrap());
        assert!(!Polynomial::from_i64(&[1, -1, -1, 1]).is_squarefree().unwrap());
        assert!(Polynomial::from_i64(&[1, 0, 1]).is_squarefree().unwrap());
        assert_eq!(
            Polynomial::from_i64(&[3]).is_squarefree(),
            Err(Error::DegreeTooSmall { required: 1, actual: Some(0) })
        );
    }

    #[test]
    fn from_roots_builds_monic_product() {
        let p = Polynomial::from_roots(&[rat(1), rat(-1)]);
        assert_eq!(p, Polynomial::from_i64(&[-1, 0, 1]));
        assert!(p.is_monic());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Polynomial::from_i64(&[9, 0, 3]).to_string(), "3*x^2 + 9");
        assert_eq!(Polynomial::from_i64(&[1, -1]).to_string(), "-x + 1");
        assert_eq!(
            Polynomial::new(vec![ratio(1, 3), ratio(1, 2)]).to_string(),
            "1/2*x + 1/3"
        );
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
