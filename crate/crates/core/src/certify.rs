//! Real-and-distinctness decisions.
//!
//! Two independent routes decide whether every zero of a polynomial of
//! degree n >= 2 is real and simple:
//!
//! * the derivative-Wronskian criterion: for each level j in 1..=n-1, the
//!   polynomial Q_j = (p')^2 - p p'' with p = P^(n-j-1) must be strictly
//!   positive on all of R;
//! * the classical Sturm oracle: the number of distinct real roots equals
//!   the degree.
//!
//! The two must always agree; [`check_both`] treats a mismatch as an
//! internal bug, never as an answer.

use num_traits::One;

use crate::error::Error;
use crate::poly::Polynomial;
use crate::realroot::{
    self, count_distinct_real_roots, is_strictly_positive_on_r, ExtendedPoint,
    PositivityCertificate,
};
use crate::rational::{rat, Rat};

/// One level of the criterion: the level polynomial p = P^(n-j-1) of degree
/// j+1, its criterion polynomial Q_j = (p')^2 - p p'' of degree 2j, and the
/// positivity certificate for Q_j.
#[derive(Clone, Debug)]
pub struct CriterionLevel {
    pub j: usize,
    pub level_poly: Polynomial,
    pub q: Polynomial,
    pub certificate: PositivityCertificate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Criterion,
    SturmOracle,
    Both,
}

/// Outcome of a real-and-distinctness decision, with whatever evidence the
/// chosen method produced.
#[derive(Clone, Debug)]
pub struct RealRootednessVerdict {
    pub all_real_and_distinct: bool,
    pub method: Method,
    /// Criterion path: levels in increasing j. On failure the failing level
    /// is last and carries its witness; on success all n-1 levels are here.
    pub levels: Vec<CriterionLevel>,
    /// Oracle path: distinct real roots over all of R.
    pub oracle_root_count: Option<usize>,
    /// Oracle path: redundant square-freeness cross-check (the root count
    /// already counts distinct roots).
    pub squarefree: Option<bool>,
    /// Always false in a returned verdict; a true disagreement surfaces as
    /// [`Error::InternalDisagreement`] instead.
    pub disagreement: bool,
}

fn require_degree_at_least_2(p: &Polynomial) -> Result<usize, Error> {
    match p.degree() {
        Some(n) if n >= 2 => Ok(n),
        actual => Err(Error::DegreeTooSmall { required: 2, actual }),
    }
}

/// The pair (P^(n-j-1), its derivative) for level j: degrees j+1 and j.
pub fn derived_pair(p: &Polynomial, j: usize) -> Result<(Polynomial, Polynomial), Error> {
    let n = require_degree_at_least_2(p)?;
    if j < 1 || j > n - 1 {
        return Err(Error::LevelOutOfRange { j, max: n - 1 });
    }
    let p_next = p.nth_derivative(n - j - 1);
    let p_deriv = p_next.derivative();
    Ok((p_next, p_deriv))
}

/// The criterion polynomial Q_j = (p')^2 - p p'' with p = P^(n-j-1).
/// Exact; degree 2j with leading coefficient (j+1) lc(p)^2 > 0.
pub fn criterion_poly(p: &Polynomial, j: usize) -> Result<Polynomial, Error> {
    let (level, d1) = derived_pair(p, j)?;
    let d2 = d1.derivative();
    Ok(&(&d1 * &d1) - &(&level * &d2))
}

/// The Wronskian W(p, q) = p' q - q' p, exact. For a level pair
/// (p, p') this equals the criterion polynomial of that level.
pub fn wronskian(p: &Polynomial, q: &Polynomial) -> Polynomial {
    &(&p.derivative() * q) - &(&q.derivative() * p)
}

/// Decide by the derivative-Wronskian criterion: all zeros of P are real
/// and distinct iff every Q_j is strictly positive on R. Levels run in
/// increasing j (cheapest first) and stop at the first failure, which is
/// retained together with its witness.
pub fn check_criterion(p: &Polynomial) -> Result<RealRootednessVerdict, Error> {
    let n = require_degree_at_least_2(p)?;
    // Derivative ladder: derivs[k] = P^(k).
    let mut derivs = Vec::with_capacity(n + 1);
    derivs.push(p.clone());
    for k in 1..=n {
        let next = derivs[k - 1].derivative();
        derivs.push(next);
    }
    let mut levels = Vec::with_capacity(n - 1);
    let mut all = true;
    for j in 1..=n - 1 {
        let level_poly = derivs[n - j - 1].clone();
        let d1 = &derivs[n - j];
        let d2 = &derivs[n - j + 1];
        let q = &(d1 * d1) - &(&level_poly * d2);
        let certificate = is_strictly_positive_on_r(&q);
        let positive = certificate.is_positive();
        levels.push(CriterionLevel { j, level_poly, q, certificate });
        if !positive {
            all = false;
            break;
        }
    }
    Ok(RealRootednessVerdict {
        all_real_and_distinct: all,
        method: Method::Criterion,
        levels,
        oracle_root_count: None,
        squarefree: None,
        disagreement: false,
    })
}

/// Decide by the classical oracle: true iff the Sturm count of distinct
/// real roots equals the degree.
pub fn check_sturm_oracle(p: &Polynomial) -> Result<RealRootednessVerdict, Error> {
    let n = require_degree_at_least_2(p)?;
    let count = count_distinct_real_roots(p, &ExtendedPoint::NegInf, &ExtendedPoint::PosInf)?;
    let squarefree = p.is_squarefree()?;
    Ok(RealRootednessVerdict {
        all_real_and_distinct: count == n,
        method: Method::SturmOracle,
        levels: Vec::new(),
        oracle_root_count: Some(count),
        squarefree: Some(squarefree),
        disagreement: false,
    })
}

/// Run both methods and merge their evidence. The two are provably
/// equivalent, so a mismatch is an implementation bug and comes back as
/// [`Error::InternalDisagreement`].
pub fn check_both(p: &Polynomial) -> Result<RealRootednessVerdict, Error> {
    let criterion = check_criterion(p)?;
    let oracle = check_sturm_oracle(p)?;
    if criterion.all_real_and_distinct != oracle.all_real_and_distinct {
        return Err(Error::InternalDisagreement {
            criterion: criterion.all_real_and_distinct,
            sturm: oracle.all_real_and_distinct,
        });
    }
    Ok(RealRootednessVerdict {
        all_real_and_distinct: criterion.all_real_and_distinct,
        method: Method::Both,
        levels: criterion.levels,
        oracle_root_count: oracle.oracle_root_count,
        squarefree: oracle.squarefree,
        disagreement: false,
    })
}

/// True iff the zeros of `q` strictly interlace the zeros of `p`: exactly
/// one zero of `q` between consecutive zeros of `p`, and none outside.
/// Requires deg p = deg q + 1 and both real-rooted with distinct zeros.
///
/// Decided exactly: any shared zero (nonconstant gcd) refutes strictness
/// immediately; otherwise both root sets are refined until all interval
/// closures are pairwise disjoint, and the interleaving order is read off.
pub fn interlace_strictly(p: &Polynomial, q: &Polynomial) -> Result<bool, Error> {
    let dp = p.degree().ok_or_else(|| {
        Error::PreconditionViolated("interlace_strictly: p is the zero polynomial".into())
    })?;
    let dq = q.degree().ok_or_else(|| {
        Error::PreconditionViolated("interlace_strictly: q is the zero polynomial".into())
    })?;
    if dp != dq + 1 || dp < 1 {
        return Err(Error::PreconditionViolated(format!(
            "interlace_strictly: need deg p = deg q + 1 >= 1, got deg p = {dp}, deg q = {dq}"
        )));
    }
    let p_count = count_distinct_real_roots(p, &ExtendedPoint::NegInf, &ExtendedPoint::PosInf)?;
    if p_count != dp {
        return Err(Error::PreconditionViolated(
            "interlace_strictly: p is not real-rooted with distinct zeros".into(),
        ));
    }
    if dq == 0 {
        // A nonzero constant has no zeros; one zero of p, nothing to separate.
        return Ok(true);
    }
    let q_count = count_distinct_real_roots(q, &ExtendedPoint::NegInf, &ExtendedPoint::PosInf)?;
    if q_count != dq {
        return Err(Error::PreconditionViolated(
            "interlace_strictly: q is not real-rooted with distinct zeros".into(),
        ));
    }
    if p.gcd(q)?.degree() != Some(0) {
        // Shared zero: interlacing cannot be strict.
        return Ok(false);
    }

    #[derive(Clone, Copy, PartialEq)]
    enum Owner {
        P,
        Q,
    }
    let mut tagged: Vec<(Owner, realroot::IsolatingInterval)> = Vec::new();
    for iv in realroot::isolate_real_roots(p) {
        tagged.push((Owner::P, iv));
    }
    for iv in realroot::isolate_real_roots(q) {
        tagged.push((Owner::Q, iv));
    }
    // Halve overlapping intervals until every pair of closures is disjoint.
    // Terminates because all roots across both sets are distinct reals.
    loop {
        tagged.sort_by(|a, b| a.1.lo.cmp(&b.1.lo));
        let mut overlap = None;
        for i in 1..tagged.len() {
            if tagged[i].1.lo <= tagged[i - 1].1.hi {
                overlap = Some(i);
                break;
            }
        }
        match overlap {
            None => break,
            Some(i) => {
                for k in [i - 1, i] {
                    let owner = tagged[k].0;
                    let target = if owner == Owner::P { p } else { q };
                    let eps = tagged[k].1.width() / rat(2);
                    tagged[k].1 = realroot::refine_interval(target, &tagged[k].1, &eps);
                }
            }
        }
    }
    // Strict interlacing of dp and dp-1 roots is exactly the alternation
    // P, Q, P, ..., Q, P.
    let expected_q = |i: usize| i % 2 == 1;
    Ok(tagged
        .iter()
        .enumerate()
        .all(|(i, (owner, _))| (*owner == Owner::Q) == expected_q(i)))
}

/// Test helper shared by the property suites: P(x + t) via Horner over
/// polynomial arithmetic.
pub fn shift_argument(p: &Polynomial, t: &Rat) -> Polynomial {
    let x_plus_t = Polynomial::new(vec![t.clone(), Rat::one()]);
    let mut acc = Polynomial::zero();
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * &x_plus_t) + &Polynomial::constant(c.clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realroot::Witness;
    use num_traits::Zero;

    fn cubic() -> Polynomial {
        Polynomial::from_i64(&[0, -3, 0, 1]) // x^3 - 3x
    }

    #[test]
    fn derived_pair_examples() {
        let c = cubic();
        // j = 2: n-j-1 = 0, pair is (P, P')
        let (a, b) = derived_pair(&c, 2).unwrap();
        assert_eq!(a, c);
        assert_eq!(b, Polynomial::from_i64(&[-3, 0, 3]));
        // j = 1: (P', P'')
        let (a, b) = derived_pair(&c, 1).unwrap();
        assert_eq!(a, Polynomial::from_i64(&[-3, 0, 3]));
        assert_eq!(b, Polynomial::from_i64(&[0, 6]));
        // n = 2 base case
        let p = Polynomial::from_i64(&[-1, 0, 1]);
        let (a, b) = derived_pair(&p, 1).unwrap();
        assert_eq!(a, p);
        assert_eq!(b, Polynomial::from_i64(&[0, 2]));
    }

    #[test]
    fn derived_pair_range_errors() {
        assert_eq!(
            derived_pair(&Polynomial::from_i64(&[1, 1]), 1),
            Err(Error::DegreeTooSmall { required: 2, actual: Some(1) })
        );
        assert_eq!(
            derived_pair(&cubic(), 3),
            Err(Error::LevelOutOfRange { j: 3, max: 2 })
        );
        assert_eq!(
            derived_pair(&cubic(), 0),
            Err(Error::LevelOutOfRange { j: 0, max: 2 })
        );
    }

    #[test]
    fn criterion_poly_examples() {
        // expansions done symbolically by hand:
        // (2x)^2 - (x^2-1)*2 = 2x^2 + 2
        assert_eq!(
            criterion_poly(&Polynomial::from_i64(&[-1, 0, 1]), 1).unwrap(),
            Polynomial::from_i64(&[2, 0, 2])
        );
        // (3x^2-3)^2 - (x^3-3x)(6x) = 3x^4 + 9
        assert_eq!(
            criterion_poly(&cubic(), 2).unwrap(),
            Polynomial::from_i64(&[9, 0, 0, 0, 3])
        );
        // (6x)^2 - (3x^2-3)*6 = 18x^2 + 18
        assert_eq!(
            criterion_poly(&cubic(), 1).unwrap(),
            Polynomial::from_i64(&[18, 0, 18])
        );
    }

    #[test]
    fn wronskian_examples() {
        // W(x^2-1, 2x) = 2x*2x - 2*(x^2-1) = 2x^2 + 2
        let p = Polynomial::from_i64(&[-1, 0, 1]);
        let d = Polynomial::from_i64(&[0, 2]);
        assert_eq!(wronskian(&p, &d), Polynomial::from_i64(&[2, 0, 2]));
        assert!(wronskian(&p, &p).is_zero());
        assert_eq!(wronskian(&Polynomial::x(), &Polynomial::one()), Polynomial::one());
    }

    #[test]
    fn check_criterion_examples() {
        // x^2 + 1: level 1 fails with Q_1 = 2x^2 - 2
        let v = check_criterion(&Polynomial::from_i64(&[1, 0, 1])).unwrap();
        assert!(!v.all_real_and_distinct);
        assert_eq!(v.levels.len(), 1);
        assert_eq!(v.levels[0].q, Polynomial::from_i64(&[-2, 0, 2]));
        match v.levels[0].certificate.witness.as_ref().unwrap() {
            Witness::Point { x, value } => {
                assert_eq!(&v.levels[0].q.evaluate(x), value);
                assert!(*value <= Rat::zero());
            }
            Witness::Interval(_) => {}
        }

        // x^3 - 3x: both levels positive
        let v = check_criterion(&cubic()).unwrap();
        assert!(v.all_real_and_distinct);
        assert_eq!(v.levels.len(), 2);
        assert_eq!(v.levels[0].q, Polynomial::from_i64(&[18, 0, 18]));
        assert_eq!(v.levels[1].q, Polynomial::from_i64(&[9, 0, 0, 0, 3]));

        // (x-1)^2 (x+1): P(1) = P'(1) = 0 forces Q(1) = 0 at the failing level
        let repeated = Polynomial::from_i64(&[1, -1, -1, 1]);
        let v = check_criterion(&repeated).unwrap();
        assert!(!v.all_real_and_distinct);
        let failing = v.levels.last().unwrap();
        assert_eq!(failing.q.evaluate(&rat(1)), rat(0));
    }

    #[test]
    fn check_oracle_examples() {
        assert!(check_sturm_oracle(&cubic()).unwrap().all_real_and_distinct);
        let v = check_sturm_oracle(&Polynomial::from_i64(&[1, -1, -1, 1])).unwrap();
        assert!(!v.all_real_and_distinct);
        assert_eq!(v.oracle_root_count, Some(2));
        assert_eq!(v.squarefree, Some(false));
        let v = check_sturm_oracle(&Polynomial::from_i64(&[1, 0, 1])).unwrap();
        assert!(!v.all_real_and_distinct);
        assert_eq!(v.oracle_root_count, Some(0));
    }

    #[test]
    fn check_both_examples() {
        let v = check_both(&Polynomial::from_i64(&[-1, 0, 1])).unwrap();
        assert!(v.all_real_and_distinct);
        assert!(!v.disagreement);

        // (x-1)(x-2)(x-3)(x-4)(x-5), expanded by elementary symmetric sums:
        // e = (15, 85, 225, 274, 120)
        let p = Polynomial::from_roots(&[rat(1), rat(2), rat(3), rat(4), rat(5)]);
        assert_eq!(p, Polynomial::from_i64(&[-120, 274, -225, 85, -15, 1]));
        assert!(check_both(&p).unwrap().all_real_and_distinct);

        let v = check_both(&Polynomial::from_i64(&[1, 0, 0, 0, 1])).unwrap();
        assert!(!v.all_real_and_distinct);
    }

    #[test]
    fn check_rejects_low_degree() {
        assert!(matches!(
            check_both(&Polynomial::from_i64(&[1, 1])),
            Err(Error::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn interlace_examples() {
        let p = Polynomial::from_i64(&[-1, 0, 1]);
        assert!(interlace_strictly(&p, &Polynomial::x()).unwrap());
        assert!(interlace_strictly(&cubic(), &p).unwrap());
        // root 2 lies outside (-1, 1)
        let outside = Polynomial::from_i64(&[-2, 1]);
        assert!(!interlace_strictly(&p, &outside).unwrap());
    }

    #[test]
    fn interlace_rejects_bad_inputs() {
        let p = Polynomial::from_i64(&[1, 0, 1]); // not real-rooted
        assert!(matches!(
            interlace_strictly(&p, &Polynomial::x()),
            Err(Error::PreconditionViolated(_))
        ));
        let p = Polynomial::from_i64(&[-1, 0, 1]);
        assert!(matches!(
            interlace_strictly(&p, &p),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn interlace_shared_root_is_false() {
        // p = (x-1)(x+1), q = x - 1: shared zero at 1
        let p = Polynomial::from_i64(&[-1, 0, 1]);
        let q = Polynomial::from_i64(&[-1, 1]);
        assert!(!interlace_strictly(&p, &q).unwrap());
    }

    #[test]
    fn shift_argument_is_exact() {
        // (x+1)^2 - 1 shifted from x^2 - 1 by t = 1
        let p = Polynomial::from_i64(&[-1, 0, 1]);
        assert_eq!(shift_argument(&p, &rat(1)), Polynomial::from_i64(&[0, 2, 1]));
    }
}
