//! Sturm-sequence machinery: exact counting and isolation of distinct real
//! roots, root bounds, and the strict-global-positivity decision.
//!
//! The canonical chain is s0 = p, s1 = p', s_{k+1} = -rem(s_{k-1}, s_k),
//! ending at the last nonzero entry, with every entry reduced to a primitive
//! integer polynomial (a positive rescaling, which never changes sign
//! structure). The gcd tail is kept, so variation differences count
//! *distinct* roots even for non-squarefree input.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::intpoly::{self, IntPoly};
use crate::poly::Polynomial;
use crate::rational::{rat, sign, Rat};

/// A rational point or one of the symbols -infinity / +infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtendedPoint {
    NegInf,
    Finite(Rat),
    PosInf,
}

impl PartialOrd for ExtendedPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedPoint::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtendedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedPoint::NegInf => write!(f, "-inf"),
            ExtendedPoint::Finite(x) => write!(f, "{x}"),
            ExtendedPoint::PosInf => write!(f, "+inf"),
        }
    }
}

/// An interval (lo, hi) with rational non-root endpoints containing exactly
/// `count` distinct real roots of its target polynomial (1 for isolating
/// intervals).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rat,
    pub hi: Rat,
    pub count: usize,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo < x && x < &self.hi
    }
}

/// The canonical Sturm chain of a nonconstant polynomial.
pub struct SturmSequence {
    chain: Vec<IntPoly>,
}

impl SturmSequence {
    /// Build the chain. Fails on constant or zero input.
    pub fn new(p: &Polynomial) -> Result<Self, Error> {
        if p.degree().is_none_or(|d| d < 1) {
            return Err(Error::ZeroOrConstantInput);
        }
        let s0 = intpoly::from_poly(p);
        let s1 = intpoly::make_primitive(intpoly::derivative(&s0));
        let mut chain = vec![s0, s1];
        loop {
            let n = chain.len();
            let r = intpoly::pseudo_rem(&chain[n - 2], &chain[n - 1]);
            if intpoly::is_zero(&r) {
                break;
            }
            chain.push(intpoly::make_primitive(intpoly::neg(&r)));
        }
        Ok(SturmSequence { chain })
    }

    /// The chain as rational polynomials (each entry a positive rescaling of
    /// the textbook chain entry).
    pub fn chain(&self) -> Vec<Polynomial> {
        self.chain.iter().map(intpoly::to_poly).collect()
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn signs_at(&self, x: &ExtendedPoint) -> Vec<i8> {
        self.chain
            .iter()
            .map(|v| match x {
                ExtendedPoint::NegInf => intpoly::sign_at_neg_inf(v),
                ExtendedPoint::Finite(q) => intpoly::sign_at(v, q),
                ExtendedPoint::PosInf => intpoly::sign_at_pos_inf(v),
            })
            .collect()
    }

    /// Number of sign changes in the chain's values at `x`, zeros skipped.
    pub fn variations_at(&self, x: &ExtendedPoint) -> usize {
        let mut changes = 0;
        let mut prev: i8 = 0;
        for s in self.signs_at(x) {
            if s == 0 {
                continue;
            }
            if prev != 0 && s != prev {
                changes += 1;
            }
            prev = s;
        }
        changes
    }

    /// Sign of the chain's first entry (the target polynomial, up to a
    /// positive factor) at a finite point.
    fn target_sign(&self, x: &Rat) -> i8 {
        intpoly::sign_at(&self.chain[0], x)
    }

    /// Distinct real roots of the target polynomial in (lo, hi]. Finite
    /// endpoints must not be roots.
    pub fn count_in(&self, lo: &ExtendedPoint, hi: &ExtendedPoint) -> Result<usize, Error> {
        assert!(lo < hi, "count_in: empty interval");
        for e in [lo, hi] {
            if let ExtendedPoint::Finite(x) = e {
                if self.target_sign(x) == 0 {
                    return Err(Error::EndpointIsRoot { at: x.clone() });
                }
            }
        }
        let vlo = self.variations_at(lo);
        let vhi = self.variations_at(hi);
        debug_assert!(vlo >= vhi);
        Ok(vlo - vhi)
    }
}

/// Operation form of [`SturmSequence::new`].
pub fn sturm_sequence(p: &Polynomial) -> Result<SturmSequence, Error> {
    SturmSequence::new(p)
}

/// Operation form of [`SturmSequence::variations_at`].
pub fn sign_variations(s: &SturmSequence, x: &ExtendedPoint) -> usize {
    s.variations_at(x)
}

/// Number of distinct real roots of `p` in (lo, hi], by Sturm's theorem.
/// Counts distinct roots even for non-squarefree `p`.
pub fn count_distinct_real_roots(
    p: &Polynomial,
    lo: &ExtendedPoint,
    hi: &ExtendedPoint,
) -> Result<usize, Error> {
    SturmSequence::new(p)?.count_in(lo, hi)
}

/// Cauchy bound B = 1 + max |c_k| / |c_n| over k < n. All real roots of `p`
/// lie strictly inside (-B, B).
pub fn cauchy_bound(p: &Polynomial) -> Result<Rat, Error> {
    let n = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::ZeroOrConstantInput),
    };
    let lc = p.leading_coeff().unwrap().abs();
    let mut max = Rat::zero();
    for c in &p.coeffs()[..n] {
        let a = c.abs();
        if a > max {
            max = a;
        }
    }
    Ok(Rat::one() + max / lc)
}

/// A point strictly between `lo` and `hi` that is not a root of the chain's
/// target, preferring the midpoint and dodging roots by shrinking rational
/// shifts.
fn nonroot_split_point(chain: &SturmSequence, lo: &Rat, hi: &Rat) -> Rat {
    let mid = (lo + hi) / rat(2);
    if chain.target_sign(&mid) != 0 {
        return mid;
    }
    let width = hi - lo;
    let mut shift = &width / rat(8);
    loop {
        let cand = &mid + &shift;
        if chain.target_sign(&cand) != 0 {
            return cand;
        }
        shift /= rat(2);
    }
}

/// Pairwise-disjoint open intervals with rational non-root endpoints, each
/// containing exactly one distinct real root of `p`, sorted ascending; their
/// closures are also pairwise disjoint. Empty when `p` has no real roots or
/// is constant.
pub fn isolate_real_roots(p: &Polynomial) -> Vec<IsolatingInterval> {
    if p.degree().is_none_or(|d| d < 1) {
        return Vec::new();
    }
    let chain = SturmSequence::new(p).expect("degree checked");
    let bound = cauchy_bound(p).expect("degree checked");
    let lo = -bound.clone();
    let hi = bound;
    let vlo = chain.variations_at(&ExtendedPoint::Finite(lo.clone()));
    let vhi = chain.variations_at(&ExtendedPoint::Finite(hi.clone()));
    let mut out = Vec::new();
    split_roots(&chain, lo, vlo, hi, vhi, &mut out);

    // Nudge shared endpoints apart so interval closures are disjoint.
    for i in 1..out.len() {
        if out[i].lo == out[i - 1].hi {
            let m = out[i].lo.clone();
            let hi_i = out[i].hi.clone();
            let mut step = (&hi_i - &m) / rat(4);
            loop {
                let c = &m + &step;
                if chain.target_sign(&c) != 0 {
                    let n = chain
                        .count_in(
                            &ExtendedPoint::Finite(m.clone()),
                            &ExtendedPoint::Finite(c.clone()),
                        )
                        .expect("endpoints are non-roots");
                    if n == 0 {
                        out[i].lo = c;
                        break;
                    }
                }
                step /= rat(2);
            }
        }
    }
    out
}

fn split_roots(
    chain: &SturmSequence,
    lo: Rat,
    vlo: usize,
    hi: Rat,
    vhi: usize,
    out: &mut Vec<IsolatingInterval>,
) {
    let n = vlo - vhi;
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(IsolatingInterval { lo, hi, count: 1 });
        return;
    }
    let mid = nonroot_split_point(chain, &lo, &hi);
    let vmid = chain.variations_at(&ExtendedPoint::Finite(mid.clone()));
    split_roots(chain, lo, vlo, mid.clone(), vmid, out);
    split_roots(chain, mid, vmid, hi, vhi, out);
}

/// Shrink an isolating interval of `p` to width < `eps` around the same
/// root. Bisection uses plain sign tests when the root changes sign, and
/// Sturm counts otherwise (even-multiplicity roots of non-squarefree `p`).
pub fn refine_interval(p: &Polynomial, iv: &IsolatingInterval, eps: &Rat) -> IsolatingInterval {
    assert!(eps > &Rat::zero(), "refine_interval: eps must be positive");
    assert_eq!(iv.count, 1, "refine_interval: not an isolating interval");
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let chain = SturmSequence::new(p).expect("isolating interval implies degree >= 1");
    let slo = chain.target_sign(&lo);
    let shi = chain.target_sign(&hi);
    debug_assert!(slo != 0 && shi != 0, "interval endpoints must not be roots");

    if slo * shi < 0 {
        // Simple sign-change bisection.
        while &(&hi - &lo) >= eps {
            let mid = (&lo + &hi) / rat(2);
            let sm = chain.target_sign(&mid);
            if sm == 0 {
                return pinpoint_rational_root(&chain, mid, &lo, &hi, eps);
            }
            if sm == slo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    } else {
        // Same sign at both ends (even-multiplicity root): bisect by count.
        let mut vlo = chain.variations_at(&ExtendedPoint::Finite(lo.clone()));
        let vhi = chain.variations_at(&ExtendedPoint::Finite(hi.clone()));
        debug_assert_eq!(vlo - vhi, 1);
        while &(&hi - &lo) >= eps {
            let mid = (&lo + &hi) / rat(2);
            if chain.target_sign(&mid) == 0 {
                return pinpoint_rational_root(&chain, mid, &lo, &hi, eps);
            }
            let vmid = chain.variations_at(&ExtendedPoint::Finite(mid.clone()));
            if vlo - vmid == 1 {
                hi = mid;
            } else {
                lo = mid;
                vlo = vmid;
            }
        }
    }
    IsolatingInterval { lo, hi, count: 1 }
}

/// The bisection point landed exactly on the (unique, rational) root:
/// return a width < eps interval centered there with non-root endpoints.
fn pinpoint_rational_root(
    chain: &SturmSequence,
    root: Rat,
    lo: &Rat,
    hi: &Rat,
    eps: &Rat,
) -> IsolatingInterval {
    let quarter = {
        let w = hi - lo;
        let e = eps.clone();
        if w < e {
            w
        } else {
            e
        }
    } / rat(4);
    let mut delta = quarter;
    loop {
        let a = &root - &delta;
        let b = &root + &delta;
        if chain.target_sign(&a) != 0 && chain.target_sign(&b) != 0 {
            return IsolatingInterval { lo: a, hi: b, count: 1 };
        }
        delta /= rat(2);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Positivity {
    PositiveOnR,
    NotPositive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PositivityReason {
    EvenDegreePositiveLeadNoRealRoots,
    PositiveConstant,
    OddDegree,
    NegativeLead,
    HasRealZero,
    NonpositiveConstant,
}

/// Checkable evidence that a polynomial is somewhere nonpositive: an exact
/// point with value <= 0, or an interval Sturm-certified to contain a real
/// zero.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    Point { x: Rat, value: Rat },
    Interval(IsolatingInterval),
}

/// Decision that a polynomial is strictly positive on all of R, or evidence
/// that it is not.
#[derive(Clone, Debug, PartialEq)]
pub struct PositivityCertificate {
    pub verdict: Positivity,
    pub reason: PositivityReason,
    pub witness: Option<Witness>,
    pub sturm_root_count: usize,
}

impl PositivityCertificate {
    pub fn is_positive(&self) -> bool {
        self.verdict == Positivity::PositiveOnR
    }

    fn not_positive(reason: PositivityReason, witness: Witness, roots: usize) -> Self {
        PositivityCertificate {
            verdict: Positivity::NotPositive,
            reason,
            witness: Some(witness),
            sturm_root_count: roots,
        }
    }
}

/// Decide strict positivity on R structurally: a polynomial is positive
/// everywhere iff it is a positive constant, or has even degree, positive
/// leading coefficient and no real roots. Sampling cannot decide this (a
/// tangency to zero defeats any finite set of rational probes), so the real
/// root count comes from Sturm's theorem.
///
/// On failure the witness is the strongest checkable evidence available: an
/// exact point with nonpositive value if one is found rationally, otherwise
/// an isolating interval around a real zero.
pub fn is_strictly_positive_on_r(q: &Polynomial) -> PositivityCertificate {
    let deg = match q.degree() {
        None => {
            return PositivityCertificate::not_positive(
                PositivityReason::NonpositiveConstant,
                Witness::Point { x: rat(0), value: rat(0) },
                0,
            )
        }
        Some(d) => d,
    };
    if deg == 0 {
        let c = q.coeff(0);
        return if c > Rat::zero() {
            PositivityCertificate {
                verdict: Positivity::PositiveOnR,
                reason: PositivityReason::PositiveConstant,
                witness: None,
                sturm_root_count: 0,
            }
        } else {
            PositivityCertificate::not_positive(
                PositivityReason::NonpositiveConstant,
                Witness::Point { x: rat(0), value: c },
                0,
            )
        };
    }

    let roots = count_distinct_real_roots(q, &ExtendedPoint::NegInf, &ExtendedPoint::PosInf)
        .expect("degree >= 1");
    let bound = cauchy_bound(q).expect("degree >= 1");
    let lead_positive = sign(q.leading_coeff().unwrap()) > 0;

    if deg % 2 == 1 {
        // Outside the root bound the polynomial has its leading sign, so it
        // is negative at one of +-(B+1).
        let x = if lead_positive { -(&bound + rat(1)) } else { &bound + rat(1) };
        let value = q.evaluate(&x);
        debug_assert!(value < Rat::zero());
        return PositivityCertificate::not_positive(
            PositivityReason::OddDegree,
            Witness::Point { x, value },
            roots,
        );
    }
    if !lead_positive {
        let x = &bound + rat(1);
        let value = q.evaluate(&x);
        debug_assert!(value < Rat::zero());
        return PositivityCertificate::not_positive(
            PositivityReason::NegativeLead,
            Witness::Point { x, value },
            roots,
        );
    }
    if roots == 0 {
        return PositivityCertificate {
            verdict: Positivity::PositiveOnR,
            reason: PositivityReason::EvenDegreePositiveLeadNoRealRoots,
            witness: None,
            sturm_root_count: 0,
        };
    }

    // Even degree, positive lead, real zeros present. Probe interval
    // endpoints, midpoints and the gaps between consecutive root intervals,
    // and witness the most negative exact value found; fall back to an
    // isolating interval (a tangency from above has no rational nonpositive
    // point).
    let intervals = isolate_real_roots(q);
    debug_assert_eq!(intervals.len(), roots);
    let mut candidates = Vec::new();
    for (i, iv) in intervals.iter().enumerate() {
        candidates.push(iv.lo.clone());
        candidates.push(iv.midpoint());
        candidates.push(iv.hi.clone());
        if let Some(next) = intervals.get(i + 1) {
            candidates.push((&iv.hi + &next.lo) / rat(2));
        }
    }
    let mut best: Option<(Rat, Rat)> = None;
    for x in candidates {
        let value = q.evaluate(&x);
        if value <= Rat::zero() && best.as_ref().is_none_or(|(_, v)| &value < v) {
            best = Some((x, value));
        }
    }
    if let Some((x, value)) = best {
        return PositivityCertificate::not_positive(
            PositivityReason::HasRealZero,
            Witness::Point { x, value },
            roots,
        );
    }
    let narrow = {
        let target = Rat::new(1.into(), 1024.into());
        let w = intervals[0].width();
        let eps = if w < target { w } else { target };
        refine_interval(q, &intervals[0], &eps)
    };
    PositivityCertificate::not_positive(
        PositivityReason::HasRealZero,
        Witness::Interval(narrow),
        roots,
    )
}
