//! Constructive orthogonal-polynomial realization of a certified input.
//!
//! A monic polynomial whose zeros are all real and distinct is the top of a
//! finite monic sequence p_0 = 1, ..., p_N satisfying
//! p_{k+1} = (x - a_k) p_k - b_k p_{k-1} with every b_k > 0. The sequence is
//! recovered *downward* by Euclidean division from the pair (p_N, p_{N-1});
//! positivity of all b_k is the certificate that such a sequence exists, and
//! it fails exactly when the input pair does not interlace. From the
//! recurrence come the Jacobi matrix and a finite-support probability
//! measure (nodes at the zeros of p_N, Christoffel-number weights) that
//! makes the sequence orthogonal.

use nalgebra::DMatrix;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::poly::Polynomial;
use crate::realroot::{self, IsolatingInterval};
use crate::rational::{rat, to_f64, Rat};

/// Monic polynomials p_0 = 1 up to p_N, deg p_k = k.
#[derive(Clone, Debug, PartialEq)]
pub struct MonicSequence {
    pub polys: Vec<Polynomial>,
}

impl MonicSequence {
    /// N = degree of the top polynomial.
    pub fn top_degree(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn top(&self) -> &Polynomial {
        self.polys.last().expect("sequence contains p_0 = 1")
    }
}

/// Coefficients of the monic three-term recurrence: a_0..a_{N-1} and
/// b_1..b_{N-1}. All b_k > 0 is the positivity (Favard) certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceCoefficients {
    pub a: Vec<Rat>,
    pub b: Vec<Rat>,
}

/// Symmetric tridiagonal matrix with diagonal a_k and off-diagonal sqrt(b_k),
/// as floating values. Its eigenvalues are the zeros of p_N; used as a
/// cross-check, never as primary root evidence.
#[derive(Clone, Debug)]
pub struct JacobiMatrix {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
}

impl JacobiMatrix {
    pub fn size(&self) -> usize {
        self.diag.len()
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let n = self.size();
        let m = DMatrix::<f64>::from_fn(n, n, |i, j| {
            if i == j {
                self.diag[i]
            } else if i + 1 == j || j + 1 == i {
                self.offdiag[i.min(j)]
            } else {
                0.0
            }
        });
        let mut vals: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        vals
    }
}

/// One support point of a discrete measure: a refined isolating interval
/// around a zero of p_N and the rational representative used for weights.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasureNode {
    pub interval: IsolatingInterval,
    pub representative: Rat,
}

/// Finite-support probability measure: nodes at the zeros of the top
/// polynomial, positive weights summing exactly to 1.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteMeasure {
    pub nodes: Vec<MeasureNode>,
    pub weights: Vec<Rat>,
    pub precision: Rat,
}

/// The monic pair (P / lc, P' / (n lc)) whose downward extension realizes P
/// as the top of an orthogonal sequence.
pub fn monic_derivative_pair(p: &Polynomial) -> Result<(Polynomial, Polynomial), Error> {
    let n = match p.degree() {
        Some(n) if n >= 2 => n,
        actual => return Err(Error::DegreeTooSmall { required: 2, actual }),
    };
    let top = p.make_monic();
    let second = top.derivative().scale(&(Rat::one() / rat(n as i64)));
    debug_assert!(second.is_monic());
    Ok((top, second))
}

/// Run the three-term recurrence downward from a monic pair of consecutive
/// degrees. Each division step p_{k+1} = (x - a_k) p_k + r must leave a
/// remainder r = -b_k p_{k-1} of exact degree k-1 with b_k > 0; any other
/// outcome means the pair is not consecutive in an orthogonal sequence
/// (equivalently, the top is not real-rooted with distinct zeros when the
/// second entry is its monic derivative).
pub fn extend_downward(
    p_top: &Polynomial,
    p_second: &Polynomial,
) -> Result<(MonicSequence, RecurrenceCoefficients), Error> {
    let n = p_top.degree().unwrap_or(0);
    if n < 1 || !p_top.is_monic() {
        return Err(Error::PreconditionViolated(
            "extend_downward: p_top must be monic of degree >= 1".into(),
        ));
    }
    if p_second.degree() != Some(n - 1) {
        return Err(Error::PreconditionViolated(format!(
            "extend_downward: p_second must be monic of degree {}",
            n - 1
        )));
    }
    if !p_second.is_monic() {
        return Err(Error::PreconditionViolated(
            "extend_downward: p_second must be monic".into(),
        ));
    }

    let mut a = vec![Rat::zero(); n];
    let mut b = vec![Rat::zero(); n.saturating_sub(1)];
    // polys collected from the top down, reversed at the end
    let mut polys = vec![p_top.clone(), p_second.clone()];
    let mut upper = p_top.clone();
    let mut lower = p_second.clone();
    for k in (1..n).rev() {
        let (q, r) = upper.div_rem(&lower).expect("lower is monic, nonzero");
        debug_assert_eq!(q.degree(), Some(1));
        debug_assert!(q.is_monic());
        a[k] = -q.coeff(0);
        if r.degree() != Some(k - 1) {
            return Err(Error::NotInterlacing { level: k, b: None });
        }
        let b_k = -r.leading_coeff().unwrap().clone();
        if b_k <= Rat::zero() {
            return Err(Error::NotInterlacing { level: k, b: Some(b_k) });
        }
        let prev = r.scale(&(-Rat::one() / &b_k));
        debug_assert!(prev.is_monic());
        b[k - 1] = b_k;
        polys.push(prev.clone());
        upper = lower;
        lower = prev;
    }
    // p_1 = x - a_0
    let p1 = &polys[polys.len() - 2];
    debug_assert_eq!(p1.degree(), Some(1));
    a[0] = -p1.coeff(0);
    debug_assert_eq!(polys.last().unwrap(), &Polynomial::one());
    polys.reverse();
    Ok((MonicSequence { polys }, RecurrenceCoefficients { a, b }))
}

/// The positivity certificate: every b_k > 0, exactly. Vacuously true for
/// N = 1 (no b coefficients).
pub fn favard_holds(rc: &RecurrenceCoefficients) -> bool {
    rc.b.iter().all(|b| b > &Rat::zero())
}

/// Build the Jacobi matrix of a recurrence with positive b_k.
pub fn jacobi_matrix(rc: &RecurrenceCoefficients) -> Result<JacobiMatrix, Error> {
    if !favard_holds(rc) {
        return Err(Error::FavardViolated);
    }
    Ok(JacobiMatrix {
        diag: rc.a.iter().map(to_f64).collect(),
        offdiag: rc.b.iter().map(|b| to_f64(b).sqrt()).collect(),
    })
}

/// Default node precision: 10^-14 * (1 + Cauchy bound of the top polynomial).
pub fn default_precision(p_top: &Polynomial) -> Rat {
    let b = realroot::cauchy_bound(p_top).unwrap_or_else(|_| Rat::one());
    crate::rational::pow10_neg(14) * (Rat::one() + b)
}

/// The discrete orthogonality measure: isolate and refine the zeros of p_N
/// to width < `precision`, then weight node i by the Christoffel number
/// 1 / sum_k phat_k(x_i)^2 over the orthonormal rescalings
/// phat_k = p_k / sqrt(b_1 ... b_k), all in exact rational arithmetic.
/// Weights are renormalized to sum exactly to 1, absorbing node
/// approximation error.
pub fn discrete_measure(
    seq: &MonicSequence,
    rc: &RecurrenceCoefficients,
    precision: &Rat,
) -> Result<DiscreteMeasure, Error> {
    if !favard_holds(rc) {
        return Err(Error::FavardViolated);
    }
    let n = seq.top_degree();
    if n == 0 {
        return Err(Error::NotRealRooted);
    }
    let top = seq.top();
    let intervals = realroot::isolate_real_roots(top);
    if intervals.len() != n {
        return Err(Error::NotRealRooted);
    }
    let refined: Vec<IsolatingInterval> =
        crate::map_slice(&intervals, |iv| realroot::refine_interval(top, iv, precision));
    let nodes: Vec<MeasureNode> = refined
        .into_iter()
        .map(|interval| {
            let representative = interval.midpoint();
            MeasureNode { interval, representative }
        })
        .collect();

    // Squared norms ||p_k||^2 = b_1 ... b_k (with ||p_0||^2 = 1).
    let mut norms = Vec::with_capacity(n);
    norms.push(Rat::one());
    for k in 1..n {
        let prev = norms[k - 1].clone();
        norms.push(prev * &rc.b[k - 1]);
    }
    let lambdas: Vec<Rat> = crate::map_slice(&nodes, |node| {
        let x = &node.representative;
        let mut s = Rat::zero();
        for (p_k, norm) in seq.polys[..n].iter().zip(&norms) {
            let v = p_k.evaluate(x);
            s += &v * &v / norm;
        }
        Rat::one() / s
    });
    let total: Rat = lambdas.iter().fold(Rat::zero(), |acc, l| acc + l);
    let weights: Vec<Rat> = lambdas.into_iter().map(|l| l / &total).collect();
    Ok(DiscreteMeasure { nodes, weights, precision: precision.clone() })
}

/// Largest orthogonality defect max |sum_m w_m p_i(x_m) p_j(x_m)| over
/// 0 <= i < j <= N, as a float. The measure is supported on the zeros of
/// p_N, so every pair involving p_N vanishes identically; the numeric
/// summation covers the remaining pairs.
pub fn verify_orthogonality(seq: &MonicSequence, mu: &DiscreteMeasure) -> Result<f64, Error> {
    let n = seq.top_degree();
    if mu.nodes.len() != n {
        return Err(Error::DimensionMismatch { expected: n, actual: mu.nodes.len() });
    }
    let xs: Vec<f64> = mu.nodes.iter().map(|nd| to_f64(&nd.representative)).collect();
    let ws: Vec<f64> = mu.weights.iter().map(to_f64).collect();
    // values[k][m] = p_k(x_m)
    let values: Vec<Vec<f64>> = seq.polys[..n]
        .iter()
        .map(|p| xs.iter().map(|&x| p.evaluate_f64(x)).collect())
        .collect();
    let mut max = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            let mut s = 0.0;
            for m in 0..xs.len() {
                s += ws[m] * values[i][m] * values[j][m];
            }
            if s.abs() > max {
                max = s.abs();
            }
        }
    }
    Ok(max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn x2m1() -> Polynomial {
        Polynomial::from_i64(&[-1, 0, 1])
    }

    fn cubic() -> Polynomial {
        Polynomial::from_i64(&[0, -3, 0, 1])
    }

    #[test]
    fn monic_pair_examples() {
        // 2x^2 - 2 -> (x^2 - 1, x)
        let (top, second) = monic_derivative_pair(&Polynomial::from_i64(&[-2, 0, 2])).unwrap();
        assert_eq!(top, x2m1());
        assert_eq!(second, Polynomial::x());
        // already monic
        let (top, second) = monic_derivative_pair(&cubic()).unwrap();
        assert_eq!(top, cubic());
        assert_eq!(second, x2m1());
        // sign normalization: -x^2 + 1 -> (x^2 - 1, x)
        let (top, second) = monic_derivative_pair(&Polynomial::from_i64(&[1, 0, -1])).unwrap();
        assert_eq!(top, x2m1());
        assert_eq!(second, Polynomial::x());
    }

    #[test]
    fn extend_downward_quadratic() {
        // x^2 - 1 = x * x - 1: a = (0, 0), b = (1)
        let (seq, rc) = extend_downward(&x2m1(), &Polynomial::x()).unwrap();
        assert_eq!(seq.polys, vec![Polynomial::one(), Polynomial::x(), x2m1()]);
        assert_eq!(rc.a, vec![rat(0), rat(0)]);
        assert_eq!(rc.b, vec![rat(1)]);
        assert!(favard_holds(&rc));
    }

    #[test]
    fn extend_downward_rejects_complex_pair() {
        // x^2 + 1 = x * x + 1: remainder +1 forces b_1 = -1
        let err = extend_downward(&Polynomial::from_i64(&[1, 0, 1]), &Polynomial::x());
        assert_eq!(err.unwrap_err(), Error::NotInterlacing { level: 1, b: Some(rat(-1)) });
    }

    #[test]
    fn extend_downward_cubic() {
        // x^3 - 3x = x (x^2 - 1) - 2x, then x^2 - 1 = x * x - 1
        let (seq, rc) = extend_downward(&cubic(), &x2m1()).unwrap();
        assert_eq!(
            seq.polys,
            vec![Polynomial::one(), Polynomial::x(), x2m1(), cubic()]
        );
        assert_eq!(rc.a, vec![rat(0), rat(0), rat(0)]);
        assert_eq!(rc.b, vec![rat(1), rat(2)]);
    }

    #[test]
    fn extend_downward_checks_preconditions() {
        assert!(matches!(
            extend_downward(&Polynomial::from_i64(&[0, 0, 2]), &Polynomial::x()),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            extend_downward(&x2m1(), &x2m1()),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn favard_examples() {
        assert!(favard_holds(&RecurrenceCoefficients {
            a: vec![rat(0); 3],
            b: vec![rat(1), rat(2)],
        }));
        assert!(!favard_holds(&RecurrenceCoefficients {
            a: vec![rat(0); 3],
            b: vec![rat(1), rat(-1)],
        }));
        // N = 1: no b coefficients, vacuously true
        assert!(favard_holds(&RecurrenceCoefficients { a: vec![rat(5)], b: vec![] }));
    }

    #[test]
    fn jacobi_eigenvalues_quadratic() {
        // [[0, 1], [1, 0]] has eigenvalues -1, 1 = zeros of x^2 - 1
        let rc = RecurrenceCoefficients { a: vec![rat(0), rat(0)], b: vec![rat(1)] };
        let jm = jacobi_matrix(&rc).unwrap();
        let ev = jm.eigenvalues();
        assert!((ev[0] + 1.0).abs() < 1e-12);
        assert!((ev[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn jacobi_eigenvalues_cubic() {
        // diag 0, offdiag (1, sqrt 2): characteristic polynomial l^3 - 3l,
        // eigenvalues -sqrt(3), 0, sqrt(3)
        let rc = RecurrenceCoefficients { a: vec![rat(0); 3], b: vec![rat(1), rat(2)] };
        let ev = jacobi_matrix(&rc).unwrap().eigenvalues();
        let s3 = 3.0f64.sqrt();
        assert!((ev[0] + s3).abs() < 1e-12);
        assert!(ev[1].abs() < 1e-12);
        assert!((ev[2] - s3).abs() < 1e-12);
    }

    #[test]
    fn jacobi_one_by_one() {
        let rc = RecurrenceCoefficients { a: vec![rat(5)], b: vec![] };
        let ev = jacobi_matrix(&rc).unwrap().eigenvalues();
        assert_eq!(ev, vec![5.0]);
    }

    #[test]
    fn jacobi_requires_favard() {
        let rc = RecurrenceCoefficients { a: vec![rat(0); 2], b: vec![rat(-1)] };
        assert!(matches!(jacobi_matrix(&rc), Err(Error::FavardViolated)));
    }

    #[test]
    fn measure_quadratic() {
        let (seq, rc) = extend_downward(&x2m1(), &Polynomial::x()).unwrap();
        let mu = discrete_measure(&seq, &rc, &ratio(1, 1_000_000_000_000)).unwrap();
        assert_eq!(mu.nodes.len(), 2);
        assert!(mu.nodes[0].interval.contains(&rat(-1)));
        assert!(mu.nodes[1].interval.contains(&rat(1)));
        // moment system for nodes +-1: both weights 1/2, up to node error
        let total: Rat = mu.weights.iter().fold(Rat::zero(), |a, w| a + w);
        assert_eq!(total, Rat::one());
        for w in &mu.weights {
            assert!((to_f64(w) - 0.5).abs() < 1e-9);
        }
    }

    #[test]
    fn measure_point_mass() {
        let top = Polynomial::from_i64(&[-5, 1]);
        let (seq, rc) = extend_downward(&top, &Polynomial::one()).unwrap();
        let mu = discrete_measure(&seq, &rc, &ratio(1, 1000)).unwrap();
        assert_eq!(mu.nodes.len(), 1);
        assert_eq!(mu.weights, vec![Rat::one()]);
        assert!(mu.nodes[0].interval.contains(&rat(5)));
        assert_eq!(verify_orthogonality(&seq, &mu).unwrap(), 0.0);
    }

    #[test]
    fn measure_rejects_non_real_rooted() {
        // Hand-build a sequence whose top has complex zeros but whose
        // recurrence data looks plausible.
        let seq = MonicSequence {
            polys: vec![Polynomial::one(), Polynomial::x(), Polynomial::from_i64(&[1, 0, 1])],
        };
        let rc = RecurrenceCoefficients { a: vec![rat(0), rat(0)], b: vec![rat(1)] };
        assert_eq!(
            discrete_measure(&seq, &rc, &ratio(1, 100)).unwrap_err(),
            Error::NotRealRooted
        );
    }

    #[test]
    fn orthogonality_residuals() {
        let (seq, rc) = extend_downward(&cubic(), &x2m1()).unwrap();
        let mu = discrete_measure(&seq, &rc, &default_precision(&cubic())).unwrap();
        // Christoffel numbers by hand: 1/(1 + x^2 + (x^2-1)^2/2) is 1/6 at
        // x = +-sqrt(3) and 2/3 at x = 0
        let expect = [1.0 / 6.0, 2.0 / 3.0, 1.0 / 6.0];
        for (w, e) in mu.weights.iter().zip(expect) {
            assert!((to_f64(w) - e).abs() < 1e-9);
        }
        let res = verify_orthogonality(&seq, &mu).unwrap();
        assert!(res < 1e-10, "residual {res}");

        let (seq2, rc2) = extend_downward(&x2m1(), &Polynomial::x()).unwrap();
        let mu2 = discrete_measure(&seq2, &rc2, &default_precision(&x2m1())).unwrap();
        assert!(verify_orthogonality(&seq2, &mu2).unwrap() < 1e-12);
    }

    #[test]
    fn orthogonality_dimension_mismatch() {
        let (seq, rc) = extend_downward(&x2m1(), &Polynomial::x()).unwrap();
        let mu = discrete_measure(&seq, &rc, &ratio(1, 100)).unwrap();
        let (seq3, _) = extend_downward(&cubic(), &x2m1()).unwrap();
        assert!(matches!(
            verify_orthogonality(&seq3, &mu),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn spectral_cross_check() {
        let (seq, rc) = extend_downward(&cubic(), &x2m1()).unwrap();
        let mu = discrete_measure(&seq, &rc, &default_precision(&cubic())).unwrap();
        let ev = jacobi_matrix(&rc).unwrap().eigenvalues();
        for (node, lambda) in mu.nodes.iter().zip(ev) {
            assert!((to_f64(&node.representative) - lambda).abs() < 1e-8);
        }
    }
}
