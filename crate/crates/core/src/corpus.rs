//! Deterministic polynomial corpora for tests and benchmarks.
//!
//! Uses an embedded SplitMix64 generator so the same seed reproduces the
//! same corpus on every platform and toolchain, which golden-style suites
//! rely on.

use crate::poly::Polynomial;
use crate::rational::{rat, ratio, Rat};

/// SplitMix64: tiny, seedable, stable across versions.
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Uniform integer in lo..=hi.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    /// Nonzero uniform integer in -bound..=bound.
    pub fn nonzero_in(&mut self, bound: i64) -> i64 {
        loop {
            let v = self.int_in(-bound, bound);
            if v != 0 {
                return v;
            }
        }
    }
}

/// Random polynomial of the given degree with coefficients n/d,
/// n in [-bound, bound], d in [1, bound]; leading coefficient nonzero.
pub fn random_rational_poly(rng: &mut Rng, degree: usize, bound: i64) -> Polynomial {
    let mut coeffs = Vec::with_capacity(degree + 1);
    for _ in 0..degree {
        coeffs.push(ratio(rng.int_in(-bound, bound), rng.int_in(1, bound)));
    }
    coeffs.push(ratio(rng.nonzero_in(bound), rng.int_in(1, bound)));
    Polynomial::new(coeffs)
}

/// Product of `degree` distinct rational linear factors, scaled by a random
/// nonzero integer. All zeros are real and distinct by construction.
pub fn product_of_distinct_linear_factors(rng: &mut Rng, degree: usize) -> Polynomial {
    let roots = distinct_rational_roots(rng, degree);
    Polynomial::from_roots(&roots).scale(&rat(rng.nonzero_in(3)))
}

/// `count` pairwise-distinct rationals with small numerators/denominators.
pub fn distinct_rational_roots(rng: &mut Rng, count: usize) -> Vec<Rat> {
    let mut roots: Vec<Rat> = Vec::with_capacity(count);
    while roots.len() < count {
        let r = ratio(rng.int_in(-10, 10), rng.int_in(1, 4));
        if !roots.contains(&r) {
            roots.push(r);
        }
    }
    roots
}

/// An exact double root times a coprime real-rooted cofactor:
/// (x - r)^2 * g with g a product of distinct linear factors avoiding r.
/// Never real-and-distinct.
pub fn double_root_times_coprime(rng: &mut Rng, cofactor_degree: usize) -> Polynomial {
    let r = ratio(rng.int_in(-6, 6), rng.int_in(1, 3));
    let mut others = Vec::with_capacity(cofactor_degree);
    while others.len() < cofactor_degree {
        let s = ratio(rng.int_in(-8, 8), rng.int_in(1, 3));
        if s != r && !others.contains(&s) {
            others.push(s);
        }
    }
    let double = Polynomial::from_roots(&[r.clone(), r]);
    &double * &Polynomial::from_roots(&others)
}

/// Adversarial near-multiple-root input: (x - r)^2 * g +- 10^-k. The tiny
/// shift either splits the double root into two simple real roots or lifts
/// it into a complex pair; both sides of the boundary get exercised.
pub fn near_multiple_root(rng: &mut Rng, cofactor_degree: usize) -> Polynomial {
    let base = double_root_times_coprime(rng, cofactor_degree);
    let k = rng.int_in(3, 12) as u32;
    let eps = crate::rational::pow10_neg(k);
    let shift = if rng.below(2) == 0 { eps } else { -eps };
    &base + &Polynomial::constant(shift)
}

/// Real-rooted polynomial with well-spread roots k/8 on a grid in
/// [-5/4, 5/4] (pairwise gaps >= 1/4). Small root magnitudes keep the
/// downstream measure computations well-conditioned.
///
/// Min-gap configurations are sampled constructively (draw slack values,
/// sort, re-add the mandatory gaps), so any degree up to 10 always fits.
pub fn spread_real_rooted(rng: &mut Rng, degree: usize) -> Polynomial {
    assert!((1..=10).contains(&degree), "grid supports 1..=10 spread roots");
    let slack = 20 - 2 * (degree as i64 - 1);
    let mut js: Vec<i64> = (0..degree).map(|_| rng.int_in(0, slack)).collect();
    js.sort_unstable();
    let roots: Vec<Rat> = js
        .into_iter()
        .enumerate()
        .map(|(i, j)| ratio(-10 + j + 2 * i as i64, 8))
        .collect();
    Polynomial::from_roots(&roots)
}
