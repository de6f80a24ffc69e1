//! Deterministic random instance generators.
//!
//! Everything is driven by `ChaCha8Rng` from explicit seeds; the same seed
//! always yields the same form, so experiments are reproducible byte for
//! byte and parallel trial scheduling cannot change results.

use crate::algebra::AlgForm;
use crate::fourier::{self, FourierForm, LatticeIsometry};
use crate::index_set::IndexSet;
use crate::poly::Polynomial;
use crate::poly_form::{AffineMap, PolyForm};
use crate::scalar::{FourierScalar, GaussRational, Rational};
use num::complex::Complex64;
use num::rational::Ratio;
use num::traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All randomized machinery in this crate goes through this constructor.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derive an independent per-trial seed from a master seed (splitmix64 on
/// the mixed pair), so trials can run in parallel yet stay reproducible.
pub fn mix_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Scalars that the generators know how to draw.
pub trait SampleScalar: FourierScalar {
    fn sample(rng: &mut ChaCha8Rng) -> Self;
}

impl SampleScalar for Complex64 {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    }
}

impl SampleScalar for GaussRational {
    fn sample(rng: &mut ChaCha8Rng) -> Self {
        let part = |rng: &mut ChaCha8Rng| {
            let numer: i64 = rng.gen_range(-4..=4);
            let denom: i64 = rng.gen_range(1..=3);
            (numer, denom)
        };
        GaussRational::from_ratios(part(rng), part(rng))
    }
}

fn lattice_box(n: usize, bandwidth: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut current = vec![0i64; n];
    fn rec(axis: usize, bandwidth: i64, current: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if axis == current.len() {
            out.push(current.clone());
            return;
        }
        for k in -bandwidth..=bandwidth {
            current[axis] = k;
            rec(axis + 1, bandwidth, current, out);
        }
    }
    rec(0, bandwidth, &mut current, &mut out);
    out
}

/// A random band-limited `q`-form: every `(mode, index set)` slot inside the
/// bandwidth box is populated with probability `density`.
pub fn random_form<S: SampleScalar>(
    n: usize,
    q: i64,
    bandwidth: i64,
    density: f64,
    rng: &mut ChaCha8Rng,
) -> FourierForm<S> {
    let sets = IndexSet::all(n, q);
    let mut coeffs = Vec::new();
    for k in lattice_box(n, bandwidth) {
        for idx in &sets {
            if rng.gen_range(0.0..1.0) < density {
                coeffs.push((k.clone(), idx.clone(), S::sample(rng)));
            }
        }
    }
    FourierForm::from_coefficients(n, q, coeffs).expect("generated terms are consistent")
}

/// As [`random_form`] but with the constant mode excluded.
pub fn random_mean_zero_form<S: SampleScalar>(
    n: usize,
    q: i64,
    bandwidth: i64,
    density: f64,
    rng: &mut ChaCha8Rng,
) -> FourierForm<S> {
    let sets = IndexSet::all(n, q);
    let mut coeffs = Vec::new();
    for k in lattice_box(n, bandwidth) {
        if k.iter().all(|&c| c == 0) {
            continue;
        }
        for idx in &sets {
            if rng.gen_range(0.0..1.0) < density {
                coeffs.push((k.clone(), idx.clone(), S::sample(rng)));
            }
        }
    }
    FourierForm::from_coefficients(n, q, coeffs).expect("generated terms are consistent")
}

const NONZERO_ATTEMPTS: usize = 64;

/// A random closed, mean-zero form of the given degree: `f = d a` for a
/// random band-limited potential `a`, redrawn until nonzero when a nonzero
/// closed form of that degree exists.
pub fn random_closed<S: SampleScalar>(
    n: usize,
    degree: i64,
    bandwidth: i64,
    density: f64,
    rng: &mut ChaCha8Rng,
) -> FourierForm<S> {
    if degree < 1 || degree > n as i64 {
        return FourierForm::zero(n, degree);
    }
    for _ in 0..NONZERO_ATTEMPTS {
        let potential = random_form::<S>(n, degree - 1, bandwidth, density, rng);
        let f = fourier::d(&potential);
        if !f.is_zero() {
            return f;
        }
    }
    FourierForm::zero(n, degree)
}

/// A random coclosed, mean-zero form of the given degree: `g = d* b`.
pub fn random_coclosed<S: SampleScalar>(
    n: usize,
    degree: i64,
    bandwidth: i64,
    density: f64,
    rng: &mut ChaCha8Rng,
) -> FourierForm<S> {
    if degree < 0 || degree >= n as i64 {
        return FourierForm::zero(n, degree);
    }
    for _ in 0..NONZERO_ATTEMPTS {
        let potential = random_form::<S>(n, degree + 1, bandwidth, density, rng);
        let g = fourier::dstar(&potential);
        if !g.is_zero() {
            return g;
        }
    }
    FourierForm::zero(n, degree)
}

/// A random small rational `p/q` with `|p| ≤ 4`, `1 ≤ q ≤ 3`.
pub fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let numer: i64 = rng.gen_range(-4..=4);
    let denom: i64 = rng.gen_range(1..=3);
    Rational::new(numer.into(), denom.into())
}

/// A random sparse polynomial in `n` variables: up to `max_terms` monomials
/// with per-variable exponents in `0..=max_exp`.
pub fn random_polynomial(
    n: usize,
    max_terms: usize,
    max_exp: u32,
    rng: &mut ChaCha8Rng,
) -> Polynomial {
    let terms = rng.gen_range(1..=max_terms.max(1));
    let mut p = Polynomial::zero();
    for _ in 0..terms {
        let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
        p = p + Polynomial::monomial(exps, random_rational(rng));
    }
    p
}

/// A random constant-coefficient `q`-form over the rationals.
pub fn random_alg_form(n: usize, q: i64, rng: &mut ChaCha8Rng) -> AlgForm<Rational> {
    let mut terms = Vec::new();
    for idx in IndexSet::all(n, q) {
        if rng.gen_bool(0.7) {
            terms.push((idx, random_rational(rng)));
        }
    }
    AlgForm::from_terms(n, q, terms).expect("consistent degree")
}

fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

/// A random signed permutation with a random rational translation.
pub fn random_signed_permutation_map(n: usize, rng: &mut ChaCha8Rng) -> AffineMap {
    let perm = random_permutation(n, rng);
    let signs: Vec<i8> = (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
    let offset: Vec<Rational> = (0..n).map(|_| random_rational(rng)).collect();
    AffineMap::signed_permutation(&perm, &signs, offset).expect("valid permutation")
}

/// A random exact isometry of `Rⁿ`: a signed permutation composed with a
/// (3,4,5) rotation in a random plane, plus a rational translation.
pub fn random_rational_isometry(n: usize, rng: &mut ChaCha8Rng) -> AffineMap {
    let base = random_signed_permutation_map(n, rng);
    if n < 2 {
        return base;
    }
    let a = rng.gen_range(1..=n);
    let b = loop {
        let b = rng.gen_range(1..=n);
        if b != a {
            break b;
        }
    };
    let offset: Vec<Rational> = (0..n).map(|_| random_rational(rng)).collect();
    let rotation = AffineMap::pythagorean_rotation(n, a, b, offset).expect("distinct axes");
    rotation.compose(&base)
}

/// A random torus isometry: signed axis permutation plus a quarter-turn
/// translation (so phases stay Gaussian rational).
pub fn random_torus_isometry(n: usize, rng: &mut ChaCha8Rng) -> LatticeIsometry {
    let perm = random_permutation(n, rng);
    let signs: Vec<i8> = (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
    let shift: Vec<Ratio<i64>> = (0..n).map(|_| Ratio::new(rng.gen_range(-3..=3), 2)).collect();
    LatticeIsometry::new(perm, signs, shift).expect("valid isometry")
}

/// A random polynomial-coefficient `q`-form; each index set is populated
/// with probability `density`.
pub fn random_poly_form(
    n: usize,
    q: i64,
    max_terms: usize,
    max_exp: u32,
    density: f64,
    rng: &mut ChaCha8Rng,
) -> PolyForm {
    let mut out = PolyForm::zero(n, q);
    for idx in IndexSet::all(n, q) {
        if rng.gen_range(0.0..1.0) < density {
            let p = random_polynomial(n, max_terms, max_exp, rng);
            out = out.add(
                &AlgForm::from_terms(n, q, [(idx, p)]).expect("consistent degree"),
            );
        }
    }
    out
}
