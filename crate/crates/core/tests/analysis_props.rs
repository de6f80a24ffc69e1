//! Quadrature and experiment-harness properties on random float forms.

use num::complex::Complex64;
use oddform_core::analysis::{
    gradient_lp_norm, lp_norm_of_form, pairing_experiment, random_form, recheck_box_relation,
    seeded_rng, PairingParams, PairingVariant, RatioParams, DEFAULT_OVERSAMPLE,
};
use oddform_core::fourier::{self, FourierForm};

fn draw(n: usize, q: i64, bandwidth: i64, seed: u64) -> FourierForm<Complex64> {
    let mut rng = seeded_rng(seed);
    random_form::<Complex64>(n, q, bandwidth, 0.5, &mut rng)
}

#[test]
fn p2_quadrature_agrees_with_parseval() {
    // Band-limited |f|² is integrated exactly by any grid at or above the
    // Nyquist bound, so p=2 quadrature must match the Parseval sum to
    // rounding.
    for (seed, n, q, bw) in [(1u64, 2usize, 1i64, 3i64), (2, 3, 2, 2), (3, 2, 0, 5), (4, 3, 0, 4)] {
        let f = draw(n, q, bw, seed);
        let quad = lp_norm_of_form(&f, 2.0, DEFAULT_OVERSAMPLE).unwrap();
        let parseval = fourier::l2_inner(&f, &f).unwrap().re.sqrt();
        assert!(
            (quad - parseval).abs() <= 1e-10 * (1.0 + parseval),
            "n={n} q={q}: {quad} vs {parseval}"
        );
    }
}

#[test]
fn hodge_star_is_an_l1_isometry() {
    for (seed, n, q) in [(5u64, 2usize, 1i64), (6, 3, 1), (7, 3, 2), (8, 2, 0)] {
        let f = draw(n, q, 3, seed);
        let direct = lp_norm_of_form(&f, 1.0, DEFAULT_OVERSAMPLE).unwrap();
        let starred = lp_norm_of_form(&f.hodge_star(), 1.0, DEFAULT_OVERSAMPLE).unwrap();
        assert!(
            (direct - starred).abs() <= 1e-12 * (1.0 + direct),
            "n={n} q={q}: {direct} vs {starred}"
        );
    }
}

#[test]
fn energy_identity_under_quadrature() {
    // ‖dh‖₂² + ‖d*h‖₂² = ‖∇h‖₂² with all three sides quadratured.
    for (seed, n, q) in [(9u64, 2usize, 1i64), (10, 3, 1), (11, 3, 2)] {
        let h = draw(n, q, 3, seed);
        let dh = lp_norm_of_form(&fourier::d(&h), 2.0, DEFAULT_OVERSAMPLE).unwrap();
        let dsh = lp_norm_of_form(&fourier::dstar(&h), 2.0, DEFAULT_OVERSAMPLE).unwrap();
        let grad = gradient_lp_norm(&h, 2.0, DEFAULT_OVERSAMPLE).unwrap();
        let lhs = dh * dh + dsh * dsh;
        let rhs = grad * grad;
        assert!(
            (lhs - rhs).abs() <= 1e-10 * (1.0 + rhs),
            "n={n} q={q}: {lhs} vs {rhs}"
        );
    }
}

#[test]
fn divcurl_records_respect_box_relation() {
    // Every ratio trial with m ≥ 1 relates its solve to the first-order one.
    for m in 1..=2usize {
        let params = RatioParams::new(3, 0, m, 2, 1, 77);
        for trial in 0..4u64 {
            let seed = oddform_core::analysis::mix_seed(params.seed, trial);
            assert!(recheck_box_relation(&params, seed).unwrap(), "m={m} trial={trial}");
        }
    }
}

#[test]
fn pairing_orthogonal_construction_annihilates() {
    // h coclosed (h = d*w) against closed f gives ⟨f, h⟩ = 0; in floats the
    // Parseval sum cancels to rounding.
    let mut rng = seeded_rng(123);
    for (n, q) in [(2usize, 0i64), (3, 1)] {
        let a = random_form::<Complex64>(n, q, 3, 0.5, &mut rng);
        let f = fourier::d(&a);
        let w = random_form::<Complex64>(n, q + 2, 3, 0.5, &mut rng);
        let h = fourier::dstar(&w);
        let inner = fourier::l2_inner(&f, &h).unwrap().norm();
        let bound = 1e-10 * f.l2_norm() * h.l2_norm();
        assert!(inner <= bound, "n={n} q={q}: ⟨f,h⟩ = {inner} > {bound}");
    }
}

#[test]
fn pairing_rhs_ordering_on_random_corpus() {
    // On the sampled corpus ‖d*h‖_{Lⁿ} stays below ‖∇h‖_{Lⁿ}; the LL
    // right-hand side never exceeds the LS one on the same trial.
    for (n, q) in [(2usize, 0i64), (3, 0), (3, 1)] {
        let params = PairingParams::new(n, q, 2, 20, 314, PairingVariant::LL);
        let records = pairing_experiment(&params).unwrap();
        assert_eq!(records.len(), 20);
        for r in &records {
            let dstar_n = r.norm_dstar_h_ln.unwrap();
            let grad_n = r.norm_grad_h_ln.unwrap();
            assert!(
                dstar_n <= grad_n * (1.0 + 1e-6),
                "n={n} q={q}: ‖d*h‖={dstar_n} vs ‖∇h‖={grad_n}"
            );
        }
    }
}
