//! `oddform verify`: run the exact identity suites of both backends and
//! report one line per identity, plus the determined sign tables.

use crate::error::CliError;
use crate::formfile::FormFile;
use num::traits::Zero;
use oddform_core::analysis::{
    random_alg_form, random_form, random_mean_zero_form, random_poly_form, random_rational,
    random_rational_isometry, random_signed_permutation_map, random_torus_isometry, seeded_rng,
    SampleScalar,
};
use oddform_core::fourier::{self, FourierForm};
use oddform_core::poly_form::{self, AffineMap, PolyForm};
use oddform_core::scalar::{GaussRational, Rational};
use oddform_core::{FourierScalar, IndexSet, Polynomial};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::io::Write;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub n: usize,
    pub max_q: i64,
    pub max_m: usize,
    pub trials: usize,
    pub seed: u64,
}

struct Failure {
    message: String,
    witness: Option<String>,
}

impl Failure {
    fn new(message: impl Into<String>) -> Self {
        Failure { message: message.into(), witness: None }
    }

    fn with_poly(message: impl Into<String>, form: &PolyForm) -> Self {
        Failure {
            message: message.into(),
            witness: serde_json::to_string(&FormFile::from_poly(form)).ok(),
        }
    }

    fn with_fourier(message: impl Into<String>, form: &FourierForm<GaussRational>) -> Self {
        Failure {
            message: message.into(),
            witness: serde_json::to_string(&FormFile::from_fourier_exact(form)).ok(),
        }
    }
}

struct Reporter<'a, W: Write> {
    out: &'a mut W,
    failures: usize,
    first_witness: Option<String>,
}

impl<'a, W: Write> Reporter<'a, W> {
    fn check(&mut self, name: &str, result: Result<(), Failure>) -> std::io::Result<()> {
        match result {
            Ok(()) => writeln!(self.out, "ok    {name}"),
            Err(failure) => {
                self.failures += 1;
                if self.first_witness.is_none() {
                    self.first_witness = failure.witness;
                }
                writeln!(self.out, "FAIL  {name}: {}", failure.message)
            }
        }
    }
}

fn degrees(cfg: &VerifyConfig) -> Vec<i64> {
    (0..=cfg.max_q.min(cfg.n as i64)).collect()
}

/// Run every identity suite; returns `true` when all pass. The first
/// failing witness, if any, is serialized to stderr.
pub fn cmd_verify<W: Write>(cfg: &VerifyConfig, out: &mut W) -> Result<bool, CliError> {
    if cfg.n < 1 {
        return Err(CliError::Usage("verify needs n ≥ 1".into()));
    }
    let mut rng = seeded_rng(cfg.seed);
    let mut reporter = Reporter { out, failures: 0, first_witness: None };

    reporter.check("core: ** = (−1)^{q(n−q)}", star_star(cfg, &mut rng))?;
    reporter.check("core: wedge graded commutativity", wedge_commutativity(cfg, &mut rng))?;
    reporter.check("core: ⟨ω,η⟩ = vol coeff of ω∧*η", inner_vs_wedge_star(cfg, &mut rng))?;
    reporter.check("core: (k⌟)² = 0", interior_squares(cfg, &mut rng))?;

    reporter.check("poly: d∘d = 0", poly_nilpotent(cfg, &mut rng, |w| poly_form::d(&poly_form::d(w))))?;
    reporter.check(
        "poly: d*∘d* = 0",
        poly_nilpotent(cfg, &mut rng, |w| poly_form::dstar(&poly_form::dstar(w))),
    )?;
    for m in 0..=cfg.max_m {
        reporter.check(
            &format!("poly: S∘S = 0 (order {})", 2 * m + 1),
            poly_nilpotent(cfg, &mut rng, move |w| poly_form::s_odd(m, &poly_form::s_odd(m, w))),
        )?;
        reporter.check(
            &format!("poly: d∘S = 0 (order {})", 2 * m + 1),
            poly_nilpotent(cfg, &mut rng, move |w| poly_form::d(&poly_form::s_odd(m, w))),
        )?;
        reporter.check(
            &format!("poly: S*∘S* = 0 (order {})", 2 * m + 1),
            poly_nilpotent(cfg, &mut rng, move |w| {
                poly_form::s_odd_star(m, &poly_form::s_odd_star(m, w))
            }),
        )?;
        reporter.check(
            &format!("poly: d*∘S* = 0 (order {})", 2 * m + 1),
            poly_nilpotent(cfg, &mut rng, move |w| {
                poly_form::dstar(&poly_form::s_odd_star(m, w))
            }),
        )?;
    }

    let (star_relation, table) = dstar_star_relation(cfg, &mut rng);
    reporter.check("poly: d* = s(n,q)·(*d*), sign stable", star_relation)?;
    writeln!(reporter.out, "      s(n={}, q): {:?}", cfg.n, table)?;

    reporter.check("poly: ψ*∘d = d∘ψ* for all affine ψ", d_affine_equivariance(cfg, &mut rng))?;
    reporter.check(
        "poly: ψ*∘Op = Op∘ψ* for isometries, Op ∈ {d*, S, S*}",
        isometry_equivariance(cfg, &mut rng),
    )?;
    reporter.check(
        "poly: d* equivariance fails for diag(2,1,…) (witness)",
        non_isometry_witness(cfg),
    )?;

    reporter.check("fourier: d∘d = 0", fourier_nilpotent(cfg, &mut rng, |w| fourier::d(&fourier::d(w))))?;
    reporter.check(
        "fourier: d*∘d* = 0",
        fourier_nilpotent(cfg, &mut rng, |w| fourier::dstar(&fourier::dstar(w))),
    )?;
    for m in 0..=cfg.max_m {
        reporter.check(
            &format!("fourier: S∘S = 0 (order {})", 2 * m + 1),
            fourier_nilpotent(cfg, &mut rng, move |w| fourier::s_odd(m, &fourier::s_odd(m, w))),
        )?;
        reporter.check(
            &format!("fourier: d∘S = 0 (order {})", 2 * m + 1),
            fourier_nilpotent(cfg, &mut rng, move |w| fourier::d(&fourier::s_odd(m, w))),
        )?;
        reporter.check(
            &format!("fourier: d*∘S* = 0 (order {})", 2 * m + 1),
            fourier_nilpotent(cfg, &mut rng, move |w| {
                fourier::dstar(&fourier::s_odd_star(m, w))
            }),
        )?;
    }
    reporter.check("fourier: □ = dd* + d*d", laplacian_composition(cfg, &mut rng))?;
    reporter.check("fourier: (□ˢ)⁻¹ two-sided on mean-zero, s ≤ 3", inverse_roundtrip(cfg, &mut rng))?;
    reporter.check("fourier: ⟨dω,η⟩ = ⟨ω,d*η⟩", adjointness(cfg, &mut rng))?;
    reporter.check("fourier: ‖dh‖²+‖d*h‖² = ⟨□h,h⟩ = ‖∇h‖²", energy_identity(cfg, &mut rng))?;
    reporter.check("fourier: single mode S = |k|^{2m}·d", single_mode_collapse(cfg, &mut rng))?;
    reporter.check(
        "fourier: ψ*∘Op = Op∘ψ* for torus isometries",
        torus_equivariance(cfg, &mut rng),
    )?;

    if reporter.failures > 0 {
        if let Some(witness) = &reporter.first_witness {
            eprintln!("first failing witness: {witness}");
        }
        writeln!(reporter.out, "{} identities FAILED", reporter.failures)?;
        Ok(false)
    } else {
        writeln!(reporter.out, "all identities hold exactly")?;
        Ok(true)
    }
}

fn star_star(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(), Failure> {
    for q in degrees(cfg) {
        for _ in 0..cfg.trials {
            let f = random_alg_form(cfg.n, q, rng);
            let twice = f.hodge_star().hodge_star();
            let expect = if (q * (cfg.n as i64 - q)) % 2 == 0 { f.clone() } else { f.neg() };
            if twice != expect {
                return Err(Failure::new(format!("failed at q={q}")));
            }
        }
    }
    Ok(())
}

fn wedge_commutativity(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(), Failure> {
    for p in degrees(cfg) {
        for q in degrees(cfg) {
            for _ in 0..cfg.trials {
                let a = random_alg_form(cfg.n, p, rng);
                let b = random_alg_form(cfg.n, q, rng);
                let ab = a.wedge(&b).expect("same ambient");
                let ba = b.wedge(&a).expect("same ambient");
                let expect = if (p * q) % 2 == 0 { ba } else { ba.neg() };
                if ab != expect {
                    return Err(Failure::new(format!("failed at p={p} q={q}")));
                }
            }
        }
    }
    Ok(())
}

fn inner_vs_wedge_star(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(), Failure> {
    for q in degrees(cfg) {
        for _ in 0..cfg.trials {
            let a = random_alg_form(cfg.n, q, rng);
            let b = random_alg_form(cfg.n, q, rng);
            let inner = a.pointwise_inner(&b).expect("same degree");
            let vol = a
                .wedge(&b.hodge_star())
                .expect("same ambient")
                .volume_coeff()
                .cloned()
                .unwrap_or_else(Rational::zero);
            if inner != vol {
                return Err(Failure::new(format!("failed at q={q}")));
            }
        }
    }
    Ok(())
}

fn interior_squares(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(), Failure> {
    for q in degrees(cfg) {
        if q < 2 {
            continue;
        }
        for _ in 0..cfg.trials {
            let f = random_alg_form(cfg.n, q, rng);
            let k: Vec<Rational> = (0..cfg.n).map(|_| random_rational(rng)).collect();
            let twice = f
                .interior(&k)
                .expect("degree ≥ 2")
                .interior(&k)
                .expect("degree ≥ 1");
            if !twice.is_zero() {
                return Err(Failure::new(format!("failed at q={q}")));
            }
        }
    }
    Ok(())
}

fn draw_poly(cfg: &VerifyConfig, q: i64, rng: &mut ChaCha8Rng) -> PolyForm {
    random_poly_form(cfg.n, q, 3, 3, 0.8, rng)
}

fn poly_nilpotent(
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
    op: impl Fn(&PolyForm) -> PolyForm,
) -> Result<(), Failure> {
    for q in degrees(cfg) {
        for _ in 0..cfg.trials {
            let omega = draw_poly(cfg, q, rng);
            if !op(&omega).is_zero() {
                return Err(Failure::with_poly(format!("nonzero composite at q={q}"), &omega));
            }
        }
    }
    Ok(())
}

fn dstar_star_relation(
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
) -> (Result<(), Failure>, BTreeMap<i64, i64>) {
    let mut table = BTreeMap::new();
    for q in degrees(cfg) {
        if q == 0 {
            continue;
        }
        for _ in 0..cfg.trials {
            let omega = draw_poly(cfg, q, rng);
            let lhs = poly_form::dstar(&omega);
            let rhs = poly_form::d(&omega.hodge_star()).hodge_star();
            let sign = if lhs.is_zero() && rhs.is_zero() {
                continue;
            } else if lhs == rhs {
                1
            } else if lhs == rhs.neg() {
                -1
            } else {
                return (
                    (Err(Failure::with_poly(format!("d* is not ±*d* at q={q}"), &omega))),
                    table,
                );
            };
            if let Some(prev) = table.insert(q, sign) {
                if prev != sign {
                    return (
                        Err(Failure::with_poly(format!("sign unstable at q={q}"), &omega)),
                        table,
                    );
                }
            }
        }
    }
    (Ok(()), table)
}

fn d_affine_equivariance(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(), Failure> {
    for q in degrees(cfg) {
        for trial in 0..cfg.trials {
            // alternate isometries with a plain invertible map
            let psi = if trial % 2 == 0 {
                random_rational_isometry(cfg.n, rng)
            } else {
                random_invertible(cfg.n, rng)
            };
            let omega = draw_poly(cfg, q, rng);
            let lhs = poly_form::pullback(&psi, &poly_form::d(&omega)).expect("same ambient");
            let rhs = poly_form::d(&poly_form::pullback(&psi, &omega).expect("same ambient"));
            if lhs != rhs {
                return Err(Failure::with_poly(format!("failed at q={q}"), &omega));
            }
        }
    }
    Ok(())
}

fn random_invertible(n: usize, rng: &mut ChaCha8Rng) -> AffineMap {
    // a random triangular perturbation of a signed permutation is invertible
    let base = random_signed_permutation_map(n, rng);
    let mut matrix = base.matrix().to_vec();
    for i in 0..n {
        for j in i + 1..n {
            matrix[i][j] += random_rational(rng);
        }
    }
    let offset: Vec<Rational> = (0..n).map(|_| random_rational(rng)).collect();
    AffineMap::new(matrix, offset).unwrap_or(base)
}

fn isometry_equivariance(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(), Failure> {
    for q in degrees(cfg) {
        for _ in 0..cfg.trials.min(6) {
            let psi = random_rational_isometry(cfg.n, rng);
            let omega = draw_poly(cfg, q, rng);
            let pull = |w: &PolyForm| poly_form::pullback(&psi, w).expect("same ambient");
            if pull(&poly_form::dstar(&omega)) != poly_form::dstar(&pull(&omega)) {
                return Err(Failure::with_poly(format!("d* failed at q={q}"), &omega));
            }
            for m in 1..=cfg.max_m.min(2) {
                if pull(&poly_form::s_odd(m, &omega)) != poly_form::s_odd(m, &pull(&omega)) {
                    return Err(Failure::with_poly(format!("S failed at q={q} m={m}"), &omega));
                }
                if pull(&poly_form::s_odd_star(m, &omega))
                    != poly_form::s_odd_star(m, &pull(&omega))
                {
                    return Err(Failure::with_poly(format!("S* failed at q={q} m={m}"), &omega));
                }
            }
        }
    }
    Ok(())
}

fn non_isometry_witness(cfg: &VerifyConfig) -> Result<(), Failure> {
    if cfg.trials == 0 {
        return Ok(());
    }
    let mut entries = vec![Rational::from_integer(1.into()); cfg.n];
    entries[0] = Rational::from_integer(2.into());
    let psi = AffineMap::diagonal(entries, vec![Rational::zero(); cfg.n])
        .expect("diagonal is invertible");
    let omega = PolyForm::basis(IndexSet::new(cfg.n, &[1]).expect("axis 1"))
        .scale(&Polynomial::var(1));
    let lhs = poly_form::pullback(&psi, &poly_form::dstar(&omega)).expect("same ambient");
    let rhs = poly_form::dstar(&poly_form::pullback(&psi, &omega).expect("same ambient"));
    if lhs == rhs {
        return Err(Failure::with_poly(
            "diag(2,1,…) unexpectedly commutes with d*",
            &omega,
        ));
    }
    Ok(())
}

fn draw_fourier(cfg: &VerifyConfig, q: i64, rng: &mut ChaCha8Rng) -> FourierForm<GaussRational> {
    let bandwidth = if cfg.n >= 4 { 1 } else { 2 };
    random_form::<GaussRational>(cfg.n, q, bandwidth, 0.5, rng)
}

fn fourier_nilpotent(
    cfg: &VerifyConfig,
    rng: &mut ChaCha8Rng,
    op: impl Fn(&FourierForm<GaussRational>) -> FourierForm<GaussRational>,
) -> Result<(), Failure> {
    for q in degrees(cfg) {
        for _ in 0..cfg.trials {
            let omega = draw_fourier(cfg, q, rng);
            if !op(&omega).is_zero() {
                return Err(Failure::with_fourier(format!("nonzero composite at q={q}"), &omega));
            }
        }
    }
    Ok(())
}

fn laplacian_composition(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(), Failure> {
    for q in degrees(cfg) {
        for _ in 0..cfg.trials {
            let omega = draw_fourier(cfg, q, rng);
            let composed =
                fourier::d(&fourier::dstar(&omega)).add(&fourier::dstar(&fourier::d(&omega)));
            if fourier::laplacian(&omega) != composed {
                return Err(Failure::with_fourier(format!("failed at q={q}"), &omega));
            }
        }
    }
    Ok(())
}

fn inverse_roundtrip(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(), Failure> {
    for q in degrees(cfg) {
        for _ in 0..cfg.trials {
            let omega = random_mean_zero_form::<GaussRational>(cfg.n, q, 2, 0.5, rng);
            for s in 1..=3u32 {
                let mut forward = omega.clone();
                for _ in 0..s {
                    forward = fourier::laplacian(&forward);
                }
                match fourier::laplacian_inverse_power(s, &forward) {
                    Ok(back) if back == omega => {}
                    _ => return Err(Failure::with_fourier(format!("left inverse failed, s={s}"), &omega)),
                }
                let Ok(inverted) = fourier::laplacian_inverse_power(s, &omega) else {
                    return Err(Failure::with_fourier(format!("inversion failed, s={s}"), &omega));
                };
                let mut back = inverted;
                for _ in 0..s {
                    back = fourier::laplacian(&back);
                }
                if back != omega {
                    return Err(Failure::with_fourier(format!("right inverse failed, s={s}"), &omega));
                }
            }
        }
    }
    Ok(())
}

fn adjointness(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(), Failure> {
    for q in degrees(cfg) {
        if q >= cfg.n as i64 {
            continue;
        }
        for _ in 0..cfg.trials {
            let omega = draw_fourier(cfg, q, rng);
            let eta = draw_fourier(cfg, q + 1, rng);
            let lhs = fourier::l2_inner(&fourier::d(&omega), &eta).expect("degrees match");
            let rhs = fourier::l2_inner(&omega, &fourier::dstar(&eta)).expect("degrees match");
            if lhs != rhs {
                return Err(Failure::with_fourier(format!("failed at q={q}"), &omega));
            }
        }
    }
    Ok(())
}

fn energy_identity(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(), Failure> {
    for q in degrees(cfg) {
        for _ in 0..cfg.trials {
            let h = draw_fourier(cfg, q, rng);
            let dh = fourier::d(&h);
            let dsh = fourier::dstar(&h);
            let energy = fourier::l2_inner(&dh, &dh).expect("same degree")
                + fourier::l2_inner(&dsh, &dsh).expect("same degree");
            let box_pairing =
                fourier::l2_inner(&fourier::laplacian(&h), &h).expect("same degree");
            let mut grad = GaussRational::zero();
            for j in 0..cfg.n {
                let mut beta = vec![0u32; cfg.n];
                beta[j] = 1;
                let dj = fourier::deriv_multi(&beta, &h);
                grad = grad + fourier::l2_inner(&dj, &dj).expect("same degree");
            }
            if energy != box_pairing || energy != grad {
                return Err(Failure::with_fourier(format!("failed at q={q}"), &h));
            }
        }
    }
    Ok(())
}

fn single_mode_collapse(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(), Failure> {
    for q in degrees(cfg) {
        let sets = IndexSet::all(cfg.n, q);
        if sets.is_empty() {
            continue;
        }
        for _ in 0..cfg.trials {
            let k: Vec<i64> = (0..cfg.n).map(|_| rng.gen_range(-3..=3)).collect();
            let idx = sets[rng.gen_range(0..sets.len())].clone();
            let omega = FourierForm::from_coefficients(
                cfg.n,
                q,
                [(k.clone(), idx, GaussRational::sample(rng))],
            )
            .expect("single term");
            let norm_sq: i64 = k.iter().map(|c| c * c).sum();
            for m in 0..=cfg.max_m {
                let factor = GaussRational::from_int(norm_sq.pow(m as u32));
                if fourier::s_odd(m, &omega) != fourier::d(&omega).scale(&factor)
                    || fourier::s_odd_star(m, &omega) != fourier::dstar(&omega).scale(&factor)
                {
                    return Err(Failure::with_fourier(format!("failed at q={q} m={m}"), &omega));
                }
            }
        }
    }
    Ok(())
}

fn torus_equivariance(cfg: &VerifyConfig, rng: &mut ChaCha8Rng) -> Result<(), Failure> {
    for q in degrees(cfg) {
        for _ in 0..cfg.trials.min(8) {
            let psi = random_torus_isometry(cfg.n, rng);
            let omega = draw_fourier(cfg, q, rng);
            let pull = |w: &FourierForm<GaussRational>| {
                fourier::pullback_isometry(&psi, w).expect("exact phases")
            };
            if pull(&fourier::d(&omega)) != fourier::d(&pull(&omega)) {
                return Err(Failure::with_fourier(format!("d failed at q={q}"), &omega));
            }
            if pull(&fourier::dstar(&omega)) != fourier::dstar(&pull(&omega)) {
                return Err(Failure::with_fourier(format!("d* failed at q={q}"), &omega));
            }
            for m in 1..=cfg.max_m.min(2) {
                if pull(&fourier::s_odd(m, &omega)) != fourier::s_odd(m, &pull(&omega))
                    || pull(&fourier::s_odd_star(m, &omega))
                        != fourier::s_odd_star(m, &pull(&omega))
                {
                    return Err(Failure::with_fourier(format!("S failed at q={q} m={m}"), &omega));
                }
            }
        }
    }
    Ok(())
}
