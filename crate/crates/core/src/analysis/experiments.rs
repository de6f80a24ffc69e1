//! Seeded experiment drivers: div-curl ratio batches, duality pairing
//! batches, and a hill-climb search for near-extremal ratio instances.
//!
//! Trials are independent; they run in parallel and are merged by trial
//! index, so parallel and serial runs emit identical files.

use crate::analysis::grid::{
    gradient_lp_norm, lp_norm_of_form, sobolev_norm, DEFAULT_OVERSAMPLE, SOBOLEV_CONVENTION,
};
use crate::analysis::random::{
    mix_seed, random_closed, random_coclosed, random_form, seeded_rng,
};
use crate::error::{FormError, Result};
use crate::fourier::{d, dstar, l2_inner, FourierForm};
use crate::index_set::IndexSet;
use crate::solver::{solve_first_order, solve_odd, HodgeSystem};
use num::complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::{self, Write};

/// Default expected fraction of populated `(mode, index set)` slots in the
/// random generators; sparse instances keep cross-checks cheap.
pub const DEFAULT_DENSITY: f64 = 0.25;

/// One trial of a ratio or pairing experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    /// Per-trial derived seed (reproduces the trial in isolation).
    pub seed: u64,
    pub n: usize,
    pub q: i64,
    pub m: usize,
    pub bandwidth: i64,
    pub norm_f_l1: f64,
    pub norm_g_l1: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub norm_v_sobolev: Option<f64>,
    /// `‖v‖_{W^{2m,r}} / (‖f‖₁ + ‖g‖₁)` with `r = n/(n−1)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
    pub flag_q1: bool,
    pub flag_qn1: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairing_abs: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub norm_dstar_h_ln: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub norm_grad_h_ln: Option<f64>,
    /// Quadrature oversampling factor used for every non-`L²` norm.
    pub oversample: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioParams {
    pub n: usize,
    pub q: i64,
    pub m: usize,
    pub bandwidth: i64,
    pub trials: usize,
    pub seed: u64,
    pub density: f64,
    pub oversample: u32,
}

impl RatioParams {
    pub fn new(n: usize, q: i64, m: usize, bandwidth: i64, trials: usize, seed: u64) -> Self {
        RatioParams {
            n,
            q,
            m,
            bandwidth,
            trials,
            seed,
            density: DEFAULT_DENSITY,
            oversample: DEFAULT_OVERSAMPLE,
        }
    }

    /// Lebesgue exponent `r = n/(n−1)` of the div-curl estimate.
    pub fn lebesgue_exponent(&self) -> f64 {
        self.n as f64 / (self.n as f64 - 1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairingVariant {
    /// Right-hand side `‖f‖₁ · ‖∇h‖_{Lⁿ}`.
    LS,
    /// Right-hand side `‖f‖₁ · ‖d*h‖_{Lⁿ}`.
    LL,
}

impl std::str::FromStr for PairingVariant {
    type Err = FormError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "LS" => Ok(PairingVariant::LS),
            "LL" => Ok(PairingVariant::LL),
            other => Err(FormError::InvalidParameter(format!("unknown variant {other}"))),
        }
    }
}

impl std::fmt::Display for PairingVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PairingVariant::LS => write!(f, "LS"),
            PairingVariant::LL => write!(f, "LL"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairingParams {
    pub n: usize,
    pub q: i64,
    pub bandwidth: i64,
    pub trials: usize,
    pub seed: u64,
    pub variant: PairingVariant,
    pub density: f64,
    pub oversample: u32,
}

impl PairingParams {
    pub fn new(
        n: usize,
        q: i64,
        bandwidth: i64,
        trials: usize,
        seed: u64,
        variant: PairingVariant,
    ) -> Self {
        PairingParams {
            n,
            q,
            bandwidth,
            trials,
            seed,
            variant,
            density: DEFAULT_DENSITY,
            oversample: DEFAULT_OVERSAMPLE,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HillclimbParams {
    pub n: usize,
    pub q: i64,
    pub m: usize,
    pub bandwidth: i64,
    pub steps: usize,
    pub seed: u64,
    pub density: f64,
    pub oversample: u32,
}

impl HillclimbParams {
    pub fn new(n: usize, q: i64, m: usize, bandwidth: i64, steps: usize, seed: u64) -> Self {
        HillclimbParams {
            n,
            q,
            m,
            bandwidth,
            steps,
            seed,
            density: DEFAULT_DENSITY,
            oversample: DEFAULT_OVERSAMPLE,
        }
    }
}

fn check_ratio_params(p: &RatioParams) -> Result<()> {
    if p.n < 2 {
        return Err(FormError::InvalidParameter("ratio experiments need n ≥ 2".into()));
    }
    if p.q < 0 || p.q > p.n as i64 {
        return Err(FormError::InvalidParameter(format!("degree q={} outside 0..={}", p.q, p.n)));
    }
    if p.bandwidth < 1 {
        return Err(FormError::InvalidParameter("bandwidth must be ≥ 1".into()));
    }
    Ok(())
}

/// Solve one drawn system and compute its ratio record.
fn ratio_record(
    params: &RatioParams,
    trial_seed: u64,
    f: FourierForm<Complex64>,
    g: FourierForm<Complex64>,
) -> Result<ExperimentRecord> {
    let sys = HodgeSystem::new(params.n, params.q, params.m, f, g)?;
    let (v, report) = solve_odd(&sys)?;
    let r = params.lebesgue_exponent();
    let norm_f_l1 = lp_norm_of_form(sys.f(), 1.0, params.oversample)?;
    let norm_g_l1 = lp_norm_of_form(sys.g(), 1.0, params.oversample)?;
    let denom = norm_f_l1 + norm_g_l1;
    if denom <= 0.0 {
        return Err(FormError::InvalidParameter("degenerate trial: zero data".into()));
    }
    let sob = sobolev_norm(&v, 2 * params.m as u32, r, params.oversample)?;
    Ok(ExperimentRecord {
        seed: trial_seed,
        n: params.n,
        q: params.q,
        m: params.m,
        bandwidth: params.bandwidth,
        norm_f_l1,
        norm_g_l1,
        norm_v_sobolev: Some(sob),
        ratio: Some(sob / denom),
        flag_q1: report.flag_q1,
        flag_qn1: report.flag_qn1,
        pairing_abs: None,
        norm_dstar_h_ln: None,
        norm_grad_h_ln: None,
        oversample: params.oversample,
    })
}

fn run_ratio_trial(params: &RatioParams, trial: usize) -> Result<ExperimentRecord> {
    let trial_seed = mix_seed(params.seed, trial as u64);
    let mut rng = seeded_rng(trial_seed);
    let f = random_closed::<Complex64>(params.n, params.q + 1, params.bandwidth, params.density, &mut rng);
    let g = random_coclosed::<Complex64>(params.n, params.q - 1, params.bandwidth, params.density, &mut rng);
    ratio_record(params, trial_seed, f, g)
}

/// Draw `trials` random compatible systems, solve each, and record the
/// div-curl ratios `‖v‖_{W^{2m,r}} / (‖f‖₁+‖g‖₁)`. Failed trials are
/// dropped; the rest keep trial order.
pub fn divcurl_ratio_experiment(params: &RatioParams) -> Result<Vec<ExperimentRecord>> {
    check_ratio_params(params)?;
    let results: Vec<Result<ExperimentRecord>> = (0..params.trials)
        .into_par_iter()
        .map(|t| run_ratio_trial(params, t))
        .collect();
    Ok(results.into_iter().flatten().collect())
}

/// Every record's `□^m`-relation against the first-order solve of the same
/// data; used by verification to cross-check recorded trials.
pub fn recheck_box_relation(params: &RatioParams, trial_seed: u64) -> Result<bool> {
    let mut rng = seeded_rng(trial_seed);
    let f = random_closed::<Complex64>(params.n, params.q + 1, params.bandwidth, params.density, &mut rng);
    let g = random_coclosed::<Complex64>(params.n, params.q - 1, params.bandwidth, params.density, &mut rng);
    let sys = HodgeSystem::new(params.n, params.q, params.m, f, g)?;
    let (v, _) = solve_odd(&sys)?;
    let (u, _) = solve_first_order(&sys)?;
    Ok(crate::solver::relate_box_m(&v, &u, params.m))
}

fn run_pairing_trial(params: &PairingParams, trial: usize) -> Result<ExperimentRecord> {
    let n = params.n;
    let q = params.q;
    let trial_seed = mix_seed(params.seed, trial as u64);
    let mut rng = seeded_rng(trial_seed);

    // Direct side for 0 ≤ q ≤ n−2: closed f of degree q+1 against a test
    // form h of the same degree. For q ≥ 2 the adjoint-side inequality is
    // probed through the Hodge star, which carries it to the direct shape.
    let direct = q <= n as i64 - 2;
    let (f, h) = if direct {
        let f = nonzero_closed(n, q + 1, params, &mut rng)?;
        let h = nonconstant_form(n, q + 1, params, &mut rng)?;
        (f, h)
    } else if q >= 2 && q <= n as i64 {
        let g = nonzero_coclosed(n, q - 1, params, &mut rng)?;
        let h0 = nonconstant_form(n, q - 1, params, &mut rng)?;
        (g.hodge_star(), h0.hodge_star())
    } else {
        return Err(FormError::InvalidParameter(format!(
            "pairing needs 0 ≤ q ≤ n−2 or 2 ≤ q ≤ n; got q={q}, n={n}"
        )));
    };
    // f is closed by construction; in floats only up to round-off.
    debug_assert!(d(&f).l2_norm() <= 1e-12 * (1.0 + f.l2_norm()));

    let pairing_abs = l2_inner(&f, &h)?.norm();
    let ln = n as f64;
    let norm_f_l1 = lp_norm_of_form(&f, 1.0, params.oversample)?;
    let norm_dstar_h_ln = lp_norm_of_form(&dstar(&h), ln, params.oversample)?;
    let norm_grad_h_ln = gradient_lp_norm(&h, ln, params.oversample)?;
    Ok(ExperimentRecord {
        seed: trial_seed,
        n,
        q,
        m: 0,
        bandwidth: params.bandwidth,
        norm_f_l1,
        norm_g_l1: 0.0,
        norm_v_sobolev: None,
        ratio: None,
        flag_q1: false,
        flag_qn1: false,
        pairing_abs: Some(pairing_abs),
        norm_dstar_h_ln: Some(norm_dstar_h_ln),
        norm_grad_h_ln: Some(norm_grad_h_ln),
        oversample: params.oversample,
    })
}

fn nonzero_closed(
    n: usize,
    degree: i64,
    params: &PairingParams,
    rng: &mut ChaCha8Rng,
) -> Result<FourierForm<Complex64>> {
    let f = random_closed::<Complex64>(n, degree, params.bandwidth, params.density, rng);
    if f.is_zero() {
        return Err(FormError::InvalidParameter("no nonzero closed form drawn".into()));
    }
    Ok(f)
}

fn nonzero_coclosed(
    n: usize,
    degree: i64,
    params: &PairingParams,
    rng: &mut ChaCha8Rng,
) -> Result<FourierForm<Complex64>> {
    let g = random_coclosed::<Complex64>(n, degree, params.bandwidth, params.density, rng);
    if g.is_zero() {
        return Err(FormError::InvalidParameter("no nonzero coclosed form drawn".into()));
    }
    Ok(g)
}

fn nonconstant_form(
    n: usize,
    degree: i64,
    params: &PairingParams,
    rng: &mut ChaCha8Rng,
) -> Result<FourierForm<Complex64>> {
    for _ in 0..64 {
        let h = random_form::<Complex64>(n, degree, params.bandwidth, params.density, rng);
        if h.bandwidth() > 0 {
            return Ok(h);
        }
    }
    Err(FormError::InvalidParameter("no nonconstant test form drawn".into()))
}

/// Duality pairing batch: draws `(f, h)` pairs and records `|⟨f,h⟩|` with
/// both right-hand-side norms, so either variant's empirical constant can
/// be read off the same corpus.
pub fn pairing_experiment(params: &PairingParams) -> Result<Vec<ExperimentRecord>> {
    if params.n < 1 {
        return Err(FormError::InvalidParameter("pairing needs n ≥ 1".into()));
    }
    let direct_ok = params.q >= 0 && params.q <= params.n as i64 - 2;
    let dual_ok = params.q >= 2 && params.q <= params.n as i64;
    if !direct_ok && !dual_ok {
        return Err(FormError::InvalidParameter(format!(
            "pairing needs 0 ≤ q ≤ n−2 or 2 ≤ q ≤ n; got q={}, n={}",
            params.q, params.n
        )));
    }
    if params.bandwidth < 1 {
        return Err(FormError::InvalidParameter("bandwidth must be ≥ 1".into()));
    }
    let results: Vec<Result<ExperimentRecord>> = (0..params.trials)
        .into_par_iter()
        .map(|t| run_pairing_trial(params, t))
        .collect();
    results.into_iter().collect()
}

type SlotMap = BTreeMap<(Vec<i64>, IndexSet), Complex64>;

fn slots_to_form(n: usize, q: i64, slots: &SlotMap) -> FourierForm<Complex64> {
    FourierForm::from_coefficients(
        n,
        q,
        slots.iter().map(|((k, idx), c)| (k.clone(), idx.clone(), *c)),
    )
    .expect("slot map is consistent")
}

/// Hill-climb search for large div-curl ratios: random coordinate-wise
/// perturbations of the data potentials, accepting only improvements.
/// Returns one best-so-far record per step; the ratio is non-decreasing.
pub fn hillclimb_extremizer(params: &HillclimbParams) -> Result<Vec<ExperimentRecord>> {
    let ratio_params = RatioParams {
        n: params.n,
        q: params.q,
        m: params.m,
        bandwidth: params.bandwidth,
        trials: 0,
        seed: params.seed,
        density: params.density,
        oversample: params.oversample,
    };
    check_ratio_params(&ratio_params)?;
    if params.steps < 1 {
        return Err(FormError::InvalidParameter("hill climb needs at least one step".into()));
    }
    let n = params.n;
    let q = params.q;
    let mut rng = seeded_rng(params.seed);

    // Both data potentials have degree q: f = d a, g = d* b. A side is
    // active when its datum can be nonzero at all.
    let a_active = q < n as i64;
    let b_active = q > 0;

    let mut a: SlotMap = BTreeMap::new();
    let mut b: SlotMap = BTreeMap::new();
    let mut best = None;
    for _ in 0..1000 {
        if a_active {
            a = random_slots(n, q, params.bandwidth, params.density, &mut rng);
        }
        if b_active {
            b = random_slots(n, q, params.bandwidth, params.density, &mut rng);
        }
        best = evaluate(&ratio_params, params.seed, n, q, &a, &b);
        if best.is_some() {
            break;
        }
    }
    let mut best = best.ok_or_else(|| {
        FormError::InvalidParameter("could not seed the climb with admissible data".into())
    })?;

    let mut trajectory = vec![best.clone()];
    let a_sets = IndexSet::all(n, q);
    let b_sets = IndexSet::all(n, q);
    for _ in 1..params.steps {
        let perturb_a = if a_active && b_active { rng.gen_bool(0.5) } else { a_active };
        let (slots, sets) = if perturb_a { (&mut a, &a_sets) } else { (&mut b, &b_sets) };
        let k: Vec<i64> = (0..n).map(|_| rng.gen_range(-params.bandwidth..=params.bandwidth)).collect();
        let idx = sets[rng.gen_range(0..sets.len())].clone();
        let delta = Complex64::new(rng.gen_range(-0.35..0.35), rng.gen_range(-0.35..0.35));
        let key = (k, idx);
        let previous = slots.get(&key).copied();
        *slots.entry(key.clone()).or_insert(Complex64::new(0.0, 0.0)) += delta;
        match evaluate(&ratio_params, params.seed, n, q, &a, &b) {
            Some(candidate)
                if candidate.ratio.unwrap_or(0.0) > best.ratio.unwrap_or(0.0) =>
            {
                best = candidate;
            }
            _ => {
                // revert the move
                let (slots, _) = if perturb_a { (&mut a, ()) } else { (&mut b, ()) };
                match previous {
                    Some(old) => {
                        slots.insert(key, old);
                    }
                    None => {
                        slots.remove(&key);
                    }
                }
            }
        }
        trajectory.push(best.clone());
    }
    Ok(trajectory)
}

fn random_slots(
    n: usize,
    q: i64,
    bandwidth: i64,
    density: f64,
    rng: &mut ChaCha8Rng,
) -> SlotMap {
    let form = crate::analysis::random::random_mean_zero_form::<Complex64>(n, q, bandwidth, density, rng);
    form.coefficients()
        .map(|(mode, idx, c)| ((mode.components().to_vec(), idx.clone()), *c))
        .collect()
}

fn evaluate(
    params: &RatioParams,
    record_seed: u64,
    n: usize,
    q: i64,
    a: &SlotMap,
    b: &SlotMap,
) -> Option<ExperimentRecord> {
    let f = d(&slots_to_form(n, q, a));
    let g = dstar(&slots_to_form(n, q, b));
    if f.is_zero() && g.is_zero() {
        return None;
    }
    ratio_record(params, record_seed, f, g).ok()
}

/// Max and quantiles of a ratio batch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioSummary {
    pub count: usize,
    pub max_ratio: f64,
    pub median_ratio: f64,
    pub p90_ratio: f64,
    pub exceptional: usize,
}

pub fn ratio_summary(records: &[ExperimentRecord]) -> RatioSummary {
    let mut ratios: Vec<f64> = records.iter().filter_map(|r| r.ratio).collect();
    ratios.sort_by(|a, b| a.partial_cmp(b).expect("finite ratios"));
    let quantile = |p: f64| -> f64 {
        if ratios.is_empty() {
            return 0.0;
        }
        let pos = (p * (ratios.len() - 1) as f64).round() as usize;
        ratios[pos]
    };
    RatioSummary {
        count: records.len(),
        max_ratio: ratios.last().copied().unwrap_or(0.0),
        median_ratio: quantile(0.5),
        p90_ratio: quantile(0.9),
        exceptional: records.iter().filter(|r| r.flag_q1 || r.flag_qn1).count(),
    }
}

/// Empirical constants `sup |⟨f,h⟩| / RHS` over a pairing batch, for both
/// right-hand sides.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairingSummary {
    pub count: usize,
    pub sup_constant_ls: f64,
    pub sup_constant_ll: f64,
}

pub fn pairing_summary(records: &[ExperimentRecord]) -> PairingSummary {
    let mut ls: f64 = 0.0;
    let mut ll: f64 = 0.0;
    for r in records {
        let (Some(abs), Some(dstar_n), Some(grad_n)) =
            (r.pairing_abs, r.norm_dstar_h_ln, r.norm_grad_h_ln)
        else {
            continue;
        };
        let rhs_ls = r.norm_f_l1 * grad_n;
        let rhs_ll = r.norm_f_l1 * dstar_n;
        if rhs_ls > 0.0 {
            ls = ls.max(abs / rhs_ls);
        }
        if rhs_ll > 0.0 {
            ll = ll.max(abs / rhs_ll);
        }
    }
    PairingSummary { count: records.len(), sup_constant_ls: ls, sup_constant_ll: ll }
}

/// Fixed-schema CSV for ratio batches:
/// `seed,n,q,m,bandwidth,norm_f_l1,norm_g_l1,norm_v_sobolev,ratio,flag_q1,flag_qn1`.
pub fn write_ratio_csv<W: Write>(records: &[ExperimentRecord], out: &mut W) -> io::Result<()> {
    writeln!(out, "seed,n,q,m,bandwidth,norm_f_l1,norm_g_l1,norm_v_sobolev,ratio,flag_q1,flag_qn1")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.seed,
            r.n,
            r.q,
            r.m,
            r.bandwidth,
            r.norm_f_l1,
            r.norm_g_l1,
            r.norm_v_sobolev.unwrap_or(f64::NAN),
            r.ratio.unwrap_or(f64::NAN),
            r.flag_q1,
            r.flag_qn1
        )?;
    }
    Ok(())
}

/// CSV for pairing batches; the `rhs`/`empirical_constant` columns follow
/// the chosen variant, both norms are always present.
pub fn write_pairing_csv<W: Write>(
    records: &[ExperimentRecord],
    variant: PairingVariant,
    out: &mut W,
) -> io::Result<()> {
    writeln!(
        out,
        "seed,n,q,variant,bandwidth,pairing_abs,norm_f_l1,norm_dstar_h_ln,norm_grad_h_ln,rhs,empirical_constant"
    )?;
    for r in records {
        let abs = r.pairing_abs.unwrap_or(f64::NAN);
        let dstar_n = r.norm_dstar_h_ln.unwrap_or(f64::NAN);
        let grad_n = r.norm_grad_h_ln.unwrap_or(f64::NAN);
        let rhs = match variant {
            PairingVariant::LS => r.norm_f_l1 * grad_n,
            PairingVariant::LL => r.norm_f_l1 * dstar_n,
        };
        let constant = if rhs > 0.0 {
            abs / rhs
        } else if abs <= 1e-12 {
            0.0
        } else {
            f64::INFINITY
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.seed, r.n, r.q, variant, r.bandwidth, abs, r.norm_f_l1, dstar_n, grad_n, rhs, constant
        )?;
    }
    Ok(())
}

#[derive(Serialize)]
struct RatioEnvelope<'a> {
    params: &'a RatioParams,
    lebesgue_exponent: f64,
    sobolev_convention: &'static str,
    summary: RatioSummary,
    records: &'a [ExperimentRecord],
}

pub fn write_ratio_json<W: Write>(
    params: &RatioParams,
    records: &[ExperimentRecord],
    out: &mut W,
) -> io::Result<()> {
    let envelope = RatioEnvelope {
        params,
        lebesgue_exponent: params.lebesgue_exponent(),
        sobolev_convention: SOBOLEV_CONVENTION,
        summary: ratio_summary(records),
        records,
    };
    serde_json::to_writer_pretty(&mut *out, &envelope)?;
    writeln!(out)
}

#[derive(Serialize)]
struct PairingEnvelope<'a> {
    params: &'a PairingParams,
    summary: PairingSummary,
    records: &'a [ExperimentRecord],
}

pub fn write_pairing_json<W: Write>(
    params: &PairingParams,
    records: &[ExperimentRecord],
    out: &mut W,
) -> io::Result<()> {
    let envelope =
        PairingEnvelope { params, summary: pairing_summary(records), records };
    serde_json::to_writer_pretty(&mut *out, &envelope)?;
    writeln!(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_mode_ratio_is_one() {
        // f = i e^{ix₁}dx¹ (density 1, bandwidth 1 draws more; use the
        // worked instance directly): v = e^{ix₁}, all norms 1.
        let params = RatioParams::new(2, 0, 0, 1, 1, 1);
        let f = FourierForm::from_coefficients(
            2,
            1,
            [(vec![1, 0], IndexSet::new(2, &[1]).unwrap(), Complex64::new(0.0, 1.0))],
        )
        .unwrap();
        let g = FourierForm::zero(2, -1);
        let record = ratio_record(&params, 1, f.clone(), g.clone()).unwrap();
        assert!((record.ratio.unwrap() - 1.0).abs() < 1e-10);
        // m=1 on the same data: W^{2,2} norm of e^{ix₁} is 3
        let params_m1 = RatioParams::new(2, 0, 1, 1, 1, 1);
        let record_m1 = ratio_record(&params_m1, 1, f, g).unwrap();
        assert!((record_m1.ratio.unwrap() - 3.0).abs() < 1e-9, "{:?}", record_m1.ratio);
    }

    #[test]
    fn zero_trials_give_empty_batch() {
        let params = RatioParams::new(2, 0, 0, 1, 0, 1);
        assert!(divcurl_ratio_experiment(&params).unwrap().is_empty());
    }

    #[test]
    fn ratio_batches_are_deterministic() {
        let params = RatioParams::new(2, 0, 1, 2, 4, 99);
        let a = divcurl_ratio_experiment(&params).unwrap();
        let b = divcurl_ratio_experiment(&params).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 4);
        let mut csv_a = Vec::new();
        let mut csv_b = Vec::new();
        write_ratio_csv(&a, &mut csv_a).unwrap();
        write_ratio_csv(&b, &mut csv_b).unwrap();
        assert_eq!(csv_a, csv_b);
    }

    #[test]
    fn exceptional_flags_follow_degrees() {
        // n=3, q=1 with g ≠ 0 raises flag_q1
        let params = RatioParams::new(3, 1, 0, 1, 2, 5);
        let records = divcurl_ratio_experiment(&params).unwrap();
        assert!(!records.is_empty());
        assert!(records.iter().all(|r| r.flag_q1));
        // n=3, q=2 = n−1 with f ≠ 0 raises flag_qn1
        let params = RatioParams::new(3, 2, 0, 1, 2, 5);
        let records = divcurl_ratio_experiment(&params).unwrap();
        assert!(records.iter().all(|r| r.flag_qn1));
        // q=0 has no g, so no flags
        let params = RatioParams::new(3, 0, 0, 1, 2, 5);
        let records = divcurl_ratio_experiment(&params).unwrap();
        assert!(records.iter().all(|r| !r.flag_q1 && !r.flag_qn1));
    }

    #[test]
    fn invalid_degrees_rejected() {
        assert!(divcurl_ratio_experiment(&RatioParams::new(2, 3, 0, 1, 1, 1)).is_err());
        assert!(pairing_experiment(&PairingParams::new(2, 1, 1, 1, 1, PairingVariant::LL)).is_err());
        assert!(hillclimb_extremizer(&HillclimbParams::new(2, 5, 0, 1, 1, 1)).is_err());
    }

    #[test]
    fn pairing_direct_and_dual_sides() {
        // direct: n=3, q=0 (f of degree 1); dual: n=3, q=3 via Hodge star
        for q in [0, 3] {
            let params = PairingParams::new(3, q, 1, 3, 7, PairingVariant::LL);
            let records = pairing_experiment(&params).unwrap();
            assert_eq!(records.len(), 3);
            for r in &records {
                assert!(r.pairing_abs.is_some());
                assert!(r.norm_dstar_h_ln.unwrap() >= 0.0);
                assert!(r.norm_grad_h_ln.unwrap() > 0.0);
            }
        }
    }

    #[test]
    fn pairing_batches_are_deterministic() {
        let params = PairingParams::new(2, 0, 2, 3, 21, PairingVariant::LS);
        let a = pairing_experiment(&params).unwrap();
        let b = pairing_experiment(&params).unwrap();
        assert_eq!(a, b);
        let mut csv_a = Vec::new();
        write_pairing_csv(&a, params.variant, &mut csv_a).unwrap();
        let mut csv_b = Vec::new();
        write_pairing_csv(&b, params.variant, &mut csv_b).unwrap();
        assert_eq!(csv_a, csv_b);
    }

    #[test]
    fn hillclimb_trajectory_contract() {
        let params = HillclimbParams::new(2, 0, 0, 1, 1, 3);
        let single = hillclimb_extremizer(&params).unwrap();
        assert_eq!(single.len(), 1);

        let params = HillclimbParams::new(2, 0, 0, 1, 12, 3);
        let run = hillclimb_extremizer(&params).unwrap();
        assert_eq!(run.len(), 12);
        assert_eq!(run[0], single[0]);
        // best ratio is non-decreasing
        for pair in run.windows(2) {
            assert!(pair[1].ratio.unwrap() >= pair[0].ratio.unwrap());
        }
        // deterministic re-run
        assert_eq!(hillclimb_extremizer(&params).unwrap(), run);
    }

    #[test]
    fn summaries_report_extremes() {
        let params = RatioParams::new(2, 0, 0, 2, 8, 17);
        let records = divcurl_ratio_experiment(&params).unwrap();
        let summary = ratio_summary(&records);
        assert_eq!(summary.count, 8);
        assert!(summary.max_ratio >= summary.median_ratio);
        assert!(summary.max_ratio >= summary.p90_ratio);
        assert!(summary.max_ratio.is_finite());
    }
}
