//! Experiment subcommands: `ratio`, `pairing`, `extremize`.

use crate::error::CliError;
use oddform_core::analysis::{
    divcurl_ratio_experiment, hillclimb_extremizer, pairing_experiment, pairing_summary,
    ratio_summary, write_pairing_csv, write_pairing_json, write_ratio_csv, write_ratio_json,
    HillclimbParams, PairingParams, RatioParams, SOBOLEV_CONVENTION,
};
use std::fs;
use std::path::Path;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

pub fn cmd_ratio(params: &RatioParams, format: OutputFormat, output: &Path) -> Result<(), CliError> {
    let records = divcurl_ratio_experiment(params)?;
    let mut buf = Vec::new();
    match format {
        OutputFormat::Csv => write_ratio_csv(&records, &mut buf)?,
        OutputFormat::Json => write_ratio_json(params, &records, &mut buf)?,
    }
    fs::write(output, &buf)?;
    let summary = ratio_summary(&records);
    println!(
        "ratio n={} q={} m={} bandwidth={} trials={}: max={} median={} p90={} exceptional={} \
         (r={}, sobolev: {})",
        params.n,
        params.q,
        params.m,
        params.bandwidth,
        summary.count,
        summary.max_ratio,
        summary.median_ratio,
        summary.p90_ratio,
        summary.exceptional,
        params.lebesgue_exponent(),
        SOBOLEV_CONVENTION
    );
    Ok(())
}

pub fn cmd_pairing(
    params: &PairingParams,
    format: OutputFormat,
    output: &Path,
) -> Result<(), CliError> {
    let records = pairing_experiment(params)?;
    let mut buf = Vec::new();
    match format {
        OutputFormat::Csv => write_pairing_csv(&records, params.variant, &mut buf)?,
        OutputFormat::Json => write_pairing_json(params, &records, &mut buf)?,
    }
    fs::write(output, &buf)?;
    let summary = pairing_summary(&records);
    println!(
        "pairing n={} q={} variant={} bandwidth={} trials={}: sup_constant_ls={} sup_constant_ll={}",
        params.n,
        params.q,
        params.variant,
        params.bandwidth,
        summary.count,
        summary.sup_constant_ls,
        summary.sup_constant_ll
    );
    Ok(())
}

pub fn cmd_extremize(
    params: &HillclimbParams,
    format: OutputFormat,
    output: &Path,
) -> Result<(), CliError> {
    let trajectory = hillclimb_extremizer(params)?;
    let mut buf = Vec::new();
    match format {
        OutputFormat::Csv => write_ratio_csv(&trajectory, &mut buf)?,
        OutputFormat::Json => {
            let as_ratio = RatioParams {
                n: params.n,
                q: params.q,
                m: params.m,
                bandwidth: params.bandwidth,
                trials: params.steps,
                seed: params.seed,
                density: params.density,
                oversample: params.oversample,
            };
            write_ratio_json(&as_ratio, &trajectory, &mut buf)?
        }
    }
    fs::write(output, &buf)?;
    let best = trajectory.last().and_then(|r| r.ratio).unwrap_or(0.0);
    println!(
        "extremize n={} q={} m={} bandwidth={} steps={}: best ratio {}",
        params.n, params.q, params.m, params.bandwidth, params.steps, best
    );
    Ok(())
}
