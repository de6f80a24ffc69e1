//! `oddform solve`: read a system file, solve it, write the solution form
//! and its report.

use crate::error::CliError;
use crate::formfile::{Backend, FormFile, ScalarKind, SystemFile};
use oddform_core::solver::{solve_odd, HodgeSystem, SolveReport};
use std::fs;
use std::path::{Path, PathBuf};

/// Where the solve report lands for a given output path: the `.json`
/// extension (or none) is replaced by `.report.json`.
pub fn report_path(output: &Path) -> PathBuf {
    output.with_extension("report.json")
}

pub fn cmd_solve(input: &Path, output: &Path) -> Result<SolveReport, CliError> {
    let text = fs::read_to_string(input)?;
    let system: SystemFile = serde_json::from_str(&text)?;
    validate_shape(&system)?;

    let (solution_file, report) = match system.f.scalar {
        ScalarKind::Rational => {
            let f = system.f.to_fourier_exact()?;
            let g = system.g.to_fourier_exact()?;
            let sys = HodgeSystem::new(system.n, system.q, system.m, f, g)?;
            let (v, report) = solve_odd(&sys)?;
            (FormFile::from_fourier_exact(&v), report)
        }
        ScalarKind::Float => {
            let f = system.f.to_fourier_float()?;
            let g = system.g.to_fourier_float()?;
            let sys = HodgeSystem::new(system.n, system.q, system.m, f, g)?;
            let (v, report) = solve_odd(&sys)?;
            (FormFile::from_fourier_float(&v), report)
        }
    };

    if report.flag_q1 {
        eprintln!(
            "warning: q = 1 with g ≠ 0 — the L¹ bound is not asserted for this degree"
        );
    }
    if report.flag_qn1 {
        eprintln!(
            "warning: q = n−1 with f ≠ 0 — the L¹ bound is not asserted for this degree"
        );
    }

    fs::write(output, format!("{}\n", serde_json::to_string_pretty(&solution_file)?))?;
    fs::write(report_path(output), format!("{}\n", serde_json::to_string_pretty(&report)?))?;
    Ok(report)
}

fn validate_shape(system: &SystemFile) -> Result<(), CliError> {
    if system.f.backend != Backend::Fourier || system.g.backend != Backend::Fourier {
        return Err(CliError::Parse("solve expects fourier-backend forms".into()));
    }
    if system.f.scalar != system.g.scalar {
        return Err(CliError::Parse("f and g must share a scalar kind".into()));
    }
    if system.f.n != system.n || system.g.n != system.n {
        return Err(CliError::Parse("form dimensions do not match the system".into()));
    }
    if system.f.q != system.q + 1 {
        return Err(CliError::Parse(format!(
            "f must have degree q+1 = {}, found {}",
            system.q + 1,
            system.f.q
        )));
    }
    if system.g.q != system.q - 1 {
        return Err(CliError::Parse(format!(
            "g must have degree q−1 = {}, found {}",
            system.q - 1,
            system.g.q
        )));
    }
    Ok(())
}
