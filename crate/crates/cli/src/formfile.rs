//! JSON schemas for forms and Hodge systems.
//!
//! Rational scalars serialize as `"p/q"` strings so exactness survives the
//! file boundary; float scalars serialize as JSON numbers, which round-trip
//! bit-identically.

use num::bigint::BigInt;
use num::complex::Complex64;
use num::traits::{Signed, Zero};
use oddform_core::fourier::FourierForm;
use oddform_core::poly_form::PolyForm;
use oddform_core::scalar::{GaussRational, Rational};
use oddform_core::{AlgForm, IndexSet, Polynomial};
use serde::{Deserialize, Serialize};
use std::str::FromStr;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Poly,
    Fourier,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarKind {
    Rational,
    Float,
}

/// One scalar in a term record: a rational string or a float.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Num(f64),
    Str(String),
}

/// One term of a serialized form. Fourier terms carry `k`, `re`, `im`;
/// polynomial terms carry `alpha`, `coeff`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<u32>>,
    #[serde(rename = "I")]
    pub index_set: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub re: Option<ScalarRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<ScalarRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coeff: Option<String>,
}

/// A serialized form of either backend.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormFile {
    pub n: usize,
    pub q: i64,
    pub backend: Backend,
    pub scalar: ScalarKind,
    pub terms: Vec<TermRecord>,
}

/// A serialized Hodge system: degree-`q` data of order `2m+1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemFile {
    pub n: usize,
    pub q: i64,
    pub m: usize,
    pub f: FormFile,
    pub g: FormFile,
}

/// Parse `"p/q"` (or a bare integer) with a positive denominator.
pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let parse_int = |part: &str| {
        BigInt::from_str(part.trim())
            .map_err(|_| CliError::Parse(format!("bad rational component {part:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let den = parse_int(den)?;
            if !den.is_positive() {
                return Err(CliError::Parse(format!(
                    "rational {s:?} must have a positive denominator"
                )));
            }
            Ok(Rational::new(parse_int(num)?, den))
        }
    }
}

fn rational_to_string(r: &Rational) -> String {
    r.to_string()
}

fn scalar_repr_rational(repr: &ScalarRepr) -> Result<Rational, CliError> {
    match repr {
        ScalarRepr::Str(s) => parse_rational(s),
        ScalarRepr::Num(_) => {
            Err(CliError::Parse("rational scalar encoded as a float".into()))
        }
    }
}

fn scalar_repr_float(repr: &ScalarRepr) -> Result<f64, CliError> {
    match repr {
        ScalarRepr::Num(v) => Ok(*v),
        ScalarRepr::Str(_) => Err(CliError::Parse("float scalar encoded as a string".into())),
    }
}

impl FormFile {
    pub fn from_fourier_exact(form: &FourierForm<GaussRational>) -> Self {
        let terms = form
            .coefficients()
            .map(|(mode, idx, c)| TermRecord {
                k: Some(mode.components().to_vec()),
                alpha: None,
                index_set: idx.indices().to_vec(),
                re: Some(ScalarRepr::Str(rational_to_string(c.re()))),
                im: Some(ScalarRepr::Str(rational_to_string(c.im()))),
                coeff: None,
            })
            .collect();
        FormFile {
            n: form.ambient(),
            q: form.degree(),
            backend: Backend::Fourier,
            scalar: ScalarKind::Rational,
            terms,
        }
    }

    pub fn from_fourier_float(form: &FourierForm<Complex64>) -> Self {
        let terms = form
            .coefficients()
            .map(|(mode, idx, c)| TermRecord {
                k: Some(mode.components().to_vec()),
                alpha: None,
                index_set: idx.indices().to_vec(),
                re: Some(ScalarRepr::Num(c.re)),
                im: Some(ScalarRepr::Num(c.im)),
                coeff: None,
            })
            .collect();
        FormFile {
            n: form.ambient(),
            q: form.degree(),
            backend: Backend::Fourier,
            scalar: ScalarKind::Float,
            terms,
        }
    }

    pub fn from_poly(form: &PolyForm) -> Self {
        let n = form.ambient();
        let mut terms = Vec::new();
        for (idx, poly) in form.iter() {
            for (exps, coeff) in poly.iter() {
                let mut alpha = exps.clone();
                alpha.resize(n, 0);
                terms.push(TermRecord {
                    k: None,
                    alpha: Some(alpha),
                    index_set: idx.indices().to_vec(),
                    re: None,
                    im: None,
                    coeff: Some(rational_to_string(coeff)),
                });
            }
        }
        FormFile { n, q: form.degree(), backend: Backend::Poly, scalar: ScalarKind::Rational, terms }
    }

    fn index_set(&self, term: &TermRecord) -> Result<IndexSet, CliError> {
        IndexSet::new(self.n, &term.index_set)
            .map_err(|e| CliError::Parse(format!("bad index set: {e}")))
    }

    pub fn to_fourier_exact(&self) -> Result<FourierForm<GaussRational>, CliError> {
        self.expect_backend(Backend::Fourier, ScalarKind::Rational)?;
        let coeffs = self
            .terms
            .iter()
            .map(|t| {
                let k = t.k.clone().ok_or_else(|| missing("k"))?;
                let re = scalar_repr_rational(t.re.as_ref().ok_or_else(|| missing("re"))?)?;
                let im = scalar_repr_rational(t.im.as_ref().ok_or_else(|| missing("im"))?)?;
                Ok((k, self.index_set(t)?, GaussRational::new(re, im)))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        FourierForm::from_coefficients(self.n, self.q, coeffs)
            .map_err(|e| CliError::Parse(format!("inconsistent form: {e}")))
    }

    pub fn to_fourier_float(&self) -> Result<FourierForm<Complex64>, CliError> {
        self.expect_backend(Backend::Fourier, ScalarKind::Float)?;
        let coeffs = self
            .terms
            .iter()
            .map(|t| {
                let k = t.k.clone().ok_or_else(|| missing("k"))?;
                let re = scalar_repr_float(t.re.as_ref().ok_or_else(|| missing("re"))?)?;
                let im = scalar_repr_float(t.im.as_ref().ok_or_else(|| missing("im"))?)?;
                Ok((k, self.index_set(t)?, Complex64::new(re, im)))
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        FourierForm::from_coefficients(self.n, self.q, coeffs)
            .map_err(|e| CliError::Parse(format!("inconsistent form: {e}")))
    }

    pub fn to_poly(&self) -> Result<PolyForm, CliError> {
        self.expect_backend(Backend::Poly, ScalarKind::Rational)?;
        let mut form = PolyForm::zero(self.n, self.q);
        for t in &self.terms {
            let alpha = t.alpha.clone().ok_or_else(|| missing("alpha"))?;
            if alpha.len() != self.n {
                return Err(CliError::Parse(format!(
                    "alpha length {} does not match n={}",
                    alpha.len(),
                    self.n
                )));
            }
            let coeff = parse_rational(t.coeff.as_deref().ok_or_else(|| missing("coeff"))?)?;
            if coeff.is_zero() {
                continue;
            }
            let poly = Polynomial::monomial(alpha, coeff);
            let term = AlgForm::from_terms(self.n, self.q, [(self.index_set(t)?, poly)])
                .map_err(|e| CliError::Parse(format!("inconsistent form: {e}")))?;
            form = form.add(&term);
        }
        Ok(form)
    }

    fn expect_backend(&self, backend: Backend, scalar: ScalarKind) -> Result<(), CliError> {
        if self.backend != backend || self.scalar != scalar {
            return Err(CliError::Parse(format!(
                "expected {backend:?}/{scalar:?} form, found {:?}/{:?}",
                self.backend, self.scalar
            )));
        }
        Ok(())
    }
}

fn missing(field: &str) -> CliError {
    CliError::Parse(format!("term record is missing the {field:?} field"))
}
