//! Exact differential calculus on forms with polynomial coefficients:
//! `d`, `d*`, the odd-order operators `d(d*d)^m` and `(d*d)^m d*`, and
//! pullback by rational affine maps.
//!
//! Everything here is exact; this backend exists for identity and
//! equivariance checks where floating point would prove nothing.

use crate::algebra::AlgForm;
use crate::error::{FormError, Result};
use crate::index_set::{merge_sign, IndexSet};
use crate::poly::Polynomial;
use crate::scalar::Rational;
use num::traits::{One, Zero};

/// A differential form with multivariate rational-polynomial coefficients.
pub type PolyForm = AlgForm<Polynomial>;

/// Exterior derivative `dω = Σ_j ∂_j(ω_I) dx^j ∧ dx^I`.
pub fn d(omega: &PolyForm) -> PolyForm {
    let n = omega.ambient();
    let mut out = PolyForm::zero(n, omega.degree() + 1);
    for (idx, coeff) in omega.iter() {
        for j in 1..=n {
            let dj = coeff.partial(j);
            if dj.is_zero() {
                continue;
            }
            let dxj = IndexSet::new(n, &[j]).expect("axis in range");
            if let Some((sign, merged)) = merge_sign(&dxj, idx).expect("same ambient") {
                let term = if sign < 0 { -dj } else { dj };
                out = out.add(&PolyForm::from_terms(n, merged.degree() as i64, [(merged, term)])
                    .expect("consistent degree"));
            }
        }
    }
    out
}

/// Codifferential by the coordinate formula `d*ω = −Σ_j ∂_j (e_j ⌟ ω)`.
///
/// This is the definition; the relation to `±*d*` is a verified fact with a
/// recorded sign table, not an input.
pub fn dstar(omega: &PolyForm) -> PolyForm {
    let n = omega.ambient();
    let q = omega.degree();
    let mut out = PolyForm::zero(n, q - 1);
    if q < 1 {
        return out;
    }
    for (idx, coeff) in omega.iter() {
        for (pos, &axis) in idx.indices().iter().enumerate() {
            let dj = coeff.partial(axis);
            if dj.is_zero() {
                continue;
            }
            // −(−1)^pos ∂_axis(ω_I) at I \ {axis}
            let term = if pos % 2 == 0 { -dj } else { dj };
            let reduced = idx.without_position(pos);
            out = out.add(&PolyForm::from_terms(n, q - 1, [(reduced, term)])
                .expect("consistent degree"));
        }
    }
    out
}

/// The odd-order operator `d (d*d)^m`, of order `2m+1`; `m = 0` is `d`.
pub fn s_odd(m: usize, omega: &PolyForm) -> PolyForm {
    let mut acc = omega.clone();
    for _ in 0..m {
        acc = dstar(&d(&acc));
    }
    d(&acc)
}

/// The adjoint-side operator `(d*d)^m d*`; `m = 0` is `d*`.
pub fn s_odd_star(m: usize, omega: &PolyForm) -> PolyForm {
    let mut acc = dstar(omega);
    for _ in 0..m {
        acc = dstar(&d(&acc));
    }
    acc
}

/// An invertible rational affine map `x ↦ Ax + b`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineMap {
    matrix: Vec<Vec<Rational>>,
    offset: Vec<Rational>,
    is_isometry: bool,
}

impl AffineMap {
    /// Build from a row-major `n×n` matrix and an offset of length `n`.
    /// Fails on non-square or singular input.
    pub fn new(matrix: Vec<Vec<Rational>>, offset: Vec<Rational>) -> Result<Self> {
        let n = matrix.len();
        if offset.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(FormError::InvalidParameter(
                "affine map needs a square matrix and a matching offset".into(),
            ));
        }
        if !is_invertible(&matrix) {
            return Err(FormError::SingularMatrix);
        }
        let is_isometry = is_orthogonal(&matrix);
        Ok(AffineMap { matrix, offset, is_isometry })
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        AffineMap { matrix, offset: vec![Rational::zero(); n], is_isometry: true }
    }

    /// `ψ(x)_i = sign_i · x_{perm_i}` plus offset; `perm` is 1-based.
    pub fn signed_permutation(perm: &[usize], signs: &[i8], offset: Vec<Rational>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n || offset.len() != n {
            return Err(FormError::InvalidParameter("permutation parts must share length".into()));
        }
        let mut seen = vec![false; n];
        let mut matrix = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            let target = perm[i];
            if target < 1 || target > n || seen[target - 1] {
                return Err(FormError::InvalidParameter(format!("not a permutation: {perm:?}")));
            }
            seen[target - 1] = true;
            matrix[i][target - 1] = Rational::from_integer(i64::from(signs[i]).into());
        }
        AffineMap::new(matrix, offset)
    }

    /// Rational rotation by the (3,4,5) triple in the plane of two axes
    /// (1-based), identity elsewhere.
    pub fn pythagorean_rotation(n: usize, axis_a: usize, axis_b: usize, offset: Vec<Rational>) -> Result<Self> {
        if axis_a == axis_b || axis_a < 1 || axis_b < 1 || axis_a > n || axis_b > n {
            return Err(FormError::InvalidParameter("rotation needs two distinct axes in range".into()));
        }
        let mut map = AffineMap::identity(n);
        let (a, b) = (axis_a - 1, axis_b - 1);
        let c = Rational::new(3.into(), 5.into());
        let s = Rational::new(4.into(), 5.into());
        map.matrix[a][a] = c.clone();
        map.matrix[a][b] = -s.clone();
        map.matrix[b][a] = s;
        map.matrix[b][b] = c;
        map.offset = offset;
        map.is_isometry = true;
        debug_assert!(is_orthogonal(&map.matrix));
        Ok(map)
    }

    /// Diagonal scaling; a non-isometry whenever some entry is not ±1.
    pub fn diagonal(entries: Vec<Rational>, offset: Vec<Rational>) -> Result<Self> {
        let n = entries.len();
        let mut matrix = vec![vec![Rational::zero(); n]; n];
        for (i, e) in entries.into_iter().enumerate() {
            matrix[i][i] = e;
        }
        AffineMap::new(matrix, offset)
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let n = self.dim();
        assert_eq!(n, other.dim(), "composition needs equal dimensions");
        let mut matrix = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rational::zero();
                for k in 0..n {
                    acc += &self.matrix[i][k] * &other.matrix[k][j];
                }
                matrix[i][j] = acc;
            }
        }
        let mut offset = self.offset.clone();
        for i in 0..n {
            for k in 0..n {
                offset[i] += &self.matrix[i][k] * &other.offset[k];
            }
        }
        let is_isometry = is_orthogonal(&matrix);
        AffineMap { matrix, offset, is_isometry }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_isometry(&self) -> bool {
        self.is_isometry
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn offset(&self) -> &[Rational] {
        &self.offset
    }
}

fn is_invertible(matrix: &[Vec<Rational>]) -> bool {
    let n = matrix.len();
    let mut m: Vec<Vec<Rational>> = matrix.to_vec();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(pivot) = pivot else { return false };
        m.swap(col, pivot);
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &m[col][col];
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    true
}

fn is_orthogonal(matrix: &[Vec<Rational>]) -> bool {
    let n = matrix.len();
    for i in 0..n {
        for j in 0..n {
            let mut acc = Rational::zero();
            for row in matrix.iter() {
                acc += &row[i] * &row[j];
            }
            let expect = if i == j { Rational::one() } else { Rational::zero() };
            if acc != expect {
                return false;
            }
        }
    }
    true
}

/// Pullback `(ψ*ω)(x) = ω(Ax + b)` with `dx^i ↦ Σ_j A_{ij} dx^j`,
/// expanded exactly. Defined for every invertible affine map.
pub fn pullback(map: &AffineMap, omega: &PolyForm) -> Result<PolyForm> {
    let n = omega.ambient();
    if map.dim() != n {
        return Err(FormError::DimensionMismatch { expected: n, found: map.dim() });
    }
    // Coordinate images x_i ∘ ψ as polynomials.
    let images: Vec<Polynomial> = (0..n)
        .map(|i| {
            let mut p = Polynomial::constant(map.offset[i].clone());
            for j in 0..n {
                if !map.matrix[i][j].is_zero() {
                    p = p + Polynomial::var(j + 1).scale(&map.matrix[i][j]);
                }
            }
            p
        })
        .collect();
    // Constant 1-forms ψ*(dx^i) = Σ_j A_{ij} dx^j.
    let pulled_covectors: Vec<PolyForm> = (0..n)
        .map(|i| {
            let terms = (0..n).filter(|&j| !map.matrix[i][j].is_zero()).map(|j| {
                (
                    IndexSet::new(n, &[j + 1]).expect("axis in range"),
                    Polynomial::constant(map.matrix[i][j].clone()),
                )
            });
            PolyForm::from_terms(n, 1, terms).expect("degree-1 terms")
        })
        .collect();

    let mut out = PolyForm::zero(n, omega.degree());
    for (idx, coeff) in omega.iter() {
        let mut basis_image = PolyForm::scalar(n, Polynomial::one());
        for &axis in idx.indices() {
            basis_image = basis_image.wedge(&pulled_covectors[axis - 1])?;
        }
        let substituted = coeff.substitute(&images);
        out = out.add(&basis_image.scale(&substituted));
    }
    Ok(out)
}
