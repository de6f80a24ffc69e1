//! Constant-coefficient exterior algebra: sparse forms over any scalar ring,
//! with wedge, Hodge star, interior product and the pointwise inner product.
//!
//! Forms are canonical sparse maps `IndexSet → coefficient`: zero coefficients
//! are never stored, so equality and exact zero tests reduce to map equality.

use crate::error::{FormError, Result};
use crate::index_set::{merge_sign, IndexSet};
use crate::scalar::Scalar;
use num::traits::One;
use std::collections::BTreeMap;
use std::fmt;

/// A degree-`q` form with coefficients in `S` at a single point: a finite map
/// from basis covectors `dx^I` to scalars.
///
/// Degrees outside `0..=n` are legal and always denote the zero form of that
/// degree, which keeps `d` and `d*` total at the ends of the complex.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgForm<S: Scalar> {
    n: usize,
    q: i64,
    terms: BTreeMap<IndexSet, S>,
}

impl<S: Scalar> AlgForm<S> {
    /// The zero form of the given degree.
    pub fn zero(n: usize, q: i64) -> Self {
        AlgForm { n, q, terms: BTreeMap::new() }
    }

    /// Build a form from `(index set, coefficient)` terms, merging duplicates
    /// and dropping zeros.
    pub fn from_terms<I>(n: usize, q: i64, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (IndexSet, S)>,
    {
        let mut form = AlgForm::zero(n, q);
        for (idx, coeff) in terms {
            if idx.ambient() != n {
                return Err(FormError::DimensionMismatch { expected: n, found: idx.ambient() });
            }
            if idx.degree() as i64 != q {
                return Err(FormError::DegreeMismatch { expected: q, found: idx.degree() as i64 });
            }
            form.add_term(idx, coeff);
        }
        Ok(form)
    }

    /// The basis covector `dx^I` with unit coefficient.
    pub fn basis(idx: IndexSet) -> Self
    where
        S: One,
    {
        let n = idx.ambient();
        let q = idx.degree() as i64;
        let mut terms = BTreeMap::new();
        terms.insert(idx, S::one());
        AlgForm { n, q, terms }
    }

    /// A degree-0 form holding a single scalar.
    pub fn scalar(n: usize, value: S) -> Self {
        let mut form = AlgForm::zero(n, 0);
        form.add_term(IndexSet::empty(n), value);
        form
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> i64 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IndexSet, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &IndexSet) -> Option<&S> {
        self.terms.get(idx)
    }

    /// Coefficient of the volume form `dx^1∧…∧dx^n`, if present.
    pub fn volume_coeff(&self) -> Option<&S> {
        let vol = IndexSet::all(self.n, self.n as i64).pop()?;
        self.terms.get(&vol)
    }

    fn add_term(&mut self, idx: IndexSet, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&idx) {
            None => {
                self.terms.insert(idx, coeff);
            }
            Some(existing) => {
                let sum = existing + coeff;
                if !sum.is_zero() {
                    self.terms.insert(idx, sum);
                }
            }
        }
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(self.n, other.n, "ambient dimension mismatch in form arithmetic");
        assert_eq!(self.q, other.q, "degree mismatch in form arithmetic");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (idx, coeff) in &other.terms {
            out.add_term(idx.clone(), coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c.clone())
    }

    pub fn scale(&self, factor: &S) -> Self {
        let mut out = AlgForm::zero(self.n, self.q);
        for (idx, coeff) in &self.terms {
            out.add_term(idx.clone(), coeff.clone() * factor.clone());
        }
        out
    }

    /// Apply `f` to every coefficient, re-canonicalizing (zeros dropped).
    pub fn map_coeffs<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> AlgForm<T> {
        let mut out = AlgForm::zero(self.n, self.q);
        for (idx, coeff) in &self.terms {
            out.add_term(idx.clone(), f(coeff));
        }
        out
    }

    /// Wedge product, the bilinear extension of
    /// `dx^I ∧ dx^J = sign · dx^{I∪J}`.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(FormError::DimensionMismatch { expected: self.n, found: other.n });
        }
        let mut out = AlgForm::zero(self.n, self.q + other.q);
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                if let Some((sign, merged)) = merge_sign(i, j)? {
                    let prod = a.clone() * b.clone();
                    out.add_term(merged, if sign < 0 { -prod } else { prod });
                }
            }
        }
        Ok(out)
    }

    /// Hodge star: the linear extension of `*dx^I = s·dx^{Iᶜ}` with the sign
    /// fixed by `dx^I ∧ *dx^I = dx^1∧…∧dx^n`.
    pub fn hodge_star(&self) -> Self {
        let mut out = AlgForm::zero(self.n, self.n as i64 - self.q);
        for (idx, coeff) in &self.terms {
            let comp = idx.complement();
            let (sign, _) = merge_sign(idx, &comp)
                .expect("same ambient dimension")
                .expect("complement is disjoint");
            let c = if sign < 0 { -coeff.clone() } else { coeff.clone() };
            out.add_term(comp, c);
        }
        out
    }

    /// Interior product `k ⌟ ω` with a covector of `n` scalars:
    /// `k ⌟ dx^{(i_1,…,i_q)} = Σ_j (−1)^{j−1} k_{i_j} dx^{(…,î_j,…)}`.
    pub fn interior(&self, k: &[S]) -> Result<Self> {
        if k.len() != self.n {
            return Err(FormError::DimensionMismatch { expected: self.n, found: k.len() });
        }
        if self.q < 1 {
            return Err(FormError::InteriorOnScalar);
        }
        let mut out = AlgForm::zero(self.n, self.q - 1);
        for (idx, coeff) in &self.terms {
            for (pos, &axis) in idx.indices().iter().enumerate() {
                let factor = &k[axis - 1];
                if factor.is_zero() {
                    continue;
                }
                let prod = factor.clone() * coeff.clone();
                let term = if pos % 2 == 1 { -prod } else { prod };
                out.add_term(idx.without_position(pos), term);
            }
        }
        Ok(out)
    }

    /// Interior product with the `j`-th unit covector (1-based axis), which
    /// needs no scalar multiplication: pure sign bookkeeping.
    pub fn interior_unit(&self, axis: usize) -> Result<Self> {
        if self.q < 1 {
            return Err(FormError::InteriorOnScalar);
        }
        let mut out = AlgForm::zero(self.n, self.q - 1);
        for (idx, coeff) in &self.terms {
            if let Some(pos) = idx.position(axis) {
                let term = if pos % 2 == 1 { -coeff.clone() } else { coeff.clone() };
                out.add_term(idx.without_position(pos), term);
            }
        }
        Ok(out)
    }

    /// Pointwise inner product `Σ_I ω_I · conj(η_I)`.
    pub fn pointwise_inner(&self, other: &Self) -> Result<S> {
        if self.n != other.n {
            return Err(FormError::DimensionMismatch { expected: self.n, found: other.n });
        }
        if self.q != other.q {
            return Err(FormError::DegreeMismatch { expected: self.q, found: other.q });
        }
        let mut acc = S::zero();
        for (idx, a) in &self.terms {
            if let Some(b) = other.terms.get(idx) {
                acc = acc + a.clone() * b.conj();
            }
        }
        Ok(acc)
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for AlgForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (idx, coeff)) in self.terms.iter().enumerate() {
            if pos > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({coeff})·{idx}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use num::traits::{One, Zero};
    use proptest::prelude::*;

    type RForm = AlgForm<Rational>;

    fn idx(n: usize, is: &[usize]) -> IndexSet {
        IndexSet::new(n, is).unwrap()
    }

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    fn basis(n: usize, is: &[usize]) -> RForm {
        AlgForm::basis(idx(n, is))
    }

    #[test]
    fn wedge_basis_covectors() {
        let dx1 = basis(2, &[1]);
        let dx2 = basis(2, &[2]);
        assert_eq!(dx1.wedge(&dx2).unwrap(), basis(2, &[1, 2]));
        assert_eq!(dx2.wedge(&dx1).unwrap(), basis(2, &[1, 2]).neg());
        assert!(dx1.wedge(&dx1).unwrap().is_zero());
    }

    #[test]
    fn wedge_dimension_mismatch() {
        let a = basis(2, &[1]);
        let b = basis(3, &[2]);
        assert!(matches!(a.wedge(&b), Err(FormError::DimensionMismatch { .. })));
    }

    #[test]
    fn wedge_beyond_top_degree_is_zero() {
        let a = basis(2, &[1, 2]);
        let b = basis(2, &[1]);
        let w = a.wedge(&b).unwrap();
        assert_eq!(w.degree(), 3);
        assert!(w.is_zero());
    }

    #[test]
    fn hodge_star_low_dimensions() {
        // n=2: *dx¹ = dx², *dx² = −dx¹, forced by dx^I ∧ *dx^I = vol.
        assert_eq!(basis(2, &[1]).hodge_star(), basis(2, &[2]));
        assert_eq!(basis(2, &[2]).hodge_star(), basis(2, &[1]).neg());
        // n=3: *dx^(1,2) = dx³, *1 = dx^(1,2,3).
        assert_eq!(basis(3, &[1, 2]).hodge_star(), basis(3, &[3]));
        assert_eq!(basis(3, &[]).hodge_star(), basis(3, &[1, 2, 3]));
    }

    #[test]
    fn interior_of_two_form() {
        // k ⌟ dx^(1,2) = k₁dx² − k₂dx¹
        let k = [rat(5, 1), rat(7, 1)];
        let got = basis(2, &[1, 2]).interior(&k).unwrap();
        let want = basis(2, &[2])
            .scale(&rat(5, 1))
            .add(&basis(2, &[1]).scale(&rat(-7, 1)));
        assert_eq!(got, want);
    }

    #[test]
    fn interior_missing_axis_vanishes() {
        let k = [rat(1, 1), rat(0, 1), rat(0, 1)];
        assert!(basis(3, &[2]).interior(&k).unwrap().is_zero());
    }

    #[test]
    fn interior_of_one_form_is_scalar() {
        let k = [rat(2, 1), rat(3, 1)];
        let got = basis(2, &[1]).interior(&k).unwrap();
        assert_eq!(got, AlgForm::scalar(2, rat(2, 1)));
    }

    #[test]
    fn interior_rejects_degree_zero() {
        let k = [rat(1, 1), rat(1, 1)];
        let f = AlgForm::scalar(2, rat(1, 1));
        assert!(matches!(f.interior(&k), Err(FormError::InteriorOnScalar)));
    }

    #[test]
    fn pointwise_inner_orthonormal_basis() {
        let dx1 = basis(2, &[1]);
        let dx2 = basis(2, &[2]);
        assert_eq!(dx1.pointwise_inner(&dx1).unwrap(), Rational::one());
        assert_eq!(dx1.pointwise_inner(&dx2).unwrap(), Rational::zero());
        let f = dx1.scale(&rat(2, 1)).add(&dx2.scale(&rat(3, 1)));
        assert_eq!(f.pointwise_inner(&dx2).unwrap(), rat(3, 1));
        assert!(matches!(
            dx1.pointwise_inner(&basis(2, &[1, 2])),
            Err(FormError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn canonical_sparsity_drops_cancellations() {
        let f = basis(2, &[1]).add(&basis(2, &[1]).neg());
        assert!(f.is_zero());
        assert_eq!(f.len(), 0);
    }

    // Randomized exact laws over rational scalars, n ≤ 5.

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-5i64..=5, 1i64..=4).prop_map(|(p, q)| rat(p, q))
    }

    fn arb_form(n: usize, q: i64) -> impl Strategy<Value = RForm> {
        let sets = IndexSet::all(n, q);
        let len = sets.len();
        proptest::collection::vec(proptest::option::of(arb_rational()), len).prop_map(
            move |coeffs| {
                let terms = sets
                    .iter()
                    .cloned()
                    .zip(coeffs)
                    .filter_map(|(idx, c)| c.map(|c| (idx, c)));
                AlgForm::from_terms(n, q, terms).unwrap()
            },
        )
    }

    fn arb_n_q() -> impl Strategy<Value = (usize, i64)> {
        (1usize..=5).prop_flat_map(|n| (Just(n), 0..=n as i64))
    }

    proptest! {
        #[test]
        fn star_star_on_random_forms(pair in arb_n_q().prop_flat_map(|(n, q)| (arb_form(n, q), Just((n, q))))) {
            let (f, (n, q)) = pair;
            let ss = f.hodge_star().hodge_star();
            let expect = if (q * (n as i64 - q)) % 2 == 0 { f.clone() } else { f.neg() };
            prop_assert_eq!(ss, expect);
        }

        #[test]
        fn wedge_graded_commutativity(
            parts in (1usize..=5).prop_flat_map(|n| {
                (0..=n as i64).prop_flat_map(move |p| {
                    (0..=n as i64).prop_flat_map(move |q| {
                        (arb_form(n, p), arb_form(n, q), Just(p), Just(q))
                    })
                })
            })
        ) {
            let (a, b, p, q) = parts;
            let ab = a.wedge(&b).unwrap();
            let ba = b.wedge(&a).unwrap();
            let expect = if (p * q) % 2 == 0 { ba } else { ba.neg() };
            prop_assert_eq!(ab, expect);
        }

        #[test]
        fn inner_is_volume_coeff_of_wedge_star(
            pair in arb_n_q().prop_flat_map(|(n, q)| (arb_form(n, q), arb_form(n, q)))
        ) {
            let (a, b) = pair;
            let inner = a.pointwise_inner(&b).unwrap();
            let wedge = a.wedge(&b.hodge_star()).unwrap();
            let vol = wedge.volume_coeff().cloned().unwrap_or_else(Rational::zero);
            prop_assert_eq!(inner, vol);
        }

        #[test]
        fn interior_squares_to_zero(
            input in (2usize..=5).prop_flat_map(|n| {
                (2..=n as i64).prop_flat_map(move |q| {
                    (
                        arb_form(n, q),
                        proptest::collection::vec(arb_rational(), n),
                    )
                })
            })
        ) {
            let (f, k) = input;
            let once = f.interior(&k).unwrap();
            if once.degree() >= 1 {
                let twice = once.interior(&k).unwrap();
                prop_assert!(twice.is_zero());
            }
        }
    }
}
