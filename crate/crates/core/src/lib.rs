//! Exterior calculus with two interchangeable backends and an experiment
//! harness.
//!
//! - [`algebra`]: constant-coefficient exterior algebra (wedge, Hodge star,
//!   interior product, pointwise inner product) over any scalar ring.
//! - [`poly_form`]: exact calculus on forms with rational-polynomial
//!   coefficients — `d`, `d*`, the odd-order operators `d(d*d)^m`, and
//!   pullback by rational affine maps.
//! - [`fourier`]: trigonometric-polynomial forms on the n-torus where the
//!   same operators act as sparse Fourier multipliers, exactly over Gaussian
//!   rationals or approximately over complex floats.
//! - [`solver`]: the odd-order Hodge system `S v = f, S* v = g` reduced to
//!   powers of the Hodge Laplacian and inverted mode-by-mode.
//! - [`analysis`]: grid quadrature for `L^p`/Sobolev norms, seeded random
//!   instance generators, and the ratio/pairing experiment drivers.

pub mod algebra;
pub mod analysis;
pub mod error;
pub mod fourier;
pub mod index_set;
pub mod poly;
pub mod poly_form;
pub mod scalar;
pub mod solver;

pub use algebra::AlgForm;
pub use error::{FormError, Result};
pub use index_set::{merge_sign, IndexSet};
pub use poly::Polynomial;
pub use poly_form::{AffineMap, PolyForm};
pub use scalar::{FourierScalar, GaussRational, Rational, Scalar};
