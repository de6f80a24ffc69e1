//! Numerical analysis layer: grid quadrature for `L^p` and Sobolev norms,
//! seeded random instance generators, and the experiment drivers.

pub mod experiments;
pub mod grid;
pub mod random;

pub use experiments::{
    divcurl_ratio_experiment, hillclimb_extremizer, pairing_experiment, pairing_summary,
    ratio_summary, recheck_box_relation, write_pairing_csv, write_pairing_json, write_ratio_csv,
    write_ratio_json, ExperimentRecord, HillclimbParams, PairingParams, PairingSummary,
    PairingVariant, RatioParams, RatioSummary, DEFAULT_DENSITY,
};
pub use grid::{
    gradient_lp_norm, grid_points, lp_norm, lp_norm_of_form, multi_indices, sample_grid,
    sobolev_norm, GridSample, DEFAULT_OVERSAMPLE, SOBOLEV_CONVENTION,
};
pub use random::{
    mix_seed, random_alg_form, random_closed, random_coclosed, random_form,
    random_mean_zero_form, random_poly_form, random_polynomial, random_rational,
    random_rational_isometry, random_signed_permutation_map, random_torus_isometry, seeded_rng,
    SampleScalar,
};
