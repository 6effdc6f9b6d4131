//! Optimal ternary cyclic codes `C_(u,v)` of length `3^m - 1` with
//! `u = (3^m + 1)/2` and `v = 2 * 3^ell + 1`, `m = 2 ell + 1`.
//!
//! The crate builds GF(3^m) and the code's generator polynomial, verifies
//! that the minimum distance is 4, checks the underlying no-solution
//! property over GF(3^m), and computes the exact weight enumerator of the
//! dual code both from its definition and from the Fourier spectrum of
//! `x^v`.

pub mod code;
pub mod cyclotomic;
pub mod distance;
pub mod enumerator;
pub mod error;
pub mod field;
pub mod lemma;
pub mod poly;
pub mod spectrum;

pub use code::{build_code, sphere_packing_max_d, CodeSummary, CyclicCode};
pub use cyclotomic::{cyclotomic_coset, minimal_polynomial, CyclotomicCoset};
pub use distance::{conclude_distance, DistanceOptions, DistanceReport, Witness};
pub use enumerator::{macwilliams, WeightEnumerator};
pub use error::{Error, Result};
pub use field::{make_field, FieldCtx, Gf3Element};
pub use lemma::{lemma_check, Epsilon, LemmaReport};
pub use poly::{poly_mod, poly_mul, TernaryPoly, Trit};
pub use spectrum::{
    direct_enumerator, fhat, fhat_table, spectral_enumerator, weight_value_set, EisensteinInt,
};
