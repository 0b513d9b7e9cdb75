//! Combinatorics and exact topology of braid groups: winding invariants,
//! Garside normal forms, the weak Bruhat lattice, reduced integral homology
//! of order complexes, and ascending links of character height functions on
//! the Garside complex of `B_n`.
//!
//! Scalar-dependent code is generic: characters over any [`Coefficient`]
//! (exact rationals or floats), Smith normal form over any [`SnfRing`]. The
//! aliases below fix the exact choices used by the CLI.

pub mod braid;
pub mod bruhat;
pub mod error;
pub mod garside;
pub mod homology;
pub mod scalar;
pub mod sigma;

pub use braid::{
    concat, delta_word, erase_strands, invariants_of, inverse_word, mirror, parse_braid_word,
    BraidInvariants, BraidWord, TwiceWindings,
};
pub use bruhat::{
    coxeter_length, inversion_set, join, maximal_vertices, meet, minimal_vertices, nerve_of_stars,
    pw_vertices, rev_vertices, weak_leq, InversionSet, Permutation, StarMode,
};
pub use error::{Error, Result};
pub use garside::{
    braids_equal, gcd_with_delta, normal_form, perm_braid_word, prefix_leq, sandwich, NormalForm,
};
pub use homology::{
    order_complex, reduced_homology, reduced_homology_over, smith_normal_form, ComplexHomology,
    HomologyProfile, SimplicialComplex, SparseMatrix,
};
pub use scalar::{Coefficient, SnfRing};
pub use sigma::{
    ascending_link_vertices, chi_m_n, classify_links, kdot_less, link_regime, one_positive_pair,
    parse_character, AscendingLinkSpec, Character, ClassificationReport, ClassifyOptions,
    LinkRegime, OnePositive,
};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};

/// Characters with arbitrary-precision rational coefficients.
pub type ExactCharacter = Character<BigRational>;
/// Characters with fixed-width rational coefficients.
pub type SmallRationalCharacter = Character<Rational64>;
/// Characters with floating point coefficients.
pub type FloatCharacter = Character<f64>;
pub type ExactAscendingLinkSpec = AscendingLinkSpec<BigRational>;
/// Integer matrices with arbitrary-precision entries.
pub type IntMatrix = SparseMatrix<BigInt>;
/// Integer matrices over `i64`; elimination reports overflow instead of wrapping.
pub type SmallIntMatrix = SparseMatrix<i64>;
