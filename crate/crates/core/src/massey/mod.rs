//! Matric Massey products over Λ and the realizability test for modules.

mod enumerate;
mod matrix;
mod pieces;
mod sample;
mod triple;

pub use enumerate::{enumerate_scalar_triples, homogeneous_elements, scalar_member, scalar_triple, ScalarReport};
pub use matrix::{GradedSet, LambdaMatrix, PlainMatrix};
pub use pieces::{check_exact, has_no_units, minimal_image_generators, minimal_kernel_generators, ExactnessReport};
pub use sample::{
    check_sample, check_samples, random_presentation, random_presentations, SampleReport, SAMPLE_J, SAMPLE_WINDOWS,
};
pub use triple::{
    indeterminacy_member, m_matrix, minimal_resolution, prime_witnesses, realizable_summand, realizable_summand_with,
    trace_pairing, RealizabilityReport, TripleVerdict, Windows,
};
