//! Identity-checking harness: every supported identity is evaluated on both
//! sides, on deterministic seeded samples and exhaustive small sweeps, and
//! each case produces a structured [`VerificationReport`].

mod checks;
mod report;
mod sample;
mod suite;

pub use checks::{
    check_character_consistency, check_eq29, check_eta_transform, check_f_identities,
    check_iseki, check_partial_fraction, check_quasiperiod, check_reciprocity,
    check_sawtooth_sums, check_theta1_transform,
};
pub use report::{render_complex, render_rational, SuiteSummary, VerificationReport};
pub use sample::SampleSpec;
pub use suite::{run_suite, Family};
