//! Exact integer group determinants for small finite groups.
//!
//! The crate computes `det[x_{g h^{-1}}]` for every group of order at most 14
//! plus a few larger families, evaluates the factored Lind-Mahler measure
//! formulas, decides membership in the value sets `S(G)` with certificates,
//! builds verified witnesses and cross-checks everything by enumeration.
//!
//! All arithmetic is exact. Fixed-width fast paths are checked and fall back
//! to `BigInt`.

pub mod classifier;
pub mod det;
pub mod eisenstein;
pub mod error;
pub mod fast;
pub mod group;
pub mod measure;
pub mod numberkit;
pub mod poly;
pub mod profile;
pub mod ring;
pub mod verify;
pub mod witness;

pub use classifier::{lambda_from_classifier, member, set_window, MembershipCertificate};
pub use eisenstein::{EisensteinGaussian, EisensteinInt};
pub use error::{Error, Result};
pub use group::{build_group, GroupSpec, GroupTable, SUPPORTED_NAMES};
pub use measure::{
    a4_determinant, convolve, cyclic_measure, cyclic_measure_resultant, dicyclic_measure,
    dihedral_measure, group_determinant, z2_cubed_measure, zn_z2_measure, CoeffVector,
};
pub use poly::LaurentPoly;
pub use profile::{factored_profile, Factor, MeasureFactorization, ProfileFamily};
pub use verify::{
    completeness_check, enumerate_window, identity_suite, lambda_search, soundness_check,
    EnumerationJob, VerificationReport,
};
pub use witness::{achieve, all_identities, catalog, negate_or_swap, ConstructionIdentity, ProvenanceStep, Witness};
