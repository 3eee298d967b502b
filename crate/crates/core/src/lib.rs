//! Exact computations with finite-dimensional soluble Lie algebras over ℚ
//! and GF(p): chief series, derivation algebras, maximal subalgebras relative
//! to a formation, 𝔉-normalisers, and the checks used to validate them on
//! exhaustively enumerated small algebras.
//!
//! ```
//! use lieform::{catalog, f_normalisers, BuiltinFormation, FieldSpec};
//!
//! let l = catalog::r2(FieldSpec::prime(3).unwrap());
//! let normalisers = f_normalisers(&l, &BuiltinFormation::Nilpotent).unwrap();
//! assert_eq!(normalisers.len(), 3);
//! ```

pub mod catalog;
pub mod chief;
pub mod derivation;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod formation;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod sweep;

pub use chief::{chief_series, minimal_ideal, split_extension, split_extension_by_derivation, ChiefFactor, ChiefSeries, LModule};
pub use derivation::{
    derivation_algebra, inner_derivations, is_intravariant_extension, is_intravariant_linear, stabilizing_derivations,
    DerivationAlgebra,
};
pub use enumerate::{enumerate_ideals, enumerate_soluble, enumerate_subalgebras, EnumeratedAlgebra, EnumerationBudget};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use formation::{
    classify_maximal, cover_avoid_check, f_normalisers, is_f_central, is_f_critical, is_f_projector, is_member,
    maximal_subalgebras, verify_chain, BuiltinFormation, FNormaliser, Formation, MaximalClassification, NormaliserChain,
    Verdict,
};
pub use io::Counterexample;
pub use lie::{Ideal, LieAlgebra, Subalgebra};
pub use linalg::{Matrix, Subspace, Vector};
pub use report::{analyze, AnalysisReport};
pub use sweep::{sweep, Property, SweepSummary};
