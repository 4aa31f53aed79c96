//! Reversibility and generalised torsion in the modular group, the three
//! strand braid group and fundamental groups of Seifert-fibered spaces.
//!
//! Every positive answer carries a certificate (a reverser, a conjugator or a
//! list of torsion conjugators) that [`certificate::verify`] re-checks by
//! multiplying out the defining relation.
//!
//! Layers:
//! - [`word`]: free products of cyclic groups, normal forms, exact conjugacy.
//! - [`extension`]: cyclic extensions `1 → ⟨h⟩ → G → Q → 1` over such products.
//! - [`modular`]: PSL(2,Z) matrices, isometry classes, axes, reversibility and
//!   generalised 3-torsion.
//! - [`braid3`]: B₃ as a central extension of PSL(2,Z).
//! - [`seifert`]: Seifert invariants, presentations, reversible families,
//!   element-level decisions and torsion certificates.
//! - [`oracle`]: bounded brute-force searches used to cross-check the above.

pub mod braid3;
pub mod certificate;
pub mod error;
pub mod extension;
pub mod modular;
pub mod oracle;
pub mod scalar;
pub mod seifert;
pub mod word;

pub use error::{Error, Result};
pub use word::{CyclicWord, GroupScheme, Order, Syllable, Word};

/// 2×2 integer matrices over `i64`, the default PSL(2,Z) representative.
pub type IntMatrix2 = modular::Mat2<i64>;
/// Overflow-free matrices for long words.
pub type BigIntMatrix2 = modular::Mat2<num_bigint::BigInt>;
/// Axis with `i64` coefficients.
pub type IntAxis = modular::Axis<i64>;
/// Upper half-plane point with `i64` coefficients.
pub type IntPoint = modular::HalfPlanePoint<i64>;
