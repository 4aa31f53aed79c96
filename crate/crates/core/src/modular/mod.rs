//! PSL(2,Z) = ⟨a, b | a², b³⟩.
//!
//! Generators act as `a ↦ [[0,-1],[1,0]]` and `b ↦ [[0,1],[-1,-1]]`, so that
//! `a·b ↦ [[1,1],[0,1]]` and `(ab)ⁿ ↦ [[1,n],[0,1]]`.

mod geometry;
mod matrix;
mod torsion;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::IntScalar;
use crate::word::{conjugate_to_inverse, cyclic_reduce, GroupScheme, Word};

pub use geometry::{axis, elliptic_fixed_point, reverser_on_axis_check, Axis, HalfPlanePoint, DEFAULT_TOLERANCE};
pub use matrix::Mat2;
pub use torsion::{
    default_search_bound, gen3_relation, gen3_torsion, Gen3Certificate, Gen3Tag, Gen3Verdict, Reason,
};

pub(crate) fn check_modular(w: &Word) -> Result<()> {
    if w.scheme().as_ref() == GroupScheme::modular().as_ref() {
        Ok(())
    } else {
        Err(Error::SchemeMismatch)
    }
}

pub(crate) fn modular_word(text: &str) -> Word {
    Word::parse(&GroupScheme::modular(), text).expect("static word")
}

/// `a·b`, the parabolic generator.
pub fn parabolic_generator() -> Word {
    modular_word("a b")
}

/// Matrix image of a word, sign-normalized.
pub fn to_matrix<T: IntScalar>(w: &Word) -> Result<Mat2<T>> {
    check_modular(w)?;
    let a = Mat2::from_i64(0, -1, 1, 0);
    let b = Mat2::from_i64(0, 1, -1, -1);
    let mut out = Mat2::identity();
    for s in w.syllables() {
        let g = if s.generator == 0 { &a } else { &b };
        for _ in 0..s.exponent {
            out = out.mul(g);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsometryClass {
    Identity,
    EllipticOrder2,
    EllipticOrder3,
    Parabolic,
    Hyperbolic,
}

impl IsometryClass {
    pub fn is_elliptic(self) -> bool {
        matches!(self, IsometryClass::EllipticOrder2 | IsometryClass::EllipticOrder3)
    }
}

impl fmt::Display for IsometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsometryClass::Identity => "identity",
            IsometryClass::EllipticOrder2 => "elliptic-order-2",
            IsometryClass::EllipticOrder3 => "elliptic-order-3",
            IsometryClass::Parabolic => "parabolic",
            IsometryClass::Hyperbolic => "hyperbolic",
        })
    }
}

/// Classifies by `|trace|`; computed over `BigInt` so long words cannot overflow.
pub fn classify(w: &Word) -> Result<IsometryClass> {
    let m: Mat2<BigInt> = to_matrix(w)?;
    if m.is_identity() {
        return Ok(IsometryClass::Identity);
    }
    Ok(match m.trace().abs().to_u64() {
        Some(0) => IsometryClass::EllipticOrder2,
        Some(1) => IsometryClass::EllipticOrder3,
        Some(2) => IsometryClass::Parabolic,
        _ => IsometryClass::Hyperbolic,
    })
}

/// Reversibility certificate: `reverser · w · reverser⁻¹ = w⁻¹` and
/// `w = u · v` with `u² = v² = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reversal {
    pub reverser: Word,
    pub involutions: (Word, Word),
}

pub fn reversible(w: &Word) -> Result<Option<Reversal>> {
    check_modular(w)?;
    let Some(reverser) = conjugate_to_inverse(w)? else {
        return Ok(None);
    };
    let scheme = w.scheme();
    let involutions = if w.pow(2).is_identity() {
        (w.clone(), Word::identity(scheme))
    } else {
        // an involutive reverser r gives w = r · (r w), both factors involutions
        debug_assert!(reverser.pow(2).is_identity());
        (reverser.clone(), reverser.mul(w))
    };
    Ok(Some(Reversal { reverser, involutions }))
}

/// The `n` with `w` conjugate to `(ab)ⁿ`.
pub fn parabolic_power(w: &Word) -> Result<Option<i64>> {
    if classify(w)? != IsometryClass::Parabolic {
        return Err(Error::NotParabolic);
    }
    let target = cyclic_reduce(w).0;
    let ab = parabolic_generator();
    for n in 1..=w.len() as i64 {
        for signed in [n, -n] {
            if cyclic_reduce(&ab.pow(signed)).0 == target {
                return Ok(Some(signed));
            }
        }
    }
    Ok(None)
}

/// The modular scheme, for callers building words directly.
pub fn scheme() -> Arc<GroupScheme> {
    GroupScheme::modular()
}
