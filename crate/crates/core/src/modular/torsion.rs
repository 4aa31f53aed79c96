//! Generalised 3-torsion in PSL(2,Z).
//!
//! `g` is a generalised 3-torsion element when `g · h1 g h1⁻¹ · k g k⁻¹ = 1`
//! for some `h1, k`. Elliptic and parabolic elements are decided exactly;
//! hyperbolic elements get the abelianization obstruction plus a bounded
//! search for a splitting into two order-3 factors.

use std::fmt;

use serde::{Serialize, Serializer};

use super::{check_modular, classify, modular_word, parabolic_power, IsometryClass};
use crate::error::{Error, Result};
use crate::word::{cyclic_reduce, enumerate_reduced, is_conjugate, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Gen3Tag {
    Yes,
    No,
    UnknownWithinBound,
}

impl fmt::Display for Gen3Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Gen3Tag::Yes => "yes",
            Gen3Tag::No => "no",
            Gen3Tag::UnknownWithinBound => "unknown-within-bound",
        })
    }
}

/// Diagnostic attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Reason {
    EllipticOrder3,
    EllipticOrder2,
    ParabolicPm2,
    ParabolicNNotPm2,
    OddACount,
    TwoOrder3Factors,
    NoWitnessWithinBound,
    ExponentSumNonzero,
    ProductOfConjugateGenerators,
    LiftedQuotientCertificate,
    /// 3x + (sum of h-exponents) = 0 has no integer solution.
    NoIntegerOffset { n: i64, total: i64 },
    Quotient(Box<Reason>),
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reason::EllipticOrder3 => f.write_str("elliptic-order-3"),
            Reason::EllipticOrder2 => f.write_str("elliptic-order-2"),
            Reason::ParabolicPm2 => f.write_str("parabolic-n-pm2"),
            Reason::ParabolicNNotPm2 => f.write_str("parabolic-n-not-pm2"),
            Reason::OddACount => f.write_str("odd-a-count"),
            Reason::TwoOrder3Factors => f.write_str("two-order-3-factors"),
            Reason::NoWitnessWithinBound => f.write_str("no-witness-within-bound"),
            Reason::ExponentSumNonzero => f.write_str("exponent-sum-nonzero"),
            Reason::ProductOfConjugateGenerators => f.write_str("conjugate-of-e1-e2^2-h^-1"),
            Reason::LiftedQuotientCertificate => f.write_str("lifted-quotient-certificate"),
            Reason::NoIntegerOffset { n, total } => {
                write!(f, "no-integer-x:{n}x+{total}=0")
            }
            Reason::Quotient(inner) => write!(f, "quotient:{inner}"),
        }
    }
}

impl Serialize for Reason {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Conjugators `(h1, k)` with `g · h1 g h1⁻¹ · k g k⁻¹ = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gen3Certificate<W> {
    pub h1: W,
    pub k: W,
}

impl Gen3Certificate<Word> {
    /// Certificate for `c · g · c⁻¹`.
    pub fn conjugated(&self, c: &Word) -> Self {
        Gen3Certificate {
            h1: self.h1.conjugate_by(c),
            k: self.k.conjugate_by(c),
        }
    }

    /// Certificate for `g⁻¹`: `(k⁻¹ h1, k⁻¹)`.
    pub fn inverted(&self) -> Self {
        let k_inv = self.k.inverse();
        Gen3Certificate {
            h1: k_inv.mul(&self.h1),
            k: k_inv,
        }
    }

    pub fn validates(&self, g: &Word) -> bool {
        gen3_relation(g, &self.h1, &self.k).is_identity()
    }
}

/// `g · h1 g h1⁻¹ · k g k⁻¹`
pub fn gen3_relation(g: &Word, h1: &Word, k: &Word) -> Word {
    g.mul(&g.conjugate_by(h1)).mul(&g.conjugate_by(k))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gen3Verdict<W> {
    pub tag: Gen3Tag,
    pub certificate: Option<Gen3Certificate<W>>,
    pub reason: Reason,
    pub bound_used: i64,
}

impl<W> Gen3Verdict<W> {
    pub(crate) fn no(reason: Reason, bound_used: i64) -> Self {
        Gen3Verdict {
            tag: Gen3Tag::No,
            certificate: None,
            reason,
            bound_used,
        }
    }

    pub(crate) fn yes(certificate: Gen3Certificate<W>, reason: Reason, bound_used: i64) -> Self {
        Gen3Verdict {
            tag: Gen3Tag::Yes,
            certificate: Some(certificate),
            reason,
            bound_used,
        }
    }
}

/// `⌈cyclic length / 2⌉ + 3`
pub fn default_search_bound(w: &Word) -> i64 {
    cyclic_reduce(w).0.len().div_ceil(2) as i64 + 3
}

pub fn gen3_torsion(w: &Word, search_bound: i64) -> Result<Gen3Verdict<Word>> {
    check_modular(w)?;
    if w.is_identity() {
        return Err(Error::TrivialElement);
    }
    if search_bound <= 0 {
        return Err(Error::NonpositiveBound(search_bound));
    }
    let scheme = w.scheme();
    let eps = Word::identity(scheme);
    let verdict = match classify(w)? {
        IsometryClass::Identity => unreachable!("identity rejected above"),
        IsometryClass::EllipticOrder3 => Gen3Verdict::yes(
            Gen3Certificate { h1: eps.clone(), k: eps },
            Reason::EllipticOrder3,
            search_bound,
        ),
        IsometryClass::EllipticOrder2 => Gen3Verdict::no(Reason::EllipticOrder2, search_bound),
        IsometryClass::Parabolic => {
            let n = parabolic_power(w)?.ok_or(Error::NotParabolic)?;
            if n.abs() != 2 {
                Gen3Verdict::no(Reason::ParabolicNNotPm2, search_bound)
            } else {
                // (ab)² = (a b a)·b, so h1 = b⁻¹ and k = b work
                let base = modular_word("a b a b");
                let cert = Gen3Certificate {
                    h1: modular_word("b^2"),
                    k: modular_word("b"),
                };
                let (base, cert) = if n < 0 {
                    (base.inverse(), cert.inverted())
                } else {
                    (base, cert)
                };
                let c = is_conjugate(&base, w)?.ok_or(Error::NotParabolic)?;
                Gen3Verdict::yes(cert.conjugated(&c), Reason::ParabolicPm2, search_bound)
            }
        }
        IsometryClass::Hyperbolic => hyperbolic_branch(w, search_bound)?,
    };
    if let Some(cert) = &verdict.certificate {
        if !cert.validates(w) {
            return Err(Error::InvalidCertificate(format!(
                "internal certificate ({}, {}) failed for {w}",
                cert.h1, cert.k
            )));
        }
    }
    Ok(verdict)
}

fn hyperbolic_branch(w: &Word, bound: i64) -> Result<Gen3Verdict<Word>> {
    // image in Z/2 × Z/3 must be 3-torsion, so the a-exponent sum is even
    if w.exponent_count(0).rem_euclid(2) != 0 {
        return Ok(Gen3Verdict::no(Reason::OddACount, bound));
    }
    let target = cyclic_reduce(w).0;
    let scheme = w.scheme();
    let b = [modular_word("b"), modular_word("b^2")];
    for z in enumerate_reduced(scheme, bound as usize) {
        for b1 in &b {
            for b2 in &b {
                let candidate = b1.conjugate_by(&z).mul(b2);
                if cyclic_reduce(&candidate).0 != target {
                    continue;
                }
                let c = is_conjugate(&candidate, w)?.expect("equal cyclic words are conjugate");
                // g = e1 · e2 with e1, e2 of order 3: h1 = e2⁻¹, k = e2
                let cert = Gen3Certificate {
                    h1: b2.inverse(),
                    k: b2.clone(),
                }
                .conjugated(&c);
                return Ok(Gen3Verdict::yes(cert, Reason::TwoOrder3Factors, bound));
            }
        }
    }
    Ok(Gen3Verdict {
        tag: Gen3Tag::UnknownWithinBound,
        certificate: None,
        reason: Reason::NoWitnessWithinBound,
        bound_used: bound,
    })
}
