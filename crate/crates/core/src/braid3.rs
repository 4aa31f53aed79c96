//! B₃ = ⟨σ1, σ2 | σ1σ2σ1 = σ2σ1σ2⟩ as a central extension of PSL(2,Z).
//!
//! With `x = σ1σ2σ1`, `y = σ1σ2` and `h = (σ1σ2)³` one has `x² = y³ = h`
//! central, and `B₃/⟨h⟩ = ⟨a, b | a², b³⟩` via `x ↦ a`, `y ↦ b`. Elements
//! are kept as `h^m · s(q)` with the section `a ↦ x`, `b ↦ y`, `b² ↦ y²`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::extension::{self, ExtElement, ExtensionScheme, Letter};
use crate::modular::{
    self, gen3_torsion, modular_word, reversible, Gen3Certificate, Gen3Tag, Gen3Verdict, Reason,
};
use crate::word::{enumerate_reduced, is_conjugate, parse_tokens, Word};

/// `(m, q)` with `q` over the modular scheme.
pub type CentralElement = ExtElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BraidGen {
    S1,
    S2,
    X,
    Y,
    H,
}

impl BraidGen {
    fn name(self) -> &'static str {
        match self {
            BraidGen::S1 => "s1",
            BraidGen::S2 => "s2",
            BraidGen::X => "x",
            BraidGen::Y => "y",
            BraidGen::H => "h",
        }
    }

    /// Exponent sum of one letter.
    fn weight(self) -> i64 {
        match self {
            BraidGen::S1 | BraidGen::S2 => 1,
            BraidGen::X => 3,
            BraidGen::Y => 2,
            BraidGen::H => 6,
        }
    }
}

/// An unreduced braid word in mixed σ/x/y/h letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BraidWord {
    pub letters: Vec<(BraidGen, i64)>,
}

impl BraidWord {
    pub fn new(letters: impl IntoIterator<Item = (BraidGen, i64)>) -> Self {
        BraidWord {
            letters: letters.into_iter().filter(|&(_, e)| e != 0).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        BraidWord::new(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord::new(self.letters.iter().rev().map(|&(g, e)| (g, -e)))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(g.name())?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses `s1 s2^-1 x Y h^2`; upper-case letters denote inverses.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for (name, exponent, pos) in parse_tokens(text)? {
        let (g, sign) = match name.as_str() {
            "s1" => (BraidGen::S1, 1),
            "s2" => (BraidGen::S2, 1),
            "S1" => (BraidGen::S1, -1),
            "S2" => (BraidGen::S2, -1),
            "x" => (BraidGen::X, 1),
            "X" => (BraidGen::X, -1),
            "y" => (BraidGen::Y, 1),
            "Y" => (BraidGen::Y, -1),
            "h" => (BraidGen::H, 1),
            "H" => (BraidGen::H, -1),
            _ => return Err(Error::parse(pos, format!("unknown braid letter {name:?}"))),
        };
        letters.push((g, sign * exponent));
    }
    Ok(BraidWord::new(letters))
}

pub fn scheme() -> Arc<ExtensionScheme> {
    static SCHEME: OnceLock<Arc<ExtensionScheme>> = OnceLock::new();
    SCHEME
        .get_or_init(|| ExtensionScheme::new(modular::scheme(), vec![1, 1], vec![1, 1], "h").expect("valid"))
        .clone()
}

fn element(m: i64, q: &str) -> CentralElement {
    ExtElement::from_parts(&scheme(), m, &modular_word(q)).expect("modular word")
}

/// Normal form of `x`.
pub fn x() -> CentralElement {
    element(0, "a")
}

/// Normal form of `y`.
pub fn y() -> CentralElement {
    element(0, "b")
}

/// Normal form of `h`.
pub fn h() -> CentralElement {
    ExtElement::fiber(&scheme(), 1)
}

pub fn sigma1() -> CentralElement {
    // σ1 = y⁻¹ x
    y().inverse().mul(&x())
}

pub fn sigma2() -> CentralElement {
    // σ2 = x⁻¹ y²
    x().inverse().mul(&y().pow(2))
}

pub fn normal_form(w: &BraidWord) -> CentralElement {
    let s = scheme();
    let (s1, s2) = (sigma1(), sigma2());
    let mut out = ExtElement::identity(&s);
    for &(g, e) in &w.letters {
        let piece = match g {
            BraidGen::S1 => s1.pow(e),
            BraidGen::S2 => s2.pow(e),
            BraidGen::X => ExtElement::from_letters(&s, [Letter::Gen(0, e)]),
            BraidGen::Y => ExtElement::from_letters(&s, [Letter::Gen(1, e)]),
            BraidGen::H => ExtElement::fiber(&s, e),
        };
        out = out.mul(&piece);
    }
    out
}

/// `h^m · s(q)` spelled in `x`, `y`, `h`.
pub fn section(g: &CentralElement) -> BraidWord {
    let head = std::iter::once((BraidGen::H, g.m));
    let tail = g.q.syllables().iter().map(|s| {
        let gen = if s.generator == 0 { BraidGen::X } else { BraidGen::Y };
        (gen, s.exponent)
    });
    BraidWord::new(head.chain(tail))
}

/// The same element spelled in `σ1`, `σ2` only.
pub fn to_sigma_word(g: &CentralElement) -> BraidWord {
    let mut letters = Vec::new();
    for (gen, e) in section(g).letters {
        let unit: &[(BraidGen, i64)] = match gen {
            BraidGen::X => &[(BraidGen::S1, 1), (BraidGen::S2, 1), (BraidGen::S1, 1)],
            BraidGen::Y => &[(BraidGen::S1, 1), (BraidGen::S2, 1)],
            BraidGen::H => &[(BraidGen::S1, 1), (BraidGen::S2, 1)],
            _ => unreachable!("section uses x, y, h"),
        };
        let reps = if gen == BraidGen::H { 3 * e.abs() } else { e.abs() };
        for _ in 0..reps {
            if e > 0 {
                letters.extend_from_slice(unit);
            } else {
                letters.extend(unit.iter().rev().map(|&(g, _)| (g, -1)));
            }
        }
    }
    BraidWord::new(letters)
}

pub fn exponent_sum(w: &BraidWord) -> i64 {
    w.letters.iter().map(|&(g, e)| g.weight() * e).sum()
}

/// Exponent sum read off a normal form: `6m + 3·#a + 2·Σ(b-exponents)`.
pub fn element_exponent_sum(g: &CentralElement) -> i64 {
    6 * g.m + 3 * g.q.exponent_count(0) + 2 * g.q.exponent_count(1)
}

fn check_b3(g: &CentralElement) -> Result<()> {
    if **g.scheme() == *scheme() {
        Ok(())
    } else {
        Err(Error::SchemeMismatch)
    }
}

/// Conjugacy in B₃: equal exponent sums and conjugate images. Returns `k`
/// with `k · g1 · k⁻¹ = g2`.
pub fn conjugate_elements(g1: &CentralElement, g2: &CentralElement) -> Result<Option<CentralElement>> {
    check_b3(g1)?;
    check_b3(g2)?;
    if element_exponent_sum(g1) != element_exponent_sum(g2) {
        return Ok(None);
    }
    let Some(c) = is_conjugate(&g1.q, &g2.q)? else {
        return Ok(None);
    };
    let k = ExtElement::lift(&scheme(), &c)?;
    if g1.conjugate_by(&k) != *g2 {
        return Err(Error::InvalidCertificate(format!("lifted conjugator {k} failed")));
    }
    Ok(Some(k))
}

pub fn conjugate_b3(g1: &BraidWord, g2: &BraidWord) -> Result<Option<BraidWord>> {
    Ok(conjugate_elements(&normal_form(g1), &normal_form(g2))?.map(|k| section(&k)))
}

/// `g = c · [x, k] · c⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorWitness {
    pub k: CentralElement,
    pub conjugator: CentralElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct B3Reversal {
    pub reverser: CentralElement,
    pub commutator: Option<CommutatorWitness>,
}

/// Exact decision: exponent sum zero and reversible image.
pub fn reversible_element(g: &CentralElement) -> Result<Option<B3Reversal>> {
    check_b3(g)?;
    if g.is_identity() {
        return Err(Error::TrivialElement);
    }
    if element_exponent_sum(g) != 0 || g.q.is_identity() {
        return Ok(None);
    }
    let Some(rev) = reversible(&g.q)? else {
        return Ok(None);
    };
    let reverser = ExtElement::lift(&scheme(), &rev.reverser)?;
    if g.conjugate_by(&reverser) != g.inverse() {
        return Err(Error::InvalidCertificate(format!("lifted reverser {reverser} failed")));
    }
    Ok(Some(B3Reversal {
        commutator: commutator_witness(g, &rev.involutions),
        reverser,
    }))
}

/// The image splits as `u·v` with `u = s a s⁻¹` and `v = t a t⁻¹`, so it equals
/// `s [a, s⁻¹t] s⁻¹`; lifting gives a commutator with the same exponent sum.
fn commutator_witness(g: &CentralElement, (u, v): &(Word, Word)) -> Option<CommutatorWitness> {
    let a = modular_word("a");
    let s = is_conjugate(&a, u).ok()??;
    let t = is_conjugate(&a, v).ok()??;
    let k = ExtElement::lift(&scheme(), &s.inverse().mul(&t)).ok()?;
    let conjugator = ExtElement::lift(&scheme(), &s).ok()?;
    let candidate = x().commutator(&k).conjugate_by(&conjugator);
    (candidate == *g).then_some(CommutatorWitness { k, conjugator })
}

pub fn reversible_b3(g: &BraidWord) -> Result<Option<B3Reversal>> {
    reversible_element(&normal_form(g))
}

/// `g · h1 g h1⁻¹ · k g k⁻¹`
pub fn gen3_relation_b3(g: &CentralElement, h1: &CentralElement, k: &CentralElement) -> CentralElement {
    g.mul(&g.conjugate_by(h1)).mul(&g.conjugate_by(k))
}

/// Integer `x` with `n·x + total = 0`.
pub fn fiber_offset(n: i64, total: i64) -> std::result::Result<i64, Reason> {
    if n != 0 && total % n == 0 {
        Ok(-total / n)
    } else {
        Err(Reason::NoIntegerOffset { n, total })
    }
}

/// For `e1^p1 · e2^p2 · h^x` with `e1`, `e2` conjugates of `y`: since
/// `e^(3p) = h^p`, the element is generalised 3-torsion through this
/// construction only when `3x + p1 + p2 = 0`.
pub fn product_form_offset(p1: i64, p2: i64) -> std::result::Result<i64, Reason> {
    fiber_offset(3, p1 + p2)
}

/// Conjugate of `y` by the lift of `z`.
fn y_conjugate(z: &Word) -> CentralElement {
    y().conjugate_by(&ExtElement::lift(&scheme(), z).expect("modular word"))
}

pub fn gen3_torsion_element(g: &CentralElement, bound: i64) -> Result<Gen3Verdict<CentralElement>> {
    check_b3(g)?;
    if g.is_identity() {
        return Err(Error::TrivialElement);
    }
    if bound <= 0 {
        return Err(Error::NonpositiveBound(bound));
    }
    // three conjugates of g have exponent sum 3·e(g)
    if element_exponent_sum(g) != 0 {
        return Ok(Gen3Verdict::no(Reason::ExponentSumNonzero, bound));
    }
    let quotient = gen3_torsion(&g.q, bound)?;
    if quotient.tag == Gen3Tag::No {
        return Ok(Gen3Verdict::no(Reason::Quotient(Box::new(quotient.reason)), bound));
    }
    let verdict = if let Some(cert) = search_product_form(g, bound)? {
        Gen3Verdict::yes(cert, Reason::ProductOfConjugateGenerators, bound)
    } else if let Some(qc) = &quotient.certificate {
        // the lifted relation is h^t with 6t = 3·e(g) = 0
        let s = scheme();
        let cert = Gen3Certificate {
            h1: ExtElement::lift(&s, &qc.h1)?,
            k: ExtElement::lift(&s, &qc.k)?,
        };
        Gen3Verdict::yes(cert, Reason::LiftedQuotientCertificate, bound)
    } else {
        Gen3Verdict {
            tag: Gen3Tag::UnknownWithinBound,
            certificate: None,
            reason: Reason::Quotient(Box::new(quotient.reason)),
            bound_used: bound,
        }
    };
    if let Some(c) = &verdict.certificate {
        if !gen3_relation_b3(g, &c.h1, &c.k).is_identity() {
            return Err(Error::InvalidCertificate(format!("({}, {}) failed for {g}", c.h1, c.k)));
        }
    }
    Ok(verdict)
}

/// Looks for `g ~ e1 · e2² · h⁻¹` with distinct conjugates `e1`, `e2` of `y`.
fn search_product_form(g: &CentralElement, bound: i64) -> Result<Option<Gen3Certificate<CentralElement>>> {
    let zs: Vec<Word> = enumerate_reduced(&modular::scheme(), bound as usize).collect();
    let conjugates: Vec<CentralElement> = zs.iter().map(y_conjugate).collect();
    let h_inv = h().inverse();
    for e1 in &conjugates {
        for e2 in &conjugates {
            if e1 == e2 {
                continue;
            }
            let e2sq = e2.pow(2);
            let candidate = e1.mul(&e2sq).mul(&h_inv);
            if let Some(c) = conjugate_elements(&candidate, g)? {
                // e1 f h⁻¹ with f = e2²: f⁻¹, f are conjugators since e1³ f³ = h³
                let cert = Gen3Certificate {
                    h1: e2sq.inverse().conjugate_by(&c),
                    k: e2sq.conjugate_by(&c),
                };
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

pub fn gen3_torsion_b3(g: &BraidWord, bound: i64) -> Result<Gen3Verdict<CentralElement>> {
    gen3_torsion_element(&normal_form(g), bound)
}

/// Default bound for a B₃ element: the modular default on its image.
pub fn default_search_bound(g: &CentralElement) -> i64 {
    modular::default_search_bound(&g.q)
}

/// Exact reverser search in the extension engine; agrees with
/// [`reversible_element`] and exists as a cross-check.
pub fn extension_reverser(g: &CentralElement) -> Result<Option<CentralElement>> {
    extension::reverser(g)
}
