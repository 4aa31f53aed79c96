use super::data::SeifertData;
use super::presentation::{quotient_scheme, QuotientScheme};
use crate::error::{Error, Result};
use crate::extension::{self, quotient_centralizer, Centralizer, ExtElement};
use crate::word::conjugate_to_inverse;

/// π₁ of a Seifert-fibered space over a base with boundary, with exact
/// normal forms `h^m · s(q)`.
#[derive(Clone, Debug)]
pub struct SeifertGroup {
    pub data: SeifertData,
    pub quotient: QuotientScheme,
}

impl SeifertGroup {
    pub fn new(data: &SeifertData) -> Result<Self> {
        let quotient = quotient_scheme(data).ok_or(Error::UnsupportedBase)?;
        Ok(SeifertGroup {
            data: data.clone(),
            quotient,
        })
    }

    pub fn parse_element(&self, text: &str) -> Result<ExtElement> {
        self.quotient.parse_element(text)
    }

    pub fn identity(&self) -> ExtElement {
        ExtElement::identity(&self.quotient.extension)
    }
}

/// Exact reversibility decision; the reverser is validated by multiplication.
pub fn reversible_seifert(g: &ExtElement) -> Result<Option<ExtElement>> {
    extension::reverser(g)
}

/// Parses `word` over the presentation alphabet of `d` and decides it.
pub fn reversible_seifert_word(word: &str, d: &SeifertData) -> Result<Option<ExtElement>> {
    let group = SeifertGroup::new(d)?;
    reversible_seifert(&group.parse_element(word)?)
}

/// Direct scan of the reverser coset: lifts of `r·ρʲ` for `|j| ≤ radius`
/// (or the whole finite centralizer), times `h^t` for `|t| ≤ radius`.
pub fn scan_reverser(g: &ExtElement, radius: i64) -> Result<Option<ExtElement>> {
    if g.is_identity() {
        return Err(Error::TrivialElement);
    }
    let scheme = g.scheme().clone();
    let target = g.inverse();
    let fibers: Vec<ExtElement> = (-radius..=radius).map(|t| ExtElement::fiber(&scheme, t)).collect();
    let try_base = |base: ExtElement| fibers.iter().map(|f| f.mul(&base)).find(|c| g.conjugate_by(c) == target);
    if g.q.is_identity() {
        let quotient = scheme.quotient();
        for i in 0..quotient.len() {
            if scheme.phi(i) == -1 {
                let z = ExtElement::from_letters(&scheme, [extension::Letter::Gen(i, 1)]);
                if let Some(c) = try_base(z) {
                    return Ok(Some(c));
                }
            }
        }
        return Ok(None);
    }
    let Some(r) = conjugate_to_inverse(&g.q)? else {
        return Ok(None);
    };
    let coset: Vec<_> = match quotient_centralizer(&g.q) {
        Centralizer::Finite(zs) => zs.iter().map(|z| r.mul(z)).collect(),
        Centralizer::Cyclic(rho) => (-radius..=radius).map(|j| r.mul(&rho.pow(j))).collect(),
    };
    for q in coset {
        if let Some(c) = try_base(ExtElement::lift(&scheme, &q)?) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}
