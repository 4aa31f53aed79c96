//! Cyclic extensions `1 → ⟨h⟩ → G → Q → 1` of a free product of cyclic groups.
//!
//! Each finite-order quotient generator `c` of order `μ` lifts to an element
//! with `c^μ = h^β`, and every generator `z` acts on the fiber by
//! `z h z⁻¹ = h^φ(z)` with `φ(z) = ±1`. Elements are stored as
//! `h^m · s(q)` where `q` is a reduced quotient word and `s` lifts each
//! syllable `c^e` (with `e` in its canonical range) literally. The pair
//! `(m, q)` is a normal form: equal pairs iff equal elements.
//!
//! B₃ is the instance over PSL(2,Z) with `β = 1` and trivial `φ`; the
//! Seifert groups with nonempty boundary are the general case.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::word::{conjugate_to_inverse, cyclic_reduce, GroupScheme, Order, Syllable, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionScheme {
    quotient: Arc<GroupScheme>,
    beta: Vec<i64>,
    phi: Vec<i8>,
    fiber_name: String,
}

impl ExtensionScheme {
    /// `beta[i]` is used only for finite-order generators; `phi[i]` must be
    /// `+1` on finite-order generators (they commute with `h`).
    pub fn new(quotient: Arc<GroupScheme>, beta: Vec<i64>, phi: Vec<i8>, fiber_name: &str) -> Result<Arc<Self>> {
        if beta.len() != quotient.len() || phi.len() != quotient.len() {
            return Err(Error::InvalidInvariant("beta/phi length differs from generator count".into()));
        }
        for (i, &p) in phi.iter().enumerate() {
            if p != 1 && p != -1 {
                return Err(Error::InvalidInvariant(format!("phi({}) = {p}", quotient.name(i))));
            }
            if p == -1 && matches!(quotient.order(i), Order::Finite(_)) {
                return Err(Error::InvalidInvariant(format!(
                    "finite-order generator {} must commute with the fiber",
                    quotient.name(i)
                )));
            }
        }
        if quotient.index_of(fiber_name).is_some() {
            return Err(Error::InvalidInvariant(format!("fiber name {fiber_name:?} clashes")));
        }
        Ok(Arc::new(ExtensionScheme {
            quotient,
            beta,
            phi,
            fiber_name: fiber_name.to_string(),
        }))
    }

    pub fn quotient(&self) -> &Arc<GroupScheme> {
        &self.quotient
    }

    pub fn beta(&self, generator: usize) -> i64 {
        self.beta[generator]
    }

    pub fn phi(&self, generator: usize) -> i8 {
        self.phi[generator]
    }

    pub fn fiber_name(&self) -> &str {
        &self.fiber_name
    }

    /// True when `h` is central.
    pub fn is_central(&self) -> bool {
        self.phi.iter().all(|&p| p == 1)
    }

    /// `φ` of a quotient word.
    pub fn phi_of(&self, w: &Word) -> i8 {
        w.syllables()
            .iter()
            .filter(|s| self.phi[s.generator] == -1 && s.exponent.rem_euclid(2) == 1)
            .fold(1, |acc, _| -acc)
    }
}

/// A letter of the extension alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    Gen(usize, i64),
    Fiber(i64),
}

/// `h^m · s(q)`.
#[derive(Clone, Debug)]
pub struct ExtElement {
    scheme: Arc<ExtensionScheme>,
    pub m: i64,
    pub q: Word,
}

impl PartialEq for ExtElement {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.q == other.q
    }
}

impl Eq for ExtElement {}

impl Hash for ExtElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.m.hash(state);
        self.q.hash(state);
    }
}

/// Right-multiplication state: central exponent plus a reduced syllable stack
/// with running `φ` of each prefix.
struct Builder<'a> {
    scheme: &'a ExtensionScheme,
    m: i64,
    stack: Vec<Syllable>,
    prefix_phi: Vec<i8>,
}

impl<'a> Builder<'a> {
    fn new(scheme: &'a ExtensionScheme) -> Self {
        Builder {
            scheme,
            m: 0,
            stack: Vec::new(),
            prefix_phi: Vec::new(),
        }
    }

    fn phi_all(&self) -> i8 {
        self.prefix_phi.last().copied().unwrap_or(1)
    }

    fn push_syllable(&mut self, s: Syllable) {
        let phi = self.phi_all();
        let step = if s.exponent.rem_euclid(2) == 1 { self.scheme.phi[s.generator] } else { 1 };
        self.stack.push(s);
        self.prefix_phi.push(phi * step);
    }

    fn pop(&mut self) -> Syllable {
        self.prefix_phi.pop();
        self.stack.pop().expect("nonempty stack")
    }

    fn push_fiber(&mut self, e: i64) {
        // s(q) · h^e = h^(φ(q) e) · s(q)
        self.m += self.phi_all() as i64 * e;
    }

    fn push_gen(&mut self, generator: usize, exponent: i64) {
        let mut total = exponent;
        if self.stack.last().is_some_and(|top| top.generator == generator) {
            total += self.pop().exponent;
        }
        match self.scheme.quotient.order(generator) {
            Order::Finite(mu) => {
                let mu = mu as i64;
                let (t, r) = (total.div_euclid(mu), total.rem_euclid(mu));
                // s(p) · c^(tμ + r) = h^(φ(p) β t) · s(p) · c^r
                self.m += self.phi_all() as i64 * self.scheme.beta[generator] * t;
                if r != 0 {
                    self.push_syllable(Syllable { generator, exponent: r });
                }
            }
            Order::Infinite => {
                if total != 0 {
                    self.push_syllable(Syllable { generator, exponent: total });
                }
            }
        }
    }

    fn push(&mut self, letter: Letter) {
        match letter {
            Letter::Gen(g, e) => self.push_gen(g, e),
            Letter::Fiber(e) => self.push_fiber(e),
        }
    }

    fn finish(self, scheme: &Arc<ExtensionScheme>) -> ExtElement {
        ExtElement {
            scheme: scheme.clone(),
            m: self.m,
            q: Word::from_syllables(&scheme.quotient, self.stack),
        }
    }
}

impl ExtElement {
    pub fn identity(scheme: &Arc<ExtensionScheme>) -> Self {
        ExtElement {
            scheme: scheme.clone(),
            m: 0,
            q: Word::identity(&scheme.quotient),
        }
    }

    pub fn from_letters(scheme: &Arc<ExtensionScheme>, letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut b = Builder::new(scheme);
        for l in letters {
            b.push(l);
        }
        b.finish(scheme)
    }

    /// `h^m · s(q)` for an already reduced `q`.
    pub fn from_parts(scheme: &Arc<ExtensionScheme>, m: i64, q: &Word) -> Result<Self> {
        if !Arc::ptr_eq(q.scheme(), &scheme.quotient) && **q.scheme() != *scheme.quotient {
            return Err(Error::SchemeMismatch);
        }
        Ok(ExtElement {
            scheme: scheme.clone(),
            m,
            q: q.clone(),
        })
    }

    /// The section lift `s(q)`.
    pub fn lift(scheme: &Arc<ExtensionScheme>, q: &Word) -> Result<Self> {
        Self::from_parts(scheme, 0, q)
    }

    pub fn fiber(scheme: &Arc<ExtensionScheme>, m: i64) -> Self {
        ExtElement {
            scheme: scheme.clone(),
            m,
            q: Word::identity(&scheme.quotient),
        }
    }

    pub fn scheme(&self) -> &Arc<ExtensionScheme> {
        &self.scheme
    }

    pub fn is_identity(&self) -> bool {
        self.m == 0 && self.q.is_identity()
    }

    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.q.len() + 1);
        if self.m != 0 {
            out.push(Letter::Fiber(self.m));
        }
        out.extend(self.q.syllables().iter().map(|s| Letter::Gen(s.generator, s.exponent)));
        out
    }

    pub fn mul(&self, other: &ExtElement) -> ExtElement {
        let mut b = Builder::new(&self.scheme);
        b.m = self.m;
        for &s in self.q.syllables() {
            b.push_syllable(s);
        }
        for l in other.letters() {
            b.push(l);
        }
        b.finish(&self.scheme)
    }

    pub fn inverse(&self) -> ExtElement {
        let letters = self
            .q
            .syllables()
            .iter()
            .rev()
            .map(|s| Letter::Gen(s.generator, -s.exponent))
            .chain(std::iter::once(Letter::Fiber(-self.m)));
        ExtElement::from_letters(&self.scheme, letters)
    }

    pub fn pow(&self, n: i64) -> ExtElement {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = ExtElement::identity(&self.scheme);
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `k · self · k⁻¹`
    pub fn conjugate_by(&self, k: &ExtElement) -> ExtElement {
        k.mul(self).mul(&k.inverse())
    }

    /// `[self, k] = self · k · self⁻¹ · k⁻¹`
    pub fn commutator(&self, k: &ExtElement) -> ExtElement {
        self.mul(k).mul(&self.inverse()).mul(&k.inverse())
    }

    pub fn phi(&self) -> i8 {
        self.scheme.phi_of(&self.q)
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        let mut first = true;
        if self.m != 0 {
            f.write_str(&self.scheme.fiber_name)?;
            if self.m != 1 {
                write!(f, "^{}", self.m)?;
            }
            first = false;
        }
        if !self.q.is_identity() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{}", self.q)?;
        }
        Ok(())
    }
}

/// Centralizer of a nontrivial quotient element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Centralizer {
    /// Finite cyclic, listed in full.
    Finite(Vec<Word>),
    /// Infinite cyclic with this generator.
    Cyclic(Word),
}

pub fn quotient_centralizer(q: &Word) -> Centralizer {
    let scheme = q.scheme();
    let (core, c) = cyclic_reduce(q);
    let syl = core.syllables();
    if syl.len() == 1 {
        let g = syl[0].generator;
        return match scheme.order(g) {
            Order::Finite(mu) => Centralizer::Finite(
                (0..mu as i64)
                    .map(|j| Word::from_syllables(scheme, [Syllable { generator: g, exponent: j }]).conjugate_by(&c))
                    .collect(),
            ),
            Order::Infinite => Centralizer::Cyclic(
                Word::from_syllables(scheme, [Syllable { generator: g, exponent: 1 }]).conjugate_by(&c),
            ),
        };
    }
    let root = Word::from_syllables(scheme, syl[..core.period()].iter().copied());
    Centralizer::Cyclic(root.conjugate_by(&c))
}

/// Central part of `R g R⁻¹ g`, when `R` projects to a reverser of `g`'s image.
fn defect(r: &ExtElement, g: &ExtElement) -> Option<i64> {
    let x = g.conjugate_by(r).mul(g);
    x.q.is_identity().then_some(x.m)
}

/// Exact reversibility decision in the extension.
///
/// Every reverser of `g` projects to `r·z` with `r` a fixed reverser of the
/// image and `z` in its centralizer, so the search runs over lifts of that
/// coset and over fiber powers. The central defect of `R g R⁻¹ g` moves in an
/// arithmetic progression along an infinite cyclic centralizer and by even
/// steps under fiber powers when `φ(g) = -1`; zero is solved for directly.
pub fn reverser(g: &ExtElement) -> Result<Option<ExtElement>> {
    if g.is_identity() {
        return Err(Error::TrivialElement);
    }
    let scheme = g.scheme.clone();
    let target = g.inverse();
    let validated = |r: ExtElement| (g.conjugate_by(&r) == target).then_some(r);

    if g.q.is_identity() {
        let quotient = scheme.quotient();
        return Ok((0..quotient.len())
            .find(|&i| scheme.phi(i) == -1)
            .and_then(|i| {
                let z = Word::from_syllables(quotient, [Syllable { generator: i, exponent: 1 }]);
                validated(ExtElement::lift(&scheme, &z).ok()?)
            }));
    }

    let Some(r) = conjugate_to_inverse(&g.q)? else {
        return Ok(None);
    };
    let twisted = g.phi() == -1;
    let finalize = |candidate: ExtElement| -> Option<ExtElement> {
        let d = defect(&candidate, g)?;
        if d == 0 {
            validated(candidate)
        } else if twisted && d % 2 == 0 {
            validated(ExtElement::fiber(&scheme, -d / 2).mul(&candidate))
        } else {
            None
        }
    };
    let lift = |w: &Word| ExtElement::lift(&scheme, w).expect("same quotient");

    match quotient_centralizer(&g.q) {
        Centralizer::Finite(elements) => Ok(elements.iter().find_map(|z| finalize(lift(&r.mul(z))))),
        Centralizer::Cyclic(rho) => {
            let p = lift(&rho);
            let shift = g.conjugate_by(&p).mul(&target);
            debug_assert!(shift.q.is_identity());
            let c = shift.m;
            let d0 = defect(&lift(&r), g).expect("reverser of the image");
            let phi_r = scheme.phi_of(&r) as i64;
            let js: Vec<i64> = if scheme.phi_of(&rho) == -1 || twisted || c == 0 {
                vec![0, 1]
            } else if d0 % c == 0 {
                vec![-phi_r * d0 / c]
            } else {
                vec![]
            };
            Ok(js.into_iter().find_map(|j| finalize(lift(&r.mul(&rho.pow(j))))))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b3() -> Arc<ExtensionScheme> {
        ExtensionScheme::new(GroupScheme::modular(), vec![1, 1], vec![1, 1], "h").unwrap()
    }

    fn q(t: &str) -> Word {
        Word::parse(&GroupScheme::modular(), t).unwrap()
    }

    #[test]
    fn relations_hold() {
        let s = b3();
        let x = ExtElement::lift(&s, &q("a")).unwrap();
        let y = ExtElement::lift(&s, &q("b")).unwrap();
        assert_eq!(x.pow(2), ExtElement::fiber(&s, 1));
        assert_eq!(y.pow(3), ExtElement::fiber(&s, 1));
        assert_eq!(y.pow(-1), ExtElement::from_parts(&s, -1, &q("b^2")).unwrap());
    }

    #[test]
    fn associativity_on_samples() {
        let s = b3();
        let els: Vec<ExtElement> = crate::word::enumerate_reduced(&GroupScheme::modular(), 3)
            .flat_map(|w| (-1..=1).map(move |m| (m, w.clone())))
            .map(|(m, w)| ExtElement::from_parts(&s, m, &w).unwrap())
            .collect();
        for a in els.iter().step_by(5) {
            for b in els.iter().step_by(3) {
                for c in els.iter().step_by(7) {
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                }
                assert!(a.mul(&a.inverse()).is_identity());
            }
        }
    }

    #[test]
    fn twisted_fiber() {
        let quotient = GroupScheme::parse("c1:2, d1:inf").unwrap();
        let s = ExtensionScheme::new(quotient.clone(), vec![1, 0], vec![1, -1], "h").unwrap();
        let d = ExtElement::lift(&s, &Word::parse(&quotient, "d1").unwrap()).unwrap();
        let h = ExtElement::fiber(&s, 1);
        assert_eq!(h.conjugate_by(&d), ExtElement::fiber(&s, -1));
        assert_eq!(reverser(&h).unwrap(), Some(d));
    }

    #[test]
    fn rejects_twisted_torsion_generator() {
        let quotient = GroupScheme::parse("c1:2").unwrap();
        assert!(ExtensionScheme::new(quotient, vec![1], vec![-1], "h").is_err());
    }

    #[test]
    fn centralizers() {
        assert_eq!(
            quotient_centralizer(&q("a b a b")),
            Centralizer::Cyclic(q("a b"))
        );
        match quotient_centralizer(&q("a b a")) {
            Centralizer::Finite(els) => assert_eq!(els.len(), 3),
            other => panic!("{other:?}"),
        }
    }
}
