//! Definition-level brute force, independent of the structural deciders.
//!
//! Every search scans candidates in enumeration order and tests the defining
//! equation by multiplication only; no conjugacy or cyclic-word machinery is
//! used here.

use serde::Serialize;

use crate::braid3::{self, CentralElement};
use crate::error::{Error, Result};
use crate::extension::{ExtElement, ExtensionScheme};
use crate::modular::{self, gen3_relation, gen3_torsion, parabolic_generator, Gen3Tag};
use crate::seifert::{parse_seifert, reversible_seifert, SeifertGroup};
use crate::word::{enumerate_reduced, Word};
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub max_conjugator_syllables: usize,
    pub max_central_exponent: i64,
    pub max_candidates: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_conjugator_syllables: 6,
            max_central_exponent: 2,
            max_candidates: 1_000_000,
        }
    }
}

impl SearchBudget {
    pub fn new(max_conjugator_syllables: usize, max_central_exponent: i64, max_candidates: usize) -> Result<Self> {
        if max_conjugator_syllables == 0 || max_central_exponent <= 0 || max_candidates == 0 {
            return Err(Error::InvalidInvariant("search budget entries must be positive".into()));
        }
        Ok(SearchBudget {
            max_conjugator_syllables,
            max_central_exponent,
            max_candidates,
        })
    }

    fn words(&self, scheme: &Arc<crate::GroupScheme>) -> Vec<Word> {
        enumerate_reduced(scheme, self.max_conjugator_syllables)
            .take(self.max_candidates)
            .collect()
    }

    /// `h^m · s(q)` for `|m| ≤ max_central_exponent`, ordered by `q` then `m`.
    fn lifts(&self, scheme: &Arc<ExtensionScheme>) -> Vec<ExtElement> {
        let ms: Vec<i64> = std::iter::once(0)
            .chain((1..=self.max_central_exponent).flat_map(|m| [m, -m]))
            .collect();
        enumerate_reduced(scheme.quotient(), self.max_conjugator_syllables)
            .flat_map(|q| ms.iter().map(move |&m| (m, q.clone())).collect::<Vec<_>>())
            .take(self.max_candidates)
            .map(|(m, q)| ExtElement::from_parts(scheme, m, &q).expect("same quotient"))
            .collect()
    }

    fn covers(&self, e: &ExtElement) -> bool {
        e.q.len() <= self.max_conjugator_syllables && e.m.abs() <= self.max_central_exponent
    }
}

pub fn brute_reversible(w: &Word, budget: &SearchBudget) -> Result<Option<Word>> {
    if w.is_identity() {
        return Err(Error::TrivialElement);
    }
    let target = w.inverse();
    Ok(budget
        .words(w.scheme())
        .into_iter()
        .find(|k| w.conjugate_by(k) == target))
}

pub fn brute_gen3(w: &Word, budget: &SearchBudget) -> Result<Option<(Word, Word)>> {
    if w.is_identity() {
        return Err(Error::TrivialElement);
    }
    let words = budget.words(w.scheme());
    let mut seen = 0usize;
    for h1 in &words {
        let head = w.mul(&w.conjugate_by(h1));
        for k in &words {
            seen += 1;
            if seen > budget.max_candidates {
                return Ok(None);
            }
            if head.mul(&w.conjugate_by(k)).is_identity() {
                debug_assert!(gen3_relation(w, h1, k).is_identity());
                return Ok(Some((h1.clone(), k.clone())));
            }
        }
    }
    Ok(None)
}

/// Scans lifts `h^m · s(q)` for `k` with `k · g1 · k⁻¹ = g2`.
pub fn brute_conjugate_b3(
    g1: &CentralElement,
    g2: &CentralElement,
    budget: &SearchBudget,
) -> Result<Option<CentralElement>> {
    brute_conjugate_ext(g1, g2, budget)
}

pub fn brute_conjugate_ext(g1: &ExtElement, g2: &ExtElement, budget: &SearchBudget) -> Result<Option<ExtElement>> {
    if g1.scheme() != g2.scheme() {
        return Err(Error::SchemeMismatch);
    }
    Ok(budget.lifts(g1.scheme()).into_iter().find(|k| g1.conjugate_by(k) == *g2))
}

pub fn brute_reversible_ext(g: &ExtElement, budget: &SearchBudget) -> Result<Option<ExtElement>> {
    if g.is_identity() {
        return Err(Error::TrivialElement);
    }
    brute_conjugate_ext(g, &g.inverse(), budget)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub input: String,
    pub structural: String,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub suite: String,
    pub budget: SearchBudget,
    pub checked: usize,
    /// Inputs both sides answered positively.
    pub positive: usize,
    /// Positive structural verdicts whose witness lies outside the budget
    /// while the oracle found none, plus structural unknowns the oracle
    /// settled with a witness larger than the structural bound.
    pub beyond_budget: usize,
    /// Inputs where both sides stayed inconclusive.
    pub unknown: usize,
    pub mismatches: Vec<Mismatch>,
}

pub const SUITES: [&str; 5] = [
    "pslz-reversible",
    "pslz-gen3",
    "b3-reversible",
    "b3-conjugacy",
    "seifert-reversible",
];

/// Fixed data sets for the Seifert sweep: the trefoil complement and a base
/// with two boundary loops reversing the fiber.
pub const SEIFERT_SWEEP_DATA: [&str; 2] = [
    "(O,o,0 | 1; (2,1),(3,1)); boundaries=1",
    "(O,o,0 | 0; (2,1),(2,1)); boundaries=2; phi: d1=-1,d2=-1",
];

struct Tally {
    report: SweepReport,
}

impl Tally {
    fn new(suite: &str, budget: &SearchBudget) -> Self {
        Tally {
            report: SweepReport {
                suite: suite.into(),
                budget: *budget,
                checked: 0,
                positive: 0,
                beyond_budget: 0,
                unknown: 0,
                mismatches: Vec::new(),
            },
        }
    }

    fn mismatch(&mut self, input: impl ToString, structural: impl ToString, oracle: impl ToString) {
        self.report.mismatches.push(Mismatch {
            input: input.to_string(),
            structural: structural.to_string(),
            oracle: oracle.to_string(),
        });
    }

    /// Compares existence verdicts; `covered` says whether the structural
    /// witness fits the oracle budget.
    fn compare<W: ToString, V: ToString>(&mut self, input: impl ToString, structural: Option<(W, bool)>, oracle: Option<V>) {
        self.report.checked += 1;
        match (structural, oracle) {
            (Some(_), Some(_)) => self.report.positive += 1,
            (None, None) => {}
            (Some((_, false)), None) => self.report.beyond_budget += 1,
            (s, o) => self.mismatch(
                input,
                s.map_or("none".to_string(), |(w, _)| w.to_string()),
                o.map_or("none".to_string(), |w| w.to_string()),
            ),
        }
    }
}

fn show<T: ToString>(o: &Option<T>) -> String {
    o.as_ref().map_or("none".into(), ToString::to_string)
}

pub fn sweep_agreement(suite: &str, budget: &SearchBudget) -> Result<SweepReport> {
    let mut tally = Tally::new(suite, budget);
    let pslz = modular::scheme();
    match suite {
        "pslz-reversible" => {
            for w in enumerate_reduced(&pslz, budget.max_conjugator_syllables).skip(1) {
                let s = modular::reversible(&w)?.map(|r| {
                    let fits = r.reverser.len() <= budget.max_conjugator_syllables;
                    (r.reverser, fits)
                });
                tally.compare(&w, s, brute_reversible(&w, budget)?);
            }
        }
        "pslz-gen3" => {
            let parabolic = (1..=10i64).flat_map(|n| [n, -n]).map(|n| parabolic_generator().pow(n));
            let small = enumerate_reduced(&pslz, budget.max_conjugator_syllables.min(6)).skip(1);
            for w in parabolic.chain(small) {
                let bound = modular::default_search_bound(&w);
                let v = gen3_torsion(&w, bound)?;
                let o = brute_gen3(&w, budget)?;
                tally.report.checked += 1;
                match (v.tag, &o) {
                    (Gen3Tag::Yes, Some(_)) => tally.report.positive += 1,
                    (Gen3Tag::No, None) => {}
                    (Gen3Tag::UnknownWithinBound, None) => tally.report.unknown += 1,
                    (Gen3Tag::UnknownWithinBound, Some((h1, k))) if h1.len().max(k.len()) as i64 > bound => {
                        tally.report.beyond_budget += 1
                    }
                    (Gen3Tag::Yes, None) => {
                        let c = v.certificate.as_ref().expect("yes carries a certificate");
                        if c.h1.len().max(c.k.len()) > budget.max_conjugator_syllables {
                            tally.report.beyond_budget += 1;
                        } else {
                            tally.mismatch(&w, v.tag, "none");
                        }
                    }
                    (tag, o) => tally.mismatch(&w, tag, show(&o.as_ref().map(|(h1, k)| format!("({h1}, {k})")))),
                }
            }
        }
        "b3-reversible" => {
            let s = braid3::scheme();
            for g in b3_inputs(budget, budget.max_conjugator_syllables.min(4)) {
                let structural = braid3::reversible_element(&g)?.map(|r| {
                    let fits = budget.covers(&r.reverser);
                    (braid3::section(&r.reverser), fits)
                });
                let o = brute_reversible_ext(&g, budget)?.map(|k| braid3::section(&k));
                tally.compare(braid3::section(&g), structural, o);
                debug_assert!(*g.scheme() == s);
            }
        }
        "b3-conjugacy" => {
            let inputs: Vec<CentralElement> = b3_inputs(budget, budget.max_conjugator_syllables.min(3))
                .into_iter()
                .filter(|g| g.m.abs() <= 1)
                .collect();
            for g1 in &inputs {
                for g2 in &inputs {
                    let structural = braid3::conjugate_elements(g1, g2)?.map(|k| {
                        let fits = budget.covers(&k);
                        (braid3::section(&k), fits)
                    });
                    let o = brute_conjugate_b3(g1, g2, budget)?.map(|k| braid3::section(&k));
                    let input = format!("{} ~ {}", braid3::section(g1), braid3::section(g2));
                    tally.compare(input, structural, o);
                }
            }
        }
        "seifert-reversible" => {
            for spec in SEIFERT_SWEEP_DATA {
                let group = SeifertGroup::new(&parse_seifert(spec)?)?;
                let max_q = budget.max_conjugator_syllables.min(4);
                let inputs = SearchBudget { max_conjugator_syllables: max_q, ..*budget }.lifts(&group.quotient.extension);
                for g in inputs.into_iter().filter(|g| !g.is_identity()) {
                    let structural = reversible_seifert(&g)?.map(|r| {
                        let fits = budget.covers(&r);
                        (r, fits)
                    });
                    let o = brute_reversible_ext(&g, budget)?;
                    tally.compare(format!("{g} in {spec}"), structural, o);
                }
            }
        }
        other => return Err(Error::UnknownSuite(other.to_string())),
    }
    Ok(tally.report)
}

/// Nontrivial `h^m · s(q)` with `|q| ≤ max_q` and `|m|` within budget.
fn b3_inputs(budget: &SearchBudget, max_q: usize) -> Vec<CentralElement> {
    SearchBudget {
        max_conjugator_syllables: max_q,
        ..*budget
    }
    .lifts(&braid3::scheme())
    .into_iter()
    .filter(|g| !g.is_identity())
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::modular_word as w;

    fn small() -> SearchBudget {
        SearchBudget::new(4, 1, 1_000_000).unwrap()
    }

    #[test]
    fn brute_examples() {
        let b = SearchBudget::default();
        let r = brute_reversible(&w("a b a b^2"), &b).unwrap().unwrap();
        assert_eq!(w("a b a b^2").conjugate_by(&r), w("a b a b^2").inverse());
        assert_eq!(r, w("a"));
        assert_eq!(brute_reversible(&w("a b"), &b).unwrap(), None);
        assert_eq!(brute_reversible(&w("a"), &b).unwrap(), Some(w("1")));
        assert_eq!(brute_reversible(&w("1"), &b), Err(Error::TrivialElement));
    }

    #[test]
    fn brute_gen3_examples() {
        let b = small();
        let (h1, k) = brute_gen3(&w("a b a b"), &b).unwrap().unwrap();
        assert!(gen3_relation(&w("a b a b"), &h1, &k).is_identity());
        assert_eq!(brute_gen3(&w("b"), &b).unwrap(), Some((w("1"), w("1"))));
        assert_eq!(brute_gen3(&w("a"), &b).unwrap(), None);
    }

    #[test]
    fn brute_b3_examples() {
        let b = small();
        let s1 = braid3::sigma1();
        let s2 = braid3::sigma2();
        let k = brute_conjugate_b3(&s1, &s2, &b).unwrap().unwrap();
        assert_eq!(s1.conjugate_by(&k), s2);
        assert_eq!(
            brute_conjugate_b3(&s1, &s1, &b).unwrap(),
            Some(ExtElement::identity(&braid3::scheme()))
        );
        assert_eq!(brute_conjugate_b3(&braid3::h(), &s1, &b).unwrap(), None);
    }

    #[test]
    fn unknown_suite() {
        assert_eq!(sweep_agreement("nope", &small()), Err(Error::UnknownSuite("nope".into())));
        assert!(SearchBudget::new(0, 1, 1).is_err());
    }

    #[test]
    fn small_sweeps_agree() {
        for suite in SUITES {
            let r = sweep_agreement(suite, &SearchBudget::new(3, 1, 1_000_000).unwrap()).unwrap();
            assert!(r.mismatches.is_empty(), "{suite}: {:?}", r.mismatches);
            assert!(r.checked > 0);
        }
    }
}
