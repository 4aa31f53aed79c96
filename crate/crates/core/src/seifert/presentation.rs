use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use super::data::SeifertData;
use crate::error::{Error, Result};
use crate::extension::{ExtElement, ExtensionScheme, Letter};
use crate::word::{parse_tokens, GroupScheme, Order};

/// A free-group word as `(generator, exponent)` letters.
pub type RawWord = Vec<(String, i64)>;

fn free_reduce(raw: impl IntoIterator<Item = (String, i64)>) -> RawWord {
    let mut out: RawWord = Vec::new();
    for (g, e) in raw {
        if e == 0 {
            continue;
        }
        match out.last_mut() {
            Some((top, f)) if *top == g => {
                *f += e;
                if *f == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    out
}

fn raw_inverse(w: &RawWord) -> RawWord {
    w.iter().rev().map(|(g, e)| (g.clone(), -e)).collect()
}

fn raw_to_string(w: &RawWord) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|(g, e)| if *e == 1 { g.clone() } else { format!("{g}^{e}") })
        .collect::<Vec<_>>()
        .join(" ")
}

fn letter(g: &str, e: i64) -> (String, i64) {
    (g.to_string(), e)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: RawWord,
    pub rhs: RawWord,
}

impl Relation {
    fn new(lhs: RawWord, rhs: RawWord) -> Self {
        Relation {
            lhs: free_reduce(lhs),
            rhs: free_reduce(rhs),
        }
    }

    /// `lhs · rhs⁻¹`, freely reduced.
    pub fn relator(&self) -> RawWord {
        free_reduce(self.lhs.iter().cloned().chain(raw_inverse(&self.rhs)))
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", raw_to_string(&self.lhs), raw_to_string(&self.rhs))
    }
}

impl Serialize for Relation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<Relation>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relations.iter().map(ToString::to_string).collect();
        write!(f, "⟨{} | {}⟩", self.generators.join(", "), rels.join(", "))
    }
}

/// Product of commutators (or crosscap squares), exceptional generators and
/// boundary generators, without the fiber term.
fn long_word(d: &SeifertData) -> RawWord {
    let mut w = Vec::new();
    if d.base_orientable {
        for i in 1..=d.genus_or_crosscaps {
            let (a, b) = (format!("a{i}"), format!("b{i}"));
            w.extend([letter(&a, 1), letter(&b, 1), letter(&a, -1), letter(&b, -1)]);
        }
    } else {
        w.extend((1..=d.genus_or_crosscaps).map(|i| (format!("x{i}"), 2)));
    }
    w.extend(d.exceptional_names().into_iter().map(|c| (c, 1)));
    w.extend((1..=d.boundary_count).map(|i| (format!("d{i}"), 1)));
    w
}

pub fn presentation(d: &SeifertData) -> Presentation {
    let mut generators = d.base_generators();
    let cs = d.exceptional_names();
    // handles/crosscaps, then c's, then d's, then h
    let split = generators.iter().position(|n| n.starts_with('d')).unwrap_or(generators.len());
    let tail = generators.split_off(split);
    generators.extend(cs.iter().cloned());
    generators.extend(tail);
    generators.push("h".into());

    let mut relations = Vec::new();
    for (z, phi) in &d.phi {
        relations.push(Relation::new(
            vec![letter(z, 1), letter("h", 1), letter(z, -1)],
            vec![letter("h", *phi as i64)],
        ));
    }
    for (c, f) in cs.iter().zip(&d.exceptional) {
        relations.push(Relation::new(
            vec![letter(c, 1), letter("h", 1), letter(c, -1)],
            vec![letter("h", 1)],
        ));
        relations.push(Relation::new(vec![letter(c, f.mu)], vec![letter("h", f.beta)]));
    }
    let mut long = long_word(d);
    long.push(letter("h", d.b));
    relations.push(Relation::new(long, vec![]));
    Presentation { generators, relations }
}

/// Sets `h = 1`, drops trivial relations, and when there is a boundary
/// eliminates the last boundary generator using the long relation.
pub fn quotient_presentation(d: &SeifertData) -> Presentation {
    let p = presentation(d);
    let kill_h = |w: &RawWord| free_reduce(w.iter().filter(|(g, _)| g != "h").cloned());
    let mut relations: Vec<Relation> = p
        .relations
        .iter()
        .map(|r| Relation::new(kill_h(&r.lhs), kill_h(&r.rhs)))
        .filter(|r| !r.relator().is_empty())
        .collect();
    let mut generators: Vec<String> = p.generators.into_iter().filter(|g| g != "h").collect();

    if d.boundary_count > 0 {
        let last = format!("d{}", d.boundary_count);
        let idx = relations
            .iter()
            .position(|r| r.relator().iter().filter(|(g, _)| *g == last).count() == 1)
            .expect("long relation mentions the last boundary generator once");
        // W · d_k = 1  ⟹  d_k = W⁻¹
        let long = relations.remove(idx).relator();
        let at = long.iter().position(|(g, _)| *g == last).expect("present");
        let (before, after) = (&long[..at], &long[at + 1..]);
        let mut value: RawWord = after.iter().cloned().chain(before.iter().cloned()).collect();
        value = raw_inverse(&value);
        if long[at].1 == -1 {
            value = raw_inverse(&value);
        }
        let substitute = |w: &RawWord| {
            free_reduce(w.iter().flat_map(|(g, e)| {
                if *g == last {
                    let piece = if *e > 0 { value.clone() } else { raw_inverse(&value) };
                    std::iter::repeat_n(piece, e.unsigned_abs() as usize).flatten().collect::<Vec<_>>()
                } else {
                    vec![(g.clone(), *e)]
                }
            }))
        };
        relations = relations
            .iter()
            .map(|r| Relation::new(substitute(&r.lhs), substitute(&r.rhs)))
            .filter(|r| !r.relator().is_empty())
            .collect();
        generators.retain(|g| *g != last);
    }
    Presentation { generators, relations }
}

/// The quotient by the fiber as a free product of cyclic groups, with the
/// extension data needed for exact element arithmetic.
#[derive(Clone, Debug)]
pub struct QuotientScheme {
    pub scheme: Arc<GroupScheme>,
    pub extension: Arc<ExtensionScheme>,
    /// The eliminated boundary generator.
    pub eliminated: String,
    /// Its value `W⁻¹ h^(-b)` as raw letters over the kept generators and `h`.
    pub eliminated_value: RawWord,
}

/// Present only when the base has at least one boundary component.
pub fn quotient_scheme(d: &SeifertData) -> Option<QuotientScheme> {
    if d.boundary_count == 0 {
        return None;
    }
    let mut gens: Vec<(String, Order)> = Vec::new();
    let mut beta = Vec::new();
    let mut phi = Vec::new();
    let eliminated = format!("d{}", d.boundary_count);
    for (name, p) in &d.phi {
        if name.starts_with('d') {
            continue;
        }
        gens.push((name.clone(), Order::Infinite));
        beta.push(0);
        phi.push(*p);
    }
    for (c, f) in d.exceptional_names().into_iter().zip(&d.exceptional) {
        gens.push((c, Order::Finite(f.mu as u32)));
        beta.push(f.beta);
        phi.push(1);
    }
    for (name, p) in &d.phi {
        if name.starts_with('d') && *name != eliminated {
            gens.push((name.clone(), Order::Infinite));
            beta.push(0);
            phi.push(*p);
        }
    }
    let scheme = GroupScheme::new(gens).ok()?;
    let extension = ExtensionScheme::new(scheme.clone(), beta, phi, "h").ok()?;
    let mut w = long_word(d);
    w.pop();
    let mut value = raw_inverse(&w);
    value.push(letter("h", -d.b));
    Some(QuotientScheme {
        scheme,
        extension,
        eliminated,
        eliminated_value: value,
    })
}

impl QuotientScheme {
    /// Normal form of a raw word over the presentation alphabet.
    pub fn element_from_raw(&self, raw: &[(String, i64)]) -> Result<ExtElement> {
        let mut letters = Vec::new();
        for (g, e) in raw {
            self.push_letters(&mut letters, g, *e)?;
        }
        Ok(ExtElement::from_letters(&self.extension, letters))
    }

    fn push_letters(&self, out: &mut Vec<Letter>, g: &str, e: i64) -> Result<()> {
        if g == "h" {
            out.push(Letter::Fiber(e));
        } else if g == self.eliminated {
            let value = if e > 0 { self.eliminated_value.clone() } else { raw_inverse(&self.eliminated_value) };
            for _ in 0..e.unsigned_abs() {
                for (n, f) in &value {
                    self.push_letters(out, n, *f)?;
                }
            }
        } else {
            let i = self.scheme.index_of(g).ok_or_else(|| Error::UnknownGenerator(g.to_string()))?;
            out.push(Letter::Gen(i, e));
        }
        Ok(())
    }

    /// Parses a word over the presentation alphabet.
    pub fn parse_element(&self, text: &str) -> Result<ExtElement> {
        let raw: Vec<(String, i64)> = parse_tokens(text)?.into_iter().map(|(n, e, _)| (n, e)).collect();
        self.element_from_raw(&raw)
    }
}
