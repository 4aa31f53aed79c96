//! Words in free products of cyclic groups.
//!
//! A [`GroupScheme`] lists generators with their orders (finite `m >= 2` or
//! infinite). Elements are stored as reduced [`Word`]s: adjacent syllables
//! use distinct generators and finite-order exponents live in `[1, m - 1]`,
//! so two words are equal as values iff they are equal in the group.
//!
//! Conjugacy is decided exactly through [`CyclicWord`], the least rotation of
//! a cyclically reduced representative.

use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(m) => write!(f, "{m}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub order: Order,
}

/// A free product of cyclic groups, one factor per generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupScheme {
    generators: Vec<Generator>,
}

pub(crate) fn is_token(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GroupScheme {
    pub fn new<S: Into<String>>(generators: impl IntoIterator<Item = (S, Order)>) -> Result<Arc<Self>> {
        let mut out: Vec<Generator> = Vec::new();
        for (name, order) in generators {
            let name = name.into();
            if !is_token(&name) {
                return Err(Error::InvalidInvariant(format!("bad generator name {name:?}")));
            }
            if out.iter().any(|g| g.name == name) {
                return Err(Error::InvalidInvariant(format!("duplicate generator {name:?}")));
            }
            if let Order::Finite(m) = order {
                if m < 2 {
                    return Err(Error::InvalidInvariant(format!(
                        "generator {name:?} has order {m}, need at least 2"
                    )));
                }
            }
            out.push(Generator { name, order });
        }
        Ok(Arc::new(GroupScheme { generators: out }))
    }

    /// `<a, b | a^2, b^3>`, the modular group.
    pub fn modular() -> Arc<Self> {
        static MODULAR: OnceLock<Arc<GroupScheme>> = OnceLock::new();
        MODULAR
            .get_or_init(|| {
                GroupScheme::new([("a", Order::Finite(2)), ("b", Order::Finite(3))])
                    .expect("static scheme")
            })
            .clone()
    }

    /// Parses a scheme literal such as `a:2, b:3, d:inf`.
    pub fn parse(text: &str) -> Result<Arc<Self>> {
        let mut gens = Vec::new();
        let mut offset = 0;
        for part in text.split(',') {
            let trimmed = part.trim();
            let (name, order) = trimmed
                .split_once(':')
                .ok_or_else(|| Error::parse(offset, format!("expected name:order, got {trimmed:?}")))?;
            let order = match order.trim() {
                "inf" | "oo" | "∞" => Order::Infinite,
                o => Order::Finite(
                    o.parse()
                        .map_err(|_| Error::parse(offset, format!("bad order {o:?}")))?,
                ),
            };
            gens.push((name.trim().to_string(), order));
            offset += part.len() + 1;
        }
        GroupScheme::new(gens)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn name(&self, generator: usize) -> &str {
        &self.generators[generator].name
    }

    pub fn order(&self, generator: usize) -> Order {
        self.generators[generator].order
    }

    /// Canonical exponent: `[0, m)` for finite order, unchanged otherwise.
    pub fn normalize_exponent(&self, generator: usize, exponent: i64) -> i64 {
        match self.order(generator) {
            Order::Finite(m) => exponent.rem_euclid(m as i64),
            Order::Infinite => exponent,
        }
    }

    /// All single syllables in canonical order; infinite generators contribute
    /// exponents `-bound..=-1, 1..=bound`.
    pub fn syllable_alphabet(&self, free_exponent_bound: i64) -> Vec<Syllable> {
        let mut out = Vec::new();
        for (generator, g) in self.generators.iter().enumerate() {
            match g.order {
                Order::Finite(m) => {
                    out.extend((1..m as i64).map(|exponent| Syllable { generator, exponent }))
                }
                Order::Infinite => out.extend(
                    (-free_exponent_bound..=free_exponent_bound)
                        .filter(|&e| e != 0)
                        .map(|exponent| Syllable { generator, exponent }),
                ),
            }
        }
        out
    }
}

impl fmt::Display for GroupScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}:{}", g.name, g.order)?;
        }
        Ok(())
    }
}

/// A maximal power of one generator. Ordered by `(generator, exponent)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub generator: usize,
    pub exponent: i64,
}

/// Appends `s` to a reduced stack, keeping it reduced.
fn push_reduced(stack: &mut Vec<Syllable>, scheme: &GroupScheme, s: Syllable) {
    let e = scheme.normalize_exponent(s.generator, s.exponent);
    if e == 0 {
        return;
    }
    if let Some(top) = stack.last_mut() {
        if top.generator == s.generator {
            let merged = scheme.normalize_exponent(s.generator, top.exponent + e);
            if merged == 0 {
                stack.pop();
            } else {
                top.exponent = merged;
            }
            return;
        }
    }
    stack.push(Syllable {
        generator: s.generator,
        exponent: e,
    });
}

/// Splits a word string into `(name, exponent, byte offset)` tokens.
///
/// The literal `1` stands for the identity and is dropped.
pub fn parse_tokens(text: &str) -> Result<Vec<(String, i64, usize)>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive(char::is_whitespace) {
        let token = raw.trim();
        let start = offset;
        offset += raw.len();
        if token.is_empty() || token == "1" {
            continue;
        }
        let (name, exponent) = match token.split_once('^') {
            Some((n, e)) => {
                let e: i64 = e
                    .parse()
                    .map_err(|_| Error::parse(start, format!("bad exponent in {token:?}")))?;
                (n, e)
            }
            None => (token, 1),
        };
        if !is_token(name) {
            return Err(Error::parse(start, format!("bad generator token {token:?}")));
        }
        out.push((name.to_string(), exponent, start));
    }
    Ok(out)
}

/// A reduced word over a [`GroupScheme`].
#[derive(Clone, Debug)]
pub struct Word {
    scheme: Arc<GroupScheme>,
    syllables: Vec<Syllable>,
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.syllables == other.syllables
            && (Arc::ptr_eq(&self.scheme, &other.scheme) || self.scheme == other.scheme)
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.syllables.hash(state);
    }
}

impl Word {
    pub fn identity(scheme: &Arc<GroupScheme>) -> Self {
        Word {
            scheme: scheme.clone(),
            syllables: Vec::new(),
        }
    }

    pub fn from_syllables(scheme: &Arc<GroupScheme>, syllables: impl IntoIterator<Item = Syllable>) -> Self {
        let mut stack = Vec::new();
        for s in syllables {
            push_reduced(&mut stack, scheme, s);
        }
        Word {
            scheme: scheme.clone(),
            syllables: stack,
        }
    }

    /// Single generator power `name^exponent`.
    pub fn generator(scheme: &Arc<GroupScheme>, name: &str, exponent: i64) -> Result<Self> {
        reduce(&[(name, exponent)], scheme)
    }

    pub fn parse(scheme: &Arc<GroupScheme>, text: &str) -> Result<Self> {
        let tokens = parse_tokens(text)?;
        let mut stack = Vec::new();
        for (name, exponent, offset) in tokens {
            let generator = scheme
                .index_of(&name)
                .ok_or_else(|| Error::parse(offset, format!("unknown generator {name:?}")))?;
            push_reduced(&mut stack, scheme, Syllable { generator, exponent });
        }
        Ok(Word {
            scheme: scheme.clone(),
            syllables: stack,
        })
    }

    pub fn scheme(&self) -> &Arc<GroupScheme> {
        &self.scheme
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Syllable length.
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn same_scheme(&self, other: &Word) -> bool {
        Arc::ptr_eq(&self.scheme, &other.scheme) || self.scheme == other.scheme
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut stack = self.syllables.clone();
        for &s in &other.syllables {
            push_reduced(&mut stack, &self.scheme, s);
        }
        Word {
            scheme: self.scheme.clone(),
            syllables: stack,
        }
    }

    pub fn inverse(&self) -> Word {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| Syllable {
                generator: s.generator,
                exponent: self.scheme.normalize_exponent(s.generator, -s.exponent),
            })
            .collect();
        Word {
            scheme: self.scheme.clone(),
            syllables,
        }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity(&self.scheme);
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `k · self · k⁻¹`
    pub fn conjugate_by(&self, k: &Word) -> Word {
        k.mul(self).mul(&k.inverse())
    }

    /// Total exponent of `generator` (not reduced modulo its order).
    pub fn exponent_count(&self, generator: usize) -> i64 {
        self.syllables
            .iter()
            .filter(|s| s.generator == generator)
            .map(|s| s.exponent)
            .sum()
    }

    /// Raw `(name, exponent)` pairs.
    pub fn to_raw(&self) -> Vec<(String, i64)> {
        self.syllables
            .iter()
            .map(|s| (self.scheme.name(s.generator).to_string(), s.exponent))
            .collect()
    }
}

impl std::ops::Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        Word::mul(self, rhs)
    }
}

fn write_syllables(f: &mut fmt::Formatter<'_>, scheme: &GroupScheme, syllables: &[Syllable]) -> fmt::Result {
    if syllables.is_empty() {
        return f.write_str("1");
    }
    for (i, s) in syllables.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        f.write_str(scheme.name(s.generator))?;
        if s.exponent != 1 {
            write!(f, "^{}", s.exponent)?;
        }
    }
    Ok(())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_syllables(f, &self.scheme, &self.syllables)
    }
}

/// Reduces a raw token sequence to its normal form.
pub fn reduce<S: AsRef<str>>(raw: &[(S, i64)], scheme: &Arc<GroupScheme>) -> Result<Word> {
    let mut stack = Vec::new();
    for (name, exponent) in raw {
        let name = name.as_ref();
        let generator = scheme
            .index_of(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        push_reduced(&mut stack, scheme, Syllable {
            generator,
            exponent: *exponent,
        });
    }
    Ok(Word {
        scheme: scheme.clone(),
        syllables: stack,
    })
}

pub fn invert(w: &Word) -> Word {
    w.inverse()
}

/// Least rotation of a cyclically reduced word; two values are equal iff the
/// underlying words are conjugate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicWord {
    syllables: Vec<Syllable>,
}

impl CyclicWord {
    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn to_word(&self, scheme: &Arc<GroupScheme>) -> Word {
        Word {
            scheme: scheme.clone(),
            syllables: self.syllables.clone(),
        }
    }

    /// Smallest `p` such that the cyclic sequence is invariant under rotation by `p`.
    pub fn period(&self) -> usize {
        let n = self.syllables.len();
        (1..=n)
            .find(|&p| n % p == 0 && (0..n).all(|i| self.syllables[i] == self.syllables[(i + p) % n]))
            .unwrap_or(0)
    }
}

fn least_rotation(s: &[Syllable]) -> usize {
    let n = s.len();
    let mut best = 0;
    for r in 1..n {
        let candidate = s[r..].iter().chain(&s[..r]);
        let current = s[best..].iter().chain(&s[..best]);
        if candidate.lt(current) {
            best = r;
        }
    }
    best
}

/// Returns `(core, c)` with `c⁻¹ · w · c` equal to the canonical rotation `core`.
pub fn cyclic_reduce(w: &Word) -> (CyclicWord, Word) {
    let scheme = &w.scheme;
    let mut cur: VecDeque<Syllable> = w.syllables.iter().copied().collect();
    let mut conj = Word::identity(scheme);
    // peel x·u·y with x, y powers of the same generator: y·(x u y)·y⁻¹ = (yx)·u
    while cur.len() >= 2 && cur.front().unwrap().generator == cur.back().unwrap().generator {
        let y = cur.pop_back().unwrap();
        let front = cur.front_mut().unwrap();
        let merged = scheme.normalize_exponent(y.generator, front.exponent + y.exponent);
        if merged == 0 {
            cur.pop_front();
        } else {
            front.exponent = merged;
        }
        conj = conj.mul(&Word::from_syllables(scheme, [y]).inverse());
    }
    let cur: Vec<Syllable> = cur.into_iter().collect();
    let n = cur.len();
    let r = least_rotation(&cur);
    let rotated: Vec<Syllable> = cur[r..].iter().chain(&cur[..r]).copied().collect();
    // rotated = P⁻¹·cur·P = Q·cur·Q⁻¹ with cur = P·Q; keep the shorter conjugator
    let rot = if r < n - r {
        Word::from_syllables(scheme, cur[..r].iter().copied())
    } else {
        Word::from_syllables(scheme, cur[r..].iter().copied()).inverse()
    };
    (CyclicWord { syllables: rotated }, conj.mul(&rot))
}

/// Returns `k` with `k · u · k⁻¹ = v` when `u` and `v` are conjugate.
pub fn is_conjugate(u: &Word, v: &Word) -> Result<Option<Word>> {
    if !u.same_scheme(v) {
        return Err(Error::SchemeMismatch);
    }
    let (cu, pu) = cyclic_reduce(u);
    let (cv, pv) = cyclic_reduce(v);
    if cu != cv {
        return Ok(None);
    }
    let k = pv.mul(&pu.inverse());
    debug_assert_eq!(&u.conjugate_by(&k), v);
    Ok((u.conjugate_by(&k) == *v).then_some(k))
}

/// Returns a reverser `r` with `r · w · r⁻¹ = w⁻¹`, if one exists.
pub fn conjugate_to_inverse(w: &Word) -> Result<Option<Word>> {
    if w.is_identity() {
        return Err(Error::TrivialElement);
    }
    is_conjugate(w, &w.inverse())
}

/// Exponent sums per generator, reduced modulo finite orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianImage {
    scheme: Arc<GroupScheme>,
    residues: Vec<i64>,
}

impl AbelianImage {
    pub fn get(&self, name: &str) -> Option<i64> {
        self.scheme.index_of(name).map(|i| self.residues[i])
    }

    pub fn residues(&self) -> &[i64] {
        &self.residues
    }

    pub fn is_trivial(&self) -> bool {
        self.residues.iter().all(|&r| r == 0)
    }
}

pub fn abelian_image(w: &Word) -> AbelianImage {
    let residues = (0..w.scheme.len())
        .map(|g| w.scheme.normalize_exponent(g, w.exponent_count(g)))
        .collect();
    AbelianImage {
        scheme: w.scheme.clone(),
        residues,
    }
}

/// Deterministic stream of every reduced word up to a syllable bound,
/// ordered by length and then lexicographically by syllable.
#[derive(Clone, Debug)]
pub struct Enumeration {
    scheme: Arc<GroupScheme>,
    alphabet: Vec<Syllable>,
    max_syllables: usize,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

/// Enumerates reduced words of at most `max_syllables` syllables.
///
/// Infinite-order generators use exponents `±1` unless widened with
/// [`Enumeration::free_exponent_bound`].
pub fn enumerate_reduced(scheme: &Arc<GroupScheme>, max_syllables: usize) -> Enumeration {
    Enumeration {
        scheme: scheme.clone(),
        alphabet: scheme.syllable_alphabet(1),
        max_syllables,
        idx: Vec::new(),
        started: false,
        done: false,
    }
}

impl Enumeration {
    pub fn free_exponent_bound(mut self, bound: i64) -> Self {
        self.alphabet = self.scheme.syllable_alphabet(bound.max(1));
        self
    }

    fn valid(&self, pos: usize, cand: usize) -> bool {
        pos == 0 || self.alphabet[cand].generator != self.alphabet[self.idx[pos - 1]].generator
    }

    fn fill_from(&mut self, start: usize) -> bool {
        for pos in start..self.idx.len() {
            match (0..self.alphabet.len()).find(|&c| self.valid(pos, c)) {
                Some(c) => self.idx[pos] = c,
                None => return false,
            }
        }
        true
    }

    fn advance(&mut self) -> bool {
        for pos in (0..self.idx.len()).rev() {
            if let Some(c) = (self.idx[pos] + 1..self.alphabet.len()).find(|&c| self.valid(pos, c)) {
                self.idx[pos] = c;
                if self.fill_from(pos + 1) {
                    return true;
                }
            }
        }
        false
    }

    fn current(&self) -> Word {
        Word {
            scheme: self.scheme.clone(),
            syllables: self.idx.iter().map(|&i| self.alphabet[i]).collect(),
        }
    }
}

impl Iterator for Enumeration {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        if self.advance() {
            return Some(self.current());
        }
        let len = self.idx.len() + 1;
        if len > self.max_syllables || self.alphabet.is_empty() {
            self.done = true;
            return None;
        }
        self.idx = vec![0; len];
        if self.fill_from(0) {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        Word::parse(&GroupScheme::modular(), text).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let s = GroupScheme::modular();
        assert_eq!(reduce(&[("a", 1), ("a", 1), ("b", 1)], &s).unwrap(), w("b"));
        assert!(reduce(&[("b", 1), ("b", 1), ("b", 1)], &s).unwrap().is_identity());
        assert!(reduce(&[("a", 1), ("b", 3), ("a", 1)], &s).unwrap().is_identity());
        assert_eq!(
            reduce(&[("q", 1)], &s),
            Err(Error::UnknownGenerator("q".into()))
        );
    }

    #[test]
    fn finite_exponents_are_positive() {
        assert_eq!(w("b^-1"), w("b^2"));
        assert_eq!(w("b^-1").syllables()[0].exponent, 2);
        assert_eq!(w("a^-3"), w("a"));
    }

    #[test]
    fn invert_examples() {
        assert!(invert(&w("1")).is_identity());
        assert_eq!(invert(&w("a b")), w("b^2 a"));
        assert_eq!(invert(&w("a b a b^2")), w("b a b^2 a"));
    }

    #[test]
    fn cyclic_reduce_examples() {
        let (core, c) = cyclic_reduce(&w("a b a"));
        assert_eq!(core.to_word(&GroupScheme::modular()), w("b"));
        assert_eq!(c, w("a"));

        let (core, c) = cyclic_reduce(&w("a b"));
        assert_eq!(core.to_word(&GroupScheme::modular()), w("a b"));
        assert!(c.is_identity());

        let input = w("b^2").mul(&w("a b a b^2")).mul(&w("b"));
        let (core, c) = cyclic_reduce(&input);
        assert_eq!(core.to_word(&GroupScheme::modular()), w("a b a b^2"));
        assert_eq!(c, w("b^2"));
        assert_eq!(c.inverse().mul(&input).mul(&c), w("a b a b^2"));
    }

    #[test]
    fn conjugacy_examples() {
        assert_eq!(is_conjugate(&w("a b"), &w("b a")).unwrap(), Some(w("a")));
        assert_eq!(is_conjugate(&w("b"), &w("b^2")).unwrap(), None);
        let x = w("a b a b^2 a b");
        assert_eq!(is_conjugate(&x, &x).unwrap(), Some(w("1")));
    }

    #[test]
    fn scheme_mismatch() {
        let other = GroupScheme::parse("a:2, b:4").unwrap();
        let u = Word::parse(&other, "a b").unwrap();
        assert_eq!(is_conjugate(&u, &w("a b")), Err(Error::SchemeMismatch));
    }

    #[test]
    fn reversers() {
        assert_eq!(conjugate_to_inverse(&w("a")).unwrap(), Some(w("1")));
        assert_eq!(conjugate_to_inverse(&w("a b a b^2")).unwrap(), Some(w("a")));
        assert_eq!(conjugate_to_inverse(&w("a b")).unwrap(), None);
        assert_eq!(conjugate_to_inverse(&w("1")), Err(Error::TrivialElement));
    }

    #[test]
    fn abelian_examples() {
        let img = abelian_image(&w("a b a b"));
        assert_eq!((img.get("a"), img.get("b")), (Some(0), Some(2)));
        let img = abelian_image(&w("b^2"));
        assert_eq!((img.get("a"), img.get("b")), (Some(0), Some(2)));
        let img = abelian_image(&w("a b a b a b^2"));
        assert_eq!((img.get("a"), img.get("b")), (Some(1), Some(1)));
    }

    #[test]
    fn enumeration_counts() {
        let s = GroupScheme::modular();
        let words: Vec<_> = enumerate_reduced(&s, 1).collect();
        assert_eq!(words, vec![w("1"), w("a"), w("b"), w("b^2")]);
        assert_eq!(enumerate_reduced(&s, 0).count(), 1);
        let two: Vec<String> = enumerate_reduced(&s, 2).skip(4).map(|w| w.to_string()).collect();
        assert_eq!(two, ["a b", "a b^2", "b a", "b^2 a"]);
        assert_eq!(enumerate_reduced(&s, 6).count(), 50);
    }

    #[test]
    fn enumeration_single_generator() {
        let s = GroupScheme::parse("c:5").unwrap();
        assert_eq!(enumerate_reduced(&s, 4).count(), 5);
        let s = GroupScheme::parse("d:inf").unwrap();
        assert_eq!(enumerate_reduced(&s, 3).free_exponent_bound(2).count(), 5);
    }

    #[test]
    fn scheme_parsing() {
        let s = GroupScheme::parse("a:2, b:3, d:inf").unwrap();
        assert_eq!(s.order(2), Order::Infinite);
        assert_eq!(s.to_string(), "a:2, b:3, d:inf");
        assert!(GroupScheme::parse("a:1").is_err());
        assert!(GroupScheme::parse("a:2, a:3").is_err());
        assert!(matches!(Word::parse(&s, "a q"), Err(Error::Parse { position: 2, .. })));
    }

    #[test]
    fn free_generator_cyclic_reduction() {
        let s = GroupScheme::parse("c:2, d:inf").unwrap();
        let x = Word::parse(&s, "d^2 c d^-1").unwrap();
        let (core, k) = cyclic_reduce(&x);
        assert_eq!(core.to_word(&s), Word::parse(&s, "c d").unwrap());
        assert_eq!(k.inverse().mul(&x).mul(&k), core.to_word(&s));
    }
}
