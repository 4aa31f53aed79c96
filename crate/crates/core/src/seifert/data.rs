use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ExceptionalFiber {
    pub mu: i64,
    pub beta: i64,
}

/// Seifert invariants with explicit boundary count and fiber action `φ`.
///
/// `phi` lists every handle/crosscap/boundary generator in presentation
/// order; unlisted generators in the textual form default to `+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SeifertData {
    pub base_orientable: bool,
    pub genus_or_crosscaps: u32,
    pub boundary_count: u32,
    pub b: i64,
    pub exceptional: Vec<ExceptionalFiber>,
    pub phi: Vec<(String, i8)>,
}

/// Handle or crosscap generators, then boundary generators.
pub(crate) fn base_generator_names(orientable: bool, genus: u32, boundaries: u32) -> Vec<String> {
    let mut out = Vec::new();
    if orientable {
        for i in 1..=genus {
            out.push(format!("a{i}"));
            out.push(format!("b{i}"));
        }
    } else {
        out.extend((1..=genus).map(|i| format!("x{i}")));
    }
    out.extend((1..=boundaries).map(|i| format!("d{i}")));
    out
}

impl SeifertData {
    pub fn new(
        base_orientable: bool,
        genus_or_crosscaps: u32,
        boundary_count: u32,
        b: i64,
        exceptional: Vec<ExceptionalFiber>,
        phi: &[(&str, i8)],
    ) -> Result<Self> {
        if !base_orientable && genus_or_crosscaps == 0 {
            return Err(Error::InvalidInvariant("non-orientable base needs at least one crosscap".into()));
        }
        if let Some(f) = exceptional.iter().find(|f| f.mu < 2) {
            return Err(Error::InvalidInvariant(format!("exceptional fiber ({}, {}) has mu < 2", f.mu, f.beta)));
        }
        let names = base_generator_names(base_orientable, genus_or_crosscaps, boundary_count);
        let mut full: Vec<(String, i8)> = names.into_iter().map(|n| (n, 1)).collect();
        for &(key, value) in phi {
            if value != 1 && value != -1 {
                return Err(Error::InvalidInvariant(format!("phi({key}) = {value}, expected ±1")));
            }
            let slot = full
                .iter_mut()
                .find(|(n, _)| n == key)
                .ok_or_else(|| Error::InvalidInvariant(format!("phi given on unknown generator {key:?}")))?;
            slot.1 = value;
        }
        // conjugating the long relation by itself forces Π φ(dᵢ) = 1
        let boundary_product: i8 = full.iter().filter(|(n, _)| n.starts_with('d')).map(|(_, v)| v).product();
        if boundary_product != 1 {
            return Err(Error::InvalidInvariant(
                "product of phi over boundary generators must be +1".into(),
            ));
        }
        Ok(SeifertData {
            base_orientable,
            genus_or_crosscaps,
            boundary_count,
            b,
            exceptional,
            phi: full,
        })
    }

    /// `(O,o,0 | 1; (2,1),(3,1)); boundaries=1`
    pub fn trefoil() -> Self {
        SeifertData::new(
            true,
            0,
            1,
            1,
            vec![ExceptionalFiber { mu: 2, beta: 1 }, ExceptionalFiber { mu: 3, beta: 1 }],
            &[],
        )
        .expect("valid")
    }

    pub fn phi(&self, name: &str) -> Option<i8> {
        self.phi.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    pub fn is_phi_trivial(&self) -> bool {
        self.phi.iter().all(|&(_, v)| v == 1)
    }

    pub fn base_generators(&self) -> Vec<String> {
        self.phi.iter().map(|(n, _)| n.clone()).collect()
    }

    pub fn exceptional_names(&self) -> Vec<String> {
        (1..=self.exceptional.len()).map(|i| format!("c{i}")).collect()
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base_orientable {
            write!(f, "(O,o,{} | {}", self.genus_or_crosscaps, self.b)?;
        } else {
            write!(f, "(N,{} | {}", self.genus_or_crosscaps, self.b)?;
        }
        for (i, c) in self.exceptional.iter().enumerate() {
            f.write_str(if i == 0 { "; " } else { "," })?;
            write!(f, "({},{})", c.mu, c.beta)?;
        }
        write!(f, "); boundaries={}", self.boundary_count)?;
        if !self.phi.is_empty() {
            let parts: Vec<String> = self
                .phi
                .iter()
                .map(|(n, v)| format!("{n}={}", if *v == 1 { "+1" } else { "-1" }))
                .collect();
            write!(f, "; phi: {}", parts.join(","))?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected {c:?}")))
        }
    }

    fn word(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..]
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.text.len() - start);
        if len == 0 {
            return Err(Error::parse(start, "expected a name"));
        }
        self.pos += len;
        Ok(&self.text[start..start + len])
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let sign = usize::from(rest.starts_with(['+', '-']));
        let digits = rest[sign..].find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len() - sign);
        if digits == 0 {
            return Err(Error::parse(start, "expected an integer"));
        }
        self.pos += sign + digits;
        rest[..sign + digits]
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

/// Parses `(O,o,g | b; (μ,β),...); boundaries=k; phi: name=±1,...`.
///
/// Also accepts the comma form `(O,o,0|1,(2,1),(3,1))` and `(N,k | b)` for
/// non-orientable bases. Both trailing clauses are optional.
pub fn parse_seifert(text: &str) -> Result<SeifertData> {
    let mut cur = Cursor { text, pos: 0 };
    cur.expect('(')?;
    let kind_pos = cur.pos;
    let orientable = match cur.word()? {
        "O" => true,
        "N" => false,
        other => return Err(Error::parse(kind_pos, format!("base type must be O or N, got {other:?}"))),
    };
    cur.expect(',')?;
    if cur.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
        cur.word()?;
        cur.expect(',')?;
    }
    let count_pos = cur.pos;
    let count = cur.int()?;
    let count = u32::try_from(count).map_err(|_| Error::parse(count_pos, "genus must be nonnegative"))?;
    cur.expect('|')?;
    let b = cur.int()?;
    let mut fibers = Vec::new();
    while cur.eat(';') || cur.eat(',') {
        cur.expect('(')?;
        let mu = cur.int()?;
        cur.expect(',')?;
        let beta = cur.int()?;
        cur.expect(')')?;
        fibers.push(ExceptionalFiber { mu, beta });
    }
    cur.expect(')')?;

    let mut boundaries = 0u32;
    let mut phi: Vec<(String, i8)> = Vec::new();
    while cur.eat(';') {
        let key_pos = cur.pos;
        match cur.word()? {
            "boundaries" => {
                cur.expect('=')?;
                let p = cur.pos;
                boundaries = u32::try_from(cur.int()?).map_err(|_| Error::parse(p, "negative boundary count"))?;
            }
            "phi" => {
                cur.expect(':')?;
                loop {
                    let name = cur.word()?.to_string();
                    cur.expect('=')?;
                    let p = cur.pos;
                    let v = cur.int()?;
                    if v != 1 && v != -1 {
                        return Err(Error::parse(p, "phi values must be +1 or -1"));
                    }
                    phi.push((name, v as i8));
                    if !cur.eat(',') {
                        break;
                    }
                }
            }
            other => return Err(Error::parse(key_pos, format!("unknown clause {other:?}"))),
        }
    }
    if !cur.at_end() {
        return Err(Error::parse(cur.pos, "trailing input"));
    }
    let phi_refs: Vec<(&str, i8)> = phi.iter().map(|(n, v)| (n.as_str(), *v)).collect();
    SeifertData::new(orientable, count, boundaries, b, fibers, &phi_refs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_forms() {
        let d = parse_seifert("(O,o,0 | 1; (2,1),(3,1)); boundaries=1; phi: d1=+1").unwrap();
        assert_eq!(d, SeifertData::trefoil());
        let d2 = parse_seifert("(O,o,0|1,(2,1),(3,1));boundaries=1").unwrap();
        assert_eq!(d, d2);
        assert_eq!(parse_seifert(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn other_examples() {
        let k = parse_seifert("(N,2 | 0); boundaries=0; phi: x1=-1,x2=-1").unwrap();
        assert!(!k.base_orientable);
        assert_eq!(k.genus_or_crosscaps, 2);
        assert_eq!(k.phi, vec![("x1".to_string(), -1), ("x2".to_string(), -1)]);

        let g = parse_seifert("(O,o,1 | 0; (4,1),(4,1)); boundaries=0; phi: a1=-1,b1=+1").unwrap();
        assert_eq!(g.phi("a1"), Some(-1));
        assert_eq!(g.exceptional.len(), 2);
        assert!(!g.is_phi_trivial());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_seifert("(O,o,0 | 1; (1,1))"), Err(Error::InvalidInvariant(_))));
        assert!(matches!(parse_seifert("(Q,o,0 | 1)"), Err(Error::Parse { position: 1, .. })));
        assert!(matches!(parse_seifert("(O,o,0 | 1); phi: z1=-1"), Err(Error::InvalidInvariant(_))));
        assert!(matches!(
            parse_seifert("(O,o,0 | 1); boundaries=1; phi: d1=-1"),
            Err(Error::InvalidInvariant(_))
        ));
        assert!(matches!(parse_seifert("(O,o,0 | 1) junk"), Err(Error::Parse { .. })));
    }
}
