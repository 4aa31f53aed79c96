//! Serializable witnesses and their independent re-checking.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid3::{self, CentralElement};
use crate::error::{Error, Result};
use crate::extension::ExtElement;
use crate::modular;
use crate::seifert::{parse_seifert, SeifertGroup};
use crate::word::{is_conjugate, Word};

/// Group named on the command line: `pslz`, `b3` or `seifert:<spec>`.
#[derive(Clone, Debug)]
pub enum Group {
    Modular,
    Braid,
    Seifert(Box<SeifertGroup>),
}

impl Group {
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        match spec {
            "pslz" => Ok(Group::Modular),
            "b3" => Ok(Group::Braid),
            _ => match spec.strip_prefix("seifert:") {
                Some(rest) => Ok(Group::Seifert(Box::new(SeifertGroup::new(&parse_seifert(rest)?)?))),
                None => Err(Error::parse(0, format!("unknown group {spec:?}"))),
            },
        }
    }

    pub fn name(&self) -> String {
        match self {
            Group::Modular => "pslz".into(),
            Group::Braid => "b3".into(),
            Group::Seifert(g) => format!("seifert:{}", g.data),
        }
    }

    pub fn element(&self, text: &str) -> Result<Element> {
        Ok(match self {
            Group::Modular => Element::Modular(Word::parse(&modular::scheme(), text)?),
            Group::Braid => Element::Braid(braid3::normal_form(&braid3::parse_braid(text)?)),
            Group::Seifert(g) => Element::Seifert(g.parse_element(text)?),
        })
    }
}

/// An element of one of the supported groups, in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Element {
    Modular(Word),
    Braid(CentralElement),
    Seifert(ExtElement),
}

impl Element {
    fn ext(&self) -> Option<&ExtElement> {
        match self {
            Element::Braid(e) | Element::Seifert(e) => Some(e),
            Element::Modular(_) => None,
        }
    }

    fn wrap(&self, e: ExtElement) -> Element {
        match self {
            Element::Braid(_) => Element::Braid(e),
            _ => Element::Seifert(e),
        }
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        match (self, other) {
            (Element::Modular(a), Element::Modular(b)) if a.same_scheme(b) => Ok(Element::Modular(a.mul(b))),
            _ => match (self.ext(), other.ext()) {
                (Some(a), Some(b)) if a.scheme() == b.scheme() => Ok(self.wrap(a.mul(b))),
                _ => Err(Error::SchemeMismatch),
            },
        }
    }

    pub fn inverse(&self) -> Element {
        match self {
            Element::Modular(w) => Element::Modular(w.inverse()),
            Element::Braid(e) | Element::Seifert(e) => self.wrap(e.inverse()),
        }
    }

    /// `k · self · k⁻¹`
    pub fn conjugate_by(&self, k: &Element) -> Result<Element> {
        k.mul(self)?.mul(&k.inverse())
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Element::Modular(w) => w.is_identity(),
            Element::Braid(e) | Element::Seifert(e) => e.is_identity(),
        }
    }

    /// Normal form as `(m, q)`, absent for PSL(2,Z).
    pub fn central_form(&self) -> Option<(i64, String)> {
        self.ext().map(|e| (e.m, e.q.to_string()))
    }
}

impl fmt::Display for Element {
    /// Spelled in the input grammar of its group, so it parses back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Modular(w) => write!(f, "{w}"),
            Element::Braid(e) => write!(f, "{}", braid3::section(e)),
            Element::Seifert(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// `reverser · element · reverser⁻¹ = element⁻¹`
    Reverser { group: String, element: String, reverser: String },
    /// `conjugator · from · conjugator⁻¹ = to`
    Conjugator { group: String, from: String, to: String, conjugator: String },
    /// `Π kᵢ · element · kᵢ⁻¹ = 1` over the listed `kᵢ`.
    Torsion { group: String, element: String, n: i64, conjugators: Vec<String> },
    /// `first² = second² = 1` and `element` conjugate to `first · second`.
    Involutions { group: String, element: String, first: String, second: String },
}

impl Certificate {
    pub fn group(&self) -> &str {
        match self {
            Certificate::Reverser { group, .. }
            | Certificate::Conjugator { group, .. }
            | Certificate::Torsion { group, .. }
            | Certificate::Involutions { group, .. } => group,
        }
    }
}

fn malformed(e: Error) -> Error {
    match e {
        Error::MalformedCertificate(_) => e,
        other => Error::MalformedCertificate(other.to_string()),
    }
}

/// Re-multiplies the defining relation. `Ok(false)` means well-formed but wrong.
pub fn verify(cert: &Certificate) -> Result<bool> {
    let group = Group::parse(cert.group()).map_err(malformed)?;
    let el = |t: &str| group.element(t).map_err(malformed);
    match cert {
        Certificate::Reverser { element, reverser, .. } => {
            let g = el(element)?;
            if g.is_identity() {
                return Ok(false);
            }
            Ok(g.conjugate_by(&el(reverser)?)? == g.inverse())
        }
        Certificate::Conjugator { from, to, conjugator, .. } => Ok(el(from)?.conjugate_by(&el(conjugator)?)? == el(to)?),
        Certificate::Torsion { element, n, conjugators, .. } => {
            if *n < 2 || conjugators.len() as i64 != *n {
                return Err(Error::MalformedCertificate(format!(
                    "order {n} with {} conjugators",
                    conjugators.len()
                )));
            }
            let g = el(element)?;
            if g.is_identity() {
                return Ok(false);
            }
            let mut product = g.mul(&g.inverse())?;
            for k in conjugators {
                product = product.mul(&g.conjugate_by(&el(k)?)?)?;
            }
            Ok(product.is_identity())
        }
        Certificate::Involutions { element, first, second, .. } => {
            let (g, u, v) = (el(element)?, el(first)?, el(second)?);
            if !u.mul(&u)?.is_identity() || !v.mul(&v)?.is_identity() {
                return Ok(false);
            }
            let uv = u.mul(&v)?;
            Ok(match (&g, &uv) {
                (Element::Modular(a), Element::Modular(b)) => is_conjugate(a, b)?.is_some(),
                _ => g == uv,
            })
        }
    }
}

/// Accepts a bare certificate or any JSON object carrying one under `certificate`.
pub fn verify_json(text: &str) -> Result<bool> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::MalformedCertificate(e.to_string()))?;
    let inner = match value.get("certificate") {
        Some(c) if !c.is_null() => c.clone(),
        Some(_) => return Err(Error::MalformedCertificate("result carries no certificate".into())),
        None => value,
    };
    let cert: Certificate = serde_json::from_value(inner).map_err(|e| Error::MalformedCertificate(e.to_string()))?;
    verify(&cert)
}
