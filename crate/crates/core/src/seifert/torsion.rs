use serde::Serialize;

use super::data::SeifertData;
use super::presentation::{quotient_scheme, RawWord};
use crate::braid3::{self, BraidGen, BraidWord, CentralElement};
use crate::error::{Error, Result};
use crate::extension::ExtElement;

/// `g = cᵢ^p · (k cⱼ k⁻¹)^p2 · h^x` with `cᵢ^(np) = h^m1`, `(k cⱼ k⁻¹)^(n·p2) = h^m2`
/// and `n·x + m1 + m2 = 0`. With `γ = (k cⱼ k⁻¹)^p2` the conjugators
/// `γ^0, γ^-1, …, γ^-(n-2), γ^1` multiply `g` out to `(cᵢ^p)^n γ^n h^(nx) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenNCertificate {
    pub n: i64,
    pub i: usize,
    pub j: usize,
    pub p: i64,
    pub p2: i64,
    pub m1: i64,
    pub m2: i64,
    pub x: i64,
    pub k: Option<String>,
    pub element: String,
    pub conjugators: Vec<String>,
}

fn raw_string(w: &RawWord) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|(g, e)| if *e == 1 { g.clone() } else { format!("{g}^{e}") })
        .collect::<Vec<_>>()
        .join(" ")
}

impl GenNCertificate {
    fn conjugated(&self, inner: RawWord) -> RawWord {
        match &self.k {
            Some(k) => std::iter::once((k.clone(), 1))
                .chain(inner)
                .chain(std::iter::once((k.clone(), -1)))
                .collect(),
            None => inner,
        }
    }

    pub fn element_raw(&self) -> RawWord {
        let mut w = vec![(format!("c{}", self.i), self.p)];
        w.extend(self.conjugated(vec![(format!("c{}", self.j), self.p2)]));
        if self.x != 0 {
            w.push(("h".into(), self.x));
        }
        w
    }

    pub fn conjugator_exponents(&self) -> Vec<i64> {
        let mut s: Vec<i64> = (0..self.n - 1).map(|t| -t).collect();
        s.push(1);
        s
    }

    pub fn conjugators_raw(&self) -> Vec<RawWord> {
        self.conjugator_exponents()
            .into_iter()
            .map(|s| {
                if s == 0 {
                    Vec::new()
                } else {
                    self.conjugated(vec![(format!("c{}", self.j), self.p2 * s)])
                }
            })
            .collect()
    }

    /// Multiplies `Π kᵢ g kᵢ⁻¹` in the extension normal form.
    pub fn validate(&self, d: &SeifertData) -> Result<bool> {
        let q = quotient_scheme(d).ok_or(Error::UnsupportedBase)?;
        let g = q.element_from_raw(&self.element_raw())?;
        let mut product = ExtElement::identity(&q.extension);
        for k in self.conjugators_raw() {
            product = product.mul(&g.conjugate_by(&q.element_from_raw(&k)?));
        }
        Ok(product.is_identity() && !g.is_identity())
    }

    /// Same check inside B₃ through `c1 ↦ x`, `c2 ↦ y`, `d1 ↦ (xy)⁻¹h⁻¹`.
    pub fn validate_in_b3(&self, d: &SeifertData) -> Result<bool> {
        let g = trefoil_to_braid(d, &self.element_raw())?;
        let mut product = braid3::normal_form(&BraidWord::default());
        for k in self.conjugators_raw() {
            let k = trefoil_to_braid(d, &k)?;
            product = product.mul(&g.conjugate_by(&k));
        }
        Ok(product.is_identity() && !g.is_identity())
    }
}

/// Realizes a word over the trefoil presentation in B₃.
pub fn trefoil_to_braid(d: &SeifertData, raw: &[(String, i64)]) -> Result<CentralElement> {
    if *d != SeifertData::trefoil() {
        return Err(Error::InvalidInvariant("B3 realization needs the trefoil data".into()));
    }
    let mut letters = Vec::new();
    for (g, e) in raw {
        match g.as_str() {
            "c1" => letters.push((BraidGen::X, *e)),
            "c2" => letters.push((BraidGen::Y, *e)),
            "h" => letters.push((BraidGen::H, *e)),
            "d1" => {
                let unit: [(BraidGen, i64); 3] = if *e > 0 {
                    [(BraidGen::Y, -1), (BraidGen::X, -1), (BraidGen::H, -1)]
                } else {
                    [(BraidGen::H, 1), (BraidGen::X, 1), (BraidGen::Y, 1)]
                };
                for _ in 0..e.unsigned_abs() {
                    letters.extend(unit);
                }
            }
            other => return Err(Error::UnknownGenerator(other.to_string())),
        }
    }
    Ok(braid3::normal_form(&BraidWord::new(letters)))
}

/// Least `(i, j, p, p2)` in scan order giving a certificate, if any.
pub fn gen_n_certificate(d: &SeifertData, n: i64) -> Result<Option<GenNCertificate>> {
    if n < 2 {
        return Err(Error::UnsupportedOrder(n));
    }
    let fibers = &d.exceptional;
    let powers = |idx: usize| {
        let f = fibers[idx];
        (1..f.mu)
            .filter(move |p| (n * p) % f.mu == 0)
            .map(move |p| (p, f.beta * n * p / f.mu))
    };
    for i in 0..fibers.len() {
        for j in 0..fibers.len() {
            for (p, m1) in powers(i) {
                for (p2, m2) in powers(j) {
                    let Ok(x) = braid3::fiber_offset(n, m1 + m2) else {
                        continue;
                    };
                    let k = choose_k(d, i + 1, j + 1);
                    let mut cert = GenNCertificate {
                        n,
                        i: i + 1,
                        j: j + 1,
                        p,
                        p2,
                        m1,
                        m2,
                        x,
                        k,
                        element: String::new(),
                        conjugators: Vec::new(),
                    };
                    cert.element = raw_string(&cert.element_raw());
                    cert.conjugators = cert.conjugators_raw().iter().map(raw_string).collect();
                    return Ok(Some(cert));
                }
            }
        }
    }
    Ok(None)
}

/// First generator other than `cᵢ`, `cⱼ` commuting with the fiber.
fn choose_k(d: &SeifertData, i: usize, j: usize) -> Option<String> {
    let handles = d.phi.iter().filter(|(n, v)| !n.starts_with('d') && *v == 1).map(|(n, _)| n.clone());
    let cs = (1..=d.exceptional.len()).filter(|&c| c != i && c != j).map(|c| format!("c{c}"));
    let ds = d.phi.iter().filter(|(n, v)| n.starts_with('d') && *v == 1).map(|(n, _)| n.clone());
    handles.chain(cs).chain(ds).next()
}
