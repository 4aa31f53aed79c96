use std::fmt;

use serde::Serialize;

use super::data::SeifertData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseSurface {
    KleinBottle,
    ProjectivePlane,
}

/// Symbolic description of a conjugacy-closed family of reversible elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// Conjugates of `h^m`, `m ≠ 0`.
    PowersOfH,
    /// Conjugates of `cᵢ^(μᵢ/2) · k · cⱼ^(sign·μⱼ/2) · k⁻¹` with `φ(k)` fixed.
    TwoHalfTwists {
        i: usize,
        j: usize,
        sign: i8,
        phi_k: i8,
        beta: i64,
    },
    /// Loops of the base surface itself.
    SurfaceException {
        surface: BaseSurface,
        generators: Vec<String>,
    },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::PowersOfH => f.write_str("h^m (m != 0)"),
            Family::TwoHalfTwists { i, j, sign, phi_k, .. } => {
                let exp = if *sign < 0 { "-" } else { "" };
                write!(f, "c{i}^(mu{i}/2) k c{j}^({exp}mu{j}/2) k^-1 with phi(k) = {phi_k:+}")
            }
            Family::SurfaceException { surface, generators } => {
                write!(f, "{surface:?} base loops {}", generators.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReversibleFamilyReport {
    pub families: Vec<Family>,
    pub notes: Vec<String>,
}

pub fn classify_reversible_families(d: &SeifertData) -> ReversibleFamilyReport {
    let mut families = Vec::new();
    let mut notes = Vec::new();
    let twisted = !d.is_phi_trivial();
    if twisted {
        families.push(Family::PowersOfH);
    }
    let variants: &[(i8, i8)] = if twisted { &[(1, -1), (-1, 1)] } else { &[(-1, 1)] };
    let fibers = &d.exceptional;
    for i in 0..fibers.len() {
        for j in i..fibers.len() {
            let (fi, fj) = (fibers[i], fibers[j]);
            if fi.mu % 2 != 0 || fj.mu % 2 != 0 || fi.beta != fj.beta {
                continue;
            }
            for &(sign, phi_k) in variants {
                families.push(Family::TwoHalfTwists {
                    i: i + 1,
                    j: j + 1,
                    sign,
                    phi_k,
                    beta: fi.beta,
                });
            }
        }
    }
    if !twisted {
        notes.push(
            "trivial phi: pairs restricted to even mu_i, mu_j with beta_i = beta_j".into(),
        );
    }
    if !d.base_orientable && d.boundary_count == 0 && d.genus_or_crosscaps <= 2 {
        let surface = if d.genus_or_crosscaps == 2 {
            BaseSurface::KleinBottle
        } else {
            BaseSurface::ProjectivePlane
        };
        families.push(Family::SurfaceException {
            surface,
            generators: d.base_generators(),
        });
    }
    if d.boundary_count == 0 {
        notes.push("closed base: element-level decisions unsupported, report is symbolic only".into());
    }
    ReversibleFamilyReport { families, notes }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::parse_seifert;

    #[test]
    fn trefoil_single_family() {
        let r = classify_reversible_families(&SeifertData::trefoil());
        assert_eq!(
            r.families,
            vec![Family::TwoHalfTwists { i: 1, j: 1, sign: -1, phi_k: 1, beta: 1 }]
        );
    }

    #[test]
    fn genus_one_twisted() {
        let d = parse_seifert("(O,o,1 | 0; (4,1),(4,1)); boundaries=0; phi: a1=-1,b1=+1").unwrap();
        let r = classify_reversible_families(&d);
        assert_eq!(r.families[0], Family::PowersOfH);
        assert!(r.families.contains(&Family::TwoHalfTwists { i: 1, j: 2, sign: 1, phi_k: -1, beta: 1 }));
        assert!(r.families.contains(&Family::TwoHalfTwists { i: 1, j: 2, sign: -1, phi_k: 1, beta: 1 }));
        assert_eq!(r.families.len(), 7);
    }

    #[test]
    fn klein_bottle_exception() {
        let d = parse_seifert("(N,2 | 0); boundaries=0; phi: x1=-1,x2=-1").unwrap();
        let r = classify_reversible_families(&d);
        assert_eq!(
            r.families,
            vec![
                Family::PowersOfH,
                Family::SurfaceException {
                    surface: BaseSurface::KleinBottle,
                    generators: vec!["x1".into(), "x2".into()]
                }
            ]
        );
    }

    #[test]
    fn mismatched_beta_excluded() {
        let d = parse_seifert("(O,o,0 | 0; (4,1),(4,3)); boundaries=1").unwrap();
        let r = classify_reversible_families(&d);
        assert!(r
            .families
            .iter()
            .all(|f| !matches!(f, Family::TwoHalfTwists { i: 1, j: 2, .. })));
    }
}
