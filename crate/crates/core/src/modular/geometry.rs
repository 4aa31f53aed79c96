//! Exact fixed-point geometry in the upper half-plane.

use num_rational::Ratio;
use serde::Serialize;

use super::{classify, to_matrix, IsometryClass, Mat2};
use crate::error::{Error, Result};
use crate::scalar::{int, ratio_to_real, IntScalar, RealScalar};
use crate::word::Word;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Geodesic joining the fixed points `(p ± √d)/q` of a hyperbolic element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axis<T: IntScalar> {
    pub p: T,
    pub q: T,
    pub d: T,
    pub center: Ratio<T>,
    pub radius_sq: Ratio<T>,
}

impl<T: IntScalar> Axis<T> {
    fn from_matrix(m: &Mat2<T>) -> Self {
        let two: T = int(2);
        let four: T = int(4);
        let tr = m.trace();
        let mut p = m.m11.clone() - m.m22.clone();
        let mut q = two * m.m21.clone();
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        let d = tr.clone() * tr - four;
        let center = Ratio::new(p.clone(), q.clone());
        let radius_sq = Ratio::new(d.clone(), q.clone() * q.clone());
        Axis { p, q, d, center, radius_sq }
    }

    /// Endpoints in floating point, smaller first.
    pub fn endpoints_f64(&self) -> (f64, f64) {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        let s = self.d.to_f64().unwrap_or(f64::NAN).sqrt();
        ((p - s) / q, (p + s) / q)
    }
}

impl<T: IntScalar> Serialize for Axis<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Axis", 3)?;
        st.serialize_field("endpoints", &format!("({} ± √{})/{}", self.p, self.d, self.q))?;
        st.serialize_field("center", &self.center.to_string())?;
        st.serialize_field("radius_sq", &self.radius_sq.to_string())?;
        st.end()
    }
}

/// A point `re + i·√im_sq` of the upper half-plane with exact data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlanePoint<T: IntScalar> {
    pub re: Ratio<T>,
    pub im_sq: Ratio<T>,
}

impl<T: IntScalar> HalfPlanePoint<T> {
    pub fn to_f64(&self) -> (f64, f64) {
        let re = ratio_to_real::<T, f64>(&self.re).unwrap_or(f64::NAN);
        let im_sq = ratio_to_real::<T, f64>(&self.im_sq).unwrap_or(f64::NAN);
        (re, im_sq.sqrt())
    }
}

pub fn axis<T: IntScalar>(w: &Word) -> Result<Axis<T>> {
    if classify(w)? != IsometryClass::Hyperbolic {
        return Err(Error::NotHyperbolic);
    }
    Ok(Axis::from_matrix(&to_matrix(w)?))
}

/// Fixed point in the upper half-plane of an elliptic element: the root with
/// positive imaginary part of `m21·z² + (m22 − m11)·z − m12 = 0`.
pub fn elliptic_fixed_point<T: IntScalar>(w: &Word) -> Result<HalfPlanePoint<T>> {
    if !classify(w)?.is_elliptic() {
        return Err(Error::NotElliptic);
    }
    let m: Mat2<T> = to_matrix(w)?;
    let two: T = int(2);
    let four: T = int(4);
    debug_assert!(!m.m21.is_zero());
    let tr = m.trace();
    let re = Ratio::new(m.m11.clone() - m.m22.clone(), two * m.m21.clone());
    let im_sq = Ratio::new(
        four.clone() - tr.clone() * tr,
        four * m.m21.clone() * m.m21.clone(),
    );
    Ok(HalfPlanePoint { re, im_sq })
}

/// Checks that the fixed point of an involutive reverser lies on the axis of
/// a hyperbolic `w`, up to `tolerance` on the squared-distance residual.
pub fn reverser_on_axis_check<T: IntScalar, F: RealScalar>(
    w: &Word,
    reverser: &Word,
    tolerance: F,
) -> Result<bool> {
    if classify(w)? != IsometryClass::Hyperbolic {
        return Err(Error::NotHyperbolic);
    }
    if !w.same_scheme(reverser) {
        return Err(Error::SchemeMismatch);
    }
    if w.conjugate_by(reverser) != w.inverse() {
        return Err(Error::InvalidCertificate(format!("{reverser} does not reverse {w}")));
    }
    if reverser.is_identity() || !reverser.pow(2).is_identity() {
        return Err(Error::InvalidCertificate(format!("{reverser} is not an involution")));
    }
    let axis: Axis<T> = axis(w)?;
    let point: HalfPlanePoint<T> = elliptic_fixed_point(reverser)?;
    let real = |r: &Ratio<T>| {
        ratio_to_real::<T, F>(r)
            .ok_or_else(|| Error::InvalidCertificate("coordinates overflow the float type".into()))
    };
    let dx = real(&point.re)? - real(&axis.center)?;
    let residual = dx * dx + real(&point.im_sq)? - real(&axis.radius_sq)?;
    Ok(residual.abs() < tolerance)
}
