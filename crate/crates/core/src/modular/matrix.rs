use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{int, IntScalar};

/// Determinant-one 2×2 integer matrix, sign-normalized so that the first
/// nonzero of `(m11, m12, m21)` is positive. Two matrices are equal iff they
/// represent the same element of PSL(2,Z).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2<T> {
    pub m11: T,
    pub m12: T,
    pub m21: T,
    pub m22: T,
}

impl<T: IntScalar> Mat2<T> {
    pub fn new(m11: T, m12: T, m21: T, m22: T) -> Result<Self> {
        let m = Mat2 { m11, m12, m21, m22 };
        if m.det() != T::one() {
            return Err(Error::InvalidInvariant(format!("determinant of {m} is not 1")));
        }
        Ok(m.normalized())
    }

    pub(crate) fn from_i64(m11: i64, m12: i64, m21: i64, m22: i64) -> Self {
        Mat2 {
            m11: int(m11),
            m12: int(m12),
            m21: int(m21),
            m22: int(m22),
        }
        .normalized()
    }

    pub fn identity() -> Self {
        Self::from_i64(1, 0, 0, 1)
    }

    pub fn det(&self) -> T {
        self.m11.clone() * self.m22.clone() - self.m12.clone() * self.m21.clone()
    }

    pub fn trace(&self) -> T {
        self.m11.clone() + self.m22.clone()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    #[must_use]
    pub fn normalized(self) -> Self {
        let lead = [&self.m11, &self.m12, &self.m21]
            .into_iter()
            .find(|v| !v.is_zero())
            .cloned();
        match lead {
            Some(v) if v.is_negative() => Mat2 {
                m11: -self.m11,
                m12: -self.m12,
                m21: -self.m21,
                m22: -self.m22,
            },
            _ => self,
        }
    }

    #[must_use]
    pub fn mul(&self, o: &Self) -> Self {
        let (a, b, c, d) = (&self.m11, &self.m12, &self.m21, &self.m22);
        Mat2 {
            m11: a.clone() * o.m11.clone() + b.clone() * o.m21.clone(),
            m12: a.clone() * o.m12.clone() + b.clone() * o.m22.clone(),
            m21: c.clone() * o.m11.clone() + d.clone() * o.m21.clone(),
            m22: c.clone() * o.m12.clone() + d.clone() * o.m22.clone(),
        }
        .normalized()
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        Mat2 {
            m11: self.m22.clone(),
            m12: -self.m12.clone(),
            m21: -self.m21.clone(),
            m22: self.m11.clone(),
        }
        .normalized()
    }

    /// Möbius action `z ↦ (m11 z + m12)/(m21 z + m22)` on a point `(re, im)`.
    pub fn act_f64(&self, re: f64, im: f64) -> (f64, f64) {
        let f = |v: &T| v.to_f64().unwrap_or(f64::NAN);
        let (a, b, c, d) = (f(&self.m11), f(&self.m12), f(&self.m21), f(&self.m22));
        // (a z + b)/(c z + d), z = re + i im
        let (nr, ni) = (a * re + b, a * im);
        let (dr, di) = (c * re + d, c * im);
        let den = dr * dr + di * di;
        ((nr * dr + ni * di) / den, (ni * dr - nr * di) / den)
    }
}

impl<T: fmt::Display> fmt::Display for Mat2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.m11, self.m12, self.m21, self.m22)
    }
}

impl<T: fmt::Display> Serialize for Mat2<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn sign_rule() {
        let m = Mat2::<i64>::from_i64(0, -1, 1, 0);
        assert_eq!(m, Mat2::from_i64(0, 1, -1, 0));
        assert_eq!(m.m12, 1);
        let m = Mat2::<i64>::from_i64(-2, -1, -1, -1);
        assert_eq!((m.m11, m.m12, m.m21, m.m22), (2, 1, 1, 1));
    }

    #[test]
    fn rejects_bad_determinant() {
        assert!(Mat2::<i64>::new(2, 0, 0, 1).is_err());
        assert!(Mat2::<BigInt>::new(2.into(), 1.into(), 1.into(), 1.into()).is_ok());
    }

    #[test]
    fn inverse_and_identity() {
        let m = Mat2::<i128>::from_i64(2, 1, 1, 1);
        assert!(m.mul(&m.inverse()).is_identity());
        assert_eq!(m.to_string(), "[[2,1],[1,1]]");
    }
}
