use std::fmt;

use crate::scalar::{format_csv, Scalar};

/// Hamilton quaternion w + x i + y j + z k with i^2 = j^2 = k^2 = -1,
/// ij = k, jk = i, ki = j.
#[derive(Debug, Clone, PartialEq)]
pub struct Quaternion<S> {
    pub w: S,
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> Quaternion<S> {
    pub fn new(w: S, x: S, y: S, z: S) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn one() -> Self {
        Quaternion::new(S::one(), S::zero(), S::zero(), S::zero())
    }

    pub fn mul(&self, q: &Self) -> Self {
        let (w1, x1, y1, z1) = (&self.w, &self.x, &self.y, &self.z);
        let (w2, x2, y2, z2) = (&q.w, &q.x, &q.y, &q.z);
        Quaternion::new(
            w1.clone() * w2.clone() - x1.clone() * x2.clone() - y1.clone() * y2.clone()
                - z1.clone() * z2.clone(),
            w1.clone() * x2.clone() + x1.clone() * w2.clone() + y1.clone() * z2.clone()
                - z1.clone() * y2.clone(),
            w1.clone() * y2.clone() - x1.clone() * z2.clone() + y1.clone() * w2.clone()
                + z1.clone() * x2.clone(),
            w1.clone() * z2.clone() + x1.clone() * y2.clone() - y1.clone() * x2.clone()
                + z1.clone() * w2.clone(),
        )
    }

    /// w^2 + x^2 + y^2 + z^2; multiplicative, and 1 exactly on the unit
    /// sphere S^3.
    pub fn norm_sq(&self) -> S {
        self.w.clone() * self.w.clone()
            + self.x.clone() * self.x.clone()
            + self.y.clone() * self.y.clone()
            + self.z.clone() * self.z.clone()
    }

    pub fn components(&self) -> [S; 4] {
        [self.w.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }
}

/// Split quaternion w + x i + y j + z k with i^2 = -1, j^2 = k^2 = +1,
/// ij = k, jk = -i, ki = j. Its pseudo-norm w^2 + x^2 - y^2 - z^2 is
/// multiplicative; the unit group is SL(2,R) in disguise.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitQuaternion<S> {
    pub w: S,
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> SplitQuaternion<S> {
    pub fn new(w: S, x: S, y: S, z: S) -> Self {
        SplitQuaternion { w, x, y, z }
    }

    pub fn one() -> Self {
        SplitQuaternion::new(S::one(), S::zero(), S::zero(), S::zero())
    }

    pub fn mul(&self, q: &Self) -> Self {
        let (w1, x1, y1, z1) = (&self.w, &self.x, &self.y, &self.z);
        let (w2, x2, y2, z2) = (&q.w, &q.x, &q.y, &q.z);
        SplitQuaternion::new(
            w1.clone() * w2.clone() - x1.clone() * x2.clone() + y1.clone() * y2.clone()
                + z1.clone() * z2.clone(),
            w1.clone() * x2.clone() + x1.clone() * w2.clone() - y1.clone() * z2.clone()
                + z1.clone() * y2.clone(),
            w1.clone() * y2.clone() - x1.clone() * z2.clone() + y1.clone() * w2.clone()
                + z1.clone() * x2.clone(),
            w1.clone() * z2.clone() + x1.clone() * y2.clone() - y1.clone() * x2.clone()
                + z1.clone() * w2.clone(),
        )
    }

    /// The multiplicative pseudo-norm w^2 + x^2 - y^2 - z^2.
    pub fn pseudo_norm(&self) -> S {
        self.w.clone() * self.w.clone() + self.x.clone() * self.x.clone()
            - self.y.clone() * self.y.clone()
            - self.z.clone() * self.z.clone()
    }

    pub fn components(&self) -> [S; 4] {
        [self.w.clone(), self.x.clone(), self.y.clone(), self.z.clone()]
    }
}

impl<S: Scalar> fmt::Display for Quaternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_csv(&self.components()))
    }
}

impl<S: Scalar> fmt::Display for SplitQuaternion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_csv(&self.components()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Exact;

    fn q(c: [i64; 4]) -> Quaternion<Exact> {
        Quaternion::new(
            Exact::from_i64(c[0]),
            Exact::from_i64(c[1]),
            Exact::from_i64(c[2]),
            Exact::from_i64(c[3]),
        )
    }

    fn sq(c: [i64; 4]) -> SplitQuaternion<Exact> {
        SplitQuaternion::new(
            Exact::from_i64(c[0]),
            Exact::from_i64(c[1]),
            Exact::from_i64(c[2]),
            Exact::from_i64(c[3]),
        )
    }

    #[test]
    fn quaternion_table() {
        let (i, j, k) = (q([0, 1, 0, 0]), q([0, 0, 1, 0]), q([0, 0, 0, 1]));
        assert_eq!(i.mul(&i), q([-1, 0, 0, 0]));
        assert_eq!(j.mul(&j), q([-1, 0, 0, 0]));
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&i), q([0, 0, 0, -1]));
        assert_eq!(j.mul(&k), i);
        assert_eq!(k.mul(&i), j);
    }

    #[test]
    fn split_table() {
        let (i, j, k) = (sq([0, 1, 0, 0]), sq([0, 0, 1, 0]), sq([0, 0, 0, 1]));
        assert_eq!(i.mul(&i), sq([-1, 0, 0, 0]));
        assert_eq!(j.mul(&j), sq([1, 0, 0, 0]));
        assert_eq!(k.mul(&k), sq([1, 0, 0, 0]));
        assert_eq!(i.mul(&j), k);
        assert_eq!(j.mul(&k), sq([0, -1, 0, 0]));
        assert_eq!(k.mul(&i), j);
    }

    #[test]
    fn norms_multiplicative() {
        let a = q([1, 2, 3, 4]);
        let b = q([5, -1, 2, 0]);
        assert_eq!(a.mul(&b).norm_sq(), a.norm_sq() * b.norm_sq());
        let a = sq([1, 2, 3, 4]);
        let b = sq([5, -1, 2, 0]);
        assert_eq!(a.mul(&b).pseudo_norm(), a.pseudo_norm() * b.pseudo_norm());
    }
}
