use std::fmt;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::{Mat, Mat2, Mat2C};
use crate::oct::Oct;
use crate::quat::{Quaternion, SplitQuaternion};
use crate::rep::{rep_matrix, RepSource};
use crate::scalar::Scalar;
use crate::vec6::ProductVariant;

/// psi_1 = (a0-a1) + (a2-a7)i + (a6+a3)j + (a4-a5)k,
/// psi_2 = (a0+a1) + (a2+a7)i + (a6-a3)j - (a4+a5)k.
/// Linear bijection R^8 -> H x H; see `from_quat_pair` for the inverse.
pub fn to_quat_pair<S: Scalar>(a: &Oct<S>) -> (Quaternion<S>, Quaternion<S>) {
    let c = &a.0;
    (
        Quaternion::new(
            c[0].clone() - c[1].clone(),
            c[2].clone() - c[7].clone(),
            c[6].clone() + c[3].clone(),
            c[4].clone() - c[5].clone(),
        ),
        Quaternion::new(
            c[0].clone() + c[1].clone(),
            c[2].clone() + c[7].clone(),
            c[6].clone() - c[3].clone(),
            -(c[4].clone() + c[5].clone()),
        ),
    )
}

/// Exact two-sided inverse of `to_quat_pair` (solve the 8x8 linear system
/// once; each component is an average of two quaternion coordinates).
pub fn from_quat_pair<S: Scalar>(q1: &Quaternion<S>, q2: &Quaternion<S>) -> Oct<S> {
    let half = S::ratio(1, 2);
    let avg = |p: &S, m: &S| half.clone() * (p.clone() + m.clone());
    let dif = |p: &S, m: &S| half.clone() * (p.clone() - m.clone());
    Oct([
        avg(&q1.w, &q2.w),
        dif(&q2.w, &q1.w),
        avg(&q1.x, &q2.x),
        dif(&q1.y, &q2.y),
        dif(&q1.z, &q2.z),
        -avg(&q1.z, &q2.z),
        avg(&q1.y, &q2.y),
        dif(&q2.x, &q1.x),
    ])
}

/// psi_1 = (a0-a1) + (a2-a7)i + (a4-a5)j + (a6+a3)k,
/// psi_2 = (a0+a1) + (a2+a7)i + (a4+a5)j + (a6-a3)k.
pub fn to_splitquat_pair<S: Scalar>(a: &Oct<S>) -> (SplitQuaternion<S>, SplitQuaternion<S>) {
    let c = &a.0;
    (
        SplitQuaternion::new(
            c[0].clone() - c[1].clone(),
            c[2].clone() - c[7].clone(),
            c[4].clone() - c[5].clone(),
            c[6].clone() + c[3].clone(),
        ),
        SplitQuaternion::new(
            c[0].clone() + c[1].clone(),
            c[2].clone() + c[7].clone(),
            c[4].clone() + c[5].clone(),
            c[6].clone() - c[3].clone(),
        ),
    )
}

/// The printed pair of 2x2 real matrices (A, B) associated to an octet.
pub fn g1_to_sl2r_pair<S: Scalar>(a: &Oct<S>) -> (Mat2<S>, Mat2<S>) {
    let c = &a.0;
    let v = |i: usize| c[i].clone();
    let a_mat: Mat2<S> = Mat([
        [
            v(0) - v(1) + v(3) + v(6),
            v(4) - v(5) - v(2) + v(7),
        ],
        [
            v(4) - v(5) + v(2) - v(7),
            v(0) - v(1) - v(3) - v(6),
        ],
    ]);
    let b_mat: Mat2<S> = Mat([
        [
            v(0) + v(1) + v(3) - v(6),
            -v(4) - v(5) - v(2) - v(7),
        ],
        [
            -v(4) - v(5) + v(2) + v(7),
            v(0) + v(1) - v(3) + v(6),
        ],
    ]);
    (a_mat, b_mat)
}

/// Exact inverse of `g1_to_sl2r_pair`.
pub fn from_sl2r_pair<S: Scalar>(a_mat: &Mat2<S>, b_mat: &Mat2<S>) -> Oct<S> {
    let q = S::ratio(1, 4);
    let a = &a_mat.0;
    let b = &b_mat.0;
    let atr = a[0][0].clone() + a[1][1].clone();
    let btr = b[0][0].clone() + b[1][1].clone();
    let adf = a[0][0].clone() - a[1][1].clone();
    let bdf = b[0][0].clone() - b[1][1].clone();
    let asm = a[0][1].clone() + a[1][0].clone();
    let bsm = b[0][1].clone() + b[1][0].clone();
    let aan = a[1][0].clone() - a[0][1].clone();
    let ban = b[1][0].clone() - b[0][1].clone();
    Oct([
        q.clone() * (atr.clone() + btr.clone()),
        q.clone() * (btr - atr),
        q.clone() * (aan.clone() + ban.clone()),
        q.clone() * (adf.clone() + bdf.clone()),
        q.clone() * (asm.clone() - bsm.clone()),
        q.clone() * (-asm - bsm),
        q.clone() * (adf - bdf),
        q * (ban - aan),
    ])
}

/// The printed 2x2 complex matrix
/// [[(a0-a7) + (a1+a2)i, (-a3-a4) + (a5+a6)i],
///  [(a3-a4) + (a5-a6)i, (a0+a7) + (a1-a2)i]].
pub fn g2_to_sl2c<S: Scalar>(a: &Oct<S>) -> Mat2C<S> {
    let c = &a.0;
    let v = |i: usize| c[i].clone();
    Mat([
        [
            Complex::new(v(0) - v(7), v(1) + v(2)),
            Complex::new(-v(3) - v(4), v(5) + v(6)),
        ],
        [
            Complex::new(v(3) - v(4), v(5) - v(6)),
            Complex::new(v(0) + v(7), v(1) - v(2)),
        ],
    ])
}

/// Exact inverse of `g2_to_sl2c`.
pub fn from_sl2c<S: Scalar>(m: &Mat2C<S>) -> Oct<S> {
    let half = S::ratio(1, 2);
    let h = |x: S| half.clone() * x;
    let e = &m.0;
    Oct([
        h(e[0][0].re.clone() + e[1][1].re.clone()),
        h(e[0][0].im.clone() + e[1][1].im.clone()),
        h(e[0][0].im.clone() - e[1][1].im.clone()),
        h(e[1][0].re.clone() - e[0][1].re.clone()),
        h(-(e[0][1].re.clone() + e[1][0].re.clone())),
        h(e[0][1].im.clone() + e[1][0].im.clone()),
        h(e[0][1].im.clone() - e[1][0].im.clone()),
        h(e[1][1].re.clone() - e[0][0].re.clone()),
    ])
}

/// Maps that can be audited for multiplicativity against a star product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapId {
    /// The identity map on (R^8, star) — a control.
    Identity,
    /// `to_quat_pair`, audited per component.
    QuatPair,
    /// `to_splitquat_pair`, audited per component.
    SplitQuatPair,
    /// `g1_to_sl2r_pair`, audited per component.
    Sl2rPair,
    /// `g2_to_sl2c`.
    Sl2c,
    /// The derived 8x8 representation.
    RepDerived,
}

impl MapId {
    pub const ALL: [MapId; 6] = [
        MapId::Identity,
        MapId::QuatPair,
        MapId::SplitQuatPair,
        MapId::Sl2rPair,
        MapId::Sl2c,
        MapId::RepDerived,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MapId::Identity => "identity",
            MapId::QuatPair => "quat-pair",
            MapId::SplitQuatPair => "splitquat-pair",
            MapId::Sl2rPair => "sl2r-pair",
            MapId::Sl2c => "sl2c",
            MapId::RepDerived => "rep-derived",
        }
    }
}

impl fmt::Display for MapId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Verdict of the 64-basis-pair audit for one component of a map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MulType {
    /// f(x*y) = f(x)f(y) on every basis pair.
    Hom,
    /// f(x*y) = f(y)f(x) on every basis pair (and HOM fails somewhere).
    AntiHom,
    Neither,
}

impl fmt::Display for MulType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MulType::Hom => "HOM",
            MulType::AntiHom => "ANTIHOM",
            MulType::Neither => "NEITHER",
        })
    }
}

fn classify<S: Scalar, T: PartialEq>(
    v: ProductVariant,
    f: impl Fn(&Oct<S>) -> T,
    mul: impl Fn(&T, &T) -> T,
) -> MulType {
    let mut hom = true;
    let mut anti = true;
    for i in 0..8 {
        for j in 0..8 {
            let (ei, ej): (Oct<S>, Oct<S>) = (Oct::basis(i), Oct::basis(j));
            let lhs = f(&ei.star(&ej, v));
            let (fi, fj) = (f(&ei), f(&ej));
            if lhs != mul(&fi, &fj) {
                hom = false;
            }
            if lhs != mul(&fj, &fi) {
                anti = false;
            }
            if !hom && !anti {
                return MulType::Neither;
            }
        }
    }
    if hom {
        MulType::Hom
    } else if anti {
        MulType::AntiHom
    } else {
        MulType::Neither
    }
}

/// Exhaustive 64-basis-pair audit: does each component of the map carry
/// star(·,·,v) to its target product homomorphically, anti-homomorphically,
/// or neither? Bilinearity of both sides makes the basis sweep conclusive.
pub fn multiplicativity_type<S: Scalar>(map: MapId, v: ProductVariant) -> Vec<MulType> {
    match map {
        MapId::Identity => vec![classify::<S, _>(v, |a| a.clone(), |x, y| x.star(y, v))],
        MapId::QuatPair => vec![
            classify::<S, _>(v, |a| to_quat_pair(a).0, Quaternion::mul),
            classify::<S, _>(v, |a| to_quat_pair(a).1, Quaternion::mul),
        ],
        MapId::SplitQuatPair => vec![
            classify::<S, _>(v, |a| to_splitquat_pair(a).0, SplitQuaternion::mul),
            classify::<S, _>(v, |a| to_splitquat_pair(a).1, SplitQuaternion::mul),
        ],
        MapId::Sl2rPair => vec![
            classify::<S, _>(v, |a| g1_to_sl2r_pair(a).0, |x, y| x.mul(y)),
            classify::<S, _>(v, |a| g1_to_sl2r_pair(a).1, |x, y| x.mul(y)),
        ],
        MapId::Sl2c => vec![classify::<S, _>(v, |a| g2_to_sl2c(a), |x, y| x.mul(y))],
        MapId::RepDerived => vec![classify::<S, _>(
            v,
            |a| rep_matrix(a, v, RepSource::Derived),
            |x, y| x.mul(y),
        )],
    }
}

/// Parse a comma-separated rational 4-tuple "w,x,y,z" as a quaternion.
pub fn parse_quat<S: Scalar>(s: &str) -> Result<Quaternion<S>> {
    let v = crate::scalar::parse_csv::<S>(s, 4..=4)?;
    let [w, x, y, z]: [S; 4] = v.try_into().map_err(|_| Error::Parse("bad length".into()))?;
    Ok(Quaternion::new(w, x, y, z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Exact;

    type Q = Quaternion<Exact>;

    fn oct(c: [i64; 8]) -> Oct<Exact> {
        Oct::from_i64(c)
    }

    #[test]
    fn quat_pair_of_basis_octets() {
        let one = Q::one();
        let i = Q::new(
            Exact::from_i64(0),
            Exact::from_i64(1),
            Exact::from_i64(0),
            Exact::from_i64(0),
        );
        assert_eq!(to_quat_pair(&oct([1, 0, 0, 0, 0, 0, 0, 0])), (one.clone(), one.clone()));
        let minus_one = Q::new(
            Exact::from_i64(-1),
            Exact::from_i64(0),
            Exact::from_i64(0),
            Exact::from_i64(0),
        );
        assert_eq!(to_quat_pair(&oct([0, 1, 0, 0, 0, 0, 0, 0])), (minus_one, one.clone()));
        assert_eq!(to_quat_pair(&oct([0, 0, 1, 0, 0, 0, 0, 0])), (i.clone(), i));
    }

    #[test]
    fn quat_pair_round_trip_on_basis() {
        for i in 0..8 {
            let a: Oct<Exact> = Oct::basis(i);
            let (q1, q2) = to_quat_pair(&a);
            assert_eq!(from_quat_pair(&q1, &q2), a, "basis {i}");
        }
    }

    #[test]
    fn splitquat_pair_examples() {
        let j1 = SplitQuaternion::new(
            Exact::from_i64(0),
            Exact::from_i64(0),
            Exact::from_i64(1),
            Exact::from_i64(0),
        );
        assert_eq!(to_splitquat_pair(&oct([0, 0, 0, 0, 1, 0, 0, 0])), (j1.clone(), j1));
        let k = |s: i64| {
            SplitQuaternion::new(
                Exact::from_i64(0),
                Exact::from_i64(0),
                Exact::from_i64(0),
                Exact::from_i64(s),
            )
        };
        assert_eq!(to_splitquat_pair(&oct([0, 0, 0, 1, 0, 0, 0, 0])), (k(1), k(-1)));
    }

    #[test]
    fn sl2r_pair_round_trip_and_examples() {
        let (a_mat, b_mat) = g1_to_sl2r_pair(&oct([1, 0, 0, 0, 0, 0, 0, 0]));
        assert_eq!(a_mat, Mat2::<Exact>::identity());
        assert_eq!(b_mat, Mat2::<Exact>::identity());
        for i in 0..8 {
            let a: Oct<Exact> = Oct::basis(i);
            let (am, bm) = g1_to_sl2r_pair(&a);
            assert_eq!(from_sl2r_pair(&am, &bm), a, "basis {i}");
        }
    }

    #[test]
    fn sl2c_round_trip_and_examples() {
        assert_eq!(g2_to_sl2c(&oct([1, 0, 0, 0, 0, 0, 0, 0])), Mat2C::<Exact>::identity());
        let m = g2_to_sl2c(&oct([0, 0, 0, 0, 0, 0, 0, 1]));
        assert_eq!(m.0[0][0], Complex::new(Exact::from_i64(-1), Exact::from_i64(0)));
        assert_eq!(m.0[1][1], Complex::new(Exact::from_i64(1), Exact::from_i64(0)));
        assert!(m.0[0][1] == Complex::new(Exact::from_i64(0), Exact::from_i64(0)));
        for i in 0..8 {
            let a: Oct<Exact> = Oct::basis(i);
            assert_eq!(from_sl2c(&g2_to_sl2c(&a)), a, "basis {i}");
        }
    }

    #[test]
    fn identity_map_is_hom() {
        for v in ProductVariant::ALL {
            assert_eq!(multiplicativity_type::<Exact>(MapId::Identity, v), vec![MulType::Hom]);
        }
    }

    #[test]
    fn quat_pair_types_hom_antihom_on_spin4() {
        assert_eq!(
            multiplicativity_type::<Exact>(MapId::QuatPair, ProductVariant::Spin4),
            vec![MulType::Hom, MulType::AntiHom]
        );
    }

    #[test]
    fn audit_results_on_remaining_pairs() {
        use MulType::*;
        use ProductVariant::*;
        let cases: [(MapId, ProductVariant, &[MulType]); 7] = [
            (MapId::SplitQuatPair, B1, &[Neither, AntiHom]),
            (MapId::SplitQuatPair, B2, &[Neither, Neither]),
            (MapId::SplitQuatPair, B3, &[Neither, Neither]),
            (MapId::Sl2rPair, B1, &[Neither, Hom]),
            (MapId::Sl2c, B2, &[Neither]),
            (MapId::Sl2c, B1, &[Neither]),
            (MapId::QuatPair, B1, &[Neither, Neither]),
        ];
        for (map, v, expect) in cases {
            assert_eq!(multiplicativity_type::<Exact>(map, v), expect.to_vec(), "{map} under {v}");
        }
    }
}
