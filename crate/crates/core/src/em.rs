//! Electromagnetic field matrices: the real 4x4 field matrix built from the
//! 3-vectors E and B, the 4x4 complex "spin" matrix that extends it with the
//! extra components E0 and B0, and the antisymmetry audit.
//!
//! Both matrices exist in two forms: a verbatim transcription of the reference
//! formulas (which is *not* antisymmetric in E, and which carries a suspect
//! entry at row 3, column 2) and a pattern-corrected companion. The module's
//! job is to quantify the difference, not to silently repair it: the verbatim
//! constructors are the primary artifacts and the corrected ones are the
//! comparison baseline.

use num_complex::Complex;

use crate::error::Result;
use crate::matrix::{Mat, Mat4C};
use crate::oct::Oct;
use crate::scalar::{format_csv, parse_csv, Scalar};

/// Field data: the electric and magnetic 3-vectors plus the two scalar
/// extension components used by the spin matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct EmField<S> {
    pub e0: S,
    pub b0: S,
    pub e: [S; 3],
    pub b: [S; 3],
}

impl<S: Scalar> EmField<S> {
    pub fn zero() -> Self {
        Self {
            e0: S::zero(),
            b0: S::zero(),
            e: [S::zero(), S::zero(), S::zero()],
            b: [S::zero(), S::zero(), S::zero()],
        }
    }

    /// Parses "E1,E2,E3,B1,B2,B3[,E0[,B0]]"; the trailing scalars default to
    /// zero when omitted.
    pub fn parse(s: &str) -> Result<Self> {
        let vals: Vec<S> = parse_csv(s, 6..=8)?;
        let get = |i: usize| vals.get(i).cloned().unwrap_or_else(S::zero);
        Ok(Self {
            e: [vals[0].clone(), vals[1].clone(), vals[2].clone()],
            b: [vals[3].clone(), vals[4].clone(), vals[5].clone()],
            e0: get(6),
            b0: get(7),
        })
    }
}

impl<S: Scalar> std::fmt::Display for EmField<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let all = [
            self.e[0].clone(),
            self.e[1].clone(),
            self.e[2].clone(),
            self.b[0].clone(),
            self.b[1].clone(),
            self.b[2].clone(),
            self.e0.clone(),
            self.b0.clone(),
        ];
        write!(f, "{}", format_csv(&all))
    }
}

/// The 4x4 field matrix, transcribed verbatim: the B-block is antisymmetric,
/// but the E components appear with a positive sign in both the last row and
/// the last column, so the whole matrix is not antisymmetric unless E = 0.
pub fn field_matrix<S: Scalar>(f: &EmField<S>) -> Mat<S, 4, 4> {
    let z = S::zero;
    let [e1, e2, e3] = f.e.clone();
    let [b1, b2, b3] = f.b.clone();
    Mat([
        [z(), b3.clone(), -b2.clone(), e1.clone()],
        [-b3, z(), b1.clone(), e2.clone()],
        [b2, -b1, z(), e3.clone()],
        [e1, e2, e3, z()],
    ])
}

/// Companion with the last-row E entries negated, which is the unique
/// single-block sign change making the matrix antisymmetric.
pub fn field_matrix_antisymmetric<S: Scalar>(f: &EmField<S>) -> Mat<S, 4, 4> {
    let mut m = field_matrix(f);
    for j in 0..3 {
        let v = m[(3, j)].clone();
        m[(3, j)] = -v;
    }
    m
}

/// Squared Frobenius norm of m + m^T — the exact antisymmetry defect. For the
/// verbatim field matrix this equals 8(E1^2 + E2^2 + E3^2) identically.
pub fn antisymmetry_defect_sq<S: Scalar>(m: &Mat<S, 4, 4>) -> S {
    let mut total = S::zero();
    for i in 0..4 {
        for j in 0..4 {
            let entry = m[(i, j)].clone() + m[(j, i)].clone();
            total = total + entry.clone() * entry;
        }
    }
    total
}

/// Frobenius norm of m + m^T when representable in the scalar type: floats
/// always; exact rationals only when the squared defect is a perfect square.
pub fn antisymmetry_defect<S: Scalar>(m: &Mat<S, 4, 4>) -> Option<S> {
    antisymmetry_defect_sq(m).approx_sqrt()
}

fn spin_matrix_with<S: Scalar>(f: &EmField<S>, entry32_re: S) -> Mat4C<S> {
    let [e1, e2, e3] = f.e.clone();
    let [b1, b2, b3] = f.b.clone();
    let (e0, b0) = (f.e0.clone(), f.b0.clone());
    let c = Complex::new;
    Mat([
        [
            c(e0.clone(), e1.clone()),
            c(b0.clone(), b1.clone()),
            c(b3.clone(), e2.clone()),
            c(-b2.clone(), e3.clone()),
        ],
        [
            c(b0.clone(), b1.clone()),
            c(e0.clone(), e1.clone()),
            c(e3.clone(), b2.clone()),
            c(-e2.clone(), b3.clone()),
        ],
        [
            c(-b3.clone(), e2.clone()),
            c(-e3.clone(), b2.clone()),
            c(e0.clone(), -e1.clone()),
            c(b1, b0.clone()),
        ],
        [
            c(b2, e3),
            c(e2, b3),
            c(entry32_re, -b0),
            c(e0, -e1),
        ],
    ])
}

/// The 4x4 complex spin matrix, transcribed verbatim — including the suspect
/// entry -B2 - iB0 at row 3, column 2.
pub fn spin_field_matrix<S: Scalar>(f: &EmField<S>) -> Mat4C<S> {
    spin_matrix_with(f, -f.b[1].clone())
}

/// Companion with row 3, column 2 read as -B1 - iB0, the value the derived
/// representation pattern produces (see [`spin_octet`]); every other entry is
/// identical to the verbatim transcription.
pub fn spin_field_matrix_corrected<S: Scalar>(f: &EmField<S>) -> Mat4C<S> {
    spin_matrix_with(f, -f.b[0].clone())
}

/// The octet whose derived complex representation reproduces the spin matrix:
/// components (E0, B0, B3, -B2, E1, B1, E2, E3). Its complex representation
/// equals [`spin_field_matrix_corrected`] exactly, and therefore matches the
/// verbatim [`spin_field_matrix`] on 15 of the 16 entries — all but row 3,
/// column 2.
pub fn spin_octet<S: Scalar>(f: &EmField<S>) -> Oct<S> {
    Oct([
        f.e0.clone(),
        f.b0.clone(),
        f.b[2].clone(),
        -f.b[1].clone(),
        f.e[0].clone(),
        f.b[0].clone(),
        f.e[1].clone(),
        f.e[2].clone(),
    ])
}
