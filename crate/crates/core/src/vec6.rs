use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{format_csv, parse_csv, Scalar};

/// Selects which product family an operation uses: the compact-signature
/// product on R^6 (`Spin4`) or one of the three split-signature brackets
/// (`B1`..`B3`). Each variant bundles its outer product, its conjugation,
/// and its bilinear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductVariant {
    Spin4,
    B1,
    B2,
    B3,
}

impl ProductVariant {
    pub const ALL: [ProductVariant; 4] = [
        ProductVariant::Spin4,
        ProductVariant::B1,
        ProductVariant::B2,
        ProductVariant::B3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductVariant::Spin4 => "spin4",
            ProductVariant::B1 => "b1",
            ProductVariant::B2 => "b2",
            ProductVariant::B3 => "b3",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "spin4" => Ok(ProductVariant::Spin4),
            "b1" => Ok(ProductVariant::B1),
            "b2" => Ok(ProductVariant::B2),
            "b3" => Ok(ProductVariant::B3),
            _ => Err(Error::Parse(format!(
                "unknown variant {s:?}; expected spin4, b1, b2, or b3"
            ))),
        }
    }

    /// The bilinear form paired with this variant's product.
    pub fn form(self) -> Form {
        match self {
            ProductVariant::Spin4 => Form::Euclid,
            ProductVariant::B1 => Form::Form1,
            ProductVariant::B2 | ProductVariant::B3 => Form::Form23,
        }
    }
}

impl fmt::Display for ProductVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The three bilinear forms on R^6. `Euclid` is the standard dot product;
/// `Form1` and `Form23` are the split-signature antidiagonal forms (the
/// second is shared by variants B2 and B3).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    Euclid,
    Form1,
    Form23,
}

/// Antidiagonal coefficient rows: form(a, b) = sum_i COEFF[i] * a[i] * b[5-i].
const FORM1_COEFFS: [i64; 6] = [1, 1, -1, -1, 1, 1];
const FORM23_COEFFS: [i64; 6] = [1, -1, 1, 1, -1, 1];

impl Form {
    /// (diagonal?, per-term coefficients): diagonal forms pair a[i] with
    /// b[i], antidiagonal ones with b[5-i]. Exposed so the sign-repair
    /// search can flip individual form terms.
    pub fn term_coefficients(self) -> (bool, [i64; 6]) {
        match self {
            Form::Euclid => (true, [1; 6]),
            Form::Form1 => (false, FORM1_COEFFS),
            Form::Form23 => (false, FORM23_COEFFS),
        }
    }
}

/// A vector in R^6. Slot `i` (0-based) holds the coefficient of the basis
/// vector u_{i+1}; the same slots carry the vector part of an `Oct`, whose
/// components are conventionally numbered 2..=7.
#[derive(Debug, Clone, PartialEq)]
pub struct Vec6<S>(pub [S; 6]);

impl<S: Scalar> Vec6<S> {
    pub fn zero() -> Self {
        Vec6(std::array::from_fn(|_| S::zero()))
    }

    /// Basis vector u_{i+1} for slot i in 0..6.
    pub fn basis(i: usize) -> Self {
        assert!(i < 6, "basis slot out of range: {i}");
        Vec6(std::array::from_fn(|j| {
            if j == i {
                S::one()
            } else {
                S::zero()
            }
        }))
    }

    pub fn from_fn(f: impl FnMut(usize) -> S) -> Self {
        Vec6(std::array::from_fn(f))
    }

    pub fn from_i64(c: [i64; 6]) -> Self {
        Vec6(c.map(S::from_i64))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, t: &S) -> Self {
        Vec6::from_fn(|i| t.clone() * self.0[i].clone())
    }

    /// The outer product of the selected variant. Antisymmetric and bilinear;
    /// each component is a signed sum of two 2x2 minors of (self, other).
    pub fn cross(&self, other: &Self, v: ProductVariant) -> Self {
        let m = |s: usize, t: usize| skew(&self.0, &other.0, s, t);
        let c = match v {
            ProductVariant::Spin4 => [
                -m(1, 3) - m(2, 4),
                m(0, 3) - m(2, 5),
                m(0, 4) + m(1, 5),
                -m(0, 1) - m(4, 5),
                -m(0, 2) + m(3, 5),
                -m(1, 2) - m(3, 4),
            ],
            ProductVariant::B1 => [
                m(1, 3) + m(2, 4),
                m(0, 3) - m(2, 5),
                m(0, 4) + m(1, 5),
                -m(0, 1) - m(4, 5),
                -m(0, 2) + m(3, 5),
                m(1, 2) + m(3, 4),
            ],
            ProductVariant::B2 => [
                m(2, 4) - m(1, 3),
                m(0, 3) + m(2, 5),
                m(0, 4) + m(1, 5),
                -m(0, 1) + m(4, 5),
                -m(0, 2) + m(3, 5),
                -m(1, 2) - m(3, 4),
            ],
            ProductVariant::B3 => [
                -m(1, 3) - m(2, 4),
                m(0, 3) - m(2, 5),
                m(0, 4) + m(1, 5),
                m(0, 1) - m(4, 5),
                m(0, 2) + m(3, 5),
                m(1, 2) - m(3, 4),
            ],
        };
        Vec6(c)
    }

    /// The conjugation paired with the variant. Linear; an involution for
    /// Spin4 and B1, while the B2/B3 conjugations square to -identity (a
    /// property the verification report calls out).
    pub fn conj(&self, v: ProductVariant) -> Self {
        let c = &self.0;
        let neg = |i: usize| -c[i].clone();
        let pos = |i: usize| c[i].clone();
        Vec6(match v {
            // (c6, -c5, c4, c3, -c2, c1) in 1-based component labels
            ProductVariant::Spin4 | ProductVariant::B1 => {
                [pos(5), neg(4), pos(3), pos(2), neg(1), pos(0)]
            }
            ProductVariant::B2 => [neg(5), pos(4), pos(3), neg(2), neg(1), pos(0)],
            ProductVariant::B3 => [pos(5), neg(4), pos(3), neg(2), pos(1), neg(0)],
        })
    }

    /// Bilinear form value.
    pub fn inner(&self, other: &Self, form: Form) -> S {
        let mut acc = S::zero();
        match form {
            Form::Euclid => {
                for i in 0..6 {
                    acc = acc + self.0[i].clone() * other.0[i].clone();
                }
            }
            Form::Form1 | Form::Form23 => {
                let coeffs = if form == Form::Form1 {
                    &FORM1_COEFFS
                } else {
                    &FORM23_COEFFS
                };
                for i in 0..6 {
                    let term = self.0[i].clone() * other.0[5 - i].clone();
                    acc = if coeffs[i] > 0 { acc + term } else { acc - term };
                }
            }
        }
        acc
    }

    pub fn parse(s: &str) -> Result<Self> {
        let v = parse_csv::<S>(s, 6..=6)?;
        Ok(Vec6(v.try_into().map_err(|_| Error::Parse("bad length".into()))?))
    }
}

/// 2x2 minor a[s]*b[t] - a[t]*b[s]; the building block of every product
/// component.
fn skew<S: Scalar>(a: &[S; 6], b: &[S; 6], s: usize, t: usize) -> S {
    a[s].clone() * b[t].clone() - a[t].clone() * b[s].clone()
}

impl<S: Scalar> fmt::Display for Vec6<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_csv(&self.0))
    }
}

impl<S: Scalar> Add for &Vec6<S> {
    type Output = Vec6<S>;
    fn add(self, rhs: Self) -> Vec6<S> {
        Vec6::from_fn(|i| self.0[i].clone() + rhs.0[i].clone())
    }
}

impl<S: Scalar> Sub for &Vec6<S> {
    type Output = Vec6<S>;
    fn sub(self, rhs: Self) -> Vec6<S> {
        Vec6::from_fn(|i| self.0[i].clone() - rhs.0[i].clone())
    }
}

impl<S: Scalar> Neg for &Vec6<S> {
    type Output = Vec6<S>;
    fn neg(self) -> Vec6<S> {
        Vec6::from_fn(|i| -self.0[i].clone())
    }
}

impl<S> Index<usize> for Vec6<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.0[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Exact;

    fn v(c: [i64; 6]) -> Vec6<Exact> {
        Vec6::from_i64(c)
    }

    #[test]
    fn conj_patterns() {
        let a = v([1, 2, 3, 4, 5, 6]);
        assert_eq!(a.conj(ProductVariant::Spin4), v([6, -5, 4, 3, -2, 1]));
        assert_eq!(a.conj(ProductVariant::B1), v([6, -5, 4, 3, -2, 1]));
        assert_eq!(a.conj(ProductVariant::B2), v([-6, 5, 4, -3, -2, 1]));
        assert_eq!(a.conj(ProductVariant::B3), v([6, -5, 4, -3, 2, -1]));
    }

    #[test]
    fn inner_examples() {
        let a = v([1, 2, 3, 4, 5, 6]);
        assert_eq!(a.inner(&a, Form::Euclid), Exact::from_i64(91));
        assert_eq!(a.inner(&a, Form::Form1), Exact::from_i64(8));
        assert_eq!(a.inner(&a, Form::Form23), Exact::from_i64(16));
    }

    #[test]
    fn cross_basis_examples() {
        let u = |i: usize| Vec6::<Exact>::basis(i - 1);
        // u1 x u2 = -u4 for the compact variant
        assert_eq!(u(1).cross(&u(2), ProductVariant::Spin4), -&u(4));
        // same pair under B1 flips the first component's sign source
        assert_eq!(u(2).cross(&u(4), ProductVariant::Spin4), -&u(1));
        assert_eq!(u(2).cross(&u(4), ProductVariant::B1), u(1));
        // diagonal: a x a = 0 for every variant
        for var in ProductVariant::ALL {
            let a = v([3, -1, 4, 1, -5, 9]);
            assert!(a.cross(&a, var).is_zero());
        }
    }

    #[test]
    fn parse_display_round_trip() {
        let a: Vec6<Exact> = Vec6::parse("1/2,0,-3,4,5/7,-6").unwrap();
        assert_eq!(Vec6::<Exact>::parse(&a.to_string()).unwrap(), a);
        assert!(Vec6::<Exact>::parse("1,2,3").is_err());
    }
}
