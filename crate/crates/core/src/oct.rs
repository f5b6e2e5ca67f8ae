use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{format_csv, parse_csv, Scalar};
use crate::vec6::{ProductVariant, Vec6};

/// An element of R^8 with components c0..c7, viewed as
/// c0*e0 + c1*e1 + p where p lives in the six trailing slots (a `Vec6`).
/// e0 is the multiplicative identity of every star product.
#[derive(Debug, Clone, PartialEq)]
pub struct Oct<S>(pub [S; 8]);

impl<S: Scalar> Oct<S> {
    pub fn zero() -> Self {
        Oct(std::array::from_fn(|_| S::zero()))
    }

    pub fn basis(i: usize) -> Self {
        assert!(i < 8, "basis index out of range: {i}");
        Oct(std::array::from_fn(|j| {
            if j == i {
                S::one()
            } else {
                S::zero()
            }
        }))
    }

    /// The identity element e0.
    pub fn identity() -> Self {
        Oct::basis(0)
    }

    pub fn from_fn(f: impl FnMut(usize) -> S) -> Self {
        Oct(std::array::from_fn(f))
    }

    pub fn from_i64(c: [i64; 8]) -> Self {
        Oct(c.map(S::from_i64))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, t: &S) -> Self {
        Oct::from_fn(|i| t.clone() * self.0[i].clone())
    }

    /// Splits into (scalar part, split part, vector part); reassembly via
    /// `from_parts` is exact.
    pub fn decompose(&self) -> (S, S, Vec6<S>) {
        (
            self.0[0].clone(),
            self.0[1].clone(),
            Vec6::from_fn(|i| self.0[i + 2].clone()),
        )
    }

    pub fn from_parts(c0: S, c1: S, p: Vec6<S>) -> Self {
        let mut it = p.0.into_iter();
        let mut head = [Some(c0), Some(c1)].into_iter();
        Oct(std::array::from_fn(|i| {
            if i < 2 {
                head.next().unwrap().unwrap()
            } else {
                it.next().unwrap()
            }
        }))
    }

    /// The star product. The Spin4 variant evaluates the expanded
    /// component formulas (the canonical definition, see `star_expanded`);
    /// B1..B3 evaluate the structural template over their bracket,
    /// conjugation, and form.
    pub fn star(&self, other: &Self, v: ProductVariant) -> Self {
        match v {
            ProductVariant::Spin4 => self.star_expanded(other),
            _ => self.star_template(other, v),
        }
    }

    /// Structural form shared by all four products:
    ///   (a0*b0 + a1*b1 - <p,q>) e0
    /// + (a0*b1 + a1*b0 - <p,conj(q)>) e1
    /// + a0*q + b0*p + a1*conj(q) + b1*conj(p) + cross(p,q).
    /// Kept as an independent evaluation route: for Spin4 it must agree with
    /// `star_expanded`, and the verification suite checks that it does.
    pub fn star_template(&self, other: &Self, v: ProductVariant) -> Self {
        let form = v.form();
        let (a0, a1, p) = self.decompose();
        let (b0, b1, q) = other.decompose();
        let qc = q.conj(v);
        let pc = p.conj(v);
        let c0 = a0.clone() * b0.clone() + a1.clone() * b1.clone() - p.inner(&q, form);
        let c1 = a0.clone() * b1.clone() + a1.clone() * b0.clone() - p.inner(&qc, form);
        let cross = p.cross(&q, v);
        let vec = Vec6::from_fn(|i| {
            a0.clone() * q[i].clone()
                + b0.clone() * p[i].clone()
                + a1.clone() * qc[i].clone()
                + b1.clone() * pc[i].clone()
                + cross[i].clone()
        });
        Oct::from_parts(c0, c1, vec)
    }

    /// The expanded per-component formulas for the Spin4 product, written
    /// out literally. This, not the compact template, is the canonical
    /// definition: the two disagree in their source form on the sign of the
    /// a1*b1 term, and only the + sign yields an associative product.
    pub fn star_expanded(&self, other: &Self) -> Self {
        let a = &self.0;
        let b = &other.0;
        let t = |i: usize, j: usize| a[i].clone() * b[j].clone();
        Oct([
            t(0, 0) + t(1, 1) - t(2, 2) - t(3, 3) - t(4, 4) - t(5, 5) - t(6, 6) - t(7, 7),
            t(0, 1) + t(1, 0) - t(2, 7) + t(3, 6) - t(4, 5) - t(5, 4) + t(6, 3) - t(7, 2),
            t(0, 2) + t(2, 0) + t(1, 7) + t(7, 1) - t(3, 5) + t(5, 3) - t(4, 6) + t(6, 4),
            t(0, 3) + t(3, 0) - t(1, 6) - t(6, 1) + t(2, 5) - t(5, 2) - t(4, 7) + t(7, 4),
            t(0, 4) + t(4, 0) + t(1, 5) + t(5, 1) + t(2, 6) - t(6, 2) + t(3, 7) - t(7, 3),
            t(0, 5) + t(5, 0) + t(1, 4) + t(4, 1) - t(2, 3) + t(3, 2) - t(6, 7) + t(7, 6),
            t(0, 6) + t(6, 0) - t(1, 3) - t(3, 1) - t(2, 4) + t(4, 2) + t(5, 7) - t(7, 5),
            t(0, 7) + t(7, 0) + t(1, 2) + t(2, 1) - t(3, 4) + t(4, 3) - t(5, 6) + t(6, 5),
        ])
    }

    /// Full 8x8 multiplication table on basis octets; determines the product
    /// by bilinearity.
    pub fn basis_table(v: ProductVariant) -> Vec<Vec<Oct<S>>> {
        (0..8)
            .map(|i| {
                (0..8)
                    .map(|j| Oct::basis(i).star(&Oct::basis(j), v))
                    .collect()
            })
            .collect()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let v = parse_csv::<S>(s, 8..=8)?;
        Ok(Oct(v.try_into().map_err(|_| Error::Parse("bad length".into()))?))
    }
}

/// One failing triple from the associativity sweep, with both evaluated
/// sides so the failure can be replayed.
#[derive(Debug, Clone, PartialEq)]
pub struct AssocFailure<S> {
    pub triple: [usize; 3],
    pub lhs: Oct<S>,
    pub rhs: Oct<S>,
}

/// Exhaustive (e_i * e_j) * e_k vs e_i * (e_j * e_k) over all 512 basis
/// triples; conclusive by trilinearity. Returns the failure count and the
/// first counterexample in lexicographic order.
pub fn associativity_scan<S: Scalar>(v: ProductVariant) -> (usize, Option<AssocFailure<S>>) {
    let mut failures = 0;
    let mut first = None;
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                let (ei, ej, ek): (Oct<S>, Oct<S>, Oct<S>) =
                    (Oct::basis(i), Oct::basis(j), Oct::basis(k));
                let lhs = ei.star(&ej, v).star(&ek, v);
                let rhs = ei.star(&ej.star(&ek, v), v);
                if lhs != rhs {
                    failures += 1;
                    if first.is_none() {
                        first = Some(AssocFailure {
                            triple: [i, j, k],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
    }
    (failures, first)
}

impl<S: Scalar> fmt::Display for Oct<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_csv(&self.0))
    }
}

impl<S: Scalar> Add for &Oct<S> {
    type Output = Oct<S>;
    fn add(self, rhs: Self) -> Oct<S> {
        Oct::from_fn(|i| self.0[i].clone() + rhs.0[i].clone())
    }
}

impl<S: Scalar> Sub for &Oct<S> {
    type Output = Oct<S>;
    fn sub(self, rhs: Self) -> Oct<S> {
        Oct::from_fn(|i| self.0[i].clone() - rhs.0[i].clone())
    }
}

impl<S: Scalar> Neg for &Oct<S> {
    type Output = Oct<S>;
    fn neg(self) -> Oct<S> {
        Oct::from_fn(|i| -self.0[i].clone())
    }
}

impl<S> Index<usize> for Oct<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.0[i]
    }
}
