//! The codimension-2 level set M = { x in R^6 : |x|^2 = 1, x . conj(x) = 0 }
//! carried by the Euclidean product variant: defining map, Jacobian with exact
//! rank, Newton projection onto M, tangent-space bases, and the almost complex
//! structure J_p(v) = p x v on tangent spaces.
//!
//! Conjugation here is always the Euclidean-variant involution, and the dot
//! product is the standard one, so M is a concrete S^2 x S^2: splitting x into
//! conjugation eigencomponents x = x+ + x- gives |x|^2 = |x+|^2 + |x-|^2 and
//! x . conj(x) = |x+|^2 - |x-|^2, hence membership is exactly |x+|^2 = |x-|^2
//! = 1/2. The exact sampler walks that parametrization with rational points.


use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::rng::SeededRng;
use crate::scalar::Scalar;
use crate::vec6::{Form, ProductVariant, Vec6};

/// Residual bound defining float-mode membership; exact scalars must vanish.
pub const RESIDUAL_TOL: f64 = 1e-12;

/// Tolerance for the float-mode tangency test (p.v = 0 and conj(p).v = 0).
/// Exact scalars are tested for literal zero instead.
pub const TANGENT_TOL: f64 = 1e-9;

/// Retry budget for the float-mode rejection sampler.
pub const SAMPLE_RETRIES: usize = 16;

const VARIANT: ProductVariant = ProductVariant::Spin4;

/// The two constraint values (|x|^2, x . conj(x)); membership in M means the
/// pair equals (1, 0).
pub fn defining_map<S: Scalar>(x: &Vec6<S>) -> (S, S) {
    let xbar = x.conj(VARIANT);
    (x.inner(x, Form::Euclid), x.inner(&xbar, Form::Euclid))
}

/// Differential of the defining map at x, as a 2x6 matrix. Row 0 is the
/// gradient of |x|^2, i.e. 2x; row 1 is the gradient of x . conj(x), which by
/// symmetry of the conjugation is 2 conj(x): (2x6, -2x5, 2x4, 2x3, -2x2, 2x1).
pub fn jacobian<S: Scalar>(x: &Vec6<S>) -> Mat<S, 2, 6> {
    let two = S::from_i64(2);
    let xbar = x.conj(VARIANT);
    Mat::from_fn(|r, c| {
        let base = if r == 0 { &x.0[c] } else { &xbar.0[c] };
        two.clone() * base.clone()
    })
}

fn residual_of<S: Scalar>(x: &Vec6<S>) -> (S, S) {
    let (f1, f2) = defining_map(x);
    (f1 - S::one(), f2)
}

fn residual_within<S: Scalar>(r: &(S, S), tol: f64) -> bool {
    if S::EXACT {
        r.0.is_zero() && r.1.is_zero()
    } else {
        r.0.to_f64().abs() <= tol && r.1.to_f64().abs() <= tol
    }
}

/// A point certified to lie on M. Exact scalars carry residual exactly (0, 0);
/// float scalars carry |residual| <= 1e-12 componentwise (or the looser bound
/// the caller passed to [`PointOnM::with_tolerance`]).
#[derive(Clone, Debug, PartialEq)]
pub struct PointOnM<S: Scalar> {
    x: Vec6<S>,
    residual: (S, S),
}

impl<S: Scalar> PointOnM<S> {
    /// Certify a vector as a point of M under the canonical residual bound.
    pub fn try_from_vec(x: Vec6<S>) -> Result<Self> {
        Self::with_tolerance(x, RESIDUAL_TOL)
    }

    /// Certify under an explicit float bound. Exact scalars ignore `tol` and
    /// require the residual to vanish literally.
    pub fn with_tolerance(x: Vec6<S>, tol: f64) -> Result<Self> {
        let residual = residual_of(&x);
        if residual_within(&residual, tol) {
            Ok(Self { x, residual })
        } else {
            Err(Error::OffManifold {
                detail: format!(
                    "residual (|x|^2 - 1, x.conj(x)) = ({}, {})",
                    residual.0, residual.1
                ),
            })
        }
    }

    pub fn x(&self) -> &Vec6<S> {
        &self.x
    }

    pub fn residual(&self) -> &(S, S) {
        &self.residual
    }
}

impl<S: Scalar> std::fmt::Display for PointOnM<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} residual={},{}",
            self.x, self.residual.0, self.residual.1
        )
    }
}

/// Newton projection of `x0` onto M, driving the defining map to (1, 0).
/// Each step solves the 2x2 Gram system of the Jacobian rows and applies the
/// minimum-norm correction. Returns the certified point and the number of
/// Newton steps taken (0 when `x0` already meets the bound).
///
/// Intended for float scalars; exact scalars are accepted but must land
/// exactly on M for the iteration to terminate.
pub fn project_to_manifold<S: Scalar>(
    x0: &Vec6<S>,
    tol: f64,
    max_iter: usize,
) -> Result<(PointOnM<S>, usize)> {
    let mut x = x0.clone();
    for iter in 0..=max_iter {
        let r = residual_of(&x);
        if residual_within(&r, tol) {
            return Ok((PointOnM::with_tolerance(x, tol)?, iter));
        }
        if iter == max_iter {
            break;
        }
        let j = jacobian(&x);
        // Gram matrix of the two constraint gradients.
        let jt = j.transpose();
        let g = j.mul(&jt);
        let det = g.det();
        let scale = g[(0, 0)].clone() * g[(1, 1)].clone();
        let singular = if S::EXACT {
            det.is_zero()
        } else {
            det.to_f64().abs() <= 1e-14 * scale.to_f64().abs().max(1.0)
        };
        if singular {
            return Err(Error::SingularJacobian);
        }
        // Solve G * lambda = -r, then correct by J^T * lambda.
        let b = [-r.0, -r.1];
        let lambda = [
            (g[(1, 1)].clone() * b[0].clone() - g[(0, 1)].clone() * b[1].clone())
                / det.clone(),
            (g[(0, 0)].clone() * b[1].clone() - g[(1, 0)].clone() * b[0].clone()) / det,
        ];
        x = Vec6::from_fn(|c| {
            x.0[c].clone()
                + jt[(c, 0)].clone() * lambda[0].clone()
                + jt[(c, 1)].clone() * lambda[1].clone()
        });
    }
    Err(Error::NoConvergence { max_iter })
}

/// Orthogonal basis of the tangent space T_p M = { v : p.v = 0, conj(p).v = 0 }.
/// Built by Gram-Schmidt of the standard basis against the orthonormal pair
/// {p, conj(p)} (orthonormal on M because |conj(p)| = |p| = 1 and
/// p . conj(p) = 0). Vectors are normalized when the scalar type can represent
/// the norm (floats always; rationals only for perfect-square norms).
pub fn tangent_basis<S: Scalar>(p: &PointOnM<S>) -> [Vec6<S>; 4] {
    let pbar = p.x.conj(VARIANT);
    let mut out: Vec<Vec6<S>> = Vec::with_capacity(4);
    for i in 0..6 {
        let mut v = Vec6::<S>::basis(i);
        // Remove the components along the orthonormal pair {p, conj(p)}.
        for anchor in [&p.x, &pbar] {
            let c = anchor.inner(&v, Form::Euclid);
            v = Vec6::from_fn(|k| v.0[k].clone() - c.clone() * anchor.0[k].clone());
        }
        // Orthogonalize against the tangent vectors already kept.
        for w in &out {
            let c = w.inner(&v, Form::Euclid) / w.inner(w, Form::Euclid);
            v = Vec6::from_fn(|k| v.0[k].clone() - c.clone() * w.0[k].clone());
        }
        let norm_sq = v.inner(&v, Form::Euclid);
        let negligible = if S::EXACT {
            norm_sq.is_zero()
        } else {
            norm_sq.to_f64() <= 1e-18
        };
        if !negligible {
            if let Some(n) = norm_sq.approx_sqrt() {
                v = v.scale(&(S::one() / n));
            }
            out.push(v);
            if out.len() == 4 {
                break;
            }
        }
    }
    out.try_into()
        .expect("a certified level-set point always has a rank-4 tangent complement")
}

/// Exact (or toleranced, for floats) test of the tangent-space membership
/// conditions p.v = 0 and conj(p).v = 0.
pub fn is_tangent<S: Scalar>(p: &PointOnM<S>, v: &Vec6<S>) -> bool {
    let d1 = p.x.inner(v, Form::Euclid);
    let d2 = p.x.conj(VARIANT).inner(v, Form::Euclid);
    if S::EXACT {
        d1.is_zero() && d2.is_zero()
    } else {
        d1.to_f64().abs() <= TANGENT_TOL && d2.to_f64().abs() <= TANGENT_TOL
    }
}

/// The almost complex structure J_p(v) = p x v (Euclidean-variant cross).
/// Requires v tangent at p; the result is again tangent at p, and applying J
/// twice negates: J_p(J_p(v)) = -v.
pub fn almost_complex_j<S: Scalar>(p: &PointOnM<S>, v: &Vec6<S>) -> Result<Vec6<S>> {
    if !is_tangent(p, v) {
        let d1 = p.x.inner(v, Form::Euclid);
        let d2 = p.x.conj(VARIANT).inner(v, Form::Euclid);
        return Err(Error::NotTangent {
            detail: format!("p.v = {d1}, conj(p).v = {d2}"),
        });
    }
    Ok(p.x.cross(v, VARIANT))
}

/// Rational point on the unit 2-sphere from two rational parameters, by
/// inverse stereographic projection: never leaves the scalar field.
fn unit_sphere3<S: Scalar>(u: S, v: S) -> [S; 3] {
    let one = S::one();
    let n = one.clone() + u.clone() * u.clone() + v.clone() * v.clone();
    let two = S::from_i64(2);
    [
        two.clone() * u / n.clone(),
        two * v / n.clone(),
        (n.clone() - S::from_i64(2)) / n,
    ]
}

/// Deterministic sample from M. Exact scalars use the S^2 x S^2 rational
/// parametrization (conjugation eigenspace split), so the residual is exactly
/// (0, 0) and no retries occur. Float scalars draw a random unit start and
/// Newton-project, retrying up to [`SAMPLE_RETRIES`] times. Returns the point
/// and the number of rejected starts.
pub fn sample_manifold<S: Scalar>(rng: &mut SeededRng) -> Result<(PointOnM<S>, usize)> {
    if S::EXACT {
        let half = S::ratio(1, 2);
        let plus = unit_sphere3::<S>(rng.rational(9, 9), rng.rational(9, 9));
        let minus = unit_sphere3::<S>(rng.rational(9, 9), rng.rational(9, 9));
        let [a, b, c] = plus.map(|t| t * half.clone());
        let [ap, bp, cp] = minus.map(|t| t * half.clone());
        // x = a(u1+u6) + b(u2-u5) + c(u3+u4) + ap(u1-u6) + bp(u2+u5) + cp(u3-u4)
        let x = Vec6([
            a.clone() + ap.clone(),
            b.clone() + bp.clone(),
            c.clone() + cp.clone(),
            c - cp,
            bp - b,
            a - ap,
        ]);
        return Ok((PointOnM::try_from_vec(x)?, 0));
    }
    let mut retries = 0;
    while retries <= SAMPLE_RETRIES {
        let raw: Vec6<S> = rng.vec6(1000, 1000);
        let norm_sq = raw.inner(&raw, Form::Euclid);
        if norm_sq.to_f64() <= 1e-6 {
            retries += 1;
            continue;
        }
        let norm = norm_sq
            .approx_sqrt()
            .expect("float sqrt of a positive scalar");
        let start = raw.scale(&(S::one() / norm));
        match project_to_manifold(&start, RESIDUAL_TOL, 25) {
            Ok((p, _)) => return Ok((p, retries)),
            Err(_) => retries += 1,
        }
    }
    Err(Error::SamplerExhausted { retries })
}
