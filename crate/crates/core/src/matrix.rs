use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::Num;

use crate::scalar::Scalar;

/// Minimal element bound for matrix entries: a commutative ring with exact
/// division where defined (rationals, floats, complex over either).
pub trait Ring: Clone + PartialEq + fmt::Debug + Num {}
impl<T: Clone + PartialEq + fmt::Debug + Num> Ring for T {}

/// Dense row-major matrix with const-generic shape.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<E, const R: usize, const C: usize>(pub [[E; C]; R]);

pub type Mat2<S> = Mat<S, 2, 2>;
pub type Mat6<S> = Mat<S, 6, 6>;
pub type Mat8<S> = Mat<S, 8, 8>;
pub type Mat2C<S> = Mat<Complex<S>, 2, 2>;
pub type Mat4C<S> = Mat<Complex<S>, 4, 4>;

impl<E: Ring, const R: usize, const C: usize> Mat<E, R, C> {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> E) -> Self {
        Mat(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn zero() -> Self {
        Mat::from_fn(|_, _| E::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(|e| *e == E::zero())
    }

    pub fn transpose(&self) -> Mat<E, C, R> {
        Mat::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn scale(&self, t: &E) -> Self {
        Mat::from_fn(|i, j| t.clone() * self.0[i][j].clone())
    }

    pub fn map<F: Ring>(&self, mut f: impl FnMut(&E) -> F) -> Mat<F, R, C> {
        Mat::from_fn(|i, j| f(&self.0[i][j]))
    }

    pub fn mul<const K: usize>(&self, rhs: &Mat<E, C, K>) -> Mat<E, R, K> {
        Mat::from_fn(|i, k| {
            (0..C).fold(E::zero(), |acc, j| {
                acc + self.0[i][j].clone() * rhs.0[j][k].clone()
            })
        })
    }

    /// Row-reduction rank. Pivots on the first nonzero entry, so the count
    /// is exact for rational entries.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<E>> = self.0.iter().map(|r| r.to_vec()).collect();
        let mut rank = 0;
        for col in 0..C {
            let Some(piv) = (rank..R).find(|&r| a[r][col] != E::zero()) else {
                continue;
            };
            a.swap(rank, piv);
            let prow = a[rank].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != rank && row[col] != E::zero() {
                    let factor = row[col].clone() / prow[col].clone();
                    for j in col..C {
                        row[j] = row[j].clone() - factor.clone() * prow[j].clone();
                    }
                }
            }
            rank += 1;
            if rank == R {
                break;
            }
        }
        rank
    }
}

impl<E: Ring, const N: usize> Mat<E, N, N> {
    pub fn identity() -> Self {
        Mat::from_fn(|i, j| if i == j { E::one() } else { E::zero() })
    }

    pub fn trace(&self) -> E {
        (0..N).fold(E::zero(), |acc, i| acc + self.0[i][i].clone())
    }

    /// Determinant by Gaussian elimination with first-nonzero pivoting;
    /// exact whenever the entries divide exactly (rationals and complex
    /// rationals do).
    pub fn det(&self) -> E {
        let mut a: Vec<Vec<E>> = self.0.iter().map(|r| r.to_vec()).collect();
        let mut det = E::one();
        for col in 0..N {
            let Some(piv) = (col..N).find(|&r| a[r][col] != E::zero()) else {
                return E::zero();
            };
            if piv != col {
                a.swap(col, piv);
                det = E::zero() - det;
            }
            det = det * a[col][col].clone();
            let prow = a[col].clone();
            for row in a.iter_mut().skip(col + 1) {
                if row[col] != E::zero() {
                    let factor = row[col].clone() / prow[col].clone();
                    for j in col..N {
                        row[j] = row[j].clone() - factor.clone() * prow[j].clone();
                    }
                }
            }
        }
        det
    }

    pub fn is_symmetric(&self) -> bool {
        (0..N).all(|i| (0..i).all(|j| self.0[i][j] == self.0[j][i]))
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        &self.mul(rhs) - &rhs.mul(self)
    }
}

/// Inertia (n_plus, n_minus, n_zero) of a symmetric matrix, computed by an
/// exact congruence diagonalization. Sylvester's law makes the triple
/// invariant under basis change, so it identifies the form up to
/// equivalence.
pub fn symmetric_inertia<S: Scalar, const N: usize>(m: &Mat<S, N, N>) -> (usize, usize, usize) {
    assert!(m.is_symmetric(), "inertia requires a symmetric matrix");
    let mut a: Vec<Vec<S>> = m.0.iter().map(|r| r.to_vec()).collect();
    let mut diag: Vec<S> = Vec::with_capacity(N);
    for k in 0..N {
        if a[k][k].is_zero() {
            if let Some(r) = (k + 1..N).find(|&r| !a[r][r].is_zero()) {
                // congruence by the permutation swapping rows/cols k and r
                a.swap(k, r);
                for row in a.iter_mut() {
                    row.swap(k, r);
                }
            } else if let Some(r) = (k + 1..N).find(|&r| !a[r][k].is_zero()) {
                // whole diagonal of the active block is zero but the block is
                // not: adding row/col r onto k puts 2*a[r][k] on the diagonal
                for j in 0..N {
                    let add = a[r][j].clone();
                    a[k][j] = a[k][j].clone() + add;
                }
                for row in a.iter_mut() {
                    let add = row[r].clone();
                    row[k] = row[k].clone() + add;
                }
                debug_assert!(!a[k][k].is_zero());
            } else {
                // row k of the active block vanishes entirely
                diag.push(S::zero());
                continue;
            }
        }
        let pivot = a[k][k].clone();
        for r in k + 1..N {
            if !a[r][k].is_zero() {
                let factor = a[r][k].clone() / pivot.clone();
                for j in 0..N {
                    let sub = factor.clone() * a[k][j].clone();
                    a[r][j] = a[r][j].clone() - sub;
                }
                for row in a.iter_mut() {
                    let sub = factor.clone() * row[k].clone();
                    row[r] = row[r].clone() - sub;
                }
            }
        }
        diag.push(pivot);
    }
    let pos = diag.iter().filter(|d| d.is_positive()).count();
    let neg = diag.iter().filter(|d| d.is_negative()).count();
    (pos, neg, N - pos - neg)
}

impl<E: Ring, const R: usize, const C: usize> Add for &Mat<E, R, C> {
    type Output = Mat<E, R, C>;
    fn add(self, rhs: Self) -> Mat<E, R, C> {
        Mat::from_fn(|i, j| self.0[i][j].clone() + rhs.0[i][j].clone())
    }
}

impl<E: Ring, const R: usize, const C: usize> Sub for &Mat<E, R, C> {
    type Output = Mat<E, R, C>;
    fn sub(self, rhs: Self) -> Mat<E, R, C> {
        Mat::from_fn(|i, j| self.0[i][j].clone() - rhs.0[i][j].clone())
    }
}

impl<E: Ring, const R: usize, const C: usize> Neg for &Mat<E, R, C> {
    type Output = Mat<E, R, C>;
    fn neg(self) -> Mat<E, R, C> {
        Mat::from_fn(|i, j| E::zero() - self.0[i][j].clone())
    }
}

impl<E: Ring, const R: usize, const C: usize, const K: usize> Mul<&Mat<E, C, K>>
    for &Mat<E, R, C>
{
    type Output = Mat<E, R, K>;
    fn mul(self, rhs: &Mat<E, C, K>) -> Mat<E, R, K> {
        Mat::mul(self, rhs)
    }
}

impl<E, const R: usize, const C: usize> Index<(usize, usize)> for Mat<E, R, C> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.0[i][j]
    }
}

impl<E, const R: usize, const C: usize> IndexMut<(usize, usize)> for Mat<E, R, C> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.0[i][j]
    }
}

impl<E: fmt::Display, const R: usize, const C: usize> fmt::Display for Mat<E, R, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// Renders a complex entry as `a`, `bi`, or `a+bi` / `a-bi` with rational
/// parts, e.g. `1/2-3i`. Used by the CLI when printing complex matrices.
pub fn format_complex<S: Scalar>(z: &Complex<S>) -> String {
    let (re, im) = (&z.re, &z.im);
    if im.is_zero() {
        return format!("{re}");
    }
    let imag = if im.abs() == S::one() {
        "i".to_string()
    } else {
        format!("{}i", im.abs())
    };
    if re.is_zero() {
        if im.is_negative() {
            format!("-{imag}")
        } else {
            imag
        }
    } else if im.is_negative() {
        format!("{re}-{imag}")
    } else {
        format!("{re}+{imag}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Exact;

    fn m3(rows: [[i64; 3]; 3]) -> Mat<Exact, 3, 3> {
        Mat::from_fn(|i, j| Exact::from_i64(rows[i][j]))
    }

    #[test]
    fn det_and_rank() {
        let a = m3([[2, 0, 1], [1, 1, 0], [0, 3, 1]]);
        assert_eq!(a.det(), Exact::from_i64(5));
        assert_eq!(a.rank(), 3);
        let singular = m3([[1, 2, 3], [2, 4, 6], [0, 1, 1]]);
        assert_eq!(singular.det(), Exact::from_i64(0));
        assert_eq!(singular.rank(), 2);
    }

    #[test]
    fn inertia_diagonal_and_hyperbolic() {
        let d = m3([[2, 0, 0], [0, -3, 0], [0, 0, 0]]);
        assert_eq!(symmetric_inertia(&d), (1, 1, 1));
        // hyperbolic plane x*y has signature (1,1); zero diagonal exercises
        // the row/col addition branch
        let h: Mat<Exact, 2, 2> = Mat::from_fn(|i, j| Exact::from_i64(if i != j { 1 } else { 0 }));
        assert_eq!(symmetric_inertia(&h), (1, 1, 0));
    }

    #[test]
    fn complex_det() {
        use num_complex::Complex;
        let i = Complex::new(Exact::from_i64(0), Exact::from_i64(1));
        let one = Complex::new(Exact::from_i64(1), Exact::from_i64(0));
        // [[1, i], [i, 1]] has det 1 - i^2 = 2
        let m: Mat2C<Exact> = Mat([[one.clone(), i.clone()], [i.clone(), one.clone()]]);
        assert_eq!(m.det(), Complex::new(Exact::from_i64(2), Exact::from_i64(0)));
    }

    #[test]
    fn mul_identity_transpose() {
        let a = m3([[1, 2, 3], [4, 5, 6], [7, 8, 10]]);
        let id = Mat::<Exact, 3, 3>::identity();
        assert_eq!(a.mul(&id), a);
        assert_eq!(a.transpose().transpose(), a);
        assert_eq!((&a - &a).is_zero(), true);
    }
}
