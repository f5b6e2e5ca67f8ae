use crate::error::{Error, Result};
use crate::matrix::{symmetric_inertia, Mat6};
use crate::scalar::Scalar;
use num_traits::Zero;
use crate::vec6::{ProductVariant, Vec6};

/// Structure constants of the bracket: [u_i, u_j] = sum_k c[i][j][k] u_k,
/// extracted from the cross product on basis pairs.
#[derive(Debug, Clone)]
pub struct StructureConstants<S> {
    pub c: Vec<Vec<Vec<S>>>,
}

pub fn structure_constants<S: Scalar>(v: ProductVariant) -> StructureConstants<S> {
    let basis: Vec<Vec6<S>> = (0..6).map(Vec6::basis).collect();
    let c = (0..6)
        .map(|i| {
            (0..6)
                .map(|j| basis[i].cross(&basis[j], v).0.to_vec())
                .collect()
        })
        .collect();
    StructureConstants { c }
}

impl<S: Scalar> StructureConstants<S> {
    pub fn nonzero_count(&self) -> usize {
        self.c
            .iter()
            .flatten()
            .flatten()
            .filter(|x| !x.is_zero())
            .count()
    }

    /// Every nonzero constant is +1 or -1.
    pub fn all_unit(&self) -> bool {
        self.c
            .iter()
            .flatten()
            .flatten()
            .all(|x| x.is_zero() || x.clone().abs() == S::one())
    }

    pub fn antisymmetric(&self) -> bool {
        (0..6).all(|i| {
            (0..6).all(|j| (0..6).all(|k| self.c[i][j][k] == -self.c[j][i][k].clone()))
        })
    }
}

/// [[a,b],c] + [[b,c],a] + [[c,a],b]; identically zero iff the bracket is a
/// Lie bracket (given antisymmetry, which all four crosses satisfy).
pub fn jacobi_defect<S: Scalar>(
    a: &Vec6<S>,
    b: &Vec6<S>,
    c: &Vec6<S>,
    v: ProductVariant,
) -> Vec6<S> {
    let t1 = a.cross(b, v).cross(c, v);
    let t2 = b.cross(c, v).cross(a, v);
    let t3 = c.cross(a, v).cross(b, v);
    Vec6::from_fn(|i| t1.0[i].clone() + t2.0[i].clone() + t3.0[i].clone())
}

/// Sweeps all 216 basis triples; trilinearity makes the sweep conclusive.
/// Returns the first failing triple, if any.
pub fn jacobi_scan<S: Scalar>(v: ProductVariant) -> Option<[usize; 3]> {
    let basis: Vec<Vec6<S>> = (0..6).map(Vec6::basis).collect();
    for i in 0..6 {
        for j in 0..6 {
            for k in 0..6 {
                if !jacobi_defect(&basis[i], &basis[j], &basis[k], v).is_zero() {
                    return Some([i, j, k]);
                }
            }
        }
    }
    None
}

/// K[i][j] = trace(ad u_i . ad u_j), with ad written on columns:
/// ad(u_i)[r][j] = component r of [u_i, u_j].
pub fn killing_matrix<S: Scalar>(v: ProductVariant) -> Mat6<S> {
    let sc = structure_constants::<S>(v);
    let ad = |i: usize| Mat6::<S>::from_fn(|r, j| sc.c[i][j][r].clone());
    let ads: Vec<Mat6<S>> = (0..6).map(ad).collect();
    Mat6::from_fn(|i, j| ads[i].mul(&ads[j]).trace())
}

/// Exact inertia (n_plus, n_minus, n_zero) of the Killing matrix.
pub fn killing_signature<S: Scalar>(v: ProductVariant) -> (usize, usize, usize) {
    symmetric_inertia(&killing_matrix::<S>(v))
}

/// Signature -> algebra label for the three 6-dimensional candidates.
pub fn signature_label(sig: (usize, usize, usize)) -> &'static str {
    match sig {
        (0, 6, 0) => "so(4)",
        (4, 2, 0) => "so(2,2)",
        (3, 3, 0) => "so(3,1)",
        _ => "unclassified",
    }
}

/// Everything the report needs about one bracket: Jacobi status, structure
/// constants summary, Killing data, and the signature-based label.
#[derive(Debug, Clone)]
pub struct LieClassification<S> {
    pub variant: ProductVariant,
    pub jacobi_pass: bool,
    pub first_jacobi_failure: Option<[usize; 3]>,
    pub structure_nonzero: usize,
    pub structure_all_unit: bool,
    pub killing: Mat6<S>,
    pub signature: (usize, usize, usize),
    pub semisimple: bool,
    pub label: &'static str,
    /// Attached when Jacobi failed: the Killing data is still computed but
    /// does not classify a Lie algebra.
    pub not_a_lie_algebra: bool,
}

pub fn classify<S: Scalar>(v: ProductVariant) -> LieClassification<S> {
    let fail = jacobi_scan::<S>(v);
    let sc = structure_constants::<S>(v);
    let killing = killing_matrix::<S>(v);
    let signature = symmetric_inertia(&killing);
    LieClassification {
        variant: v,
        jacobi_pass: fail.is_none(),
        first_jacobi_failure: fail,
        structure_nonzero: sc.nonzero_count(),
        structure_all_unit: sc.all_unit(),
        killing,
        signature,
        semisimple: signature.2 == 0,
        label: signature_label(signature),
        not_a_lie_algebra: fail.is_some(),
    }
}

/// ad-invariance of the Killing form: K([a,b],c) + K(b,[a,c]) = 0 on all
/// basis triples. Holds for any bracket satisfying Jacobi.
pub fn killing_ad_invariant<S: Scalar>(v: ProductVariant) -> bool {
    let k = killing_matrix::<S>(v);
    let basis: Vec<Vec6<S>> = (0..6).map(Vec6::basis).collect();
    let kform = |x: &Vec6<S>, y: &Vec6<S>| -> S {
        let mut acc = S::zero();
        for i in 0..6 {
            for j in 0..6 {
                acc = acc + x.0[i].clone() * k.0[i][j].clone() * y.0[j].clone();
            }
        }
        acc
    };
    for a in &basis {
        for b in &basis {
            for c in &basis {
                let lhs = kform(&a.cross(b, v), c);
                let rhs = kform(b, &a.cross(c, v));
                if lhs + rhs != S::zero() {
                    return false;
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Sign-repair search. The search space is the 2^12 assignments of signs to
// the 6 conjugation components and the 6 inner-form terms; each candidate is
// tested for a two-sided e0 identity and full associativity over all 512
// basis triples. Everything runs on i64 basis tables extracted from the
// generic implementation, so a full sweep is milliseconds, and the pass set
// is reported in ascending bitmask order.

/// One point of the search space. Bits 0..=5 flip conjugation components
/// 0..=5; bits 6..=11 flip inner-form terms 0..=5.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignAssignment(pub u16);

impl SignAssignment {
    pub const IDENTITY: SignAssignment = SignAssignment(0);
    pub const SPACE: u32 = 1 << 12;

    pub fn conj_flips(self) -> [bool; 6] {
        std::array::from_fn(|i| self.0 >> i & 1 == 1)
    }

    pub fn form_flips(self) -> [bool; 6] {
        std::array::from_fn(|i| self.0 >> (6 + i) & 1 == 1)
    }

    /// Composition of two assignments (sign multiplication = XOR).
    pub fn compose(self, other: SignAssignment) -> SignAssignment {
        SignAssignment(self.0 ^ other.0)
    }
}

/// i64 snapshot of a product variant's ingredients, extracted from the
/// generic implementation (values are all small integers).
struct TableAlgebra {
    cross: [[[i64; 6]; 6]; 6],
    /// conj(p)[i] = sigma[i].0 * p[sigma[i].1]
    sigma: [(i64, usize); 6],
    diagonal_form: bool,
    coeffs: [i64; 6],
}

fn as_i64<S: Scalar>(x: &S) -> i64 {
    let f = x.to_f64();
    debug_assert!(f.fract() == 0.0 && f.abs() < 1e15);
    f as i64
}

impl TableAlgebra {
    fn new(v: ProductVariant) -> Self {
        type E = crate::Exact;
        let basis: Vec<Vec6<E>> = (0..6).map(Vec6::basis).collect();
        let mut cross = [[[0i64; 6]; 6]; 6];
        for i in 0..6 {
            for j in 0..6 {
                let c = basis[i].cross(&basis[j], v);
                for k in 0..6 {
                    cross[i][j][k] = as_i64(&c.0[k]);
                }
            }
        }
        let mut sigma = [(0i64, 0usize); 6];
        for (src, b) in basis.iter().enumerate() {
            let c = b.conj(v);
            for (dst, val) in c.0.iter().enumerate() {
                if !val.is_zero() {
                    sigma[dst] = (as_i64(val), src);
                }
            }
        }
        let (diagonal_form, coeffs) = v.form().term_coefficients();
        TableAlgebra {
            cross,
            sigma,
            diagonal_form,
            coeffs,
        }
    }

    fn star(&self, x: &[i64; 8], y: &[i64; 8], s: &[i64; 6], t: &[i64; 6]) -> [i64; 8] {
        let p: [i64; 6] = std::array::from_fn(|i| x[i + 2]);
        let q: [i64; 6] = std::array::from_fn(|i| y[i + 2]);
        let form = |a: &[i64; 6], b: &[i64; 6]| -> i64 {
            (0..6)
                .map(|i| {
                    t[i] * self.coeffs[i] * a[i] * b[if self.diagonal_form { i } else { 5 - i }]
                })
                .sum()
        };
        let sig = |a: &[i64; 6]| -> [i64; 6] {
            std::array::from_fn(|i| s[i] * self.sigma[i].0 * a[self.sigma[i].1])
        };
        let (sq, sp) = (sig(&q), sig(&p));
        let mut cr = [0i64; 6];
        for i in 0..6 {
            if p[i] == 0 {
                continue;
            }
            for j in 0..6 {
                if q[j] == 0 {
                    continue;
                }
                for k in 0..6 {
                    cr[k] += p[i] * q[j] * self.cross[i][j][k];
                }
            }
        }
        let mut out = [0i64; 8];
        out[0] = x[0] * y[0] + x[1] * y[1] - form(&p, &q);
        out[1] = x[0] * y[1] + x[1] * y[0] - form(&p, &sq);
        for i in 0..6 {
            out[i + 2] = x[0] * q[i] + y[0] * p[i] + x[1] * sq[i] + y[1] * sp[i] + cr[i];
        }
        out
    }

    /// Basis multiplication table under the flipped signs.
    fn table(&self, assignment: SignAssignment) -> [[[i64; 8]; 8]; 8] {
        let s: [i64; 6] =
            std::array::from_fn(|i| if assignment.conj_flips()[i] { -1 } else { 1 });
        let t: [i64; 6] =
            std::array::from_fn(|i| if assignment.form_flips()[i] { -1 } else { 1 });
        let mut tab = [[[0i64; 8]; 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                let mut x = [0i64; 8];
                let mut y = [0i64; 8];
                x[i] = 1;
                y[j] = 1;
                tab[i][j] = self.star(&x, &y, &s, &t);
            }
        }
        tab
    }
}

fn basis8(i: usize) -> [i64; 8] {
    let mut x = [0i64; 8];
    x[i] = 1;
    x
}

/// Extends the basis table bilinearly: vec (coefficients over e0..e7) times
/// basis(k), or basis(i) times vec, depending on `left`.
fn table_mul(tab: &[[[i64; 8]; 8]; 8], vec: &[i64; 8], k: usize, left: bool) -> [i64; 8] {
    let mut out = [0i64; 8];
    for (m, &c) in vec.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let row = if left { &tab[k][m] } else { &tab[m][k] };
        for u in 0..8 {
            out[u] += c * row[u];
        }
    }
    out
}

fn table_has_identity(tab: &[[[i64; 8]; 8]; 8]) -> bool {
    (0..8).all(|j| tab[0][j] == basis8(j) && tab[j][0] == basis8(j))
}

/// The 512-basis-triple associativity sweep, extended bilinearly through
/// the table.
fn table_associative(tab: &[[[i64; 8]; 8]; 8]) -> bool {
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                let lhs = table_mul(tab, &tab[i][j], k, false);
                let rhs = table_mul(tab, &tab[j][k], i, true);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Exhaustive sweep of the 4096 sign assignments applied on top of `base`
/// (so a corrupted product can be searched by passing the corruption as
/// `base`). Returns, in ascending bitmask order, every assignment whose
/// flipped product has a two-sided e0 identity and passes all 512 basis
/// associativity triples.
pub fn repair_search_from(
    v: ProductVariant,
    base: SignAssignment,
    budget: u64,
) -> Result<Vec<SignAssignment>> {
    if budget < u64::from(SignAssignment::SPACE) {
        return Err(Error::BudgetExceeded {
            needed: u64::from(SignAssignment::SPACE),
            budget,
        });
    }
    let alg = TableAlgebra::new(v);
    let mut passes = Vec::new();
    for mask in 0..SignAssignment::SPACE as u16 {
        let candidate = SignAssignment(mask);
        let tab = alg.table(base.compose(candidate));
        if table_has_identity(&tab) && table_associative(&tab) {
            passes.push(candidate);
        }
    }
    Ok(passes)
}

pub fn repair_search(v: ProductVariant, budget: u64) -> Result<Vec<SignAssignment>> {
    repair_search_from(v, SignAssignment::IDENTITY, budget)
}

/// Flips the sign of one entry of the variant's basis table (the
/// coefficient of e_comp in e_row * e_col) and reports whether the 512
/// associativity triples detect the mutation. Zero entries cannot be
/// flipped; the function returns None for them.
pub fn mutation_detected(
    v: ProductVariant,
    row: usize,
    col: usize,
    comp: usize,
) -> Option<bool> {
    let alg = TableAlgebra::new(v);
    let mut tab = alg.table(SignAssignment::IDENTITY);
    if tab[row][col][comp] == 0 {
        return None;
    }
    tab[row][col][comp] = -tab[row][col][comp];
    Some(!table_associative(&tab))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Exact;

    #[test]
    fn structure_constants_counts_and_antisymmetry() {
        for v in ProductVariant::ALL {
            let sc = structure_constants::<Exact>(v);
            assert_eq!(sc.nonzero_count(), 24, "{v}");
            assert!(sc.all_unit(), "{v}");
            assert!(sc.antisymmetric(), "{v}");
        }
    }

    #[test]
    fn spin4_structure_example() {
        // u1 x u2 = -u4: c[0][1][3] = -1 in slot indexing
        let sc = structure_constants::<Exact>(ProductVariant::Spin4);
        assert_eq!(sc.c[0][1][3], Exact::from_i64(-1));
    }

    #[test]
    fn jacobi_passes_all_variants() {
        for v in ProductVariant::ALL {
            assert_eq!(jacobi_scan::<Exact>(v), None, "{v}");
        }
    }

    #[test]
    fn killing_matrices_and_signatures() {
        let expected: [(ProductVariant, [i64; 6], (usize, usize, usize), &str); 4] = [
            (ProductVariant::Spin4, [-4, -4, -4, -4, -4, -4], (0, 6, 0), "so(4)"),
            (ProductVariant::B1, [-4, 4, 4, 4, 4, -4], (4, 2, 0), "so(2,2)"),
            (ProductVariant::B2, [-4, -4, 4, -4, 4, 4], (3, 3, 0), "so(3,1)"),
            (ProductVariant::B3, [4, 4, 4, -4, -4, -4], (3, 3, 0), "so(3,1)"),
        ];
        for (v, diag, sig, label) in expected {
            let k = killing_matrix::<Exact>(v);
            for i in 0..6 {
                for j in 0..6 {
                    let want = if i == j { diag[i] } else { 0 };
                    assert_eq!(k.0[i][j], Exact::from_i64(want), "{v} K[{i}][{j}]");
                }
            }
            assert_eq!(killing_signature::<Exact>(v), sig, "{v}");
            assert_eq!(signature_label(sig), label, "{v}");
            let cls = classify::<Exact>(v);
            assert!(cls.jacobi_pass && cls.semisimple && !cls.not_a_lie_algebra);
            assert_eq!(cls.label, label);
        }
    }

    #[test]
    fn killing_is_ad_invariant() {
        for v in ProductVariant::ALL {
            assert!(killing_ad_invariant::<Exact>(v), "{v}");
        }
    }

    #[test]
    fn repair_search_pass_sets() {
        // The Euclidean product admits exactly two passing assignments: the
        // unmodified one, and negating all six conjugation components (mask
        // 0b111111), which is a genuine symmetry of the product axioms.
        let passes = repair_search(ProductVariant::Spin4, 4096).unwrap();
        assert_eq!(passes, vec![SignAssignment::IDENTITY, SignAssignment(63)]);

        // No combination of conjugation/form sign flips repairs the three
        // printed alternative products: their associativity defects are not
        // sign errors.
        for v in [ProductVariant::B1, ProductVariant::B2, ProductVariant::B3] {
            assert!(repair_search(v, 4096).unwrap().is_empty(), "{v}");
        }
    }

    #[test]
    fn repair_search_budget_enforced() {
        match repair_search(ProductVariant::Spin4, 4095) {
            Err(Error::BudgetExceeded { needed: 4096, budget: 4095 }) => {}
            other => panic!("expected BudgetExceeded, got {other:?}"),
        }
    }

    #[test]
    fn corrupted_clone_recovery() {
        // corrupt conjugation component 0, then search: the inverse flip
        // (the same bit) must be among the repairs, composed with either of
        // the two symmetries of the uncorrupted product
        let base = SignAssignment(0b000001);
        let passes = repair_search_from(ProductVariant::Spin4, base, 4096).unwrap();
        assert_eq!(passes, vec![SignAssignment(1), SignAssignment(62)]);
        assert!(passes.contains(&base));
    }

    #[test]
    fn single_sign_mutations_detected() {
        // a few fixed nonzero table entries across the variants
        assert_eq!(mutation_detected(ProductVariant::Spin4, 2, 3, 5), Some(true));
        assert_eq!(mutation_detected(ProductVariant::Spin4, 1, 1, 0), Some(true));
        assert_eq!(mutation_detected(ProductVariant::Spin4, 0, 4, 4), Some(true));
        assert_eq!(mutation_detected(ProductVariant::Spin4, 2, 2, 0), Some(true));
        // zero entry: not flippable
        assert_eq!(mutation_detected(ProductVariant::Spin4, 2, 3, 0), None);
    }
}
