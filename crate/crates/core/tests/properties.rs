//! Property-based tests over random exact rationals, plus dual-route
//! cross-checks where an independent algorithm (nalgebra's symmetric
//! eigendecomposition, determinant multiplicativity) can confirm an exact
//! computation by a different route.

use nalgebra::Matrix6;
use num_traits::{One, Zero};
use proptest::prelude::*;

use spinforge::lie;
use spinforge::matrix::symmetric_inertia;
use spinforge::oct::Oct;
use spinforge::rep::{self, GroupTag, RepSource};
use spinforge::scalar::Scalar;
use spinforge::vec6::{Form, ProductVariant, Vec6};
use spinforge::{iso, Exact};

fn rational() -> impl Strategy<Value = Exact> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| Exact::new(n.into(), d.into()))
}

fn vec6() -> impl Strategy<Value = Vec6<Exact>> {
    proptest::array::uniform6(rational()).prop_map(Vec6)
}

fn oct() -> impl Strategy<Value = Oct<Exact>> {
    proptest::array::uniform8(rational()).prop_map(Oct)
}

fn variant() -> impl Strategy<Value = ProductVariant> {
    prop_oneof![
        Just(ProductVariant::Spin4),
        Just(ProductVariant::B1),
        Just(ProductVariant::B2),
        Just(ProductVariant::B3),
    ]
}

proptest! {
    #[test]
    fn cross_is_bilinear_and_antisymmetric(
        a in vec6(), b in vec6(), c in vec6(), t in rational(), v in variant()
    ) {
        prop_assert_eq!(a.cross(&b, v), -&b.cross(&a, v));
        prop_assert_eq!(
            (&a + &c).cross(&b, v),
            &a.cross(&b, v) + &c.cross(&b, v)
        );
        prop_assert_eq!(a.scale(&t).cross(&b, v), a.cross(&b, v).scale(&t));
        prop_assert!(a.cross(&a, v).is_zero());
    }

    #[test]
    fn inner_products_are_symmetric_bilinear(
        a in vec6(), b in vec6(), c in vec6(), form in prop_oneof![
            Just(Form::Euclid), Just(Form::Form1), Just(Form::Form23)
        ]
    ) {
        prop_assert_eq!(a.inner(&b, form), b.inner(&a, form));
        prop_assert_eq!(
            (&a + &c).inner(&b, form),
            a.inner(&b, form) + c.inner(&b, form)
        );
    }

    #[test]
    fn conjugation_is_isometric_for_euclid(a in vec6(), b in vec6()) {
        // sigma is symmetric for the euclidean pairing and the euclidean
        // conjugation is an involution.
        let v = ProductVariant::Spin4;
        prop_assert_eq!(a.inner(&b.conj(v), Form::Euclid), a.conj(v).inner(&b, Form::Euclid));
        prop_assert_eq!(a.conj(v).conj(v), a);
    }

    #[test]
    fn star_has_two_sided_identity(x in oct(), v in variant()) {
        let e0: Oct<Exact> = Oct::basis(0);
        prop_assert_eq!(e0.star(&x, v), x.clone());
        prop_assert_eq!(x.star(&e0, v), x);
    }

    #[test]
    fn euclid_star_is_associative_on_random_octets(x in oct(), y in oct(), z in oct()) {
        let v = ProductVariant::Spin4;
        prop_assert_eq!(x.star(&y, v).star(&z, v), x.star(&y.star(&z, v), v));
    }

    #[test]
    fn quaternion_pair_roundtrips(x in oct()) {
        let (q1, q2) = iso::to_quat_pair(&x);
        prop_assert_eq!(iso::from_quat_pair(&q1, &q2), x);
    }

    #[test]
    fn rep_is_linear(x in oct(), y in oct(), v in variant()) {
        let lhs = rep::rep_matrix(&(&x + &y), v, RepSource::Derived);
        let a = rep::rep_matrix(&x, v, RepSource::Derived);
        let b = rep::rep_matrix(&y, v, RepSource::Derived);
        prop_assert_eq!(lhs, spinforge::matrix::Mat::from_fn(|i, j| {
            a[(i, j)].clone() + b[(i, j)].clone()
        }));
    }
}

// The determinant-heavy properties run fewer cases: each case does exact
// 8x8 elimination on rationals.
proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn euclid_determinant_is_multiplicative(x in oct(), y in oct()) {
        let v = ProductVariant::Spin4;
        let src = RepSource::Derived;
        let lhs = rep::rep_matrix(&x.star(&y, v), v, src).det();
        let rhs = rep::rep_matrix(&x, v, src).det() * rep::rep_matrix(&y, v, src).det();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quadratic_form_matches_quaternion_norm_difference(x in oct()) {
        let (psi1, psi2) = iso::to_quat_pair(&x);
        let bridge = (psi2.norm_sq() - psi1.norm_sq()) * Exact::new(1.into(), 4.into());
        prop_assert_eq!(rep::quadratic_form(&x, GroupTag::GSpin4), bridge);
    }
}

proptest! {
    #[test]
    fn sign_assignments_form_an_involutive_group(a in 0u16..4096, b in 0u16..4096, c in 0u16..4096) {
        use lie::SignAssignment;
        let (x, y, z) = (SignAssignment(a), SignAssignment(b), SignAssignment(c));
        prop_assert_eq!(x.compose(y).compose(z), x.compose(y.compose(z)));
        prop_assert_eq!(x.compose(SignAssignment::IDENTITY), x);
        prop_assert_eq!(x.compose(x), SignAssignment::IDENTITY);
    }

    #[test]
    fn exact_manifold_samples_sit_on_the_level_set(seed in any::<u64>()) {
        let mut rng = spinforge::rng::SeededRng::new(seed);
        let (p, _) = spinforge::manifold::sample_manifold::<Exact>(&mut rng).unwrap();
        let (r0, r1) = spinforge::manifold::defining_map(p.x());
        prop_assert!(r0.is_one() && r1.is_zero());
    }
}

/// Independent signature oracle: convert the exact Killing matrix to f64 and
/// count eigenvalue signs with nalgebra's symmetric eigendecomposition; the
/// result must match the exact congruence-based inertia for all variants.
#[test]
fn killing_signature_agrees_with_eigenvalue_oracle() {
    for v in ProductVariant::ALL {
        let k = lie::killing_matrix::<Exact>(v);
        let exact = symmetric_inertia(&k);

        let kf = Matrix6::from_fn(|i, j| k[(i, j)].to_f64());
        let eig = nalgebra::SymmetricEigen::new(kf);
        let tol = 1e-9;
        let pos = eig.eigenvalues.iter().filter(|&&l| l > tol).count();
        let neg = eig.eigenvalues.iter().filter(|&&l| l < -tol).count();
        let zero = 6 - pos - neg;
        assert_eq!(exact, (pos, neg, zero), "{v}: exact vs eigenvalue signature");
    }
}

/// Same dual-route check after a random exact congruence, where the
/// eigenvalues are no longer +/-4 and the float route genuinely differs
/// from the exact one.
#[test]
fn congruent_killing_signature_agrees_with_eigenvalue_oracle() {
    let mut rng = spinforge::rng::SeededRng::new(0xD0A1);
    for v in ProductVariant::ALL {
        let k = lie::killing_matrix::<Exact>(v);
        let mut p: spinforge::matrix::Mat6<Exact> = spinforge::matrix::Mat6::identity();
        for _ in 0..12 {
            let (i, j) = (rng.uniform_i64(0, 5) as usize, rng.uniform_i64(0, 5) as usize);
            if i == j {
                continue;
            }
            let mut shear: spinforge::matrix::Mat6<Exact> = spinforge::matrix::Mat6::identity();
            shear[(i, j)] = rng.rational(4, 3);
            p = p.mul(&shear);
        }
        let kc = p.transpose().mul(&k).mul(&p);
        let exact = symmetric_inertia(&kc);

        let kf = Matrix6::from_fn(|i, j| kc[(i, j)].to_f64());
        let eig = nalgebra::SymmetricEigen::new(kf);
        let tol = 1e-7;
        let pos = eig.eigenvalues.iter().filter(|&&l| l > tol).count();
        let neg = eig.eigenvalues.iter().filter(|&&l| l < -tol).count();
        assert_eq!(exact, (pos, neg, 6 - pos - neg), "{v}: congruent signature");
    }
}
