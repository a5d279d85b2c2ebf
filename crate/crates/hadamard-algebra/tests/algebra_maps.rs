//! Structural maps between the Hadamard ring, the group algebra, and the
//! multilinear quotient, plus the eigenvalue/determinant homomorphisms.

use hadamard_algebra::{GroupAlgebraElement, HadamardMatrix, RingContext, RingElement, SeedStream};
use proptest::prelude::*;

fn rings() -> Vec<RingContext> {
    vec![
        RingContext::gf(1).unwrap(),
        RingContext::binary_field(8, 0x11B).unwrap(),
        RingContext::quotient(0x10).unwrap(),
    ]
}

fn hadamard_pair(k: u32) -> impl Strategy<Value = (HadamardMatrix, HadamardMatrix)> {
    (any::<u64>(), 0..3usize).prop_map(move |(seed, ring_idx)| {
        let base = &rings()[ring_idx];
        let mut rng = SeedStream::new(seed);
        (
            HadamardMatrix::random(base, k, &mut rng),
            HadamardMatrix::random(base, k, &mut rng),
        )
    })
}

proptest! {
    #[test]
    fn square_is_eigenvalue_squared_identity((h, _) in hadamard_pair(2)) {
        let lam = h.eigenvalue();
        let expected = HadamardMatrix::scalar(h.base().clone(), h.k(), &lam.square()).unwrap();
        prop_assert_eq!(h.mul(&h).unwrap(), expected);
    }

    #[test]
    fn determinant_is_additive((a, b) in hadamard_pair(2)) {
        let lhs = a.add(&b).unwrap().det();
        let rhs = a.det().add(&b.det()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn eigenvalue_is_a_ring_homomorphism((a, b) in hadamard_pair(2)) {
        prop_assert_eq!(
            a.add(&b).unwrap().eigenvalue(),
            a.eigenvalue().add(&b.eigenvalue()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b).unwrap().eigenvalue(),
            a.eigenvalue().mul(&b.eigenvalue()).unwrap()
        );
    }

    #[test]
    fn convolution_matches_expanded_product((a, b) in hadamard_pair(2)) {
        let full = a.expand().mul(&b.expand()).unwrap();
        prop_assert_eq!(
            HadamardMatrix::from_full(&full).unwrap(),
            a.mul(&b).unwrap()
        );
    }

    #[test]
    fn expand_round_trips((h, _) in hadamard_pair(3)) {
        prop_assert_eq!(HadamardMatrix::from_full(&h.expand()).unwrap(), h);
    }

    #[test]
    fn group_algebra_transport_preserves_products((a, b) in hadamard_pair(2)) {
        let ga = GroupAlgebraElement::from_hadamard(&a);
        let gb = GroupAlgebraElement::from_hadamard(&b);
        prop_assert_eq!(
            GroupAlgebraElement::from_hadamard(&a.mul(&b).unwrap()),
            ga.mul(&gb).unwrap()
        );
        prop_assert_eq!(ga.augmentation(), a.eigenvalue());
    }

    #[test]
    fn three_way_round_trip((h, _) in hadamard_pair(3)) {
        let ga = GroupAlgebraElement::from_hadamard(&h);
        let poly = ga.to_multilinear();
        let back = GroupAlgebraElement::from_multilinear(&poly).to_hadamard();
        prop_assert_eq!(back, h);
    }
}

// The derived closed form det(H) = eigenvalue^(2^k), confirmed against
// the division-free determinant before anyone relies on it.
#[test]
fn determinant_closed_form_matches_division_free_route() {
    for base in rings() {
        let mut rng = SeedStream::new(77);
        for k in 0..=3u32 {
            for _ in 0..10 {
                let h = HadamardMatrix::random(&base, k, &mut rng);
                let closed = h.eigenvalue().pow(1 << k);
                assert_eq!(h.det(), closed, "ring {base} k={k}");
            }
        }
    }
}

// Multiplication agrees with full matrix multiplication up to k = 4.
#[test]
fn convolution_matches_expansion_up_to_level_four() {
    let base = RingContext::binary_field(8, 0x11B).unwrap();
    let mut rng = SeedStream::new(78);
    for k in 0..=4u32 {
        let a = HadamardMatrix::random(&base, k, &mut rng);
        let b = HadamardMatrix::random(&base, k, &mut rng);
        let full = a.expand().mul(&b.expand()).unwrap();
        assert_eq!(
            HadamardMatrix::from_full(&full).unwrap(),
            a.mul(&b).unwrap()
        );
    }
}

// Augmentation-ideal membership is exactly "eigenvalue zero" under the
// transport, and the ideal is spanned by the involutions g + e.
#[test]
fn augmentation_ideal_spanned_by_involutions() {
    let base = RingContext::gf(2).unwrap();
    let k = 3;
    let e = GroupAlgebraElement::identity(base.clone(), k);
    let mut rng = SeedStream::new(79);
    for _ in 0..20 {
        let a = GroupAlgebraElement::random_ideal(&base, k, &mut rng);
        // rebuild from the span: sum of coeff_g * (g + e) over g != e
        let mut rebuilt = GroupAlgebraElement::zero(base.clone(), k);
        for (g, c) in a.coeffs().iter().enumerate().skip(1) {
            let gen = GroupAlgebraElement::group_element(base.clone(), k, g as u64)
                .unwrap()
                .add(&e)
                .unwrap();
            let scaled: Vec<RingElement> =
                gen.coeffs().iter().map(|gc| gc.mul(c).unwrap()).collect();
            rebuilt = rebuilt
                .add(&GroupAlgebraElement::new(base.clone(), k, scaled).unwrap())
                .unwrap();
        }
        assert_eq!(rebuilt, a);
    }
}
