//! Ring axioms, property-tested on random triples in every implemented
//! context kind, including Hadamard rings whose elements are matrices.

use hadamard_algebra::{RingContext, RingElement, SeedStream};
use proptest::prelude::*;

fn element_of(ctx: &RingContext) -> impl Strategy<Value = RingElement> {
    let ctx = ctx.clone();
    any::<u64>().prop_map(move |seed| ctx.sample(&mut SeedStream::new(seed)))
}

macro_rules! ring_axiom_tests {
    ($name:ident, $ctx:expr) => {
        mod $name {
            use super::*;

            fn ctx() -> RingContext {
                $ctx
            }

            proptest! {
                #[test]
                fn additive_associativity(
                    a in element_of(&ctx()), b in element_of(&ctx()), c in element_of(&ctx())
                ) {
                    prop_assert_eq!(
                        a.add(&b).unwrap().add(&c).unwrap(),
                        a.add(&b.add(&c).unwrap()).unwrap()
                    );
                }

                #[test]
                fn multiplicative_associativity(
                    a in element_of(&ctx()), b in element_of(&ctx()), c in element_of(&ctx())
                ) {
                    prop_assert_eq!(
                        a.mul(&b).unwrap().mul(&c).unwrap(),
                        a.mul(&b.mul(&c).unwrap()).unwrap()
                    );
                }

                #[test]
                fn commutativity(a in element_of(&ctx()), b in element_of(&ctx())) {
                    prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
                    prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
                }

                #[test]
                fn distributivity(
                    a in element_of(&ctx()), b in element_of(&ctx()), c in element_of(&ctx())
                ) {
                    prop_assert_eq!(
                        a.mul(&b.add(&c).unwrap()).unwrap(),
                        a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
                    );
                }

                #[test]
                fn identities(a in element_of(&ctx())) {
                    prop_assert_eq!(a.add(&ctx().zero()).unwrap(), a.clone());
                    prop_assert_eq!(a.mul(&ctx().one()).unwrap(), a);
                }

                #[test]
                fn characteristic_two(a in element_of(&ctx())) {
                    prop_assert!(a.add(&a).unwrap().is_zero());
                }

                #[test]
                fn frobenius_additivity(a in element_of(&ctx()), b in element_of(&ctx())) {
                    prop_assert_eq!(
                        a.add(&b).unwrap().square(),
                        a.square().add(&b.square()).unwrap()
                    );
                }

                #[test]
                fn inverse_when_it_exists(a in element_of(&ctx())) {
                    if let Ok(inv) = a.inverse() {
                        prop_assert!(a.mul(&inv).unwrap().is_one());
                    }
                }
            }
        }
    };
}

ring_axiom_tests!(gf2, RingContext::gf(1).unwrap());
ring_axiom_tests!(gf256, RingContext::binary_field(8, 0x11B).unwrap());
ring_axiom_tests!(quotient_u4, RingContext::quotient(0x10).unwrap());
ring_axiom_tests!(
    hadamard_over_gf2,
    RingContext::hadamard(RingContext::gf(1).unwrap(), 1).unwrap()
);
ring_axiom_tests!(
    hadamard_over_quotient,
    RingContext::hadamard(RingContext::quotient(0b100).unwrap(), 2).unwrap()
);
ring_axiom_tests!(
    nested_hadamard,
    RingContext::hadamard(
        RingContext::hadamard(RingContext::gf(2).unwrap(), 1).unwrap(),
        1
    )
    .unwrap()
);

proptest! {
    // every nonzero element of a binary field is invertible
    #[test]
    fn field_inverses_always_exist(seed in any::<u64>()) {
        let ctx = RingContext::binary_field(8, 0x11B).unwrap();
        let a = ctx.sample(&mut SeedStream::new(seed));
        if a.is_zero() {
            prop_assert!(a.inverse().is_err());
        } else {
            prop_assert!(a.mul(&a.inverse().unwrap()).unwrap().is_one());
        }
    }
}
