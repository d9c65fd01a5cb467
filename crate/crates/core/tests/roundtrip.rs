//! Serialization round-trips over randomized values, plus the exhaustive
//! permutation round-trip at small degrees.

use num_rational::BigRational;
use proptest::prelude::*;

use birdtrack::algebra::{rational, AlgebraElement};
use birdtrack::perm::{all_permutations, Permutation};
use birdtrack::symbolic::{FactorKind, SetFactor, SymbolicOperator};

fn arb_permutation(degree: usize) -> BoxedStrategy<Permutation> {
    Just((0..degree as u8).collect::<Vec<u8>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).expect("shuffled bijection"))
        .boxed()
}

fn arb_element() -> impl Strategy<Value = AlgebraElement> {
    (1usize..=5).prop_flat_map(|degree| {
        let perm_count: usize = (1..=degree).product();
        proptest::collection::vec((0..perm_count, -40i64..=40, 1i64..=12), 0..=6).prop_map(
            move |entries| {
                let perms = all_permutations(degree);
                let mut out = AlgebraElement::zero(degree);
                for (index, num, den) in entries {
                    let term = AlgebraElement::from_perm(perms[index].clone())
                        .scale(&rational(num, den));
                    out = out.add(&term).expect("equal degrees");
                }
                out
            },
        )
    })
}

fn arb_factor(degree: usize) -> BoxedStrategy<SetFactor> {
    (arb_permutation(degree), 2usize..=degree, proptest::bool::ANY)
        .prop_map(move |(perm, take, anti)| {
            // a random subset split into one or two disjoint blocks
            let picked: Vec<usize> = (0..take).map(|i| perm.apply(i)).collect();
            let blocks = if take >= 4 {
                vec![picked[..2].to_vec(), picked[2..].to_vec()]
            } else {
                vec![picked]
            };
            let kind = if anti { FactorKind::Anti } else { FactorKind::Sym };
            SetFactor::new(kind, blocks).expect("disjoint blocks")
        })
        .boxed()
}

fn arb_operator() -> impl Strategy<Value = SymbolicOperator> {
    (2usize..=6).prop_flat_map(|degree| {
        (
            proptest::collection::vec(arb_factor(degree), 0..=4),
            -30i64..=30,
            1i64..=9,
        )
            .prop_map(move |(factors, num, den)| {
                SymbolicOperator::new(degree, rational(num, den), factors).expect("valid factors")
            })
    })
}

proptest! {
    #[test]
    fn permutation_text_round_trip(p in (1usize..=9).prop_flat_map(arb_permutation)) {
        let degree = p.degree();
        prop_assert_eq!(Permutation::parse(&p.to_string(), degree).unwrap(), p);
    }

    #[test]
    fn element_text_round_trip(x in arb_element()) {
        let back = AlgebraElement::parse(&x.to_string(), x.degree()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn element_json_round_trip(x in arb_element()) {
        let json = serde_json::to_string(&x).unwrap();
        let back: AlgebraElement = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn operator_text_round_trip(x in arb_operator()) {
        let back = SymbolicOperator::parse(&x.to_string(), x.degree()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn operator_json_round_trip(x in arb_operator()) {
        let json = serde_json::to_string(&x).unwrap();
        let back: SymbolicOperator = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn scaling_commutes_with_serialization(x in arb_element(), num in -9i64..=9, den in 1i64..=9) {
        let scaled = x.scale(&rational(num, den));
        let back = AlgebraElement::parse(&scaled.to_string(), x.degree()).unwrap();
        prop_assert_eq!(back, scaled);
    }

    #[test]
    fn dagger_round_trips_through_text(x in arb_element()) {
        let back = AlgebraElement::parse(&x.dagger().to_string(), x.degree()).unwrap();
        prop_assert_eq!(back.dagger(), x);
    }
}

#[test]
fn permutation_round_trip_is_exhaustive_at_small_degrees() {
    let mut checked = 0usize;
    for degree in 1..=9 {
        for p in all_permutations(degree) {
            assert_eq!(Permutation::parse(&p.to_string(), degree).unwrap(), p);
            checked += 1;
        }
    }
    let expected: usize = (1..=9).map(|n| (1..=n).product::<usize>()).sum();
    assert_eq!(checked, expected);
}

#[test]
fn scalar_formatting_is_exact() {
    let huge = BigRational::new(
        "123456789012345678901234567890".parse().unwrap(),
        "98765432109876543210987".parse().unwrap(),
    );
    let x = AlgebraElement::identity(3).scale(&huge);
    let json = serde_json::to_string(&x).unwrap();
    let back: AlgebraElement = serde_json::from_str(&json).unwrap();
    assert_eq!(back, x);
    let text_back = AlgebraElement::parse(&x.to_string(), 3).unwrap();
    assert_eq!(text_back, x);
}
