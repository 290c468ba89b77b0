use num_integer::Integer;
use proptest::prelude::*;
use quasimap::cyclo::{rat, totient};
use quasimap::Cyclo;

fn elem(order: u32) -> impl Strategy<Value = Cyclo> {
    prop::collection::vec((-9i64..=9, 1i64..=4), totient(order)).prop_map(move |v| {
        v.into_iter()
            .enumerate()
            .fold(Cyclo::zero(order), |acc, (k, (p, q))| acc + Cyclo::root_of_unity(order, k as i64).scale(&rat(p, q)))
    })
}

fn order() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![1u32, 3, 4, 6, 12])
}

fn field_elems() -> impl Strategy<Value = (Cyclo, Cyclo, Cyclo)> {
    order().prop_flat_map(|n| (elem(n), elem(n), elem(n)))
}

// independent Möbius function by trial division
fn mobius(mut n: u32) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

#[test]
fn primitive_root_sums_are_mobius() {
    for n in 1..=24u32 {
        let s = (0..n as i64)
            .filter(|k| k.gcd(&(n as i64)) == 1)
            .fold(Cyclo::zero(n), |acc, k| acc + Cyclo::root_of_unity(n, k));
        assert_eq!(s, Cyclo::from_int(mobius(n), n), "n={n}");
    }
}

#[test]
fn roots_of_unity_have_their_order() {
    for n in [3u32, 4, 5, 8, 12] {
        let z = Cyclo::root_of_unity(n, 1);
        assert!(z.pow(n).is_one());
        for k in 1..n {
            assert!(!z.pow(k).is_one(), "ζ_{n}^{k}");
        }
    }
}

#[test]
fn i_inside_twelfth_roots() {
    let i = Cyclo::root_of_unity(4, 1).embed(12).unwrap();
    assert_eq!(i, Cyclo::root_of_unity(12, 3));
    let w = Cyclo::root_of_unity(3, 1).embed(12).unwrap();
    assert_eq!(w, Cyclo::root_of_unity(12, 4));
    assert!(Cyclo::root_of_unity(12, 1).embed(4).is_err());
}

proptest! {
    #[test]
    fn ring_axioms((a, b, c) in field_elems()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses((a, _, _) in field_elems()) {
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn embedding_is_a_homomorphism((a, b, _) in prop_oneof![elem(3), Just(Cyclo::zero(3))].prop_flat_map(|_| (elem(3), elem(3), elem(3)))) {
        let e = |x: &Cyclo| x.embed(12).unwrap();
        prop_assert_eq!(e(&(&a * &b)), &e(&a) * &e(&b));
        prop_assert_eq!(e(&(&a + &b)), &e(&a) + &e(&b));
        // mixed orders meet in the lcm field
        prop_assert_eq!(&a * &Cyclo::root_of_unity(4, 1), &e(&a) * &Cyclo::root_of_unity(12, 3));
    }

    #[test]
    fn literal_round_trip((a, _, _) in field_elems()) {
        prop_assert_eq!(Cyclo::parse_literal(&a.to_literal(), a.order()).unwrap(), a.clone());
        prop_assert_eq!(Cyclo::parse_tagged(&a.to_tagged_literal()).unwrap(), a);
    }
}
