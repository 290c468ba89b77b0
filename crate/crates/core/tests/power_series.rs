use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use quasimap::cyclo::rat;
use quasimap::{Axis, BiSeries, Cyclo, Error, UniSeries};

const T: (usize, usize) = (4, 3);

fn series(order: u32, unit: bool) -> impl Strategy<Value = BiSeries> {
    prop::collection::vec(-5i64..=5, (T.0 + 1) * (T.1 + 1)).prop_map(move |v| {
        BiSeries::from_fn(order, T, |a, b| {
            let x = v[a * (T.1 + 1) + b];
            let x = if (a, b) == (0, 0) && unit {
                if x == 0 {
                    1
                } else {
                    x
                }
            } else {
                x
            };
            Cyclo::from_int(x, order)
        })
    })
}

fn nilpotent(order: u32) -> impl Strategy<Value = BiSeries> {
    series(order, false).prop_map(|s| s.sub(&BiSeries::constant(s.constant_term().clone(), s.trunc())))
}

fn binom(n: i64, k: i64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn central_binomials() {
    // (1 - 4q)^(-1/2) = Σ C(2n, n) q^n
    let n = 15;
    let base = UniSeries::variable(Axis::Q1, 1, n).as_bi().scale_rational(&rat(-4, 1)).add_constant(&Cyclo::one(1));
    let s = base.pow_rational(&rat(-1, 2), &Cyclo::one(1)).unwrap();
    for k in 0..=n {
        let want = BigRational::from_integer(binom(2 * k as i64, k as i64));
        assert_eq!(s.coeff(k, 0).as_rational().unwrap(), &want, "q^{k}");
    }
}

#[test]
fn catalan_by_reversion() {
    // q - q^2 inverts to Σ Cat(n-1) q^n
    let n = 12;
    let mut c = vec![Cyclo::zero(1); n + 1];
    c[1] = Cyclo::one(1);
    c[2] = Cyclo::from_int(-1, 1);
    let r = UniSeries::from_coeffs(Axis::Q1, c).reversion().unwrap();
    for k in 1..=n {
        let m = k as i64 - 1;
        let cat = binom(2 * m, m) / (m + 1);
        assert_eq!(r.coeff(k).as_rational().unwrap(), &BigRational::from_integer(cat), "q^{k}");
    }
}

#[test]
fn non_units_and_branches() {
    let s = BiSeries::monomial(Cyclo::one(1), (1, 0), T);
    assert_eq!(s.invert(), Err(Error::NonUnit));
    let four = BiSeries::constant(Cyclo::from_int(4, 1), T);
    assert!(four.nth_root(2, &Cyclo::from_int(-2, 1)).is_ok());
    assert!(matches!(four.nth_root(2, &Cyclo::from_int(3, 1)), Err(Error::BranchMismatch { .. })));
}

#[test]
fn slices_are_rows() {
    let s = BiSeries::from_fn(1, T, |a, b| Cyclo::from_int((10 * a + b) as i64, 1));
    let r = s.slice(2).unwrap();
    assert_eq!(r.len(), T.0);
    assert_eq!(r.coeff(3), &Cyclo::from_int(32, 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in series(3, false), b in series(3, false), c in series(3, false)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn unit_inverse(a in series(4, true)) {
        prop_assert_eq!(a.mul(&a.invert().unwrap()), BiSeries::one(4, T));
    }

    #[test]
    fn euler_is_a_derivation(a in series(1, false), b in series(1, false)) {
        for axis in [Axis::Q1, Axis::Q2] {
            let lhs = a.mul(&b).euler(axis);
            let rhs = a.euler(axis).mul(&b).add(&a.mul(&b.euler(axis)));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn exp_log(a in nilpotent(1), b in nilpotent(1)) {
        prop_assert_eq!(a.add(&b).exp().unwrap(), a.exp().unwrap().mul(&b.exp().unwrap()));
        prop_assert_eq!(a.exp().unwrap().log().unwrap(), a);
    }

    #[test]
    fn roots(a in nilpotent(3), n in 2u32..=4) {
        let x = a.add_constant(&Cyclo::one(3));
        let r = x.nth_root(n, &Cyclo::one(3)).unwrap();
        prop_assert_eq!(r.pow(n), x);
    }

    #[test]
    fn reversion_composes_to_identity(v in prop::collection::vec(-4i64..=4, 6), c1 in prop_oneof![Just(1i64), Just(-2), Just(3)]) {
        let n = 7;
        let mut c = vec![Cyclo::zero(1), Cyclo::from_int(c1, 1)];
        c.extend(v.iter().map(|&x| Cyclo::from_int(x, 1)));
        let f = UniSeries::from_coeffs(Axis::Q1, c);
        let g = f.reversion().unwrap();
        let id = f.substitute(g.as_bi()).unwrap();
        prop_assert_eq!(id, UniSeries::variable(Axis::Q1, 1, n).into_bi());
    }

    #[test]
    fn json_round_trip(a in series(12, false)) {
        prop_assert_eq!(BiSeries::from_json(&a.to_json()).unwrap(), a);
    }
}
