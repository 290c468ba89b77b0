use num_bigint::BigInt;
use num_rational::BigRational;
use quasimap::generators::{
    d_closure_fit, eisenstein_and_delta, elliptic_generators, genus1_expression, genus1_rhs, k3_generators,
    local_generators, mirror_map, mirror_transport, ASYZ,
};
use quasimap::{Axis, BiSeries, Cyclo, Error, Preset, UniSeries};

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn fact(n: i64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |a, k| a * k)
}

fn coeffs(s: &UniSeries) -> Vec<BigRational> {
    (0..=s.len()).map(|k| s.coeff(k).as_rational().unwrap().clone()).collect()
}

#[test]
fn leading_expansions() {
    let e = elliptic_generators(2).unwrap();
    assert_eq!(coeffs(e.get("L").unwrap()), [1, 9, 162].map(int));
    let x = local_generators(3).unwrap();
    assert_eq!(coeffs(x.get("X").unwrap()), [1, 4, 24, 160].map(int));
}

#[test]
fn hypergeometric_closed_forms() {
    let n = 12;
    // (1 − 27q)^{−1/3}: 9^m ∏(3k+1)/m!;  (1 − 256q)^{−1/4}: 64^m ∏(4k+1)/m!;  X: 2^m C(2m,m)
    let poch =
        |b: i64, s: i64, m: i64| (0..m).fold(BigInt::from(1), |a, k| a * (s * k + 1)) * BigInt::from(b).pow(m as u32);
    let ell = coeffs(elliptic_generators(n).unwrap().get("L").unwrap());
    let k3 = coeffs(k3_generators(n).unwrap().get("L").unwrap());
    let x = coeffs(local_generators(n).unwrap().get("X").unwrap());
    for m in 0..=n as i64 {
        assert_eq!(ell[m as usize], BigRational::new(poch(9, 3, m), fact(m)));
        assert_eq!(k3[m as usize], BigRational::new(poch(64, 4, m), fact(m)));
        assert_eq!(
            x[m as usize],
            BigRational::from_integer(fact(2 * m) / (fact(m) * fact(m)) * BigInt::from(2).pow(m as u32))
        );
    }
    // I1E = 3 Σ (3d−1)!/(d!)^3 q^d
    let i1 = coeffs(elliptic_generators(n).unwrap().get("I1E").unwrap());
    assert_eq!(i1[0], int(0));
    for d in 1..=n as i64 {
        assert_eq!(i1[d as usize], BigRational::new(fact(3 * d - 1) * 3, fact(d).pow(3)));
    }
}

#[test]
fn modular_forms_satisfy_ramanujan_and_discriminant_identities() {
    let n = 14;
    let m = eisenstein_and_delta(n).unwrap();
    let (e2, e4, e6, delta) =
        (m.named["E2"].as_bi(), m.named["E4"].as_bi(), m.named["E6"].as_bi(), m.named["Delta"].as_bi());
    let r = |p: i64, q: i64| quasimap::cyclo::rat(p, q);
    // 1728 Δ = E4^3 − E6^2
    assert_eq!(delta.scale_rational(&r(1728, 1)), e4.pow(3).sub(&e6.pow(2)));
    // D E2 = (E2^2 − E4)/12, D E4 = (E2 E4 − E6)/3, D E6 = (E2 E6 − E4^2)/2
    assert_eq!(e2.euler(Axis::Q1), e2.pow(2).sub(e4).scale_rational(&r(1, 12)));
    assert_eq!(e4.euler(Axis::Q1), e2.mul(e4).sub(e6).scale_rational(&r(1, 3)));
    assert_eq!(e6.euler(Axis::Q1), e2.mul(e6).sub(&e4.pow(2)).scale_rational(&r(1, 2)));
    // Δ = q ∏ (1 − q^k)^24
    let q = UniSeries::variable(Axis::Q1, 1, n).into_bi();
    let prod = (1..=n).fold(q.clone(), |acc, k| acc.mul(&q.pow(k as u32).neg().add_constant(&Cyclo::one(1)).pow(24)));
    assert_eq!(*delta, prod);
}

#[test]
fn quasimodular_transport() {
    let n = 10;
    let g = elliptic_generators(n).unwrap();
    let m = eisenstein_and_delta(n).unwrap();
    let mirror = mirror_map(g.get("T").unwrap()).unwrap();
    for (k, src) in ASYZ {
        let t = mirror_transport(&g.eval(src).unwrap(), &mirror).unwrap();
        assert_eq!(t, m.named[k], "{k}");
    }
}

#[test]
fn closure_fits_and_controls() {
    let g = elliptic_generators(24).unwrap();
    let f = d_closure_fit(&g, "L^3 X", (0, 2), 2).unwrap();
    assert!(f.validated_order >= f.fit_order + 5);
    // a series outside the ring does not fit
    let mut h = g.clone();
    let bumped = g.get("X").unwrap().as_bi().add(&BiSeries::monomial(Cyclo::one(1), (20, 0), (24, 0)));
    h.named.insert("Y".into(), UniSeries::from_bi(Axis::Q1, bumped));
    assert!(matches!(d_closure_fit(&h, "L^3 Y", (0, 2), 2), Err(Error::NoSolution | Error::ValidationFailed(_))));
}

#[test]
fn genus_one_sides_have_no_constant_term() {
    for p in [Preset::ESurface32, Preset::E3fold33, Preset::K3Fib42] {
        let s = genus1_rhs(p, 10).unwrap();
        assert!(s.coeff(0).is_zero(), "{p}");
        assert!(!s.coeff(1).is_zero(), "{p}");
    }
    assert!(genus1_expression(Preset::LocalP1P1).is_err());
    let x = elliptic_generators(6).unwrap();
    assert_eq!(genus1_rhs(Preset::ESurface32, 6).unwrap().as_bi(), &x.get("X").unwrap().as_bi().neg());
}
