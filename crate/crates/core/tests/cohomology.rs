use proptest::prelude::*;
use quasimap::{ClassRing, CohomClass, Cyclo, Preset};

#[test]
fn presets() {
    for p in Preset::ALL {
        let g = p.spec();
        assert!(g.is_calabi_yau(), "{p}");
        assert!(g.weights_distinct(), "{p}");
        assert_eq!(p.name().parse::<Preset>().unwrap(), p);
        assert_eq!(p.name().to_lowercase().parse::<Preset>().unwrap(), p);
        assert_eq!(g.fixed_points().len(), (g.n.0 + 1) * (g.n.1 + 1));
        assert!(g.check_fixed_point((g.n.0 + 1, 0)).is_err());
        for w in g.weights1.iter().chain(&g.weights2) {
            assert_eq!(w.pow(g.zeta_order), Cyclo::one(g.zeta_order), "{p}: weights are roots of unity");
        }
    }
    assert!("P2".parse::<Preset>().is_err());
}

#[test]
fn weight_products_vanish() {
    // ∏_i (H1 − λ1_i) = 0 and ∏_j (H2 − λ2_j) = 0
    for p in Preset::ALL {
        let ring = ClassRing::preset(p);
        let g = &ring.geometry;
        for axis in 0..2 {
            let ws = if axis == 0 { &g.weights1 } else { &g.weights2 };
            let h = CohomClass::monomial(&ring, (axis == 0) as usize, (axis == 1) as usize);
            let prod =
                ws.iter().fold(CohomClass::one(&ring), |acc, w| acc.mul(&h.sub(&CohomClass::scalar(&ring, w.clone()))));
            assert!(prod.is_zero(), "{p} axis {axis}");
        }
    }
}

#[test]
fn h_matrices_commute() {
    for p in Preset::ALL {
        let ring = ClassRing::preset(p);
        for k in 0..ring.dim() {
            let mut e = vec![Cyclo::zero(ring.order()); ring.dim()];
            e[k] = Cyclo::one(ring.order());
            assert_eq!(ring.mul_h(0, &ring.mul_h(1, &e)), ring.mul_h(1, &ring.mul_h(0, &e)), "{p}");
        }
    }
}

fn class(p: Preset) -> impl Strategy<Value = Vec<i64>> {
    let ring = ClassRing::preset(p);
    prop::collection::vec(-4i64..=4, ring.dim())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn restriction_is_a_ring_isomorphism(a in class(Preset::E3fold33), b in class(Preset::E3fold33)) {
        let ring = ClassRing::preset(Preset::E3fold33);
        let mk = |v: &[i64]| CohomClass::new(&ring, v.iter().map(|&x| Cyclo::from_int(x, ring.order())).collect());
        let (x, y) = (mk(&a), mk(&b));
        prop_assert_eq!(CohomClass::interpolate(&ring, &x.restrict()), x.clone());
        let prod: Vec<Cyclo> = x.restrict().iter().zip(y.restrict()).map(|(s, t)| s * &t).collect();
        prop_assert_eq!(x.mul(&y).restrict(), prod);
    }
}
