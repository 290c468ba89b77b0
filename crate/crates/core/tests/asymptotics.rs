use quasimap::asymptotics::{
    closed_form_l_local, g_ring_basis, laurent_powers, r_ring_basis, ring_fit, ring_fit_adaptive, solve_leading,
    solve_r, FIT_MARGIN,
};
use quasimap::cyclo::rat;
use quasimap::{Axis, BiSeries, Cyclo, Error, Preset, UniSeries};

#[test]
fn closed_form_solves_the_quadratic() {
    // L^2 − (−1)^i i 8 q/(1−4q) L − 1 = 0, checked directly on each closed form
    let g = Preset::LocalP1P1.spec();
    let n = 12;
    let q = UniSeries::variable(Axis::Q1, 4, n).into_bi();
    let den = q.scale_rational(&rat(-4, 1)).add_constant(&Cyclo::one(4));
    for (i, j) in g.fixed_points() {
        let l = closed_form_l_local(&g, (i, j), n).unwrap().into_bi();
        let sign = if j == 0 { 8 } else { -8 };
        let lin = q.scale(&Cyclo::root_of_unity(4, 1).scale_int(sign)).div(&den).unwrap();
        let v = l.pow(2).sub(&lin.mul(&l)).add_constant(&Cyclo::from_int(-1, 4));
        assert!(v.is_zero(), "({i},{j})");
    }
}

#[test]
fn twisted_data_is_integrable() {
    for p in [Preset::ESurface32, Preset::E3fold33, Preset::K3Fib42] {
        let d = solve_r(&p.spec(), (1, 0), 1, (4, 2)).unwrap();
        assert!(d.integrability_defect().is_zero(), "{p}");
        assert!(d.residuals().iter().flatten().all(BiSeries::is_zero), "{p}");
        assert!(!d.log.is_empty());
    }
}

#[test]
fn leading_slice_starts_at_the_weight() {
    for p in Preset::ALL {
        let g = p.spec();
        for pt in g.fixed_points() {
            let (a, _) = solve_leading(&g, pt, (3, 1)).unwrap();
            assert_eq!(a.big_l.constant_term(), &g.weights1[pt.0], "{p} {pt:?}");
        }
    }
}

#[test]
fn fit_recovers_known_combinations() {
    let g = Preset::LocalP1P1.spec();
    let n = 20;
    let l = closed_form_l_local(&g, (0, 1), n).unwrap();
    let basis = laurent_powers(&l, -2, 2).unwrap();
    let target = basis[0].as_bi().scale_rational(&rat(3, 1)).sub(&basis[3].as_bi().scale_rational(&rat(2, 1)));
    let f = ring_fit(&UniSeries::from_bi(Axis::Q1, target), &basis).unwrap();
    let want: Vec<Cyclo> = [3, 0, 0, -2, 0].iter().map(|&v| Cyclo::from_int(v, 4)).collect();
    assert_eq!(f.coeffs, want);
    assert_eq!(f.validated_order, f.fit_order + FIT_MARGIN);

    // adaptive search finds the smallest bound
    let (b, _) = ring_fit_adaptive(&basis[4], 6, |b| laurent_powers(&l, -(b as i64), b as i64)).unwrap();
    assert_eq!(b, 2);
}

#[test]
fn fit_failures() {
    let g = Preset::LocalP1P1.spec();
    let n = 20;
    let l = closed_form_l_local(&g, (0, 0), n).unwrap();
    let one = UniSeries::from_bi(Axis::Q1, BiSeries::one(4, (n, 0)));
    assert!(matches!(ring_fit(&l, &[one.clone()]), Err(Error::NoSolution | Error::ValidationFailed(_))));
    assert!(matches!(ring_fit(&l, &[one.clone(), one.clone()]), Err(Error::NoSolution)));
    assert!(matches!(ring_fit(&one, &[one.clone(), one.clone()]), Err(Error::Ambiguous(1))));
    let short = UniSeries::from_bi(Axis::Q1, BiSeries::one(4, (3, 0)));
    assert!(matches!(ring_fit(&short, &[short.clone()]), Err(Error::Precondition(_))));
}

#[test]
fn g_and_r_rings_contain_their_generators() {
    let g = Preset::LocalP1P1.spec();
    let n = 24;
    let l = closed_form_l_local(&g, (0, 1), n).unwrap();
    let beta = g.weights2[1].clone();
    let gb = g_ring_basis(&l, &beta, 2).unwrap();
    assert!(ring_fit(&gb[1], &gb).is_ok());
    let rb = r_ring_basis(&l, &beta, 1).unwrap();
    let r = UniSeries::from_bi(Axis::Q1, l.as_bi().nth_root(2, &Cyclo::one(4)).unwrap());
    assert!(ring_fit(&r, &rb).is_ok());
    assert!(ring_fit(&l, &rb).is_err());
}
