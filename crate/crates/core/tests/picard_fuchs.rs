use quasimap::ifunction::small_i_function;
use quasimap::picard_fuchs::{derived_pf_operators, pf_operators, verify_annihilation};
use quasimap::{ClassRing, Cyclo, Preset};

#[test]
fn small_i_is_annihilated() {
    for p in Preset::ALL {
        let ring = ClassRing::preset(p);
        let i = small_i_function(&ring, (5, 3), (-6, 4)).unwrap();
        for a in verify_annihilation(&ring.geometry, &i).unwrap() {
            assert_eq!(a.first_nonzero, None, "{p} op{}", a.operator);
        }
    }
}

#[test]
fn closed_form_and_derived_operators_agree() {
    for p in Preset::ALL {
        let ring = ClassRing::preset(p);
        let i = small_i_function(&ring, (4, 2), (-6, 4)).unwrap();
        let (a, b) = pf_operators(&ring.geometry);
        let (c, d) = derived_pf_operators(&ring.geometry);
        assert!(a.apply(&i).unwrap().first_difference(&c.apply(&i).unwrap()).is_none(), "{p}");
        assert!(b.apply(&i).unwrap().first_difference(&d.apply(&i).unwrap()).is_none(), "{p}");
    }
}

#[test]
fn perturbed_series_is_not_annihilated() {
    for p in Preset::ALL {
        let ring = ClassRing::preset(p);
        let i = small_i_function(&ring, (3, 2), (-6, 4)).unwrap();
        let bumped = i.add(&i.shift_q((2, 1)).scale(&Cyclo::from_int(5, ring.order())));
        let res = verify_annihilation(&ring.geometry, &bumped).unwrap();
        assert!(res.iter().any(|a| a.first_nonzero.is_some()), "{p}");
    }
}
