use quasimap::birkhoff::{
    e_series_local, jkm_series, local_closed_form_s, s_coefficient_tables, s_operators, table_layout,
};
use quasimap::ifunction::small_i_function;
use quasimap::{ClassRing, Preset};

#[test]
fn every_s_operator_is_unitriangular() {
    for p in Preset::ALL {
        let sset = s_operators(&p.spec(), (3, 2), 2).unwrap();
        assert_eq!(sset.ops.len(), sset.ring.dim(), "{p}");
        assert!(sset.unitriangularity_failures().is_empty(), "{p}");
    }
}

#[test]
fn unit_operator_is_normalized_i() {
    for p in Preset::ALL {
        let sset = s_operators(&p.spec(), (3, 1), 1).unwrap();
        let s1 = sset.get((0, 0)).unwrap();
        let i = small_i_function(&sset.ring, (3, 1), s1.window()).unwrap();
        let back = s1.mul_series(&sset.normalization);
        assert!(back.first_difference(&i).is_none(), "{p}");
        assert!(sset.normalization.constant_term().is_one());
    }
    // no normalization needed for the local model
    let sset = s_operators(&Preset::LocalP1P1.spec(), (3, 1), 1).unwrap();
    assert!(sset.normalization.sub(&quasimap::BiSeries::one(4, (3, 1))).is_zero());
}

#[test]
fn local_closed_form_route_agrees() {
    let g = Preset::LocalP1P1.spec();
    let trunc = (4, 2);
    let sset = s_operators(&g, trunc, 2).unwrap();
    let e = e_series_local(&jkm_series(&g, trunc).unwrap()).unwrap();
    let cf = local_closed_form_s(sset.get((0, 0)).unwrap(), &e).unwrap();
    assert_eq!(cf.len(), 4);
    for (m, s) in &cf {
        assert!(s.first_difference(sset.get(*m).unwrap()).is_none(), "{m:?}");
    }
}

#[test]
fn local_vanishing_series() {
    let t = jkm_series(&Preset::LocalP1P1.spec(), (5, 3)).unwrap();
    for k in ["JJ12", "JJ13", "KK12", "KK13", "MM11", "MM14"] {
        assert!(t.get(k).unwrap().is_zero(), "{k}");
    }
    let mm12 = t.get("MM12").unwrap();
    assert!(!mm12.coeff(0, 1).is_zero());
    assert!(t.get("nope").is_err());
}

#[test]
fn local_table_is_the_i_function_expansion() {
    let trunc = (4, 2);
    let ring = ClassRing::preset(Preset::LocalP1P1);
    let i = small_i_function(&ring, trunc, (-4, 2)).unwrap();
    let t = jkm_series(&ring.geometry, trunc).unwrap();
    let zm1 = i.z_coefficient(-1).unwrap();
    assert_eq!(t.get("I11").unwrap(), &zm1[ring.basis_index(1, 0).unwrap()]);
    assert_eq!(t.get("I12").unwrap(), &zm1[ring.basis_index(0, 1).unwrap()]);
}

#[test]
fn twisted_tables_follow_the_layout() {
    for p in [Preset::ESurface32, Preset::E3fold33, Preset::K3Fib42] {
        let tables = s_coefficient_tables(&s_operators(&p.spec(), (3, 1), 1).unwrap()).unwrap();
        for (prefix, _, slots) in table_layout(p) {
            for k in 1..=slots.len() {
                assert!(tables.get(&format!("{prefix}{k}")).is_ok(), "{p} {prefix}{k}");
            }
        }
        for (name, s) in &tables.named {
            assert!(s.constant_term().is_zero(), "{p} {name}");
        }
        let json: serde_json::Value = serde_json::from_str(&tables.to_json()).unwrap();
        assert_eq!(json.as_object().unwrap().len(), tables.named.len());
    }
}
