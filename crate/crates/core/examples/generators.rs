//! Generator rings of the elliptic, K3 and local families, the D-closure
//! relations, quasimodular transport, and genus-1 right-hand sides.

use quasimap::generators::{
    eisenstein_and_delta, elliptic_generators, genus1_rhs, k3_generators, local_generators, mirror_map,
    mirror_transport, ASYZ, QEF_RELATIONS, QKF_RELATIONS,
};
use quasimap::{Preset, UniSeries};

fn head(s: &UniSeries, k: usize) -> String {
    (0..=k.min(s.len() - 1)).map(|i| s.coeff(i).as_rational().unwrap().to_string()).collect::<Vec<_>>().join(", ")
}

fn main() -> quasimap::Result<()> {
    let n = 8;
    let e = elliptic_generators(n)?;
    let k3 = k3_generators(n)?;
    let loc = local_generators(n)?;
    println!("elliptic L: {}", head(e.get("L")?, 3));
    println!("K3 L:       {}", head(k3.get("L")?, 3));
    println!("local X:    {}", head(loc.get("X")?, 3));

    for (id, src) in QEF_RELATIONS {
        println!("{id}: zero = {}", e.eval(src)?.as_bi().is_zero());
    }
    for (id, src) in QKF_RELATIONS {
        println!("{id}: zero = {}", k3.eval(src)?.as_bi().is_zero());
    }

    let m = eisenstein_and_delta(n)?;
    let mirror = mirror_map(e.get("T")?)?;
    for (k, src) in ASYZ {
        let t = mirror_transport(&e.eval(src)?, &mirror)?;
        println!("{k}: {}  (matches: {})", head(&t, 4), t == m.named[k]);
    }
    println!("Delta: {}", head(&m.named["Delta"], 4));

    for p in [Preset::ESurface32, Preset::E3fold33, Preset::K3Fib42] {
        println!("F1 rhs {:<13} {}", p.name(), head(&genus1_rhs(p, 4)?, 4));
    }
    Ok(())
}
