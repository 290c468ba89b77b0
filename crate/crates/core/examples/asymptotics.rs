//! Asymptotic data at the fixed points of local P1xP1: Newton-solved L
//! against its closed form, then ring-membership fits of q2-slices.

use quasimap::asymptotics::{closed_form_l_local, g_ring_basis, ring_fit_adaptive, solve_leading, solve_r};
use quasimap::{Preset, UniSeries};

fn main() -> quasimap::Result<()> {
    let g = Preset::LocalP1P1.spec();
    let n = 10;
    for pt in g.fixed_points() {
        let (a, _) = solve_leading(&g, pt, (n, 0))?;
        let cf = closed_form_l_local(&g, pt, n)?;
        println!("L{}{}: solved == closed form: {}", pt.0, pt.1, a.big_l.slice(0)? == cf);
    }

    let (n, point) = (24, (0, 0));
    let d = solve_r(&g, point, 1, (n, 1))?;
    println!("solver steps: {}", d.log.len());
    println!("D2 L - D1 UD == 0: {}", d.integrability_defect().is_zero());

    let l = closed_form_l_local(&g, point, n)?;
    let beta = g.weights2[point.1].clone();
    for (name, s) in [("L", &d.ansatz.big_l), ("UD", &d.ansatz.ud), ("R0", &d.ansatz.r[0])] {
        let slice: UniSeries = s.slice(1)?;
        match ring_fit_adaptive(&slice, 6, |b| g_ring_basis(&l, &beta, b)) {
            Ok((b, f)) => println!("{name} q2^1 slice: fits at bound {b}, validated through q1^{}", f.validated_order),
            Err(e) => println!("{name} q2^1 slice: {e}"),
        }
    }
    Ok(())
}
