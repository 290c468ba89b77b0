//! Twisted presets: q2-slices of the asymptotic data tested in C[L^{±1}]
//! and in the ring extended by the denominator W = a2 λ2 L^n1 + a1.

use quasimap::asymptotics::{extended_laurent_fit, laurent_powers, ring_fit_adaptive, solve_r, twisted_denominator};
use quasimap::Preset;

fn main() -> quasimap::Result<()> {
    let n = 20;
    for p in [Preset::E3fold33, Preset::ESurface32] {
        let g = p.spec();
        let d = solve_r(&g, (0, 0), 1, (n, 1))?;
        let l = d.ansatz.big_l.slice(0)?;
        let w = twisted_denominator(&g, (0, 0), &l)?;
        let h = d.ansatz.r[0].slice(0)?;
        for (name, s) in [("L", &d.ansatz.big_l), ("UD", &d.ansatz.ud), ("R0", &d.ansatz.r[0])] {
            for k in 0..2 {
                let t = s.slice(k)?;
                let laurent = ring_fit_adaptive(&t, 6, |b| laurent_powers(&l, -(b as i64), b as i64)).is_ok();
                let ext = match extended_laurent_fit(&t, &l, &w, &h, 3, 7) {
                    Ok(((p, e), b, _)) => format!("h^{p} W^{e}, |m| <= {b}"),
                    Err(e) => e.to_string(),
                };
                println!("{:<13} {name:<2} q2^{k}: Laurent {laurent:<5}  extended: {ext}", p.name());
            }
        }
    }
    Ok(())
}
