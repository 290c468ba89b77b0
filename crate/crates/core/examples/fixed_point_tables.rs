//! The table identities re-run with L = L_ij at every fixed point.
//! Reported, not asserted.

use quasimap::relations::{check_table, table_env, Status};
use quasimap::Preset;

fn main() -> quasimap::Result<()> {
    let n = 6;
    for p in [Preset::ESurface32, Preset::E3fold33, Preset::K3Fib42] {
        for pt in p.spec().fixed_points() {
            let res = check_table(p, &table_env(p, n, pt)?, "t")?;
            let bad: Vec<&str> =
                res.iter().filter(|r| r.status == Status::Fail).map(|r| r.id.trim_start_matches("t/")).collect();
            println!(
                "{:<13} ({},{}): {}/{} hold  failing: {bad:?}",
                p.name(),
                pt.0,
                pt.1,
                res.len() - bad.len(),
                res.len()
            );
        }
    }
    Ok(())
}
