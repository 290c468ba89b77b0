//! Birkhoff S-operators, their 1/z coefficient tables, and the table
//! identities of one twisted preset.

use quasimap::birkhoff::{s_coefficient_tables, s_operators};
use quasimap::relations::{check_table, table_env, Status};
use quasimap::Preset;

fn main() -> quasimap::Result<()> {
    let p = Preset::E3fold33;
    let g = p.spec();
    let sset = s_operators(&g, (4, 1), 1)?;
    println!("unitriangularity failures: {}", sset.unitriangularity_failures().len());

    let tables = s_coefficient_tables(&sset)?;
    let names: Vec<&String> = tables.named.keys().collect();
    println!("{} named entries: {names:?}", names.len());
    let a1 = tables.slice("A1", 0)?;
    println!("A1 q2^0 slice, first terms: {} {} {}", a1.coeff(0, 0), a1.coeff(1, 0), a1.coeff(2, 0));

    let env = table_env(p, 8, (0, 0))?;
    let res = check_table(p, &env, "table-33")?;
    let ok = res.iter().filter(|r| r.status == Status::Pass).count();
    println!("identities holding through q1^8: {ok}/{}", res.len());
    Ok(())
}
