//! Exact truncated series over cyclotomic fields: arithmetic, roots,
//! exp/log and reversion.

use quasimap::cyclo::rat;
use quasimap::{Axis, BiSeries, Cyclo, UniSeries};

fn show(name: &str, s: &UniSeries) {
    let c: Vec<String> = (0..s.len())
        .map(|k| s.coeff(k))
        .map(|c| c.as_rational().map(|r| r.to_string()).unwrap_or_else(|| c.to_string()))
        .collect();
    println!("{name:>10} = [{}]", c.join(", "));
}

fn main() -> quasimap::Result<()> {
    let n = 6;
    let q = UniSeries::variable(Axis::Q1, 1, n);

    // (1 - 27q)^(-1/3)
    let base = q.as_bi().scale_rational(&rat(-27, 1)).add_constant(&Cyclo::one(1));
    let l = base.pow_rational(&rat(-1, 3), &Cyclo::one(1))?;
    show("L", &UniSeries::from_bi(Axis::Q1, l.clone()));

    // L^3 (1 - 27q) = 1
    let check = l.pow(3).mul(&base);
    println!("L^3 (1-27q) == 1: {}", check == BiSeries::one(1, (n, 0)));

    // exp(log(L)) == L
    let round = l.log()?.exp()?;
    println!("exp(log L) == L: {}", round == l);

    // compositional inverse of q exp(q)
    let f = UniSeries::from_bi(Axis::Q1, q.as_bi().mul(&q.as_bi().exp()?));
    show("rev(qe^q)", &f.reversion()?);

    // i-adic coefficients: (1 + i q)^(1/2)
    let i = Cyclo::root_of_unity(4, 1);
    let s = UniSeries::variable(Axis::Q1, 4, n).as_bi().scale(&i).add_constant(&Cyclo::one(4));
    show("sqrt(1+iq)", &UniSeries::from_bi(Axis::Q1, s.nth_root(2, &Cyclo::one(4))?));

    // bivariate product and JSON wire format
    let x = BiSeries::monomial(Cyclo::one(1), (1, 0), (2, 2));
    let y = BiSeries::monomial(Cyclo::one(1), (0, 1), (2, 2));
    let p = x.add(&y).add_constant(&Cyclo::one(1)).invert()?;
    println!("1/(1+q1+q2) = {}", p.to_json());
    Ok(())
}
