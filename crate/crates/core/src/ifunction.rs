//! Small I-functions and their `1/z` coefficient tables.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::cohomology::ClassRing;
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::geometry::{GeometrySpec, Preset};
use crate::series::BiSeries;
use crate::zseries::ZSeries;

/// One linear factor `c + k·z` of a summand, with `c` a linear form in `H1, H2`.
#[derive(Clone, Copy, Debug)]
struct Factor {
    /// Coefficients of `H1`, `H2`.
    h: (i64, i64),
    /// Index of the weight subtracted (`H_axis − λ`), if any.
    shift: Option<(usize, usize)>,
    k: i64,
}

/// Numerator and denominator factors of the degree-`d` summand.
fn summand_factors(g: &GeometrySpec, d: (usize, usize)) -> (Vec<Factor>, Vec<Factor>) {
    let mut num = Vec::new();
    for &(a1, a2) in &g.a_twists {
        let n = a1 * d.0 as i64 + a2 * d.1 as i64;
        for k in 1..=n {
            num.push(Factor { h: (a1, a2), shift: None, k });
        }
    }
    for &(b1, b2) in &g.b_twists {
        let n = -(b1 * d.0 as i64 + b2 * d.1 as i64);
        for k in 0..n {
            num.push(Factor { h: (b1, b2), shift: None, k: -k });
        }
    }
    let mut den = Vec::new();
    for (axis, &dk) in [d.0, d.1].iter().enumerate() {
        let nw = if axis == 0 { g.n.0 + 1 } else { g.n.1 + 1 };
        for i in 0..nw {
            for k in 1..=dk as i64 {
                let h = if axis == 0 { (1, 0) } else { (0, 1) };
                den.push(Factor { h, shift: Some((axis, i)), k });
            }
        }
    }
    (num, den)
}

/// Net `z`-power of the summand's leading term.
fn leading_power(num: &[Factor], den: &[Factor]) -> i32 {
    num.iter().filter(|f| f.k != 0).count() as i32 - den.len() as i32
}

/// Scalar value of the constant part `c` of a factor at fixed point `p`.
fn factor_value(g: &GeometrySpec, f: &Factor, p: (usize, usize)) -> Cyclo {
    let mut v = g.weights1[p.0].scale_int(f.h.0) + g.weights2[p.1].scale_int(f.h.1);
    if let Some((axis, i)) = f.shift {
        v = v - g.weight(axis, i).clone();
    }
    v
}

fn rat_inv(k: i64) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(k))
}

/// Laurent coefficients of the degree-`d` summand restricted to `p`:
/// returns `(P, s)` where the summand is `z^P · Σ_t s[t] z^{-t}`.
fn summand_at_point(g: &GeometrySpec, d: (usize, usize), p: (usize, usize), depth: usize) -> (i32, Vec<Cyclo>) {
    let order = g.zeta_order;
    let (num, den) = summand_factors(g, d);
    let pw = leading_power(&num, &den);
    let mut s = vec![Cyclo::zero(order); depth + 1];
    s[0] = Cyclo::one(order);
    let mut scalar = BigRational::one();
    for f in &num {
        let c = factor_value(g, f, p);
        if f.k == 0 {
            for x in s.iter_mut() {
                *x = &*x * &c;
            }
            continue;
        }
        // c + k z = k z (1 + (c/k) u)
        scalar *= BigRational::from_integer(BigInt::from(f.k));
        let t = c.scale(&rat_inv(f.k));
        for n in (1..=depth).rev() {
            let add = &s[n - 1] * &t;
            s[n] += &add;
        }
    }
    for f in &den {
        let c = factor_value(g, f, p);
        scalar /= BigRational::from_integer(BigInt::from(f.k));
        let t = c.scale(&rat_inv(f.k));
        for n in 1..=depth {
            let sub = &s[n - 1] * &t;
            s[n] -= &sub;
        }
    }
    for x in s.iter_mut() {
        *x = x.scale(&scalar);
    }
    (pw, s)
}

/// The small I-function `Σ q^d · summand_d` with coefficients in `z^{lo..=0}`.
pub fn small_i_function(ring: &Arc<ClassRing>, trunc: (usize, usize), window: (i32, i32)) -> Result<ZSeries> {
    let g = &ring.geometry;
    let (lo, hi) = window;
    if lo > -1 || hi < 0 {
        return Err(Error::InsufficientDepth { needed: -1, lo });
    }
    let mut out = ZSeries::zero(ring, trunc, window);
    let mut degs = Vec::new();
    for a in 0..=trunc.0 {
        for b in 0..=trunc.1 {
            degs.push((a, b));
        }
    }
    let pts = g.fixed_points();
    let blocks: Vec<((usize, usize), Vec<(i32, Vec<Cyclo>)>)> = degs
        .par_iter()
        .map(|&d| {
            let per_point: Vec<(i32, Vec<Cyclo>)> =
                pts.iter().map(|&p| summand_at_point(g, d, p, (-lo) as usize)).collect();
            let pw = per_point[0].0;
            let mut by_m = Vec::new();
            for m in lo..=0 {
                let t = pw - m;
                if t < 0 || t as usize > (-lo) as usize {
                    continue;
                }
                let vals: Vec<Cyclo> = per_point.iter().map(|(_, s)| s[t as usize].clone()).collect();
                by_m.push((m, ring.interpolate(&vals)));
            }
            (d, by_m)
        })
        .collect();
    for (d, by_m) in blocks {
        for (m, coords) in by_m {
            out.class_at_mut(d, m).clone_from_slice(&coords);
        }
    }
    out.set_meta(lo, 0);
    Ok(out)
}

/// A polynomial in `H1, H2` with field coefficients, not reduced by any relation.
pub type HPoly = BTreeMap<(usize, usize), Cyclo>;

fn hpoly_mul_linear(p: &HPoly, h: (i64, i64), c: &Cyclo) -> HPoly {
    let mut out = HPoly::new();
    let mut add = |k: (usize, usize), v: Cyclo| {
        if v.is_zero() {
            return;
        }
        let e = out.entry(k).or_insert_with(|| Cyclo::zero(v.order()));
        *e += &v;
    };
    for (&(a, b), v) in p {
        if h.0 != 0 {
            add((a + 1, b), v.scale_int(h.0));
        }
        if h.1 != 0 {
            add((a, b + 1), v.scale_int(h.1));
        }
        if !c.is_zero() {
            add((a, b), v * c);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn hpoly_add(p: &mut HPoly, q: &HPoly, sign: i64) {
    for (k, v) in q {
        let e = p.entry(*k).or_insert_with(|| Cyclo::zero(v.order()));
        *e += &v.scale_int(sign);
    }
    p.retain(|_, v| !v.is_zero());
}

/// Unreduced expansion of the degree-`d` summand: `z^P · Σ_t u^t · poly_t(H1, H2)`.
fn summand_unreduced(g: &GeometrySpec, d: (usize, usize), depth: usize) -> (i32, Vec<HPoly>) {
    let order = g.zeta_order;
    let (num, den) = summand_factors(g, d);
    let pw = leading_power(&num, &den);
    let mut s: Vec<HPoly> = vec![HPoly::new(); depth + 1];
    s[0].insert((0, 0), Cyclo::one(order));
    let mut scalar = BigRational::one();
    let zero = Cyclo::zero(order);
    let shift_const = |f: &Factor| match f.shift {
        Some((axis, i)) => -g.weight(axis, i).clone(),
        None => zero.clone(),
    };
    for f in &num {
        let c = shift_const(f);
        if f.k == 0 {
            for x in s.iter_mut() {
                *x = hpoly_mul_linear(x, f.h, &c);
            }
            continue;
        }
        scalar *= BigRational::from_integer(BigInt::from(f.k));
        let inv = rat_inv(f.k);
        for n in (1..=depth).rev() {
            let t = hpoly_mul_linear(&s[n - 1], f.h, &c);
            let t: HPoly = t.into_iter().map(|(k, v)| (k, v.scale(&inv))).collect();
            hpoly_add(&mut s[n], &t, 1);
        }
    }
    for f in &den {
        let c = shift_const(f);
        scalar /= BigRational::from_integer(BigInt::from(f.k));
        let inv = rat_inv(f.k);
        for n in 1..=depth {
            let t = hpoly_mul_linear(&s[n - 1], f.h, &c);
            let t: HPoly = t.into_iter().map(|(k, v)| (k, v.scale(&inv))).collect();
            hpoly_add(&mut s[n], &t, -1);
        }
    }
    for x in s.iter_mut() {
        for v in x.values_mut() {
            *v = v.scale(&scalar);
        }
    }
    (pw, s)
}

/// Key of an unreduced coefficient: the `1/z` power and the `H1^a H2^b` exponent.
pub type TableKey = (usize, (usize, usize));

/// Coefficients of `z^{-j} H1^a H2^b` in the unreduced expansion, `1 ≤ j ≤ depth`.
pub fn unreduced_coefficients(g: &GeometrySpec, trunc: (usize, usize), depth: usize) -> BTreeMap<TableKey, BiSeries> {
    let order = g.zeta_order;
    let mut degs = Vec::new();
    for a in 0..=trunc.0 {
        for b in 0..=trunc.1 {
            degs.push((a, b));
        }
    }
    let rows: Vec<((usize, usize), i32, Vec<HPoly>)> = degs
        .par_iter()
        .map(|&d| {
            let (pw, s) = summand_unreduced(g, d, depth + 1);
            (d, pw, s)
        })
        .collect();
    let mut out: BTreeMap<TableKey, BiSeries> = BTreeMap::new();
    for (d, pw, s) in rows {
        for j in 1..=depth as i32 {
            let t = pw + j;
            if t < 0 || t as usize >= s.len() {
                continue;
            }
            for (mono, v) in &s[t as usize] {
                let e = out.entry((j as usize, *mono)).or_insert_with(|| BiSeries::zero(order, trunc));
                e.set(d.0, d.1, v.clone());
            }
        }
    }
    out
}

/// Names of the local `P^1 × P^1` coefficient table.
pub const LOCAL_TABLE_NAMES: [(&str, TableKey); 16] = [
    ("I11", (1, (1, 0))),
    ("I12", (1, (0, 1))),
    ("I21", (2, (2, 0))),
    ("I22", (2, (1, 1))),
    ("I23", (2, (0, 2))),
    ("I24", (2, (1, 0))),
    ("I25", (2, (0, 1))),
    ("I31", (3, (3, 0))),
    ("I32", (3, (2, 1))),
    ("I33", (3, (1, 2))),
    ("I34", (3, (0, 3))),
    ("I35", (3, (2, 0))),
    ("I36", (3, (1, 1))),
    ("I37", (3, (0, 2))),
    ("I38", (3, (1, 0))),
    ("I39", (3, (0, 1))),
];

/// Named `I_{ij}` series plus any nonzero components outside the named span.
#[derive(Clone, Debug)]
pub struct ITable {
    pub named: BTreeMap<String, BiSeries>,
    pub unconsumed: BTreeMap<TableKey, BiSeries>,
}

/// The `I_{ij}` table of local `P^1 × P^1` through `1/z^3`; other presets use generic keys
/// `I[j;a,b]`.
pub fn i_coefficient_table(g: &GeometrySpec, trunc: (usize, usize)) -> ITable {
    let raw = unreduced_coefficients(g, trunc, 3);
    let mut named = BTreeMap::new();
    let mut unconsumed = BTreeMap::new();
    if g.preset == Preset::LocalP1P1 {
        for (name, key) in LOCAL_TABLE_NAMES {
            let s = raw.get(&key).cloned().unwrap_or_else(|| BiSeries::zero(g.zeta_order, trunc));
            named.insert(name.to_string(), s);
        }
        for (k, v) in raw {
            if !LOCAL_TABLE_NAMES.iter().any(|(_, key)| *key == k) && !v.is_zero() {
                unconsumed.insert(k, v);
            }
        }
    } else {
        for ((j, (a, b)), v) in raw {
            named.insert(format!("I[{j};{a},{b}]"), v);
        }
    }
    ITable { named, unconsumed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Axis;

    #[test]
    fn q0_term_is_one() {
        for p in Preset::ALL {
            let r = ClassRing::preset(p);
            let i = small_i_function(&r, (2, 1), (-4, 0)).unwrap();
            assert!(r.restrict(i.class_at((0, 0), 0)).iter().all(Cyclo::is_one));
            for m in -4..0 {
                assert!(i.class_at((0, 0), m).iter().all(Cyclo::is_zero));
            }
        }
    }

    #[test]
    fn reduced_matches_unreduced() {
        for p in Preset::ALL {
            let r = ClassRing::preset(p);
            let i = small_i_function(&r, (3, 2), (-3, 0)).unwrap();
            let raw = unreduced_coefficients(&r.geometry, (3, 2), 3);
            for j in 1..=3usize {
                let mut acc = vec![BiSeries::zero(r.order(), (3, 2)); r.dim()];
                for ((jj, mono), s) in &raw {
                    if *jj != j {
                        continue;
                    }
                    let c = r.monomial_coords(*mono);
                    for (k, ck) in c.iter().enumerate() {
                        acc[k] = acc[k].add(&s.scale(ck));
                    }
                }
                assert_eq!(acc, i.z_coefficient(-(j as i32)).unwrap(), "{p} 1/z^{j}");
            }
        }
    }

    #[test]
    fn local_a0_equation() {
        let g = Preset::LocalP1P1.spec();
        let t = i_coefficient_table(&g, (8, 0));
        let a0 = t.named["I11"].slice(0).unwrap().into_bi();
        let lhs = a0.euler(Axis::Q1).add_constant(&Cyclo::one(4));
        let x = BiSeries::from_fn(4, (8, 0), |a, _| Cyclo::from_int([1, -4, 0][a.min(2)], 4))
            .pow_rational(&crate::cyclo::rat(-1, 2), &Cyclo::one(4))
            .unwrap();
        assert_eq!(lhs, x);
        assert!(t.named["I24"].is_zero() && t.named["I25"].is_zero());
    }
}
