//! Asymptotic data `𝕃, 𝕌𝔻, R_n` at a fixed point, solved degree by degree from
//! the conjugated Picard-Fuchs system, and exact ring-membership fitting.

use serde::Serialize;

use crate::cyclo::{rat, Cyclo};
use crate::error::{Error, Result};
use crate::geometry::{GeometrySpec, Preset};
use crate::linalg::{self, Solution};
use crate::picard_fuchs::{pf_operators, AnsatzSeries, PFOperator};
use crate::series::{Axis, BiSeries, UniSeries};

/// One solver step: which equation fixed which unknown coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveStep {
    pub degree: [usize; 2],
    pub unknown: String,
    pub pivot: String,
}

#[derive(Clone, Debug)]
pub struct AsymptoticData {
    pub geometry: GeometrySpec,
    pub ansatz: AnsatzSeries,
    pub log: Vec<SolveStep>,
}

impl AsymptoticData {
    pub fn log_json(&self) -> String {
        serde_json::to_string(&self.log).expect("log serializes")
    }

    /// `D2 𝕃 − D1 𝕌𝔻`, zero when the data come from a potential `𝕌`.
    pub fn integrability_defect(&self) -> BiSeries {
        self.ansatz.big_l.euler(Axis::Q2).sub(&self.ansatz.ud.euler(Axis::Q1))
    }

    /// All conjugated residuals `z^0..z^{K+1}` of both operators.
    pub fn residuals(&self) -> Vec<Vec<BiSeries>> {
        let (a, b) = pf_operators(&self.geometry);
        let k = self.ansatz.r.len();
        [a, b].iter().map(|op| op.conjugated_apply(&self.ansatz).into_iter().take(k + 1).collect()).collect()
    }
}

fn degrees_of_level(trunc: (usize, usize), t: usize) -> Vec<(usize, usize)> {
    (0..=trunc.0.min(t)).filter(|&a| t - a <= trunc.1).map(|a| (a, t - a)).collect()
}

fn level_trunc(trunc: (usize, usize), t: usize) -> (usize, usize) {
    (trunc.0.min(t), trunc.1.min(t))
}

fn truncated(a: &AnsatzSeries, t: (usize, usize)) -> AnsatzSeries {
    AnsatzSeries {
        point: a.point,
        big_l: a.big_l.truncate(t),
        ud: a.ud.truncate(t),
        r: a.r.iter().map(|s| s.truncate(t)).collect(),
    }
}

/// Leading data `(𝕃, 𝕌𝔻)` from the `z^0` coefficients of both conjugated operators.
pub fn solve_leading(
    g: &GeometrySpec,
    point: (usize, usize),
    trunc: (usize, usize),
) -> Result<(AnsatzSeries, Vec<SolveStep>)> {
    g.check_fixed_point(point)?;
    let order = g.zeta_order;
    let ops = pf_operators(g);
    let l0 = g.weights1[point.0].clone();
    let u0 = g.weights2[point.1].clone();
    let mut a = AnsatzSeries {
        point,
        big_l: BiSeries::constant(l0.clone(), trunc),
        ud: BiSeries::constant(u0.clone(), trunc),
        r: vec![BiSeries::one(order, trunc)],
    };
    let eval = |op: &PFOperator, a: &AnsatzSeries| op.conjugated_apply(a).swap_remove(0);
    // The z^0 symbol is polynomial in (𝕃, 𝕌𝔻); its Jacobian at q = 0 is read off by probing.
    let jac = {
        let t = (1, 1);
        let base = truncated(&a, t);
        let mut rows = Vec::new();
        for op in [&ops.0, &ops.1] {
            let f0 = eval(op, &base);
            if !f0.constant_term().is_zero() {
                return Err(Error::Singular(0, 0));
            }
            let mut row = Vec::new();
            for which in 0..2 {
                let mut p = base.clone();
                let bump = BiSeries::monomial(Cyclo::one(order), (1, 0), t);
                if which == 0 {
                    p.big_l = p.big_l.add(&bump);
                } else {
                    p.ud = p.ud.add(&bump);
                }
                row.push(eval(op, &p).sub(&f0).coeff(1, 0).clone());
            }
            rows.push(row);
        }
        rows
    };
    let diag = jac[0][1].is_zero() && jac[1][0].is_zero();
    let mut log = Vec::new();
    for t in 1..=trunc.0 + trunc.1 {
        let lt = level_trunc(trunc, t);
        let cur = truncated(&a, lt);
        let f = [eval(&ops.0, &cur), eval(&ops.1, &cur)];
        for d in degrees_of_level(trunc, t) {
            let rhs = [-f[0].coeff(d.0, d.1).clone(), -f[1].coeff(d.0, d.1).clone()];
            let sol = match linalg::solve_system(&jac, &rhs, 2, order) {
                Solution::Unique(x) => x,
                _ => return Err(Error::Singular(d.0, d.1)),
            };
            a.big_l.set(d.0, d.1, sol[0].clone());
            a.ud.set(d.0, d.1, sol[1].clone());
            for (k, name) in ["L", "UD"].iter().enumerate() {
                log.push(SolveStep {
                    degree: [d.0, d.1],
                    unknown: name.to_string(),
                    pivot: if diag { format!("op{}", k + 1) } else { "op1+op2".into() },
                });
            }
        }
    }
    Ok((a, log))
}

/// Solves `R_0..R_K` after the leading data, with `R_0(0) = 1`, `R_n(0) = 0`.
pub fn solve_r(g: &GeometrySpec, point: (usize, usize), k_max: usize, trunc: (usize, usize)) -> Result<AsymptoticData> {
    let (mut a, mut log) = solve_leading(g, point, trunc)?;
    let order = g.zeta_order;
    let ops = pf_operators(g);
    let lam = (g.weights1[point.0].clone(), g.weights2[point.1].clone());
    // Pivot of R_n's degree-d coefficient in the z^{n+1} equation of each operator.
    let pivot = |op: &PFOperator, d: (usize, usize)| -> Cyclo {
        let p = AnsatzSeries {
            point,
            big_l: BiSeries::constant(lam.0.clone(), d),
            ud: BiSeries::constant(lam.1.clone(), d),
            r: vec![BiSeries::monomial(Cyclo::one(order), d, d)],
        };
        op.conjugated_apply(&p)[1].coeff(d.0, d.1).clone()
    };
    a.r.clear();
    for n in 0..=k_max {
        let c0 = if n == 0 { Cyclo::one(order) } else { Cyclo::zero(order) };
        a.r.push(BiSeries::constant(c0, trunc));
        for t in 1..=trunc.0 + trunc.1 {
            let lt = level_trunc(trunc, t);
            let cur = truncated(&a, lt);
            let f = [ops.0.conjugated_apply(&cur), ops.1.conjugated_apply(&cur)];
            for d in degrees_of_level(trunc, t) {
                let p = [pivot(&ops.0, d), pivot(&ops.1, d)];
                let k = if !p[0].is_zero() {
                    0
                } else if !p[1].is_zero() {
                    1
                } else {
                    return Err(Error::Singular(d.0, d.1));
                };
                let v = -(f[k][n + 1].coeff(d.0, d.1) * &p[k].inv()?);
                a.r[n].set(d.0, d.1, v);
                log.push(SolveStep { degree: [d.0, d.1], unknown: format!("R{n}"), pivot: format!("op{}", k + 1) });
            }
        }
    }
    Ok(AsymptoticData { geometry: g.clone(), ansatz: a, log })
}

/// `L_{ij} = (4β_j q + α_i √(1 + 4(β_j² − 1) q)) / (1 − 4q)` for local `P^1 × P^1`.
pub fn closed_form_l_local(g: &GeometrySpec, point: (usize, usize), n: usize) -> Result<UniSeries> {
    if g.preset != Preset::LocalP1P1 {
        return Err(Error::Precondition("closed-form L is for LOCAL_P1P1".into()));
    }
    g.check_fixed_point(point)?;
    let order = g.zeta_order;
    let (al, be) = (&g.weights1[point.0], &g.weights2[point.1]);
    let one = Cyclo::one(order);
    let lin = |c0: Cyclo, c1: Cyclo| {
        let mut v = vec![Cyclo::zero(order); n + 1];
        v[0] = c0;
        if n >= 1 {
            v[1] = c1;
        }
        UniSeries::from_coeffs(Axis::Q1, v).into_bi()
    };
    let radicand = lin(one.clone(), (be * be - one.clone()).scale_int(4));
    let root = radicand.nth_root(2, &one)?;
    let num = lin(Cyclo::zero(order), be.scale_int(4)).add(&root.scale(al));
    let den = lin(one.clone(), Cyclo::from_int(-4, order));
    Ok(UniSeries::from_bi(Axis::Q1, num.div(&den)?))
}

/// Exact coefficients of a successful fit.
#[derive(Clone, Debug, PartialEq)]
pub struct FitResult {
    pub coeffs: Vec<Cyclo>,
    /// Highest order used to determine the coefficients.
    pub fit_order: usize,
    /// Highest order at which the fit was re-checked.
    pub validated_order: usize,
}

/// Safety margin between fit order and validation order.
pub const FIT_MARGIN: usize = 5;

/// Finds `c` with `target = Σ c_k basis_k`, using orders `0..=len−FIT_MARGIN`,
/// then re-checks every order through `len`.
pub fn ring_fit(target: &UniSeries, basis: &[UniSeries]) -> Result<FitResult> {
    let n = basis.iter().map(UniSeries::len).min().unwrap_or(0).min(target.len());
    if n < FIT_MARGIN || basis.is_empty() {
        return Err(Error::Precondition("fit needs truncation above the safety margin".into()));
    }
    let fit_order = n - FIT_MARGIN;
    let order = basis.iter().fold(target.order(), |m, b| num_integer::lcm(m, b.order()));
    let rows: Vec<Vec<Cyclo>> = (0..=fit_order).map(|k| basis.iter().map(|b| b.coeff(k).clone()).collect()).collect();
    let rhs: Vec<Cyclo> = (0..=fit_order).map(|k| target.coeff(k).clone()).collect();
    let c = match linalg::solve_system(&rows, &rhs, basis.len(), order) {
        Solution::Unique(c) => c,
        Solution::Ambiguous(f) => return Err(Error::Ambiguous(f)),
        Solution::Inconsistent => return Err(Error::NoSolution),
    };
    for k in fit_order + 1..=n {
        let v = basis.iter().zip(&c).fold(Cyclo::zero(order), |acc, (b, ck)| acc + b.coeff(k) * ck);
        if v != *target.coeff(k) {
            return Err(Error::ValidationFailed(k));
        }
    }
    Ok(FitResult { coeffs: c, fit_order, validated_order: n })
}

/// Retries [`ring_fit`] with bases from `family(bound)` for `bound = 0..=cap`,
/// stopping at the first success or when the basis outgrows the data.
pub fn ring_fit_adaptive(
    target: &UniSeries,
    cap: usize,
    family: impl Fn(usize) -> Result<Vec<UniSeries>>,
) -> Result<(usize, FitResult)> {
    let mut last = Error::NoSolution;
    for bound in 0..=cap {
        match ring_fit(target, &family(bound)?) {
            Ok(f) => return Ok((bound, f)),
            Err(Error::Ambiguous(k)) => return Err(Error::Ambiguous(k)),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// Powers `x^m` for `m` in `lo..=hi` (negative powers via inversion).
pub fn laurent_powers(x: &UniSeries, lo: i64, hi: i64) -> Result<Vec<UniSeries>> {
    let xb = x.as_bi();
    let inv = if lo < 0 { Some(xb.invert()?) } else { None };
    (lo..=hi)
        .map(|m| {
            let s = if m >= 0 { xb.pow(m as u32) } else { inv.as_ref().unwrap().pow((-m) as u32) };
            Ok(UniSeries::from_bi(x.axis(), s))
        })
        .collect()
}

/// Basis of `C[L, (1+βL)^{-1/2}]` through the given bounds:
/// `{L^a : a ≤ bound} ∪ {(1+βL)^{-e} : 1 ≤ e ≤ bound}`, each times `{1, g}` with
/// `g = ((1+βL)/(1+βλ))^{-1/2}` normalized to constant term 1.
pub fn g_ring_basis(l: &UniSeries, beta: &Cyclo, bound: usize) -> Result<Vec<UniSeries>> {
    let lb = l.as_bi();
    let w = lb.scale(beta).add_constant(&Cyclo::one(lb.order()));
    let w_norm = w.scale(&w.constant_term().inv()?);
    let g = w_norm.pow_rational(&rat(-1, 2), &Cyclo::one(lb.order()))?;
    let w_inv = w.invert()?;
    let mut base: Vec<BiSeries> = (0..=bound).map(|a| lb.pow(a as u32)).collect();
    base.extend((1..=bound).map(|e| w_inv.pow(e as u32)));
    let mut out: Vec<UniSeries> = base.iter().map(|s| UniSeries::from_bi(l.axis(), s.clone())).collect();
    out.extend(base.iter().map(|s| UniSeries::from_bi(l.axis(), s.mul(&g))));
    Ok(out)
}

/// Basis `r · ({L^m : |m| ≤ bound} ∪ {(1+βL)^{-e} : 1 ≤ e ≤ bound})` with `r = √L`.
pub fn r_ring_basis(l: &UniSeries, beta: &Cyclo, bound: usize) -> Result<Vec<UniSeries>> {
    let lb = l.as_bi();
    let r = lb.nth_root(2, &Cyclo::one(lb.order()))?;
    let w_inv = lb.scale(beta).add_constant(&Cyclo::one(lb.order())).invert()?;
    let mut out: Vec<UniSeries> = laurent_powers(l, -(bound as i64), bound as i64)?
        .into_iter()
        .map(|s| UniSeries::from_bi(l.axis(), s.as_bi().mul(&r)))
        .collect();
    out.extend((1..=bound).map(|e| UniSeries::from_bi(l.axis(), w_inv.pow(e as u32).mul(&r))));
    Ok(out)
}

/// `W = a2·λ2·L^{n1} + a1` for a twisted preset at fixed point `point`.
pub fn twisted_denominator(g: &GeometrySpec, point: (usize, usize), l: &UniSeries) -> Result<UniSeries> {
    let (a1, a2) =
        *g.a_twists.first().ok_or_else(|| Error::Precondition("twisted denominator needs a bundle twist".into()))?;
    let lam2 = g.weights2[point.1].embed(l.order())?;
    let lb = l.as_bi();
    let w = lb.pow(g.n.0 as u32).scale(&lam2.scale_int(a2)).add_constant(&Cyclo::from_int(a1, lb.order()));
    Ok(UniSeries::from_bi(l.axis(), w))
}

/// Smallest `(p, e)` with `target · h^p · W^e ∈ C[L^{±1}]`, `p ∈ {0, 1}`,
/// `e ≤ e_max`, together with the Laurent bound and fit. `h` carries the
/// square-root factor (e.g. the `q2^0` slice of `R0`); `p = 0` is tried first.
pub fn extended_laurent_fit(
    target: &UniSeries,
    l: &UniSeries,
    w: &UniSeries,
    h: &UniSeries,
    e_max: usize,
    cap: usize,
) -> Result<((usize, usize), usize, FitResult)> {
    let mut last = Error::NoSolution;
    for p in 0..=1u32 {
        let tp = target.as_bi().mul(&h.as_bi().pow(p));
        for e in 0..=e_max {
            let t = UniSeries::from_bi(target.axis(), tp.mul(&w.as_bi().pow(e as u32)));
            match ring_fit_adaptive(&t, cap, |b| laurent_powers(l, -(b as i64), b as i64)) {
                Ok((b, f)) => return Ok(((p as usize, e), b, f)),
                Err(err) => last = err,
            }
        }
    }
    Err(last)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn local_leading_matches_closed_form() {
        let g = Preset::LocalP1P1.spec();
        for p in g.fixed_points() {
            let (a, _) = solve_leading(&g, p, (8, 1)).unwrap();
            let l = closed_form_l_local(&g, p, 8).unwrap();
            assert_eq!(a.big_l.slice(0).unwrap(), l, "{p:?}");
        }
    }

    #[test]
    fn local_r_solution_is_consistent() {
        let g = Preset::LocalP1P1.spec();
        let d = solve_r(&g, (0, 0), 2, (4, 2)).unwrap();
        assert!(d.integrability_defect().is_zero());
        for res in d.residuals() {
            assert!(res.iter().all(BiSeries::is_zero));
        }
        assert!(d.ansatz.r[0].constant_term().is_one());
    }

    #[test]
    fn fits() {
        let g = Preset::LocalP1P1.spec();
        let l = closed_form_l_local(&g, (0, 0), 12).unwrap();
        let basis = laurent_powers(&l, 0, 3).unwrap();
        let cube = UniSeries::from_bi(Axis::Q1, l.as_bi().pow(3));
        let f = ring_fit(&cube, &basis).unwrap();
        assert!(f.coeffs[3].is_one() && f.coeffs[..3].iter().all(Cyclo::is_zero));
        assert_eq!(ring_fit(&l, &laurent_powers(&l, 0, 0).unwrap()), Err(Error::NoSolution));
    }
}
