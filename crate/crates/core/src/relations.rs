//! Verification suites: every closed-form relation, checked as exact
//! zero-series equality, with a deterministic JSON report.

use rayon::prelude::*;
use serde::Serialize;

use crate::asymptotics::{closed_form_l_local, r_ring_basis, ring_fit_adaptive, solve_leading, solve_r};
use crate::birkhoff::{
    e_series_local, jkm_series, local_closed_form_s, s_coefficient_tables, s_operators, slice_env, CoefficientTables,
};
use crate::cohomology::ClassRing;
use crate::cyclo::{rat, Cyclo};
use crate::error::{Error, Result};
use crate::expr::Env;
use crate::formulas;
use crate::generators::{
    d_closure_fit, eisenstein_and_delta, elliptic_generators, k3_generators, local_generators, mirror_map,
    mirror_transport, GeneratorSet, ASYZ, LOCAL_X_RELATION, QEF_RELATIONS, QKF_RELATIONS,
};
use crate::geometry::Preset;
use crate::ifunction::small_i_function;
use crate::picard_fuchs::verify_annihilation;
use crate::series::{Axis, BiSeries, UniSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One checked relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationResult {
    pub id: String,
    /// Truncation `(N1, N2)` through which the relation was checked.
    pub orders: [usize; 2],
    pub status: Status,
    pub first_mismatch: Option<[usize; 2]>,
}

impl RelationResult {
    fn zero(id: impl Into<String>, s: &BiSeries) -> Self {
        let t = s.trunc();
        let first = s.iter().find(|(_, c)| !c.is_zero()).map(|(d, _)| [d.0, d.1]);
        RelationResult {
            id: id.into(),
            orders: [t.0, t.1],
            status: if first.is_none() { Status::Pass } else { Status::Fail },
            first_mismatch: first,
        }
    }

    fn equal(id: impl Into<String>, a: &BiSeries, b: &BiSeries) -> Self {
        Self::zero(id, &a.sub(b))
    }

    fn flag(id: impl Into<String>, orders: [usize; 2], ok: bool, first: Option<[usize; 2]>) -> Self {
        RelationResult {
            id: id.into(),
            orders,
            status: if ok { Status::Pass } else { Status::Fail },
            first_mismatch: first,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub status: Status,
    pub results: Vec<RelationResult>,
}

impl SuiteReport {
    fn new(suite: &str, results: Vec<RelationResult>) -> Self {
        let ok = results.iter().all(|r| r.status == Status::Pass);
        SuiteReport { suite: suite.to_string(), status: if ok { Status::Pass } else { Status::Fail }, results }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub profile: String,
    pub status: Status,
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// Truncation orders used by the suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub name: String,
    /// `(N1, N2)` for bivariate checks.
    pub bivariate: (usize, usize),
    /// `q1`-order for univariate checks.
    pub univariate: usize,
    /// `Q`-order for quasimodular checks.
    pub modular: usize,
    /// `q1`-order of ring-membership fits.
    pub fit: usize,
}

impl Profile {
    pub fn quick() -> Self {
        Profile { name: "quick".into(), bivariate: (6, 3), univariate: 8, modular: 8, fit: 24 }
    }

    /// The orders of the acceptance criteria.
    pub fn full() -> Self {
        Profile { name: "full".into(), bivariate: (8, 4), univariate: 12, modular: 12, fit: 32 }
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "quick" => Ok(Self::quick()),
            "full" => Ok(Self::full()),
            _ => Err(Error::Unknown { kind: "profile", name: name.to_string() }),
        }
    }
}

pub const SUITES: [&str; 14] = [
    "pf-annihilation",
    "asyz",
    "d-closure",
    "prop-mg",
    "relation-re",
    "fg2",
    "table-32",
    "table-33",
    "table-42",
    "k3-quadratic",
    "root-symmetry",
    "vanishing-jkm",
    "birkhoff-unitriangular",
    "integrability",
];

/// Expands `all` and rejects unknown names; order follows [`SUITES`].
pub fn resolve_suites(names: &[String]) -> Result<Vec<&'static str>> {
    let mut out = Vec::new();
    for n in names {
        if n == "all" {
            out.extend(SUITES);
        } else if let Some(s) = SUITES.iter().find(|s| **s == n.as_str()) {
            out.push(*s);
        } else {
            return Err(Error::Unknown { kind: "suite", name: n.clone() });
        }
    }
    out.sort_by_key(|s| SUITES.iter().position(|t| t == s));
    out.dedup();
    Ok(out)
}

/// Runs the named suites concurrently; results are merged in registry order.
pub fn run(names: &[String], profile: &Profile) -> Result<Report> {
    let suites = resolve_suites(names)?;
    let reports: Vec<SuiteReport> = suites.par_iter().map(|s| run_suite(s, profile)).collect::<Result<_>>()?;
    let ok = reports.iter().all(|r| r.status == Status::Pass);
    Ok(Report { profile: profile.name.clone(), status: if ok { Status::Pass } else { Status::Fail }, suites: reports })
}

pub fn run_suite(name: &str, p: &Profile) -> Result<SuiteReport> {
    let results = match name {
        "pf-annihilation" => verify_pf_annihilation(p.bivariate)?,
        "asyz" => verify_asyz(p.modular)?,
        "d-closure" => verify_d_closure(p.univariate)?,
        "prop-mg" => verify_prop_mg(p.bivariate, &[(0, 0), (1, 1)])?,
        "relation-re" => verify_relation_re(p.bivariate, &[(0, 0), (1, 1)])?,
        "fg2" => verify_fg2(p.fit, 2)?,
        "table-32" => verify_table(Preset::ESurface32, p.univariate)?,
        "table-33" => verify_table(Preset::E3fold33, p.univariate)?,
        "table-42" => verify_table(Preset::K3Fib42, p.univariate)?,
        "k3-quadratic" => verify_k3_quadratic(p.univariate)?,
        "root-symmetry" => verify_root_symmetry(p.univariate.max(12))?,
        "vanishing-jkm" => verify_vanishing_jkm(p.bivariate)?,
        "birkhoff-unitriangular" => verify_unitriangular(p.bivariate)?,
        "integrability" => verify_integrability(p.bivariate)?,
        _ => return Err(Error::Unknown { kind: "suite", name: name.to_string() }),
    };
    Ok(SuiteReport::new(name, results))
}

fn uni_orders(n: usize) -> [usize; 2] {
    [n, 0]
}

pub fn verify_pf_annihilation(trunc: (usize, usize)) -> Result<Vec<RelationResult>> {
    Preset::ALL
        .par_iter()
        .map(|&p| {
            let ring = ClassRing::preset(p);
            let i = small_i_function(&ring, trunc, (-6, 4))?;
            Ok(verify_annihilation(&ring.geometry, &i)?
                .into_iter()
                .map(|a| {
                    let first = a.first_nonzero.map(|(d, _)| [d.0, d.1]);
                    RelationResult::flag(
                        format!("pf-annihilation/{}/op{}", p.name(), a.operator),
                        [trunc.0, trunc.1],
                        first.is_none(),
                        first,
                    )
                })
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.concat())
}

pub fn verify_asyz(n: usize) -> Result<Vec<RelationResult>> {
    let g = elliptic_generators(n)?;
    let m = eisenstein_and_delta(n)?;
    let mirror = mirror_map(g.get("T")?)?;
    ASYZ.iter()
        .map(|(k, src)| {
            let t = mirror_transport(&g.eval(src)?, &mirror)?;
            Ok(RelationResult::equal(format!("asyz/{k}"), t.as_bi(), m.named[*k].as_bi()))
        })
        .collect()
}

fn check_all(g: &GeneratorSet, rels: &[(&str, &str)]) -> Result<Vec<RelationResult>> {
    rels.iter().map(|(id, src)| Ok(RelationResult::zero(format!("d-closure/{id}"), g.eval(src)?.as_bi()))).collect()
}

/// The D-closure pairs through `q^n`, plus fits of `D(L^3 X)`, `D(B1' X)`,
/// `D(L^4 X)`, `D(A1' X)` back into each ring.
pub fn verify_d_closure(n: usize) -> Result<Vec<RelationResult>> {
    let mut out = check_all(&elliptic_generators(n)?, &QEF_RELATIONS)?;
    out.extend(check_all(&k3_generators(n)?, &QKF_RELATIONS)?);
    out.extend(check_all(&local_generators(n)?, &[LOCAL_X_RELATION])?);
    let spots: [(bool, &str, (i64, i64), usize, usize); 4] = [
        (true, "L^3 X", (0, 2), 2, 24),
        (true, "B1_p X", (0, 1), 2, 18),
        (false, "L^4 X", (0, 3), 2, 30),
        (false, "A1_p X", (0, 2), 3, 36),
    ];
    for (ell, ex, range, deg, order) in spots {
        let g = if ell { elliptic_generators(order)? } else { k3_generators(order)? };
        let id = format!("d-closure/fit/D({ex})");
        out.push(fit_result(id, d_closure_fit(&g, ex, range, deg), order));
    }
    Ok(out)
}

fn fit_result<T>(id: String, r: Result<T>, order: usize) -> RelationResult {
    match r {
        Ok(_) => RelationResult::flag(id, uni_orders(order), true, None),
        Err(Error::ValidationFailed(k)) => RelationResult::flag(id, uni_orders(order), false, Some([k, 0])),
        Err(_) => RelationResult::flag(id, uni_orders(order), false, None),
    }
}

/// `I11` table, `J/K/𝕁/𝕂/𝕄`, and `LL`, `UD` at one fixed point.
pub fn local_env(trunc: (usize, usize), point: (usize, usize), tables: &CoefficientTables) -> Result<Env> {
    let g = Preset::LocalP1P1.spec();
    let (a, _) = solve_leading(&g, point, trunc)?;
    let mut env = Env::new(g.zeta_order, trunc);
    for (k, v) in &tables.named {
        env.set(k, v.clone());
    }
    env.set("LL", a.big_l);
    env.set("UD", a.ud);
    Ok(env)
}

pub fn verify_prop_mg(trunc: (usize, usize), points: &[(usize, usize)]) -> Result<Vec<RelationResult>> {
    let tables = jkm_series(&Preset::LocalP1P1.spec(), trunc)?;
    let mut out = Vec::new();
    for &pt in points {
        let env = local_env(trunc, pt, &tables)?;
        for (lhs, rhs) in formulas::PROP_MG {
            let d = env.eval_str(lhs)?.sub(&env.eval_str(rhs)?);
            out.push(RelationResult::zero(format!("prop-mg/{},{}/{lhs}", pt.0, pt.1), &d));
        }
    }
    Ok(out)
}

pub fn verify_relation_re(trunc: (usize, usize), points: &[(usize, usize)]) -> Result<Vec<RelationResult>> {
    let tables = jkm_series(&Preset::LocalP1P1.spec(), trunc)?;
    points
        .iter()
        .map(|&pt| {
            let env = local_env(trunc, pt, &tables)?;
            Ok(RelationResult::zero(format!("relation-re/{},{}", pt.0, pt.1), &env.eval_str(formulas::RELATION_RE)?))
        })
        .collect()
}

/// `a_k ∈ r·C[r^{±2}, (1+β r^2)^{-1}]` for `k ≤ k_max` at `(0,0)`, and a
/// perturbed negative control `a_1 + q1^7` that must not fit.
pub fn verify_fg2(n: usize, k_max: usize) -> Result<Vec<RelationResult>> {
    let g = Preset::LocalP1P1.spec();
    let tables = jkm_series(&g, (n, k_max))?;
    let l = closed_form_l_local(&g, (0, 0), n)?;
    let beta = g.weights2[0].clone();
    let i11 = tables.get("I11")?;
    let cap = 6;
    let mut out = Vec::new();
    for k in 1..=k_max {
        let a = i11.slice(k)?;
        out.push(fit_result(format!("fg2/a{k}"), ring_fit_adaptive(&a, cap, |b| r_ring_basis(&l, &beta, b)), n));
    }
    let a1 = i11.slice(1)?;
    let bump = BiSeries::monomial(Cyclo::one(a1.order()), (7, 0), a1.as_bi().trunc());
    let perturbed = UniSeries::from_bi(Axis::Q1, a1.as_bi().add(&bump));
    let control = ring_fit_adaptive(&perturbed, cap, |b| r_ring_basis(&l, &beta, b));
    out.push(RelationResult::flag("fg2/control/a1+q1^7", uni_orders(n), control.is_err(), None));
    Ok(out)
}

pub fn table_formulas(p: Preset) -> Result<&'static [(&'static str, &'static str)]> {
    match p {
        Preset::ESurface32 => Ok(&formulas::SURFACE_TABLE),
        Preset::E3fold33 => Ok(&formulas::THREEFOLD_TABLE),
        Preset::K3Fib42 => Ok(&formulas::K3_TABLE),
        Preset::LocalP1P1 => Err(Error::Precondition("no table identities for local P1xP1".into())),
    }
}

/// `q2^0` slices of the named `1/z` coefficients, with `L` the `q2^0`
/// slice of `𝕃` at `point`.
pub fn table_env(p: Preset, n: usize, point: (usize, usize)) -> Result<Env> {
    let g = p.spec();
    let sset = s_operators(&g, (n, 0), 1)?;
    let tables = s_coefficient_tables(&sset)?;
    let (a, _) = solve_leading(&g, point, (n, 0))?;
    slice_env(&tables, &a.big_l, 0, n)
}

pub fn check_table(p: Preset, env: &Env, tag: &str) -> Result<Vec<RelationResult>> {
    table_formulas(p)?
        .iter()
        .map(|(lhs, rhs)| Ok(RelationResult::equal(format!("{tag}/{lhs}"), &env.eval_str(lhs)?, &env.eval_str(rhs)?)))
        .collect()
}

/// Table identities with `L = L_{00}`.
pub fn verify_table(p: Preset, n: usize) -> Result<Vec<RelationResult>> {
    let tag = match p {
        Preset::ESurface32 => "table-32",
        Preset::E3fold33 => "table-33",
        _ => "table-42",
    };
    check_table(p, &table_env(p, n, (0, 0))?, tag)
}

/// The quadratic relation for `j = 0, 1` with `L = L_{0j}`.
pub fn verify_k3_quadratic(n: usize) -> Result<Vec<RelationResult>> {
    let g = Preset::K3Fib42.spec();
    let sset = s_operators(&g, (n, 0), 1)?;
    let tables = s_coefficient_tables(&sset)?;
    (0..2)
        .map(|j| {
            let (a, _) = solve_leading(&g, (0, j), (n, 0))?;
            let mut env = slice_env(&tables, &a.big_l, 0, n)?;
            env.set_constant("sg", Cyclo::from_int(if j == 0 { 1 } else { -1 }, g.zeta_order));
            Ok(RelationResult::zero(format!("k3-quadratic/j={j}"), &env.eval_str(formulas::K3_QUADRATIC)?))
        })
        .collect()
}

/// `L_{0j} L_{1j} = −1` and `L_{0j} + L_{1j} = (−1)^j 8i q1/(1−4q1)`, plus
/// agreement of the solved `q2^0` slice with the closed form at every point.
pub fn verify_root_symmetry(n: usize) -> Result<Vec<RelationResult>> {
    let g = Preset::LocalP1P1.spec();
    let o = g.zeta_order;
    let mut out = Vec::new();
    let q = UniSeries::variable(Axis::Q1, o, n).into_bi();
    let one = BiSeries::one(o, (n, 0));
    for j in 0..2 {
        let a = closed_form_l_local(&g, (0, j), n)?.into_bi();
        let b = closed_form_l_local(&g, (1, j), n)?.into_bi();
        out.push(RelationResult::equal(format!("root-symmetry/j={j}/product"), &a.mul(&b), &one.neg()));
        let sign = if j == 0 { 1 } else { -1 };
        let coef = Cyclo::root_of_unity(4, 1).scale_int(8 * sign);
        let sum = q.scale(&coef).div(&one.sub(&q.scale_rational(&rat(4, 1))))?;
        out.push(RelationResult::equal(format!("root-symmetry/j={j}/sum"), &a.add(&b), &sum));
    }
    for pt in g.fixed_points() {
        let (a, _) = solve_leading(&g, pt, (n, 0))?;
        let cf = closed_form_l_local(&g, pt, n)?;
        out.push(RelationResult::equal(format!("root-symmetry/closed-form/{},{}", pt.0, pt.1), &a.big_l, cf.as_bi()));
    }
    Ok(out)
}

/// The vanishing list `𝕁12 = 𝕁13 = 𝕂12 = 𝕂13 = 𝕄11 = 𝕄12 = 0`.
pub const VANISHING: [&str; 6] = ["JJ12", "JJ13", "KK12", "KK13", "MM11", "MM12"];

pub fn verify_vanishing_jkm(trunc: (usize, usize)) -> Result<Vec<RelationResult>> {
    let t = jkm_series(&Preset::LocalP1P1.spec(), trunc)?;
    VANISHING.iter().map(|k| Ok(RelationResult::zero(format!("vanishing-jkm/{k}"), t.get(k)?))).collect()
}

/// Unitriangularity of every `𝕊(γ)` for all presets, and agreement of the
/// local closed-form route with the generic one.
pub fn verify_unitriangular(trunc: (usize, usize)) -> Result<Vec<RelationResult>> {
    let mut out: Vec<RelationResult> = Preset::ALL
        .par_iter()
        .map(|&p| {
            let sset = s_operators(&p.spec(), trunc, 2)?;
            let bad = sset.unitriangularity_failures();
            let first = bad.first().map(|(_, d, _)| [d.0, d.1]);
            Ok(RelationResult::flag(
                format!("birkhoff-unitriangular/{}", p.name()),
                [trunc.0, trunc.1],
                bad.is_empty(),
                first,
            ))
        })
        .collect::<Result<_>>()?;
    let g = Preset::LocalP1P1.spec();
    let sset = s_operators(&g, trunc, 2)?;
    let e = e_series_local(&jkm_series(&g, trunc)?)?;
    let cf = local_closed_form_s(sset.get((0, 0))?, &e)?;
    for (m, s) in &cf {
        let first = s.first_difference(sset.get(*m)?).map(|(d, _)| [d.0, d.1]);
        out.push(RelationResult::flag(
            format!("birkhoff-unitriangular/closed-form/H1^{}H2^{}", m.0, m.1),
            [trunc.0, trunc.1],
            first.is_none(),
            first,
        ));
    }
    Ok(out)
}

/// `D2 𝕃 = D1 𝕌𝔻` and vanishing conjugated residuals at the first fixed point
/// of every preset.
pub fn verify_integrability(trunc: (usize, usize)) -> Result<Vec<RelationResult>> {
    Preset::ALL
        .par_iter()
        .map(|&p| {
            let d = solve_r(&p.spec(), (0, 0), 1, trunc)?;
            let mut v =
                vec![RelationResult::zero(format!("integrability/{}/potential", p.name()), &d.integrability_defect())];
            let res = d.residuals();
            let first =
                res.iter().flatten().find_map(|s| s.iter().find(|(_, c)| !c.is_zero()).map(|(d, _)| [d.0, d.1]));
            v.push(RelationResult::flag(
                format!("integrability/{}/residuals", p.name()),
                [trunc.0, trunc.1],
                first.is_none(),
                first,
            ));
            Ok(v)
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.concat())
}
