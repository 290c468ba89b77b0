//! Birkhoff factorization: S-operators `𝕊(γ) = γ + O(1/z)` built from
//! derivative insertions of the small I-function, plus the named coefficient
//! tables read off their `1/z` parts.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cohomology::ClassRing;
use crate::error::{Error, Result};
use crate::expr::Env;
use crate::formulas;
use crate::geometry::{GeometrySpec, Preset};
use crate::ifunction::{i_coefficient_table, small_i_function};
use crate::series::BiSeries;
use crate::zseries::ZSeries;

type Mono = (usize, usize);

/// How one `𝕊(γ)` was produced.
#[derive(Clone, Debug)]
pub struct Correction {
    /// `γ = H_axis · parent`.
    pub parent: Mono,
    pub axis: usize,
    /// Multiples of lower-degree `𝕊(β)` subtracted from `M_axis 𝕊(parent)`.
    pub lower: BTreeMap<Mono, BiSeries>,
    /// Row of the same-degree leading matrix (`z^0` coefficients after the
    /// lower corrections).
    pub leading: BTreeMap<Mono, BiSeries>,
    /// Row of its inverse: `𝕊(γ) = Σ_δ mix[δ]·T_δ`.
    pub mix: BTreeMap<Mono, BiSeries>,
}

#[derive(Clone, Debug)]
pub struct SOperatorSet {
    pub ring: Arc<ClassRing>,
    /// `z^0` scalar of the I-function; `𝕊(1) = Ī / normalization`.
    pub normalization: BiSeries,
    pub ops: BTreeMap<Mono, ZSeries>,
    pub corrections: BTreeMap<Mono, Correction>,
}

impl SOperatorSet {
    pub fn get(&self, m: Mono) -> Result<&ZSeries> {
        self.ops.get(&m).ok_or_else(|| Error::Unknown { kind: "basis element", name: format!("H1^{} H2^{}", m.0, m.1) })
    }

    /// Basis elements whose `z^{≥0}` part is not exactly `γ·z^0`.
    pub fn unitriangularity_failures(&self) -> Vec<(Mono, (usize, usize), i32)> {
        let mut bad = Vec::new();
        for (&m, s) in &self.ops {
            let mut expect = ZSeries::zero(&self.ring, s.trunc(), s.window());
            expect.class_at_mut((0, 0), 0).clone_from_slice(&self.ring.monomial_coords(m));
            let diff = s.sub(&expect);
            for d1 in 0..=s.trunc().0 {
                for d2 in 0..=s.trunc().1 {
                    for z in 0..=s.window().1 {
                        if diff.class_at((d1, d2), z).iter().any(|c| !c.is_zero()) {
                            bad.push((m, (d1, d2), z));
                        }
                    }
                }
            }
        }
        bad
    }
}

fn degree(m: Mono) -> usize {
    m.0 + m.1
}

fn level_of(ring: &ClassRing, k: usize) -> usize {
    degree(ring.basis[k])
}

/// Generic triangularization. `z_depth` is the number of exact negative
/// `z`-powers kept in every `𝕊(γ)`.
pub fn s_operators(g: &GeometrySpec, trunc: (usize, usize), z_depth: usize) -> Result<SOperatorSet> {
    let ring = ClassRing::new(g.clone());
    let max_level = ring.basis.iter().map(|&m| degree(m)).max().unwrap_or(0);
    let lo = -((z_depth + max_level) as i32);
    let hi = max_level as i32 + 1;
    let ibar = small_i_function(&ring, trunc, (lo, hi))?;
    s_operators_from(&ring, &ibar)
}

/// Triangularization starting from a given small I-function.
pub fn s_operators_from(ring: &Arc<ClassRing>, ibar: &ZSeries) -> Result<SOperatorSet> {
    let order = ring.order();
    let trunc = ibar.trunc();
    let one_idx = ring.basis_index(0, 0).expect("unit in basis");
    for m in 1..=ibar.window().1 {
        if ibar.z_coefficient(m)?.iter().any(|s| !s.is_zero()) {
            return Err(Error::Birkhoff(format!("I-function has a z^{m} term")));
        }
    }
    let z0 = ibar.z_coefficient(0)?;
    for (k, s) in z0.iter().enumerate() {
        if k != one_idx && !s.is_zero() {
            return Err(Error::Birkhoff(format!("z^0 term of I has a {:?} component", ring.basis[k])));
        }
    }
    let normalization = z0[one_idx].clone();
    let s1 = ibar.mul_series(&normalization.invert()?);
    let mut ops: BTreeMap<Mono, ZSeries> = BTreeMap::new();
    ops.insert((0, 0), s1);
    let mut corrections = BTreeMap::new();

    let max_level = ring.basis.iter().map(|&m| degree(m)).max().unwrap_or(0);
    for level in 1..=max_level {
        let members: Vec<usize> = (0..ring.dim()).filter(|&k| level_of(ring, k) == level).collect();
        let mut ts = Vec::new();
        let mut rows = Vec::new();
        for &k in &members {
            let m = ring.basis[k];
            let (axis, parent) = if m.0 > 0 { (0, (m.0 - 1, m.1)) } else { (1, (m.0, m.1 - 1)) };
            let mut t = ops[&parent].insertion(axis)?;
            let c0 = t.z_coefficient(0)?;
            let mut lower = BTreeMap::new();
            for (j, s) in c0.iter().enumerate() {
                let mj = ring.basis[j];
                let lj = degree(mj);
                if s.is_zero() || lj == level {
                    continue;
                }
                if lj > level {
                    return Err(Error::Birkhoff(format!(
                        "insertion for {m:?} produced a higher-degree {mj:?} term at z^0"
                    )));
                }
                t = t.sub(&ops[&mj].mul_series(s));
                lower.insert(mj, s.clone());
            }
            for z in 1..=t.window().1 {
                if t.z_coefficient(z)?.iter().any(|s| !s.is_zero()) {
                    return Err(Error::Birkhoff(format!("uncancellable z^{z} term for {m:?}")));
                }
            }
            let c0 = t.z_coefficient(0)?;
            rows.push(members.iter().map(|&j| c0[j].clone()).collect::<Vec<_>>());
            ts.push(t);
            corrections.insert(m, Correction { parent, axis, lower, leading: BTreeMap::new(), mix: BTreeMap::new() });
        }
        let inv = series_matrix_inverse(&rows, order, trunc).map_err(|_| {
            Error::Birkhoff(format!(
                "singular leading system at degree {level}: {:?}",
                members.iter().map(|&k| ring.basis[k]).collect::<Vec<_>>()
            ))
        })?;
        for (r, &k) in members.iter().enumerate() {
            let m = ring.basis[k];
            let mut acc = ZSeries::zero(ring, trunc, ts[0].window());
            acc.set_meta(ts[0].exact_lo(), 0);
            for (c, t) in ts.iter().enumerate() {
                if !inv[r][c].is_zero() {
                    acc = acc.add(&t.mul_series(&inv[r][c]));
                }
            }
            let corr = corrections.get_mut(&m).unwrap();
            for (c, &j) in members.iter().enumerate() {
                corr.leading.insert(ring.basis[j], rows[r][c].clone());
                corr.mix.insert(ring.basis[j], inv[r][c].clone());
            }
            ops.insert(m, acc);
        }
    }
    Ok(SOperatorSet { ring: ring.clone(), normalization, ops, corrections })
}

/// Gauss-Jordan inverse of a matrix over the power-series ring; pivots need
/// an invertible constant term.
pub fn series_matrix_inverse(a: &[Vec<BiSeries>], order: u32, trunc: (usize, usize)) -> Result<Vec<Vec<BiSeries>>> {
    let n = a.len();
    let mut m: Vec<Vec<BiSeries>> = a.to_vec();
    let mut inv: Vec<Vec<BiSeries>> = (0..n)
        .map(|i| {
            (0..n).map(|j| if i == j { BiSeries::one(order, trunc) } else { BiSeries::zero(order, trunc) }).collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].constant_term().is_zero()).ok_or(Error::Singular(col, col))?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].invert()?;
        for j in 0..n {
            m[col][j] = m[col][j].mul(&p);
            inv[col][j] = inv[col][j].mul(&p);
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..n {
                let (x, y) = (m[col][j].mul(&f), inv[col][j].mul(&f));
                m[r][j] = m[r][j].sub(&x);
                inv[r][j] = inv[r][j].sub(&y);
            }
        }
    }
    Ok(inv)
}

/// Named series of one geometry.
#[derive(Clone, Debug, Default)]
pub struct CoefficientTables {
    pub named: BTreeMap<String, BiSeries>,
    /// Components of a `1/z` coefficient that fall outside the named span.
    pub residue: BTreeMap<String, BiSeries>,
}

impl CoefficientTables {
    pub fn get(&self, name: &str) -> Result<&BiSeries> {
        self.named.get(name).ok_or_else(|| Error::Unknown { kind: "table entry", name: name.to_string() })
    }

    /// `q2^k` slice of a named series, as a `q1`-series.
    pub fn slice(&self, name: &str, k: usize) -> Result<BiSeries> {
        Ok(self.get(name)?.slice(k)?.into_bi())
    }

    pub fn to_json(&self) -> String {
        let m: serde_json::Map<String, serde_json::Value> =
            self.named.iter().map(|(k, v)| (k.clone(), serde_json::to_value(v.to_json_value()).unwrap())).collect();
        serde_json::Value::Object(m).to_string()
    }
}

/// Local `P^1 × P^1`: the `I_{ij}` table, the `J/K/𝕁/𝕂/𝕄` series (with
/// `s1 = β0+β1`, `s2 = β0β1`).
pub fn jkm_series(g: &GeometrySpec, trunc: (usize, usize)) -> Result<CoefficientTables> {
    if g.preset != Preset::LocalP1P1 {
        return Err(Error::Precondition("J/K/M series are defined for local P1xP1 only".into()));
    }
    let it = i_coefficient_table(g, trunc);
    let mut env = Env::new(g.zeta_order, trunc);
    for (k, v) in &it.named {
        env.set(k, v.clone());
    }
    let b = &g.weights2;
    env.set_constant("s1", &b[0] + &b[1]);
    env.set_constant("s2", &b[0] * &b[1]);
    let mut out = CoefficientTables::default();
    for (k, v) in &it.named {
        out.named.insert(k.clone(), v.clone());
    }
    for (k, v) in &it.unconsumed {
        out.residue.insert(format!("I[{};{},{}]", k.0, k.1 .0, k.1 .1), v.clone());
    }
    for (name, src) in formulas::LOCAL_JKM {
        let s = env.eval_str(src)?;
        env.set(name, s.clone());
        out.named.insert(name.to_string(), s);
    }
    Ok(out)
}

/// The six closed-form `E_{ij}` of the local Birkhoff equations.
pub fn e_series_local(tables: &CoefficientTables) -> Result<BTreeMap<String, BiSeries>> {
    let any = tables.get("I11")?;
    let mut env = Env::new(any.order(), any.trunc());
    for (k, v) in &tables.named {
        env.set(k, v.clone());
    }
    let mut out = BTreeMap::new();
    for (name, src) in formulas::LOCAL_E {
        out.insert(name.to_string(), env.eval_str(src)?);
    }
    Ok(out)
}

/// `𝕊(γ)` through the closed-form local equations:
/// `𝕊(H1) = E11 M1 Ī + E12 M2 Ī`, `𝕊(H2) = E21 M1 Ī + E22 M2 Ī`,
/// `𝕊(H1H2) = E31 M1 𝕊(H2) + E32 𝕊(1)`.
pub fn local_closed_form_s(ibar: &ZSeries, e: &BTreeMap<String, BiSeries>) -> Result<BTreeMap<Mono, ZSeries>> {
    let m1 = ibar.insertion(0)?;
    let m2 = ibar.insertion(1)?;
    let sh1 = m1.mul_series(&e["E11"]).add(&m2.mul_series(&e["E12"]));
    let sh2 = m1.mul_series(&e["E21"]).add(&m2.mul_series(&e["E22"]));
    let sh12 = sh2.insertion(0)?.mul_series(&e["E31"]).add(&ibar.mul_series(&e["E32"]));
    let mut out = BTreeMap::new();
    out.insert((0, 0), ibar.clone());
    out.insert((1, 0), sh1);
    out.insert((0, 1), sh2);
    out.insert((1, 1), sh12);
    Ok(out)
}

/// Names of the `1/z` coefficients of each `𝕊(γ)`, per geometry:
/// `(letter, γ, components)`.
pub fn table_layout(p: Preset) -> &'static [(&'static str, Mono, &'static [Mono])] {
    match p {
        Preset::LocalP1P1 => &[],
        Preset::ESurface32 => &[
            ("A", (0, 0), &[(1, 0), (0, 1)]),
            ("B", (1, 0), &[(2, 0), (1, 1), (0, 0)]),
            ("C", (0, 1), &[(2, 0), (1, 1), (0, 0)]),
            ("E", (2, 0), &[(0, 0), (2, 1), (1, 0), (0, 1)]),
            ("F", (1, 1), &[(0, 0), (2, 1), (1, 0), (0, 1)]),
            // H1^2 slot: H1^3 reduces to a multiple of 1
            ("G", (2, 1), &[(1, 0), (0, 1), (2, 0), (1, 1), (0, 0)]),
        ],
        Preset::E3fold33 => &[
            ("A", (0, 0), &[(1, 0), (0, 1)]),
            ("B", (1, 0), &[(2, 0), (1, 1), (0, 2)]),
            ("C", (0, 1), &[(2, 0), (1, 1), (0, 2)]),
            ("E", (2, 0), &[(0, 0), (2, 1), (1, 2)]),
            ("F", (1, 1), &[(0, 0), (2, 1), (1, 2)]),
            ("G", (0, 2), &[(0, 0), (2, 1), (1, 2)]),
            ("H", (2, 1), &[(1, 0), (0, 1), (2, 2)]),
            ("I", (1, 2), &[(1, 0), (0, 1), (2, 2)]),
            ("J", (2, 2), &[(2, 0), (1, 1), (0, 2)]),
        ],
        Preset::K3Fib42 => &[
            ("A", (0, 0), &[(1, 0), (0, 1)]),
            ("B", (1, 0), &[(2, 0), (1, 1), (0, 0)]),
            ("C", (0, 1), &[(2, 0), (1, 1), (0, 0)]),
            ("E", (2, 0), &[(3, 0), (2, 1), (1, 0), (0, 1)]),
            ("F", (1, 1), &[(3, 0), (2, 1), (1, 0), (0, 1)]),
            ("G", (3, 0), &[(0, 0), (3, 1), (2, 0), (1, 1)]),
            ("H", (2, 1), &[(0, 0), (3, 1), (2, 0), (1, 1)]),
            ("I", (3, 1), &[(1, 0), (0, 1), (3, 0), (2, 1)]),
        ],
    }
}

/// Extracts the named `1/z` coefficients of the S-operators. Named
/// components are reduced monomials of the ring; anything left over goes to
/// `residue`.
pub fn s_coefficient_tables(sset: &SOperatorSet) -> Result<CoefficientTables> {
    let ring = &sset.ring;
    let mut out = CoefficientTables::default();
    for (letter, gamma, comps) in table_layout(ring.geometry.preset) {
        let c = sset.get(*gamma)?.z_coefficient(-1)?;
        let mut rest = c.clone();
        for (n, mono) in comps.iter().enumerate() {
            let coords = ring.monomial_coords(*mono);
            let idx = coords.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, _)| k).collect::<Vec<_>>();
            if idx.len() != 1 || !coords[idx[0]].is_one() {
                return Err(Error::Precondition(format!("{mono:?} is not a basis monomial")));
            }
            let k = idx[0];
            out.named.insert(format!("{letter}{}", n + 1), c[k].clone());
            rest[k] = BiSeries::zero(ring.order(), c[k].trunc());
        }
        for (k, s) in rest.iter().enumerate() {
            if !s.is_zero() {
                let (a, b) = ring.basis[k];
                out.residue.insert(format!("{letter}[H1^{a} H2^{b}]"), s.clone());
            }
        }
    }
    Ok(out)
}

/// Environment of `q2^0` slices (as `q1`-series), their `D1` derivatives
/// under primed names, and `L = L_{00}`.
pub fn slice_env(tables: &CoefficientTables, l00: &BiSeries, k: usize, n1: usize) -> Result<Env> {
    let order = l00.order().max(tables.named.values().next().map(|s| s.order()).unwrap_or(1));
    let mut env = Env::new(order, (n1, 0));
    for (name, s) in &tables.named {
        let sl = s.slice(k)?.into_bi();
        env.set(name, sl.clone());
    }
    env.set("L", l00.truncate((n1.min(l00.trunc().0), 0)).pad((n1, 0)));
    Ok(env)
}
