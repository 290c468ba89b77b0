//! Generator series of the elliptic, K3 and local rings, Eisenstein series,
//! the discriminant, and mirror-map transport.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::asymptotics::{ring_fit, FitResult};
use crate::cyclo::{rat, Cyclo};
use crate::error::{Error, Result};
use crate::expr::Env;
use crate::geometry::Preset;
use crate::series::{Axis, BiSeries, UniSeries};

/// Which generator ring a [`GeneratorSet`] belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    Elliptic,
    K3,
    Local,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Elliptic => "elliptic",
            Family::K3 => "k3",
            Family::Local => "local",
        }
    }
}

/// Named `q`-series of one generator ring.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub family: Family,
    pub trunc: usize,
    pub named: BTreeMap<String, UniSeries>,
}

impl GeneratorSet {
    pub fn get(&self, name: &str) -> Result<&UniSeries> {
        self.named.get(name).ok_or_else(|| Error::Unknown { kind: "generator", name: name.to_string() })
    }

    /// Formula environment with every generator bound; `'` is `D = q d/dq`.
    pub fn env(&self) -> Env {
        let order = self.named.values().map(UniSeries::order).max().unwrap_or(1);
        let mut env = Env::new(order, (self.trunc, 0));
        for (k, v) in &self.named {
            env.set(k, v.as_bi().clone());
        }
        env.set("q", UniSeries::variable(Axis::Q1, order, self.trunc).into_bi());
        env
    }

    pub fn eval(&self, src: &str) -> Result<UniSeries> {
        Ok(UniSeries::from_bi(Axis::Q1, self.env().eval_str(src)?))
    }
}

fn uni(n: usize, f: impl Fn(usize) -> BigRational) -> BiSeries {
    BiSeries::from_fn(1, (n, 0), |a, _| Cyclo::from_rational(f(a), 1))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn one_plus(c: i64, n: usize) -> BiSeries {
    uni(n, |a| match a {
        0 => BigRational::one(),
        1 => BigRational::from_integer(c.into()),
        _ => BigRational::zero(),
    })
}

fn d(s: &BiSeries) -> BiSeries {
    s.euler(Axis::Q1)
}

/// `X = D(P')/(1+P')`.
fn x_of(p: &BiSeries) -> Result<BiSeries> {
    d(p).div(&p.add_constant(&Cyclo::one(p.order())))
}

fn finish(family: Family, n: usize, v: Vec<(&str, BiSeries)>) -> GeneratorSet {
    let named = v.into_iter().map(|(k, s)| (k.to_string(), UniSeries::from_bi(Axis::Q1, s))).collect();
    GeneratorSet { family, trunc: n, named }
}

/// `L = (1−27q)^{−1/3}`, `I1E = 3Σ(3d−1)!/(d!)³ q^d`, `B1' = D I1E`,
/// `X = D B1'/(1+B1')`, and the mirror coordinate
/// `T = 3Σ(3d)!/(d!)³ (Σ_{r=d+1}^{3d} 1/r) q^d / Σ(3d)!/(d!)³ q^d`.
///
/// `1 + B1'` is the fundamental period, and `q·exp(T)` (not `q·exp(I1E)`)
/// is the mirror map under which the quasimodular identities hold.
pub fn elliptic_generators(n: usize) -> Result<GeneratorSet> {
    let l = one_plus(-27, n).pow_rational(&rat(-1, 3), &Cyclo::one(1))?;
    let i1 = uni(n, |k| {
        if k == 0 {
            BigRational::zero()
        } else {
            BigRational::new(factorial(3 * k - 1) * 3, factorial(k).pow(3))
        }
    });
    let b1 = d(&i1);
    let x = x_of(&b1)?;
    let c = |k: usize| BigRational::new(factorial(3 * k), factorial(k).pow(3));
    let harmonic = |k: usize| (k + 1..=3 * k).fold(BigRational::zero(), |acc, r| acc + rat(1, r as i64));
    let t = uni(n, |k| c(k) * harmonic(k) * BigRational::from_integer(3.into())).div(&uni(n, c))?;
    Ok(finish(Family::Elliptic, n, vec![("L", l), ("I1E", i1), ("B1_p", b1), ("X", x), ("T", t)]))
}

/// `L = (1−256q)^{−1/4}`, `I1K3` the ratio of hypergeometric sums,
/// `A1' = D I1K3`, `X = D A1'/(1+A1')`.
pub fn k3_generators(n: usize) -> Result<GeneratorSet> {
    let l = one_plus(-256, n).pow_rational(&rat(-1, 4), &Cyclo::one(1))?;
    let c = |k: usize| BigRational::new(factorial(4 * k), factorial(k).pow(4));
    let harmonic = |k: usize| (k + 1..=4 * k).fold(BigRational::zero(), |acc, r| acc + rat(1, r as i64));
    let num = uni(n, |k| c(k) * harmonic(k) * BigRational::from_integer(4.into()));
    let den = uni(n, c);
    let i1 = num.div(&den)?;
    let a1 = d(&i1);
    let x = x_of(&a1)?;
    Ok(finish(Family::K3, n, vec![("L", l), ("I1K3", i1), ("A1_p", a1), ("X", x)]))
}

/// `X = (1−8q1)^{−1/2}`.
pub fn local_generators(n: usize) -> Result<GeneratorSet> {
    let x = one_plus(-8, n).pow_rational(&rat(-1, 2), &Cyclo::one(1))?;
    Ok(finish(Family::Local, n, vec![("X", x)]))
}

/// Differential relations closing each ring under `D`, as `(id, expression = 0)`.
pub const QEF_RELATIONS: [(&str, &str); 2] =
    [("qef-dl", "L' - L (L^3 - 1)/3"), ("qef-x", "X^2 - (L^3 - 1) X + X' - 2 (L^3 - 1)/9")];
pub const QKF_RELATIONS: [(&str, &str); 2] =
    [("qkf-dl", "L' - L (L^4 - 1)/4"), ("qkf-x", "X^2 - 2 X' + (12 L^8 - 11 L^4 - 1)/16")];
pub const LOCAL_X_RELATION: (&str, &str) = ("local-dx", "X' - 4 q X^3");

/// Monomials `L^{step·a} P^b X^c` with `a ∈ [lo, hi]`, `b + c ≤ deg`,
/// where `P` is `B1'` (elliptic) or `A1'` (K3) and `step` is 3 or 4.
pub fn ring_monomials(g: &GeneratorSet, (lo, hi): (i64, i64), deg: usize) -> Result<Vec<(String, UniSeries)>> {
    let (step, p) = match g.family {
        Family::Elliptic => (3i64, "B1_p"),
        Family::K3 => (4, "A1_p"),
        Family::Local => return Err(Error::Precondition("local ring has no monomial basis here".into())),
    };
    let l = g.get("L")?.as_bi();
    let linv = l.invert()?;
    let pb = g.get(p)?.as_bi();
    let xb = g.get("X")?.as_bi();
    let mut out = Vec::new();
    for a in lo..=hi {
        let la = if a >= 0 { l.pow((step * a) as u32) } else { linv.pow((-step * a) as u32) };
        for e in 0..=deg {
            for f in 0..=deg - e {
                let s = la.mul(&pb.pow(e as u32)).mul(&xb.pow(f as u32));
                out.push((format!("L^{} {p}^{e} X^{f}", step * a), UniSeries::from_bi(Axis::Q1, s)));
            }
        }
    }
    Ok(out)
}

/// Fits `D(expr)` in the ring monomials.
pub fn d_closure_fit(g: &GeneratorSet, expr: &str, l_range: (i64, i64), deg: usize) -> Result<FitResult> {
    let target = g.eval(&format!("({expr})'"))?;
    let basis: Vec<UniSeries> = ring_monomials(g, l_range, deg)?.into_iter().map(|(_, s)| s).collect();
    ring_fit(&target, &basis)
}

/// Bernoulli numbers `B_0..=B_n` (`B_1 = −1/2`).
pub fn bernoulli(n: usize) -> Vec<BigRational> {
    let mut b = vec![BigRational::zero(); n + 1];
    b[0] = BigRational::one();
    for m in 1..=n {
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one();
        for k in 0..m {
            acc += BigRational::from_integer(binom.clone()) * &b[k];
            binom = binom * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        b[m] = -acc / BigRational::from_integer(BigInt::from(m + 1));
    }
    b
}

fn sigma(k: u32, n: usize) -> BigInt {
    (1..=n).filter(|d| n % d == 0).fold(BigInt::zero(), |acc, d| acc + BigInt::from(d).pow(k))
}

/// `E_k = 1 − (2k/B_k) Σ σ_{k−1}(n) Q^n`.
pub fn eisenstein(k: usize, n: usize) -> Result<UniSeries> {
    let bk = bernoulli(k)[k].clone();
    if k == 0 || bk.is_zero() {
        return Err(Error::Precondition(format!("no Eisenstein series of weight {k}")));
    }
    let c = -BigRational::from_integer(BigInt::from(2 * k)) / bk;
    Ok(UniSeries::from_bi(
        Axis::Q1,
        uni(n, |m| if m == 0 { BigRational::one() } else { &c * BigRational::from_integer(sigma(k as u32 - 1, m)) }),
    ))
}

/// `Δ = Q ∏ (1−Q^m)^24`.
pub fn discriminant(n: usize) -> UniSeries {
    let mut p = BiSeries::one(1, (n, 0));
    for m in 1..=n {
        let f = uni(n, |a| {
            if a == 0 {
                BigRational::one()
            } else if a == m {
                -BigRational::one()
            } else {
                BigRational::zero()
            }
        });
        p = p.mul(&f.pow(24));
    }
    UniSeries::from_bi(Axis::Q1, p.shift((1, 0)))
}

/// `E2, E4, E6, Δ` as `Q`-series.
#[derive(Clone, Debug)]
pub struct ModularSet {
    pub trunc: usize,
    pub named: BTreeMap<String, UniSeries>,
}

pub fn eisenstein_and_delta(n: usize) -> Result<ModularSet> {
    let mut named = BTreeMap::new();
    for k in [2, 4, 6] {
        named.insert(format!("E{k}"), eisenstein(k, n)?);
    }
    named.insert("Delta".to_string(), discriminant(n));
    Ok(ModularSet { trunc: n, named })
}

/// `Q = q·exp(t)`.
pub fn mirror_map(t: &UniSeries) -> Result<UniSeries> {
    let e = t.as_bi().exp()?;
    Ok(UniSeries::from_bi(Axis::Q1, e.shift((1, 0))))
}

/// `a(q(Q))` where `q(Q)` inverts the mirror map.
pub fn mirror_transport(a: &UniSeries, mirror: &UniSeries) -> Result<UniSeries> {
    let inv = mirror.reversion()?;
    Ok(UniSeries::from_bi(Axis::Q1, a.with_axis(Axis::Q1).substitute(inv.as_bi())?))
}

/// Quasimodular expressions in the elliptic generators, keyed by the
/// Eisenstein series they transport to.
pub const ASYZ: [(&str, &str); 3] = [
    ("E2", "(1 + B1_p)^2 L^(-3) (12 X + 4 - 3 L^3)"),
    ("E4", "(1 + B1_p)^4 L^(-6) (-8 L^3 + 9 L^6)"),
    ("E6", "(1 + B1_p)^6 L^(-9) (-8 L^3 + 36 L^6 - 27 L^9)"),
];

/// Genus-one right-hand side of each fibration, with its generator ring.
pub fn genus1_expression(p: Preset) -> Result<(Family, &'static str)> {
    match p {
        Preset::ESurface32 => Ok((Family::Elliptic, "-X")),
        Preset::E3fold33 => Ok((Family::Elliptic, "-(L^3 - 1)/4 - 3 X/2")),
        Preset::K3Fib42 => Ok((Family::K3, "13 (1 - L^4)/12 + 2 X")),
        Preset::LocalP1P1 => Err(Error::Precondition("no genus-one expression for local P1xP1".into())),
    }
}

pub fn genus1_rhs(p: Preset, n: usize) -> Result<UniSeries> {
    let (fam, src) = genus1_expression(p)?;
    let g = match fam {
        Family::Elliptic => elliptic_generators(n)?,
        _ => k3_generators(n)?,
    };
    g.eval(src)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &UniSeries, k: usize) -> Vec<i64> {
        (0..=k).map(|i| s.coeff(i).as_rational().unwrap().to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn bernoulli_small() {
        let b = bernoulli(6);
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[6], rat(1, 42));
        assert!(b[3].is_zero() && b[5].is_zero());
    }

    #[test]
    fn generator_heads() {
        let e = elliptic_generators(4).unwrap();
        assert_eq!(ints(e.get("L").unwrap(), 2), [1, 9, 162]);
        assert_eq!(ints(e.get("I1E").unwrap(), 2), [0, 6, 45]);
        let k = k3_generators(3).unwrap();
        assert_eq!(ints(k.get("L").unwrap(), 2), [1, 64, 10240]);
        assert_eq!(ints(k.get("I1K3").unwrap(), 1), [0, 104]);
        assert_eq!(ints(local_generators(3).unwrap().get("X").unwrap(), 3), [1, 4, 24, 160]);
    }

    #[test]
    fn modular_heads() {
        let m = eisenstein_and_delta(4).unwrap();
        assert_eq!(ints(&m.named["E2"], 3), [1, -24, -72, -96]);
        assert_eq!(ints(&m.named["E4"], 2), [1, 240, 2160]);
        assert_eq!(ints(&m.named["E6"], 2), [1, -504, -16632]);
        assert_eq!(ints(&m.named["Delta"], 4), [0, 1, -24, 252, -1472]);
    }

    #[test]
    fn transport_trivial_cases() {
        let e = elliptic_generators(6).unwrap();
        let m = mirror_map(e.get("T").unwrap()).unwrap();
        let q = mirror_transport(&m, &m).unwrap();
        assert_eq!(q, UniSeries::variable(Axis::Q1, 1, 6));
        let one = UniSeries::from_bi(Axis::Q1, BiSeries::one(1, (6, 0)));
        assert_eq!(mirror_transport(&one, &m).unwrap(), one);
    }
}
