//! Truncated bivariate power series in `(q1, q2)` over `Q(ζ_N)`.
//!
//! Storage is dense over the rectangle `0 ≤ d1 ≤ N1`, `0 ≤ d2 ≤ N2`.
//! Every binary operation returns the componentwise minimum truncation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};

/// Which of the two variables an operation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axis {
    Q1,
    Q2,
}

impl Axis {
    pub fn index(self) -> usize {
        match self {
            Axis::Q1 => 0,
            Axis::Q2 => 1,
        }
    }
}

/// Work threshold (coefficient pairs) above which multiplication runs in parallel.
const PAR_THRESHOLD: usize = 4096;

#[derive(Clone, Debug)]
pub struct BiSeries {
    order: u32,
    trunc: (usize, usize),
    coeffs: Vec<Cyclo>,
}

impl BiSeries {
    pub fn zero(order: u32, trunc: (usize, usize)) -> Self {
        BiSeries { order, trunc, coeffs: vec![Cyclo::zero(order); (trunc.0 + 1) * (trunc.1 + 1)] }
    }

    pub fn constant(c: Cyclo, trunc: (usize, usize)) -> Self {
        let mut s = Self::zero(c.order(), trunc);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: u32, trunc: (usize, usize)) -> Self {
        Self::constant(Cyclo::one(order), trunc)
    }

    /// `c·q1^d1·q2^d2`, zero if the monomial lies beyond the truncation.
    pub fn monomial(c: Cyclo, d: (usize, usize), trunc: (usize, usize)) -> Self {
        let mut s = Self::zero(c.order(), trunc);
        if d.0 <= trunc.0 && d.1 <= trunc.1 {
            s.set(d.0, d.1, c);
        }
        s
    }

    /// The series whose `(d1, d2)` coefficient is `f(d1, d2)`.
    pub fn from_fn(order: u32, trunc: (usize, usize), mut f: impl FnMut(usize, usize) -> Cyclo) -> Self {
        let mut coeffs = Vec::with_capacity((trunc.0 + 1) * (trunc.1 + 1));
        for d1 in 0..=trunc.0 {
            for d2 in 0..=trunc.1 {
                coeffs.push(f(d1, d2));
            }
        }
        BiSeries { order, trunc, coeffs }.normalized_order()
    }

    fn normalized_order(mut self) -> Self {
        let m = self.coeffs.iter().fold(self.order, |m, c| num_integer::lcm(m, c.order()));
        if self.coeffs.iter().any(|c| c.order() != m) {
            for c in self.coeffs.iter_mut() {
                *c = c.embed(m).unwrap();
            }
        }
        self.order = m;
        self
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn trunc(&self) -> (usize, usize) {
        self.trunc
    }

    fn idx(&self, d1: usize, d2: usize) -> usize {
        d1 * (self.trunc.1 + 1) + d2
    }

    /// Coefficient at `(d1, d2)`; panics beyond the truncation.
    pub fn coeff(&self, d1: usize, d2: usize) -> &Cyclo {
        assert!(d1 <= self.trunc.0 && d2 <= self.trunc.1, "coefficient beyond truncation");
        &self.coeffs[self.idx(d1, d2)]
    }

    pub fn get(&self, d1: usize, d2: usize) -> Option<&Cyclo> {
        (d1 <= self.trunc.0 && d2 <= self.trunc.1).then(|| &self.coeffs[self.idx(d1, d2)])
    }

    pub fn set(&mut self, d1: usize, d2: usize, c: Cyclo) {
        let i = self.idx(d1, d2);
        if c.order() != self.order {
            let m = num_integer::lcm(self.order, c.order());
            self.coeffs[i] = c;
            self.order = m;
            *self = std::mem::replace(self, BiSeries::zero(1, (0, 0))).normalized_order();
        } else {
            self.coeffs[i] = c;
        }
    }

    pub fn constant_term(&self) -> &Cyclo {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyclo::is_zero)
    }

    /// Iterator over `((d1, d2), coefficient)` in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &Cyclo)> {
        let w = self.trunc.1 + 1;
        self.coeffs.iter().enumerate().map(move |(i, c)| ((i / w, i % w), c))
    }

    /// Re-expresses the coefficients in `Q(ζ_m)`.
    pub fn embed(&self, m: u32) -> Result<Self> {
        Ok(BiSeries {
            order: m,
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| c.embed(m)).collect::<Result<_>>()?,
        })
    }

    /// Drops coefficients beyond `trunc` (componentwise min with the current one).
    pub fn truncate(&self, trunc: (usize, usize)) -> Self {
        let t = (trunc.0.min(self.trunc.0), trunc.1.min(self.trunc.1));
        if t == self.trunc {
            return self.clone();
        }
        BiSeries::from_fn(self.order, t, |a, b| self.coeff(a, b).clone())
    }

    /// Reinterprets with a larger truncation, padding with zeros; valid only
    /// for data known to vanish beyond the current truncation.
    pub fn pad(&self, trunc: (usize, usize)) -> Self {
        BiSeries::from_fn(self.order, trunc, |a, b| self.get(a, b).cloned().unwrap_or_else(|| Cyclo::zero(self.order)))
    }

    fn common(&self, other: &Self) -> (u32, (usize, usize)) {
        (num_integer::lcm(self.order, other.order), (self.trunc.0.min(other.trunc.0), self.trunc.1.min(other.trunc.1)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (m, t) = self.common(other);
        BiSeries::from_fn(m, t, |a, b| self.coeff(a, b) + other.coeff(a, b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (m, t) = self.common(other);
        BiSeries::from_fn(m, t, |a, b| self.coeff(a, b) - other.coeff(a, b))
    }

    pub fn neg(&self) -> Self {
        BiSeries { order: self.order, trunc: self.trunc, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        BiSeries::from_fn(num_integer::lcm(self.order, c.order()), self.trunc, |a, b| self.coeff(a, b) * c)
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        BiSeries { order: self.order, trunc: self.trunc, coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect() }
    }

    pub fn add_constant(&self, c: &Cyclo) -> Self {
        let mut s = self.clone();
        let v = s.coeffs[0].clone() + c;
        s.set(0, 0, v);
        s
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (m, t) = self.common(other);
        let a = if self.order == m { self.clone() } else { self.embed(m).unwrap() };
        let b = if other.order == m { other.clone() } else { other.embed(m).unwrap() };
        let nz_a: Vec<(usize, usize, &Cyclo)> = a
            .iter()
            .filter(|((d1, d2), c)| *d1 <= t.0 && *d2 <= t.1 && !c.is_zero())
            .map(|((d1, d2), c)| (d1, d2, c))
            .collect();
        let w = t.1 + 1;
        let n = (t.0 + 1) * w;
        let term = |i: usize| -> Cyclo {
            let (d1, d2) = (i / w, i % w);
            let mut acc = Cyclo::zero(m);
            for &(e1, e2, ca) in &nz_a {
                if e1 <= d1 && e2 <= d2 {
                    let cb = b.coeff(d1 - e1, d2 - e2);
                    if !cb.is_zero() {
                        acc += &(ca * cb);
                    }
                }
            }
            acc
        };
        let coeffs: Vec<Cyclo> = if nz_a.len() * n > PAR_THRESHOLD {
            (0..n).into_par_iter().map(term).collect()
        } else {
            (0..n).map(term).collect()
        };
        BiSeries { order: m, trunc: t, coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BiSeries::one(self.order, self.trunc);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies by `q1^e1 q2^e2`.
    pub fn shift(&self, e: (usize, usize)) -> Self {
        BiSeries::from_fn(self.order, self.trunc, |a, b| {
            if a >= e.0 && b >= e.1 {
                self.coeff(a - e.0, b - e.1).clone()
            } else {
                Cyclo::zero(self.order)
            }
        })
    }

    /// Euler derivative `q_axis ∂/∂q_axis`.
    pub fn euler(&self, axis: Axis) -> Self {
        BiSeries::from_fn(self.order, self.trunc, |a, b| {
            let k = if axis == Axis::Q1 { a } else { b };
            self.coeff(a, b).scale_int(k as i64)
        })
    }

    /// Multiplicative inverse of a series with invertible constant term.
    pub fn invert(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NonUnit);
        }
        let inv0 = self.coeffs[0].inv()?;
        let mut out = BiSeries::zero(self.order, self.trunc);
        for d1 in 0..=self.trunc.0 {
            for d2 in 0..=self.trunc.1 {
                if (d1, d2) == (0, 0) {
                    out.coeffs[0] = inv0.clone();
                    continue;
                }
                let mut acc = Cyclo::zero(self.order);
                for e1 in 0..=d1 {
                    for e2 in 0..=d2 {
                        if (e1, e2) == (0, 0) {
                            continue;
                        }
                        let a = self.coeff(e1, e2);
                        if !a.is_zero() {
                            acc += &(a * out.coeff(d1 - e1, d2 - e2));
                        }
                    }
                }
                let i = out.idx(d1, d2);
                out.coeffs[i] = -(&acc * &inv0);
            }
        }
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.invert()?))
    }

    /// `self^alpha` with prescribed constant term `branch`, from the
    /// recurrence `a·E(y) = alpha·y·E(a)` for the total-degree Euler operator `E`.
    pub fn pow_rational(&self, alpha: &BigRational, branch: &Cyclo) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NonUnit);
        }
        let m = num_integer::lcm(self.order, branch.order());
        let a = self.embed(m)?;
        let inv0 = a.coeffs[0].inv()?;
        let mut y = BiSeries::zero(m, self.trunc);
        y.coeffs[0] = branch.embed(m)?;
        let alpha_c = Cyclo::from_rational(alpha.clone(), m);
        for d1 in 0..=self.trunc.0 {
            for d2 in 0..=self.trunc.1 {
                let n = d1 + d2;
                if n == 0 {
                    continue;
                }
                let mut rhs = Cyclo::zero(m);
                let mut lhs = Cyclo::zero(m);
                for e1 in 0..=d1 {
                    for e2 in 0..=d2 {
                        let w = (d1 - e1 + d2 - e2) as i64;
                        if w == 0 {
                            continue;
                        }
                        // alpha * y_e * |d-e| * a_{d-e}
                        let ad = a.coeff(d1 - e1, d2 - e2);
                        if !ad.is_zero() {
                            rhs += &(y.coeff(e1, e2) * ad).scale_int(w);
                        }
                        // a_{e} |d-e| y_{d-e}, e != 0
                        if (e1, e2) != (0, 0) {
                            let ae = a.coeff(e1, e2);
                            if !ae.is_zero() {
                                lhs += &(ae * y.coeff(d1 - e1, d2 - e2)).scale_int(w);
                            }
                        }
                    }
                }
                let v = (&alpha_c * &rhs) - lhs;
                let v = (&v * &inv0).scale(&BigRational::new(BigInt::one(), BigInt::from(n)));
                let i = y.idx(d1, d2);
                y.coeffs[i] = v;
            }
        }
        Ok(y)
    }

    /// The `n`-th root with constant term `branch`, which must satisfy `branch^n = a(0)`.
    pub fn nth_root(&self, n: u32, branch: &Cyclo) -> Result<Self> {
        if n == 0 || branch.is_zero() || branch.pow(n) != self.coeffs[0] {
            return Err(Error::BranchMismatch { branch: branch.to_literal(), constant: self.coeffs[0].to_literal() });
        }
        self.pow_rational(&BigRational::new(BigInt::one(), BigInt::from(n)), branch)
    }

    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition("exp requires zero constant term".into()));
        }
        let m = self.order;
        let mut y = BiSeries::zero(m, self.trunc);
        y.coeffs[0] = Cyclo::one(m);
        for d1 in 0..=self.trunc.0 {
            for d2 in 0..=self.trunc.1 {
                let n = d1 + d2;
                if n == 0 {
                    continue;
                }
                let mut acc = Cyclo::zero(m);
                for e1 in 0..=d1 {
                    for e2 in 0..=d2 {
                        let w = (d1 - e1 + d2 - e2) as i64;
                        if w == 0 {
                            continue;
                        }
                        let f = self.coeff(d1 - e1, d2 - e2);
                        if !f.is_zero() {
                            acc += &(y.coeff(e1, e2) * f).scale_int(w);
                        }
                    }
                }
                let i = y.idx(d1, d2);
                y.coeffs[i] = acc.scale(&BigRational::new(BigInt::one(), BigInt::from(n)));
            }
        }
        Ok(y)
    }

    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Precondition("log requires constant term 1".into()));
        }
        let g = self.total_euler().mul(&self.invert()?);
        Ok(BiSeries::from_fn(self.order, self.trunc, |a, b| {
            if a + b == 0 {
                Cyclo::zero(self.order)
            } else {
                g.coeff(a, b).scale(&BigRational::new(BigInt::one(), BigInt::from(a + b)))
            }
        }))
    }

    fn total_euler(&self) -> Self {
        BiSeries::from_fn(self.order, self.trunc, |a, b| self.coeff(a, b).scale_int((a + b) as i64))
    }

    /// The `q2^k` coefficient as a series in `q1`.
    pub fn slice(&self, k: usize) -> Result<UniSeries> {
        if k > self.trunc.1 {
            return Err(Error::Precondition(format!("slice {k} beyond q2 truncation {}", self.trunc.1)));
        }
        Ok(UniSeries::from_bi(
            Axis::Q1,
            BiSeries::from_fn(self.order, (self.trunc.0, 0), |a, _| self.coeff(a, k).clone()),
        ))
    }

    /// First exponent (lexicographic) where the two series differ on their common truncation.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        let (_, t) = self.common(other);
        for a in 0..=t.0 {
            for b in 0..=t.1 {
                if self.coeff(a, b) != other.coeff(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Equality on the common truncation.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }

    pub fn to_json_value(&self) -> SeriesJson {
        SeriesJson {
            vars: vec!["q1".into(), "q2".into()],
            trunc: [self.trunc.0, self.trunc.1],
            zeta_order: self.order,
            terms: self
                .iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((a, b), c)| TermJson { exp: [a, b], val: c.to_literal() })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("series serializes")
    }

    pub fn from_json_value(v: &SeriesJson) -> Result<Self> {
        if v.zeta_order == 0 {
            return Err(Error::Parse("zeta_order must be positive".into()));
        }
        let t = (v.trunc[0], v.trunc[1]);
        let mut s = BiSeries::zero(v.zeta_order, t);
        for term in &v.terms {
            let [a, b] = term.exp;
            if a > t.0 || b > t.1 {
                return Err(Error::Parse(format!("term ({a},{b}) beyond truncation")));
            }
            s.set(a, b, Cyclo::parse_literal(&term.val, v.zeta_order)?);
        }
        Ok(s)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: SeriesJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&v)
    }
}

impl PartialEq for BiSeries {
    fn eq(&self, other: &Self) -> bool {
        self.trunc == other.trunc && self.coeffs == other.coeffs
    }
}

/// Wire format of a series.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub vars: Vec<String>,
    pub trunc: [usize; 2],
    pub zeta_order: u32,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: [usize; 2],
    pub val: String,
}

/// A series in one variable, stored as a [`BiSeries`] that is constant in the other.
#[derive(Clone, Debug, PartialEq)]
pub struct UniSeries {
    axis: Axis,
    inner: BiSeries,
}

impl UniSeries {
    /// Wraps a bivariate series; coefficients off the active axis are dropped.
    pub fn from_bi(axis: Axis, s: BiSeries) -> Self {
        let inner = match axis {
            Axis::Q1 => s.truncate((s.trunc.0, 0)),
            Axis::Q2 => s.truncate((0, s.trunc.1)),
        };
        UniSeries { axis, inner }
    }

    pub fn from_coeffs(axis: Axis, coeffs: Vec<Cyclo>) -> Self {
        assert!(!coeffs.is_empty());
        let n = coeffs.len() - 1;
        let order = coeffs.iter().fold(1, |m, c| num_integer::lcm(m, c.order()));
        let t = match axis {
            Axis::Q1 => (n, 0),
            Axis::Q2 => (0, n),
        };
        UniSeries { axis, inner: BiSeries::from_fn(order, t, |a, b| coeffs[a + b].clone()) }
    }

    /// The variable `q` itself, truncated at `n`.
    pub fn variable(axis: Axis, order: u32, n: usize) -> Self {
        let mut c = vec![Cyclo::zero(order); n + 1];
        if n >= 1 {
            c[1] = Cyclo::one(order);
        }
        Self::from_coeffs(axis, c)
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn len(&self) -> usize {
        self.inner.trunc.0 + self.inner.trunc.1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn order(&self) -> u32 {
        self.inner.order
    }

    pub fn coeff(&self, k: usize) -> &Cyclo {
        match self.axis {
            Axis::Q1 => self.inner.coeff(k, 0),
            Axis::Q2 => self.inner.coeff(0, k),
        }
    }

    pub fn coeffs(&self) -> Vec<Cyclo> {
        (0..=self.len()).map(|k| self.coeff(k).clone()).collect()
    }

    pub fn as_bi(&self) -> &BiSeries {
        &self.inner
    }

    pub fn into_bi(self) -> BiSeries {
        self.inner
    }

    /// Same coefficients, placed on the other axis.
    pub fn with_axis(&self, axis: Axis) -> Self {
        UniSeries::from_coeffs(axis, self.coeffs())
    }

    /// Formal composition `self(s)`; `s` must have zero constant term.
    pub fn substitute(&self, s: &BiSeries) -> Result<BiSeries> {
        if !s.constant_term().is_zero() {
            return Err(Error::Precondition("substitution needs zero constant term".into()));
        }
        let (n1, n2) = s.trunc();
        if self.len() < n1 + n2 {
            return Err(Error::Precondition(format!(
                "outer series truncated at {} but composition needs {}",
                self.len(),
                n1 + n2
            )));
        }
        let top = n1 + n2;
        let mut acc = BiSeries::constant(self.coeff(top).clone(), s.trunc());
        for k in (0..top).rev() {
            acc = acc.mul(s).add_constant(self.coeff(k));
        }
        Ok(acc)
    }

    /// Compositional inverse of `c1·q + O(q^2)`.
    pub fn reversion(&self) -> Result<Self> {
        let n = self.len();
        let m = self.order();
        if n == 0 || !self.coeff(0).is_zero() || self.coeff(1).is_zero() {
            return Err(Error::Precondition("reversion needs c0 = 0 and c1 invertible".into()));
        }
        let c1_inv = self.coeff(1).inv()?;
        let mut b = vec![Cyclo::zero(m); n + 1];
        b[1] = c1_inv.clone();
        for k in 2..=n {
            let cur = UniSeries::from_coeffs(Axis::Q1, b.clone());
            let comp = self.with_axis(Axis::Q1).substitute(cur.as_bi())?;
            b[k] = -(comp.coeff(k, 0) * &c1_inv);
        }
        Ok(UniSeries::from_coeffs(self.axis, b))
    }
}

/// Integer constant as a cyclotomic element.
pub fn cint(v: i64, order: u32) -> Cyclo {
    Cyclo::from_int(v, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;

    fn uni(v: &[i64]) -> BiSeries {
        UniSeries::from_coeffs(Axis::Q1, v.iter().map(|&x| cint(x, 1)).collect()).into_bi()
    }

    #[test]
    fn basic_arith() {
        let a = uni(&[1, 1, 0]);
        let b = uni(&[1, -1, 0]);
        assert_eq!(a.mul(&b), uni(&[1, 0, -1]));
        let g = uni(&[1, 1, 1, 1, 1, 1]);
        assert_eq!(g.mul(&uni(&[1, -1, 0, 0, 0, 0])), BiSeries::one(1, (5, 0)));
        assert_eq!(uni(&[1, -1, 0, 0]).invert().unwrap(), uni(&[1, 1, 1, 1]));
        assert_eq!(BiSeries::zero(1, (2, 0)).invert(), Err(Error::NonUnit));
    }

    #[test]
    fn elliptic_l_and_sqrt() {
        let a = uni(&[1, -27, 0, 0, 0]);
        let l = a.nth_root(3, &cint(1, 1)).unwrap().invert().unwrap();
        assert_eq!(l.coeff(1, 0), &cint(9, 1));
        assert_eq!(l.coeff(2, 0), &cint(162, 1));
        let x = uni(&[1, -8, 0, 0]).nth_root(2, &cint(1, 1)).unwrap().invert().unwrap();
        assert_eq!(x, uni(&[1, 4, 24, 160]));
        assert!(uni(&[4, 1]).nth_root(2, &cint(1, 1)).is_err());
        let half = uni(&[1, -8, 0, 0]).pow_rational(&rat(-1, 2), &cint(1, 1)).unwrap();
        assert_eq!(half, x);
    }

    #[test]
    fn exp_log() {
        let f = uni(&[0, 6, 0, 0, 0]);
        assert_eq!(f.exp().unwrap().log().unwrap(), f);
        assert!(uni(&[1, 2]).exp().is_err());
        assert!(uni(&[2, 2]).log().is_err());
    }

    #[test]
    fn substitution_and_reversion() {
        let q2 = UniSeries::from_coeffs(Axis::Q1, vec![cint(0, 1), cint(0, 1), cint(1, 1)]);
        let s = BiSeries::from_fn(1, (1, 1), |a, b| cint(((a + b) == 1) as i64, 1));
        let r = q2.substitute(&s).unwrap();
        assert_eq!(r.coeff(1, 1), &cint(2, 1));
        // q/(1-q) reverses to Q/(1+Q)
        let m = UniSeries::from_coeffs(Axis::Q1, (0..7).map(|k| cint((k > 0) as i64, 1)).collect());
        let r = m.reversion().unwrap();
        let expect: Vec<Cyclo> = (0..7)
            .map(|k| {
                cint(
                    if k == 0 {
                        0
                    } else if k % 2 == 1 {
                        1
                    } else {
                        -1
                    },
                    1,
                )
            })
            .collect();
        assert_eq!(r.coeffs(), expect);
    }

    #[test]
    fn json_round_trip() {
        let s = BiSeries::from_fn(4, (2, 1), |a, b| Cyclo::root_of_unity(4, (a + 2 * b) as i64).scale(&rat(1, 3)));
        let j = s.to_json();
        assert!(j.starts_with("{\"vars\":[\"q1\",\"q2\"],\"trunc\":[2,1],\"zeta_order\":4"));
        assert_eq!(BiSeries::from_json(&j).unwrap(), s);
    }

    #[test]
    fn slicing() {
        let s = BiSeries::from_fn(1, (2, 1), |a, _| cint((a == 1) as i64, 1));
        assert_eq!(s.slice(1).unwrap().coeffs(), vec![cint(0, 1), cint(1, 1), cint(0, 1)]);
        assert!(s.slice(2).is_err());
    }
}
