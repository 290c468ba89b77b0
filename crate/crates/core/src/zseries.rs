//! Class-valued Laurent polynomials in `z` with power-series coefficients in `q`.
//!
//! A [`ZSeries`] stores, for each `(d1, d2)` within the truncation and each
//! `z`-exponent in a fixed window `[lo, hi]`, a cohomology class in the
//! monomial basis. Exponents below `exact_lo` are unreliable: operators that
//! need the coefficient one step lower (like `z·D`) push `exact_lo` upward.

use std::sync::Arc;

use rayon::prelude::*;

use crate::cohomology::ClassRing;
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::series::BiSeries;

#[derive(Clone, Debug)]
pub struct ZSeries {
    ring: Arc<ClassRing>,
    trunc: (usize, usize),
    lo: i32,
    hi: i32,
    exact_lo: i32,
    top: i32,
    data: Vec<Cyclo>,
}

impl ZSeries {
    pub fn zero(ring: &Arc<ClassRing>, trunc: (usize, usize), window: (i32, i32)) -> Self {
        assert!(window.0 <= 0 && window.1 >= 0, "window must contain z^0");
        let n = (trunc.0 + 1) * (trunc.1 + 1) * (window.1 - window.0 + 1) as usize * ring.dim();
        ZSeries {
            ring: ring.clone(),
            trunc,
            lo: window.0,
            hi: window.1,
            exact_lo: window.0,
            top: window.0 - 1,
            data: vec![Cyclo::zero(ring.order()); n],
        }
    }

    pub fn ring(&self) -> &Arc<ClassRing> {
        &self.ring
    }

    pub fn trunc(&self) -> (usize, usize) {
        self.trunc
    }

    pub fn window(&self) -> (i32, i32) {
        (self.lo, self.hi)
    }

    /// Lowest `z`-exponent whose coefficients are exact.
    pub fn exact_lo(&self) -> i32 {
        self.exact_lo
    }

    /// Highest `z`-exponent that may be nonzero.
    pub fn top(&self) -> i32 {
        self.top
    }

    pub(crate) fn set_meta(&mut self, exact_lo: i32, top: i32) {
        self.exact_lo = exact_lo;
        self.top = top;
    }

    fn nz(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    fn offset(&self, d: (usize, usize), m: i32) -> usize {
        let qd = d.0 * (self.trunc.1 + 1) + d.1;
        (qd * self.nz() + (m - self.lo) as usize) * self.ring.dim()
    }

    /// Class coordinates at `q^d z^m`.
    pub fn class_at(&self, d: (usize, usize), m: i32) -> &[Cyclo] {
        let o = self.offset(d, m);
        &self.data[o..o + self.ring.dim()]
    }

    pub fn class_at_mut(&mut self, d: (usize, usize), m: i32) -> &mut [Cyclo] {
        let o = self.offset(d, m);
        let dim = self.ring.dim();
        &mut self.data[o..o + dim]
    }

    fn degrees(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for a in 0..=self.trunc.0 {
            for b in 0..=self.trunc.1 {
                v.push((a, b));
            }
        }
        v
    }

    fn check_exact(&self, m: i32) -> Result<()> {
        if m < self.exact_lo {
            return Err(Error::InsufficientDepth { needed: m, lo: self.exact_lo });
        }
        Ok(())
    }

    /// Coefficient of `z^m` as one series per basis element.
    pub fn z_coefficient(&self, m: i32) -> Result<Vec<BiSeries>> {
        self.check_exact(m)?;
        let order = self.ring.order();
        if m > self.hi || m > self.top {
            return Ok(vec![BiSeries::zero(order, self.trunc); self.ring.dim()]);
        }
        Ok((0..self.ring.dim())
            .map(|k| BiSeries::from_fn(order, self.trunc, |a, b| self.class_at((a, b), m)[k].clone()))
            .collect())
    }

    /// Coefficient of `z^m` restricted to fixed point `p` (lexicographic index).
    pub fn restricted_coefficient(&self, m: i32, p: usize) -> Result<BiSeries> {
        self.check_exact(m)?;
        let order = self.ring.order();
        if m > self.hi || m > self.top {
            return Ok(BiSeries::zero(order, self.trunc));
        }
        Ok(BiSeries::from_fn(order, self.trunc, |a, b| self.ring.restrict(self.class_at((a, b), m))[p].clone()))
    }

    /// `M_axis = H_axis + z·D_axis`.
    pub fn insertion(&self, axis: usize) -> Result<Self> {
        let new_top = self.top + 1;
        if new_top > self.hi {
            return Err(Error::WindowOverflow { needed: new_top, hi: self.hi });
        }
        let mut out = ZSeries::zero(&self.ring, self.trunc, (self.lo, self.hi));
        let degs = self.degrees();
        let nz = self.nz();
        let dim = self.ring.dim();
        let blocks: Vec<Vec<Cyclo>> = degs
            .par_iter()
            .map(|&d| {
                let k = if axis == 0 { d.0 } else { d.1 } as i64;
                let mut blk = Vec::with_capacity(nz * dim);
                for m in self.lo..=self.hi {
                    let mut v = self.ring.mul_h(axis, self.class_at(d, m));
                    if k != 0 && m > self.lo {
                        for (x, y) in v.iter_mut().zip(self.class_at(d, m - 1)) {
                            *x += &y.scale_int(k);
                        }
                    }
                    blk.extend(v);
                }
                blk
            })
            .collect();
        out.data = blocks.into_iter().flatten().collect();
        out.exact_lo = self.exact_lo + 1;
        out.top = new_top;
        Ok(out)
    }

    /// Multiplication by `z^k`.
    pub fn mul_z(&self, k: i32) -> Result<Self> {
        if self.top + k > self.hi {
            return Err(Error::WindowOverflow { needed: self.top + k, hi: self.hi });
        }
        let mut out = ZSeries::zero(&self.ring, self.trunc, (self.lo, self.hi));
        for d in self.degrees() {
            for m in self.lo..=self.hi {
                let src = m - k;
                if src >= self.lo && src <= self.hi {
                    let v = self.class_at(d, src).to_vec();
                    out.class_at_mut(d, m).clone_from_slice(&v);
                }
            }
        }
        out.exact_lo = (self.exact_lo + k).max(self.lo);
        out.top = self.top + k;
        Ok(out)
    }

    fn combine(&self, o: &Self, f: impl Fn(&Cyclo, &Cyclo) -> Cyclo) -> Self {
        assert!(Arc::ptr_eq(&self.ring, &o.ring), "ZSeries over different rings");
        assert_eq!((self.lo, self.hi), (o.lo, o.hi), "ZSeries windows differ");
        let trunc = (self.trunc.0.min(o.trunc.0), self.trunc.1.min(o.trunc.1));
        let mut out = ZSeries::zero(&self.ring, trunc, (self.lo, self.hi));
        for d in out.degrees() {
            for m in self.lo..=self.hi {
                let v: Vec<Cyclo> = self.class_at(d, m).iter().zip(o.class_at(d, m)).map(|(a, b)| f(a, b)).collect();
                out.class_at_mut(d, m).clone_from_slice(&v);
            }
        }
        out.exact_lo = self.exact_lo.max(o.exact_lo);
        out.top = self.top.max(o.top);
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, |a, b| a - b)
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = &*x * c;
        }
        out
    }

    /// Multiplication by a scalar power series in `q`.
    pub fn mul_series(&self, s: &BiSeries) -> Self {
        let trunc = (self.trunc.0.min(s.trunc().0), self.trunc.1.min(s.trunc().1));
        let mut out = ZSeries::zero(&self.ring, trunc, (self.lo, self.hi));
        let nz_s: Vec<((usize, usize), Cyclo)> = s
            .iter()
            .filter(|((a, b), c)| *a <= trunc.0 && *b <= trunc.1 && !c.is_zero())
            .map(|(d, c)| (d, c.clone()))
            .collect();
        let (mlo, mhi) = (self.exact_lo.max(self.lo), self.top.min(self.hi));
        let degs = out.degrees();
        let dim = self.ring.dim();
        let order = self.ring.order();
        let blocks: Vec<Vec<Cyclo>> = degs
            .par_iter()
            .map(|&d| {
                let mut blk = vec![Cyclo::zero(order); self.nz() * dim];
                for ((e1, e2), c) in &nz_s {
                    if *e1 > d.0 || *e2 > d.1 {
                        continue;
                    }
                    let src = (d.0 - e1, d.1 - e2);
                    for m in mlo..=mhi {
                        let base = (m - self.lo) as usize * dim;
                        for (k, x) in self.class_at(src, m).iter().enumerate() {
                            if !x.is_zero() {
                                blk[base + k] += &(x * c);
                            }
                        }
                    }
                }
                blk
            })
            .collect();
        out.data = blocks.into_iter().flatten().collect();
        out.exact_lo = self.exact_lo;
        out.top = self.top;
        out
    }

    /// True when every exact coefficient vanishes.
    pub fn is_zero_exact(&self) -> bool {
        self.first_nonzero().is_none()
    }

    /// First `(d, m)` (by degree, then `z`-exponent) with a nonzero exact coefficient.
    pub fn first_nonzero(&self) -> Option<((usize, usize), i32)> {
        for d in self.degrees() {
            for m in self.exact_lo.max(self.lo)..=self.hi {
                if self.class_at(d, m).iter().any(|c| !c.is_zero()) {
                    return Some((d, m));
                }
            }
        }
        None
    }

    /// Exact agreement with another series on the common exact range.
    pub fn first_difference(&self, o: &Self) -> Option<((usize, usize), i32)> {
        self.sub(o).first_nonzero()
    }

    /// Highest exponent with a nonzero coefficient, if any.
    pub fn populated_top(&self) -> Option<i32> {
        (self.lo..=self.hi)
            .rev()
            .find(|&m| self.degrees().iter().any(|&d| self.class_at(d, m).iter().any(|c| !c.is_zero())))
    }

    /// JSON: one record per nonzero `(d, m)` with the monomial-basis class.
    pub fn to_json(&self) -> String {
        let mut terms = Vec::new();
        for d in self.degrees() {
            for m in self.exact_lo.max(self.lo)..=self.hi {
                let c = self.class_at(d, m);
                if c.iter().any(|x| !x.is_zero()) {
                    terms.push(serde_json::json!({
                        "exp": [d.0, d.1],
                        "z_exp": m,
                        "class": c.iter().map(Cyclo::to_literal).collect::<Vec<_>>(),
                    }));
                }
            }
        }
        serde_json::json!({
            "vars": ["q1", "q2"],
            "trunc": [self.trunc.0, self.trunc.1],
            "zeta_order": self.ring.order(),
            "basis": self.ring.basis.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
            "terms": terms,
        })
        .to_string()
    }
}

impl ZSeries {
    /// Multiplication by `q1^e1 q2^e2`.
    pub fn shift_q(&self, e: (usize, usize)) -> Self {
        let mut out = ZSeries::zero(&self.ring, self.trunc, (self.lo, self.hi));
        for d in self.degrees() {
            if d.0 < e.0 || d.1 < e.1 {
                continue;
            }
            let src = (d.0 - e.0, d.1 - e.1);
            for m in self.lo..=self.hi {
                let v = self.class_at(src, m).to_vec();
                out.class_at_mut(d, m).clone_from_slice(&v);
            }
        }
        out.exact_lo = self.exact_lo;
        out.top = self.top;
        out
    }
}
