//! Picard-Fuchs operators in `M1, M2, z` and their action on I-functions and
//! on asymptotic ansatz data.

use std::collections::HashMap;

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::geometry::{GeometrySpec, Preset};
use crate::series::{Axis, BiSeries};
use crate::zseries::ZSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    M1,
    M2,
    Z,
}

/// `coeff · q^q · word`, where the word acts right to left and `q^q` last.
#[derive(Clone, Debug, PartialEq)]
pub struct PFTerm {
    pub word: Vec<Sym>,
    pub coeff: Cyclo,
    pub q: (usize, usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct PFOperator {
    pub terms: Vec<PFTerm>,
}

/// A noncommutative polynomial in the symbols, as a list of (word, coefficient).
type WordPoly = Vec<(Vec<Sym>, Cyclo)>;

fn wp_mul(a: &WordPoly, b: &WordPoly) -> WordPoly {
    let mut out = Vec::new();
    for (wa, ca) in a {
        for (wb, cb) in b {
            let mut w = wa.clone();
            w.extend(wb);
            out.push((w, ca * cb));
        }
    }
    wp_collect(out)
}

/// Merges equal words, keeping first-appearance order.
fn wp_collect(v: WordPoly) -> WordPoly {
    let mut out: WordPoly = Vec::new();
    for (w, c) in v {
        if let Some(e) = out.iter_mut().find(|(x, _)| *x == w) {
            e.1 += &c;
        } else {
            out.push((w, c));
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// `a1·M1 + a2·M2 + k·z`.
fn linear(a: (i64, i64), k: i64, order: u32) -> WordPoly {
    let mut v = Vec::new();
    if a.0 != 0 {
        v.push((vec![Sym::M1], Cyclo::from_int(a.0, order)));
    }
    if a.1 != 0 {
        v.push((vec![Sym::M2], Cyclo::from_int(a.1, order)));
    }
    if k != 0 {
        v.push((vec![Sym::Z], Cyclo::from_int(k, order)));
    }
    v
}

impl PFOperator {
    /// `lead − q^e · tail`.
    fn from_parts(lead: WordPoly, q: (usize, usize), tail: WordPoly) -> Self {
        let mut terms: Vec<PFTerm> = lead.into_iter().map(|(word, coeff)| PFTerm { word, coeff, q: (0, 0) }).collect();
        terms.extend(tail.into_iter().map(|(word, coeff)| PFTerm { word, coeff: -coeff, q }));
        PFOperator { terms }
    }

    /// Highest total number of `M`/`z` symbols in a term.
    pub fn degree(&self) -> usize {
        self.terms.iter().map(|t| t.word.len()).max().unwrap_or(0)
    }

    /// Application to a class-valued series.
    pub fn apply(&self, s: &ZSeries) -> Result<ZSeries> {
        let mut memo: HashMap<Vec<Sym>, ZSeries> = HashMap::new();
        memo.insert(vec![], s.clone());
        let mut acc: Option<ZSeries> = None;
        for t in &self.terms {
            let v = word_apply_z(&t.word, &mut memo)?;
            let v = v.scale(&t.coeff).shift_q(t.q);
            acc = Some(match acc {
                None => v,
                Some(a) => a.add(&v),
            });
        }
        Ok(acc.unwrap_or_else(|| s.scale(&Cyclo::zero(s.ring().order()))))
    }

    /// `e^{-U/z} · op · e^{U/z} Σ R_k z^k`, as coefficients of `z^0, z^1, …`.
    pub fn conjugated_apply(&self, a: &AnsatzSeries) -> Vec<BiSeries> {
        let mut memo: HashMap<Vec<Sym>, Vec<BiSeries>> = HashMap::new();
        memo.insert(vec![], a.r.clone());
        let trunc = a.big_l.trunc();
        let order = a.big_l.order();
        let len = a.r.len() + self.degree();
        let mut acc = vec![BiSeries::zero(order, trunc); len];
        for t in &self.terms {
            let v = word_apply_conj(&t.word, a, &mut memo);
            for (k, s) in v.iter().enumerate() {
                acc[k] = acc[k].add(&s.scale(&t.coeff).shift(t.q));
            }
        }
        acc
    }
}

fn word_apply_z(word: &[Sym], memo: &mut HashMap<Vec<Sym>, ZSeries>) -> Result<ZSeries> {
    if let Some(v) = memo.get(word) {
        return Ok(v.clone());
    }
    let inner = word_apply_z(&word[1..], memo)?;
    let v = match word[0] {
        Sym::M1 => inner.insertion(0)?,
        Sym::M2 => inner.insertion(1)?,
        Sym::Z => inner.mul_z(1)?,
    };
    memo.insert(word.to_vec(), v.clone());
    Ok(v)
}

fn word_apply_conj(word: &[Sym], a: &AnsatzSeries, memo: &mut HashMap<Vec<Sym>, Vec<BiSeries>>) -> Vec<BiSeries> {
    if let Some(v) = memo.get(word) {
        return v.clone();
    }
    let inner = word_apply_conj(&word[1..], a, memo);
    let (order, trunc) = (a.big_l.order(), a.big_l.trunc());
    let mut v = vec![BiSeries::zero(order, trunc); inner.len() + 1];
    match word[0] {
        Sym::Z => {
            for (k, s) in inner.into_iter().enumerate() {
                v[k + 1] = s;
            }
        }
        sym => {
            let (mult, axis) = if sym == Sym::M1 { (&a.big_l, Axis::Q1) } else { (&a.ud, Axis::Q2) };
            for (k, s) in inner.iter().enumerate() {
                v[k] = v[k].add(&mult.mul(s));
                v[k + 1] = v[k + 1].add(&s.euler(axis));
            }
        }
    }
    memo.insert(word.to_vec(), v.clone());
    v
}

/// Asymptotic data `(𝕃, 𝕌𝔻, R_0..R_K)` at a fixed point.
#[derive(Clone, Debug, PartialEq)]
pub struct AnsatzSeries {
    pub point: (usize, usize),
    pub big_l: BiSeries,
    pub ud: BiSeries,
    pub r: Vec<BiSeries>,
}

/// The two closed-form operators of each preset (the local second operator
/// uses `q2`).
pub fn pf_operators(g: &GeometrySpec) -> (PFOperator, PFOperator) {
    let n = g.zeta_order;
    let c = |v: i64| Cyclo::from_int(v, n);
    let pow = |s: Sym, e: usize| vec![(vec![s; e], c(1))];
    let lead = |s: Sym, e: usize, k: i64| {
        let mut p = pow(s, e);
        p.push((vec![], c(k)));
        p
    };
    let prod = |a: (i64, i64), ks: std::ops::RangeInclusive<i64>| {
        ks.fold(vec![(vec![], c(1))], |acc, k| wp_mul(&acc, &linear(a, k, n)))
    };
    match g.preset {
        Preset::LocalP1P1 => {
            let tail = wp_mul(&linear((2, 2), 0, n), &linear((2, 2), 1, n));
            (
                PFOperator::from_parts(lead(Sym::M1, 2, -1), (1, 0), tail.clone()),
                PFOperator::from_parts(lead(Sym::M2, 2, 1), (0, 1), tail),
            )
        }
        Preset::ESurface32 => (
            PFOperator::from_parts(lead(Sym::M1, 3, -1), (1, 0), prod((3, 2), 1..=3)),
            PFOperator::from_parts(lead(Sym::M2, 2, -1), (0, 1), prod((3, 2), 1..=2)),
        ),
        Preset::E3fold33 => (
            PFOperator::from_parts(lead(Sym::M1, 3, -1), (1, 0), prod((3, 3), 1..=3)),
            PFOperator::from_parts(lead(Sym::M2, 3, -1), (0, 1), prod((3, 3), 1..=3)),
        ),
        Preset::K3Fib42 => (
            PFOperator::from_parts(lead(Sym::M1, 4, -1), (1, 0), prod((4, 2), 1..=4)),
            PFOperator::from_parts(lead(Sym::M2, 2, -1), (0, 1), prod((4, 2), 1..=2)),
        ),
    }
}

/// Operators derived from the twist data: `∏_i (M_k − λ_{k,i}) − q_k · (twist factors)`.
pub fn derived_pf_operators(g: &GeometrySpec) -> (PFOperator, PFOperator) {
    let n = g.zeta_order;
    let one: WordPoly = vec![(vec![], Cyclo::one(n))];
    let make = |axis: usize| {
        let (sym, weights) = if axis == 0 { (Sym::M1, &g.weights1) } else { (Sym::M2, &g.weights2) };
        let lead = weights
            .iter()
            .fold(one.clone(), |acc, l| wp_mul(&acc, &vec![(vec![sym], Cyclo::one(n)), (vec![], -l.clone())]));
        let mut tail = one.clone();
        for &(a1, a2) in &g.a_twists {
            let ak = if axis == 0 { a1 } else { a2 };
            for m in 1..=ak {
                tail = wp_mul(&tail, &linear((a1, a2), m, n));
            }
        }
        for &(b1, b2) in &g.b_twists {
            let bk = if axis == 0 { b1 } else { b2 };
            for m in 0..-bk {
                tail = wp_mul(&tail, &linear((b1, b2), -m, n));
            }
        }
        let q = if axis == 0 { (1, 0) } else { (0, 1) };
        PFOperator::from_parts(wp_collect(lead), q, tail)
    };
    (make(0), make(1))
}

/// Result of checking that an operator kills a series.
#[derive(Clone, Debug, PartialEq)]
pub struct Annihilation {
    pub operator: usize,
    /// Exponent range `[exact_lo, top]` that was checked.
    pub z_range: (i32, i32),
    pub first_nonzero: Option<((usize, usize), i32)>,
}

/// Applies both operators of the geometry and reports any surviving coefficient.
pub fn verify_annihilation(g: &GeometrySpec, i: &ZSeries) -> Result<Vec<Annihilation>> {
    let (a, b) = pf_operators(g);
    [a, b]
        .iter()
        .enumerate()
        .map(|(k, op)| {
            let r = op.apply(i)?;
            if r.exact_lo() > 0 {
                return Err(Error::InsufficientDepth { needed: 0, lo: r.exact_lo() });
            }
            Ok(Annihilation { operator: k + 1, z_range: (r.exact_lo(), r.top()), first_nonzero: r.first_nonzero() })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::ClassRing;
    use crate::ifunction::small_i_function;

    #[test]
    fn operators_annihilate_small_i() {
        for p in Preset::ALL {
            let r = ClassRing::preset(p);
            let i = small_i_function(&r, (4, 2), (-6, 4)).unwrap();
            for a in verify_annihilation(&r.geometry, &i).unwrap() {
                assert_eq!(a.first_nonzero, None, "{p} op{}", a.operator);
            }
        }
    }

    #[test]
    fn derived_operators_agree_on_i() {
        for p in Preset::ALL {
            let r = ClassRing::preset(p);
            let i = small_i_function(&r, (3, 2), (-6, 4)).unwrap();
            let (a, b) = pf_operators(&r.geometry);
            let (c, d) = derived_pf_operators(&r.geometry);
            assert!(a.apply(&i).unwrap().first_difference(&c.apply(&i).unwrap()).is_none(), "{p}");
            assert!(b.apply(&i).unwrap().first_difference(&d.apply(&i).unwrap()).is_none(), "{p}");
        }
    }

    #[test]
    fn zero_ansatz_maps_to_zero() {
        let g = Preset::LocalP1P1.spec();
        let (a, _) = pf_operators(&g);
        let z = BiSeries::zero(4, (2, 2));
        let an = AnsatzSeries { point: (0, 0), big_l: z.clone(), ud: z.clone(), r: vec![z.clone()] };
        assert!(a.conjugated_apply(&an).iter().all(BiSeries::is_zero));
    }
}
