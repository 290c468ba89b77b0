//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! Elements are stored as rational coordinates in the power basis
//! `1, ζ, …, ζ^{φ(N)-1}`, always reduced modulo the `N`-th cyclotomic
//! polynomial, so structural equality is field equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficients of `Φ_N`, lowest degree first (monic, integer).
pub fn cyclotomic_poly(n: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "cyclotomic order must be positive");
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = poly_div_exact(&num, &cyclotomic_poly(d));
        }
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quo = vec![0i64; qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn];
        quo[k] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}

/// Euler totient, the dimension of `Q(ζ_N)` over `Q`.
pub fn totient(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

/// An element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct Cyclo {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclo {
    /// The constant `r` in `Q(ζ_N)`.
    pub fn from_rational(r: BigRational, order: u32) -> Self {
        let mut coeffs = vec![BigRational::zero(); totient(order)];
        coeffs[0] = r;
        Cyclo { order, coeffs }
    }

    pub fn from_int(v: i64, order: u32) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)), order)
    }

    pub fn from_frac(p: i64, q: i64, order: u32) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(p), BigInt::from(q)), order)
    }

    pub fn zero(order: u32) -> Self {
        Self::from_int(0, order)
    }

    pub fn one(order: u32) -> Self {
        Self::from_int(1, order)
    }

    /// `ζ_N^k`, for any integer `k`.
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut raw = vec![BigRational::zero(); e.max(totient(order) - 1) + 1];
        raw[e] = BigRational::one();
        Self::from_raw(order, raw)
    }

    /// Builds an element from unreduced power-basis coordinates.
    pub fn from_raw(order: u32, mut raw: Vec<BigRational>) -> Self {
        let phi = cyclotomic_poly(order);
        let deg = phi.len() - 1;
        for k in (deg..raw.len()).rev() {
            let c = std::mem::take(&mut raw[k]);
            if c.is_zero() {
                continue;
            }
            for j in 0..deg {
                if phi[j] != 0 {
                    raw[k - deg + j] -= &c * BigRational::from_integer(BigInt::from(phi[j]));
                }
            }
        }
        raw.resize(deg, BigRational::zero());
        Cyclo { order, coeffs: raw }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Image under `Q(ζ_N) → Q(ζ_M)` with `ζ_N ↦ ζ_M^{M/N}`; requires `N | M`.
    pub fn embed(&self, target: u32) -> Result<Self> {
        if target == self.order {
            return Ok(self.clone());
        }
        if target % self.order != 0 {
            return Err(Error::Precondition(format!("cannot embed order {} into order {}", self.order, target)));
        }
        let step = (target / self.order) as usize;
        let mut raw = vec![BigRational::zero(); step * self.coeffs.len().max(1) + totient(target)];
        for (k, c) in self.coeffs.iter().enumerate() {
            raw[k * step] = c.clone();
        }
        Ok(Self::from_raw(target, raw))
    }

    fn aligned(a: &Cyclo, b: &Cyclo) -> (Cyclo, Cyclo) {
        let m = a.order.lcm(&b.order);
        (a.embed(m).unwrap(), b.embed(m).unwrap())
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclo { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip(), self.order));
        }
        // Solve M x = e_0 where M is multiplication by self.
        let n = self.coeffs.len();
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(n);
        for k in 0..n {
            let p = self * &Cyclo::root_of_unity(self.order, k as i64);
            cols.push(p.coeffs);
        }
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..n).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !m[r][c].is_zero()).ok_or(Error::DivisionByZero)?;
            m.swap(c, p);
            let pv = m[c][c].clone();
            for x in m[c].iter_mut() {
                *x /= &pv;
            }
            for r in 0..n {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for j in c..=n {
                        let t = &m[c][j] * &f;
                        m[r][j] -= t;
                    }
                }
            }
        }
        Ok(Cyclo { order: self.order, coeffs: m.into_iter().map(|row| row[n].clone()).collect() })
    }

    pub fn checked_div(&self, other: &Cyclo) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Cyclo::one(self.order);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Power-basis literal, e.g. `1/2*w^0+-3/4*w^1`; zero is `0`.
    pub fn to_literal(&self) -> String {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{}/{}*w^{}", c.numer(), c.denom(), k))
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }

    /// Literal prefixed by its `zeta_order=N` header.
    pub fn to_tagged_literal(&self) -> String {
        format!("zeta_order={} {}", self.order, self.to_literal())
    }

    /// Parses a literal produced by [`Cyclo::to_literal`].
    pub fn parse_literal(s: &str, order: u32) -> Result<Self> {
        let s = s.trim();
        let mut raw = vec![BigRational::zero(); totient(order)];
        if s == "0" {
            return Ok(Self::from_raw(order, raw));
        }
        let bad = || Error::Parse(format!("bad cyclotomic literal: {s}"));
        for term in s.split("+") {
            let (coef, pow) = term.split_once("*w^").ok_or_else(bad)?;
            let k: usize = pow.parse().map_err(|_| bad())?;
            let (p, q) = match coef.split_once('/') {
                Some((p, q)) => (p, q),
                None => (coef, "1"),
            };
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            if k >= raw.len() {
                raw.resize(k + 1, BigRational::zero());
            }
            raw[k] += BigRational::new(p, q);
        }
        Ok(Self::from_raw(order, raw))
    }

    /// Parses `zeta_order=N <literal>`.
    pub fn parse_tagged(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest =
            s.strip_prefix("zeta_order=").ok_or_else(|| Error::Parse(format!("missing zeta_order header: {s}")))?;
        let (n, lit) =
            rest.split_once(char::is_whitespace).ok_or_else(|| Error::Parse(format!("missing element: {s}")))?;
        let n: u32 = n.parse().map_err(|_| Error::Parse(format!("bad order: {n}")))?;
        if n == 0 {
            return Err(Error::Parse("zeta order must be positive".into()));
        }
        Self::parse_literal(lit, n)
    }

    /// Maximum bit length among numerators and denominators, for diagnostics.
    pub fn height_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.numer().abs().bits().max(c.denom().bits())).max().unwrap_or(0)
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = Cyclo::aligned(self, other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for Cyclo {}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_tagged_literal())
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        if self.order != rhs.order {
            let (a, b) = Cyclo::aligned(self, rhs);
            return &a + &b;
        }
        Cyclo { order: self.order, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        if self.order != rhs.order {
            let (a, b) = Cyclo::aligned(self, rhs);
            return &a - &b;
        }
        Cyclo { order: self.order, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        if self.order != rhs.order {
            let (a, b) = Cyclo::aligned(self, rhs);
            return &a * &b;
        }
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        let n = self.coeffs.len();
        let mut raw = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Cyclo::from_raw(self.order, raw)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &Cyclo) -> Cyclo {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: &Cyclo) {
        if self.order == rhs.order {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, rhs: &Cyclo) {
        if self.order == rhs.order {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a -= b;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

/// Shorthand for a rational constant.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}
