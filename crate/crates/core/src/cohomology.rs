//! Specialized equivariant cohomology of `P^{n1} × P^{n2}`.
//!
//! Classes are coordinate vectors in the monomial basis `H1^a H2^b`
//! (`a ≤ n1`, `b ≤ n2`, lexicographic). Multiplication goes through the
//! fixed-point transform, where the ring is a product of copies of the field.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::geometry::{GeometrySpec, Preset};
use crate::linalg;

#[derive(Debug)]
pub struct ClassRing {
    pub geometry: GeometrySpec,
    pub basis: Vec<(usize, usize)>,
    pub fixed_points: Vec<(usize, usize)>,
    restrict_m: Vec<Vec<Cyclo>>,
    interp_m: Vec<Vec<Cyclo>>,
    h_mul: [Vec<Vec<Cyclo>>; 2],
}

impl ClassRing {
    pub fn new(geometry: GeometrySpec) -> Arc<Self> {
        let order = geometry.zeta_order;
        let basis: Vec<(usize, usize)> = geometry.fixed_points();
        let fixed_points = basis.clone();
        let restrict_m: Vec<Vec<Cyclo>> = fixed_points
            .iter()
            .map(|&(i, j)| {
                basis
                    .iter()
                    .map(|&(a, b)| geometry.weights1[i].pow(a as u32) * geometry.weights2[j].pow(b as u32))
                    .collect()
            })
            .collect();
        let interp_m = linalg::inverse(&restrict_m, order).expect("weights are distinct");
        let dim = basis.len();
        let mut ring = ClassRing { geometry, basis, fixed_points, restrict_m, interp_m, h_mul: [vec![], vec![]] };
        for axis in 0..2 {
            let h = ring.restrict(&ring.monomial_coords(if axis == 0 { (1, 0) } else { (0, 1) }));
            // column k = H_axis · e_k
            let cols: Vec<Vec<Cyclo>> = (0..dim)
                .map(|k| {
                    let mut e = vec![Cyclo::zero(order); dim];
                    e[k] = Cyclo::one(order);
                    let r = ring.restrict(&e);
                    ring.interpolate(&h.iter().zip(&r).map(|(x, y)| x * y).collect::<Vec<_>>())
                })
                .collect();
            ring.h_mul[axis] = (0..dim).map(|i| (0..dim).map(|k| cols[k][i].clone()).collect()).collect();
        }
        Arc::new(ring)
    }

    pub fn preset(p: Preset) -> Arc<Self> {
        Self::new(p.spec())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn order(&self) -> u32 {
        self.geometry.zeta_order
    }

    pub fn basis_index(&self, a: usize, b: usize) -> Option<usize> {
        self.basis.iter().position(|&m| m == (a, b))
    }

    /// Coordinates of `H1^a H2^b` for arbitrary exponents (reduced if needed).
    pub fn monomial_coords(&self, (a, b): (usize, usize)) -> Vec<Cyclo> {
        let order = self.order();
        if let Some(k) = self.basis_index(a, b) {
            let mut v = vec![Cyclo::zero(order); self.dim()];
            v[k] = Cyclo::one(order);
            return v;
        }
        let vals: Vec<Cyclo> = self
            .fixed_points
            .iter()
            .map(|&(i, j)| self.geometry.weights1[i].pow(a as u32) * self.geometry.weights2[j].pow(b as u32))
            .collect();
        self.interpolate(&vals)
    }

    pub fn restrict(&self, coords: &[Cyclo]) -> Vec<Cyclo> {
        linalg::mat_vec(&self.restrict_m, coords, self.order())
    }

    pub fn interpolate(&self, vals: &[Cyclo]) -> Vec<Cyclo> {
        linalg::mat_vec(&self.interp_m, vals, self.order())
    }

    pub fn mul_coords(&self, a: &[Cyclo], b: &[Cyclo]) -> Vec<Cyclo> {
        let ra = self.restrict(a);
        let rb = self.restrict(b);
        self.interpolate(&ra.iter().zip(&rb).map(|(x, y)| x * y).collect::<Vec<_>>())
    }

    /// Matrix of multiplication by `H_{axis+1}` in the monomial basis.
    pub fn h_matrix(&self, axis: usize) -> &[Vec<Cyclo>] {
        &self.h_mul[axis]
    }

    pub fn mul_h(&self, axis: usize, coords: &[Cyclo]) -> Vec<Cyclo> {
        linalg::mat_vec(&self.h_mul[axis], coords, self.order())
    }
}

/// An element of the specialized cohomology ring.
#[derive(Clone, Debug)]
pub struct CohomClass {
    pub ring: Arc<ClassRing>,
    pub coords: Vec<Cyclo>,
}

impl PartialEq for CohomClass {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.coords == other.coords
    }
}

impl CohomClass {
    pub fn new(ring: &Arc<ClassRing>, coords: Vec<Cyclo>) -> Self {
        assert_eq!(coords.len(), ring.dim());
        CohomClass { ring: ring.clone(), coords }
    }

    pub fn zero(ring: &Arc<ClassRing>) -> Self {
        Self::new(ring, vec![Cyclo::zero(ring.order()); ring.dim()])
    }

    pub fn one(ring: &Arc<ClassRing>) -> Self {
        Self::monomial(ring, 0, 0)
    }

    pub fn scalar(ring: &Arc<ClassRing>, c: Cyclo) -> Self {
        let mut v = Self::zero(ring);
        v.coords[0] = c;
        v
    }

    pub fn monomial(ring: &Arc<ClassRing>, a: usize, b: usize) -> Self {
        Self::new(ring, ring.monomial_coords((a, b)))
    }

    pub fn restrict(&self) -> Vec<Cyclo> {
        self.ring.restrict(&self.coords)
    }

    pub fn interpolate(ring: &Arc<ClassRing>, vals: &[Cyclo]) -> Self {
        Self::new(ring, ring.interpolate(vals))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.ring, self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.ring, self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.ring, self.ring.mul_coords(&self.coords, &o.coords))
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        Self::new(&self.ring, self.coords.iter().map(|a| a * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Cyclo::is_zero)
    }
}

/// The classes `φ_{ij}`, `φ^{ij}` and Euler classes `e_{ij}` of local `P^1 × P^1`.
#[derive(Clone, Debug)]
pub struct LocalClasses {
    pub phi_lower: CohomClass,
    pub phi_upper: CohomClass,
    pub euler: Cyclo,
}

pub fn local_p1p1_classes(ring: &Arc<ClassRing>) -> Result<BTreeMap<(usize, usize), LocalClasses>> {
    let g = &ring.geometry;
    if g.preset != Preset::LocalP1P1 {
        return Err(Error::Precondition(format!("local classes need LOCAL_P1P1, got {}", g.preset)));
    }
    let (al, be) = (&g.weights1, &g.weights2);
    let h1 = CohomClass::monomial(ring, 1, 0);
    let h2 = CohomClass::monomial(ring, 0, 1);
    let one = CohomClass::one(ring);
    let mut out = BTreeMap::new();
    for i in 0..2 {
        for j in 0..2 {
            let twist = (&al[i] + &be[j]).scale_int(-2);
            let e = &(&(&al[i] - &al[1 - i]) * &(&be[j] - &be[1 - j])) * &twist;
            let f1 = h1.sub(&one.scale(&al[1 - i]));
            let f2 = h2.sub(&one.scale(&be[1 - j]));
            let phi = f1.mul(&f2).scale(&(&twist * &e.inv()?));
            let phi_up = phi.scale(&e);
            out.insert((i, j), LocalClasses { phi_lower: phi, phi_upper: phi_up, euler: e });
        }
    }
    Ok(out)
}
