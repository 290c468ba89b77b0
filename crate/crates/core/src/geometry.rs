//! The four twisted geometries on `P^{n1} × P^{n2}` and their torus weights.

use std::fmt;
use std::str::FromStr;

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Preset {
    LocalP1P1,
    ESurface32,
    E3fold33,
    K3Fib42,
}

impl Preset {
    pub const ALL: [Preset; 4] = [Preset::LocalP1P1, Preset::ESurface32, Preset::E3fold33, Preset::K3Fib42];

    pub fn name(self) -> &'static str {
        match self {
            Preset::LocalP1P1 => "LOCAL_P1P1",
            Preset::ESurface32 => "E_SURFACE_32",
            Preset::E3fold33 => "E_3FOLD_33",
            Preset::K3Fib42 => "K3_FIB_42",
        }
    }

    pub fn spec(self) -> GeometrySpec {
        GeometrySpec::preset(self)
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown { kind: "preset", name: s.to_string() })
    }
}

/// Twist data and specialized weights of a geometry.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometrySpec {
    pub preset: Preset,
    pub n: (usize, usize),
    /// Positive (bundle) twists `(a1, a2)`.
    pub a_twists: Vec<(i64, i64)>,
    /// Negative (dual) twists `(b1, b2)`, entries `≤ 0`.
    pub b_twists: Vec<(i64, i64)>,
    pub weights1: Vec<Cyclo>,
    pub weights2: Vec<Cyclo>,
    pub zeta_order: u32,
}

impl GeometrySpec {
    pub fn preset(p: Preset) -> Self {
        let z = |n: u32, k: i64, order: u32| Cyclo::root_of_unity(n, k).embed(order).unwrap();
        match p {
            Preset::LocalP1P1 => GeometrySpec {
                preset: p,
                n: (1, 1),
                a_twists: vec![],
                b_twists: vec![(-2, -2)],
                weights1: vec![z(2, 0, 4), z(2, 1, 4)],
                weights2: vec![z(4, 1, 4), z(4, 3, 4)],
                zeta_order: 4,
            },
            Preset::ESurface32 => GeometrySpec {
                preset: p,
                n: (2, 1),
                a_twists: vec![(3, 2)],
                b_twists: vec![],
                weights1: (0..3).map(|k| z(3, k, 12)).collect(),
                weights2: vec![z(2, 0, 12), z(2, 1, 12)],
                zeta_order: 12,
            },
            Preset::E3fold33 => GeometrySpec {
                preset: p,
                n: (2, 2),
                a_twists: vec![(3, 3)],
                b_twists: vec![],
                weights1: (0..3).map(|k| z(3, k, 3)).collect(),
                weights2: (0..3).map(|k| z(3, k, 3)).collect(),
                zeta_order: 3,
            },
            Preset::K3Fib42 => GeometrySpec {
                preset: p,
                n: (3, 1),
                a_twists: vec![(4, 2)],
                b_twists: vec![],
                weights1: (0..4).map(|k| z(4, k, 4)).collect(),
                weights2: vec![z(2, 0, 4), z(2, 1, 4)],
                zeta_order: 4,
            },
        }
    }

    /// `Σ a_k − Σ b_k = n_k + 1` for both factors.
    pub fn is_calabi_yau(&self) -> bool {
        let sum = |f: fn(&(i64, i64)) -> i64| {
            self.a_twists.iter().map(f).sum::<i64>() - self.b_twists.iter().map(f).sum::<i64>()
        };
        sum(|t| t.0) == self.n.0 as i64 + 1 && sum(|t| t.1) == self.n.1 as i64 + 1
    }

    pub fn weights_distinct(&self) -> bool {
        let distinct = |w: &[Cyclo]| w.iter().enumerate().all(|(i, a)| w[i + 1..].iter().all(|b| a != b));
        distinct(&self.weights1) && distinct(&self.weights2)
    }

    /// Fixed points `(i, j)` in lexicographic order.
    pub fn fixed_points(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for i in 0..=self.n.0 {
            for j in 0..=self.n.1 {
                v.push((i, j));
            }
        }
        v
    }

    pub fn weight(&self, axis: usize, k: usize) -> &Cyclo {
        if axis == 0 {
            &self.weights1[k]
        } else {
            &self.weights2[k]
        }
    }

    pub fn check_fixed_point(&self, p: (usize, usize)) -> Result<()> {
        if p.0 > self.n.0 || p.1 > self.n.1 {
            return Err(Error::Precondition(format!("fixed point ({},{}) out of range for {}", p.0, p.1, self.preset)));
        }
        Ok(())
    }
}
