//! Exact Gaussian elimination over `Q(ζ_N)`.

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};

/// Outcome of solving a possibly non-square system `A x = b`.
#[derive(Clone, Debug, PartialEq)]
pub enum Solution {
    Unique(Vec<Cyclo>),
    /// Consistent, with this many free parameters.
    Ambiguous(usize),
    Inconsistent,
}

/// Solves `A x = b` where `A` is given by rows.
pub fn solve_system(a: &[Vec<Cyclo>], b: &[Cyclo], ncols: usize, order: u32) -> Solution {
    let nrows = a.len();
    let mut m: Vec<Vec<Cyclo>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..=ncols {
                    let t = &m[row][j] * &f;
                    m[r][j] -= &t;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == nrows {
            break;
        }
    }
    if m[row..].iter().any(|r| !r[ncols].is_zero()) {
        return Solution::Inconsistent;
    }
    if pivots.len() < ncols {
        return Solution::Ambiguous(ncols - pivots.len());
    }
    let mut x = vec![Cyclo::zero(order); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][ncols].clone();
    }
    Solution::Unique(x)
}

/// Inverse of a square matrix.
pub fn inverse(a: &[Vec<Cyclo>], order: u32) -> Result<Vec<Vec<Cyclo>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let e: Vec<Cyclo> = (0..n).map(|i| if i == k { Cyclo::one(order) } else { Cyclo::zero(order) }).collect();
        match solve_system(a, &e, n, order) {
            Solution::Unique(x) => cols.push(x),
            _ => return Err(Error::DivisionByZero),
        }
    }
    Ok((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

pub fn mat_vec(m: &[Vec<Cyclo>], v: &[Cyclo], order: u32) -> Vec<Cyclo> {
    m.iter()
        .map(|row| {
            row.iter().zip(v).fold(Cyclo::zero(order), |mut acc, (a, b)| {
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
                acc
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> Cyclo {
        Cyclo::from_int(v, 1)
    }

    #[test]
    fn square_inverse() {
        let a = vec![vec![c(2), c(1)], vec![c(1), c(1)]];
        let inv = inverse(&a, 1).unwrap();
        assert_eq!(inv, vec![vec![c(1), c(-1)], vec![c(-1), c(2)]]);
    }

    #[test]
    fn classification() {
        let a = vec![vec![c(1), c(1)], vec![c(2), c(2)]];
        assert_eq!(solve_system(&a, &[c(1), c(2)], 2, 1), Solution::Ambiguous(1));
        assert_eq!(solve_system(&a, &[c(1), c(3)], 2, 1), Solution::Inconsistent);
        let a = vec![vec![c(1)], vec![c(2)], vec![c(3)]];
        assert_eq!(solve_system(&a, &[c(2), c(4), c(6)], 1, 1), Solution::Unique(vec![c(2)]));
    }
}
