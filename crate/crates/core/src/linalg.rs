//! Dense symmetric rational matrices and the exact PSD test.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::numeric::Rational;

/// A symmetric `dim x dim` matrix stored densely, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<Rational>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymMatrix {
            dim,
            data: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Rational::from_integer(1.into()));
        }
        m
    }

    /// Rejects non-square or non-symmetric input.
    #[allow(clippy::needless_range_loop)]
    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension("matrix is not square".into()));
        }
        for i in 0..dim {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(SymMatrix {
            dim,
            data: rows.iter().flatten().cloned().collect(),
        })
    }

    /// Builds from the upper triangle listed row by row (`d(d+1)/2` values).
    pub fn from_upper(dim: usize, upper: &[Rational]) -> Result<Self> {
        if upper.len() != dim * (dim + 1) / 2 {
            return Err(Error::Dimension(alloc::format!(
                "expected {} upper-triangle entries for dimension {dim}, got {}",
                dim * (dim + 1) / 2,
                upper.len()
            )));
        }
        let mut m = Self::zeros(dim);
        let mut it = upper.iter();
        for i in 0..dim {
            for j in i..dim {
                m.set(i, j, it.next().unwrap().clone());
            }
        }
        Ok(m)
    }

    pub fn upper(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.dim * (self.dim + 1) / 2);
        for i in 0..self.dim {
            for j in i..self.dim {
                out.push(self.get(i, j).clone());
            }
        }
        out
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.dim + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[j * self.dim + i] = v.clone();
        self.data[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.data.chunks(self.dim.max(1)).take(self.dim).map(|r| r.to_vec()).collect()
    }

    /// Frobenius inner product `sum_ij A_ij B_ij`.
    pub fn inner(&self, other: &SymMatrix) -> Rational {
        assert_eq!(self.dim, other.dim, "inner product dimension");
        self.data
            .iter()
            .zip(&other.data)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| a * b)
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// Exact positive-semidefiniteness by LDL^T with symmetric pivoting.
    ///
    /// Each step eliminates a remaining index with a positive diagonal entry.
    /// A negative diagonal entry means not PSD; once every remaining diagonal
    /// entry is zero the remaining block must vanish entirely.
    pub fn is_psd(&self) -> bool {
        let d = self.dim;
        let mut a = self.data.clone();
        let mut active: Vec<usize> = (0..d).collect();
        loop {
            if active.is_empty() {
                return true;
            }
            if active.iter().any(|&i| a[i * d + i].is_negative()) {
                return false;
            }
            let Some(pos) = active.iter().position(|&i| a[i * d + i].is_positive()) else {
                return active
                    .iter()
                    .all(|&i| active.iter().all(|&j| a[i * d + j].is_zero()));
            };
            let p = active.swap_remove(pos);
            let pivot = a[p * d + p].clone();
            for &i in &active {
                if a[i * d + p].is_zero() {
                    continue;
                }
                let factor = &a[i * d + p] / &pivot;
                for &j in &active {
                    if a[p * d + j].is_zero() {
                        continue;
                    }
                    let delta = &factor * &a[p * d + j];
                    a[i * d + j] -= delta;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::int;

    fn m(rows: &[&[i64]]) -> SymMatrix {
        SymMatrix::from_rows(&rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn psd_examples() {
        assert!(SymMatrix::identity(3).is_psd());
        assert!(!m(&[&[1, 2], &[2, 1]]).is_psd());
        assert!(m(&[&[1, 1], &[1, 1]]).is_psd());
        assert!(m(&[&[0, 0], &[0, 0]]).is_psd());
        assert!(!m(&[&[0, 1], &[1, 0]]).is_psd());
        assert!(!m(&[&[0, 0], &[0, -1]]).is_psd());
        assert!(SymMatrix::zeros(0).is_psd());
        // rank one with a zero row in the middle
        assert!(m(&[&[1, 0, 2], &[0, 0, 0], &[2, 0, 4]]).is_psd());
    }

    #[test]
    fn rejects_asymmetric() {
        let rows = alloc::vec![alloc::vec![int(1), int(2)], alloc::vec![int(3), int(1)]];
        assert_eq!(SymMatrix::from_rows(&rows), Err(Error::NotSymmetric));
    }

    #[test]
    fn upper_round_trip() {
        let a = m(&[&[1, 2, 3], &[2, 4, 5], &[3, 5, 6]]);
        assert_eq!(SymMatrix::from_upper(3, &a.upper()).unwrap(), a);
        assert!(SymMatrix::from_upper(3, &a.upper()[1..]).is_err());
    }
}
