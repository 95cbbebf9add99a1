//! Dense matrices over the rationals, just enough for ranks, kernels and
//! changes of basis in the quiver computations.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq)]
pub(crate) struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn identity(k: usize) -> Self {
        let mut m = Self::zeros(k, k);
        for i in 0..k {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match the shape");
        let data = entries.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect();
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sum");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    /// `[self | other]`.
    pub fn hcat(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "row mismatch in hcat");
        let mut out = Mat::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// `self` stacked above `other`.
    pub fn vcat(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "column mismatch in vcat");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    pub fn columns(&self, idx: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.rows, idx.len());
        for (c, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, c, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn rows_range(&self, start: usize, end: usize) -> Mat {
        Mat {
            rows: end - start,
            cols: self.cols,
            data: self.data[start * self.cols..end * self.cols].to_vec(),
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                m.data.swap(r * m.cols + j, p * m.cols + j);
            }
            let inv = m.get(r, c).recip();
            for j in 0..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    #[cfg(test)]
    /// A basis of the kernel, as the columns of the returned matrix.
    pub fn nullspace(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, BigRational::one());
            for (row, &p) in pivots.iter().enumerate() {
                out.set(p, k, -r.get(row, f));
            }
        }
        out
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let k = self.rows;
        let (r, pivots) = self.hcat(&Mat::identity(k)).rref();
        if pivots.len() < k || pivots[k.saturating_sub(1)..].iter().any(|&p| p >= k) {
            return None;
        }
        Some(r.columns(&(k..2 * k).collect::<Vec<_>>()))
    }

    /// Extends the independent columns of `self` by standard basis vectors
    /// to a basis of the whole space; returns the indices of the added vectors.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut acc = self.clone();
        let mut added = Vec::new();
        for e in 0..self.rows {
            let mut unit = Mat::zeros(self.rows, 1);
            unit.set(e, 0, BigRational::one());
            let trial = acc.hcat(&unit);
            if trial.rank() > acc.rank() {
                acc = trial;
                added.push(e);
            }
        }
        added
    }

    pub fn unit_columns(rows: usize, idx: &[usize]) -> Mat {
        let mut out = Mat::zeros(rows, idx.len());
        for (c, &i) in idx.iter().enumerate() {
            out.set(i, c, BigRational::one());
        }
        out
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}{self}", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rank_and_kernel() {
        let m = Mat::from_ints(2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(m.rank(), 1);
        let k = m.nullspace();
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
        assert_eq!(Mat::zeros(0, 3).nullspace().cols(), 3);
        assert_eq!(Mat::zeros(2, 0).rank(), 0);
    }

    #[test]
    fn inverse_round_trip() {
        let m = Mat::from_ints(2, 2, &[2, 1, 1, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2));
        assert!(Mat::from_ints(2, 2, &[1, 2, 2, 4]).inverse().is_none());
        assert_eq!(Mat::zeros(0, 0).inverse(), Some(Mat::zeros(0, 0)));
    }

    #[test]
    fn complement_spans() {
        let u = Mat::from_ints(3, 1, &[1, 1, 0]);
        let idx = u.complement_indices();
        assert_eq!(idx.len(), 2);
        assert_eq!(u.hcat(&Mat::unit_columns(3, &idx)).rank(), 3);
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-3i64..=3, 12)) {
            let m = Mat::from_ints(3, 4, &entries);
            let k = m.nullspace();
            prop_assert_eq!(m.rank() + k.cols(), 4);
            prop_assert!(m.mul(&k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }
    }
}
