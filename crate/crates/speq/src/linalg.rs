//! Dense exact linear algebra over a finite field.

use crate::gf::{FieldElem, Gf};

/// A dense matrix with entries in a fixed GF(p^n).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<FieldElem>,
}

impl Mat {
    pub fn zero(gf: &Gf, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![gf.zero(); rows * cols],
        }
    }

    pub fn identity(gf: &Gf, n: usize) -> Mat {
        let mut m = Mat::zero(gf, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = gf.one();
        }
        m
    }

    pub fn from_rows(gf: &Gf, rows: Vec<Vec<FieldElem>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let _ = gf;
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &FieldElem {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut FieldElem {
        &mut self.data[i * self.cols + j]
    }

    pub fn mul(&self, gf: &Gf, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = Mat::zero(gf, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if gf.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = gf.mul(a, other.at(k, j));
                    *out.at_mut(i, j) = gf.add(out.at(i, j), &prod);
                }
            }
        }
        out
    }

    pub fn add(&self, gf: &Gf, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x = gf.add(x, y);
        }
        out
    }

    pub fn sub(&self, gf: &Gf, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x = gf.sub(x, y);
        }
        out
    }

    /// Horizontal concatenation [self | other].
    pub fn hcat(&self, gf: &Gf, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zero(gf, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(i, j) = self.at(i, j).clone();
            }
            for j in 0..other.cols {
                *out.at_mut(i, self.cols + j) = other.at(i, j).clone();
            }
        }
        out
    }

    pub fn transpose(&self, gf: &Gf) -> Mat {
        let mut out = Mat::zero(gf, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        out
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self, gf: &Gf) -> Vec<usize> {
        let mut pivots = vec![];
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !gf.is_zero(self.at(r, col))) else {
                continue;
            };
            if pr != row {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, row * self.cols + j);
                }
            }
            let inv = gf.inv(self.at(row, col)).unwrap();
            for j in 0..self.cols {
                *self.at_mut(row, j) = gf.mul(self.at(row, j), &inv);
            }
            for r in 0..self.rows {
                if r != row && !gf.is_zero(self.at(r, col)) {
                    let factor = self.at(r, col).clone();
                    for j in 0..self.cols {
                        let sub = gf.mul(&factor, self.at(row, j));
                        *self.at_mut(r, j) = gf.sub(self.at(r, j), &sub);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, gf: &Gf) -> usize {
        let mut m = self.clone();
        m.rref(gf).len()
    }

    /// Basis of the right null space, one column vector per basis element.
    pub fn null_space(&self, gf: &Gf) -> Vec<Vec<FieldElem>> {
        let mut m = self.clone();
        let pivots = m.rref(gf);
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = vec![];
        for &fc in &free {
            let mut v = vec![gf.zero(); self.cols];
            v[fc] = gf.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = gf.neg(&m.at(r, fc).clone());
            }
            basis.push(v);
        }
        basis
    }

    /// Solve self · x = rhs for a single column vector; None when inconsistent.
    pub fn solve(&self, gf: &Gf, rhs: &[FieldElem]) -> Option<Vec<FieldElem>> {
        assert_eq!(rhs.len(), self.rows);
        let rhs_mat = Mat {
            rows: self.rows,
            cols: 1,
            data: rhs.to_vec(),
        };
        let mut aug = self.hcat(gf, &rhs_mat);
        let pivots = aug.rref(gf);
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![gf.zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix; None when singular.
    pub fn inverse(&self, gf: &Gf) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = self.hcat(gf, &Mat::identity(gf, n));
        let pivots = aug.rref(gf);
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return None;
        }
        let mut inv = Mat::zero(gf, n, n);
        for i in 0..n {
            for j in 0..n {
                *inv.at_mut(i, j) = aug.at(i, n + j).clone();
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self, gf: &Gf) -> bool {
        self.rows == self.cols && self.rank(gf) == self.rows
    }

    pub fn col(&self, j: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn mul_vec(&self, gf: &Gf, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = gf.zero();
                for j in 0..self.cols {
                    acc = gf.add(&acc, &gf.mul(self.at(i, j), &v[j]));
                }
                acc
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_rank_over_gf2() {
        let f2 = Gf::make(2, 1).unwrap();
        let one = f2.one();
        let zero = f2.zero();
        let m = Mat::from_rows(
            &f2,
            vec![
                vec![one.clone(), one.clone(), zero.clone()],
                vec![one.clone(), one.clone(), one.clone()],
                vec![zero.clone(), zero.clone(), one.clone()],
            ],
        );
        assert_eq!(m.rank(&f2), 2);
        let ns = m.null_space(&f2);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![one.clone(), one.clone(), zero.clone()]);
    }

    #[test]
    fn inverse_round_trip_gf4() {
        let f4 = Gf::make(2, 2).unwrap();
        let g = f4.gen();
        let m = Mat::from_rows(
            &f4,
            vec![vec![g.clone(), f4.one()], vec![f4.one(), f4.one()]],
        );
        let inv = m.inverse(&f4).unwrap();
        assert_eq!(m.mul(&f4, &inv), Mat::identity(&f4, 2));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f3 = Gf::make(3, 1).unwrap();
        let e = |k: u64| f3.from_int(k);
        let m = Mat::from_rows(&f3, vec![vec![e(1), e(2)], vec![e(2), e(4 % 3)]]);
        // second row is twice the first: rhs must be proportional
        assert!(m.solve(&f3, &[e(1), e(2)]).is_some());
        assert!(m.solve(&f3, &[e(1), e(1)]).is_none());
    }
}
