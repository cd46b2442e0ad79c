//! Exact dense linear algebra over the rationals and over presented
//! fraction fields.
//!
//! Matrices here are small (presented instances stay under ~30 columns),
//! so everything is dense. Rank over Q uses fraction-free (Bareiss)
//! elimination on a cleared integer matrix; the generic routines use
//! ordinary Gaussian elimination with exact division and exact zero
//! tests supplied by the scalar type.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rat;

/// Exact field scalar: arithmetic plus a decidable zero test.
///
/// `zero_like`/`one_like` exist because some scalars (elements of a
/// presented fraction field) carry a context handle that a bare
/// `zero()` constructor could not supply.
pub trait Scalar: Clone {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn div(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Scalar for Rat {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<T>,
}

pub type QMatrix = Matrix<Rat>;

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<T>) {
        assert_eq!(row.len(), self.cols);
        self.data.extend(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.at(r, c).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// In-place reduction to row echelon form; returns the pivot columns.
    fn echelonize(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for pc in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(pivot_row) = (pr..self.rows).find(|&r| !self.at(r, pc).is_zero()) else {
                continue;
            };
            self.data.swap_chunks(pr, pivot_row, self.cols);
            let pivot = self.at(pr, pc).clone();
            for c in pc..self.cols {
                let v = self.at(pr, c).div(&pivot);
                self.set(pr, c, v);
            }
            for r in 0..self.rows {
                if r != pr && !self.at(r, pc).is_zero() {
                    let factor = self.at(r, pc).clone();
                    for c in pc..self.cols {
                        let v = self.at(r, c).sub(&factor.mul(self.at(pr, c)));
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(pc);
            pr += 1;
        }
        pivots
    }

    /// Reduced row echelon form together with pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.echelonize();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {v : M v = 0}. Each basis vector is
    /// normalized so its first nonzero entry is 1. Empty iff rank = cols.
    ///
    /// Panics on a 0x n matrix with n > 0; use [`Matrix::kernel_w`] there.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        if self.cols == 0 {
            return Vec::new();
        }
        let zero = self
            .data
            .first()
            .map(|x| x.zero_like())
            .expect("kernel of a 0-row matrix needs a scalar witness; use kernel_w");
        self.kernel_w(&zero)
    }

    /// Kernel with an explicit scalar witness (for matrices that may
    /// have no entries, e.g. zero relation rows over a presented field).
    pub fn kernel_w(&self, zero: &T) -> Vec<Vec<T>> {
        if self.cols == 0 {
            return Vec::new();
        }
        let zero = zero.zero_like();
        let one = zero.one_like();
        let (m, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = Some(i);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![zero.clone(); self.cols];
            vec[free] = one.clone();
            for (i, &pc) in pivots.iter().enumerate() {
                vec[pc] = m.at(i, free).neg();
            }
            // normalize first nonzero entry to 1
            let lead = vec.iter().position(|x| !x.is_zero()).unwrap();
            let l = vec[lead].clone();
            for x in vec.iter_mut() {
                *x = x.div(&l);
            }
            basis.push(vec);
        }
        basis
    }

    /// One exact solution of M x = b with zero values on free
    /// coordinates, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        let witness = self
            .data
            .first()
            .or_else(|| b.first())
            .expect("solve on an empty system needs a scalar witness; use solve_w")
            .zero_like();
        self.solve_w(b, &witness)
    }

    /// `solve` with an explicit scalar witness for degenerate shapes.
    pub fn solve_w(&self, b: &[T], zero: &T) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows);
        if self.cols == 0 {
            return if b.iter().all(|x| x.is_zero()) {
                Some(Vec::new())
            } else {
                None
            };
        }
        if self.rows == 0 {
            return Some(vec![zero.zero_like(); self.cols]);
        }
        let zero = zero.zero_like();
        let mut aug = Matrix {
            rows: self.rows,
            cols: self.cols + 1,
            data: {
                let mut d = Vec::with_capacity(self.rows * (self.cols + 1));
                for r in 0..self.rows {
                    d.extend_from_slice(self.row(r));
                    d.push(b[r].clone());
                }
                d
            },
        };
        let pivots = aug.echelonize();
        if pivots.contains(&self.cols) {
            return None; // pivot in the b column
        }
        let mut x = vec![zero; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(i, self.cols).clone();
        }
        Some(x)
    }

    /// Determinant of a square matrix by exact Gaussian elimination.
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let one = self
            .data
            .first()
            .map(|x| x.one_like())
            .expect("det of 0x0 matrix needs a scalar witness");
        let mut m = self.clone();
        let mut det = one;
        for pc in 0..m.cols {
            let Some(pivot_row) = (pc..m.rows).find(|&r| !m.at(r, pc).is_zero()) else {
                return det.sub(&det); // zero
            };
            if pivot_row != pc {
                m.data.swap_chunks(pc, pivot_row, m.cols);
                det = det.neg();
            }
            let pivot = m.at(pc, pc).clone();
            det = det.mul(&pivot);
            for r in pc + 1..m.rows {
                if !m.at(r, pc).is_zero() {
                    let factor = m.at(r, pc).div(&pivot);
                    for c in pc..m.cols {
                        let v = m.at(r, c).sub(&factor.mul(m.at(pc, c)));
                        m.set(r, c, v);
                    }
                }
            }
        }
        det
    }

    /// Apply the matrix to a vector.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc: Option<T> = None;
                for c in 0..self.cols {
                    let t = self.at(r, c).mul(&v[c]);
                    acc = Some(match acc {
                        None => t,
                        Some(a) => a.add(&t),
                    });
                }
                acc.unwrap()
            })
            .collect()
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize);
}

impl<T> SwapChunks for Vec<T> {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        for c in 0..width {
            self.swap(a * width + c, b * width + c);
        }
    }
}

impl QMatrix {
    /// Rank over Q by fraction-free (Bareiss) elimination: rows are
    /// cleared to integers first, then eliminated without divisions
    /// other than the exact Bareiss quotient.
    pub fn q_rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let mut lcm = BigInt::one();
                for c in 0..self.cols {
                    lcm = num_integer::lcm(lcm, self.at(r, c).denom().clone());
                }
                (0..self.cols)
                    .map(|c| self.at(r, c).numer() * (&lcm / self.at(r, c).denom()))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        let mut prev = BigInt::one();
        for pc in 0..self.cols {
            let Some(pr) = (rank..self.rows).find(|&r| !m[r][pc].is_zero()) else {
                continue;
            };
            m.swap(rank, pr);
            for r in rank + 1..self.rows {
                for c in pc + 1..self.cols {
                    let v = (&m[rank][pc] * &m[r][c] - &m[r][pc] * &m[rank][c]) / &prev;
                    m[r][c] = v;
                }
                m[r][pc] = BigInt::zero();
            }
            prev = m[rank][pc].clone();
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}
