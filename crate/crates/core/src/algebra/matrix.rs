use std::fmt;

use num_traits::{One, Zero};

use super::{int, ExactRational, Poly};

/// Dense integer matrix, row-major. Weyl group elements act on the root
/// lattice by such matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_columns(columns: &[Vec<i64>]) -> Self {
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = IntMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum()).collect()
    }

    pub fn is_neg_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self[(i, j)] == if i == j { -1 } else { 0 }))
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn to_rational(&self) -> RationalMatrix {
        RationalMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| int(x)).collect() }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Coefficients of det(u·I − M), lowest degree first (Faddeev–LeVerrier).
pub fn charpoly_i64(m: &IntMatrix) -> Vec<i64> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let mut coeffs = vec![0i64; n + 1];
    coeffs[n] = 1;
    let mut acc = IntMatrix::zeros(n, n);
    for k in 1..=n {
        // acc <- M·acc + c_{n-k+1}·I
        let mut next = m.mul(&acc);
        for i in 0..n {
            next[(i, i)] += coeffs[n - k + 1];
        }
        acc = next;
        let t = m.mul(&acc).trace();
        debug_assert!(t % k as i64 == 0);
        coeffs[n - k] = -t / k as i64;
    }
    coeffs
}

/// det(1 − u·M) as a polynomial in `u`.
pub fn det_one_minus_u(m: &IntMatrix) -> Poly {
    let mut cp = charpoly_i64(m);
    cp.reverse();
    Poly::from_ints(&cp)
}

/// Dense matrix over the rationals for small exact linear algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![ExactRational::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<ExactRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let data: Vec<ExactRational> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), r * c);
        RationalMatrix { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-reduced echelon form together with its pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in 0..m.cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in 0..m.cols {
                        let d = &f * &m[(r, j)];
                        m[(i, j)] -= d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<ExactRational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![ExactRational::zero(); self.cols];
                v[f] = ExactRational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = ExactRational;
    fn index(&self, (i, j): (usize, usize)) -> &ExactRational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ExactRational {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_rotation() {
        // quarter turn
        let m = IntMatrix::from_columns(&[vec![0, 1], vec![-1, 0]]);
        assert_eq!(charpoly_i64(&m), vec![1, 0, 1]);
        assert_eq!(det_one_minus_u(&IntMatrix::identity(3)), Poly::from_ints(&[1, -3, 3, -1]));
    }

    #[test]
    fn rank_and_kernel() {
        let m = RationalMatrix::from_rows(vec![vec![int(1), int(2), int(3)], vec![int(2), int(4), int(6)]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.nullspace().len(), 2);
    }
}
