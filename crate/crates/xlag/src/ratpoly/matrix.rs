//! Matrices with polynomial entries and exact determinants.

use crate::ratpoly::Poly;

/// A dense row-major matrix of [`Poly`] entries.
#[derive(Clone, PartialEq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        PolyMatrix { rows, cols, entries }
    }

    /// Builds a matrix from a function of (row, col), both zero-based.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn identity(n: usize) -> Self {
        PolyMatrix::from_fn(n, n, |i, j| if i == j { Poly::one() } else { Poly::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    ///
    /// Every intermediate division is exact over the polynomial ring (the
    /// Bareiss pivots divide the two-by-two condensation identically), so no
    /// rational-function arithmetic is needed.
    pub fn det(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Poly::one();
        }
        let mut m: Vec<Vec<Poly>> = (0..n)
            .map(|i| (0..n).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut sign = 1i32;
        let mut prev = Poly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                // Pivot on a later row; all-zero column means det = 0.
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Poly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num
                        .divexact(&prev)
                        .expect("Bareiss condensation divides exactly");
                }
                m[i][k] = Poly::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }

    /// Exact determinant by cofactor expansion along the first row.
    ///
    /// Exponential in the dimension; kept as an independent oracle for
    /// [`PolyMatrix::det`].
    pub fn det_cofactor(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        match n {
            0 => return Poly::one(),
            1 => return self.at(0, 0).clone(),
            _ => {}
        }
        let mut det = Poly::zero();
        for j in 0..n {
            let a = self.at(0, j);
            if a.is_zero() {
                continue;
            }
            let minor = PolyMatrix::from_fn(n - 1, n - 1, |r, c| {
                self.at(r + 1, if c < j { c } else { c + 1 }).clone()
            });
            let term = a * minor.det_cofactor();
            det = if j % 2 == 0 { &det + &term } else { &det - &term };
        }
        det
    }
}
