//! Dense matrices over `Q(w)` with exact elimination.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::CycQ;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<CycQ>,
}

/// Outcome of solving `M v = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolution {
    Solvable { particular: Vec<CycQ>, kernel: Vec<Vec<CycQ>> },
    Inconsistent,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![CycQ::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = CycQ::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycQ>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycQ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<CycQ>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Dimension("ragged columns".into()));
        }
        Ok(Matrix::from_fn(rows, cols, |i, j| columns[j][i].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[CycQ] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[CycQ] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<CycQ> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> CycQ {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycQ::is_zero)
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[CycQ]) -> Result<Vec<CycQ>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    fn zip_with(&self, rhs: &Matrix, f: impl Fn(&CycQ, &CycQ) -> CycQ) -> Result<Matrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Dimension("shape mismatch".into()));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    /// Determinant by fraction-free (Bareiss) elimination. Rows are first scaled to integral
    /// entries, so every intermediate stays in `Z[w]`.
    pub fn det(&self) -> Result<CycQ> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(CycQ::one());
        }
        let (mut m, scale) = self.integral_rows_scaled();
        let mut negate = false;
        let mut prev = CycQ::one();
        for k in 0..n - 1 {
            let Some(p) = (k..n).find(|&r| !m[(r, k)].is_zero()) else {
                return Ok(CycQ::zero());
            };
            if p != k {
                m.swap_rows(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &(&m[(i, j)] * &m[(k, k)]) - &(&m[(i, k)] * &m[(k, j)]);
                    m[(i, j)] = exact_div(&t, &prev);
                }
                m[(i, k)] = CycQ::zero();
            }
            prev = m[(k, k)].clone();
        }
        let det = m[(n - 1, n - 1)].scale_rational(&BigRational::new(BigInt::one(), scale));
        Ok(if negate { -det } else { det })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form by fraction-free Gauss-Jordan elimination over `Z[w]`,
    /// normalized at the end.
    pub fn rref(&self) -> Echelon {
        let mut m = self.integral_rows();
        let mut pivots = Vec::new();
        let mut prev = CycQ::one();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let piv = m[(r, col)].clone();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m[(i, col)].clone();
                for j in 0..m.cols {
                    if j == col {
                        continue;
                    }
                    let t = &(&piv * &m[(i, j)]) - &(&f * &m[(r, j)]);
                    m[(i, j)] = exact_div(&t, &prev);
                }
                m[(i, col)] = CycQ::zero();
            }
            prev = piv;
            pivots.push(col);
            r += 1;
        }
        for (row, &pc) in pivots.iter().enumerate() {
            let inv = m[(row, pc)].inv().expect("pivot is nonzero");
            for j in 0..m.cols {
                if !m[(row, j)].is_zero() {
                    m[(row, j)] = &m[(row, j)] * &inv;
                }
            }
        }
        for row in pivots.len()..m.rows {
            for j in 0..m.cols {
                m[(row, j)] = CycQ::zero();
            }
        }
        Echelon { matrix: m, pivots }
    }

    /// Each row multiplied by the lcm of its denominators; returns the product of the
    /// multipliers too.
    fn integral_rows_scaled(&self) -> (Matrix, BigInt) {
        let mut m = self.clone();
        let mut scale = BigInt::one();
        for r in 0..m.rows {
            let l = (0..m.cols).fold(BigInt::one(), |l, c| {
                let v = &m[(r, c)];
                l.lcm(v.re().denom()).lcm(v.om().denom())
            });
            if !l.is_one() {
                let q = BigRational::from_integer(l.clone());
                for c in 0..m.cols {
                    m[(r, c)] = m[(r, c)].scale_rational(&q);
                }
                scale *= l;
            }
        }
        (m, scale)
    }

    fn integral_rows(&self) -> Matrix {
        self.integral_rows_scaled().0
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<CycQ>> {
        self.rref().kernel(self.cols)
    }

    /// Full solution set of `self * v = rhs`; free variables are set to zero in the particular solution.
    pub fn solve_affine(&self, rhs: &[CycQ]) -> Result<AffineSolution> {
        if rhs.len() != self.rows {
            return Err(Error::Dimension("right-hand side length".into()));
        }
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[i].clone()
            }
        });
        let Echelon { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(AffineSolution::Inconsistent);
        }
        let mut particular = vec![CycQ::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            particular[pc] = matrix[(row, self.cols)].clone();
        }
        Ok(AffineSolution::Solvable { particular, kernel: Echelon { matrix, pivots }.kernel(self.cols) })
    }
}

impl Echelon {
    /// Null space of the first `n` columns, one vector per free column.
    fn kernel(&self, n: usize) -> Vec<Vec<CycQ>> {
        free_columns(n, &self.pivots)
            .map(|f| {
                let mut v = vec![CycQ::zero(); n];
                v[f] = CycQ::one();
                for (row, &pc) in self.pivots.iter().enumerate() {
                    v[pc] = -&self.matrix[(row, f)];
                }
                v
            })
            .collect()
    }
}

fn free_columns(n: usize, pivots: &[usize]) -> impl Iterator<Item = usize> + '_ {
    (0..n).filter(move |c| !pivots.contains(c))
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = CycQ;
    fn index(&self, (i, j): (usize, usize)) -> &CycQ {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CycQ {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("incompatible shapes")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("incompatible shapes")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("incompatible shapes")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", cells.join(", "))?;
        }
        f.write_str("]")
    }
}

/// `t / d` for `d` nonzero and the quotient known to lie in `Z[w]`.
fn exact_div(t: &CycQ, d: &CycQ) -> CycQ {
    if d.is_one() || t.is_zero() {
        return t.clone();
    }
    let num = t * &d.conj();
    let norm = d.norm();
    if num.is_integral() && norm.is_integer() {
        let n = norm.numer();
        let (qr, rr) = num.re().numer().div_rem(n);
        let (qs, rs) = num.om().numer().div_rem(n);
        if rr.is_zero() && rs.is_zero() {
            return CycQ::new(BigRational::from_integer(qr), BigRational::from_integer(qs));
        }
    }
    num.scale_rational(&norm.recip())
}
