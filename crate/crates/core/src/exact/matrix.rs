use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MatrixQ {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl MatrixQ {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows; panics when the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Rational) {
        self.data[i * self.cols + j] += v;
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn mat_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            m.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        m
    }

    /// Rank over the rationals, computed by fraction-free (Bareiss) elimination
    /// on the integer matrix obtained by clearing each row's denominators.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                row.iter()
                    .map(|v| v.numer() * (&lcm / v.denom()))
                    .collect()
            })
            .collect();
        bareiss_rank(&mut a, self.cols)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
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
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let rv = m.get(r, j);
                    if rv.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &f * rv;
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of the null space, as column vectors.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    /// A basis of the column space, chosen among the columns themselves.
    pub fn column_space_basis(&self) -> Vec<Vec<Rational>> {
        let (_, pivots) = self.rref();
        pivots.into_iter().map(|c| self.column(c)).collect()
    }

    /// Solves `self * x = b`; `None` when inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn is_idempotent(&self) -> bool {
        self.is_square() && &(self * self) == self
    }
}

fn bareiss_rank(a: &mut [Vec<BigInt>], cols: usize) -> usize {
    let rows = a.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let v = &a[rank][c] * &a[i][j] - &a[i][c] * &a[rank][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

impl<'a> Mul<&'a MatrixQ> for &'a MatrixQ {
    type Output = MatrixQ;

    fn mul(self, rhs: &'a MatrixQ) -> MatrixQ {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in product");
        let mut m = MatrixQ::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        m.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        m
    }
}

impl<'a> Add<&'a MatrixQ> for &'a MatrixQ {
    type Output = MatrixQ;

    fn add(self, rhs: &'a MatrixQ) -> MatrixQ {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a MatrixQ> for &'a MatrixQ {
    type Output = MatrixQ;

    fn sub(self, rhs: &'a MatrixQ) -> MatrixQ {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        MatrixQ {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for MatrixQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
