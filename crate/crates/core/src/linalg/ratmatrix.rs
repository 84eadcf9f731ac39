use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{IntMatrix, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
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

    pub fn from_int(m: &IntMatrix) -> Self {
        let data = (0..m.rows())
            .flat_map(|i| {
                (0..m.cols()).map(move |j| BigRational::from_integer(m.get(i, j).clone()))
            })
            .collect();
        RatMatrix {
            rows: m.rows(),
            cols: m.cols(),
            data,
        }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, cols: &[Vec<Rational>]) -> Result<Self> {
        if cols.iter().any(|c| c.len() != rows) {
            return Err(Error::Dimension("column length mismatch".into()));
        }
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.data[i * cols.len() + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, idx.len());
        for i in 0..self.rows {
            for (k, &j) in idx.iter().enumerate() {
                m.data[i * idx.len() + k] = self.get(i, j).clone();
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m.data[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = m.data[r * cols + c].recip();
            for j in c..cols {
                m.data[r * cols + j] *= &inv;
            }
            for i in 0..rows {
                if i == r || m.data[i * cols + c].is_zero() {
                    continue;
                }
                let f = m.data[i * cols + c].clone();
                for j in c..cols {
                    let delta = &f * &m.data[r * cols + j];
                    m.data[i * cols + j] -= delta;
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

    /// Gauss–Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Result<Option<Self>> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j).clone();
            }
            aug.data[i * 2 * n + n + i] = Rational::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Ok(None);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = red.get(i, n + j).clone();
            }
        }
        Ok(Some(inv))
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Columns form an exact basis of `ker(M - shift·I)`: one column per free
/// variable of the reduced echelon form.
pub fn nullspace_basis(m: &IntMatrix, shift: &Rational) -> Result<RatMatrix> {
    let shifted = RatMatrix::from_int(&m.shifted(shift)?);
    let n = shifted.cols;
    let (red, pivots) = shifted.rref();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let columns: Vec<Vec<Rational>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -red.get(r, f).clone();
            }
            v
        })
        .collect();
    RatMatrix::from_columns(n, &columns)
}

/// Orthogonal projection onto `ker(M - shift·I)`, computed as
/// `B (BᵀB)⁻¹ Bᵀ` from an exact basis `B`. Zero when `shift` is not an
/// eigenvalue.
pub fn eigenprojection(m: &IntMatrix, shift: &Rational) -> Result<RatMatrix> {
    if !m.is_symmetric() {
        return Err(Error::Precondition(
            "eigenprojection needs a symmetric matrix".into(),
        ));
    }
    let n = m.rows();
    let basis = nullspace_basis(m, shift)?;
    if basis.cols() == 0 {
        return Ok(RatMatrix::zeros(n, n));
    }
    let bt = basis.transpose();
    let gram = bt.mul(&basis)?;
    let gram_inv = gram
        .inverse()?
        .expect("Gram matrix of a basis is nonsingular");
    basis.mul(&gram_inv)?.mul(&bt)
}
