use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntPolynomial, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| BigInt::from(v)).collect();
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// `A(G)`.
    pub fn adjacency(g: &Graph) -> Self {
        let n = g.order();
        let data = (0..n)
            .flat_map(|u| (0..n).map(move |v| BigInt::from(u8::from(g.has_edge(u, v)))))
            .collect();
        IntMatrix {
            rows: n,
            cols: n,
            data,
        }
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

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// `q·M - p·I` for `mu = p/q`: an integer matrix with the same kernel
    /// (and rank) as `M - mu·I`.
    pub fn shifted(&self, mu: &Rational) -> Result<Self> {
        self.require_square()?;
        let (p, q) = (mu.numer(), mu.denom());
        let mut out = self.clone();
        for x in &mut out.data {
            *x *= q;
        }
        for i in 0..self.rows {
            out.data[i * self.cols + i] -= p;
        }
        Ok(out)
    }

    /// Principal submatrix on the given (sorted) index list.
    pub fn principal(&self, idx: &[usize]) -> Result<Self> {
        self.require_square()?;
        let data = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        Ok(IntMatrix {
            rows: idx.len(),
            cols: idx.len(),
            data,
        })
    }

    /// Submatrix on the given rows, all columns kept.
    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let data = idx
            .iter()
            .flat_map(|&i| {
                self.data[i * self.cols..(i + 1) * self.cols]
                    .iter()
                    .cloned()
            })
            .collect();
        IntMatrix {
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    /// Rank over the rationals by fraction-free Bareiss elimination.
    ///
    /// Columns without a pivot are skipped; every division below is exact
    /// (Sylvester's identity), so intermediates stay integral.
    pub fn rank_exact(&self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| !a[r * cols + col].is_zero()) else {
                continue;
            };
            if p != rank {
                for j in col..cols {
                    a.swap(p * cols + j, rank * cols + j);
                }
            }
            let pivot = a[rank * cols + col].clone();
            for i in rank + 1..rows {
                let lead = a[i * cols + col].clone();
                for j in col + 1..cols {
                    let v = (&pivot * &a[i * cols + j] - &lead * &a[rank * cols + j]) / &prev;
                    a[i * cols + j] = v;
                }
                a[i * cols + col] = BigInt::zero();
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// Determinant by Bareiss elimination with row swaps.
    pub fn determinant(&self) -> Result<BigInt> {
        self.require_square()?;
        let n = self.rows;
        let mut a = self.data.clone();
        let mut prev = BigInt::one();
        let mut sign = 1;
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[r * n + k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            if p != k {
                for j in 0..n {
                    a.swap(p * n + j, k * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i * n + j] =
                        (&a[k * n + k] * &a[i * n + j] - &a[i * n + k] * &a[k * n + j]) / &prev;
                }
            }
            prev = a[k * n + k].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { prev * sign })
    }

    /// `det(xI - M)` by the Berkowitz recurrence: no divisions at all.
    ///
    /// Grows one leading principal block at a time. With the block
    /// `[[M, c], [r, a]]`, the new polynomial is a lower-triangular
    /// Toeplitz matrix with first column `1, -a, -rc, -rMc, -rM²c, ...`
    /// applied to the previous coefficient vector (highest degree first).
    pub fn char_poly(&self) -> Result<IntPolynomial> {
        self.require_square()?;
        let n = self.rows;
        let mut p: Vec<BigInt> = vec![BigInt::one()];
        for k in 0..n {
            let mut t = Vec::with_capacity(k + 2);
            t.push(BigInt::one());
            t.push(-self.get(k, k).clone());
            let mut v: Vec<BigInt> = (0..k).map(|i| self.get(i, k).clone()).collect();
            for _ in 2..k + 2 {
                let rv: BigInt = (0..k).map(|j| self.get(k, j) * &v[j]).sum();
                t.push(-rv);
                v = (0..k)
                    .map(|i| (0..k).map(|j| self.get(i, j) * &v[j]).sum())
                    .collect();
            }
            p = (0..k + 2)
                .map(|i| (0..=i.min(k)).map(|j| &t[i - j] * &p[j]).sum())
                .collect();
        }
        p.reverse();
        Ok(IntPolynomial::new(p))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}
