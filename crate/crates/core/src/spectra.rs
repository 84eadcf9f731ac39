//! Graph-level spectral quantities, all exact.
//!
//! `m_G(μ)` for rational `μ` is `n - rank(q·A - p·I)` with `μ = p/q`.
//! The number of distinct eigenvalues `e(G)` is the degree of the
//! squarefree part of the characteristic polynomial, and the largest
//! multiplicity over all real eigenvalues (rational or not) is the
//! largest exponent in its squarefree decomposition.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{diameter, Diameter, Graph};
use crate::linalg::{
    rational_from_i64, squarefree_decomposition, IntMatrix, IntPolynomial, Rational,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralSummary {
    pub n: usize,
    pub d: Diameter,
    /// Nullity `m_G(0)`.
    pub mult0: usize,
    /// `m_G(-1)`.
    pub multm1: usize,
    /// `e(G)`.
    pub distinct: usize,
    pub maxmult: usize,
    /// Primitive squarefree factors whose roots attain `maxmult`.
    pub maxmult_factors: Vec<IntPolynomial>,
}

pub fn summary(g: &Graph) -> SpectralSummary {
    let dec = decomposition(g);
    let (maxmult, maxmult_factors) = max_from_decomposition(&dec);
    SpectralSummary {
        n: g.order(),
        d: diameter(g),
        mult0: multiplicity(g, &Rational::zero()),
        multm1: multiplicity(g, &rational_from_i64(-1)),
        distinct: dec.iter().map(|(q, _)| q.degree().unwrap_or(0)).sum(),
        maxmult,
        maxmult_factors,
    }
}

pub fn char_poly(g: &Graph) -> IntPolynomial {
    IntMatrix::adjacency(g)
        .char_poly()
        .expect("adjacency matrices are square")
}

fn decomposition(g: &Graph) -> Vec<(IntPolynomial, usize)> {
    squarefree_decomposition(&char_poly(g)).expect("characteristic polynomials are monic")
}

/// `m_G(μ)`; zero when `μ` is not an eigenvalue.
pub fn multiplicity(g: &Graph, mu: &Rational) -> usize {
    let shifted = IntMatrix::adjacency(g)
        .shifted(mu)
        .expect("adjacency matrices are square");
    g.order() - shifted.rank_exact()
}

/// `e(G)`, the number of distinct adjacency eigenvalues.
pub fn distinct_eigenvalue_count(g: &Graph) -> usize {
    decomposition(g)
        .iter()
        .map(|(q, _)| q.degree().unwrap_or(0))
        .sum()
}

/// Largest eigenvalue multiplicity together with every squarefree factor
/// whose roots attain it.
pub fn max_multiplicity(g: &Graph) -> (usize, Vec<IntPolynomial>) {
    max_from_decomposition(&decomposition(g))
}

fn max_from_decomposition(dec: &[(IntPolynomial, usize)]) -> (usize, Vec<IntPolynomial>) {
    let top = dec.iter().map(|&(_, e)| e).max().unwrap_or(0);
    let factors = dec
        .iter()
        .filter(|&&(_, e)| e == top)
        .map(|(q, _)| q.clone())
        .collect();
    (top, factors)
}

fn connected_diameter(g: &Graph) -> Result<usize> {
    diameter(g).finite().ok_or(Error::Disconnected)
}

/// `e(G) = d + 1`.
pub fn is_minimal(g: &Graph) -> Result<bool> {
    let d = connected_diameter(g)?;
    Ok(distinct_eigenvalue_count(g) == d + 1)
}

/// `m_G(μ) = n - d`.
pub fn extremality_check(g: &Graph, mu: &Rational) -> Result<bool> {
    let d = connected_diameter(g)?;
    Ok(multiplicity(g, mu) + d == g.order())
}

/// `|m_G(μ) - m_{G-v}(μ)| <= 1`. A `false` return means a kernel bug.
pub fn interlacing_check(g: &Graph, v: usize, mu: &Rational) -> Result<bool> {
    if g.order() < 2 {
        return Err(Error::Precondition("vertex deletion needs n >= 2".into()));
    }
    let whole = multiplicity(g, mu);
    let minus = multiplicity(&g.remove_vertex(v)?, mu);
    Ok(whole.abs_diff(minus) <= 1)
}

/// Deleting a pendant vertex and its neighbour leaves the nullity unchanged.
pub fn pendant_nullity_check(g: &Graph, x: usize) -> Result<bool> {
    let n = g.order();
    if x >= n {
        return Err(Error::VertexOutOfRange { vertex: x, n });
    }
    if n < 3 {
        return Err(Error::Precondition("pendant deletion needs n >= 3".into()));
    }
    if g.degree(x) != 1 {
        return Err(Error::Precondition(format!("vertex {x} is not pendant")));
    }
    let y = g.neighbors(x).trailing_zeros() as usize;
    let rest: Vec<usize> = (0..n).filter(|&v| v != x && v != y).collect();
    let zero = Rational::zero();
    Ok(multiplicity(g, &zero) == multiplicity(&g.induced_subgraph(&rest)?, &zero))
}

/// `rank(A(H) - μI) <= rank(A(G) - μI)` for the induced subgraph `H = G[keep]`.
pub fn rank_monotonicity_check(g: &Graph, keep: &[usize], mu: &Rational) -> Result<bool> {
    let h = g.induced_subgraph(keep)?;
    let rank =
        |x: &Graph| -> Result<usize> { Ok(IntMatrix::adjacency(x).shifted(mu)?.rank_exact()) };
    Ok(rank(&h)? <= rank(g)?)
}
