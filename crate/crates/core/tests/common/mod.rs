//! Independent reference implementations used to cross-check the library.
//! Deliberately naive: plain rational Gaussian elimination, Floyd-Warshall,
//! a bit-by-bit graph6 encoder and permutation brute force.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use specmin::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n)
        .map(|i| (0..n).map(|j| g.has_edge(i, j)).collect())
        .collect()
}

/// Rank of `A - mu I` over the rationals, by textbook elimination.
pub fn rank_shifted(a: &[Vec<bool>], mu: &BigRational) -> usize {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let base = if a[i][j] {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    };
                    if i == j {
                        base - mu
                    } else {
                        base
                    }
                })
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..n {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[rank][col];
                for c in col..n {
                    let t = &f * &m[rank][c];
                    m[r][c] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn mult(g: &Graph, mu: &BigRational) -> usize {
    g.order() - rank_shifted(&adjacency(g), mu)
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// All-pairs distances; `None` for unreachable pairs.
pub fn floyd(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for i in 0..n {
        d[i][i] = Some(0);
        for j in 0..n {
            if g.has_edge(i, j) {
                d[i][j] = Some(1);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].map_or(true, |c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Diameter, `None` when disconnected.
pub fn diam(g: &Graph) -> Option<usize> {
    let d = floyd(g);
    let mut best = 0;
    for row in &d {
        for x in row {
            best = best.max((*x)?);
        }
    }
    Some(best)
}

/// graph6 written out bit by bit from the adjacency matrix.
pub fn graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut bitstream = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bitstream.push(g.has_edge(i, j));
        }
    }
    while bitstream.len() % 6 != 0 {
        bitstream.push(false);
    }
    for chunk in bitstream.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        out.push(63 + v);
    }
    String::from_utf8(out).unwrap()
}

/// Heap's algorithm over `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Number of automorphisms by brute force over a precomputed permutation list.
pub fn automorphisms(g: &Graph, perms: &[Vec<usize>]) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    perms
        .iter()
        .filter(|p| edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v])))
        .count()
}

pub fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Labelled connected graphs on `n` vertices, from the standard
/// inclusion-exclusion on the component containing vertex 0.
pub fn labelled_connected(n: usize) -> u128 {
    let mut c = vec![0u128; n + 1];
    for m in 1..=n {
        let total = 1u128 << (m * (m - 1) / 2);
        let mut disconnected = 0u128;
        for k in 1..m {
            let rest = m - k;
            disconnected +=
                binomial(m as u64 - 1, k as u64 - 1) * c[k] * (1u128 << (rest * (rest - 1) / 2));
        }
        c[m] = total - disconnected;
    }
    c[n]
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}
