//! Simple undirected graphs stored as one 64-bit adjacency word per vertex.

mod graph6;
mod iso;
mod metric;

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub use graph6::{parse_graph6, write_graph6};
pub(crate) use iso::graph_from_code;
pub use iso::{are_isomorphic, canonical_code, canonical_form, find_isomorphism, CANONICAL_LIMIT};
pub use metric::{diameter, diametrical_path, distances, Diameter, DistanceTable};

/// Hard ceiling imposed by the one-word-per-row representation.
pub const MAX_VERTICES: usize = 64;

/// Environment variable that lowers the default vertex cap.
pub const VERTEX_CAP_ENV: &str = "SPECMIN_VERTEX_CAP";

/// Vertex cap in force for this process.
///
/// Defaults to [`MAX_VERTICES`]; `SPECMIN_VERTEX_CAP` may set it to any
/// value in `1..=64`. Larger requests are clamped with a warning.
pub fn vertex_cap() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| match std::env::var(VERTEX_CAP_ENV) {
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(0) | Err(_) => {
                log::warn!("ignoring {VERTEX_CAP_ENV}={raw:?}; using {MAX_VERTICES}");
                MAX_VERTICES
            }
            Ok(v) if v > MAX_VERTICES => {
                log::warn!(
                    "{VERTEX_CAP_ENV}={v} exceeds the bitset width; clamped to {MAX_VERTICES}"
                );
                MAX_VERTICES
            }
            Ok(v) => v,
        },
        Err(_) => MAX_VERTICES,
    })
}

pub(crate) fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let cap = vertex_cap();
    if n > cap {
        return Err(Error::TooManyVertices { n, cap });
    }
    Ok(())
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate the set bits of a word, lowest first.
pub(crate) fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let b = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(b)
        }
    })
}

pub(crate) fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0u64, |m, &v| m | (1u64 << v))
}

/// A simple undirected graph on vertices `0..n`.
///
/// Row `v` of `adj` is the open neighbourhood `N(v)` as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidAdjacency(format!("loop at vertex {u}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Build from neighbourhood rows, validating symmetry, loops and range.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let mask = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidAdjacency(format!(
                    "row {v} has bits beyond n={n}"
                )));
            }
            if row >> v & 1 == 1 {
                return Err(Error::InvalidAdjacency(format!("loop at vertex {v}")));
            }
            for u in bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::InvalidAdjacency(format!(
                        "edge {v}-{u} is not symmetric"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Rows already known to be valid (internal constructors only).
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph {
            n: rows.len(),
            adj: rows,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> u64 {
        self.adj[v] | (1 << v)
    }

    pub fn neighbor_list(&self, v: usize) -> Vec<usize> {
        bits(self.adj[v]).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] >> u >> 1).map(move |k| (u, u + 1 + k)))
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    /// Vertices reachable from `start` inside `within` (a vertex mask).
    pub(crate) fn component_within(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_within(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Connected, acyclic, maximum degree at most two.
    pub fn is_path(&self) -> bool {
        self.is_connected()
            && self.edge_count() + 1 == self.n
            && (0..self.n).all(|v| self.degree(v) <= 2)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// `G[keep]`, relabelled `0..|keep|` in increasing vertex order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        for &v in keep {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        self.induced_by_mask(mask_of(keep))
    }

    pub(crate) fn induced_by_mask(&self, keep: u64) -> Result<Graph> {
        let keep = keep & self.vertex_mask();
        if keep == 0 {
            return Err(Error::EmptyGraph);
        }
        let order: Vec<usize> = bits(keep).collect();
        let rows = order
            .iter()
            .map(|&v| {
                order
                    .iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.has_edge(v, u))
                    .fold(0u64, |row, (i, _)| row | (1 << i))
            })
            .collect();
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        self.induced_by_mask(self.vertex_mask() & !(1 << v))
    }

    /// Relabel so that vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Dimension(format!(
                "permutation of length {} for n={}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph::from_rows_unchecked(rows))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {})", self.n, write_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}
