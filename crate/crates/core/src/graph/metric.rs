use std::fmt;

use serde::{Serialize, Serializer};

use super::{bits, Graph};

const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances. Disconnected pairs hold a sentinel and read
/// back as `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceTable {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> Option<usize> {
        match self.dist[x * self.n + y] {
            UNREACHABLE => None,
            d => Some(d as usize),
        }
    }

    pub fn eccentricity(&self, x: usize) -> Option<usize> {
        (0..self.n)
            .map(|y| self.get(x, y))
            .try_fold(0, |m, d| d.map(|d| m.max(d)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

/// Serialises as a number, or `null` when infinite.
impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.finite().serialize(s)
    }
}

/// Layered BFS from every vertex.
pub fn distances(g: &Graph) -> DistanceTable {
    let n = g.order();
    let mut dist = vec![UNREACHABLE; n * n];
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut level = 0u32;
        while frontier != 0 {
            for v in bits(frontier) {
                row[v] = level;
            }
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= g.neighbors(v);
            }
            next &= !seen;
            seen |= next;
            frontier = next;
            level += 1;
        }
    }
    DistanceTable { n, dist }
}

pub fn diameter(g: &Graph) -> Diameter {
    let table = distances(g);
    (0..g.order())
        .map(|x| table.eccentricity(x))
        .try_fold(0, |m, e| e.map(|e| m.max(e)))
        .map_or(Diameter::Infinite, Diameter::Finite)
}

/// A shortest path `v_0 .. v_d` between two vertices at distance `d(G)`,
/// choosing the lexicographically first such endpoint pair. `None` for
/// disconnected graphs.
pub fn diametrical_path(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let table = distances(g);
    let d = diameter(g).finite()?;
    let (x, y) = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| table.get(x, y) == Some(d))?;
    // walk from x towards y, always stepping to the smallest neighbour
    // one hop closer to y
    let mut walk = vec![x];
    let mut cur = x;
    while cur != y {
        let here = table.get(cur, y)?;
        cur = bits(g.neighbors(cur)).find(|&w| table.get(w, y) == Some(here - 1))?;
        walk.push(cur);
    }
    Some(walk)
}
