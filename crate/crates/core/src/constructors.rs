//! Named graph families and the path-with-triangles construction `P_{d+1} ◇ W`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Path `v_0 - v_1 - ... - v_{n-1}`.
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "a cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`; `K_{1,b}` is the star.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(a + b, &edges)
}

/// Parameters of `P_{d+1} ◇ W`: a path `v_0 .. v_d` plus, for every
/// `j` in `w`, a new vertex `u_j` adjacent to exactly `v_j` and `v_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DiamondSpec {
    d: usize,
    w: BTreeSet<usize>,
}

impl DiamondSpec {
    pub fn new(d: usize, w: impl IntoIterator<Item = usize>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter(
                "path length d must be at least 1".into(),
            ));
        }
        let w: BTreeSet<usize> = w.into_iter().collect();
        if let Some(&bad) = w.iter().find(|&&j| j >= d) {
            return Err(Error::InvalidParameter(format!(
                "attachment index {bad} outside 0..={} for d={d}",
                d - 1
            )));
        }
        Ok(DiamondSpec { d, w })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn attachments(&self) -> &BTreeSet<usize> {
        &self.w
    }

    pub fn order(&self) -> usize {
        self.d + 1 + self.w.len()
    }

    /// Whether `W` lies inside the admissible set for this `d`.
    pub fn is_admissible(&self) -> bool {
        AdmissibleSet::new(self.d).is_ok_and(|u| self.w.iter().all(|j| u.contains(*j)))
    }
}

/// The index set `{3, 6, ..., d-4}` for `d >= 7`, `d ≡ 1 (mod 3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdmissibleSet {
    d: usize,
}

impl AdmissibleSet {
    pub fn new(d: usize) -> Result<Self> {
        if d < 7 || d % 3 != 1 {
            return Err(Error::InvalidParameter(format!(
                "d={d} is inadmissible: need d >= 7 and d ≡ 1 (mod 3)"
            )));
        }
        Ok(AdmissibleSet { d })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn indices(&self) -> Vec<usize> {
        (3..=self.d - 4).step_by(3).collect()
    }

    pub fn contains(&self, j: usize) -> bool {
        j >= 3 && j + 4 <= self.d && j % 3 == 0
    }

    /// All subsets in binary-counting order over the sorted indices
    /// (bit `i` selects the `i`-th index), starting with the empty set.
    pub fn subsets(&self) -> impl Iterator<Item = BTreeSet<usize>> + Clone {
        let idx = self.indices();
        (0u64..1 << idx.len()).map(move |m| {
            idx.iter()
                .enumerate()
                .filter(|&(i, _)| m >> i & 1 == 1)
                .map(|(_, &j)| j)
                .collect()
        })
    }
}

/// `P_{d+1} ◇ W`. Path vertices are `0..=d`; the attached `u_j` follow in
/// increasing order of `j`.
pub fn diamond(spec: &DiamondSpec) -> Result<Graph> {
    let d = spec.d;
    let mut edges: Vec<(usize, usize)> = (1..=d).map(|i| (i - 1, i)).collect();
    for (k, &j) in spec.w.iter().enumerate() {
        let u = d + 1 + k;
        edges.push((u, j));
        edges.push((u, j + 1));
    }
    Graph::from_edges(spec.order(), &edges)
}

/// Every `P_{d+1} ◇ W` with `W ⊆ {3, 6, ..., d-4}`, `2^((d-4)/3)` graphs.
/// The iterator is restartable via `Clone`.
pub fn extremal_diamond_family(
    d: usize,
) -> Result<impl Iterator<Item = (DiamondSpec, Graph)> + Clone> {
    let admissible = AdmissibleSet::new(d)?;
    Ok(admissible.subsets().map(move |w| {
        let spec = DiamondSpec { d, w };
        let g = diamond(&spec).expect("admissible diamond parameters are valid");
        (spec, g)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, diameter, Diameter};

    #[test]
    fn basic_families() {
        assert_eq!(path(2).unwrap(), complete(2).unwrap());
        assert_eq!(complete(1).unwrap().order(), 1);
        assert!(are_isomorphic(&cycle(3).unwrap(), &complete(3).unwrap()));
        assert!(cycle(2).is_err());
        assert_eq!(complete_bipartite(1, 3).unwrap().edge_count(), 3);
    }

    #[test]
    fn adjacent_attachment_indices() {
        let g = diamond(&DiamondSpec::new(7, [2, 3, 5]).unwrap()).unwrap();
        assert_eq!((g.order(), g.edge_count()), (11, 13));
        // attached vertices are pairwise non-adjacent
        for a in 8..11 {
            for b in 8..11 {
                assert!(!g.has_edge(a, b));
            }
        }
    }

    #[test]
    fn diamond_examples() {
        assert_eq!(
            diamond(&DiamondSpec::new(4, []).unwrap()).unwrap(),
            path(5).unwrap()
        );
        let g = diamond(&DiamondSpec::new(7, [3]).unwrap()).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(diameter(&g), Diameter::Finite(7));
        assert!(DiamondSpec::new(7, [7]).is_err());
        assert!(DiamondSpec::new(0, []).is_err());
    }

    #[test]
    fn empty_attachment_is_a_path() {
        for d in 1..=20 {
            let g = diamond(&DiamondSpec::new(d, []).unwrap()).unwrap();
            assert_eq!(g, path(d + 1).unwrap());
        }
    }

    #[test]
    fn family_sizes() {
        let fam: Vec<_> = extremal_diamond_family(7).unwrap().collect();
        assert_eq!(fam.len(), 2);
        assert!(fam[0].0.attachments().is_empty());
        assert_eq!(
            fam[1].0.attachments().iter().copied().collect::<Vec<_>>(),
            vec![3]
        );
        assert_eq!(extremal_diamond_family(10).unwrap().count(), 4);
        assert_eq!(extremal_diamond_family(13).unwrap().count(), 8);
        assert!(extremal_diamond_family(8).is_err());
        assert!(extremal_diamond_family(4).is_err());
        assert_eq!(AdmissibleSet::new(16).unwrap().indices(), vec![3, 6, 9, 12]);
    }

    #[test]
    fn admissibility() {
        assert!(DiamondSpec::new(10, [3, 6]).unwrap().is_admissible());
        assert!(!DiamondSpec::new(7, [2, 3, 5]).unwrap().is_admissible());
        assert!(!DiamondSpec::new(9, [3]).unwrap().is_admissible());
    }
}
