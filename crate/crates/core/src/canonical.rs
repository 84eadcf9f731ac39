//! True-twin classes, the C-canonical quotient and its inverse (clique
//! blowup), plus checks that diameter and `m(-1)` transfer across them.
//!
//! Two vertices are related when their closed neighbourhoods coincide,
//! `N[u] = N[v]`. Each class is a clique; identifying every class to one
//! vertex gives the quotient `G^c`. Blowing each vertex of a graph up
//! into a clique and joining cliques of adjacent vertices completely is
//! the reverse operation.

use crate::error::{Error, Result};
use crate::graph::{bits, check_order, diameter, full_mask, Diameter, Graph};
use crate::linalg::rational_from_i64;
use crate::spectra::multiplicity;

/// Closed-neighbourhood equivalence classes, ordered by least member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl Partition {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }
}

pub fn rho_partition(g: &Graph) -> Partition {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let closed = g.closed_neighbors(v);
        // twins of v are all adjacent to v
        let class: Vec<usize> = std::iter::once(v)
            .chain(
                bits(g.neighbors(v) & !full_mask(v + 1))
                    .filter(|&u| g.closed_neighbors(u) == closed),
            )
            .collect();
        for &u in &class {
            class_of[u] = id;
        }
        classes.push(class);
    }
    Partition { classes, class_of }
}

/// `G^c`: vertex `i` stands for class `i` of the returned partition.
pub fn quotient(g: &Graph) -> (Graph, Partition) {
    let part = rho_partition(g);
    let reps: Vec<usize> = part.classes.iter().map(|c| c[0]).collect();
    let rows = reps
        .iter()
        .map(|&r| {
            reps.iter()
                .enumerate()
                .filter(|&(_, &s)| g.has_edge(r, s))
                .fold(0u64, |row, (j, _)| row | 1 << j)
        })
        .collect();
    (Graph::from_rows_unchecked(rows), part)
}

pub fn is_canonical(g: &Graph) -> bool {
    rho_partition(g).is_discrete()
}

/// A base graph and a positive clique size for each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    base: Graph,
    sizes: Vec<usize>,
}

impl BlowupSpec {
    pub fn new(base: Graph, sizes: Vec<usize>) -> Result<Self> {
        if sizes.len() != base.order() {
            return Err(Error::Dimension(format!(
                "{} clique sizes for a base graph on {} vertices",
                sizes.len(),
                base.order()
            )));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidParameter(
                "clique sizes must be at least 1".into(),
            ));
        }
        check_order(sizes.iter().sum())?;
        Ok(BlowupSpec { base, sizes })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }
}

/// Replace base vertex `v` by a clique on `sizes[v]` consecutive vertices
/// (base vertex 0's clique first) and join cliques of adjacent base
/// vertices completely.
pub fn blowup(spec: &BlowupSpec) -> Result<Graph> {
    let mut offsets = Vec::with_capacity(spec.sizes.len());
    let mut total = 0;
    for &s in &spec.sizes {
        offsets.push(total);
        total += s;
    }
    check_order(total)?;
    let block = |v: usize| full_mask(offsets[v] + spec.sizes[v]) & !full_mask(offsets[v]);
    let mut rows = vec![0u64; total];
    for v in 0..spec.base.order() {
        let mut row = block(v);
        for u in bits(spec.base.neighbors(v)) {
            row |= block(u);
        }
        for x in offsets[v]..offsets[v] + spec.sizes[v] {
            rows[x] = row & !(1 << x);
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Whenever `d(G^c) >= 1`, `d(G^c) = d(G)`.
pub fn diameter_transfer_check(g: &Graph) -> Result<bool> {
    let d = diameter(g);
    if d == Diameter::Infinite {
        return Err(Error::Disconnected);
    }
    let (gc, _) = quotient(g);
    Ok(match diameter(&gc) {
        Diameter::Finite(0) => true,
        dc => dc == d,
    })
}

/// `m_G(-1) = m_{G-u}(-1) + 1` for a vertex `u` with a twin.
pub fn duplicate_peeling_check(g: &Graph, u: usize) -> Result<bool> {
    let part = rho_partition(g);
    if u >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            n: g.order(),
        });
    }
    if part.classes[part.class_of(u)].len() < 2 {
        return Err(Error::Precondition(format!("vertex {u} has no twin")));
    }
    let m1 = rational_from_i64(-1);
    Ok(multiplicity(g, &m1) == multiplicity(&g.remove_vertex(u)?, &m1) + 1)
}

/// The `-1` multiplicity ledger `m_G(-1) = m_{G^c}(-1) + (n - n(G^c))`,
/// and extremality `m(-1) = n - d` holding for `G` exactly when it holds
/// for `G^c`.
///
/// When `G^c = K_1` (so `G` is complete) the quotient has diameter 0 and
/// the ledger is confirmed by removing twins one at a time instead,
/// each removal lowering `m(-1)` by exactly one.
pub fn multiplicity_transfer_check(g: &Graph) -> Result<bool> {
    let d = diameter(g).finite().ok_or(Error::Disconnected)?;
    if d == 0 {
        return Err(Error::Precondition("needs d(G) >= 1".into()));
    }
    let m1 = rational_from_i64(-1);
    let (gc, _) = quotient(g);
    let (n, nc) = (g.order(), gc.order());
    let mg = multiplicity(g, &m1);
    let mc = multiplicity(&gc, &m1);
    if mg != mc + (n - nc) {
        return Ok(false);
    }
    let dc = diameter(&gc)
        .finite()
        .expect("quotient of a connected graph is connected");
    if dc >= 1 {
        return Ok((mg + d == n) == (mc + dc == nc));
    }
    let mut cur = g.clone();
    let mut m = mg;
    loop {
        let part = rho_partition(&cur);
        let Some(class) = part.classes.iter().find(|c| c.len() > 1) else {
            break;
        };
        let next = cur.remove_vertex(*class.last().expect("nonempty class"))?;
        let mn = multiplicity(&next, &m1);
        if mn + 1 != m {
            return Ok(false);
        }
        cur = next;
        m = mn;
    }
    Ok(m == mc && cur.order() == nc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, cycle, path};
    use crate::graph::are_isomorphic;

    #[test]
    fn partitions() {
        let k5 = rho_partition(&complete(5).unwrap());
        assert_eq!(k5.classes(), &[vec![0, 1, 2, 3, 4]]);
        assert!(rho_partition(&path(5).unwrap()).is_discrete());
        assert_eq!(rho_partition(&complete(2).unwrap()).sizes(), vec![2]);
        // triangle with a pendant: the two degree-2 triangle vertices are twins
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let p = rho_partition(&paw);
        assert_eq!(p.classes(), &[vec![0, 1], vec![2], vec![3]]);
        assert_eq!(p.class_of(1), 0);
    }

    #[test]
    fn quotients() {
        assert_eq!(quotient(&complete(6).unwrap()).0, Graph::empty(1).unwrap());
        let p5 = path(5).unwrap();
        assert_eq!(quotient(&p5).0, p5);
        let spec = BlowupSpec::new(p5.clone(), vec![3, 1, 2, 1, 2]).unwrap();
        let (gc, part) = quotient(&blowup(&spec).unwrap());
        assert_eq!(gc, p5);
        assert_eq!(part.sizes(), vec![3, 1, 2, 1, 2]);
        assert!(is_canonical(&p5));
        assert!(!is_canonical(&complete(3).unwrap()));
        assert!(is_canonical(&cycle(6).unwrap()));
    }

    #[test]
    fn blowups() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(
            blowup(&BlowupSpec::new(k1, vec![4]).unwrap()).unwrap(),
            complete(4).unwrap()
        );
        let p5 = path(5).unwrap();
        assert_eq!(
            blowup(&BlowupSpec::new(p5.clone(), vec![1; 5]).unwrap()).unwrap(),
            p5
        );
        let k2 = path(2).unwrap();
        assert_eq!(
            blowup(&BlowupSpec::new(k2, vec![2, 2]).unwrap()).unwrap(),
            complete(4).unwrap()
        );
        assert!(BlowupSpec::new(p5.clone(), vec![1, 0, 1, 1, 1]).is_err());
        assert!(BlowupSpec::new(p5.clone(), vec![1; 4]).is_err());
        assert!(matches!(
            BlowupSpec::new(p5, vec![20; 5]),
            Err(Error::TooManyVertices { .. })
        ));
    }

    #[test]
    fn diameter_transfer() {
        let g = blowup(&BlowupSpec::new(path(5).unwrap(), vec![3, 1, 1, 1, 2]).unwrap()).unwrap();
        assert_eq!(diameter(&g), Diameter::Finite(4));
        assert!(diameter_transfer_check(&g).unwrap());
        assert!(diameter_transfer_check(&complete(7).unwrap()).unwrap());
        assert!(diameter_transfer_check(&cycle(6).unwrap()).unwrap());
        assert_eq!(
            diameter_transfer_check(&Graph::empty(2).unwrap()),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn multiplicity_transfer() {
        let m1 = rational_from_i64(-1);
        let g = blowup(&BlowupSpec::new(path(5).unwrap(), vec![2, 1, 1, 1, 1]).unwrap()).unwrap();
        assert_eq!(multiplicity(&g, &m1), 2);
        assert!(multiplicity_transfer_check(&g).unwrap());
        assert_eq!(multiplicity(&complete(5).unwrap(), &m1), 4);
        assert!(multiplicity_transfer_check(&complete(5).unwrap()).unwrap());
        assert!(multiplicity_transfer_check(&path(5).unwrap()).unwrap());
        assert!(multiplicity_transfer_check(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn peeling() {
        let g = blowup(&BlowupSpec::new(cycle(5).unwrap(), vec![1, 3, 1, 2, 1]).unwrap()).unwrap();
        for u in 1..4 {
            assert!(duplicate_peeling_check(&g, u).unwrap());
        }
        assert!(duplicate_peeling_check(&g, 0).is_err());
        assert!(are_isomorphic(&quotient(&g).0, &cycle(5).unwrap()));
    }
}
