//! Star sets and star complements.
//!
//! For an eigenvalue `μ` of multiplicity `k`, a star set is a set `X` of
//! `k` vertices such that `G - X` does not have `μ` as an eigenvalue;
//! `G - X` is then a star complement. Equivalently, the principal
//! submatrix of `A - μI` on the complement is nonsingular.

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bits, mask_of, Graph};
use crate::linalg::{eigenprojection, IntMatrix, Rational};
use crate::spectra::multiplicity;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarDecomposition {
    #[serde(serialize_with = "as_string")]
    pub mu: Rational,
    pub star_set: Vec<usize>,
    pub complement: Vec<usize>,
}

fn as_string<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

impl StarDecomposition {
    pub fn new(g: &Graph, mu: Rational, star_set: &[usize]) -> Result<Self> {
        let n = g.order();
        if let Some(&v) = star_set.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let mask = mask_of(star_set);
        let star_set: Vec<usize> = bits(mask).collect();
        let complement = (0..n).filter(|v| mask >> v & 1 == 0).collect();
        Ok(StarDecomposition {
            mu,
            star_set,
            complement,
        })
    }

    /// The star complement `G - X`; `None` when `X = V(G)`.
    pub fn complement_graph(&self, g: &Graph) -> Option<Graph> {
        g.induced_subgraph(&self.complement).ok()
    }
}

/// Multiplicity of `mu` in `G[keep]`, with the empty graph having none.
fn multiplicity_on(g: &Graph, keep: &[usize], mu: &Rational) -> Result<usize> {
    if keep.is_empty() {
        return Ok(0);
    }
    Ok(multiplicity(&g.induced_subgraph(keep)?, mu))
}

/// `V \ keep` is a star set: `|V \ keep| = m_G(μ)` and `G[keep]` lacks `μ`.
pub fn is_star_complement(g: &Graph, mu: &Rational, keep: &[usize]) -> Result<bool> {
    let n = g.order();
    if let Some(&v) = keep.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let kept = mask_of(keep).count_ones() as usize;
    Ok(n - kept == multiplicity(g, mu)
        && multiplicity_on(g, &bits(mask_of(keep)).collect::<Vec<_>>(), mu)? == 0)
}

/// Every vertex outside `s` has a neighbour in `s`.
pub fn dominating_check(g: &Graph, s: &[usize]) -> bool {
    let set = mask_of(s);
    (0..g.order()).all(|v| set >> v & 1 == 1 || g.neighbors(v) & set != 0)
}

/// Star sets for `mu` in lexicographic order, at most `limit` of them.
///
/// Exhaustive over `m`-subsets. Once the search has passed over a vertex
/// without choosing it, that vertex is certainly in the complement, and
/// the complement's rows of `A - μI` must be linearly independent for
/// its principal submatrix to be nonsingular; a dependent prefix prunes
/// the branch.
pub fn find_star_sets(g: &Graph, mu: &Rational, limit: usize) -> Result<Vec<StarDecomposition>> {
    let m = multiplicity(g, mu);
    if m == 0 {
        return Err(Error::NotAnEigenvalue(mu.to_string()));
    }
    let shifted = IntMatrix::adjacency(g).shifted(mu)?;
    let mut search = StarSearch {
        g,
        mu,
        shifted: &shifted,
        m,
        limit,
        found: Vec::new(),
    };
    let mut chosen = Vec::with_capacity(m);
    search.descend(0, &mut chosen);
    Ok(search.found)
}

struct StarSearch<'a> {
    g: &'a Graph,
    mu: &'a Rational,
    shifted: &'a IntMatrix,
    m: usize,
    limit: usize,
    found: Vec<StarDecomposition>,
}

impl StarSearch<'_> {
    fn descend(&mut self, start: usize, chosen: &mut Vec<usize>) {
        let n = self.g.order();
        if self.found.len() >= self.limit {
            return;
        }
        if chosen.len() == self.m {
            let keep: Vec<usize> = (0..n).filter(|v| !chosen.contains(v)).collect();
            let ok = keep.is_empty()
                || self
                    .shifted
                    .principal(&keep)
                    .is_ok_and(|p| p.rank_exact() == keep.len());
            if ok {
                let dec = StarDecomposition::new(self.g, self.mu.clone(), chosen)
                    .expect("vertices in range");
                self.found.push(dec);
            }
            return;
        }
        let remaining = self.m - chosen.len();
        for c in start..=n - remaining {
            let settled: Vec<usize> = (0..c).filter(|v| !chosen.contains(v)).collect();
            if !settled.is_empty()
                && self.shifted.select_rows(&settled).rank_exact() < settled.len()
            {
                // settled only grows with c
                break;
            }
            chosen.push(c);
            self.descend(c + 1, chosen);
            chosen.pop();
            if self.found.len() >= self.limit {
                return;
            }
        }
    }
}

/// `μ P e_v = Σ_{u ~ v} P e_u` for every vertex, exactly, where `P` is the
/// orthogonal projection onto the `μ`-eigenspace. Vacuous when `P = 0`.
pub fn projection_identity_check(g: &Graph, mu: &Rational) -> bool {
    let p =
        eigenprojection(&IntMatrix::adjacency(g), mu).expect("adjacency matrices are symmetric");
    let n = g.order();
    (0..n).all(|v| {
        (0..n).all(|i| {
            let lhs = mu * p.get(i, v);
            let rhs = bits(g.neighbors(v)).fold(Rational::zero(), |acc, u| acc + p.get(i, u));
            lhs == rhs
        })
    })
}

fn require_star_set(g: &Graph, dec: &StarDecomposition) -> Result<()> {
    if is_star_complement(g, &dec.mu, &dec.complement)? {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{:?} is not a star set for {}",
            dec.star_set, dec.mu
        )))
    }
}

/// The projections `P e_i`, `i ∈ X`, are linearly independent (so form a
/// basis of the eigenspace).
pub fn star_set_basis_check(g: &Graph, dec: &StarDecomposition) -> Result<bool> {
    require_star_set(g, dec)?;
    let p = eigenprojection(&IntMatrix::adjacency(g), &dec.mu)?;
    Ok(p.select_columns(&dec.star_set).rank() == dec.star_set.len())
}

/// For a star set `X` and `U ⊊ X`, `X \ U` is a star set of `G - U`.
pub fn star_subset_check(g: &Graph, mu: &Rational, x: &[usize], u: &[usize]) -> Result<bool> {
    let dec = StarDecomposition::new(g, mu.clone(), x)?;
    require_star_set(g, &dec)?;
    let (xm, um) = (mask_of(x), mask_of(u));
    if um & !xm != 0 || um == xm {
        return Err(Error::Precondition("U must be a proper subset of X".into()));
    }
    let survivors: Vec<usize> = bits(g.vertex_mask() & !um).collect();
    let reduced = g.induced_subgraph(&survivors)?;
    // position of each survivor in the relabelled graph
    let keep: Vec<usize> = survivors
        .iter()
        .enumerate()
        .filter(|&(_, &v)| xm >> v & 1 == 0)
        .map(|(i, _)| i)
        .collect();
    is_star_complement(&reduced, mu, &keep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{complete, cycle, diamond, path, DiamondSpec};
    use crate::graph::diametrical_path;
    use crate::linalg::rational_from_i64;

    fn r(v: i64) -> Rational {
        rational_from_i64(v)
    }

    #[test]
    fn star_sets_of_k3() {
        let k3 = complete(3).unwrap();
        let sets = find_star_sets(&k3, &r(-1), usize::MAX).unwrap();
        let xs: Vec<_> = sets.iter().map(|d| d.star_set.clone()).collect();
        assert_eq!(xs, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(is_star_complement(&k3, &r(-1), &[2]).unwrap());
        assert!(!is_star_complement(&k3, &r(-1), &[0, 1]).unwrap());
        assert!(matches!(
            find_star_sets(&k3, &r(1), 5),
            Err(Error::NotAnEigenvalue(_))
        ));
    }

    #[test]
    fn star_sets_of_p5() {
        let p5 = path(5).unwrap();
        for mu in [-1, 0] {
            let sets = find_star_sets(&p5, &r(mu), usize::MAX).unwrap();
            assert_eq!(sets[0].star_set, vec![0]);
            assert!(is_star_complement(&p5, &r(mu), &[1, 2, 3, 4]).unwrap());
        }
        assert_eq!(find_star_sets(&p5, &r(-1), 1).unwrap().len(), 1);
    }

    #[test]
    fn diametrical_path_minus_end_is_a_star_complement() {
        let g = diamond(&DiamondSpec::new(7, [3]).unwrap()).unwrap();
        let walk = diametrical_path(&g).unwrap();
        assert!(is_star_complement(&g, &r(-1), &walk[1..]).unwrap());
    }

    #[test]
    fn dominating() {
        assert!(dominating_check(&complete(5).unwrap(), &[3]));
        assert!(dominating_check(&path(5).unwrap(), &[1, 3]));
        assert!(!dominating_check(&path(5).unwrap(), &[0]));
    }

    #[test]
    fn projection_identity() {
        assert!(projection_identity_check(&complete(2).unwrap(), &r(-1)));
        assert!(projection_identity_check(&cycle(5).unwrap(), &r(100)));
        assert!(projection_identity_check(&cycle(3).unwrap(), &r(-1)));
    }

    #[test]
    fn basis_check() {
        let k3 = complete(3).unwrap();
        for x in [[0, 1], [0, 2], [1, 2]] {
            let dec = StarDecomposition::new(&k3, r(-1), &x).unwrap();
            assert!(star_set_basis_check(&k3, &dec).unwrap());
        }
        let p5 = path(5).unwrap();
        let dec = StarDecomposition::new(&p5, r(-1), &[0]).unwrap();
        assert!(star_set_basis_check(&p5, &dec).unwrap());
        // v_2 is not a star set: P_2 ∪ P_2 has eigenvalue -1
        let bad = StarDecomposition::new(&p5, r(-1), &[2]).unwrap();
        assert!(matches!(
            star_set_basis_check(&p5, &bad),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn star_set_minus_subset() {
        let k4 = complete(4).unwrap();
        assert!(star_subset_check(&k4, &r(-1), &[0, 1, 2], &[1]).unwrap());
        let k3 = complete(3).unwrap();
        assert!(star_subset_check(&k3, &r(-1), &[0, 2], &[2]).unwrap());
        assert!(star_subset_check(&k3, &r(-1), &[0, 2], &[0, 2]).is_err());
        assert!(star_subset_check(&k3, &r(-1), &[0, 2], &[1]).is_err());
        let g = diamond(&DiamondSpec::new(7, [3]).unwrap()).unwrap();
        let sets = find_star_sets(&g, &r(-1), usize::MAX).unwrap();
        assert!(!sets.is_empty());
        for dec in sets {
            for &u in &dec.star_set {
                assert!(star_subset_check(&g, &r(-1), &dec.star_set, &[u]).unwrap());
            }
        }
    }
}
