//! Isomorphism testing and canonical labelling for small graphs.
//!
//! The two routines are deliberately independent. [`find_isomorphism`]
//! refines a joint colouring of both graphs (degree first, then
//! neighbour-colour multisets) and backtracks over colour-compatible
//! assignments. [`canonical_form`] is a branch-and-bound search for the
//! labelling whose graph6 string is lexicographically smallest.

use std::collections::BTreeMap;

use super::{bits, full_mask, write_graph6, Graph};
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_LIMIT: usize = 10;

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// A bijection `phi` with `u ~ v` in `g` iff `phi[u] ~ phi[v]` in `h`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }

    let (cg, ch) = refine_jointly(g, h);
    let mut hist_g: BTreeMap<u32, usize> = BTreeMap::new();
    let mut hist_h: BTreeMap<u32, usize> = BTreeMap::new();
    for &c in &cg {
        *hist_g.entry(c).or_default() += 1;
    }
    for &c in &ch {
        *hist_h.entry(c).or_default() += 1;
    }
    if hist_g != hist_h {
        return None;
    }

    // Match vertices of small colour classes first, then prefer vertices
    // with many already-placed neighbours so adjacency constraints bite early.
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .min_by_key(|&v| {
                let linked = (g.neighbors(v) & placed).count_ones();
                (hist_g[&cg[v]], std::cmp::Reverse(linked), v)
            })
            .expect("an unplaced vertex remains");
        order.push(next);
        placed |= 1 << next;
    }

    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    if extend(g, h, &cg, &ch, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[u32],
    ch: &[u32],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    let Some(&u) = order.get(depth) else {
        return true;
    };
    // image of u's already-mapped neighbourhood
    let mut want = 0u64;
    let mut mapped_h = 0u64;
    for &p in &order[..depth] {
        mapped_h |= 1 << map[p];
        if g.has_edge(u, p) {
            want |= 1 << map[p];
        }
    }
    for w in 0..h.order() {
        if *used >> w & 1 == 1 || ch[w] != cg[u] || h.neighbors(w) & mapped_h != want {
            continue;
        }
        map[u] = w;
        *used |= 1 << w;
        if extend(g, h, cg, ch, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << w);
        map[u] = usize::MAX;
    }
    false
}

/// Colour refinement run on the disjoint union so that colour ids are
/// comparable between the two graphs.
fn refine_jointly(g: &Graph, h: &Graph) -> (Vec<u32>, Vec<u32>) {
    let n = g.order();
    let graphs = [g, h];
    let mut colors: Vec<u32> = graphs
        .iter()
        .flat_map(|gr| (0..n).map(move |v| gr.degree(v) as u32))
        .collect();
    let mut classes = count_distinct(&colors);
    loop {
        let signatures: Vec<(u32, Vec<u32>)> = (0..2 * n)
            .map(|i| {
                let gr = graphs[i / n];
                let off = (i / n) * n;
                let mut nb: Vec<u32> = bits(gr.neighbors(i % n)).map(|v| colors[off + v]).collect();
                nb.sort_unstable();
                (colors[i], nb)
            })
            .collect();
        let mut ids: BTreeMap<&(u32, Vec<u32>), u32> = BTreeMap::new();
        for s in &signatures {
            ids.insert(s, 0);
        }
        for (k, v) in ids.values_mut().enumerate() {
            *v = k as u32;
        }
        let next: Vec<u32> = signatures.iter().map(|s| ids[s]).collect();
        let next_classes = ids.len();
        colors = next;
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }
    let ch = colors.split_off(n);
    (colors, ch)
}

fn count_distinct(v: &[u32]) -> usize {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

/// Upper-triangle bits (graph6 order, first bit most significant) of the
/// lexicographically least relabelling of `g`.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.order();
    if n > CANONICAL_LIMIT {
        return Err(Error::CanonicalLimit {
            n,
            limit: CANONICAL_LIMIT,
        });
    }
    let mut search = MinLabel {
        g,
        total: (n * n.saturating_sub(1) / 2) as u32,
        best: None,
    };
    let mut placed = Vec::with_capacity(n);
    search.descend(&mut placed, 0, 0, 0);
    Ok(search.best.unwrap_or(0))
}

/// graph6 string of the lexicographically least relabelling of `g`.
/// Equal strings exactly when the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<String> {
    let code = canonical_code(g)?;
    Ok(write_graph6(&graph_from_code(g.order(), code)))
}

pub(crate) fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_rows_unchecked(rows)
}

struct MinLabel<'a> {
    g: &'a Graph,
    total: u32,
    best: Option<u64>,
}

impl MinLabel<'_> {
    /// Placing a vertex at position `k` fixes column `k` of the upper
    /// triangle, so prefixes compare directly against the best code.
    fn descend(&mut self, placed: &mut Vec<usize>, placed_mask: u64, prefix: u64, len: u32) {
        let g = self.g;
        let n = g.order();
        let k = placed.len();
        if k == n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let free = full_mask(n) & !placed_mask;
        let mut cands: Vec<(u64, usize)> = Vec::with_capacity(n - k);
        for v in bits(free) {
            // Swapping two twins fixes every other vertex, so only the
            // first member of each twin class needs to be tried.
            let twin_seen = bits(free & ((1u64 << v) - 1))
                .any(|w| g.neighbors(v) & !(1 << w) == g.neighbors(w) & !(1 << v));
            if twin_seen {
                continue;
            }
            let col = placed
                .iter()
                .enumerate()
                .filter(|&(_, &p)| g.has_edge(v, p))
                .fold(0u64, |c, (i, _)| c | 1 << (k - 1 - i));
            cands.push((col, v));
        }
        cands.sort_unstable();
        let next_len = len + k as u32;
        for (col, v) in cands {
            let next = (prefix << k) | col;
            if let Some(b) = self.best {
                if next > b >> (self.total - next_len) {
                    break;
                }
            }
            placed.push(v);
            self.descend(placed, placed_mask | 1 << v, next, next_len);
            placed.pop();
        }
    }
}
