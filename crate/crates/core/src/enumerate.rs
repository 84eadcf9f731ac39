//! Connected graphs up to isomorphism, by brute force.
//!
//! Every labelled graph on `n` vertices (one bit per upper-triangle pair)
//! is generated, disconnected ones are dropped, and the rest are
//! deduplicated by canonical code. The mask space is split by its
//! leading bits into independent chunks that rayon works through; the
//! merge is a sorted set union, so the output never depends on
//! scheduling.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{canonical_code, graph_from_code, Graph};

/// Default largest order for [`connected_graphs`].
pub const ENUMERATION_CAP: usize = 7;

/// Absolute ceiling even with the override (2^28 labelled graphs).
pub const ENUMERATION_HARD_CAP: usize = 8;

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, sorted by canonical graph6 string. Refuses `n > 7`.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    connected_graphs_with_override(n, false)
}

/// Like [`connected_graphs`], but `allow_large` permits `n = 8` with a
/// warning.
pub fn connected_graphs_with_override(n: usize, allow_large: bool) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let cap = if allow_large {
        ENUMERATION_HARD_CAP
    } else {
        ENUMERATION_CAP
    };
    if n > cap {
        return Err(Error::InvalidParameter(format!(
            "enumeration of n={n} exceeds the cap of {cap}"
        )));
    }
    if n > ENUMERATION_CAP {
        log::warn!("enumerating all labelled graphs on {n} vertices; this takes a long time");
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let nbits = pairs.len();
    let prefix_bits = nbits.min(6);
    let chunk_bits = nbits - prefix_bits;
    let codes: BTreeSet<u64> = (0u64..1 << prefix_bits)
        .into_par_iter()
        .map(|prefix| {
            let mut seen = BTreeSet::new();
            let mut rows = vec![0u64; n];
            for low in 0u64..1 << chunk_bits {
                let mask = prefix << chunk_bits | low;
                rows.iter_mut().for_each(|r| *r = 0);
                // bit nbits-1-k of the mask is pair k, matching graph6 order
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    if mask >> (nbits - 1 - k) & 1 == 1 {
                        rows[i] |= 1 << j;
                        rows[j] |= 1 << i;
                    }
                }
                if !beats_transpositions(&rows, &pairs, mask) {
                    continue;
                }
                let g = Graph::from_rows_unchecked(rows.clone());
                if g.is_connected()
                    && canonical_code(&g).expect("n is within the canonical limit") == mask
                {
                    seen.insert(mask);
                }
            }
            seen
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    Ok(codes.into_iter().map(|c| graph_from_code(n, c)).collect())
}

/// No single transposition of two vertices yields a smaller code. Every
/// canonical (lexicographically least) labelling passes, so this only
/// discards labellings whose class is represented elsewhere.
fn beats_transpositions(rows: &[u64], pairs: &[(usize, usize)], mask: u64) -> bool {
    let n = rows.len();
    let nbits = pairs.len();
    for a in 0..n {
        for b in a + 1..n {
            let swap = |v: usize| {
                if v == a {
                    b
                } else if v == b {
                    a
                } else {
                    v
                }
            };
            for (k, &(i, j)) in pairs.iter().enumerate() {
                let here = mask >> (nbits - 1 - k) & 1;
                let there = rows[swap(i)] >> swap(j) & 1;
                if here != there {
                    if there < here {
                        return false;
                    }
                    break;
                }
            }
        }
    }
    true
}
