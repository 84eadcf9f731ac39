//! Structural recognition of connected graphs with `m_G(-1) = n - d`, and
//! the check that rational eigenvalues reaching the `n - d` bound can
//! only be `0` or `-1` outside paths.
//!
//! A connected graph on `n >= 2` vertices attains `m(-1) = n - d` exactly
//! when it is complete, when its C-canonical quotient is `P_5`, or when
//! `d >= 7`, `d ≡ 1 (mod 3)` and the quotient is `P_{d+1} ◇ W` with
//! `W ⊆ {3, 6, ..., d-4}`.

use std::fmt;

use serde::Serialize;

use crate::canonical::{blowup, quotient, BlowupSpec, Partition};
use crate::constructors::{complete, diamond, path, AdmissibleSet, DiamondSpec};
use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, bits, diameter, diametrical_path, find_isomorphism, Graph};
use crate::linalg::{eval_multiplicity, rational_from_i64};
use crate::spectra::{extremality_check, max_multiplicity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NotExtremalReason {
    /// `d ≢ 1 (mod 3)`.
    #[serde(rename = "fails-mod-3")]
    FailsMod3,
    /// `d ≡ 1 (mod 3)` but `d < 7` (and the quotient is not `P_5`).
    DiameterTooSmall,
    /// The quotient is `P_{d+1} ◇ W` for some `W`, but `W` is not admissible.
    SpacingViolation,
    /// The quotient is not of the path-with-triangles shape at all.
    QuotientMismatch,
}

impl NotExtremalReason {
    pub fn code(self) -> &'static str {
        match self {
            NotExtremalReason::FailsMod3 => "fails-mod-3",
            NotExtremalReason::DiameterTooSmall => "diameter-too-small",
            NotExtremalReason::SpacingViolation => "spacing-violation",
            NotExtremalReason::QuotientMismatch => "quotient-mismatch",
        }
    }
}

impl fmt::Display for NotExtremalReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Outcome of [`classify_minus_one`]. The size vectors are clique sizes
/// indexed by the vertices of the named base graph (`P_5`, or the diamond
/// graph in its standard labelling), so blowing the base up by them
/// reproduces the input up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum Classification {
    Complete {
        n: usize,
    },
    QuotientP5 {
        sizes: Vec<usize>,
    },
    DiamondFamily {
        spec: DiamondSpec,
        sizes: Vec<usize>,
    },
    NotExtremal {
        reason: NotExtremalReason,
    },
}

impl Classification {
    pub fn is_extremal(&self) -> bool {
        !matches!(self, Classification::NotExtremal { .. })
    }

    /// Short label used for census counters.
    pub fn label(&self) -> String {
        match self {
            Classification::Complete { .. } => "complete".into(),
            Classification::QuotientP5 { .. } => "quotient-p5".into(),
            Classification::DiamondFamily { .. } => "diamond-family".into(),
            Classification::NotExtremal { reason } => format!("not-extremal:{reason}"),
        }
    }

    /// Rebuild a graph from the structural certificate; `None` for
    /// [`Classification::NotExtremal`].
    pub fn certificate_graph(&self) -> Option<Result<Graph>> {
        let rebuilt = match self {
            Classification::Complete { n } => complete(*n),
            Classification::QuotientP5 { sizes } => path(5)
                .and_then(|p| BlowupSpec::new(p, sizes.clone()))
                .and_then(|s| blowup(&s)),
            Classification::DiamondFamily { spec, sizes } => diamond(spec)
                .and_then(|base| BlowupSpec::new(base, sizes.clone()))
                .and_then(|s| blowup(&s)),
            Classification::NotExtremal { .. } => return None,
        };
        Some(rebuilt)
    }
}

fn require_connected_pair(g: &Graph) -> Result<usize> {
    if g.order() < 2 {
        return Err(Error::Precondition("classification needs n >= 2".into()));
    }
    diameter(g).finite().ok_or(Error::Disconnected)
}

/// Clique sizes along an isomorphism `base -> quotient`.
fn lift_sizes(phi: &[usize], part: &Partition) -> Vec<usize> {
    phi.iter().map(|&c| part.classes()[c].len()).collect()
}

/// Decide which extremal family, if any, a connected graph belongs to,
/// from its structure alone (no spectral computation).
pub fn classify_minus_one(g: &Graph) -> Result<Classification> {
    let d = require_connected_pair(g)?;
    if g.is_complete() {
        return Ok(Classification::Complete { n: g.order() });
    }
    let (gc, part) = quotient(g);
    let p5 = path(5)?;
    if let Some(phi) = find_isomorphism(&p5, &gc) {
        return Ok(Classification::QuotientP5 {
            sizes: lift_sizes(&phi, &part),
        });
    }
    if d % 3 != 1 {
        return Ok(Classification::NotExtremal {
            reason: NotExtremalReason::FailsMod3,
        });
    }
    if d < 7 {
        return Ok(Classification::NotExtremal {
            reason: NotExtremalReason::DiameterTooSmall,
        });
    }
    let admissible = AdmissibleSet::new(d)?;
    let extra = gc.order().checked_sub(d + 1);
    for w in admissible.subsets() {
        if Some(w.len()) != extra {
            continue;
        }
        let spec = DiamondSpec::new(d, w)?;
        if let Some(phi) = find_isomorphism(&diamond(&spec)?, &gc) {
            return Ok(Classification::DiamondFamily {
                sizes: lift_sizes(&phi, &part),
                spec,
            });
        }
    }
    let reason = match diamond_shape(&gc) {
        Some(spec) if !spec.is_admissible() => NotExtremalReason::SpacingViolation,
        _ => NotExtremalReason::QuotientMismatch,
    };
    Ok(Classification::NotExtremal { reason })
}

/// If `g` is `P_{d+1} ◇ W` around one of its diametrical paths, recover
/// `(d, W)`.
fn diamond_shape(g: &Graph) -> Option<DiamondSpec> {
    let walk = diametrical_path(g)?;
    let d = walk.len() - 1;
    let mut pos = vec![usize::MAX; g.order()];
    for (i, &v) in walk.iter().enumerate() {
        pos[v] = i;
    }
    // the walk must be induced
    for (i, &v) in walk.iter().enumerate() {
        if bits(g.neighbors(v)).any(|u| pos[u] != usize::MAX && pos[u].abs_diff(i) != 1) {
            return None;
        }
    }
    let mut w = Vec::new();
    for x in (0..g.order()).filter(|&x| pos[x] == usize::MAX) {
        let nb: Vec<usize> = bits(g.neighbors(x)).collect();
        if nb.len() != 2 || nb.iter().any(|&u| pos[u] == usize::MAX) {
            return None;
        }
        let (a, b) = (pos[nb[0]].min(pos[nb[1]]), pos[nb[0]].max(pos[nb[1]]));
        if b != a + 1 || w.contains(&a) {
            return None;
        }
        w.push(a);
    }
    DiamondSpec::new(d, w).ok()
}

/// The structural classification is extremal exactly when
/// `m_G(-1) = n - d` holds spectrally.
pub fn minus_one_crosscheck(g: &Graph) -> Result<bool> {
    let structural = classify_minus_one(g)?.is_extremal();
    let spectral = extremality_check(g, &rational_from_i64(-1))?;
    Ok(structural == spectral)
}

/// For a connected graph that is not a path: every squarefree factor of
/// the characteristic polynomial whose multiplicity reaches `n - d` has
/// all its roots in `{0, -1}`. Vacuously true below the bound; a
/// multiplicity above `n - d` also fails the check.
pub fn extremal_eigenvalue_check(g: &Graph) -> Result<bool> {
    let d = diameter(g).finite().ok_or(Error::Disconnected)?;
    if g.is_path() {
        return Err(Error::Precondition(
            "paths attain n - d at every eigenvalue; check them separately".into(),
        ));
    }
    let bound = g.order() - d;
    let (top, factors) = max_multiplicity(g);
    if top < bound {
        return Ok(true);
    }
    if top > bound {
        return Ok(false);
    }
    let zero = rational_from_i64(0);
    let minus_one = rational_from_i64(-1);
    Ok(factors.iter().all(|q| {
        let roots_in_set = eval_multiplicity(q, &zero).unwrap_or(0)
            + eval_multiplicity(q, &minus_one).unwrap_or(0);
        !q.is_zero() && q.degree() == Some(roots_in_set)
    }))
}

/// Certificate soundness: the certificate re-blows to a graph isomorphic
/// to `g`, and `g` is spectrally extremal. Vacuously true for
/// non-extremal classifications.
pub fn certificate_check(g: &Graph, class: &Classification) -> Result<bool> {
    let Some(rebuilt) = class.certificate_graph() else {
        return Ok(true);
    };
    let rebuilt = rebuilt?;
    Ok(are_isomorphic(&rebuilt, g) && extremality_check(g, &rational_from_i64(-1))?)
}
