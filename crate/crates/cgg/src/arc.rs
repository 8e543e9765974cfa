//! Arc bookkeeping relative to the reference boundary gap.
//!
//! Every edge splits the polygon boundary into two open arcs. The reference
//! gap is the piece of boundary just past label `n` counterclockwise (between
//! the vertices labelled `n-1` and `-(n-1)` under the default parities); the
//! arc of an edge that stays away from that gap is its "behind" side. Nesting
//! of these arcs gives the lies-behind partial order used by the arc lemmas.

use crate::edge::Edge;
use crate::error::Result;
use crate::labelling::{Labelling, VertexLabel};

/// Partition of the remaining graph vertices by an edge: `behind` is the side
/// away from the reference gap, `front` the side containing it. Both lists
/// are in counterclockwise order; together with the two endpoints they cover
/// the whole vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcSplit {
    pub behind: Vec<VertexLabel>,
    pub front: Vec<VertexLabel>,
}

/// Linear coordinate obtained by cutting the boundary circle inside the
/// reference gap (between positions `n` and `n+1`). Arcs that avoid the gap
/// become plain intervals in this coordinate.
fn cut_coord(labelling: &Labelling, pos: u32) -> u32 {
    let two_n = labelling.two_n();
    (pos + two_n - (labelling.n() + 1)) % two_n
}

/// The open interval of cut coordinates spanned by the edge's arc that avoids
/// the reference gap.
fn behind_interval(labelling: &Labelling, e: &Edge) -> (u32, u32) {
    let (a, b) = e.endpoints();
    let ca = cut_coord(labelling, labelling.position_of(a.value() as i64));
    let cb = cut_coord(labelling, labelling.position_of(b.value() as i64));
    (ca.min(cb), ca.max(cb))
}

/// Split the vertex set by the arcs of `e`.
pub fn arc_split(labelling: &Labelling, e: &Edge) -> Result<ArcSplit> {
    let (lo, hi) = behind_interval(labelling, e);
    let two_n = labelling.two_n();
    let uncut = |c: u32| (c + labelling.n() + 1) % two_n;

    let mut behind = Vec::new();
    for c in (lo + 1)..hi {
        if let Some(v) = labelling.vertex_at(uncut(c) as i64) {
            behind.push(v);
        }
    }
    // Front side, counterclockwise starting just past the arc's upper end.
    let mut front = Vec::new();
    for c in (hi + 1)..(lo + two_n) {
        if let Some(v) = labelling.vertex_at(uncut(c % two_n) as i64) {
            front.push(v);
        }
    }
    Ok(ArcSplit { behind, front })
}

/// Does `e2` lie behind `e1`, i.e. is the behind-arc of `e2` contained in the
/// behind-arc of `e1`? The relation is reflexive: every edge lies behind
/// itself.
pub fn lies_behind(labelling: &Labelling, e2: &Edge, e1: &Edge) -> bool {
    let (lo2, hi2) = behind_interval(labelling, e2);
    let (lo1, hi1) = behind_interval(labelling, e1);
    lo1 <= lo2 && hi2 <= hi1
}
