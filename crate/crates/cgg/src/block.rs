//! Runs of consecutive parallel edges, anchored at a polygon position.
//!
//! All edges perpendicular to the radius through position `d` connect
//! positions `d+t` and `d-t` for offsets `t` in `1..n` of a fixed parity, so
//! each such edge is identified by its offset and the whole family is
//! linearly ordered outward from the anchor. A block is a window of
//! consecutive edges in that order; its two flanking arcs are pinned down by
//! how many graph vertices sit on the far side (away from the anchor).

use crate::edge::{Direction, Edge};
use crate::error::{CggError, Result};
use crate::labelling::{Labelling, VertexLabel};

/// A nonempty run of consecutive parallel edges plus its two flanking arcs.
///
/// `near_arc` holds the graph vertices on the anchor's side of the run,
/// `far_arc` those on the opposite side, both in counterclockwise order.
/// `|near_arc| + |far_arc| + 2·(number of edges) = n` always holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeBlock {
    anchor: i32,
    direction: Direction,
    edges: Vec<Edge>,
    near_arc: Vec<VertexLabel>,
    far_arc: Vec<VertexLabel>,
}

impl EdgeBlock {
    /// Label of the anchor position the block is measured from.
    pub fn anchor(&self) -> i32 {
        self.anchor
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Edges ordered from the anchor's side outward.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn near_arc(&self) -> &[VertexLabel] {
        &self.near_arc
    }

    pub fn far_arc(&self) -> &[VertexLabel] {
        &self.far_arc
    }
}

/// The parity the offsets `t` must have for edges anchored at `anchor`:
/// both endpoints `anchor ± t` must be graph positions.
fn offset_parity(labelling: &Labelling, anchor_pos: u32) -> u32 {
    if labelling.is_vertex_position(anchor_pos as i64) {
        0
    } else {
        1
    }
}

/// All edges of the complete graph in the direction of `anchor`, ordered
/// from the anchor's side outward.
///
/// There are `(n-1)/2` of them for odd `n`; for even `n` there are `n/2`
/// when the anchor position hosts no graph vertex and `n/2 - 1` when it does.
pub fn edges_in_direction(labelling: &Labelling, anchor: i64) -> Vec<Edge> {
    let n = labelling.n();
    let pos = labelling.position_of(anchor);
    let start = if offset_parity(labelling, pos) == 0 {
        2
    } else {
        1
    };
    let mut edges = Vec::new();
    let mut t = start;
    while t < n {
        let u = labelling.label_at(pos as i64 + t as i64);
        let v = labelling.label_at(pos as i64 - t as i64);
        edges.push(Edge::new(labelling, u as i64, v as i64).expect("offsets stay in class"));
        t += 2;
    }
    edges
}

/// The unique block of `len` consecutive edges in the direction of `anchor`
/// with exactly `far_count` graph vertices on the side away from the anchor.
///
/// `far_count` must not exceed `n - 2·len` and must have the parity of the
/// antipodal position's vertex count (the antipode contributes one far vertex
/// whenever it hosts a graph vertex); otherwise the block does not exist.
pub fn block(labelling: &Labelling, len: u32, anchor: i64, far_count: u32) -> Result<EdgeBlock> {
    let n = labelling.n();
    if len == 0 || 2 * len > n {
        return Err(CggError::InvalidParameter(format!(
            "block length must be in 1..={}, got {len}",
            n / 2
        )));
    }
    if far_count > n - 2 * len {
        return Err(CggError::InvalidParameter(format!(
            "far-arc count {far_count} exceeds n - 2·len = {}",
            n - 2 * len
        )));
    }

    let pos = labelling.position_of(anchor);
    let all = edges_in_direction(labelling, anchor);
    let m = all.len() as u32;
    if len > m {
        return Err(CggError::InvalidParameter(format!(
            "direction of {anchor} holds only {m} edges, need {len}"
        )));
    }

    let antipode = u32::from(labelling.is_vertex_position(pos as i64 + n as i64));
    if far_count % 2 != antipode % 2 {
        return Err(CggError::InfeasibleBlock {
            anchor,
            far_count,
            required_even: antipode == 0,
        });
    }

    // far_count = 2·(edges beyond the window) + antipode
    let beyond = (far_count - antipode) / 2;
    debug_assert!(beyond <= m - len, "parity and range imply a valid window");
    let skip = (m - len - beyond) as usize;
    let edges: Vec<Edge> = all[skip..skip + len as usize].to_vec();

    let start = if offset_parity(labelling, pos) == 0 {
        2
    } else {
        1
    };
    let t_first = start + 2 * skip as u32;
    let t_last = t_first + 2 * (len - 1);

    // Near arc: positions within the innermost edge, counterclockwise.
    let mut near_arc = Vec::new();
    let mut o = -(t_first as i64) + 1;
    while o < t_first as i64 {
        if let Some(v) = labelling.vertex_at(pos as i64 + o) {
            near_arc.push(v);
        }
        o += 1;
    }
    // Far arc: positions beyond the outermost edge, counterclockwise.
    let mut far_arc = Vec::new();
    let mut o = t_last as i64 + 1;
    while o < 2 * n as i64 - t_last as i64 {
        if let Some(v) = labelling.vertex_at(pos as i64 + o) {
            far_arc.push(v);
        }
        o += 1;
    }

    debug_assert_eq!(far_arc.len() as u32, far_count);
    debug_assert_eq!(
        near_arc.len() as u32 + far_count + 2 * len,
        n,
        "arcs and window partition the vertex set"
    );

    Ok(EdgeBlock {
        anchor: labelling.label_at(anchor),
        direction: Direction::new(n, anchor),
        edges,
        near_arc,
        far_arc,
    })
}
