//! The extremal constructions: graphs with the maximum number of edges among
//! those avoiding `k+1` pairwise disjoint edges while leaving a free boundary
//! arc of prescribed order.
//!
//! Three families cover the whole parameter range:
//!
//! * [`max_arc_graph`]: `k·n` edges, free arc of order `n-2k`. Built one
//!   direction at a time from blocks that start pinned to the complement of
//!   the arc and drift to central position.
//! * [`extended_arc_graph`]: the arc grows by `ell` vertices at the cost of
//!   `ell(ell+1)/2` edges. Directions split into five ranges; in the low
//!   ranges every edge that fits the enlarged complement arc is taken, in the
//!   high range central or near-central blocks are used.
//! * [`star_arc_graph`]: for very long arcs, simply every edge with an
//!   endpoint off the arc.
//!
//! Every doubly-defined boundary direction is computed from both of its
//! defining clauses and the results are asserted equal; a mismatch is a
//! construction-integrity error and must never fire.

use std::collections::{BTreeMap, BTreeSet};

use crate::block::{block, edges_in_direction};
use crate::edge::{Direction, Edge};
use crate::error::{CggError, Result};
use crate::graph::Cgg;
use crate::labelling::{Labelling, VertexLabel};

/// Parameters of an arc-avoiding construction plus the derived vertex sets:
/// the free arc `A` and the three segments of its complement `K`.
#[derive(Clone, Debug)]
pub struct ConstructionSpec {
    n: u32,
    k: u32,
    ell: u32,
    m: u32,
    labelling: Labelling,
    free_arc: Vec<VertexLabel>,
    k_plus: Vec<VertexLabel>,
    k_zero: Vec<VertexLabel>,
    k_minus: Vec<VertexLabel>,
    complement_positions: BTreeSet<u32>,
}

impl ConstructionSpec {
    /// `ell = 0` describes the plain maximal construction.
    pub fn new(n: u32, k: u32, ell: u32) -> Result<Self> {
        validate_nk(n, k)?;
        if ell >= k {
            return Err(CggError::InvalidParameter(format!(
                "ell must satisfy 0 <= ell < k, got ell={ell}, k={k}"
            )));
        }
        let q = n - 2 * k + ell;
        let labelling = Labelling::for_arc_order(n, q)?;
        let free_arc = labelling.free_arc(q)?;
        let arc_set: BTreeSet<i32> = free_arc.iter().map(|v| v.value()).collect();

        // Complement in counterclockwise order, starting just past the top
        // end of the arc.
        let top_pos = labelling.position_of(free_arc.last().unwrap().value() as i64);
        let mut complement = Vec::new();
        for step in 1..labelling.two_n() {
            let pos = (top_pos + step) % labelling.two_n();
            if let Some(v) = labelling.vertex_at(pos as i64) {
                if !arc_set.contains(&v.value()) {
                    complement.push(v);
                }
            }
        }
        debug_assert_eq!(complement.len() as u32, 2 * k - ell);

        let upper = (k - ell) as usize;
        let k_plus = complement[..upper].to_vec();
        let k_zero = complement[upper..upper + ell as usize].to_vec();
        let k_minus = complement[upper + ell as usize..].to_vec();
        let complement_positions = complement
            .iter()
            .map(|v| labelling.position_of(v.value() as i64))
            .collect();

        Ok(ConstructionSpec {
            n,
            k,
            ell,
            m: (n - 2 * k) / 2,
            labelling,
            free_arc,
            k_plus,
            k_zero,
            k_minus,
            complement_positions,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// `m = floor((n - 2k) / 2)`, the half-order of the plain free arc.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Order of the designated free arc, `n - 2k + ell`.
    pub fn arc_order(&self) -> u32 {
        self.n - 2 * self.k + self.ell
    }

    pub fn labelling(&self) -> &Labelling {
        &self.labelling
    }

    /// The designated free arc `A`, counterclockwise.
    pub fn free_arc(&self) -> &[VertexLabel] {
        &self.free_arc
    }

    /// Uppermost `k - ell` vertices of the complement.
    pub fn k_plus(&self) -> &[VertexLabel] {
        &self.k_plus
    }

    /// Middle `ell` vertices of the complement.
    pub fn k_zero(&self) -> &[VertexLabel] {
        &self.k_zero
    }

    /// Lowest `k - ell` vertices of the complement.
    pub fn k_minus(&self) -> &[VertexLabel] {
        &self.k_minus
    }

    /// Is the vertex outside the free arc?
    pub fn is_allowed_vertex(&self, v: VertexLabel) -> bool {
        self.complement_positions
            .contains(&self.labelling.position_of(v.value() as i64))
    }

    /// An edge is allowed when at least one endpoint avoids the free arc.
    pub fn is_allowed_edge(&self, e: &Edge) -> bool {
        let (a, b) = e.endpoints();
        self.is_allowed_vertex(a) || self.is_allowed_vertex(b)
    }

    /// Positions of the complement arc enlarged by `extra` graph vertices,
    /// added at the bottom end (counterclockwise past the complement) or at
    /// the top end.
    fn enlarged_positions(&self, extra: u32, at_bottom: bool) -> BTreeSet<u32> {
        let mut set = self.complement_positions.clone();
        let two_n = self.labelling.two_n();
        let (mut pos, step) = if at_bottom {
            let last = self.labelling.position_of(
                self.k_minus
                    .last()
                    .or(self.k_zero.last())
                    .expect("complement is nonempty")
                    .value() as i64,
            );
            (last, 2i64)
        } else {
            let first = self.labelling.position_of(
                self.k_plus
                    .first()
                    .or(self.k_zero.first())
                    .expect("complement is nonempty")
                    .value() as i64,
            );
            (first, -2i64)
        };
        for _ in 0..extra {
            pos = (pos as i64 + step).rem_euclid(two_n as i64) as u32;
            set.insert(pos);
        }
        set
    }
}

fn validate_nk(n: u32, k: u32) -> Result<()> {
    if n < 4 {
        return Err(CggError::InvalidParameter(format!(
            "n must be at least 4, got {n}"
        )));
    }
    if k == 0 || k > n / 2 - 1 {
        return Err(CggError::InvalidParameter(format!(
            "k must satisfy 1 <= k <= n/2 - 1 = {}, got {k}",
            n / 2 - 1
        )));
    }
    Ok(())
}

/// All allowed edges in the direction of `anchor`, ordered outward from the
/// anchor. Allowed edges of one direction always form a consecutive run;
/// this is asserted and a violation is a construction-integrity error.
pub fn allowed_edges(spec: &ConstructionSpec, anchor: i64) -> Result<Vec<Edge>> {
    let all = edges_in_direction(spec.labelling(), anchor);
    let picked: Vec<(usize, Edge)> = all
        .iter()
        .enumerate()
        .filter(|(_, e)| spec.is_allowed_edge(e))
        .map(|(i, e)| (i, *e))
        .collect();
    if let (Some(first), Some(last)) = (picked.first(), picked.last()) {
        if last.0 - first.0 + 1 != picked.len() {
            return Err(CggError::ConstructionIntegrity(format!(
                "allowed edges in direction of {anchor} are not consecutive"
            )));
        }
    }
    Ok(picked.into_iter().map(|(_, e)| e).collect())
}

/// Edges of the direction of `anchor` whose endpoints both lie in `arc`,
/// ordered outward from the anchor. The run must be consecutive.
fn edges_within_arc(labelling: &Labelling, anchor: i64, arc: &BTreeSet<u32>) -> Result<Vec<Edge>> {
    let all = edges_in_direction(labelling, anchor);
    let picked: Vec<(usize, Edge)> = all
        .iter()
        .enumerate()
        .filter(|(_, e)| {
            let (a, b) = e.endpoints();
            arc.contains(&labelling.position_of(a.value() as i64))
                && arc.contains(&labelling.position_of(b.value() as i64))
        })
        .map(|(i, e)| (i, *e))
        .collect();
    if let (Some(first), Some(last)) = (picked.first(), picked.last()) {
        if last.0 - first.0 + 1 != picked.len() {
            return Err(CggError::ConstructionIntegrity(format!(
                "edges fitting the enlarged arc at {anchor} are not consecutive"
            )));
        }
    }
    Ok(picked.into_iter().map(|(_, e)| e).collect())
}

fn mirror_edges(labelling: &Labelling, edges: &[Edge]) -> Vec<Edge> {
    edges
        .iter()
        .map(|e| {
            let (a, b) = e.endpoints();
            Edge::new(
                labelling,
                labelling.mirror(a).value() as i64,
                labelling.mirror(b).value() as i64,
            )
            .expect("mirrored labels stay in class")
        })
        .collect()
}

/// Accumulates per-direction edge sets; directions defined by more than one
/// clause must agree.
struct DirectionTable {
    n: u32,
    sets: BTreeMap<u32, (i64, BTreeSet<Edge>)>,
}

impl DirectionTable {
    fn new(n: u32) -> Self {
        DirectionTable {
            n,
            sets: BTreeMap::new(),
        }
    }

    fn add(&mut self, anchor: i64, edges: Vec<Edge>) -> Result<()> {
        let rep = Direction::new(self.n, anchor).rep();
        let set: BTreeSet<Edge> = edges.into_iter().collect();
        match self.sets.get(&rep) {
            None => {
                self.sets.insert(rep, (anchor, set));
                Ok(())
            }
            Some((prev_anchor, prev)) => {
                if *prev != set {
                    Err(CggError::ConstructionIntegrity(format!(
                        "direction {rep} defined twice with different edge sets \
                         (anchors {prev_anchor} and {anchor})"
                    )))
                } else {
                    Ok(())
                }
            }
        }
    }

    fn into_graph(self, labelling: Labelling) -> Result<Cgg> {
        if self.sets.len() != self.n as usize {
            return Err(CggError::ConstructionIntegrity(format!(
                "only {} of {} directions were defined",
                self.sets.len(),
                self.n
            )));
        }
        let edges: Vec<Edge> = self
            .sets
            .into_values()
            .flat_map(|(_, set)| set.into_iter())
            .collect();
        Cgg::new(labelling, edges)
    }
}

/// The maximal construction: `k` edges in every direction, `k·n` edges in
/// total, leaving the canonical free arc of order `n - 2k`.
pub fn max_arc_graph(n: u32, k: u32) -> Result<Cgg> {
    validate_nk(n, k)?;
    let spec = ConstructionSpec::new(n, k, 0)?;
    let lab = *spec.labelling();
    let m = spec.m() as i64;
    let mut table = DirectionTable::new(n);

    if n % 2 == 0 {
        // Blocks pinned to the complement while the far side shrinks, then
        // alternating central and near-central blocks around the back.
        for j in -m..=m {
            table.add(
                j,
                block(&lab, k, j, j.unsigned_abs() as u32)?.edges().to_vec(),
            )?;
        }
        for i in 0..=2 * k as i64 {
            let far = spec.m() - (i % 2) as u32;
            table.add(m + i, block(&lab, k, m + i, far)?.edges().to_vec())?;
        }
    } else {
        for j in -(m + 1)..=(m + 1) {
            table.add(
                j,
                block(&lab, k, j, j.unsigned_abs() as u32)?.edges().to_vec(),
            )?;
        }
        for i in 0..=2 * k as i64 + 1 {
            let far = spec.m() + (i % 2) as u32;
            table.add(m + i, block(&lab, k, m + i, far)?.edges().to_vec())?;
        }
    }

    let g = table.into_graph(lab)?;
    finish_construction(&g, &spec)?;
    Ok(g)
}

/// The extended construction: free arc of order `n - 2k + ell` and
/// `k·n - ell(ell+1)/2` edges. `ell = 0` must reproduce [`max_arc_graph`]
/// edge for edge.
pub fn extended_arc_graph(n: u32, k: u32, ell: u32) -> Result<Cgg> {
    let spec = ConstructionSpec::new(n, k, ell)?;
    let lab = *spec.labelling();
    let (k_i64, ell_i64, m_i64) = (k as i64, ell as i64, spec.m() as i64);
    let mut table = DirectionTable::new(n);

    // Directions 0..=ell (and mirrored): every edge that fits the complement
    // arc enlarged by |j| vertices at the bottom (top when j < 0).
    for j in 0..=ell_i64 {
        let arc = spec.enlarged_positions(j as u32, true);
        let fill = edges_within_arc(&lab, j, &arc)?;
        let expected = k - (ell - j as u32).div_ceil(2);
        if fill.len() != expected as usize {
            return Err(CggError::ConstructionIntegrity(format!(
                "direction {j}: {} edges fit the enlarged arc, expected {expected}",
                fill.len()
            )));
        }
        table.add(j, fill.clone())?;
        if j > 0 {
            table.add(-j, mirror_edges(&lab, &fill))?;
        }
    }

    // Directions ell..=ell+m (and mirrored): the k most central edges that
    // fit the enlarged arc, leaving j - ell free vertices in its middle.
    for j in ell_i64..=ell_i64 + m_i64 {
        let arc = spec.enlarged_positions(j as u32, true);
        let fits = edges_within_arc(&lab, j, &arc)?;
        if fits.len() < k as usize {
            return Err(CggError::ConstructionIntegrity(format!(
                "direction {j}: only {} edges fit the enlarged arc, need {k}",
                fits.len()
            )));
        }
        let central: Vec<Edge> = fits[..k as usize].to_vec();
        table.add(j, central.clone())?;
        table.add(-j, mirror_edges(&lab, &central))?;
    }

    // The back range: central or near-central blocks.
    if n % 2 == 0 {
        for j in ell_i64 + m_i64..2 * k_i64 + m_i64 - ell_i64 {
            let far = if (j - ell_i64 - m_i64) % 2 == 0 {
                spec.m()
            } else {
                spec.m() - 1
            };
            table.add(j, block(&lab, k, j, far)?.edges().to_vec())?;
        }
    } else {
        for j in ell_i64 + m_i64..=2 * k_i64 + m_i64 - ell_i64 + 1 {
            let far = if (j - ell_i64 - m_i64) % 2 == 0 {
                spec.m()
            } else {
                spec.m() + 1
            };
            table.add(j, block(&lab, k, j, far)?.edges().to_vec())?;
        }
    }

    let g = table.into_graph(lab)?;
    finish_construction(&g, &spec)?;
    Ok(g)
}

/// Shared post-conditions: every edge allowed, per-direction counts as
/// announced, total edge count as announced.
fn finish_construction(g: &Cgg, spec: &ConstructionSpec) -> Result<()> {
    let (n, k, ell) = (spec.n(), spec.k(), spec.ell());
    for e in g.edges() {
        if !spec.is_allowed_edge(e) {
            return Err(CggError::ConstructionIntegrity(format!(
                "edge {e} lies inside the free arc"
            )));
        }
    }
    let counts = g.per_direction_counts();
    for (rep, count) in &counts {
        let j = Direction::new(n, *rep as i64).signed_rep().unsigned_abs();
        let expected = if j <= ell {
            k - (ell - j).div_ceil(2)
        } else {
            k
        };
        if *count != expected as usize {
            return Err(CggError::ConstructionIntegrity(format!(
                "direction {rep} holds {count} edges, expected {expected}"
            )));
        }
    }
    let expected_total = (k * n - ell * (ell + 1) / 2) as usize;
    if g.edge_count() != expected_total {
        return Err(CggError::ConstructionIntegrity(format!(
            "{} edges in total, expected {expected_total}",
            g.edge_count()
        )));
    }
    Ok(())
}

/// The long-arc construction: every edge with at least one endpoint off the
/// canonical arc of `q` consecutive vertices. `binom(n,2) - binom(q,2)`
/// edges.
pub fn star_arc_graph(n: u32, q: u32) -> Result<Cgg> {
    if n < 4 || q == 0 || q >= n {
        return Err(CggError::InvalidParameter(format!(
            "star construction needs 1 <= q < n, got n={n}, q={q}"
        )));
    }
    let lab = Labelling::for_arc_order(n, q)?;
    let arc: BTreeSet<i32> = lab.free_arc(q)?.iter().map(|v| v.value()).collect();
    let vs = lab.vertices();
    let mut edges = Vec::new();
    for i in 0..vs.len() {
        for j in (i + 1)..vs.len() {
            if arc.contains(&vs[i].value()) && arc.contains(&vs[j].value()) {
                continue;
            }
            edges.push(Edge::new(&lab, vs[i].value() as i64, vs[j].value() as i64)?);
        }
    }
    debug_assert_eq!(
        edges.len() as u64,
        binom2(n as u64) - binom2(q as u64),
        "all-but-arc edge count"
    );
    Cgg::new(lab, edges)
}

pub(crate) fn binom2(x: u64) -> u64 {
    x * x.saturating_sub(1) / 2
}

/// The extremal graph for the full parameter range: dispatches on how the
/// requested arc order `q` compares to `n - 2k` and `n - k`.
pub fn extremal_graph(n: u32, k: u32, q: u32) -> Result<Cgg> {
    validate_nk(n, k)?;
    if q == 0 || q >= n {
        return Err(CggError::InvalidParameter(format!(
            "q must satisfy 1 <= q <= n - 1, got {q}"
        )));
    }
    if q <= n - 2 * k {
        max_arc_graph(n, k)
    } else if q < n - k {
        extended_arc_graph(n, k, q - (n - 2 * k))
    } else {
        star_arc_graph(n, q)
    }
}

/// The selection rule restating the per-direction choice: take all allowed
/// edges when there are at most `k`; otherwise take the window of `k`
/// consecutive allowed edges with the most balanced flanking vertex counts.
/// Ties between two equally balanced windows go to the lower one: for even
/// `n` the window with more vertices on the anchor side, for odd `n` the
/// side alternates with the parity of the direction representative.
pub fn balanced_window_choice(spec: &ConstructionSpec, d: Direction) -> Result<Vec<Edge>> {
    let lab = spec.labelling();
    let n = spec.n();
    let k = spec.k() as usize;
    let anchor = d.rep() as i64;
    let allowed = allowed_edges(spec, anchor)?;
    if allowed.len() <= k {
        return Ok(allowed);
    }

    let all = edges_in_direction(lab, anchor);
    let first_idx = all
        .iter()
        .position(|e| e == &allowed[0])
        .expect("allowed edges come from the direction");
    let anchor_holds = u32::from(lab.is_vertex_position(anchor));
    let antipode_holds = u32::from(lab.is_vertex_position(anchor + n as i64));
    let m_total = all.len();

    let window_sides = |s: usize| -> (u32, u32) {
        let lo = first_idx + s;
        let near = 2 * lo as u32 + anchor_holds;
        let far = 2 * (m_total - lo - k) as u32 + antipode_holds;
        (near, far)
    };

    let mut best: Option<(u32, usize)> = None;
    for s in 0..=(allowed.len() - k) {
        let (near, far) = window_sides(s);
        let diff = near.abs_diff(far);
        match best {
            None => best = Some((diff, s)),
            Some((bd, bs)) => {
                if diff < bd {
                    best = Some((diff, s));
                } else if diff == bd && s != bs {
                    let (near_b, far_b) = window_sides(bs);
                    let want_near_heavy = if n % 2 == 0 {
                        true
                    } else {
                        (d.rep() as i64 - spec.ell() as i64 - spec.m() as i64).rem_euclid(2) == 0
                    };
                    let b_heavy = near_b > far_b;
                    if want_near_heavy != b_heavy {
                        let (near_s, far_s) = window_sides(s);
                        if (near_s > far_s) == want_near_heavy {
                            best = Some((diff, s));
                        }
                    }
                }
            }
        }
    }
    let s = best.expect("at least one window").1;
    Ok(allowed[s..s + k].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disjoint::{is_ik1_free, max_disjoint_set};
    use crate::graph::free_arcs;

    fn pairs(edges: &[Edge]) -> Vec<(i32, i32)> {
        edges
            .iter()
            .map(|e| {
                let (a, b) = e.endpoints();
                (a.value(), b.value())
            })
            .collect()
    }

    #[test]
    fn max_arc_twelve_three() {
        let g = max_arc_graph(12, 3).unwrap();
        assert_eq!(g.edge_count(), 36);
        let fa = free_arcs(&g);
        assert_eq!(fa.max_len, 6);
        assert!(fa
            .runs
            .iter()
            .any(|r| r.iter().map(|v| v.value()).collect::<BTreeSet<_>>()
                == BTreeSet::from([-5, -3, -1, 1, 3, 5])));
        let vertical = g.edges_in_direction(Direction::new(12, 0));
        assert_eq!(pairs(&vertical), vec![(-11, 11), (-9, 9), (-7, 7)]);
    }

    #[test]
    fn max_arc_ten_two() {
        let g = max_arc_graph(10, 2).unwrap();
        assert_eq!(g.edge_count(), 20);
    }

    #[test]
    fn max_arc_thirteen_three() {
        let g = max_arc_graph(13, 3).unwrap();
        assert_eq!(g.edge_count(), 39);
        assert_eq!(free_arcs(&g).max_len, 7);
    }

    #[test]
    fn max_arc_counts_and_freeness() {
        for n in 8..=16u32 {
            for k in 1..=(n / 2 - 1) {
                let g = max_arc_graph(n, k).unwrap();
                assert_eq!(g.edge_count() as u32, k * n, "n={n}, k={k}");
                assert!(g.per_direction_counts().values().all(|&c| c == k as usize));
                assert!(is_ik1_free(&g, k), "n={n}, k={k}");
                assert_eq!(max_disjoint_set(&g).size, k as usize);
                assert!(free_arcs(&g).max_len as u32 >= n - 2 * k);
            }
        }
    }

    #[test]
    fn extended_arc_spot_values() {
        let g = extended_arc_graph(12, 3, 2).unwrap();
        assert_eq!(g.edge_count(), 33);
        let counts = g.per_direction_counts();
        for d in [-1i64, 0, 1] {
            assert_eq!(counts[&Direction::new(12, d).rep()], 2, "direction {d}");
        }
        for d in 2..=10i64 {
            assert_eq!(counts[&Direction::new(12, d).rep()], 3, "direction {d}");
        }

        let g = extended_arc_graph(13, 3, 2).unwrap();
        assert_eq!(g.edge_count(), 36);
        assert_eq!(free_arcs(&g).max_len, 9);
        let counts = g.per_direction_counts();
        for d in [-1i64, 0, 1] {
            assert_eq!(counts[&Direction::new(13, d).rep()], 2, "direction {d}");
        }
    }

    #[test]
    fn extended_at_ell_zero_reproduces_max_arc() {
        for n in 8..=14u32 {
            for k in 1..=(n / 2 - 1) {
                let a = max_arc_graph(n, k).unwrap();
                let b = extended_arc_graph(n, k, 0).unwrap();
                let ea: BTreeSet<Edge> = a.edges().cloned().collect();
                let eb: BTreeSet<Edge> = b.edges().cloned().collect();
                assert_eq!(ea, eb, "n={n}, k={k}");
            }
        }
    }

    #[test]
    fn extended_counts_and_freeness() {
        for n in 8..=16u32 {
            for k in 1..=(n / 2 - 1) {
                for ell in 1..k {
                    let g = extended_arc_graph(n, k, ell).unwrap();
                    assert_eq!(
                        g.edge_count() as u32,
                        k * n - ell * (ell + 1) / 2,
                        "n={n}, k={k}, ell={ell}"
                    );
                    assert!(is_ik1_free(&g, k), "n={n}, k={k}, ell={ell}");
                    assert!(
                        free_arcs(&g).max_len as u32 >= n - 2 * k + ell,
                        "n={n}, k={k}, ell={ell}"
                    );
                }
            }
        }
    }

    #[test]
    fn retention_of_still_allowed_edges() {
        // Every edge of the plain construction that stays allowed under the
        // longer arc survives into the extended construction.
        for (n, k, ell) in [(12u32, 3u32, 2u32), (13, 3, 2), (14, 4, 2), (16, 5, 3)] {
            let plain = max_arc_graph(n, k).unwrap();
            let extended = extended_arc_graph(n, k, ell).unwrap();
            let spec = ConstructionSpec::new(n, k, ell).unwrap();
            if plain.labelling() != extended.labelling() {
                // The parity class flips when ell is odd; retention is only
                // meaningful when both graphs live on the same class.
                continue;
            }
            for e in plain.edges() {
                if spec.is_allowed_edge(e) {
                    assert!(extended.has_edge(e), "n={n} k={k} ell={ell}: {e} dropped");
                }
            }
        }
    }

    #[test]
    fn star_graph_counts() {
        assert_eq!(star_arc_graph(10, 8).unwrap().edge_count(), 17);
        assert_eq!(star_arc_graph(9, 8).unwrap().edge_count(), 8);
        assert_eq!(star_arc_graph(6, 1).unwrap().edge_count(), 15);
    }

    #[test]
    fn star_graph_is_ik1_free_for_short_complements() {
        for n in 6..=12u32 {
            for q in 1..n {
                let g = star_arc_graph(n, q).unwrap();
                // Every edge meets the complement of the arc, which has only
                // n - q vertices, so n - q + 1 disjoint edges cannot exist.
                assert!(is_ik1_free(&g, n - q), "n={n}, q={q}");
            }
        }
    }

    #[test]
    fn extremal_dispatch() {
        assert_eq!(extremal_graph(12, 3, 6).unwrap().edge_count(), 36);
        assert_eq!(extremal_graph(12, 3, 8).unwrap().edge_count(), 33);
        assert_eq!(extremal_graph(12, 3, 9).unwrap().edge_count(), 30);
        assert!(extremal_graph(12, 0, 3).is_err());
        assert!(extremal_graph(12, 3, 12).is_err());
    }

    #[test]
    fn spec_segments_have_the_announced_sizes() {
        for (n, k, ell) in [(12u32, 3u32, 2u32), (13, 3, 2), (16, 5, 0), (17, 6, 4)] {
            let spec = ConstructionSpec::new(n, k, ell).unwrap();
            assert_eq!(spec.free_arc().len() as u32, n - 2 * k + ell);
            assert_eq!(spec.k_plus().len() as u32, k - ell);
            assert_eq!(spec.k_minus().len() as u32, k - ell);
            assert_eq!(spec.k_zero().len() as u32, ell);
            // The arc is symmetric about the horizontal axis.
            let lab = spec.labelling();
            let arc: BTreeSet<i32> = spec.free_arc().iter().map(|v| v.value()).collect();
            for v in spec.free_arc() {
                assert!(arc.contains(&lab.mirror(*v).value()));
            }
        }
        // The middle segment straddles the leftmost label.
        let spec = ConstructionSpec::new(12, 3, 2).unwrap();
        let zero: Vec<i32> = spec.k_zero().iter().map(|v| v.value()).collect();
        assert_eq!(zero, vec![11, -11]);
    }

    #[test]
    fn parameter_violations_are_rejected() {
        assert!(max_arc_graph(12, 6).is_err());
        assert!(max_arc_graph(12, 0).is_err());
        assert!(max_arc_graph(3, 1).is_err());
        assert!(extended_arc_graph(12, 3, 3).is_err());
        assert!(ConstructionSpec::new(12, 3, 5).is_err());
        assert!(star_arc_graph(10, 0).is_err());
        assert!(star_arc_graph(10, 10).is_err());
    }

    #[test]
    fn allowed_edges_examples() {
        let spec = ConstructionSpec::new(12, 3, 2).unwrap();
        assert_eq!(allowed_edges(&spec, 0).unwrap().len(), 2);
        assert_eq!(allowed_edges(&spec, 2).unwrap().len(), 3);

        let spec = ConstructionSpec::new(12, 3, 0).unwrap();
        for d in 0..12 {
            assert!(allowed_edges(&spec, d).unwrap().len() >= 3, "direction {d}");
        }
    }

    #[test]
    fn balanced_choice_matches_construction() {
        for (n, k) in [(12u32, 3u32), (13, 3), (10, 2), (14, 5), (15, 4)] {
            for ell in 0..k {
                let g = extended_arc_graph(n, k, ell).unwrap();
                let spec = ConstructionSpec::new(n, k, ell).unwrap();
                for rep in 0..n {
                    let d = Direction::new(n, rep as i64);
                    let chosen: BTreeSet<Edge> = g.edges_in_direction(d).into_iter().collect();
                    let rule: BTreeSet<Edge> = balanced_window_choice(&spec, d)
                        .unwrap()
                        .into_iter()
                        .collect();
                    assert_eq!(chosen, rule, "n={n} k={k} ell={ell} direction {rep}");
                }
            }
        }
    }

    #[test]
    fn arc_lemma_lower_bounds() {
        use crate::arc::arc_split;
        // Even n: at least m-1 vertices behind every edge, at least m when
        // the edge emanates from a positive label. Odd n: at least m always.
        for n in 8..=16u32 {
            for k in 1..=(n / 2 - 1) {
                let spec = ConstructionSpec::new(n, k, 0).unwrap();
                let m = spec.m() as usize;
                let g = max_arc_graph(n, k).unwrap();
                for e in g.edges() {
                    let behind = arc_split(g.labelling(), e).unwrap().behind.len();
                    if n % 2 == 0 {
                        assert!(behind >= m - 1, "n={n} k={k} edge {e}: {behind} < m-1");
                        if e.emanates_from().value() > 0 {
                            assert!(behind >= m, "n={n} k={k} edge {e}: {behind} < m");
                        }
                    } else {
                        assert!(behind >= m, "n={n} k={k} edge {e}: {behind} < m");
                    }
                }
            }
        }
    }
}
