//! The convex geometric graph type and boundary-arc queries.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::edge::{Direction, Edge};
use crate::error::Result;
use crate::labelling::{Labelling, VertexLabel};

/// A convex geometric graph: a labelling plus a set of chords. Immutable
/// after construction; edge iteration is in canonical sorted order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cgg {
    labelling: Labelling,
    edges: BTreeSet<Edge>,
}

impl Cgg {
    pub fn new(labelling: Labelling, edges: impl IntoIterator<Item = Edge>) -> Result<Cgg> {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        for e in &edges {
            let (a, b) = e.endpoints();
            labelling.vertex(a.value() as i64)?;
            labelling.vertex(b.value() as i64)?;
        }
        Ok(Cgg { labelling, edges })
    }

    pub fn edgeless(labelling: Labelling) -> Cgg {
        Cgg {
            labelling,
            edges: BTreeSet::new(),
        }
    }

    /// The complete graph on the labelling's vertex class.
    pub fn complete(labelling: Labelling) -> Cgg {
        let vs = labelling.vertices();
        let mut edges = BTreeSet::new();
        for i in 0..vs.len() {
            for j in (i + 1)..vs.len() {
                edges.insert(
                    Edge::new(&labelling, vs[i].value() as i64, vs[j].value() as i64)
                        .expect("vertices come from the labelling"),
                );
            }
        }
        Cgg { labelling, edges }
    }

    pub fn labelling(&self) -> &Labelling {
        &self.labelling
    }

    pub fn n(&self) -> u32 {
        self.labelling.n()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    pub fn has_edge(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn contains_pair(&self, u: i64, v: i64) -> bool {
        Edge::new(&self.labelling, u, v)
            .map(|e| self.edges.contains(&e))
            .unwrap_or(false)
    }

    /// Number of edges in each direction class, keyed by canonical
    /// representative.
    pub fn per_direction_counts(&self) -> BTreeMap<u32, usize> {
        let mut counts = BTreeMap::new();
        for d in 0..self.n() {
            counts.insert(d, 0usize);
        }
        for e in &self.edges {
            *counts
                .entry(e.direction(&self.labelling).rep())
                .or_insert(0) += 1;
        }
        counts
    }

    /// Edges of the graph in the given direction class.
    pub fn edges_in_direction(&self, d: Direction) -> Vec<Edge> {
        self.edges
            .iter()
            .filter(|e| e.direction(&self.labelling) == d)
            .cloned()
            .collect()
    }
}

impl Serialize for Cgg {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Cgg", 3)?;
        s.serialize_field("edges", &self.edges.iter().collect::<Vec<_>>())?;
        s.serialize_field("n", &self.n())?;
        s.serialize_field("parity", &self.labelling.parity())?;
        s.end()
    }
}

/// All maximal independent runs of boundary-consecutive vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeArcs {
    /// Each run in counterclockwise order, listed by starting cyclic index.
    pub runs: Vec<Vec<VertexLabel>>,
    pub max_len: usize,
}

/// Compute every maximal run of consecutive boundary vertices spanning no
/// edge of `g`, plus the maximum run length. The edgeless graph yields the
/// single full cycle of length n.
pub fn free_arcs(g: &Cgg) -> FreeArcs {
    let lab = g.labelling();
    let n = lab.n() as usize;

    // longest[s] = length of the longest independent window starting at s.
    let mut longest = vec![0usize; n];
    for (s, slot) in longest.iter_mut().enumerate() {
        let mut len = 1usize;
        'grow: while len < n {
            let new = lab.vertex_at_cyclic(((s + len) % n) as u32);
            for off in 0..len {
                let old = lab.vertex_at_cyclic(((s + off) % n) as u32);
                if g.contains_pair(old.value() as i64, new.value() as i64) {
                    break 'grow;
                }
            }
            len += 1;
        }
        *slot = len;
    }

    let max_len = longest.iter().copied().max().unwrap_or(0);
    if max_len == n {
        // Only the edgeless graph admits a full-cycle run; report it once.
        let run = (0..n).map(|i| lab.vertex_at_cyclic(i as u32)).collect();
        return FreeArcs {
            runs: vec![run],
            max_len,
        };
    }

    let mut runs = Vec::new();
    for s in 0..n {
        let prev = (s + n - 1) % n;
        // Right-maximal by construction; left-maximal unless the window
        // extends to a longer one starting a step earlier.
        if longest[prev] <= longest[s] {
            let run = (0..longest[s])
                .map(|off| lab.vertex_at_cyclic(((s + off) % n) as u32))
                .collect();
            runs.push(run);
        }
    }
    FreeArcs { runs, max_len }
}
