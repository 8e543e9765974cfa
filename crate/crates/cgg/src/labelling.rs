//! The labelling scheme: an n-vertex graph lives on one parity class of a
//! regular 2n-gon whose positions are labelled cyclically from `-n+1` to `n`.
//!
//! Label `x` sits at polygon position `x mod 2n`, so positions `0..=n` carry
//! labels `0..=n` and positions `n+1..2n` carry the negative labels
//! `-n+1..=-1`. Counterclockwise traversal is by increasing position. The
//! graph occupies either all odd or all even labels; a designated free arc of
//! even order forces the odd class, odd order the even class, so that the arc
//! can sit symmetrically about the horizontal axis on the right.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CggError, Result};

/// Which residue class of the 2n-gon hosts the graph vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    /// Does `value` belong to this residue class?
    pub fn matches(self, value: i64) -> bool {
        match self {
            Parity::Odd => value.rem_euclid(2) == 1,
            Parity::Even => value.rem_euclid(2) == 0,
        }
    }

    /// The class that hosts a graph with a designated free arc of order `q`:
    /// odd labels when `q` is even, even labels when `q` is odd.
    pub fn for_arc_order(q: u32) -> Parity {
        if q % 2 == 0 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Odd => write!(f, "odd"),
            Parity::Even => write!(f, "even"),
        }
    }
}

/// A validated vertex label in `{-n+1, ..., n}` of the labelling's parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexLabel(i32);

impl VertexLabel {
    pub fn value(self) -> i32 {
        self.0
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The ambient 2n-gon together with the parity class occupied by the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Labelling {
    n: u32,
    parity: Parity,
}

impl Labelling {
    pub fn new(n: u32, parity: Parity) -> Result<Self> {
        if n < 4 {
            return Err(CggError::InvalidParameter(format!(
                "n must be at least 4, got {n}"
            )));
        }
        Ok(Labelling { n, parity })
    }

    /// Default labelling when no free arc is designated: odd labels.
    pub fn default_odd(n: u32) -> Result<Self> {
        Labelling::new(n, Parity::Odd)
    }

    /// Labelling whose parity admits a canonical free arc of order `q`.
    pub fn for_arc_order(n: u32, q: u32) -> Result<Self> {
        Labelling::new(n, Parity::for_arc_order(q))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Number of positions of the ambient polygon.
    pub fn two_n(&self) -> u32 {
        2 * self.n
    }

    /// Is `value` a label of a graph vertex?
    pub fn contains_label(&self, value: i64) -> bool {
        let n = self.n as i64;
        value > -n && value <= n && self.parity.matches(value)
    }

    /// Validate `value` as a vertex label.
    pub fn vertex(&self, value: i64) -> Result<VertexLabel> {
        if !self.contains_label(value) {
            return Err(CggError::InvalidParameter(format!(
                "{} is not a {} label in (-{}, {}]",
                value, self.parity, self.n, self.n
            )));
        }
        Ok(VertexLabel(value as i32))
    }

    /// Polygon position (in `0..2n`) of a label or raw integer.
    pub fn position_of(&self, value: i64) -> u32 {
        value.rem_euclid(2 * self.n as i64) as u32
    }

    /// Label (in `(-n, n]`) of the polygon position `pos` (any integer).
    pub fn label_at(&self, pos: i64) -> i32 {
        let two_n = 2 * self.n as i64;
        let p = pos.rem_euclid(two_n);
        if p <= self.n as i64 {
            p as i32
        } else {
            (p - two_n) as i32
        }
    }

    /// Does the polygon position `pos` host a graph vertex?
    pub fn is_vertex_position(&self, pos: i64) -> bool {
        // Positions and labels are congruent mod 2n, so they share parity.
        self.parity.matches(pos)
    }

    /// The graph vertex at polygon position `pos`, if any.
    pub fn vertex_at(&self, pos: i64) -> Option<VertexLabel> {
        if self.is_vertex_position(pos) {
            Some(VertexLabel(self.label_at(pos)))
        } else {
            None
        }
    }

    /// All graph vertices in counterclockwise order (increasing position).
    pub fn vertices(&self) -> Vec<VertexLabel> {
        (0..self.n).map(|i| self.vertex_at_cyclic(i)).collect()
    }

    /// Canonical cyclic index in `0..n`, counting vertices counterclockwise
    /// from the lowest occupied position.
    pub fn cyclic_index(&self, v: VertexLabel) -> u32 {
        let pos = self.position_of(v.0 as i64);
        match self.parity {
            Parity::Odd => (pos - 1) / 2,
            Parity::Even => pos / 2,
        }
    }

    /// Inverse of [`Labelling::cyclic_index`].
    pub fn vertex_at_cyclic(&self, index: u32) -> VertexLabel {
        debug_assert!(index < self.n);
        let pos = match self.parity {
            Parity::Odd => 2 * index + 1,
            Parity::Even => 2 * index,
        };
        VertexLabel(self.label_at(pos as i64))
    }

    /// Reflection about the horizontal axis: label `x` goes to `-x`
    /// (label `n` is fixed, since `-n ≡ n`).
    pub fn mirror(&self, v: VertexLabel) -> VertexLabel {
        VertexLabel(self.label_at(-(v.0 as i64)))
    }

    /// The canonical free arc of order `q`: the `q` graph vertices closest to
    /// position 0, symmetric about the horizontal axis, in counterclockwise
    /// order. Requires the parity convention `q even ⇔ odd labels`.
    pub fn free_arc(&self, q: u32) -> Result<Vec<VertexLabel>> {
        if q == 0 || q >= self.n {
            return Err(CggError::InvalidParameter(format!(
                "free arc order must be in 1..{}, got {q}",
                self.n
            )));
        }
        if Parity::for_arc_order(q) != self.parity {
            return Err(CggError::InvalidParameter(format!(
                "a free arc of order {q} requires {} labels, labelling has {}",
                Parity::for_arc_order(q),
                self.parity
            )));
        }
        let top = q as i64 - 1; // largest label of the arc
        let mut arc = Vec::with_capacity(q as usize);
        let mut pos = -(top); // most clockwise member, label -(q-1)
        while pos <= top {
            arc.push(VertexLabel(self.label_at(pos)));
            pos += 2;
        }
        Ok(arc)
    }
}
