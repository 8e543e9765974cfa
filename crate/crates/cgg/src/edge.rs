//! Edges of a convex geometric graph and their derived quantities: order,
//! direction, and emanating vertex.

use std::fmt;

use serde::ser::SerializeTuple;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::labelling::{Labelling, VertexLabel};

/// An unordered pair of distinct vertex labels, stored canonically with the
/// numerically smaller label first. The derived order on edges (used for
/// witness tie-breaking and serialization) is lexicographic on that pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    a: VertexLabel,
    b: VertexLabel,
}

impl Edge {
    pub fn new(labelling: &Labelling, u: i64, v: i64) -> Result<Edge> {
        let u = labelling.vertex(u)?;
        let v = labelling.vertex(v)?;
        if u == v {
            return Err(crate::error::CggError::InvalidParameter(format!(
                "self-loop at {u}"
            )));
        }
        Ok(if u < v {
            Edge { a: u, b: v }
        } else {
            Edge { a: v, b: u }
        })
    }

    /// Endpoints with the smaller label first.
    pub fn endpoints(&self) -> (VertexLabel, VertexLabel) {
        (self.a, self.b)
    }

    pub fn has_endpoint(&self, v: VertexLabel) -> bool {
        self.a == v || self.b == v
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.has_endpoint(other.a) || self.has_endpoint(other.b)
    }

    /// The order of the edge: half the cyclic label distance,
    /// `min(|a-b|, 2n-|a-b|) / 2`, an integer in `1..=n/2`.
    ///
    /// The two open boundary arcs cut off by an edge of order `r` contain
    /// `r-1` and `n-r-1` graph vertices.
    pub fn order(&self, labelling: &Labelling) -> u32 {
        let diff = (self.b.value() - self.a.value()).unsigned_abs();
        let two_n = labelling.two_n();
        diff.min(two_n - diff) / 2
    }

    /// The direction of the edge: the class `d (mod n)` with
    /// `a + b ≡ 2d (mod 2n)`. Geometrically, the edge is perpendicular to the
    /// polygon radius through position `d` (and through `d + n`).
    pub fn direction(&self, labelling: &Labelling) -> Direction {
        let sum = self.a.value() as i64 + self.b.value() as i64;
        // Same-parity endpoints make the sum even, so the division is exact.
        Direction::new(labelling.n(), sum / 2)
    }

    /// The vertex the edge emanates from: the endpoint of larger absolute
    /// label, or the positive one when the labels are opposite.
    pub fn emanates_from(&self) -> VertexLabel {
        let (x, y) = (self.a.value(), self.b.value());
        if x.abs() > y.abs() {
            self.a
        } else if y.abs() > x.abs() {
            self.b
        } else if x > 0 {
            self.a
        } else {
            self.b
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.a.value())?;
        t.serialize_element(&self.b.value())?;
        t.end()
    }
}

/// A direction class modulo `n`. Positions `d` and `d - n` of the 2n-gon
/// determine the same family of parallel edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction {
    n: u32,
    rep: u32,
}

impl Direction {
    /// Reduce any integer (label or position) to its direction class.
    pub fn new(n: u32, value: i64) -> Direction {
        Direction {
            n,
            rep: value.rem_euclid(n as i64) as u32,
        }
    }

    /// Canonical representative in `0..n`.
    pub fn rep(&self) -> u32 {
        self.rep
    }

    /// Representative in the half-open symmetric range `(-n/2, n/2]`.
    pub fn signed_rep(&self) -> i32 {
        let r = self.rep as i32;
        let n = self.n as i32;
        if 2 * r <= n {
            r
        } else {
            r - n
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed_rep())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labelling::Parity;

    fn lab(n: u32, parity: Parity) -> Labelling {
        Labelling::new(n, parity).unwrap()
    }

    #[test]
    fn order_examples() {
        let l12 = lab(12, Parity::Odd);
        assert_eq!(Edge::new(&l12, 1, -3).unwrap().order(&l12), 2);
        assert_eq!(Edge::new(&l12, 11, -11).unwrap().order(&l12), 1);
        let l10 = lab(10, Parity::Odd);
        assert_eq!(Edge::new(&l10, 9, -1).unwrap().order(&l10), 5);
    }

    #[test]
    fn order_bounds_and_arc_counts() {
        // The two open arcs of an edge of order r hold r-1 and n-r-1 vertices.
        for n in 4..=16u32 {
            for parity in [Parity::Odd, Parity::Even] {
                let l = lab(n, parity);
                let vs = l.vertices();
                for i in 0..vs.len() {
                    for j in (i + 1)..vs.len() {
                        let e = Edge::new(&l, vs[i].value() as i64, vs[j].value() as i64).unwrap();
                        let r = e.order(&l);
                        assert!(r >= 1 && r <= n / 2);
                        let (pa, pb) = (
                            l.position_of(vs[i].value() as i64),
                            l.position_of(vs[j].value() as i64),
                        );
                        let ccw = (pb as i64 - pa as i64).rem_euclid(2 * n as i64) as u32;
                        let count = |from: u32, steps: u32| -> u32 {
                            (1..steps)
                                .filter(|s| l.is_vertex_position((from + s) as i64))
                                .count() as u32
                        };
                        let c1 = count(pa, ccw);
                        let c2 = count(pb, 2 * n - ccw);
                        let mut sides = [c1, c2];
                        sides.sort_unstable();
                        assert_eq!(sides, [r - 1, n - r - 1]);
                    }
                }
            }
        }
    }

    #[test]
    fn direction_examples() {
        let l12 = lab(12, Parity::Odd);
        let e = Edge::new(&l12, 1, -3).unwrap();
        assert_eq!(e.direction(&l12), Direction::new(12, -1));
        assert_eq!(e.direction(&l12).signed_rep(), -1);

        let e = Edge::new(&l12, 7, -7).unwrap();
        assert_eq!(e.direction(&l12), Direction::new(12, 0));

        let e = Edge::new(&l12, 11, 9).unwrap();
        assert_eq!(e.direction(&l12).rep(), 10);
        assert_eq!(e.direction(&l12), Direction::new(12, -2));
    }

    /// Independent check of the direction congruence: the chord must be
    /// perpendicular to the radius through the direction position, computed
    /// with floating-point coordinates on the unit circle.
    #[test]
    fn direction_matches_perpendicularity() {
        for n in [8u32, 9, 12, 13] {
            for parity in [Parity::Odd, Parity::Even] {
                let l = lab(n, parity);
                let vs = l.vertices();
                let angle = |pos: u32| std::f64::consts::PI * pos as f64 / n as f64;
                for i in 0..vs.len() {
                    for j in (i + 1)..vs.len() {
                        let e = Edge::new(&l, vs[i].value() as i64, vs[j].value() as i64).unwrap();
                        let d = e.direction(&l);
                        let ta = angle(l.position_of(vs[i].value() as i64));
                        let tb = angle(l.position_of(vs[j].value() as i64));
                        let td = angle(d.rep());
                        let chord = (tb.cos() - ta.cos(), tb.sin() - ta.sin());
                        let radius = (td.cos(), td.sin());
                        let dot = chord.0 * radius.0 + chord.1 * radius.1;
                        let len = (chord.0 * chord.0 + chord.1 * chord.1).sqrt();
                        assert!(
                            (dot / len).abs() < 1e-9,
                            "edge {e} not perpendicular to direction {d} (n={n})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn emanating_vertex_rule() {
        let l12 = lab(12, Parity::Odd);
        let e = Edge::new(&l12, 1, -3).unwrap();
        assert_eq!(e.emanates_from().value(), -3);
        let e = Edge::new(&l12, 9, -5).unwrap();
        assert_eq!(e.emanates_from().value(), 9);
        // Opposite labels: the positive one wins.
        let e = Edge::new(&l12, -7, 7).unwrap();
        assert_eq!(e.emanates_from().value(), 7);
    }
}
