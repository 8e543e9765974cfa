//! Pairwise-disjoint edge sets: the crossing predicate, an exhaustive
//! oracle, and an exact interval-DP solver.
//!
//! Two edges are disjoint when the closed segments share no point: they must
//! be vertex-disjoint and their chords must not cross. Chords of a convex
//! polygon cross exactly when their endpoints interleave in cyclic order, so
//! after cutting the cycle anywhere the crossing relation coincides with
//! interleaving in the induced linear order. That is what makes the interval
//! DP below exact.

use serde::Serialize;

use crate::edge::Edge;
use crate::graph::Cgg;
use crate::labelling::Labelling;

/// A pairwise-disjoint edge set found by one of the solvers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisjointWitness {
    pub size: usize,
    pub edges: Vec<Edge>,
}

/// Are the two edges disjoint as closed segments (no shared vertex, no
/// crossing)? An edge is never disjoint from itself.
pub fn edges_disjoint(labelling: &Labelling, e1: &Edge, e2: &Edge) -> bool {
    if e1.shares_vertex(e2) {
        return false;
    }
    !chords_cross(labelling, e1, e2)
}

fn chords_cross(labelling: &Labelling, e1: &Edge, e2: &Edge) -> bool {
    let (a, b) = e1.endpoints();
    let (c, d) = e2.endpoints();
    let (pa, pb) = (
        labelling.position_of(a.value() as i64),
        labelling.position_of(b.value() as i64),
    );
    let inside = |x: u32| {
        let (lo, hi) = (pa.min(pb), pa.max(pb));
        lo < x && x < hi
    };
    let pc = labelling.position_of(c.value() as i64);
    let pd = labelling.position_of(d.value() as i64);
    inside(pc) != inside(pd)
}

fn pairwise_disjoint(labelling: &Labelling, edges: &[Edge]) -> bool {
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            if !edges_disjoint(labelling, &edges[i], &edges[j]) {
                return false;
            }
        }
    }
    true
}

/// Exhaustive search for a maximum pairwise-disjoint subset of the edges of
/// `g`, capped at `cap`. Exact whenever the true maximum is below `cap`;
/// otherwise it returns some witness of size exactly `cap`. The intended use
/// is as an independent oracle, with `cap` bounding the cost.
pub fn max_disjoint_bruteforce(g: &Cgg, cap: usize) -> DisjointWitness {
    let lab = *g.labelling();
    let pool: Vec<Edge> = g.edges().cloned().collect();
    let mut best: Vec<usize> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let cands: Vec<usize> = (0..pool.len()).collect();

    fn dfs(
        lab: &Labelling,
        pool: &[Edge],
        cands: &[usize],
        chosen: &mut Vec<usize>,
        best: &mut Vec<usize>,
        cap: usize,
    ) {
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        if chosen.len() == cap || best.len() == cap {
            return;
        }
        for (pos, &i) in cands.iter().enumerate() {
            // Even taking every remaining candidate cannot beat the best.
            if chosen.len() + (cands.len() - pos) <= best.len() {
                return;
            }
            let rest: Vec<usize> = cands[pos + 1..]
                .iter()
                .copied()
                .filter(|&j| edges_disjoint(lab, &pool[i], &pool[j]))
                .collect();
            chosen.push(i);
            dfs(lab, pool, &rest, chosen, best, cap);
            chosen.pop();
            if best.len() == cap {
                return;
            }
        }
    }

    if cap > 0 {
        dfs(&lab, &pool, &cands, &mut chosen, &mut best, cap);
    }
    let edges: Vec<Edge> = best.iter().map(|&i| pool[i]).collect();
    debug_assert!(pairwise_disjoint(&lab, &edges));
    DisjointWitness {
        size: edges.len(),
        edges,
    }
}

/// Edges as cyclic-index pairs `(lo, hi)` with `lo < hi`.
fn index_pairs(g: &Cgg) -> Vec<(usize, usize)> {
    let lab = g.labelling();
    g.edges()
        .map(|e| {
            let (a, b) = e.endpoints();
            let (ia, ib) = (lab.cyclic_index(a) as usize, lab.cyclic_index(b) as usize);
            (ia.min(ib), ia.max(ib))
        })
        .collect()
}

/// Maximum size of a pairwise-disjoint subset, by dynamic programming over
/// intervals of the cyclic order. Cubic in n.
pub(crate) fn max_disjoint_size_pairs(n: usize, pairs: &[(usize, usize)]) -> usize {
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in pairs {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    // table[i][j] = best over vertices i..=j; entry i > j reads as 0.
    let mut table = vec![vec![0usize; n]; n];
    for len in 2..=n {
        for i in 0..=(n - len) {
            let j = i + len - 1;
            // Either vertex i is unmatched, or it pairs with some c.
            let mut best = table[i + 1][j];
            for c in (i + 1)..=j {
                if adj[i][c] {
                    let left = if c > i + 1 { table[i + 1][c - 1] } else { 0 };
                    let right = if c < j { table[c + 1][j] } else { 0 };
                    best = best.max(1 + left + right);
                }
            }
            table[i][j] = best;
        }
    }
    if n < 2 {
        0
    } else {
        table[0][n - 1]
    }
}

pub(crate) fn max_disjoint_size(g: &Cgg) -> usize {
    max_disjoint_size_pairs(g.n() as usize, &index_pairs(g))
}

/// Exact maximum pairwise-disjoint edge set. The witness is the
/// lexicographically smallest maximum set under the canonical edge order,
/// recovered greedily with the DP as a feasibility oracle.
pub fn max_disjoint_set(g: &Cgg) -> DisjointWitness {
    let lab = *g.labelling();
    let n = g.n() as usize;
    let optimum = max_disjoint_size(g);

    let all: Vec<Edge> = g.edges().cloned().collect();
    let mut chosen: Vec<Edge> = Vec::new();
    for e in &all {
        if chosen.len() == optimum {
            break;
        }
        if !chosen.iter().all(|c| edges_disjoint(&lab, c, e)) {
            continue;
        }
        // Does some maximum set extend chosen ∪ {e}? Check that the rest of
        // the graph, restricted to edges disjoint from all picks, still
        // reaches the optimum.
        let picked: Vec<Edge> = chosen.iter().cloned().chain([*e]).collect();
        let rest: Vec<(usize, usize)> = all
            .iter()
            .filter(|f| picked.iter().all(|p| edges_disjoint(&lab, p, f)))
            .map(|f| {
                let (a, b) = f.endpoints();
                let (ia, ib) = (lab.cyclic_index(a) as usize, lab.cyclic_index(b) as usize);
                (ia.min(ib), ia.max(ib))
            })
            .collect();
        if picked.len() + max_disjoint_size_pairs(n, &rest) >= optimum {
            chosen.push(*e);
        }
    }
    debug_assert_eq!(chosen.len(), optimum);
    debug_assert!(pairwise_disjoint(&lab, &chosen));
    DisjointWitness {
        size: optimum,
        edges: chosen,
    }
}

/// Does `g` avoid `k + 1` pairwise disjoint edges?
pub fn is_ik1_free(g: &Cgg, k: u32) -> bool {
    max_disjoint_size(g) <= k as usize
}
