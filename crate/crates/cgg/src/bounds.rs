//! The closed-form maximum edge count and the per-direction loss accounting
//! that proves it tight in the middle parameter range.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::construct::{allowed_edges, binom2, ConstructionSpec};
use crate::edge::Direction;
use crate::error::{CggError, Result};

/// Which clause of the closed form applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FmaxClause {
    /// `q <= n - 2k`: the arc costs nothing, the maximum is `k·n`.
    QAtMostNMinus2k,
    /// `n - 2k < q < n - k`: each extra arc vertex bites, `k·n - C(ell+1, 2)`.
    Middle,
    /// `q >= n - k`: only the arc constrains, `C(n,2) - C(q,2)`.
    QAtLeastNMinusK,
}

impl FmaxClause {
    pub fn index(self) -> u8 {
        match self {
            FmaxClause::QAtMostNMinus2k => 1,
            FmaxClause::Middle => 2,
            FmaxClause::QAtLeastNMinusK => 3,
        }
    }
}

/// Value of the closed form together with the clause that produced it and
/// the arc excess `ell = q - (n - 2k)` (zero outside the middle clause).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FmaxResult {
    pub value: i64,
    pub clause: FmaxClause,
    pub ell: u32,
}

/// Maximum number of edges of an n-vertex convex geometric graph with no
/// `k+1` pairwise disjoint edges and a free boundary arc of order `q`.
pub fn f_max(n: u32, k: u32, q: u32) -> Result<FmaxResult> {
    if n < 4 || k == 0 || k > n / 2 - 1 {
        return Err(CggError::InvalidParameter(format!(
            "k must satisfy 1 <= k <= n/2 - 1, got n={n}, k={k}"
        )));
    }
    if q == 0 || q >= n {
        return Err(CggError::InvalidParameter(format!(
            "q must satisfy 1 <= q <= n - 1, got {q}"
        )));
    }
    let (n64, k64, q64) = (n as i64, k as i64, q as i64);
    if q64 <= n64 - 2 * k64 {
        Ok(FmaxResult {
            value: k64 * n64,
            clause: FmaxClause::QAtMostNMinus2k,
            ell: 0,
        })
    } else if q64 < n64 - k64 {
        let ell = (q64 - (n64 - 2 * k64)) as u32;
        Ok(FmaxResult {
            value: k64 * n64 - binom2(ell as u64 + 1) as i64,
            clause: FmaxClause::Middle,
            ell,
        })
    } else {
        Ok(FmaxResult {
            value: binom2(n as u64) as i64 - binom2(q as u64) as i64,
            clause: FmaxClause::QAtLeastNMinusK,
            ell: 0,
        })
    }
}

/// Closed-form loss of a direction at offset `j` from the vertical:
/// `ceil((ell - |j|) / 2)` while `|j| <= ell`, zero beyond.
pub fn loss_formula(k: u32, ell: u32, j: i64) -> Result<u32> {
    if ell >= k {
        return Err(CggError::InvalidParameter(format!(
            "ell must satisfy 0 <= ell < k, got ell={ell}, k={k}"
        )));
    }
    let a = j.unsigned_abs() as u32;
    if a <= ell {
        Ok((ell - a).div_ceil(2))
    } else {
        Ok(0)
    }
}

/// Loss computed by counting: `k` minus the number of allowed edges in the
/// direction, floored at zero. Independent of [`loss_formula`].
pub fn loss_direct(spec: &ConstructionSpec, j: i64) -> Result<u32> {
    let allowed = allowed_edges(spec, j)?.len() as u32;
    Ok(spec.k().saturating_sub(allowed))
}

/// Per-direction losses over one full direction cycle, keyed by the signed
/// representative in `(-n/2, n/2]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LossProfile {
    pub per_direction: BTreeMap<i32, u32>,
    pub total: u32,
}

pub fn loss_profile(spec: &ConstructionSpec) -> Result<LossProfile> {
    let n = spec.n();
    let mut per_direction = BTreeMap::new();
    let mut total = 0;
    for rep in 0..n {
        let d = Direction::new(n, rep as i64);
        let loss = loss_direct(spec, rep as i64)?;
        per_direction.insert(d.signed_rep(), loss);
        total += loss;
    }
    Ok(LossProfile {
        per_direction,
        total,
    })
}

/// The summation identity `ceil(n/2) + 2·sum_{i=1}^{n-1} ceil(i/2) =
/// C(n+1, 2)`, evaluated exactly. Always true; exposed as a checkable
/// consistency surface because the total-loss computation rests on it.
pub fn triangular_identity(n: u64) -> bool {
    let lhs = n.div_ceil(2) + 2 * (1..n).map(|i| i.div_ceil(2)).sum::<u64>();
    lhs == binom2(n + 1)
}
