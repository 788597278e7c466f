use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{common_neighbors, max_degree, Graph, VertexSet};
use crate::util::for_each_combination;

/// A set of `t` vertices, `2 <= t <= m`, whose common neighborhood has at
/// least `Δ^((m-t+1)/m)` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpecialTuple {
    pub vertices: VertexSet,
    pub common_count: usize,
}

impl SpecialTuple {
    pub fn t(&self) -> usize {
        self.vertices.len()
    }
}

/// Smallest common-neighbor count `c` with `c^m >= delta^(m-t+1)`, computed
/// with exact integer roots. At `delta = 0` the count must still be positive.
pub fn special_threshold(delta: usize, m: usize, t: usize) -> usize {
    debug_assert!(t <= m + 1);
    if delta == 0 {
        return 1;
    }
    let target = BigUint::from(delta).pow((m + 1 - t) as u32);
    let root = target.nth_root(m as u32);
    let c = if root.pow(m as u32) == target {
        root
    } else {
        root + BigUint::one()
    };
    c.to_usize().expect("threshold is at most delta")
}

/// Whether `set` is a special tuple, with its common-neighbor count. The
/// comparison `c^m >= Δ^(m-t+1)` is done on big integers.
pub fn is_special_tuple(g: &Graph, set: &VertexSet, m: usize) -> Result<(bool, usize)> {
    let t = set.len();
    if t < 2 || t > m {
        return Err(Error::InvalidParameter(format!(
            "tuple size {t} outside [2, m] with m = {m}"
        )));
    }
    let common = common_neighbors(g, set)?.len();
    let delta = max_degree(g);
    let special = common > 0
        && BigUint::from(common).pow(m as u32) >= BigUint::from(delta).pow((m - t + 1) as u32);
    Ok((special, common))
}

/// Enumeration is supported when `m <= 4` or `Δ <= 8`.
pub fn tuple_enumeration_supported(m: usize, delta: usize) -> bool {
    m <= 4 || delta <= 8
}

/// All special tuples for every `t` in `2..=m`, sorted by vertex list.
///
/// A special tuple has a common neighbor `w`, so it is a `t`-subset of
/// `N(w)`; counting how many neighborhoods contain each subset yields its
/// common-neighbor count directly.
pub fn enumerate_special_tuples(g: &Graph, m: usize) -> Result<Vec<SpecialTuple>> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let delta = max_degree(g);
    if !tuple_enumeration_supported(m, delta) {
        return Err(Error::SizeLimit {
            what: "special tuple enumeration (m > 4 needs max degree <= 8)",
            limit: 8,
            actual: delta,
        });
    }
    let mut out = Vec::new();
    for t in 2..=m {
        let threshold = special_threshold(delta, m, t);
        let mut counts: HashMap<Vec<usize>, usize> = HashMap::new();
        for w in 0..g.vertex_count() {
            for_each_combination(g.neighbors(w), t, |combo| {
                *counts.entry(combo.to_vec()).or_insert(0) += 1;
            });
        }
        out.extend(
            counts
                .into_iter()
                .filter(|&(_, c)| c >= threshold)
                .map(|(vs, common_count)| SpecialTuple {
                    vertices: VertexSet::from_sorted(vs),
                    common_count,
                }),
        );
    }
    out.sort();
    Ok(out)
}
