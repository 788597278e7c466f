//! Canonical forms for small graphs.
//!
//! The form is the lexicographically smallest lower-triangle adjacency bit
//! string over the vertex orders reachable by individualization and
//! refinement, starting from the partition by degree. Twins are branched on
//! only once since swapping them is an automorphism.

use super::Graph;
use crate::error::{Error, Result};

pub const CANONICAL_FORM_MAX_VERTICES: usize = 12;

/// Byte string that is equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    if g.vertex_count() > CANONICAL_FORM_MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "canonical_form vertex count",
            limit: CANONICAL_FORM_MAX_VERTICES,
            actual: g.vertex_count(),
        });
    }
    Ok(canonical_form_unchecked(g))
}

pub(crate) fn canonical_form_unchecked(g: &Graph) -> Vec<u8> {
    canonical_labeling(g).0
}

/// Canonical form plus the vertex order achieving it: `order[i]` is the
/// vertex placed at position `i`.
pub(crate) fn canonical_labeling(g: &Graph) -> (Vec<u8>, Vec<usize>) {
    let n = g.vertex_count();
    assert!(n <= 64, "canonical labeling is limited to 64 vertices");
    let masks = g.adjacency_masks();
    let mut search = Search {
        masks: &masks,
        best: None,
    };
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (masks[v].count_ones(), v));
    for v in by_degree {
        match cells.last_mut() {
            Some(cell) if masks[cell[0]].count_ones() == masks[v].count_ones() => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let cells = refine(&masks, cells);
    search.descend(cells);
    search.best.unwrap_or_else(|| (encode(&masks, &[]), Vec::new()))
}

struct Search<'a> {
    masks: &'a [u64],
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let form = encode(self.masks, &order);
            if self.best.as_ref().is_none_or(|(b, _)| form < *b) {
                self.best = Some((form, order));
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&u| are_twins(self.masks, u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = cells[target].iter().copied().filter(|&u| u != v).collect();
            next[target] = vec![v];
            next.insert(target + 1, rest);
            self.descend(refine(self.masks, next));
        }
    }
}

fn are_twins(masks: &[u64], u: usize, v: usize) -> bool {
    let clear = !((1u64 << u) | (1u64 << v));
    masks[u] & clear == masks[v] & clear
}

/// Equitable refinement: split cells by neighbor counts into every cell until
/// stable. Cell order is derived only from invariant data.
fn refine(masks: &[u64], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let cell_masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect();
        let signature = |v: usize| -> Vec<u32> {
            cell_masks.iter().map(|cm| (masks[v] & cm).count_ones()).collect()
        };
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell.iter().map(|&v| (signature(v), v)).collect();
            keyed.sort();
            let mut current: Vec<usize> = Vec::new();
            let mut current_key: Option<&Vec<u32>> = None;
            for (key, v) in &keyed {
                if current_key.is_some_and(|k| k != key) {
                    next.push(std::mem::take(&mut current));
                }
                current_key = Some(key);
                current.push(*v);
            }
            next.push(current);
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn encode(masks: &[u64], order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(2 + n * n / 16 + 1);
    out.extend_from_slice(&(n as u16).to_be_bytes());
    let mut byte = 0u8;
    let mut filled = 0;
    for i in 1..n {
        for j in 0..i {
            // Bit set means "no edge", so the minimum prefers edges early.
            let bit = (masks[order[i]] >> order[j]) & 1 == 0;
            byte = (byte << 1) | bit as u8;
            filled += 1;
            if filled == 8 {
                out.push(byte);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(byte << (8 - filled));
    }
    out
}

impl Graph {
    /// Relabels so that vertex `order[i]` becomes `i`.
    pub(crate) fn reordered(&self, order: &[usize]) -> Graph {
        let mut position = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        Graph::from_edges_lossy(
            self.vertex_count(),
            self.edges().map(|(u, v)| (position[u], position[v])),
        )
    }

    /// Isomorphic copy in canonical vertex order.
    #[cfg(test)]
    pub(crate) fn canonical_copy(&self) -> Graph {
        let (_, order) = canonical_labeling(self);
        self.reordered(&order)
    }
}
