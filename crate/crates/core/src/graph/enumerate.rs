use std::collections::BTreeMap;

use super::{bipartition, canon::canonical_labeling, Graph};
use crate::error::{Error, Result};
use crate::par;

pub const ENUMERATION_MAX_EDGES: usize = 9;

/// One representative per isomorphism class of connected bipartite graphs
/// with `1..=max_edges` edges, ordered by edge count and then canonical form.
/// Representatives are returned in canonical vertex order.
///
/// Every connected graph with `e + 1` edges arises from one with `e` edges by
/// adding either a pendant edge or an edge between existing vertices, so the
/// classes are grown level by level.
pub fn enumerate_connected_bipartite(max_edges: usize) -> Result<Vec<Graph>> {
    if max_edges > ENUMERATION_MAX_EDGES {
        return Err(Error::SizeLimit {
            what: "enumerate_connected_bipartite max_edges",
            limit: ENUMERATION_MAX_EDGES,
            actual: max_edges,
        });
    }
    if max_edges == 0 {
        return Ok(Vec::new());
    }
    let k2 = Graph::from_edges_lossy(2, [(0, 1)]);
    let mut level: Vec<Graph> = vec![k2];
    let mut out = level.clone();
    for _ in 1..max_edges {
        let candidates: Vec<Graph> = level.iter().flat_map(extensions).collect();
        let keyed = par::map(&candidates, |c| {
            let (form, order) = canonical_labeling(c);
            (form, order)
        });
        let mut classes: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
        for (cand, (form, order)) in candidates.iter().zip(keyed) {
            classes.entry(form).or_insert_with(|| cand.reordered(&order));
        }
        level = classes.into_values().collect();
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

fn extensions(g: &Graph) -> Vec<Graph> {
    let n = g.vertex_count();
    let (left, _) = bipartition(g).expect("enumerated graphs are bipartite");
    let mut out = Vec::new();
    for u in 0..n {
        let edges = g.edges().chain(std::iter::once((u, n)));
        out.push(Graph::from_edges_lossy(n + 1, edges));
    }
    for u in 0..n {
        for v in u + 1..n {
            if left.contains(u) != left.contains(v) && !g.has_edge(u, v) {
                let edges = g.edges().chain(std::iter::once((u, v)));
                out.push(Graph::from_edges_lossy(n, edges));
            }
        }
    }
    out
}
