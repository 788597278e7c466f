use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{canonical_form_unchecked, Graph};
use crate::par;

pub const SPLIT_MAX_VERTICES: usize = 8;
pub const SPLIT_MAX_ROUNDS: usize = 2;

/// Every graph obtainable from `g` by at most `max_splits` vertex splits, one
/// per isomorphism class, ordered by canonical form. `g` itself is included.
///
/// A split replaces `v` by adjacent vertices `v1`, `v2` and distributes
/// `N(v)` between them as a partition; either part may be empty.
pub fn enumerate_splits(g: &Graph, max_splits: usize) -> Result<Vec<Graph>> {
    if g.vertex_count() > SPLIT_MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "split input vertex count",
            limit: SPLIT_MAX_VERTICES,
            actual: g.vertex_count(),
        });
    }
    if max_splits > SPLIT_MAX_ROUNDS {
        return Err(Error::SizeLimit {
            what: "split rounds",
            limit: SPLIT_MAX_ROUNDS,
            actual: max_splits,
        });
    }
    let mut all: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    all.insert(canonical_form_unchecked(g), g.clone());
    let mut frontier = vec![g.clone()];
    for _ in 0..max_splits {
        let candidates: Vec<Graph> = frontier.iter().flat_map(single_splits).map(|(_, s)| s).collect();
        let forms = par::map(&candidates, canonical_form_unchecked);
        let mut next = Vec::new();
        for (form, cand) in forms.into_iter().zip(candidates) {
            if !all.contains_key(&form) {
                all.insert(form, cand.clone());
                next.push(cand);
            }
        }
        frontier = next;
    }
    Ok(all.into_values().collect())
}

/// All single splits of `g`, tagged with the split vertex. The new vertex
/// gets id `n` and the split vertex keeps its id.
pub(crate) fn single_splits(g: &Graph) -> Vec<(usize, Graph)> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for v in 0..n {
        let nbrs = g.neighbors(v);
        for assign in 0u32..1 << nbrs.len() {
            let moved = |w: usize| {
                nbrs.binary_search(&w)
                    .is_ok_and(|i| assign >> i & 1 == 1)
            };
            let edges = g
                .edges()
                .map(|(a, b)| {
                    if a == v && moved(b) {
                        (b, n)
                    } else if b == v && moved(a) {
                        (a, n)
                    } else {
                        (a, b)
                    }
                })
                .chain(std::iter::once((v, n)));
            out.push((v, Graph::from_edges_lossy(n + 1, edges)));
        }
    }
    out
}

/// Contracts the edge `uv`: `v` is merged into `u` and later ids shift down.
pub fn contract(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::Precondition(format!("{u} and {v} are not adjacent")));
    }
    let relabel = |w: usize| {
        let w = if w == v { u } else { w };
        if w > v {
            w - 1
        } else {
            w
        }
    };
    let edges = g
        .edges()
        .map(|(a, b)| (relabel(a), relabel(b)))
        .filter(|(a, b)| a != b);
    Ok(Graph::from_edges_lossy(g.vertex_count() - 1, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, enumerate_connected_bipartite, generate, GraphKind};

    fn kind(k: GraphKind) -> Graph {
        generate(k, None).unwrap()
    }

    fn forms(gs: &[Graph]) -> Vec<Vec<u8>> {
        let mut f: Vec<Vec<u8>> = gs.iter().map(|g| canonical_form(g).unwrap()).collect();
        f.sort();
        f
    }

    #[test]
    fn zero_splits_is_identity() {
        let k3 = kind(GraphKind::Complete(3));
        assert_eq!(forms(&enumerate_splits(&k3, 0).unwrap()), forms(&[k3]));
    }

    #[test]
    fn splitting_an_edge() {
        // One split of K2 gives P3; the unsplit K2 is kept.
        let k2 = kind(GraphKind::Path(2));
        let got = enumerate_splits(&k2, 1).unwrap();
        assert_eq!(forms(&got), forms(&[k2, kind(GraphKind::Path(3))]));
    }

    #[test]
    fn splitting_a_triangle() {
        // K3 splits into a triangle with a pendant edge (one part empty)
        // or into C4 (neighbors separated).
        let k3 = kind(GraphKind::Complete(3));
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let c4 = kind(GraphKind::Cycle(4));
        let got = enumerate_splits(&k3, 1).unwrap();
        assert_eq!(forms(&got), forms(&[k3, paw, c4]));
    }

    #[test]
    fn contraction_inverts_splitting() {
        let mut graphs = enumerate_connected_bipartite(5).unwrap();
        graphs.retain(|g| g.vertex_count() <= 6);
        graphs.push(kind(GraphKind::Complete(4)));
        graphs.push(kind(GraphKind::Complete(5)));
        graphs.push(Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap());
        for g in &graphs {
            let original = canonical_form(g).unwrap();
            let n = g.vertex_count();
            for (v, s) in single_splits(g) {
                let back = contract(&s, v, n).unwrap();
                assert_eq!(canonical_form(&back).unwrap(), original);
            }
        }
    }

    #[test]
    fn contract_checks_adjacency() {
        let p3 = kind(GraphKind::Path(3));
        assert!(contract(&p3, 0, 2).is_err());
        let k2 = contract(&p3, 0, 1).unwrap();
        assert_eq!((k2.vertex_count(), k2.edge_count()), (2, 1));
    }

    #[test]
    fn limits() {
        assert!(enumerate_splits(&Graph::empty(9), 1).unwrap_err().is_size_limit());
        assert!(enumerate_splits(&Graph::empty(3), 3).unwrap_err().is_size_limit());
    }
}
