use crate::error::{Error, Result};
use crate::graph::Graph;

pub const TREEWIDTH_MAX_VERTICES: usize = 15;

/// Exact treewidth by dynamic programming over elimination prefixes:
/// `f(S) = min_{v in S} max(f(S - v), q(S - v, v))`, where `q(S, v)` counts
/// the vertices outside `S + v` reachable from `v` through `S`.
pub fn treewidth_exact(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > TREEWIDTH_MAX_VERTICES {
        return Err(Error::SizeLimit {
            what: "treewidth vertex count",
            limit: TREEWIDTH_MAX_VERTICES,
            actual: n,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u32> = g.adjacency_masks().into_iter().map(|m| m as u32).collect();
    let full = (1u32 << n) - 1;
    let mut f = vec![usize::MAX; 1 << n];
    f[0] = 0;
    for s in 1..=full {
        let mut best = usize::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prefix = s & !(1 << v);
            let prev = f[prefix as usize];
            if prev >= best {
                continue;
            }
            best = best.min(prev.max(q(&adj, prefix, v)));
        }
        f[s as usize] = best;
    }
    Ok(f[full as usize])
}

fn q(adj: &[u32], s: u32, v: usize) -> usize {
    let mut reached = 1u32 << v;
    let mut frontier = reached;
    let mut outside = 0u32;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[u];
        }
        next &= !reached;
        reached |= next;
        outside |= next & !s;
        frontier = next & s;
    }
    outside.count_ones() as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};
    use crate::minor_lab::obstruction;

    #[test]
    fn small_families() {
        assert_eq!(treewidth_exact(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(treewidth_exact(&Graph::empty(1)).unwrap(), 0);
        assert_eq!(treewidth_exact(&Graph::empty(4)).unwrap(), 0);
        assert_eq!(treewidth_exact(&generate(GraphKind::Path(2), None).unwrap()).unwrap(), 1);
        assert_eq!(treewidth_exact(&generate(GraphKind::Path(9), None).unwrap()).unwrap(), 1);
        assert_eq!(treewidth_exact(&generate(GraphKind::Cycle(5), None).unwrap()).unwrap(), 2);
        for n in 1..=8 {
            let k = generate(GraphKind::Complete(n), None).unwrap();
            assert_eq!(treewidth_exact(&k).unwrap(), n - 1);
        }
        let k34 = generate(GraphKind::CompleteBipartite(3, 4), None).unwrap();
        assert_eq!(treewidth_exact(&k34).unwrap(), 3);
    }

    #[test]
    fn grid_three_by_three() {
        let idx = |r: usize, c: usize| 3 * r + c;
        let mut edges = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                if c + 1 < 3 {
                    edges.push((idx(r, c), idx(r, c + 1)));
                }
                if r + 1 < 3 {
                    edges.push((idx(r, c), idx(r + 1, c)));
                }
            }
        }
        assert_eq!(treewidth_exact(&Graph::from_edges(9, &edges).unwrap()).unwrap(), 3);
    }

    #[test]
    fn obstructions_have_treewidth_four() {
        for name in ["k5", "octahedron", "wagner", "pentagonal_prism"] {
            let g = obstruction(name).unwrap().graph;
            assert_eq!(treewidth_exact(&g).unwrap(), 4, "{name}");
        }
    }

    #[test]
    fn size_limit() {
        let g = Graph::empty(16);
        assert!(treewidth_exact(&g).unwrap_err().is_size_limit());
    }
}
