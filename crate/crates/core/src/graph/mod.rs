//! Simple undirected graphs on dense vertex ids `0..n`.

mod canon;
mod enumerate;
mod generate;
mod io;

pub use canon::{canonical_form, CANONICAL_FORM_MAX_VERTICES};
pub use enumerate::{enumerate_connected_bipartite, ENUMERATION_MAX_EDGES};
pub use generate::{generate, GraphKind, RNG_ALGORITHM};
pub use io::{parse_edge_list, write_edge_list};

pub(crate) use canon::canonical_form_unchecked;
pub(crate) use generate::rng_from_seed;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Immutable simple graph stored as sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// Sorted sequence of distinct vertex ids.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    /// Wraps a vector that is already sorted and duplicate free.
    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a usize;
    type IntoIter = std::slice::Iter<'a, usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Result of [`induced_subgraph`]: the subgraph plus the order-preserving map
/// between local ids and the ids of the parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[i]` is the parent id of local vertex `i`.
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    pub fn local_id(&self, parent: usize) -> Option<usize> {
        self.original.binary_search(&parent).ok()
    }
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter("duplicate edge".into()));
            }
        }
        let g = Graph { adj };
        g.debug_check();
        Ok(g)
    }

    /// Builds from adjacency lists that are known to satisfy the invariants
    /// up to ordering.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        for list in &mut adj {
            list.sort_unstable();
        }
        let g = Graph { adj };
        g.debug_check();
        g
    }

    /// Builds from edges known to be valid. Duplicates are merged.
    pub(crate) fn from_edges_lossy(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            debug_assert!(u != v && u < n && v < n);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Adjacency rows as bit masks. Only valid for at most 64 vertices.
    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.adj.len() <= 64);
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.adj.len() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.adj.len(),
            })
        }
    }

    /// Checks the four structural invariants: no loops, symmetry,
    /// simplicity and ids in range.
    pub fn invariants_hold(&self) -> bool {
        let n = self.adj.len();
        self.adj.iter().enumerate().all(|(v, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list.iter().all(|&u| u < n && u != v && self.adj[u].binary_search(&v).is_ok())
        })
    }

    fn debug_check(&self) {
        debug_assert!(self.invariants_hold(), "graph invariants violated");
    }
}

pub fn max_degree(g: &Graph) -> usize {
    g.adj.iter().map(Vec::len).max().unwrap_or(0)
}

/// Sorted intersection of the neighborhoods of every vertex in `set`.
pub fn common_neighbors(g: &Graph, set: &VertexSet) -> Result<VertexSet> {
    let mut iter = set.iter();
    let first = iter.next().ok_or(Error::EmptySet)?;
    g.check_vertex(first)?;
    let mut acc: Vec<usize> = g.neighbors(first).to_vec();
    for v in iter {
        g.check_vertex(v)?;
        let other = g.neighbors(v);
        acc.retain(|u| other.binary_search(u).is_ok());
    }
    Ok(VertexSet::from_sorted(acc))
}

/// Two-coloring by BFS, per component. `side[v]` is `Some(false)` on the side
/// holding the component's smallest vertex.
fn two_color(g: &Graph) -> std::result::Result<Vec<bool>, (Vec<Option<usize>>, usize, usize)> {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in g.neighbors(u) {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        parent[w] = Some(u);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return Err((parent, u, w)),
                    _ => {}
                }
            }
        }
    }
    Ok(side.into_iter().map(Option::unwrap).collect())
}

/// Sides of a bipartition, or `None` when the graph has an odd cycle.
/// The first set holds, for each component, the side of its smallest vertex.
pub fn bipartition(g: &Graph) -> Option<(VertexSet, VertexSet)> {
    let side = two_color(g).ok()?;
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for (v, s) in side.into_iter().enumerate() {
        if s {
            b.push(v);
        } else {
            a.push(v);
        }
    }
    Some((VertexSet::from_sorted(a), VertexSet::from_sorted(b)))
}

/// Closed walk of odd length (first vertex repeated at the end), when the
/// graph is not bipartite.
pub fn odd_closed_walk(g: &Graph) -> Option<Vec<usize>> {
    let (parent, u, w) = two_color(g).err()?;
    let path_to_root = |mut v: usize| {
        let mut p = vec![v];
        while let Some(q) = parent[v] {
            p.push(q);
            v = q;
        }
        p
    };
    // u and w share a BFS tree root; walk u -> root -> w -> u.
    let mut walk = path_to_root(u);
    let mut back = path_to_root(w);
    back.reverse();
    walk.extend(back.into_iter().skip(1));
    walk.push(u);
    Some(walk)
}

/// Vertex sets of the connected components, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    let mut stack = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        stack.push(root);
        let mut part = Vec::new();
        while let Some(u) = stack.pop() {
            part.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        parts.push(VertexSet::new(part));
    }
    parts
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

pub fn induced_subgraph(g: &Graph, set: &VertexSet) -> Result<InducedSubgraph> {
    for v in set.iter() {
        g.check_vertex(v)?;
    }
    let original = set.as_slice().to_vec();
    let adj = original
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter_map(|&w| original.binary_search(&w).ok())
                .collect()
        })
        .collect();
    Ok(InducedSubgraph {
        graph: Graph::from_adjacency(adj),
        original,
    })
}

/// Same vertices; `u ~ v` whenever their distance in `g` is 1 or 2.
pub fn square_graph(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut mark = vec![usize::MAX; n];
    let adj = (0..n)
        .map(|v| {
            let mut out = Vec::new();
            mark[v] = v;
            for &u in g.neighbors(v) {
                if mark[u] != v {
                    mark[u] = v;
                    out.push(u);
                }
                for &w in g.neighbors(u) {
                    if mark[w] != v {
                        mark[w] = v;
                        out.push(w);
                    }
                }
            }
            out
        })
        .collect();
    Graph::from_adjacency(adj)
}

/// Breadth-first distances from `source`; `usize::MAX` for unreachable.
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    let mut queue = VecDeque::from([source]);
    dist[source] = 0;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        generate(GraphKind::Path(n), None).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        generate(GraphKind::Cycle(n), None).unwrap()
    }

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::new(v.iter().copied())
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(max_degree(&cycle(5)), 2);
        assert_eq!(max_degree(&generate(GraphKind::CompleteBipartite(3, 3), None).unwrap()), 3);
        assert_eq!(max_degree(&generate(GraphKind::Complete(5), None).unwrap()), 4);
        assert_eq!(max_degree(&Graph::empty(4)), 0);
    }

    #[test]
    fn common_neighbors_examples() {
        let k33 = generate(GraphKind::CompleteBipartite(3, 3), None).unwrap();
        assert_eq!(common_neighbors(&k33, &vs(&[0, 1])).unwrap(), vs(&[3, 4, 5]));
        let p3 = path(3);
        assert_eq!(common_neighbors(&p3, &vs(&[0, 2])).unwrap(), vs(&[1]));
        assert!(common_neighbors(&p3, &vs(&[0, 1])).unwrap().is_empty());
        assert_eq!(common_neighbors(&p3, &vs(&[])), Err(Error::EmptySet));
        assert!(matches!(
            common_neighbors(&p3, &vs(&[0, 7])),
            Err(Error::InvalidVertex { vertex: 7, .. })
        ));
    }

    #[test]
    fn bipartition_examples() {
        assert_eq!(bipartition(&cycle(4)), Some((vs(&[0, 2]), vs(&[1, 3]))));
        assert_eq!(bipartition(&cycle(5)), None);
        let k33 = generate(GraphKind::CompleteBipartite(3, 3), None).unwrap();
        assert_eq!(bipartition(&k33), Some((vs(&[0, 1, 2]), vs(&[3, 4, 5]))));
    }

    #[test]
    fn odd_walk_is_closed_odd_and_uses_edges() {
        for g in [cycle(5), cycle(7), generate(GraphKind::Complete(4), None).unwrap()] {
            let walk = odd_closed_walk(&g).unwrap();
            assert_eq!(walk.first(), walk.last());
            assert_eq!((walk.len() - 1) % 2, 1);
            assert!(walk.windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
        assert!(odd_closed_walk(&cycle(6)).is_none());
    }

    #[test]
    fn components_examples() {
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(connected_components(&two), vec![vs(&[0, 1]), vs(&[2, 3])]);
        assert_eq!(connected_components(&path(4)), vec![vs(&[0, 1, 2, 3])]);
        assert_eq!(
            connected_components(&Graph::empty(3)),
            vec![vs(&[0]), vs(&[1]), vs(&[2])]
        );
    }

    #[test]
    fn induced_subgraph_examples() {
        let k5 = generate(GraphKind::Complete(5), None).unwrap();
        let sub = induced_subgraph(&k5, &vs(&[0, 2, 4])).unwrap();
        assert_eq!(sub.graph, generate(GraphKind::Complete(3), None).unwrap());
        assert_eq!(sub.local_id(4), Some(2));

        let sub = induced_subgraph(&cycle(6), &vs(&[0, 3])).unwrap();
        assert_eq!(sub.graph.edge_count(), 0);
        assert_eq!(sub.graph.vertex_count(), 2);

        let c6 = cycle(6);
        let all = induced_subgraph(&c6, &vs(&[0, 1, 2, 3, 4, 5])).unwrap();
        assert_eq!(all.graph, c6);
        assert!(induced_subgraph(&c6, &vs(&[9])).is_err());
    }

    #[test]
    fn square_graph_examples() {
        let sq = square_graph(&path(4));
        let edges: Vec<_> = sq.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        let k3 = generate(GraphKind::Complete(3), None).unwrap();
        assert_eq!(square_graph(&k3), k3);
        assert_eq!(square_graph(&Graph::empty(3)), Graph::empty(3));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }
}
