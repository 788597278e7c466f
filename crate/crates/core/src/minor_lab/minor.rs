use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{canonical_form_unchecked, Graph, VertexSet, CANONICAL_FORM_MAX_VERTICES};

pub const MINOR_MAX_HOST_VERTICES: usize = 14;
pub const MINOR_MAX_PATTERN_VERTICES: usize = 8;

const MEMO_CAPACITY: usize = 1_000_000;

/// Witness that `H` is a minor of `G`: one connected branch set of `G` per
/// vertex of `H`, touching whenever the corresponding `H` vertices are
/// adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    /// `branch_sets[i]` is the set of `G` vertices contracted into `H`
    /// vertex `i`.
    pub branch_sets: Vec<VertexSet>,
    /// A spanning tree of each branch set: contracting these edges and
    /// deleting `deleted_vertices` and surplus edges yields `H`.
    pub contracted_edges: Vec<(usize, usize)>,
    pub deleted_vertices: Vec<usize>,
}

/// Checks a model directly against the definition.
pub fn verify_model(g: &Graph, h: &Graph, model: &MinorModel) -> bool {
    let k = h.vertex_count();
    if model.branch_sets.len() != k {
        return false;
    }
    let mut owner = vec![usize::MAX; g.vertex_count()];
    for (i, set) in model.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return false;
        }
        for v in set.iter() {
            if v >= g.vertex_count() || owner[v] != usize::MAX {
                return false;
            }
            owner[v] = i;
        }
        if !connected_within(g, set) {
            return false;
        }
    }
    h.edges().all(|(a, b)| {
        model.branch_sets[a]
            .iter()
            .any(|v| g.neighbors(v).iter().any(|&w| owner[w] == b))
    })
}

fn connected_within(g: &Graph, set: &VertexSet) -> bool {
    let Some(start) = set.iter().next() else {
        return false;
    };
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if set.contains(w) && !seen.contains(&w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    seen.len() == set.len()
}

/// Whether `h` is a minor of `g`, with a model when it is.
///
/// `H` is a minor of `G` iff some sequence of edge contractions turns `G`
/// into a graph containing `H` as a subgraph, so the search branches over
/// contractions and tests subgraph containment at every node. Contractions
/// that cannot matter given the minimum degree of `H` are applied eagerly,
/// and failed graphs are remembered by canonical form.
pub fn has_minor(g: &Graph, h: &Graph) -> Result<Option<MinorModel>> {
    if g.vertex_count() > MINOR_MAX_HOST_VERTICES {
        return Err(Error::SizeLimit {
            what: "minor host vertex count",
            limit: MINOR_MAX_HOST_VERTICES,
            actual: g.vertex_count(),
        });
    }
    if h.vertex_count() > MINOR_MAX_PATTERN_VERTICES {
        return Err(Error::SizeLimit {
            what: "minor pattern vertex count",
            limit: MINOR_MAX_PATTERN_VERTICES,
            actual: h.vertex_count(),
        });
    }
    let pattern = Pattern::new(h);
    let state = State {
        adj: g.adjacency_masks().into_iter().map(|m| m as u32).collect(),
        bags: (0..g.vertex_count()).map(|v| 1u32 << v).collect(),
    };
    let mut search = Search {
        pattern: &pattern,
        failed: HashSet::new(),
    };
    Ok(search.run(state).map(|bags| build_model(g, &bags)))
}

fn build_model(g: &Graph, bags: &[u32]) -> MinorModel {
    let branch_sets: Vec<VertexSet> = bags
        .iter()
        .map(|&b| VertexSet::new((0..32).filter(|&v| b >> v & 1 == 1)))
        .collect();
    let mut contracted_edges = Vec::new();
    for set in &branch_sets {
        let start = set.as_slice()[0];
        let mut seen = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if set.contains(w) && !seen.contains(&w) {
                    seen.push(w);
                    stack.push(w);
                    contracted_edges.push((u.min(w), u.max(w)));
                }
            }
        }
    }
    contracted_edges.sort_unstable();
    let used: u32 = bags.iter().fold(0, |acc, b| acc | b);
    MinorModel {
        branch_sets,
        contracted_edges,
        deleted_vertices: (0..g.vertex_count()).filter(|&v| used >> v & 1 == 0).collect(),
    }
}

struct Pattern {
    n: usize,
    edges: usize,
    adj: Vec<u32>,
    min_degree: usize,
    /// Vertices ordered so each one after the first has an earlier
    /// neighbor when possible, highest degree first.
    order: Vec<usize>,
}

impl Pattern {
    fn new(h: &Graph) -> Self {
        let n = h.vertex_count();
        let adj: Vec<u32> = h.adjacency_masks().into_iter().map(|m| m as u32).collect();
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut placed = 0u32;
        while order.len() < n {
            let attached = (0..n)
                .filter(|&v| placed >> v & 1 == 0)
                .max_by_key(|&v| ((adj[v] & placed).count_ones(), adj[v].count_ones(), std::cmp::Reverse(v)))
                .expect("an unplaced vertex remains");
            order.push(attached);
            placed |= 1 << attached;
        }
        Pattern {
            n,
            edges: h.edge_count(),
            min_degree: adj.iter().map(|m| m.count_ones() as usize).min().unwrap_or(0),
            adj,
            order,
        }
    }
}

#[derive(Clone)]
struct State {
    adj: Vec<u32>,
    /// Original vertices merged into each current vertex.
    bags: Vec<u32>,
}

impl State {
    fn n(&self) -> usize {
        self.adj.len()
    }

    fn edges(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    fn remove(&mut self, v: usize) {
        self.adj.remove(v);
        self.bags.remove(v);
        let low = (1u32 << v) - 1;
        for m in &mut self.adj {
            *m = (*m & low) | ((*m >> 1) & !low);
        }
    }

    /// Merges `v` into `u`.
    fn contract(&mut self, u: usize, v: usize) {
        let merged = (self.adj[u] | self.adj[v]) & !(1 << u) & !(1 << v);
        self.bags[u] |= self.bags[v];
        for w in 0..self.n() {
            if merged >> w & 1 == 1 {
                self.adj[w] |= 1 << u;
            }
        }
        self.adj[u] = merged;
        self.remove(v);
    }

    fn key(&self) -> Vec<u8> {
        let n = self.n();
        if n <= CANONICAL_FORM_MAX_VERTICES {
            let g = Graph::from_edges_lossy(
                n,
                (0..n).flat_map(|u| (u + 1..n).filter(move |&v| self.adj[u] >> v & 1 == 1).map(move |v| (u, v))),
            );
            let mut key = vec![0xff];
            key.extend(canonical_form_unchecked(&g));
            key
        } else {
            let mut key = vec![n as u8];
            key.extend(self.adj.iter().flat_map(|m| m.to_le_bytes()));
            key
        }
    }
}

struct Search<'p> {
    pattern: &'p Pattern,
    failed: HashSet<Vec<u8>>,
}

impl Search<'_> {
    /// Branch masks of a model, one per pattern vertex.
    fn run(&mut self, mut state: State) -> Option<Vec<u32>> {
        self.reduce(&mut state);
        if state.n() < self.pattern.n || state.edges() < self.pattern.edges {
            return None;
        }
        if let Some(map) = embed(self.pattern, &state) {
            return Some(map.into_iter().map(|v| state.bags[v]).collect());
        }
        let key = state.key();
        if self.failed.contains(&key) {
            return None;
        }
        for u in 0..state.n() {
            let mut later = state.adj[u] & !((2u32 << u) - 1);
            while later != 0 {
                let v = later.trailing_zeros() as usize;
                later &= later - 1;
                let mut next = state.clone();
                next.contract(u, v);
                if let Some(found) = self.run(next) {
                    return Some(found);
                }
            }
        }
        if self.failed.len() >= MEMO_CAPACITY {
            self.failed.clear();
        }
        self.failed.insert(key);
        None
    }

    /// Deletions and contractions that preserve the answer: isolated
    /// vertices when `H` has none, degree-1 vertices when `δ(H) >= 2`, and
    /// degree-2 vertices (merged into a neighbor) when `δ(H) >= 3`.
    fn reduce(&self, state: &mut State) {
        let d = self.pattern.min_degree;
        loop {
            let Some(v) = (0..state.n()).find(|&v| {
                let deg = state.degree(v);
                (deg == 0 && d >= 1) || (deg == 1 && d >= 2) || (deg == 2 && d >= 3)
            }) else {
                return;
            };
            if state.degree(v) == 2 {
                let u = state.adj[v].trailing_zeros() as usize;
                state.contract(u, v);
            } else {
                state.remove(v);
            }
        }
    }
}

/// Injective map from pattern vertices into `state` preserving edges.
fn embed(p: &Pattern, state: &State) -> Option<Vec<usize>> {
    fn place(p: &Pattern, state: &State, i: usize, image: &mut [usize], used: u32) -> bool {
        if i == p.n {
            return true;
        }
        let x = p.order[i];
        let need = p.adj[x].count_ones();
        let mut candidates = ((1u64 << state.n()) - 1) as u32 & !used;
        for &y in &p.order[..i] {
            if p.adj[x] >> y & 1 == 1 {
                candidates &= state.adj[image[y]];
            }
        }
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            if state.adj[v].count_ones() < need {
                continue;
            }
            image[x] = v;
            if place(p, state, i + 1, image, used | 1 << v) {
                return true;
            }
        }
        false
    }
    let mut image = vec![0; p.n];
    place(p, state, 0, &mut image, 0).then_some(image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};
    use crate::minor_lab::obstruction;

    fn kind(k: GraphKind) -> Graph {
        generate(k, None).unwrap()
    }

    /// Tries every assignment of host vertices to a branch set or to none.
    fn brute_force(g: &Graph, h: &Graph) -> bool {
        let (n, k) = (g.vertex_count(), h.vertex_count());
        let total = (k as u64 + 1).pow(n as u32);
        (0..total).any(|mut code| {
            let mut sets = vec![Vec::new(); k];
            for v in 0..n {
                let slot = (code % (k as u64 + 1)) as usize;
                code /= k as u64 + 1;
                if slot < k {
                    sets[slot].push(v);
                }
            }
            let model = MinorModel {
                branch_sets: sets.into_iter().map(VertexSet::new).collect(),
                contracted_edges: Vec::new(),
                deleted_vertices: Vec::new(),
            };
            verify_model(g, h, &model)
        })
    }

    #[test]
    fn identity_and_trees() {
        let k5 = kind(GraphKind::Complete(5));
        let model = has_minor(&k5, &k5).unwrap().unwrap();
        assert!(verify_model(&k5, &k5, &model));
        let k3 = kind(GraphKind::Complete(3));
        for n in 1..=10 {
            assert!(has_minor(&kind(GraphKind::Path(n)), &k3).unwrap().is_none());
        }
        let star = kind(GraphKind::CompleteBipartite(1, 6));
        assert!(has_minor(&star, &k3).unwrap().is_none());
    }

    #[test]
    fn fig2_contains_k5() {
        let fig2 = obstruction("fig2").unwrap().graph;
        let k5 = kind(GraphKind::Complete(5));
        let model = has_minor(&fig2, &k5).unwrap().expect("K5 minor");
        assert!(verify_model(&fig2, &k5, &model));
        // The model read off the drawing: m1 into a2, m2 into a1, m3 into a3.
        let drawn = MinorModel {
            branch_sets: vec![
                VertexSet::new([0, 6]),
                VertexSet::new([1, 5]),
                VertexSet::new([2, 7]),
                VertexSet::new([3]),
                VertexSet::new([4]),
            ],
            contracted_edges: vec![(0, 6), (1, 5), (2, 7)],
            deleted_vertices: Vec::new(),
        };
        assert!(verify_model(&fig2, &k5, &drawn));
    }

    #[test]
    fn classic_non_minors() {
        let k4 = kind(GraphKind::Complete(4));
        let k5 = kind(GraphKind::Complete(5));
        let k33 = kind(GraphKind::CompleteBipartite(3, 3));
        // Q3 is planar with treewidth 3.
        let q3 = kind(GraphKind::Hypercube(3));
        assert!(has_minor(&q3, &k5).unwrap().is_none());
        assert!(has_minor(&q3, &k33).unwrap().is_none());
        assert!(has_minor(&q3, &k4).unwrap().is_some());
        // K5 and K3,3 do not contain each other.
        assert!(has_minor(&k5, &k33).unwrap().is_none());
        assert!(has_minor(&k33, &k5).unwrap().is_none());
        // The Petersen graph has both.
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        for h in [&k5, &k33] {
            let model = has_minor(&petersen, h).unwrap().unwrap();
            assert!(verify_model(&petersen, h, &model));
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        let hosts: Vec<Graph> = (0..14)
            .map(|seed| {
                generate(
                    GraphKind::RandomBoundedDegree { n: 6 + seed as usize % 2, max_degree: 4, p_edge: 0.55 },
                    Some(seed),
                )
                .unwrap()
            })
            .collect();
        let patterns = [
            kind(GraphKind::Complete(3)),
            kind(GraphKind::Complete(4)),
            kind(GraphKind::Cycle(4)),
            kind(GraphKind::CompleteBipartite(1, 3)),
            kind(GraphKind::CompleteBipartite(2, 3)),
            kind(GraphKind::Path(4)),
            Graph::empty(2),
            Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap(),
        ];
        for g in &hosts {
            for h in &patterns {
                let found = has_minor(g, h).unwrap();
                assert_eq!(found.is_some(), brute_force(g, h), "{g:?} / {h:?}");
                if let Some(model) = found {
                    assert!(verify_model(g, h, &model));
                }
            }
        }
    }

    #[test]
    fn size_limits() {
        let big = Graph::empty(15);
        let k3 = kind(GraphKind::Complete(3));
        assert!(has_minor(&big, &k3).unwrap_err().is_size_limit());
        assert!(has_minor(&k3, &Graph::empty(9)).unwrap_err().is_size_limit());
    }

    #[test]
    fn rejects_bad_models() {
        let c4 = kind(GraphKind::Cycle(4));
        let k3 = kind(GraphKind::Complete(3));
        let overlapping = MinorModel {
            branch_sets: vec![VertexSet::new([0, 1]), VertexSet::new([1, 2]), VertexSet::new([3])],
            contracted_edges: Vec::new(),
            deleted_vertices: Vec::new(),
        };
        assert!(!verify_model(&c4, &k3, &overlapping));
        let disconnected = MinorModel {
            branch_sets: vec![VertexSet::new([0, 2]), VertexSet::new([1]), VertexSet::new([3])],
            contracted_edges: Vec::new(),
            deleted_vertices: Vec::new(),
        };
        assert!(!verify_model(&c4, &k3, &disconnected));
        let good = MinorModel {
            branch_sets: vec![VertexSet::new([0, 1]), VertexSet::new([2]), VertexSet::new([3])],
            contracted_edges: Vec::new(),
            deleted_vertices: Vec::new(),
        };
        assert!(verify_model(&c4, &k3, &good));
    }
}
