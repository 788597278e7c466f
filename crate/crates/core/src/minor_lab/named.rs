use crate::error::{Error, Result};
use crate::graph::{bipartition, generate, Graph, GraphKind};

pub const OBSTRUCTION_NAMES: [&str; 6] = ["k5", "octahedron", "wagner", "pentagonal_prism", "k33", "fig2"];

/// The four forbidden minors for treewidth at most 3.
pub const TREEWIDTH_3_OBSTRUCTIONS: [&str; 4] = ["k5", "octahedron", "wagner", "pentagonal_prism"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
    pub labels: Vec<String>,
    pub expected_edges: usize,
    pub expected_bipartite: bool,
}

impl NamedGraph {
    /// Edge count and bipartiteness match the recorded expectations.
    pub fn matches_expectations(&self) -> bool {
        self.graph.edge_count() == self.expected_edges
            && bipartition(&self.graph).is_some() == self.expected_bipartite
    }
}

pub fn obstruction(name: &str) -> Result<NamedGraph> {
    let numbered = |n: usize| (0..n).map(|i| format!("v{i}")).collect::<Vec<_>>();
    let (graph, labels, edges, bipartite) = match name {
        "k5" => (generate(GraphKind::Complete(5), None)?, numbered(5), 10, false),
        "octahedron" => {
            // K_{2,2,2}: every pair except the three antipodal ones.
            let edges: Vec<(usize, usize)> = (0..6)
                .flat_map(|u| (u + 1..6).map(move |v| (u, v)))
                .filter(|&(u, v)| u / 2 != v / 2)
                .collect();
            (Graph::from_edges(6, &edges)?, numbered(6), 12, false)
        }
        "wagner" => {
            let edges: Vec<(usize, usize)> = (0..8)
                .map(|i| (i, (i + 1) % 8))
                .chain((0..4).map(|i| (i, i + 4)))
                .collect();
            (Graph::from_edges(8, &edges)?, numbered(8), 12, false)
        }
        "pentagonal_prism" => {
            let edges: Vec<(usize, usize)> = (0..5)
                .flat_map(|i| [(i, (i + 1) % 5), (5 + i, 5 + (i + 1) % 5), (i, 5 + i)])
                .collect();
            (Graph::from_edges(10, &edges)?, numbered(10), 15, false)
        }
        "k33" => (generate(GraphKind::CompleteBipartite(3, 3), None)?, numbered(6), 9, true),
        "fig2" => {
            let [a1, a2, a3, a4, a5, m1, m2, m3] = [0, 1, 2, 3, 4, 5, 6, 7];
            let edges = [
                (a2, m1),
                (m1, a1),
                (a4, m1),
                (a1, a3),
                (a1, a5),
                (a2, a3),
                (a2, a5),
                (a3, a4),
                (a4, a5),
                (a1, m2),
                (m2, a4),
                (m3, a3),
                (m3, a5),
            ];
            let labels = ["a1", "a2", "a3", "a4", "a5", "m1", "m2", "m3"].map(String::from).to_vec();
            (Graph::from_edges(8, &edges)?, labels, 13, true)
        }
        other => return Err(Error::UnknownName(other.to_string())),
    };
    Ok(NamedGraph {
        name: name.to_string(),
        graph,
        labels,
        expected_edges: edges,
        expected_bipartite: bipartite,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::max_degree;

    #[test]
    fn expectations_hold() {
        for name in OBSTRUCTION_NAMES {
            let g = obstruction(name).unwrap();
            assert!(g.matches_expectations(), "{name}");
            assert_eq!(g.labels.len(), g.graph.vertex_count());
        }
        assert!(obstruction("petersen").is_err());
    }

    #[test]
    fn cubic_and_quartic() {
        for name in ["wagner", "pentagonal_prism"] {
            let g = obstruction(name).unwrap().graph;
            assert!((0..g.vertex_count()).all(|v| g.degree(v) == 3), "{name}");
        }
        let oct = obstruction("octahedron").unwrap().graph;
        assert!((0..6).all(|v| oct.degree(v) == 4));
        assert_eq!(max_degree(&obstruction("fig2").unwrap().graph), 4);
    }
}
