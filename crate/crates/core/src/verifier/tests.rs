use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::graph::{generate, square_graph, GraphKind};
use crate::util::UnionFind;

fn kind(k: GraphKind) -> Graph {
    generate(k, None).unwrap()
}

fn col(colors: &[u32]) -> Coloring {
    Coloring::from_assignment(colors.to_vec())
}

fn random_graph(n: usize, max_degree: usize, p: f64, seed: u64) -> Graph {
    generate(
        GraphKind::RandomBoundedDegree {
            n,
            max_degree,
            p_edge: p,
        },
        Some(seed),
    )
    .unwrap()
}

/// Each vertex takes a uniform color among those its earlier neighbors left
/// free. `s` must exceed the max degree.
fn random_proper_coloring(g: &Graph, s: u32, rng: &mut ChaCha8Rng) -> Coloring {
    let mut colors: Vec<u32> = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let free: Vec<u32> = (0..s)
            .filter(|&c| g.neighbors(v).iter().all(|&w| w >= v || colors[w] != c))
            .collect();
        colors.push(free[rng.random_range(0..free.len())]);
    }
    Coloring::new(s, colors).unwrap()
}

/// Direct search for a path `a b c d` colored `x y x y`.
fn has_bicolored_p4(g: &Graph, c: &Coloring) -> bool {
    (0..g.vertex_count()).any(|b| {
        g.neighbors(b).iter().any(|&cc| {
            let (a_color, d_color) = (c.color(cc), c.color(b));
            g.neighbors(b).iter().any(|&a| a != cc && c.color(a) == a_color)
                && g.neighbors(cc).iter().any(|&d| d != b && c.color(d) == d_color)
        })
    })
}

/// Union-find over the edges of each color pair: an edge closing a cycle is
/// found when its endpoints are already joined.
fn has_bicolored_cycle(g: &Graph, c: &Coloring) -> bool {
    let s = c.palette_size();
    for a in 0..s {
        for b in a + 1..s {
            let mut uf = UnionFind::new(g.vertex_count());
            for u in 0..g.vertex_count() {
                for &w in g.neighbors(u) {
                    let pair = [c.color(u), c.color(w)];
                    if w > u && (pair == [a, b] || pair == [b, a]) {
                        if uf.same(u, w) {
                            return true;
                        }
                        uf.union(u, w);
                    }
                }
            }
        }
    }
    false
}

fn square_proper(g: &Graph, c: &Coloring) -> bool {
    check_proper(&square_graph(g), c).unwrap().is_empty()
}

#[test]
fn proper_examples() {
    let p3 = kind(GraphKind::Path(3));
    assert!(check_proper(&p3, &col(&[0, 1, 0])).unwrap().is_empty());
    assert_eq!(check_proper(&kind(GraphKind::Path(2)), &col(&[0, 0])).unwrap(), vec![(0, 1)]);
    let k3 = kind(GraphKind::Complete(3));
    assert_eq!(check_proper(&k3, &col(&[0, 0, 0])).unwrap(), vec![(0, 1), (0, 2), (1, 2)]);
    assert!(check_proper(&k3, &col(&[0, 1])).is_err());
}

#[test]
fn component_examples() {
    let c4 = kind(GraphKind::Cycle(4));
    let stats = bicolored_component_stats(&c4, &col(&[0, 1, 0, 1])).unwrap();
    assert_eq!(stats.pairs.len(), 1);
    assert_eq!(stats.pairs[0].colors, (0, 1));
    assert_eq!(stats.pairs[0].components.len(), 1);
    assert_eq!(stats.pairs[0].components[0].vertices.len(), 4);
    assert_eq!(stats.max_edges, 4);

    let stats = bicolored_component_stats(&c4, &col(&[0, 1, 0, 2])).unwrap();
    let pairs: Vec<_> = stats.pairs.iter().map(|p| p.colors).collect();
    assert_eq!(pairs, vec![(0, 1), (0, 2)]);
    assert!(stats.components().all(|c| c.edges == 2));
    assert_eq!(stats.max_edges, 2);

    let star = kind(GraphKind::CompleteBipartite(1, 4));
    let stats = bicolored_component_stats(&star, &col(&[0, 1, 1, 1, 1])).unwrap();
    assert_eq!(stats.components().count(), 1);
    assert_eq!(stats.max_edges, 4);

    assert!(matches!(
        bicolored_component_stats(&c4, &col(&[0, 0, 1, 1])),
        Err(Error::ImproperColoring { .. })
    ));
}

#[test]
fn bound_examples() {
    let c4 = kind(GraphKind::Cycle(4));
    let ok = check_m_bounded(&c4, &col(&[0, 1, 0, 2]), 2).unwrap();
    assert!(ok.bounded);
    assert!(ok.witness.is_none());

    let bad = check_m_bounded(&c4, &col(&[0, 1, 0, 1]), 2).unwrap();
    assert!(!bad.bounded);
    let w = bad.witness.unwrap();
    assert_eq!(w.edges, 4);
    assert_eq!(w.vertices, VertexSet::new(0..4));

    let p3 = kind(GraphKind::Path(3));
    assert!(check_m_bounded(&p3, &col(&[0, 1, 2]), 1).unwrap().bounded);
}

#[test]
fn structure_examples() {
    let p4 = kind(GraphKind::Path(4));
    let star = check_structure(&p4, &col(&[0, 1, 0, 1]), Property::Star).unwrap();
    assert!(!star.holds);
    assert_eq!(star.witness.unwrap().edges, 3);
    assert!(check_structure(&p4, &col(&[0, 1, 0, 1]), Property::Acyclic).unwrap().holds);
    assert!(check_structure(&p4, &col(&[0, 1, 2, 0]), Property::Star).unwrap().holds);

    let c6 = kind(GraphKind::Cycle(6));
    let alt = col(&[0, 1, 0, 1, 0, 1]);
    assert!(!check_structure(&c6, &alt, Property::Acyclic).unwrap().holds);
    assert!(check_structure(&c6, &alt, Property::Planar).unwrap().holds);
    assert!(check_structure(&c6, &alt, Property::Treewidth(2)).unwrap().holds);
    assert!(!check_structure(&c6, &alt, Property::Treewidth(1)).unwrap().holds);

    let k33 = kind(GraphKind::CompleteBipartite(3, 3));
    let sides = col(&[0, 0, 0, 1, 1, 1]);
    assert!(!check_structure(&k33, &sides, Property::Planar).unwrap().holds);
    assert!(check_structure(&k33, &sides, Property::Treewidth(3)).unwrap().holds);

    let big = kind(GraphKind::CompleteBipartite(7, 6));
    let sides = col(&[0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1]);
    assert!(check_structure(&big, &sides, Property::Planar).unwrap_err().is_size_limit());
}

#[test]
fn property_names() {
    for p in [Property::Star, Property::Acyclic, Property::Planar, Property::Treewidth(3)] {
        assert_eq!(p.to_string().parse::<Property>().unwrap(), p);
    }
    assert_eq!("treewidth:2".parse::<Property>().unwrap(), Property::Treewidth(2));
    assert!("treewidth:".parse::<Property>().is_err());
    assert!("outerplanar".parse::<Property>().is_err());
}

#[test]
fn full_report() {
    let c4 = kind(GraphKind::Cycle(4));
    let r = verify(&c4, &col(&[0, 1, 0, 2]), Some(2), &[Property::Star, Property::Acyclic]).unwrap();
    assert!(r.proper);
    assert_eq!(r.max_bicolored_component_edges, 2);
    assert_eq!(r.m_bounded, Some(true));
    assert_eq!(r.structural_results.len(), 2);
    assert!(r.passed());

    let r = verify(&c4, &col(&[0, 1, 0, 1]), Some(2), &[]).unwrap();
    assert_eq!(r.m_bounded, Some(false));
    assert!(!r.passed());

    let r = verify(&c4, &col(&[0, 0, 1, 1]), Some(2), &[Property::Star]).unwrap();
    assert!(!r.proper);
    assert_eq!(r.monochromatic_edges, vec![(0, 1), (2, 3)]);
    assert_eq!(r.m_bounded, Some(false));
    assert!(r.structural_results.is_empty());
    assert!(!r.passed());

    let r = verify(&c4, &col(&[0, 1, 0, 1]), None, &[]).unwrap();
    assert_eq!(r.m_bounded, None);
    assert!(r.passed());
}

#[test]
fn m_one_matches_square_graph_exhaustively() {
    // Every graph on up to 5 vertices, every coloring with 4 colors.
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            for code in 0..4u32.pow(n as u32) {
                let colors: Vec<u32> = (0..n).map(|i| code / 4u32.pow(i as u32) % 4).collect();
                let c = Coloring::new(4, colors).unwrap();
                let bounded = check_proper(&g, &c).unwrap().is_empty() && check_m_bounded(&g, &c, 1).unwrap().bounded;
                assert_eq!(bounded, square_proper(&g, &c), "{edges:?} {:?}", c.colors());
            }
        }
    }
}

#[test]
fn implication_chain() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut hits = [0usize; 6];
    for trial in 0..600u64 {
        let n = rng.random_range(4..=25);
        let d = rng.random_range(2..=5);
        let g = random_graph(n, d, rng.random_range(0.1..0.6), trial);
        let s = d as u32 + 1 + rng.random_range(0..3);
        let c = random_proper_coloring(&g, s, &mut rng);
        let e = bicolored_component_stats(&g, &c).unwrap().max_edges;
        let holds = |p| check_structure(&g, &c, p).unwrap().holds;
        let chain: [(usize, &dyn Fn() -> bool); 6] = [
            (1, &|| square_proper(&g, &c)),
            (2, &|| holds(Property::Star)),
            (3, &|| holds(Property::Acyclic)),
            (7, &|| holds(Property::Treewidth(2))),
            (8, &|| holds(Property::Planar)),
            (12, &|| holds(Property::Treewidth(3))),
        ];
        for (i, (bound, check)) in chain.iter().enumerate() {
            if e <= *bound {
                hits[i] += 1;
                assert!(check(), "trial {trial}: max edges {e}, bound {bound}");
            }
        }
    }
    assert!(hits.iter().all(|&h| h > 0), "{hits:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn star_iff_no_bicolored_p4(n in 2usize..=12, seed: u64, extra in 0u32..3) {
        let g = random_graph(n, 4, 0.4, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_proper_coloring(&g, 5 + extra, &mut rng);
        let star = check_structure(&g, &c, Property::Star).unwrap().holds;
        prop_assert_eq!(star, !has_bicolored_p4(&g, &c));
    }

    #[test]
    fn acyclic_iff_no_bicolored_cycle(n in 2usize..=12, seed: u64, extra in 0u32..3) {
        let g = random_graph(n, 4, 0.5, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_proper_coloring(&g, 5 + extra, &mut rng);
        let acyclic = check_structure(&g, &c, Property::Acyclic).unwrap().holds;
        prop_assert_eq!(acyclic, !has_bicolored_cycle(&g, &c));
    }

    #[test]
    fn components_partition_bicolored_edges(n in 2usize..=20, seed: u64) {
        let g = random_graph(n, 5, 0.3, seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_proper_coloring(&g, 6, &mut rng);
        let stats = bicolored_component_stats(&g, &c).unwrap();
        for p in &stats.pairs {
            let (a, b) = p.colors;
            let crossing = (0..n)
                .flat_map(|u| g.neighbors(u).iter().map(move |&w| (u, w)))
                .filter(|&(u, w)| u < w && {
                    let pair = [c.color(u), c.color(w)];
                    pair == [a, b] || pair == [b, a]
                })
                .count();
            prop_assert_eq!(p.components.iter().map(|x| x.edges).sum::<usize>(), crossing);
        }
        let total: usize = stats.components().map(|x| x.edges).sum();
        prop_assert_eq!(total, g.edge_count());
    }
}
