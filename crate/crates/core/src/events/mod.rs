//! The three bad-event families: monochromatic edges, monochromatic special
//! tuples, and connected bicolored vertex sets spanning `m + 1` edges.

mod special;

pub use special::{
    enumerate_special_tuples, is_special_tuple, special_threshold, tuple_enumeration_supported,
    SpecialTuple,
};

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{max_degree, Graph, VertexSet};
use crate::util::{for_each_combination, UnionFind};

/// Which bad events a scan reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Every monochromatic edge and special tuple, plus one witness per
    /// oversized bicolored component.
    Faithful,
    /// Only actual violations: monochromatic edges and one witness per
    /// oversized bicolored component. No tuple pre-enumeration.
    ViolationDriven,
}

impl Mode {
    /// Faithful when tuple enumeration is cheap enough (`m <= 4`).
    pub fn auto(m: usize) -> Mode {
        if m <= 4 {
            Mode::Faithful
        } else {
            Mode::ViolationDriven
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Faithful => "faithful",
            Mode::ViolationDriven => "violation_driven",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "faithful" => Ok(Mode::Faithful),
            "violation_driven" | "violation-driven" => Ok(Mode::ViolationDriven),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BadEventWitness {
    MonoEdge {
        u: usize,
        v: usize,
        color: u32,
    },
    MonoTuple {
        tuple: SpecialTuple,
        color: u32,
    },
    KVertexSet {
        vertices: VertexSet,
        /// Exactly `m + 1` edges, connected, touching every vertex.
        edges: Vec<(usize, usize)>,
        colors: (u32, u32),
    },
}

impl BadEventWitness {
    /// The vertices whose colors the event depends on.
    pub fn vertices(&self) -> VertexSet {
        match self {
            BadEventWitness::MonoEdge { u, v, .. } => VertexSet::new([*u, *v]),
            BadEventWitness::MonoTuple { tuple, .. } => tuple.vertices.clone(),
            BadEventWitness::KVertexSet { vertices, .. } => vertices.clone(),
        }
    }

    fn rank(&self) -> u8 {
        match self {
            BadEventWitness::MonoEdge { .. } => 0,
            BadEventWitness::MonoTuple { .. } => 1,
            BadEventWitness::KVertexSet { .. } => 2,
        }
    }

    /// Family first, then lexicographic vertex list.
    pub fn order_key(&self) -> (u8, Vec<usize>) {
        (self.rank(), self.vertices().into_vec())
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            BadEventWitness::MonoEdge { .. } => "mono_edge",
            BadEventWitness::MonoTuple { .. } => "mono_tuple",
            BadEventWitness::KVertexSet { .. } => "k_vertex_set",
        }
    }

    /// Checks the witness invariants against `g` and `coloring`.
    pub fn is_sound(&self, g: &Graph, coloring: &Coloring, m: usize) -> bool {
        match self {
            BadEventWitness::MonoEdge { u, v, color } => {
                g.has_edge(*u, *v) && coloring.color(*u) == *color && coloring.color(*v) == *color
            }
            BadEventWitness::MonoTuple { tuple, color } => {
                let t = tuple.vertices.len();
                (2..=m.max(2)).contains(&t)
                    && tuple.vertices.iter().all(|v| coloring.color(v) == *color)
                    && is_special_tuple(g, &tuple.vertices, m).map(|(s, c)| s && c == tuple.common_count)
                        == Ok(true)
            }
            BadEventWitness::KVertexSet { vertices, edges, colors } => {
                let k = vertices.len();
                if edges.len() != m + 1 || !(3..=m + 2).contains(&k) || colors.0 == colors.1 {
                    return false;
                }
                let mut touched = HashSet::new();
                let mut uf = UnionFind::new(k);
                for &(a, b) in edges {
                    let (Some(ia), Some(ib)) = (
                        vertices.as_slice().binary_search(&a).ok(),
                        vertices.as_slice().binary_search(&b).ok(),
                    ) else {
                        return false;
                    };
                    if !g.has_edge(a, b) {
                        return false;
                    }
                    touched.insert(a);
                    touched.insert(b);
                    uf.union(ia, ib);
                }
                let connected = (1..k).all(|i| uf.same(0, i));
                // Sides are the two color classes, so G[A] is bipartite iff
                // no induced edge is monochromatic.
                let two_colored = vertices.iter().all(|v| {
                    let c = coloring.color(v);
                    c == colors.0 || c == colors.1
                });
                let induced_bipartite = vertices.iter().all(|v| {
                    g.neighbors(v)
                        .iter()
                        .all(|&w| !vertices.contains(w) || coloring.color(w) != coloring.color(v))
                });
                connected && touched.len() == k && two_colored && induced_bipartite
            }
        }
    }
}

/// Reusable scanner for one graph. Special tuples are enumerated once in
/// faithful mode.
#[derive(Clone, Debug)]
pub struct Detector<'g> {
    g: &'g Graph,
    m: usize,
    mode: Mode,
    delta: usize,
    tuples: Vec<SpecialTuple>,
}

impl<'g> Detector<'g> {
    pub fn new(g: &'g Graph, m: usize, mode: Mode) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("m must be positive".into()));
        }
        let tuples = match mode {
            Mode::Faithful => enumerate_special_tuples(g, m)?,
            Mode::ViolationDriven => Vec::new(),
        };
        Ok(Detector {
            g,
            m,
            mode,
            delta: max_degree(g),
            tuples,
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn special_tuples(&self) -> &[SpecialTuple] {
        &self.tuples
    }

    fn check(&self, coloring: &Coloring) -> Result<()> {
        coloring.check_for(self.g)?;
        if let Some((vertex, &color)) = coloring
            .colors()
            .iter()
            .enumerate()
            .find(|(_, &c)| c >= coloring.palette_size())
        {
            return Err(Error::PaletteMismatch {
                vertex,
                color,
                palette: coloring.palette_size(),
            });
        }
        Ok(())
    }

    /// All witnesses in deterministic order.
    pub fn detect(&self, coloring: &Coloring) -> Result<Vec<BadEventWitness>> {
        self.check(coloring)?;
        let mut out: Vec<BadEventWitness> = self
            .g
            .edges()
            .filter(|&(u, v)| coloring.color(u) == coloring.color(v))
            .map(|(u, v)| BadEventWitness::MonoEdge {
                u,
                v,
                color: coloring.color(u),
            })
            .collect();
        out.extend(self.mono_tuples(coloring));
        let mut seen: HashSet<BadEventWitness> = out.iter().cloned().collect();
        for w in self.component_witnesses(coloring) {
            let listed = matches!(w, BadEventWitness::MonoTuple { .. }) && self.mode == Mode::Faithful;
            if !listed && seen.insert(w.clone()) {
                out.push(w);
            }
        }
        out.sort_by_cached_key(BadEventWitness::order_key);
        Ok(out)
    }

    /// The first witness of [`Detector::detect`], computed with early exits.
    pub fn first(&self, coloring: &Coloring) -> Result<Option<BadEventWitness>> {
        self.check(coloring)?;
        if let Some((u, v)) = self.g.edges().find(|&(u, v)| coloring.color(u) == coloring.color(v)) {
            return Ok(Some(BadEventWitness::MonoEdge {
                u,
                v,
                color: coloring.color(u),
            }));
        }
        if let Some(w) = self.mono_tuples(coloring).next() {
            return Ok(Some(w));
        }
        Ok(self
            .component_witnesses(coloring)
            .into_iter()
            .min_by_key(BadEventWitness::order_key))
    }

    fn mono_tuples<'a>(&'a self, coloring: &'a Coloring) -> impl Iterator<Item = BadEventWitness> + 'a {
        self.tuples.iter().filter_map(move |t| {
            let mut it = t.vertices.iter();
            let c = coloring.color(it.next()?);
            it.all(|v| coloring.color(v) == c).then(|| BadEventWitness::MonoTuple {
                tuple: t.clone(),
                color: c,
            })
        })
    }

    /// One witness per bicolored component with more than `m` edges whose
    /// vertex set induces no monochromatic edge.
    fn component_witnesses(&self, coloring: &Coloring) -> Vec<BadEventWitness> {
        bicolored_components(self.g, coloring)
            .into_iter()
            .filter(|c| c.edge_count > self.m && !c.has_internal_mono_edge(self.g, coloring))
            .map(|c| component_witness(self.g, coloring, &c.vertices, self.m, self.delta))
            .collect()
    }
}

/// Convenience wrapper building a fresh [`Detector`].
pub fn detect_bad_events(
    g: &Graph,
    coloring: &Coloring,
    m: usize,
    mode: Mode,
) -> Result<Vec<BadEventWitness>> {
    Detector::new(g, m, mode)?.detect(coloring)
}

/// Component of the subgraph formed by the edges between two color classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct PairComponent {
    pub colors: (u32, u32),
    pub vertices: VertexSet,
    pub edge_count: usize,
}

impl PairComponent {
    fn has_internal_mono_edge(&self, g: &Graph, coloring: &Coloring) -> bool {
        self.vertices.iter().any(|v| {
            g.neighbors(v)
                .iter()
                .any(|&w| w > v && coloring.color(w) == coloring.color(v) && self.vertices.contains(w))
        })
    }
}

/// Components built from bichromatic edges only, grouped by color pair with
/// a union-find per pair. Ordered by color pair, then smallest vertex.
pub(crate) fn bicolored_components(g: &Graph, coloring: &Coloring) -> Vec<PairComponent> {
    let mut keyed: Vec<((u32, u32), usize, usize)> = g
        .edges()
        .filter_map(|(u, v)| {
            let (a, b) = (coloring.color(u), coloring.color(v));
            (a != b).then(|| ((a.min(b), a.max(b)), u, v))
        })
        .collect();
    keyed.sort_unstable();
    let mut out = Vec::new();
    let mut uf = UnionFind::new(g.vertex_count());
    let mut start = 0;
    while start < keyed.len() {
        let pair = keyed[start].0;
        let end = start + keyed[start..].iter().take_while(|e| e.0 == pair).count();
        let group = &keyed[start..end];
        let mut touched: Vec<usize> = group.iter().flat_map(|&(_, u, v)| [u, v]).collect();
        touched.sort_unstable();
        touched.dedup();
        for &(_, u, v) in group {
            uf.union(u, v);
        }
        let mut by_root: std::collections::BTreeMap<usize, (Vec<usize>, usize)> = Default::default();
        for &v in &touched {
            by_root.entry(uf.find(v)).or_default().0.push(v);
        }
        for &(_, u, _) in group {
            by_root.get_mut(&uf.find(u)).unwrap().1 += 1;
        }
        let mut comps: Vec<PairComponent> = by_root
            .into_values()
            .map(|(vs, edge_count)| PairComponent {
                colors: pair,
                vertices: VertexSet::from_sorted(vs),
                edge_count,
            })
            .collect();
        comps.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        out.extend(comps);
        for &v in &touched {
            uf.reset(v);
        }
        start = end;
    }
    out
}

/// Witness for a connected, properly two-colored component with more than
/// `m` edges.
///
/// Edges are collected as BFS tree edges (from the smallest vertex, in
/// discovery order) followed by the remaining induced edges in lexicographic
/// order, and truncated to `m + 1`. If the touched set contains a
/// monochromatic special tuple that tuple is returned instead.
pub fn extract_component_witness(
    g: &Graph,
    coloring: &Coloring,
    component: &VertexSet,
    m: usize,
) -> Result<BadEventWitness> {
    coloring.check_for(g)?;
    for v in component.iter() {
        g.check_vertex(v)?;
    }
    let colors: HashSet<u32> = component.iter().map(|v| coloring.color(v)).collect();
    if colors.len() != 2 {
        return Err(Error::Precondition("component must use exactly two colors".into()));
    }
    let mut edges = 0;
    for v in component.iter() {
        for &w in g.neighbors(v) {
            if w > v && component.contains(w) {
                if coloring.color(v) == coloring.color(w) {
                    return Err(Error::Precondition("component is not properly colored".into()));
                }
                edges += 1;
            }
        }
    }
    if edges <= m {
        return Err(Error::Precondition(format!("component has {edges} <= m = {m} edges")));
    }
    let sub = crate::graph::induced_subgraph(g, component)?;
    if !crate::graph::is_connected(&sub.graph) {
        return Err(Error::Precondition("component is not connected".into()));
    }
    Ok(component_witness(g, coloring, component, m, max_degree(g)))
}

fn component_witness(
    g: &Graph,
    coloring: &Coloring,
    component: &VertexSet,
    m: usize,
    delta: usize,
) -> BadEventWitness {
    let root = component.as_slice()[0];
    let mut visited = HashSet::from([root]);
    let mut queue = VecDeque::from([root]);
    let mut chosen: Vec<(usize, usize)> = Vec::with_capacity(m + 1);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if component.contains(w) && visited.insert(w) {
                chosen.push((u.min(w), u.max(w)));
                queue.push_back(w);
            }
        }
        if chosen.len() > m {
            break;
        }
    }
    if chosen.len() <= m {
        let tree: HashSet<(usize, usize)> = chosen.iter().copied().collect();
        let mut rest: Vec<(usize, usize)> = component
            .iter()
            .flat_map(|v| g.neighbors(v).iter().filter(move |&&w| w > v).map(move |&w| (v, w)))
            .filter(|&(_, w)| component.contains(w))
            .filter(|e| !tree.contains(e))
            .collect();
        rest.sort_unstable();
        chosen.extend(rest);
    }
    chosen.truncate(m + 1);
    let vertices = VertexSet::new(chosen.iter().flat_map(|&(a, b)| [a, b]));

    if let Some(w) = mono_special_tuple_within(g, coloring, &vertices, m, delta) {
        return w;
    }
    let (a, b) = (coloring.color(chosen[0].0), coloring.color(chosen[0].1));
    chosen.sort_unstable();
    BadEventWitness::KVertexSet {
        vertices,
        edges: chosen,
        colors: (a.min(b), a.max(b)),
    }
}

/// Lexicographically first special tuple of size `2..=m` inside `set` whose
/// vertices share a color.
fn mono_special_tuple_within(
    g: &Graph,
    coloring: &Coloring,
    set: &VertexSet,
    m: usize,
    delta: usize,
) -> Option<BadEventWitness> {
    let mut best: Option<(Vec<usize>, usize)> = None;
    for t in 2..=m.min(set.len()) {
        let min_common = special_threshold(delta, m, t);
        for_each_combination(set.as_slice(), t, |combo| {
            let c = coloring.color(combo[0]);
            if combo.iter().any(|&v| coloring.color(v) != c) {
                return;
            }
            if best.as_ref().is_some_and(|(b, _)| b.as_slice() <= combo) {
                return;
            }
            let common = crate::graph::common_neighbors(g, &VertexSet::from_sorted(combo.to_vec()))
                .map(|s| s.len())
                .unwrap_or(0);
            if common >= min_common {
                best = Some((combo.to_vec(), common));
            }
        });
    }
    best.map(|(vs, common_count)| {
        let color = coloring.color(vs[0]);
        BadEventWitness::MonoTuple {
            tuple: SpecialTuple {
                vertices: VertexSet::from_sorted(vs),
                common_count,
            },
            color,
        }
    })
}
