//! Independent checks of a finished coloring.
//!
//! Nothing here reuses the bad-event machinery: bicolored components are
//! found by a fresh breadth-first search per color pair, so these functions
//! can serve as ground truth for the colorer.

mod oracle;
mod treewidth;

pub use oracle::{brute_force_min_colors, exists_valid_coloring, ORACLE_MAX_VERTICES};
pub use treewidth::{treewidth_exact, TREEWIDTH_MAX_VERTICES};

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, VertexSet};
use crate::minor_lab::{has_minor, obstruction};

/// Largest component handed to the minor-based planarity test.
pub const PLANARITY_MAX_VERTICES: usize = 12;

/// One connected component of the subgraph spanned by two color classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicoloredComponent {
    pub colors: (u32, u32),
    pub vertices: VertexSet,
    pub edges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairStats {
    pub colors: (u32, u32),
    pub components: Vec<BicoloredComponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentStats {
    /// Color pairs with at least one edge between them, in increasing order.
    pub pairs: Vec<PairStats>,
    pub max_edges: usize,
    /// A component attaining `max_edges` (the first in pair order).
    pub worst: Option<BicoloredComponent>,
}

impl ComponentStats {
    pub fn components(&self) -> impl Iterator<Item = &BicoloredComponent> {
        self.pairs.iter().flat_map(|p| p.components.iter())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub bounded: bool,
    pub max_edges: usize,
    /// The largest component when the bound fails.
    pub witness: Option<BicoloredComponent>,
}

/// Structural property of every bicolored component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Property {
    /// Each component is a star.
    Star,
    /// Each component is a tree.
    Acyclic,
    Planar,
    /// Each component has treewidth at most `k`.
    Treewidth(usize),
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Star => write!(f, "star"),
            Property::Acyclic => write!(f, "acyclic"),
            Property::Planar => write!(f, "planar"),
            Property::Treewidth(k) => write!(f, "treewidth:{k}"),
        }
    }
}

impl FromStr for Property {
    type Err = Error;

    /// `star`, `acyclic`, `planar` or `treewidth:K`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "star" => Ok(Property::Star),
            "acyclic" => Ok(Property::Acyclic),
            "planar" => Ok(Property::Planar),
            _ => s
                .strip_prefix("treewidth:")
                .and_then(|k| k.parse().ok())
                .map(Property::Treewidth)
                .ok_or_else(|| Error::UnknownName(s.to_string())),
        }
    }
}

impl From<Property> for String {
    fn from(p: Property) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Property {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureCheck {
    pub property: Property,
    pub holds: bool,
    /// First component violating the property.
    pub witness: Option<BicoloredComponent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub proper: bool,
    pub monochromatic_edges: Vec<(usize, usize)>,
    /// Zero for improper colorings, whose components are not analysed.
    pub max_bicolored_component_edges: usize,
    pub worst_pair: Option<BicoloredComponent>,
    pub m: Option<usize>,
    pub m_bounded: Option<bool>,
    pub structural_results: BTreeMap<Property, StructureCheck>,
}

impl VerificationReport {
    /// Proper, within the bound if one was given, and every requested
    /// property holds.
    pub fn passed(&self) -> bool {
        self.proper
            && self.m_bounded != Some(false)
            && self.structural_results.values().all(|c| c.holds)
    }
}

/// Monochromatic edges in lexicographic order.
pub fn check_proper(g: &Graph, coloring: &Coloring) -> Result<Vec<(usize, usize)>> {
    coloring.check_for(g)?;
    Ok(g.edges()
        .filter(|&(u, v)| coloring.color(u) == coloring.color(v))
        .collect())
}

fn require_proper(g: &Graph, coloring: &Coloring) -> Result<()> {
    let bad = check_proper(g, coloring)?;
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::ImproperColoring { count: bad.len() })
    }
}

/// Components of every two-color subgraph that has an edge.
pub fn bicolored_component_stats(g: &Graph, coloring: &Coloring) -> Result<ComponentStats> {
    require_proper(g, coloring)?;
    let mut pairs: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
    for (u, v) in g.edges() {
        let (a, b) = (coloring.color(u), coloring.color(v));
        pairs.entry((a.min(b), a.max(b))).or_default().extend([u, v]);
    }
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::with_capacity(pairs.len());
    for ((a, b), seeds) in pairs {
        let inside = |v: usize| coloring.color(v) == a || coloring.color(v) == b;
        let mut touched = Vec::new();
        let mut components = Vec::new();
        for s in seeds {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            touched.push(s);
            let mut queue = VecDeque::from([s]);
            let mut members = vec![s];
            let mut degree_sum = 0;
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    if !inside(w) {
                        continue;
                    }
                    degree_sum += 1;
                    if !seen[w] {
                        seen[w] = true;
                        touched.push(w);
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            components.push(BicoloredComponent {
                colors: (a, b),
                vertices: VertexSet::new(members),
                edges: degree_sum / 2,
            });
        }
        for v in touched {
            seen[v] = false;
        }
        components.sort_by(|x, y| x.vertices.cmp(&y.vertices));
        out.push(PairStats {
            colors: (a, b),
            components,
        });
    }
    let mut worst: Option<&BicoloredComponent> = None;
    for c in out.iter().flat_map(|p| p.components.iter()) {
        if worst.is_none_or(|w| c.edges > w.edges) {
            worst = Some(c);
        }
    }
    Ok(ComponentStats {
        max_edges: worst.map_or(0, |w| w.edges),
        worst: worst.cloned(),
        pairs: out,
    })
}

/// Whether every bicolored component has at most `m` edges.
pub fn check_m_bounded(g: &Graph, coloring: &Coloring, m: usize) -> Result<BoundCheck> {
    let stats = bicolored_component_stats(g, coloring)?;
    let bounded = stats.max_edges <= m;
    Ok(BoundCheck {
        bounded,
        max_edges: stats.max_edges,
        witness: if bounded { None } else { stats.worst },
    })
}

pub fn check_structure(g: &Graph, coloring: &Coloring, property: Property) -> Result<StructureCheck> {
    let stats = bicolored_component_stats(g, coloring)?;
    structure_from_stats(g, &stats, property)
}

fn structure_from_stats(g: &Graph, stats: &ComponentStats, property: Property) -> Result<StructureCheck> {
    for c in stats.components() {
        if !component_has(g, c, property)? {
            return Ok(StructureCheck {
                property,
                holds: false,
                witness: Some(c.clone()),
            });
        }
    }
    Ok(StructureCheck {
        property,
        holds: true,
        witness: None,
    })
}

fn component_has(g: &Graph, c: &BicoloredComponent, property: Property) -> Result<bool> {
    let k = c.vertices.len();
    match property {
        Property::Star => Ok(c.vertices.iter().any(|v| {
            g.neighbors(v).iter().filter(|&&w| c.vertices.contains(w)).count() == c.edges
        })),
        Property::Acyclic => Ok(c.edges + 1 == k),
        Property::Planar => {
            if k > PLANARITY_MAX_VERTICES {
                return Err(Error::SizeLimit {
                    what: "planarity check component size",
                    limit: PLANARITY_MAX_VERTICES,
                    actual: k,
                });
            }
            let sub = induced_subgraph(g, &c.vertices)?.graph;
            for name in ["k5", "k33"] {
                if has_minor(&sub, &obstruction(name)?.graph)?.is_some() {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Property::Treewidth(bound) => {
            let sub = induced_subgraph(g, &c.vertices)?.graph;
            Ok(treewidth_exact(&sub)? <= bound)
        }
    }
}

/// Full report. Components are analysed only for proper colorings; an
/// improper coloring yields `proper = false` and no component data.
pub fn verify(
    g: &Graph,
    coloring: &Coloring,
    m: Option<usize>,
    properties: &[Property],
) -> Result<VerificationReport> {
    let monochromatic_edges = check_proper(g, coloring)?;
    if !monochromatic_edges.is_empty() {
        return Ok(VerificationReport {
            proper: false,
            monochromatic_edges,
            max_bicolored_component_edges: 0,
            worst_pair: None,
            m,
            m_bounded: m.map(|_| false),
            structural_results: BTreeMap::new(),
        });
    }
    let stats = bicolored_component_stats(g, coloring)?;
    let mut structural_results = BTreeMap::new();
    for &p in properties {
        structural_results.insert(p, structure_from_stats(g, &stats, p)?);
    }
    Ok(VerificationReport {
        proper: true,
        monochromatic_edges,
        max_bicolored_component_edges: stats.max_edges,
        worst_pair: stats.worst,
        m,
        m_bounded: m.map(|m| stats.max_edges <= m),
        structural_results,
    })
}

#[cfg(test)]
mod tests;
