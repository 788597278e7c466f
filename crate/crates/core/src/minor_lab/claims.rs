use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{enumerate_splits, has_minor, obstruction, verify_model, MinorModel, TREEWIDTH_3_OBSTRUCTIONS};
use crate::error::{Error, Result};
use crate::graph::{bipartition, enumerate_connected_bipartite, generate, write_edge_list, Graph, GraphKind};
use crate::par;
use crate::verifier::treewidth_exact;

/// The finite facts behind the corollaries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimId {
    /// No bipartite graph with at most 7 edges has a `K4` minor; one with 8
    /// edges does.
    #[serde(rename = "k4_bipartite_min_8")]
    K4BipartiteMin8,
    /// `K3,3` is the nonplanar bipartite graph with the fewest edges.
    #[serde(rename = "k33_min_nonplanar")]
    K33MinNonplanar,
    /// Splitting at most two vertices of `K5` always leaves a triangle.
    #[serde(rename = "k5_splits_have_triangle")]
    K5SplitsHaveTriangle,
    /// The 13-edge bipartite graph of the second figure has a `K5` minor.
    #[serde(rename = "fig2_k5_minor")]
    Fig2K5Minor,
    /// The four forbidden minors for treewidth 3 have treewidth 4.
    #[serde(rename = "obstructions_treewidth_4")]
    ObstructionsTreewidth4,
}

impl ClaimId {
    pub const ALL: [ClaimId; 5] = [
        ClaimId::K4BipartiteMin8,
        ClaimId::K33MinNonplanar,
        ClaimId::K5SplitsHaveTriangle,
        ClaimId::Fig2K5Minor,
        ClaimId::ObstructionsTreewidth4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::K4BipartiteMin8 => "k4_bipartite_min_8",
            ClaimId::K33MinNonplanar => "k33_min_nonplanar",
            ClaimId::K5SplitsHaveTriangle => "k5_splits_have_triangle",
            ClaimId::Fig2K5Minor => "fig2_k5_minor",
            ClaimId::ObstructionsTreewidth4 => "obstructions_treewidth_4",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimWitness {
    pub label: String,
    /// The graph in edge-list format.
    pub edge_list: String,
    pub model: Option<MinorModel>,
    pub value: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim: ClaimId,
    pub pass: bool,
    pub summary: String,
    /// Isomorphism classes (or named graphs) examined.
    pub classes_inspected: usize,
    /// The edge threshold found, for the threshold claims.
    pub threshold: Option<usize>,
    pub witnesses: Vec<ClaimWitness>,
    pub elapsed_ms: u64,
}

/// True iff the endpoints of some edge have a common neighbor.
pub fn contains_triangle(g: &Graph) -> bool {
    g.edges().any(|(u, v)| {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    })
}

pub fn verify_claim(claim: ClaimId) -> Result<ClaimResult> {
    let start = Instant::now();
    let mut result = match claim {
        ClaimId::K4BipartiteMin8 => k4_bipartite_min_8()?,
        ClaimId::K33MinNonplanar => k33_min_nonplanar()?,
        ClaimId::K5SplitsHaveTriangle => k5_splits_have_triangle()?,
        ClaimId::Fig2K5Minor => fig2_k5_minor()?,
        ClaimId::ObstructionsTreewidth4 => obstructions_treewidth_4()?,
    };
    result.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(result)
}

fn witness(label: impl Into<String>, g: &Graph, model: Option<MinorModel>, value: Option<usize>) -> ClaimWitness {
    ClaimWitness {
        label: label.into(),
        edge_list: write_edge_list(g),
        model,
        value,
    }
}

fn complete(n: usize) -> Result<Graph> {
    generate(GraphKind::Complete(n), None)
}

/// Minor models for `h` in each class, in parallel.
fn models(classes: &[Graph], h: &Graph) -> Result<Vec<Option<MinorModel>>> {
    par::map(classes, |g| has_minor(g, h)).into_iter().collect()
}

fn all_triangle_free(classes: &[Graph]) -> bool {
    classes.iter().all(|g| bipartition(g).is_some() && !contains_triangle(g))
}

fn k4_bipartite_min_8() -> Result<ClaimResult> {
    let classes = enumerate_connected_bipartite(8)?;
    let k4 = complete(4)?;
    let found = models(&classes, &k4)?;
    let threshold = classes
        .iter()
        .zip(&found)
        .filter(|(_, m)| m.is_some())
        .map(|(g, _)| g.edge_count())
        .min();
    let first = classes.iter().zip(&found).find(|(g, m)| m.is_some() && g.edge_count() == 8);
    let witnesses = first
        .map(|(g, m)| witness("smallest bipartite graph with a K4 minor", g, m.clone(), Some(8)))
        .into_iter()
        .collect();
    let sound = first.is_some_and(|(g, m)| verify_model(g, &k4, m.as_ref().unwrap()));
    let pass = threshold == Some(8) && sound && all_triangle_free(&classes);
    Ok(ClaimResult {
        claim: ClaimId::K4BipartiteMin8,
        pass,
        summary: format!(
            "{} connected bipartite classes with at most 8 edges; fewest edges with a K4 minor: {}",
            classes.len(),
            threshold.map_or("none".into(), |t| t.to_string())
        ),
        classes_inspected: classes.len(),
        threshold,
        witnesses,
        elapsed_ms: 0,
    })
}

fn k33_min_nonplanar() -> Result<ClaimResult> {
    let classes = enumerate_connected_bipartite(9)?;
    let k5 = complete(5)?;
    let k33 = obstruction("k33")?.graph;
    let with_k5 = models(&classes, &k5)?;
    let with_k33 = models(&classes, &k33)?;
    let nonplanar: Vec<(&Graph, Option<MinorModel>)> = classes
        .iter()
        .zip(with_k5.into_iter().zip(with_k33))
        .filter_map(|(g, (a, b))| a.or(b).map(|m| (g, Some(m))))
        .collect();
    let threshold = nonplanar.iter().map(|(g, _)| g.edge_count()).min();
    let at_nine: Vec<&(&Graph, Option<MinorModel>)> =
        nonplanar.iter().filter(|(g, _)| g.edge_count() == 9).collect();
    let unique_k33 = at_nine.len() == 1
        && crate::graph::canonical_form(at_nine[0].0)? == crate::graph::canonical_form(&k33)?;
    let witnesses = at_nine
        .iter()
        .map(|(g, m)| witness("nonplanar bipartite graph with 9 edges", g, m.clone(), Some(9)))
        .collect();
    Ok(ClaimResult {
        claim: ClaimId::K33MinNonplanar,
        pass: threshold == Some(9) && unique_k33 && all_triangle_free(&classes),
        summary: format!(
            "{} connected bipartite classes with at most 9 edges; none with at most 8 edges has a K5 or K3,3 minor; \
             {} class(es) with 9 edges do, and the only one is K3,3: {}",
            classes.len(),
            at_nine.len(),
            unique_k33
        ),
        classes_inspected: classes.len(),
        threshold,
        witnesses,
        elapsed_ms: 0,
    })
}

fn k5_splits_have_triangle() -> Result<ClaimResult> {
    let splits = enumerate_splits(&complete(5)?, 2)?;
    let without: Vec<&Graph> = splits.iter().filter(|g| !contains_triangle(g)).collect();
    let bipartite = splits.iter().filter(|g| bipartition(g).is_some()).count();
    Ok(ClaimResult {
        claim: ClaimId::K5SplitsHaveTriangle,
        pass: without.is_empty() && bipartite == 0,
        summary: format!(
            "{} classes from at most two splits of K5; {} without a triangle; {} bipartite",
            splits.len(),
            without.len(),
            bipartite
        ),
        classes_inspected: splits.len(),
        threshold: None,
        witnesses: without.iter().map(|g| witness("triangle-free split", g, None, None)).collect(),
        elapsed_ms: 0,
    })
}

fn fig2_k5_minor() -> Result<ClaimResult> {
    let fig2 = obstruction("fig2")?;
    let k5 = complete(5)?;
    let model = has_minor(&fig2.graph, &k5)?;
    let bipartite = bipartition(&fig2.graph).is_some();
    let edges = fig2.graph.edge_count();
    let sound = model.as_ref().is_some_and(|m| verify_model(&fig2.graph, &k5, m));
    let labelled = model.as_ref().map(|m| {
        m.branch_sets
            .iter()
            .map(|b| {
                let names: Vec<&str> = b.iter().map(|v| fig2.labels[v].as_str()).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect::<Vec<_>>()
            .join(" ")
    });
    Ok(ClaimResult {
        claim: ClaimId::Fig2K5Minor,
        pass: bipartite && edges == 13 && sound,
        summary: format!(
            "bipartite: {bipartite}; edges: {edges}; K5 branch sets: {}",
            labelled.unwrap_or_else(|| "none".into())
        ),
        classes_inspected: 1,
        threshold: None,
        witnesses: vec![witness("fig2", &fig2.graph, model, Some(edges))],
        elapsed_ms: 0,
    })
}

fn obstructions_treewidth_4() -> Result<ClaimResult> {
    let mut witnesses = Vec::new();
    let mut pass = true;
    for name in TREEWIDTH_3_OBSTRUCTIONS {
        let named = obstruction(name)?;
        let tw = treewidth_exact(&named.graph)?;
        pass &= tw == 4 && named.matches_expectations();
        witnesses.push(witness(name, &named.graph, None, Some(tw)));
    }
    let summary = witnesses
        .iter()
        .map(|w| format!("{}: {}", w.label, w.value.unwrap_or(0)))
        .collect::<Vec<_>>()
        .join(", ");
    Ok(ClaimResult {
        claim: ClaimId::ObstructionsTreewidth4,
        pass,
        summary: format!("treewidth {summary}"),
        classes_inspected: witnesses.len(),
        threshold: None,
        witnesses,
        elapsed_ms: 0,
    })
}
