//! Repeated colorer runs on random bounded-degree graphs, summarized as CSV
//! rows.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::events::Mode;
use crate::graph::{generate, Graph, GraphKind};
use crate::lll::{moser_tardos, palette_size, Constant};
use crate::par;
use crate::verifier::check_m_bounded;

/// Vertices per unit of max degree in the standard instances.
pub const VERTICES_PER_DEGREE: usize = 40;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub m: usize,
    pub deltas: Vec<usize>,
    pub constants: Vec<Constant>,
    pub trials: usize,
    pub seed_base: u64,
    pub mode: Mode,
    pub max_rounds: u64,
}

/// One summary line per `(delta, C)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRow {
    pub delta: usize,
    pub m: usize,
    pub palette_size: u64,
    #[serde(rename = "C")]
    pub c: Constant,
    pub trials: usize,
    pub successes: usize,
    pub mean_rounds: f64,
    pub max_rounds_observed: u64,
    /// Largest bicolored component over the successful trials.
    pub max_component_edges_observed: usize,
    pub seed_base: u64,
    pub mode: Mode,
}

pub const CSV_HEADER: [&str; 11] = [
    "delta",
    "m",
    "palette_size",
    "C",
    "trials",
    "successes",
    "mean_rounds",
    "max_rounds_observed",
    "max_component_edges_observed",
    "seed_base",
    "mode",
];

/// Random graph on `40Δ` vertices with max degree at most `Δ`. Each pair is
/// proposed with probability `2Δ/(n-1)` and kept while both degrees are
/// below `Δ`, so most vertices end up at degree `Δ`.
pub fn standard_instance(delta: usize, seed: u64) -> Result<Graph> {
    if delta == 0 {
        return Err(Error::InvalidParameter("delta must be positive".into()));
    }
    let n = VERTICES_PER_DEGREE * delta;
    let p_edge = (2.0 * delta as f64 / (n - 1) as f64).min(1.0);
    generate(
        GraphKind::RandomBoundedDegree {
            n,
            max_degree: delta,
            p_edge,
        },
        Some(seed),
    )
}

struct Trial {
    success: bool,
    rounds: u64,
    max_edges: usize,
}

/// Runs every `(delta, C)` cell. Trial `i` uses seed `seed_base + i` for
/// both the graph and the colorer, so rows do not depend on scheduling.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<ExperimentRow>> {
    if config.trials == 0 {
        return Err(Error::InvalidParameter("trials must be positive".into()));
    }
    if config.m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    if config.deltas.is_empty() || config.constants.is_empty() {
        return Err(Error::InvalidParameter("need at least one delta and one constant".into()));
    }
    let mut rows = Vec::new();
    for &delta in &config.deltas {
        for &c in &config.constants {
            let s = palette_size(config.m, delta, c)?;
            let palette = u32::try_from(s)
                .map_err(|_| Error::InvalidParameter(format!("palette size {s} exceeds 32 bits")))?;
            let trials: Vec<Result<Trial>> = par::map_indices(par::Strategy::default(), config.trials, |i| {
                let seed = config.seed_base.wrapping_add(i as u64);
                let g = standard_instance(delta, seed)?;
                let run = moser_tardos(&g, config.m, palette, seed, config.max_rounds, config.mode)?;
                let max_edges = if run.success {
                    check_m_bounded(&g, &run.coloring, config.m)?.max_edges
                } else {
                    0
                };
                Ok(Trial {
                    success: run.success,
                    rounds: run.rounds,
                    max_edges,
                })
            });
            let trials: Vec<Trial> = trials.into_iter().collect::<Result<_>>()?;
            let total_rounds: u64 = trials.iter().map(|t| t.rounds).sum();
            rows.push(ExperimentRow {
                delta,
                m: config.m,
                palette_size: s,
                c,
                trials: trials.len(),
                successes: trials.iter().filter(|t| t.success).count(),
                mean_rounds: total_rounds as f64 / trials.len() as f64,
                max_rounds_observed: trials.iter().map(|t| t.rounds).max().unwrap_or(0),
                max_component_edges_observed: trials.iter().map(|t| t.max_edges).max().unwrap_or(0),
                seed_base: config.seed_base,
                mode: config.mode,
            });
        }
    }
    Ok(rows)
}

/// Writes the header and one line per row.
pub fn write_csv<W: Write>(rows: &[ExperimentRow], out: W) -> std::result::Result<(), csv::Error> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
