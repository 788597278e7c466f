use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::events::{BadEventWitness, Detector, Mode};
use crate::graph::rng_from_seed;
use crate::graph::{max_degree, Graph, RNG_ALGORITHM};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunResult {
    pub coloring: Coloring,
    /// Number of resampling steps performed.
    pub rounds: u64,
    /// Total number of vertices recolored across all steps.
    pub resamples: u64,
    pub mode: Mode,
    pub seed: u64,
    pub rng: String,
    pub success: bool,
}

/// Outcome of one scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// No bad event occurs.
    Clean,
    /// The first witness was found and its vertices recolored.
    Resampled(BadEventWitness),
}

/// Step-by-step resampling state. Each step scans for bad events and, if
/// any occur, recolors exactly the vertices of the first one.
pub struct Resampler<'g> {
    detector: Detector<'g>,
    coloring: Coloring,
    rng: ChaCha8Rng,
    rounds: u64,
    resamples: u64,
    seed: u64,
}

impl<'g> Resampler<'g> {
    /// Colors every vertex uniformly from `0..s` using the seeded generator.
    pub fn new(g: &'g Graph, m: usize, s: u32, seed: u64, mode: Mode) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidParameter("palette size must be positive".into()));
        }
        let detector = Detector::new(g, m, mode)?;
        let mut rng = rng_from_seed(seed);
        let colors = (0..g.vertex_count()).map(|_| rng.random_range(0..s)).collect();
        Ok(Resampler {
            detector,
            coloring: Coloring::new(s, colors)?,
            rng,
            rounds: 0,
            resamples: 0,
            seed,
        })
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn step(&mut self) -> Result<Step> {
        let Some(witness) = self.detector.first(&self.coloring)? else {
            return Ok(Step::Clean);
        };
        self.resample(&witness);
        Ok(Step::Resampled(witness))
    }

    fn resample(&mut self, witness: &BadEventWitness) {
        let s = self.coloring.palette_size();
        for v in witness.vertices().iter() {
            let c = self.rng.random_range(0..s);
            self.coloring.set(v, c);
            self.resamples += 1;
        }
        self.rounds += 1;
    }

    fn finish(self, success: bool) -> RunResult {
        RunResult {
            coloring: self.coloring,
            rounds: self.rounds,
            resamples: self.resamples,
            mode: self.detector.mode(),
            seed: self.seed,
            rng: RNG_ALGORITHM.to_string(),
            success,
        }
    }
}

/// Randomized colorer: random start, then resample the first bad event until
/// none occurs. Gives up after `max_rounds` scans.
///
/// Graphs with max degree at most 1 are colored greedily (endpoint pairs get
/// colors 0 and 1) with `rounds = 0`; the run fails if the palette is too
/// small for that.
pub fn moser_tardos(
    g: &Graph,
    m: usize,
    s: u32,
    seed: u64,
    max_rounds: u64,
    mode: Mode,
) -> Result<RunResult> {
    if max_rounds == 0 {
        return Err(Error::InvalidParameter("max_rounds must be at least 1".into()));
    }
    if s == 0 {
        return Err(Error::InvalidParameter("palette size must be positive".into()));
    }
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    if max_degree(g) <= 1 {
        return Ok(greedy_matching_coloring(g, s, seed, mode));
    }
    let mut run = Resampler::new(g, m, s, seed, mode)?;
    for scan in 1..=max_rounds {
        let Some(witness) = run.detector.first(&run.coloring)? else {
            return Ok(run.finish(true));
        };
        if scan == max_rounds {
            break;
        }
        run.resample(&witness);
    }
    Ok(run.finish(false))
}

fn greedy_matching_coloring(g: &Graph, s: u32, seed: u64, mode: Mode) -> RunResult {
    let needed = if g.edge_count() > 0 { 2 } else { 1 };
    let mut colors = vec![0u32; g.vertex_count()];
    if s >= needed {
        for (_, v) in g.edges() {
            colors[v] = 1;
        }
    }
    RunResult {
        coloring: Coloring::new(s, colors).expect("colors are below the palette"),
        rounds: 0,
        resamples: 0,
        mode,
        seed,
        rng: RNG_ALGORITHM.to_string(),
        success: s >= needed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};
    use crate::verifier::{check_m_bounded, check_proper};

    #[test]
    fn c4_three_colors_violation_driven() {
        let c4 = generate(GraphKind::Cycle(4), None).unwrap();
        let r = moser_tardos(&c4, 2, 3, 1, 100_000, Mode::ViolationDriven).unwrap();
        assert!(r.success);
        assert!(check_proper(&c4, &r.coloring).unwrap().is_empty());
        assert!(check_m_bounded(&c4, &r.coloring, 2).unwrap().bounded);
    }

    #[test]
    fn c4_faithful_needs_four_colors() {
        // Opposite vertices of C4 form special pairs at m = 2, and every valid
        // 3-coloring repeats a color on one of them.
        let c4 = generate(GraphKind::Cycle(4), None).unwrap();
        let r = moser_tardos(&c4, 2, 3, 1, 2_000, Mode::Faithful).unwrap();
        assert!(!r.success);
        let r = moser_tardos(&c4, 2, 4, 1, 100_000, Mode::Faithful).unwrap();
        assert!(r.success);
    }

    #[test]
    fn single_edge_is_greedy() {
        let k2 = generate(GraphKind::Path(2), None).unwrap();
        for seed in 0..5 {
            let r = moser_tardos(&k2, 1, 2, seed, 10, Mode::Faithful).unwrap();
            assert!(r.success);
            assert_eq!(r.rounds, 0);
            assert_ne!(r.coloring.color(0), r.coloring.color(1));
        }
        let r = moser_tardos(&k2, 1, 1, 0, 10, Mode::Faithful).unwrap();
        assert!(!r.success);
    }

    #[test]
    fn k5_with_two_colors_fails() {
        let k5 = generate(GraphKind::Complete(5), None).unwrap();
        let r = moser_tardos(&k5, 2, 2, 3, 1000, Mode::Faithful).unwrap();
        assert!(!r.success);
        assert_eq!(r.rounds, 999);
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let g = generate(
            GraphKind::RandomBoundedDegree { n: 80, max_degree: 6, p_edge: 0.1 },
            Some(5),
        )
        .unwrap();
        let a = moser_tardos(&g, 2, 40, 9, 10_000, Mode::Faithful).unwrap();
        let b = moser_tardos(&g, 2, 40, 9, 10_000, Mode::Faithful).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn each_step_changes_only_witness_vertices() {
        let g = generate(
            GraphKind::RandomBoundedDegree { n: 60, max_degree: 5, p_edge: 0.15 },
            Some(2),
        )
        .unwrap();
        for mode in [Mode::Faithful, Mode::ViolationDriven] {
            let mut run = Resampler::new(&g, 3, 12, 4, mode).unwrap();
            for _ in 0..500 {
                let before = run.coloring().clone();
                match run.step().unwrap() {
                    Step::Clean => break,
                    Step::Resampled(w) => {
                        let allowed = w.vertices();
                        for v in 0..g.vertex_count() {
                            if before.color(v) != run.coloring().color(v) {
                                assert!(allowed.contains(v));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        let c4 = generate(GraphKind::Cycle(4), None).unwrap();
        assert!(moser_tardos(&c4, 2, 3, 1, 0, Mode::Faithful).is_err());
        assert!(moser_tardos(&c4, 0, 3, 1, 10, Mode::Faithful).is_err());
        assert!(moser_tardos(&c4, 2, 0, 1, 10, Mode::Faithful).is_err());
    }
}
