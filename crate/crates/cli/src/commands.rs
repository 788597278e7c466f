use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use bicolor::experiment::{run_experiment, write_csv, ExperimentConfig};
use bicolor::graph::{generate as generate_graph, max_degree, write_edge_list, GraphKind, RNG_ALGORITHM};
use bicolor::lll::{asymptotic_inequality_report, lll_certificate_exact, moser_tardos, palette_size, Constant};
use bicolor::minor_lab::{obstruction, verify_claim, ClaimId};
use bicolor::verifier::{brute_force_min_colors, verify as verify_coloring, Property};
use bicolor::Mode;
use serde::Serialize;

use crate::files::{format_coloring, read_coloring, read_graph, write_text, Report};
use crate::{
    CertifyArgs, ClaimsArgs, ColorArgs, ExperimentArgs, GenerateArgs, InequalityArgs, OracleArgs, Status, VerifyArgs,
};

#[derive(Serialize)]
struct ColorInputs {
    input: PathBuf,
    m: usize,
    colors: Option<u32>,
    constant: Option<Constant>,
    palette_size: u32,
    seed: u64,
    max_rounds: u64,
    mode: Mode,
    rng: &'static str,
}

pub fn color(a: ColorArgs) -> Result<Status> {
    let g = read_graph(&a.input)?;
    let mode = a.mode.resolve(a.m);
    let s = match (a.colors, a.constant) {
        (Some(s), _) => s,
        (None, Some(c)) => {
            let delta = max_degree(&g);
            // An edgeless graph needs one color; the formula gives zero.
            let s = if delta == 0 { 1 } else { palette_size(a.m, delta, c)? };
            u32::try_from(s).context("palette size exceeds 32 bits")?
        }
        (None, None) => unreachable!("clap requires one palette option"),
    };
    let run = moser_tardos(&g, a.m, s, a.seed, a.max_rounds, mode)?;
    let verification = verify_coloring(&g, &run.coloring, Some(a.m), &[])?;
    if let Some(path) = &a.coloring_out {
        write_text(Some(path), &format_coloring(&run.coloring))?;
    }
    let success = run.success;
    eprintln!(
        "{} after {} rounds with {s} colors",
        if success { "colored" } else { "budget exhausted" },
        run.rounds
    );
    let inputs = ColorInputs {
        input: a.input,
        m: a.m,
        colors: a.colors,
        constant: a.constant,
        palette_size: s,
        seed: a.seed,
        max_rounds: a.max_rounds,
        mode,
        rng: RNG_ALGORITHM,
    };
    #[derive(Serialize)]
    struct Results {
        run: bicolor::lll::RunResult,
        verification: bicolor::verifier::VerificationReport,
    }
    Report::new("color", inputs, Results { run, verification }).emit(Some(&a.output))?;
    Ok(if success { Status::Pass } else { Status::BudgetExhausted })
}

pub fn verify(a: VerifyArgs) -> Result<Status> {
    let g = read_graph(&a.input)?;
    let coloring = read_coloring(&a.coloring)?;
    let report = verify_coloring(&g, &coloring, a.m, &a.checks)?;
    let passed = report.passed();
    #[derive(Serialize)]
    struct Inputs {
        input: PathBuf,
        coloring: PathBuf,
        m: Option<usize>,
        checks: Vec<Property>,
    }
    let inputs = Inputs {
        input: a.input,
        coloring: a.coloring,
        m: a.m,
        checks: a.checks,
    };
    Report::new("verify", inputs, report).emit(a.output.as_deref())?;
    Ok(if passed { Status::Pass } else { Status::CheckFailed })
}

pub fn certify(a: CertifyArgs) -> Result<Status> {
    let g = read_graph(&a.graph)?;
    let report = lll_certificate_exact(&g, a.m, a.s)?;
    let pass = report.pass;
    #[derive(Serialize)]
    struct Inputs {
        graph: PathBuf,
        m: usize,
        s: u64,
    }
    let inputs = Inputs {
        graph: a.graph,
        m: a.m,
        s: a.s,
    };
    Report::new("certify", inputs, report).emit(a.output.as_deref())?;
    Ok(if pass { Status::Pass } else { Status::CheckFailed })
}

pub fn oracle(a: OracleArgs) -> Result<Status> {
    let g = read_graph(&a.input)?;
    let min_colors = brute_force_min_colors(&g, a.m)?;
    match &a.output {
        None => println!("{min_colors}"),
        Some(path) => {
            #[derive(Serialize)]
            struct Inputs {
                input: PathBuf,
                m: usize,
            }
            #[derive(Serialize)]
            struct Results {
                min_colors: u32,
            }
            let inputs = Inputs {
                input: a.input.clone(),
                m: a.m,
            };
            Report::new("oracle", inputs, Results { min_colors }).emit(Some(path))?;
        }
    }
    Ok(Status::Pass)
}

pub fn claims(a: ClaimsArgs) -> Result<Status> {
    let ids: Vec<ClaimId> = if a.claim == "all" {
        ClaimId::ALL.to_vec()
    } else {
        vec![a.claim.parse()?]
    };
    let mut results = Vec::new();
    for id in ids {
        let r = verify_claim(id).with_context(|| format!("claim {id}"))?;
        eprintln!("{} {id}: {}", if r.pass { "PASS" } else { "FAIL" }, r.summary);
        results.push(r);
    }
    let all_pass = results.iter().all(|r| r.pass);
    #[derive(Serialize)]
    struct Inputs {
        claim: String,
    }
    Report::new("claims", Inputs { claim: a.claim }, results).emit(a.output.as_deref())?;
    Ok(if all_pass { Status::Pass } else { Status::CheckFailed })
}

pub fn experiment(a: ExperimentArgs) -> Result<Status> {
    let config = ExperimentConfig {
        m: a.m,
        deltas: a.deltas,
        constants: a.constants,
        trials: a.trials,
        seed_base: a.seed_base,
        mode: a.mode.resolve(a.m),
        max_rounds: a.max_rounds,
    };
    let rows = run_experiment(&config)?;
    let mut out = Vec::new();
    write_csv(&rows, &mut out)?;
    write_text(a.output.as_deref(), std::str::from_utf8(&out)?)?;
    Ok(Status::Pass)
}

pub fn generate(a: GenerateArgs) -> Result<Status> {
    let spec: Vec<&str> = a.spec.iter().map(String::as_str).collect();
    let num = |i: usize| -> Result<usize> {
        let text = spec.get(i).with_context(|| format!("{} needs more parameters", spec[0]))?;
        text.parse().with_context(|| format!("bad integer {text:?}"))
    };
    let g = match spec[0] {
        "path" => generate_graph(GraphKind::Path(num(1)?), None)?,
        "cycle" => generate_graph(GraphKind::Cycle(num(1)?), None)?,
        "complete" => generate_graph(GraphKind::Complete(num(1)?), None)?,
        "complete-bipartite" => generate_graph(GraphKind::CompleteBipartite(num(1)?, num(2)?), None)?,
        "hypercube" => generate_graph(GraphKind::Hypercube(u32::try_from(num(1)?)?), None)?,
        "random" => {
            let p = spec.get(3).context("random needs N DELTA P")?;
            let kind = GraphKind::RandomBoundedDegree {
                n: num(1)?,
                max_degree: num(2)?,
                p_edge: p.parse().with_context(|| format!("bad probability {p:?}"))?,
            };
            generate_graph(kind, Some(a.seed.unwrap_or(0)))?
        }
        name => obstruction(name)?.graph,
    };
    let arity = match spec[0] {
        "path" | "cycle" | "complete" | "hypercube" => 2,
        "complete-bipartite" => 3,
        "random" => 4,
        _ => 1,
    };
    if spec.len() != arity {
        bail!("{} takes {} parameters, got {}", spec[0], arity - 1, spec.len() - 1);
    }
    write_text(a.output.as_deref(), &write_edge_list(&g))?;
    Ok(Status::Pass)
}

pub fn inequalities(a: InequalityArgs) -> Result<Status> {
    let report = asymptotic_inequality_report(a.m, a.delta, a.constant, a.c_prime)?;
    let holds = report.edge_holds && report.tuples_hold && report.k_vertex_holds;
    #[derive(Serialize)]
    struct Inputs {
        m: usize,
        delta: usize,
        constant: Constant,
        c_prime: Constant,
    }
    let inputs = Inputs {
        m: a.m,
        delta: a.delta,
        constant: a.constant,
        c_prime: a.c_prime,
    };
    Report::new("inequalities", inputs, report).emit(a.output.as_deref())?;
    Ok(if holds { Status::Pass } else { Status::CheckFailed })
}
