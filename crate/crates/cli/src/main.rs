mod commands;
mod files;

use std::path::PathBuf;
use std::process::ExitCode;

use bicolor::lll::Constant;
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Colorings with bounded bicolored components.
#[derive(Parser)]
#[command(name = "bicolor", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a graph by resampling until no bad event occurs.
    Color(ColorArgs),
    /// Check a coloring: properness, the edge bound and structural properties.
    Verify(VerifyArgs),
    /// Check the local lemma condition exactly for a small graph.
    Certify(CertifyArgs),
    /// Smallest palette admitting a valid coloring, by exhaustive search.
    Oracle(OracleArgs),
    /// Machine-check the finite facts behind the corollaries.
    Claims(ClaimsArgs),
    /// Run the colorer on random bounded-degree graphs and write CSV.
    Experiment(ExperimentArgs),
    /// Write a standard or random graph in edge-list format.
    Generate(GenerateArgs),
    /// Evaluate the asymptotic local lemma inequalities for given constants.
    Inequalities(InequalityArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ModeArg {
    /// Faithful for m <= 4, violation-driven above.
    Auto,
    Faithful,
    ViolationDriven,
}

impl ModeArg {
    pub fn resolve(self, m: usize) -> bicolor::Mode {
        match self {
            ModeArg::Auto => bicolor::Mode::auto(m),
            ModeArg::Faithful => bicolor::Mode::Faithful,
            ModeArg::ViolationDriven => bicolor::Mode::ViolationDriven,
        }
    }
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("palette").required(true).args(["colors", "constant"]))]
pub struct ColorArgs {
    /// Graph in edge-list format.
    #[arg(long, visible_alias = "graph")]
    pub input: PathBuf,
    #[arg(long)]
    pub m: usize,
    /// Palette size.
    #[arg(long)]
    pub colors: Option<u32>,
    /// Palette constant C; the palette is ceil(C * delta^((m+1)/m)).
    #[arg(long)]
    pub constant: Option<Constant>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100_000)]
    pub max_rounds: u64,
    #[arg(long, value_enum, default_value = "auto")]
    pub mode: ModeArg,
    /// Report path.
    #[arg(long)]
    pub output: PathBuf,
    /// Also write the coloring in the plain format.
    #[arg(long)]
    pub coloring_out: Option<PathBuf>,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, visible_alias = "graph")]
    pub input: PathBuf,
    /// Plain coloring file or a `color` report.
    #[arg(long)]
    pub coloring: PathBuf,
    #[arg(long)]
    pub m: Option<usize>,
    /// star, acyclic, planar or treewidth:K. Repeatable.
    #[arg(long = "check")]
    pub checks: Vec<bicolor::verifier::Property>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct CertifyArgs {
    #[arg(long, visible_alias = "input")]
    pub graph: PathBuf,
    #[arg(long)]
    pub m: usize,
    /// Palette size.
    #[arg(long, visible_alias = "colors")]
    pub s: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct OracleArgs {
    #[arg(long, visible_alias = "graph")]
    pub input: PathBuf,
    #[arg(long)]
    pub m: usize,
    /// Write a JSON report here instead of printing the bare number.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct ClaimsArgs {
    /// A claim id, or `all`.
    #[arg(default_value = "all")]
    pub claim: String,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct ExperimentArgs {
    #[arg(long)]
    pub m: usize,
    /// Comma-separated max degrees.
    #[arg(long = "delta", value_delimiter = ',', required = true)]
    pub deltas: Vec<usize>,
    /// Comma-separated palette constants.
    #[arg(long = "constant", value_delimiter = ',', required = true)]
    pub constants: Vec<Constant>,
    #[arg(long)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed_base: u64,
    #[arg(long, value_enum, default_value = "auto")]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 100_000)]
    pub max_rounds: u64,
    /// CSV path; stdout when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct GenerateArgs {
    /// path N | cycle N | complete N | complete-bipartite A B | hypercube D |
    /// random N DELTA P | one of the named obstructions (k5, fig2, ...).
    #[arg(required = true, num_args = 1..)]
    pub spec: Vec<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct InequalityArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub delta: usize,
    #[arg(long)]
    pub constant: Constant,
    /// Stand-in for the unspecified constants hidden in the big-O terms.
    #[arg(long, default_value = "1")]
    pub c_prime: Constant,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Outcome of a command that ran to completion.
pub enum Status {
    Pass,
    BudgetExhausted,
    CheckFailed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Help and version requests are not errors.
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = match cli.command {
        Command::Color(a) => commands::color(a),
        Command::Verify(a) => commands::verify(a),
        Command::Certify(a) => commands::certify(a),
        Command::Oracle(a) => commands::oracle(a),
        Command::Claims(a) => commands::claims(a),
        Command::Experiment(a) => commands::experiment(a),
        Command::Generate(a) => commands::generate(a),
        Command::Inequalities(a) => commands::inequalities(a),
    };
    match outcome {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::BudgetExhausted) => ExitCode::from(2),
        Ok(Status::CheckFailed) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            let size_limit = e
                .chain()
                .any(|c| c.downcast_ref::<bicolor::Error>().is_some_and(|e| e.is_size_limit()));
            ExitCode::from(if size_limit { 4 } else { 1 })
        }
    }
}
