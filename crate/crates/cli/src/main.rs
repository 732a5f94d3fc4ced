mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use paminus::models::EvalBudget;

use commands::{Output, UsageError};
use report::RunReport;

#[derive(Parser)]
#[command(
    name = "paminus",
    version,
    about = "Sentences, models and exact checks for the arithmetic PA-"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for searches and sampling.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    threads: u64,
    /// Candidate witnesses tried per quantifier.
    #[arg(long, global = true, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print phi_k or nu_k.
    Gen {
        family: Family,
        k: u64,
        #[arg(long, value_enum, default_value_t = Format::Native)]
        format: Format,
        /// Prepend A1..A15 to prover output.
        #[arg(long)]
        with_axioms: bool,
    },
    /// Run a counterexample search or an exact evaluation.
    Check(CheckArgs),
    /// Print the 2-adic certificate for n..=n+k.
    Kurschak {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Work in one of the built-in models.
    Model(ModelArgs),
    /// Parse a formula file and check that printing round-trips.
    Parse { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Family {
    Phi,
    Nu,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Native,
    Prover,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum CheckKind {
    Harmonic,
    Nagell,
    PhiSearch,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Harmonic => "harmonic",
            CheckKind::Nagell => "nagell",
            CheckKind::PhiSearch => "phi-search",
        }
    }
}

#[derive(Args)]
pub struct CheckArgs {
    pub kind: CheckKind,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    /// Numerators, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub m: Option<Vec<u64>>,
    #[arg(long)]
    pub n_max: Option<u64>,
    #[arg(long)]
    pub m_max: Option<u64>,
    /// Enumerate every m-vector up to the cap instead of sampling.
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long)]
    pub samples: Option<u64>,
    #[arg(long)]
    pub cap: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ModelAction {
    CheckAxioms,
    ParityDemo,
    BelowNumeral,
}

#[derive(Args)]
pub struct ModelArgs {
    pub action: ModelAction,
    #[arg(default_value = "poly")]
    pub model: String,
    #[arg(long)]
    pub samples: Option<u64>,
    /// Element in the model's notation, e.g. `7` or `[0, 1]`.
    #[arg(long)]
    pub element: Option<String>,
    #[arg(long)]
    pub k: Option<u64>,
}

fn run(cli: &Cli) -> Result<Output, UsageError> {
    let budget = EvalBudget::new(cli.budget as usize, EvalBudget::default().max_depth)?;
    match &cli.command {
        Command::Gen {
            family,
            k,
            format,
            with_axioms,
        } => commands::gen(*family, *k, *format, *with_axioms),
        Command::Check(args) => commands::check(args, cli.seed),
        Command::Kurschak { n, k } => commands::kurschak(*n, *k),
        Command::Model(args) => commands::model(args, cli.seed, budget),
        Command::Parse { file } => commands::parse(file),
    }
}

fn emit(cli: &Cli, out: Output, start: Instant) {
    if !cli.json {
        if let Some(text) = out.text {
            println!("{text}");
            return;
        }
    }
    let report = RunReport {
        command: out.command,
        params: out.params,
        outcome: out.outcome,
        details: out.details,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    if cli.json {
        println!("{}", report.to_json());
    } else {
        println!("{}", report.to_text());
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cli = Cli::parse();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads as usize)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(out) => {
            let code = out.outcome.exit_code();
            emit(&cli, out, start);
            ExitCode::from(code)
        }
        Err(UsageError { message, report }) => {
            if let Some(out) = report {
                emit(&cli, *out, start);
            }
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
