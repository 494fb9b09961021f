use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sheafdp_cli::bench::Series;
use sheafdp_cli::commands::{self, OrderArg, Output, EXIT_ERROR};
use sheafdp_cli::gen::{Kind, Params, TargetSpec};
use sheafdp_cli::io::ProblemKind;
use sheafdp_cli::report::RunOptions;
use sheafdp_core::SolverConfig;

#[derive(Parser)]
#[command(
    name = "sheafdp",
    version,
    about = "Decide graph coloring problems on structured decompositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance. Exit 0 = top, 1 = bottom, 2 = error, 3 = oracle disagreement.
    Decide {
        path: PathBuf,
        /// Include the glued section when the answer is top.
        #[arg(long)]
        witness: bool,
        /// Cross-check against glue-then-solve.
        #[arg(long)]
        oracle: bool,
    },
    /// Print the glued graph.
    Colim { path: PathBuf },
    /// Filter the solution co-decomposition and print the live subsets.
    Filter {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "fixpoint")]
        order: OrderOpt,
        /// Comma-separated arc list for `--order as-given`.
        #[arg(long, value_delimiter = ',')]
        edges: Option<Vec<usize>>,
    },
    /// Generate a seeded instance.
    Gen {
        #[arg(long, value_enum, default_value = "tree")]
        kind: KindOpt,
        #[arg(long, default_value_t = 4)]
        bags: usize,
        #[arg(long, default_value_t = 3)]
        width: usize,
        /// Chord budget for `--kind random`; bounds the shape's feedback vertex number.
        #[arg(long, default_value_t = 1)]
        fvs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// k<n>, c<n>, p<n>, e<n> or r<n>.
        #[arg(long, default_value = "k3")]
        target: TargetSpec,
        #[arg(long, value_enum, default_value = "hcoloring")]
        problem: ProblemOpt,
    },
    /// Time decide over a parameter sweep and print CSV.
    Bench {
        #[arg(long, value_enum)]
        series: SeriesOpt,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Runs per row; the median is reported.
        #[arg(long, default_value_t = 5)]
        reps: usize,
    },
    /// Run the golden checks.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderOpt {
    AsGiven,
    LeafToRoot,
    Fixpoint,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindOpt {
    Tree,
    Cyclic,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemOpt {
    Hcoloring,
    ReflHcoloring,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesOpt {
    Edges,
    Kappa,
    Fvs,
}

fn config() -> anyhow::Result<SolverConfig> {
    let mut config = SolverConfig::default();
    if let Ok(v) = std::env::var("SHEAFDP_ORACLE_CAP") {
        config.oracle_cap = v
            .trim()
            .parse()
            .map_err(|_| anyhow::anyhow!("SHEAFDP_ORACLE_CAP: not an integer: {v:?}"))?;
    }
    Ok(config)
}

fn dispatch(command: Command) -> anyhow::Result<Output> {
    match command {
        Command::Decide {
            path,
            witness,
            oracle,
        } => commands::decide(&path, RunOptions { witness, oracle }, &config()?),
        Command::Colim { path } => commands::colim_cmd(&path),
        Command::Filter { path, order, edges } => {
            let order = match order {
                OrderOpt::AsGiven => OrderArg::AsGiven,
                OrderOpt::LeafToRoot => OrderArg::LeafToRoot,
                OrderOpt::Fixpoint => OrderArg::Fixpoint,
            };
            commands::filter(&path, order, edges)
        }
        Command::Gen {
            kind,
            bags,
            width,
            fvs,
            seed,
            target,
            problem,
        } => {
            let kind = match kind {
                KindOpt::Tree => Kind::Tree,
                KindOpt::Cyclic => Kind::Cyclic,
                KindOpt::Random => Kind::Random,
            };
            let problem = match problem {
                ProblemOpt::Hcoloring => ProblemKind::Hcoloring,
                ProblemOpt::ReflHcoloring => ProblemKind::ReflHcoloring,
            };
            commands::gen_cmd(&Params {
                kind,
                bags,
                width,
                fvs,
                seed,
                target,
                problem,
            })
        }
        Command::Bench { series, out, reps } => {
            let series = match series {
                SeriesOpt::Edges => Series::Edges,
                SeriesOpt::Kappa => Series::Kappa,
                SeriesOpt::Fvs => Series::Fvs,
            };
            commands::bench_cmd(series, reps, out.as_deref())
        }
        Command::Selftest => commands::selftest_cmd(&config()?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
