use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use disordered::CutMode;
use disordered_cli::{commands, report, CliError, FiberQuery, Report};

#[derive(Parser)]
#[command(name = "disordered", version, about = "Exact checks on tagged sets and trajectories")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit a single JSON object instead of text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run every check that applies to the document kind
    Check { file: PathBuf },
    /// Cut a line set at a position
    Cut {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },
    /// Squared distance and contact between two sets
    Distance { a: PathBuf, b: PathBuf },
    /// Points of a trajectory at a value or series parameter
    Fiber {
        file: PathBuf,
        #[command(flatten)]
        query: QueryArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Left,
    Right,
    Disordered,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct QueryArgs {
    #[arg(long, allow_hyphen_values = true)]
    value: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    series: Option<String>,
    #[arg(long)]
    apex: bool,
}

fn run(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Check { file } => commands::check(&commands::load(&file)?),
        Command::Cut { file, at, mode } => {
            let mode = match mode {
                ModeArg::Left => CutMode::LeftClosed,
                ModeArg::Right => CutMode::RightClosed,
                ModeArg::Disordered => CutMode::Disordered,
            };
            commands::cut_at(&commands::load(&file)?, &at, mode)
        }
        Command::Distance { a, b } => {
            commands::distance(&commands::load(&a)?, &commands::load(&b)?)
        }
        Command::Fiber { file, query } => {
            let query = match (query.value, query.series) {
                (Some(x), _) => FiberQuery::Value(x),
                (_, Some(y)) => FiberQuery::Series(y),
                _ => FiberQuery::Apex,
            };
            commands::fiber(&commands::load(&file)?, &query)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors and 0 for --help
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(r) => {
            let text = if cli.json { r.render_json() } else { r.render_human() };
            print!("{text}");
            ExitCode::from(r.exit_code as u8)
        }
        Err(e) => {
            let message = e.to_string();
            if cli.json {
                print!("{}", report::error_json(&message));
            }
            eprintln!("error: {message}");
            ExitCode::from(CliError::EXIT_CODE as u8)
        }
    }
}
