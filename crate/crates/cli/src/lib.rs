//! Command implementations behind the `plagsim` binary.

mod args;
mod commands;
mod error;
mod pipeline;
mod render;

pub use args::{Cli, Command, PolicyArg};
pub use error::CliError;
pub use pipeline::{run_pipeline, PipelineOptions, BUNDLE_FILES};

use std::io::Write;

pub const TOOL: &str = "plagsim";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Runs one parsed command, writing its report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(CliError::Config("--jobs must be >= 1".into()));
        }
        // a pool that already exists keeps its size; only the first call counts
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match &cli.command {
        Command::Compare(a) => commands::compare(cli, a, out),
        Command::Matrix(a) => commands::matrix(cli, a, out),
        Command::Dataset(a) => commands::dataset(cli, a, out),
        Command::Smote(a) => commands::smote(cli, a, out),
        Command::Eval(a) => commands::eval(cli, a, out),
        Command::Rank(a) => commands::rank(cli, a, out),
        Command::Pipeline(a) => commands::pipeline(cli, a, out),
        Command::Dump(a) => commands::dump(a, out),
    }
}
