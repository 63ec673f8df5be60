use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use plagsim::corpus::{PairOrdering, PairPolicy};
use plagsim::learn::ClassifierKind;
use plagsim::similarity::Normalization;

#[derive(Debug, Parser)]
#[command(name = "plagsim", version, about = "Token-stream similarity and plagiarism classification for C++ solutions")]
pub struct Cli {
    /// Master seed for every random choice.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Print machine-readable JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Divide scores by the mean stream size instead of the source size.
    #[arg(long, global = true)]
    pub symmetric: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Similarity vector of two source files.
    Compare(CompareArgs),
    /// Per-assignment similarity matrices as CSV.
    Matrix(MatrixArgs),
    /// Labeled feature dataset from a corpus.
    Dataset(DatasetArgs),
    /// Oversample the minority class of a dataset.
    Smote(SmoteArgs),
    /// Cross-validate a classifier on a dataset.
    Eval(EvalArgs),
    /// Rank features by fold-wise correlation-based selection.
    Rank(RankArgs),
    /// Full experiment bundle from a corpus.
    Pipeline(PipelineArgs),
    /// Print the syntax tree or token stream of a file.
    Dump(DumpArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    /// Unordered pairs, comment-only copies left out.
    Default,
    /// Unordered pairs including comment-only copies.
    All,
    /// Both directions of every pair, comment-only copies left out.
    Ordered,
    /// Both directions, including comment-only copies.
    AllOrdered,
}

impl PolicyArg {
    pub fn policy(self) -> PairPolicy {
        let (include_comment_copies, ordering) = match self {
            PolicyArg::Default => (false, PairOrdering::Unordered),
            PolicyArg::All => (true, PairOrdering::Unordered),
            PolicyArg::Ordered => (false, PairOrdering::Ordered),
            PolicyArg::AllOrdered => (true, PairOrdering::Ordered),
        };
        PairPolicy { include_comment_copies, ordering }
    }
}

impl Cli {
    pub fn normalization(&self) -> Normalization {
        if self.symmetric {
            Normalization::Symmetric
        } else {
            Normalization::SourceNormalized
        }
    }
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    pub file_a: PathBuf,
    pub file_b: PathBuf,
    /// Dataset CSV to train a classifier on for a predicted label.
    #[arg(long)]
    pub train: Option<PathBuf>,
    #[arg(long, default_value = "RandomForest")]
    pub classifier: ClassifierKind,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    #[arg(long)]
    pub corpus: PathBuf,
    #[arg(long, value_enum, default_value_t = PolicyArg::Default)]
    pub policy: PolicyArg,
    /// Skip unparseable or misnamed files with a warning.
    #[arg(long)]
    pub permissive: bool,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    /// Output directory for `A<n>-matrix.csv` files.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct DatasetArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    /// Output CSV file.
    #[arg(long)]
    pub out: PathBuf,
    /// Also write the dataset in attribute-relation format.
    #[arg(long)]
    pub arff: Option<PathBuf>,
    /// Also write a corpus manifest (JSON).
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SmoteArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = 235.0)]
    pub percent: f64,
    #[arg(long, default_value_t = 5)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "RandomForest")]
    pub classifier: ClassifierKind,
    #[arg(long, default_value_t = 10)]
    pub folds: usize,
    /// Also write the report as JSON to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 10)]
    pub folds: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PipelineArgs {
    #[command(flatten)]
    pub corpus: CorpusArgs,
    /// Bundle directory.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = 235.0)]
    pub percent: f64,
    #[arg(long, default_value_t = 10)]
    pub folds: usize,
}

#[derive(Debug, Args)]
pub struct DumpArgs {
    pub file: PathBuf,
    /// Print the syntax tree instead of the token stream.
    #[arg(long)]
    pub tree: bool,
}
