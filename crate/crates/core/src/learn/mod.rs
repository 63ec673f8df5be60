//! Classifiers over similarity features, stratified cross-validation,
//! precision/recall/F1 reporting and correlation-based feature ranking.
//!
//! All randomness is drawn from seeds derived from the classifier's master seed,
//! so parallel and serial execution give identical models.

mod cfs;
mod cv;
mod forest;
pub mod logistic;
mod metrics;
mod naive_bayes;
mod oner;
mod tree;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dataset::Dataset;
use crate::label::Label;

pub use cfs::{cfs_select, merit, pearson, rank_features, FeatureRank, RankedFeature};
pub use cv::{cross_validate, stratified_folds};
pub use forest::ForestModel;
pub use logistic::LogisticModel;
pub use metrics::{weighted_average, ClassMetrics, ConfusionCounts, EvaluationReport, WeightedMetrics};
pub use naive_bayes::NaiveBayesModel;
pub use oner::OneRModel;
pub use tree::{Node as TreeNode, TreeModel, TreeParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LearnError {
    #[error("invalid hyperparameters: {0}")]
    InvalidHyperparameters(String),
    #[error("stratification impossible: {0}")]
    StratificationError(String),
    #[error("training set is empty")]
    EmptyTrainingSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassifierKind {
    OneR,
    NaiveBayes,
    Logistic,
    DecisionTree,
    RandomForest,
}

impl ClassifierKind {
    pub const ALL: [ClassifierKind; 5] = [
        ClassifierKind::RandomForest,
        ClassifierKind::DecisionTree,
        ClassifierKind::OneR,
        ClassifierKind::Logistic,
        ClassifierKind::NaiveBayes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassifierKind::OneR => "OneR",
            ClassifierKind::NaiveBayes => "NaiveBayes",
            ClassifierKind::Logistic => "Logistic",
            ClassifierKind::DecisionTree => "DecisionTree",
            ClassifierKind::RandomForest => "RandomForest",
        }
    }

    /// Default hyperparameters for this kind.
    pub fn spec(self, seed: u64) -> ClassifierSpec {
        let algorithm = match self {
            ClassifierKind::OneR => Algorithm::OneR { min_bucket: 6 },
            ClassifierKind::NaiveBayes => Algorithm::NaiveBayes { variance_floor: 1e-9 },
            ClassifierKind::Logistic => Algorithm::Logistic(logistic::LogisticParams::default()),
            ClassifierKind::DecisionTree => Algorithm::DecisionTree(TreeParams::default()),
            ClassifierKind::RandomForest => Algorithm::RandomForest(ForestParams::default()),
        };
        ClassifierSpec { algorithm, seed }
    }
}

impl std::str::FromStr for ClassifierKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_lowercase();
        match key.as_str() {
            "oner" => Ok(ClassifierKind::OneR),
            "naivebayes" | "nb" => Ok(ClassifierKind::NaiveBayes),
            "logistic" | "logisticregression" => Ok(ClassifierKind::Logistic),
            "decisiontree" | "tree" | "c45" => Ok(ClassifierKind::DecisionTree),
            "randomforest" | "forest" | "rf" => Ok(ClassifierKind::RandomForest),
            _ => Err(format!("unknown classifier {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ForestParams {
    pub trees: usize,
    pub bootstrap: bool,
    /// Features considered per split; `None` means `ceil(sqrt(arity))`.
    pub features_per_split: Option<usize>,
    pub max_depth: Option<usize>,
    pub min_leaf: usize,
}

impl Default for ForestParams {
    fn default() -> Self {
        ForestParams { trees: 100, bootstrap: true, features_per_split: None, max_depth: None, min_leaf: 2 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Algorithm {
    OneR { min_bucket: usize },
    NaiveBayes { variance_floor: f64 },
    Logistic(logistic::LogisticParams),
    DecisionTree(TreeParams),
    RandomForest(ForestParams),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassifierSpec {
    pub algorithm: Algorithm,
    pub seed: u64,
}

impl ClassifierSpec {
    pub fn kind(&self) -> ClassifierKind {
        match self.algorithm {
            Algorithm::OneR { .. } => ClassifierKind::OneR,
            Algorithm::NaiveBayes { .. } => ClassifierKind::NaiveBayes,
            Algorithm::Logistic(_) => ClassifierKind::Logistic,
            Algorithm::DecisionTree(_) => ClassifierKind::DecisionTree,
            Algorithm::RandomForest(_) => ClassifierKind::RandomForest,
        }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        ClassifierSpec { seed, ..self }
    }

    // negated comparisons also reject NaN
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<(), LearnError> {
        let bad = |msg: &str| Err(LearnError::InvalidHyperparameters(msg.to_string()));
        match self.algorithm {
            Algorithm::OneR { min_bucket: 0 } => bad("OneR minimum bucket must be >= 1"),
            Algorithm::NaiveBayes { variance_floor } if !(variance_floor > 0.0) => {
                bad("variance floor must be positive")
            }
            Algorithm::Logistic(p) => p.validate(),
            Algorithm::DecisionTree(p) => p.validate(),
            Algorithm::RandomForest(p) => {
                if p.trees == 0 {
                    return bad("tree count must be >= 1");
                }
                if p.features_per_split == Some(0) {
                    return bad("features per split must be >= 1");
                }
                TreeParams { max_depth: p.max_depth, min_leaf: p.min_leaf, features_per_split: None }.validate()
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    OneR(OneRModel),
    NaiveBayes(NaiveBayesModel),
    Logistic(LogisticModel),
    Tree(TreeModel),
    Forest(ForestModel),
}

impl Model {
    pub fn predict(&self, features: &[f64]) -> Label {
        match self {
            Model::OneR(m) => m.predict(features),
            Model::NaiveBayes(m) => m.predict(features),
            Model::Logistic(m) => m.predict(features),
            Model::Tree(m) => m.predict(features),
            Model::Forest(m) => m.predict(features),
        }
    }

    pub fn predict_all(&self, ds: &Dataset) -> Vec<Label> {
        ds.instances.iter().map(|i| self.predict(&i.features)).collect()
    }
}

/// Feature rows and labels borrowed from a dataset.
pub(crate) struct Samples<'a> {
    pub x: Vec<&'a [f64]>,
    pub y: Vec<Label>,
}

impl<'a> Samples<'a> {
    pub fn from_dataset(ds: &'a Dataset) -> Self {
        Samples {
            x: ds.instances.iter().map(|i| i.features.as_slice()).collect(),
            y: ds.instances.iter().map(|i| i.label).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn arity(&self) -> usize {
        self.x.first().map_or(0, |r| r.len())
    }
}

/// Index of the larger count; ties go to `NP`.
pub(crate) fn majority(counts: [usize; 2]) -> Label {
    if counts[Label::P.index()] > counts[Label::NP.index()] {
        Label::P
    } else {
        Label::NP
    }
}

/// Derives an independent per-task seed from a master seed (SplitMix64).
pub fn derive_seed(master: u64, stream: u64) -> u64 {
    let mut z = master ^ stream.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Trains a model on the whole dataset.
pub fn train(spec: &ClassifierSpec, ds: &Dataset) -> Result<Model, LearnError> {
    spec.validate()?;
    if ds.is_empty() {
        return Err(LearnError::EmptyTrainingSet);
    }
    let samples = Samples::from_dataset(ds);
    Ok(match spec.algorithm {
        Algorithm::OneR { min_bucket } => Model::OneR(OneRModel::fit(&samples, min_bucket)),
        Algorithm::NaiveBayes { variance_floor } => Model::NaiveBayes(NaiveBayesModel::fit(&samples, variance_floor)),
        Algorithm::Logistic(params) => Model::Logistic(LogisticModel::fit(&samples, &params)),
        Algorithm::DecisionTree(params) => Model::Tree(TreeModel::fit(&samples, &params, spec.seed)),
        Algorithm::RandomForest(params) => Model::Forest(ForestModel::fit(&samples, &params, spec.seed)),
    })
}

#[cfg(test)]
pub(crate) mod test_data {
    use crate::dataset::Dataset;
    use crate::label::Label;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// LCS-like first feature separates the classes at 90; the rest is noise.
    pub fn threshold_dataset(n: usize, seed: u64) -> Dataset {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ds = Dataset::with_similarity_features();
        for i in 0..n {
            let label = if i % 3 == 0 { Label::P } else { Label::NP };
            let lcs = if label == Label::P { rng.gen_range(90.5..100.0) } else { rng.gen_range(30.0..89.5) };
            let mut f = vec![lcs];
            f.extend((0..6).map(|_| rng.gen_range(0.0..100.0)));
            ds.push(f, label, format!("r{i}"));
        }
        ds
    }
}
