//! Feature rows built from labeled solution pairs, their file formats, and
//! SMOTE oversampling.

mod smote;

use std::io::{Read, Write};

use rayon::prelude::*;
use thiserror::Error;

use crate::corpus::{generate_pairs, Corpus, LabeledPair, PairPolicy};
use crate::label::Label;
use crate::similarity::{similarity_vector, SimilarityConfig, SimilarityError, SimilarityVector, FEATURE_NAMES};

pub use smote::{smote, smote_detailed, SmoteConfig, SyntheticOrigin};

pub const SYNTHETIC: &str = "synthetic";

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("corpus has no solutions")]
    EmptyCorpus,
    #[error("pair {pair}: {source}")]
    Similarity { pair: String, source: SimilarityError },
    #[error("SMOTE needs at least {needed} minority instances, found {found}")]
    TooFewMinority { needed: usize, found: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("malformed dataset file, record {record}: {message}")]
    Format { record: usize, message: String },
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledInstance {
    pub features: Vec<f64>,
    pub label: Label,
    /// Pair identifier, `synthetic`, or `row:<n>` for rows read from a file.
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub feature_names: Vec<String>,
    pub instances: Vec<LabeledInstance>,
}

impl Dataset {
    pub fn new(feature_names: Vec<String>) -> Self {
        Dataset { feature_names, instances: Vec::new() }
    }

    /// Empty dataset with the seven canonical similarity features.
    pub fn with_similarity_features() -> Self {
        Dataset::new(FEATURE_NAMES.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.feature_names.len()
    }

    /// Instance counts indexed by [`Label::index`].
    pub fn class_counts(&self) -> [usize; 2] {
        let mut counts = [0; 2];
        for inst in &self.instances {
            counts[inst.label.index()] += 1;
        }
        counts
    }

    pub fn count(&self, label: Label) -> usize {
        self.class_counts()[label.index()]
    }

    pub fn push(&mut self, features: Vec<f64>, label: Label, provenance: impl Into<String>) {
        assert_eq!(features.len(), self.arity(), "feature arity mismatch");
        self.instances.push(LabeledInstance { features, label, provenance: provenance.into() });
    }

    pub fn labels(&self) -> Vec<Label> {
        self.instances.iter().map(|i| i.label).collect()
    }

    /// Sub-dataset with the given rows, in the given order.
    pub fn subset(&self, rows: &[usize]) -> Dataset {
        Dataset {
            feature_names: self.feature_names.clone(),
            instances: rows.iter().map(|&r| self.instances[r].clone()).collect(),
        }
    }

    pub fn column(&self, feature: usize) -> Vec<f64> {
        self.instances.iter().map(|i| i.features[feature]).collect()
    }

    /// Checks uniform arity and finite feature values.
    pub fn validate(&self) -> Result<(), DatasetError> {
        for (i, inst) in self.instances.iter().enumerate() {
            if inst.features.len() != self.arity() {
                return Err(DatasetError::Format { record: i + 1, message: "feature arity mismatch".into() });
            }
            if inst.features.iter().any(|v| !v.is_finite()) {
                return Err(DatasetError::Format { record: i + 1, message: "non-finite feature".into() });
            }
        }
        Ok(())
    }

    /// CSV with header `<features>,label`. `metadata` lines are written first
    /// as `# key: value` comments.
    pub fn write_csv<W: Write>(&self, writer: W, metadata: &[(&str, String)]) -> Result<(), DatasetError> {
        let mut writer = writer;
        for (key, value) in metadata {
            writeln!(writer, "# {key}: {value}")?;
        }
        let mut csv = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(writer);
        let mut header: Vec<&str> = self.feature_names.iter().map(String::as_str).collect();
        header.push("label");
        csv.write_record(&header)?;
        for inst in &self.instances {
            let mut record: Vec<String> = inst.features.iter().map(|v| v.to_string()).collect();
            record.push(inst.label.to_string());
            csv.write_record(&record)?;
        }
        csv.flush()?;
        Ok(())
    }

    /// Reads a file produced by [`Dataset::write_csv`]; `#` lines are skipped.
    pub fn read_csv<R: Read>(reader: R) -> Result<Dataset, DatasetError> {
        let mut csv = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(reader);
        let header = csv.headers()?.clone();
        let Some((last, names)) = header.iter().collect::<Vec<_>>().split_last().map(|(l, n)| (*l, n.to_vec())) else {
            return Err(DatasetError::Format { record: 0, message: "missing header".into() });
        };
        if last != "label" {
            return Err(DatasetError::Format { record: 0, message: "last column must be `label`".into() });
        }
        let mut ds = Dataset::new(names.iter().map(|s| s.to_string()).collect());
        for (i, record) in csv.records().enumerate() {
            let record = record?;
            let bad = |message: String| DatasetError::Format { record: i + 1, message };
            if record.len() != ds.arity() + 1 {
                return Err(bad(format!("expected {} fields, found {}", ds.arity() + 1, record.len())));
            }
            let features = record
                .iter()
                .take(ds.arity())
                .map(|f| f.trim().parse::<f64>().map_err(|e| bad(format!("{f:?}: {e}"))))
                .collect::<Result<Vec<f64>, _>>()?;
            let label = record[ds.arity()].parse::<Label>().map_err(|e| bad(e.to_string()))?;
            ds.push(features, label, format!("row:{}", i + 1));
        }
        ds.validate()?;
        Ok(ds)
    }

    /// Attribute-relation text format: `%` comment lines, `@relation`,
    /// one `@attribute <name> numeric` per feature, a nominal `class`
    /// attribute `{NP,P}`, then `@data` rows.
    pub fn write_arff<W: Write>(&self, mut w: W, relation: &str, metadata: &[(&str, String)]) -> std::io::Result<()> {
        for (key, value) in metadata {
            writeln!(w, "% {key}: {value}")?;
        }
        writeln!(w, "@relation {relation}")?;
        writeln!(w)?;
        for name in &self.feature_names {
            writeln!(w, "@attribute {name} numeric")?;
        }
        writeln!(w, "@attribute class {{NP,P}}")?;
        writeln!(w)?;
        writeln!(w, "@data")?;
        for inst in &self.instances {
            for v in &inst.features {
                write!(w, "{v},")?;
            }
            writeln!(w, "{}", inst.label)?;
        }
        Ok(())
    }
}

/// Similarity vectors for every generated pair, in pair-generation order.
pub fn pair_vectors(
    corpus: &Corpus,
    policy: PairPolicy,
    cfg: &SimilarityConfig,
) -> Result<Vec<(LabeledPair, SimilarityVector)>, DatasetError> {
    cfg.validate().map_err(|e| DatasetError::InvalidConfig(e.to_string()))?;
    let pairs = generate_pairs(corpus, policy);
    pairs
        .into_par_iter()
        .map(|pair| {
            let stream_of = |name: &str| &corpus.find(name).expect("pair member missing from corpus").stream;
            let v = similarity_vector(stream_of(&pair.left.name), stream_of(&pair.right.name), cfg)
                .map_err(|source| DatasetError::Similarity { pair: pair.id(), source })?;
            Ok((pair, v))
        })
        .collect()
}

/// One instance per generated pair, sorted by pair identifier.
pub fn build_dataset(corpus: &Corpus, policy: PairPolicy, cfg: &SimilarityConfig) -> Result<Dataset, DatasetError> {
    if corpus.is_empty() {
        return Err(DatasetError::EmptyCorpus);
    }
    let mut rows = pair_vectors(corpus, policy, cfg)?;
    rows.sort_by_cached_key(|(pair, _)| pair.id());
    let mut ds = Dataset::with_similarity_features();
    for (pair, v) in rows {
        ds.push(v.scores().to_vec(), pair.label, pair.id());
    }
    Ok(ds)
}
