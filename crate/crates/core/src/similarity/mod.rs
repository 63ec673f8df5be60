//! The seven token-stream similarity measures: LCS, n-gram overlap and
//! Greedy String Tiling.
//!
//! All scores are percentages in `[0, 100]`. Under the default
//! [`Normalization::SourceNormalized`] the first stream is the source
//! solution and its size is the denominator, so scores are directional.

mod gst;
mod lcs;
mod ngram;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::frontend::{Atom, TokenStream};

pub use gst::{gst_coverage, gst_similarity, greedy_tiles, Tile};
pub use lcs::{lcs_length, lcs_similarity};
pub use ngram::{ngram_overlap, shared_ngrams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimilarityError {
    #[error("similarity undefined: token stream too short")]
    EmptyStream,
    #[error("invalid similarity configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Normalization {
    /// Denominator is the size of the source (first) stream.
    #[default]
    SourceNormalized,
    /// Denominator is the mean size of both streams.
    Symmetric,
}

impl Normalization {
    pub(crate) fn denominator(self, source: usize, other: usize) -> f64 {
        match self {
            Normalization::SourceNormalized => source as f64,
            Normalization::Symmetric => (source + other) as f64 / 2.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimilarityConfig {
    pub ngram_orders: [usize; 3],
    pub gst_min_match_lengths: [usize; 3],
    pub normalization: Normalization,
}

impl Default for SimilarityConfig {
    fn default() -> Self {
        SimilarityConfig {
            ngram_orders: [1, 2, 3],
            gst_min_match_lengths: [1, 2, 3],
            normalization: Normalization::SourceNormalized,
        }
    }
}

impl SimilarityConfig {
    pub fn validate(&self) -> Result<(), SimilarityError> {
        if self.ngram_orders.contains(&0) {
            return Err(SimilarityError::InvalidConfig("n-gram order must be >= 1".into()));
        }
        if self.gst_min_match_lengths.contains(&0) {
            return Err(SimilarityError::InvalidConfig("minimum match length must be >= 1".into()));
        }
        Ok(())
    }
}

pub const FEATURE_NAMES: [&str; 7] = ["LCS", "N1", "N2", "N3", "GST1", "GST2", "GST3"];

/// The seven scores for one ordered solution pair, plus their mean and
/// sample standard deviation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimilarityVector {
    pub lcs: f64,
    pub n1: f64,
    pub n2: f64,
    pub n3: f64,
    pub gst1: f64,
    pub gst2: f64,
    pub gst3: f64,
    pub avg: f64,
    pub stdv: f64,
}

impl SimilarityVector {
    pub fn from_scores(scores: [f64; 7]) -> Self {
        let (avg, stdv) = mean_and_sample_stdev(&scores);
        let [lcs, n1, n2, n3, gst1, gst2, gst3] = scores;
        SimilarityVector { lcs, n1, n2, n3, gst1, gst2, gst3, avg, stdv }
    }

    /// Scores in canonical feature order (`FEATURE_NAMES`).
    pub fn scores(&self) -> [f64; 7] {
        [self.lcs, self.n1, self.n2, self.n3, self.gst1, self.gst2, self.gst3]
    }
}

pub(crate) fn mean_and_sample_stdev(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
    (mean, (ss / (n - 1.0)).sqrt())
}

/// Maps atoms of both streams to dense integer ids so the matchers work on
/// `u32` slices.
pub(crate) fn intern(a: &TokenStream, b: &TokenStream) -> (Vec<u32>, Vec<u32>) {
    use std::collections::HashMap;
    let mut ids: HashMap<&Atom, u32> = HashMap::new();
    let mut encoded = [Vec::with_capacity(a.len()), Vec::with_capacity(b.len())];
    for (out, stream) in encoded.iter_mut().zip([a, b]) {
        for atom in stream.atoms() {
            let next = ids.len() as u32;
            out.push(*ids.entry(atom).or_insert(next));
        }
    }
    let [ia, ib] = encoded;
    (ia, ib)
}

/// Computes all seven scores with `a` as the source solution.
pub fn similarity_vector(
    a: &TokenStream,
    b: &TokenStream,
    cfg: &SimilarityConfig,
) -> Result<SimilarityVector, SimilarityError> {
    cfg.validate()?;
    if a.is_empty() || b.is_empty() {
        return Err(SimilarityError::EmptyStream);
    }
    let (ia, ib) = intern(a, b);
    let norm = cfg.normalization;
    let lcs = lcs::score(&ia, &ib, norm)?;
    let [n1, n2, n3] = [0, 1, 2].map(|i| ngram::score(&ia, &ib, cfg.ngram_orders[i], norm));
    let [g1, g2, g3] = [0, 1, 2].map(|i| gst::score(&ia, &ib, cfg.gst_min_match_lengths[i], norm));
    Ok(SimilarityVector::from_scores([lcs, n1?, n2?, n3?, g1?, g2?, g3?]))
}


#[cfg(test)]
mod tests {
    use super::test_util::stream;
    use super::*;

    #[test]
    fn identical_streams_score_100_everywhere() {
        let a = stream("abcabdxyz");
        let v = similarity_vector(&a, &a, &SimilarityConfig::default()).unwrap();
        assert_eq!(v.scores(), [100.0; 7]);
        assert_eq!(v.avg, 100.0);
        assert_eq!(v.stdv, 0.0);
    }

    #[test]
    fn avg_and_stdv_follow_the_scores() {
        let v = SimilarityVector::from_scores([79.0, 81.5, 76.0, 65.8, 80.5, 79.6, 78.7]);
        assert!((v.avg - 77.3).abs() < 1e-9);
        assert!((v.stdv - 5.353503525729).abs() < 1e-9);
    }

    #[test]
    fn empty_stream_is_rejected() {
        let cfg = SimilarityConfig::default();
        assert_eq!(
            similarity_vector(&stream(""), &stream("ab"), &cfg),
            Err(SimilarityError::EmptyStream)
        );
        assert_eq!(
            similarity_vector(&stream("ab"), &stream(""), &cfg),
            Err(SimilarityError::EmptyStream)
        );
    }

    #[test]
    fn short_streams_propagate_ngram_error() {
        // both below n = 3: trigram score undefined
        let cfg = SimilarityConfig::default();
        assert_eq!(
            similarity_vector(&stream("ab"), &stream("ab"), &cfg),
            Err(SimilarityError::EmptyStream)
        );
    }

    #[test]
    fn zero_order_is_invalid() {
        let cfg = SimilarityConfig { ngram_orders: [0, 2, 3], ..Default::default() };
        assert!(matches!(
            similarity_vector(&stream("ab"), &stream("ab"), &cfg),
            Err(SimilarityError::InvalidConfig(_))
        ));
    }
}
