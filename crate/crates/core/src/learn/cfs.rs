//! Correlation-based feature subset selection with best-first forward search.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::{stratified_folds, LearnError};
use crate::dataset::Dataset;
use crate::label::Label;

const STALE_LIMIT: usize = 5;

/// Pearson correlation; zero when either side is constant.
pub fn pearson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let (mx, my) = (x.iter().sum::<f64>() / n, y.iter().sum::<f64>() / n);
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    if sxx <= 0.0 || syy <= 0.0 {
        0.0
    } else {
        sxy / (sxx * syy).sqrt()
    }
}

/// `sum(r_cf) / sqrt(k + 2 * sum_{i<j} r_ff)` on absolute correlations.
pub fn merit(subset: &[usize], class_corr: &[f64], feature_corr: &[Vec<f64>]) -> f64 {
    if subset.is_empty() {
        return 0.0;
    }
    let num: f64 = subset.iter().map(|&f| class_corr[f]).sum();
    let mut den = subset.len() as f64;
    for (i, &a) in subset.iter().enumerate() {
        for &b in &subset[i + 1..] {
            den += 2.0 * feature_corr[a][b];
        }
    }
    if den <= 0.0 {
        0.0
    } else {
        num / den.sqrt()
    }
}

/// Selected feature indices (ascending) for the given columns and labels.
pub fn cfs_select(columns: &[Vec<f64>], labels: &[Label]) -> Vec<usize> {
    let d = columns.len();
    let y: Vec<f64> = labels.iter().map(|l| l.indicator()).collect();
    let class_corr: Vec<f64> = columns.iter().map(|c| pearson(c, &y).abs()).collect();
    let feature_corr: Vec<Vec<f64>> =
        (0..d).map(|i| (0..d).map(|j| if i == j { 1.0 } else { pearson(&columns[i], &columns[j]).abs() }).collect()).collect();

    let mut best: (f64, Vec<usize>) = (0.0, Vec::new());
    let mut open: Vec<(f64, Vec<usize>)> = vec![(0.0, Vec::new())];
    let mut seen: HashSet<Vec<usize>> = HashSet::from([Vec::new()]);
    let mut stale = 0;
    while stale < STALE_LIMIT {
        // highest merit first; ties to the lexicographically smaller subset
        let Some(pos) = (0..open.len()).max_by(|&a, &b| {
            open[a].0.total_cmp(&open[b].0).then_with(|| open[b].1.cmp(&open[a].1))
        }) else {
            break;
        };
        let (_, subset) = open.swap_remove(pos);
        let mut improved = false;
        for f in 0..d {
            if subset.contains(&f) {
                continue;
            }
            let child: Vec<usize> = subset.iter().copied().chain([f]).collect::<BTreeSet<_>>().into_iter().collect();
            if !seen.insert(child.clone()) {
                continue;
            }
            let m = merit(&child, &class_corr, &feature_corr);
            if m > best.0 + 1e-12 {
                best = (m, child.clone());
                improved = true;
            }
            open.push((m, child));
        }
        stale = if improved { 0 } else { stale + 1 };
    }
    best.1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankedFeature {
    pub feature: String,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeatureRank {
    pub folds: usize,
    pub seed: u64,
    /// In dataset column order.
    pub ranks: Vec<RankedFeature>,
}

impl FeatureRank {
    pub fn rank_of(&self, feature: &str) -> Option<usize> {
        self.ranks.iter().find(|r| r.feature == feature).map(|r| r.rank)
    }

    /// Two columns, highest rank first, column order breaking ties.
    pub fn to_text(&self) -> String {
        let mut rows: Vec<&RankedFeature> = self.ranks.iter().collect();
        rows.sort_by_key(|r| std::cmp::Reverse(r.rank));
        let mut out = format!("{:<8} {:>4}\n", "Feature", "Rank");
        for r in rows {
            out.push_str(&format!("{:<8} {:>4}\n", r.feature, r.rank));
        }
        out
    }
}

/// Runs selection on the training portion of each stratified fold; a feature's
/// rank is the number of folds whose subset contains it.
pub fn rank_features(ds: &Dataset, folds: usize, seed: u64) -> Result<FeatureRank, LearnError> {
    let labels = ds.labels();
    let assignment = stratified_folds(&labels, folds, seed)?;
    let mut counts = vec![0usize; ds.arity()];
    for test in &assignment {
        let mut in_test = vec![false; ds.len()];
        test.iter().for_each(|&i| in_test[i] = true);
        let rows: Vec<usize> = (0..ds.len()).filter(|&i| !in_test[i]).collect();
        let train = ds.subset(&rows);
        let columns: Vec<Vec<f64>> = (0..ds.arity()).map(|f| train.column(f)).collect();
        for f in cfs_select(&columns, &train.labels()) {
            counts[f] += 1;
        }
    }
    let ranks = ds.feature_names.iter().zip(counts).map(|(n, rank)| RankedFeature { feature: n.clone(), rank }).collect();
    Ok(FeatureRank { folds, seed, ranks })
}
