use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Dataset, DatasetError, SYNTHETIC};
use crate::label::Label;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SmoteConfig {
    /// Synthetic rows as a percentage of the minority size.
    pub percent: f64,
    pub k: usize,
    pub seed: u64,
}

impl Default for SmoteConfig {
    fn default() -> Self {
        SmoteConfig { percent: 235.0, k: 5, seed: 42 }
    }
}

/// Parents of one synthetic row: the donor and the neighbor it moved toward,
/// as row indices of the input dataset, plus the interpolation gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SyntheticOrigin {
    pub donor: usize,
    pub neighbor: usize,
    pub gap: f64,
}

/// Appends `round(percent / 100 * minority)` synthetic minority rows.
pub fn smote(ds: &Dataset, cfg: &SmoteConfig) -> Result<Dataset, DatasetError> {
    smote_detailed(ds, cfg).map(|(out, _)| out)
}

/// Like [`smote`], also returning where each synthetic row came from. The
/// synthetic rows are the last `origins.len()` rows of the output.
pub fn smote_detailed(ds: &Dataset, cfg: &SmoteConfig) -> Result<(Dataset, Vec<SyntheticOrigin>), DatasetError> {
    if !(cfg.percent >= 0.0 && cfg.percent.is_finite()) {
        return Err(DatasetError::InvalidConfig("SMOTE percent must be a finite value >= 0".into()));
    }
    if cfg.k == 0 {
        return Err(DatasetError::InvalidConfig("SMOTE k must be >= 1".into()));
    }
    let counts = ds.class_counts();
    let minority_label = if counts[Label::P.index()] <= counts[Label::NP.index()] { Label::P } else { Label::NP };
    let minority: Vec<usize> = (0..ds.len()).filter(|&i| ds.instances[i].label == minority_label).collect();
    let m = minority.len();
    let target = (cfg.percent / 100.0 * m as f64).round() as usize;

    let mut out = ds.clone();
    if target == 0 {
        return Ok((out, Vec::new()));
    }
    if m < 2 || cfg.k >= m {
        return Err(DatasetError::TooFewMinority { needed: (cfg.k + 1).max(2), found: m });
    }

    let neighbors: Vec<Vec<usize>> = minority.iter().map(|&i| nearest(ds, &minority, i, cfg.k)).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut donors: Vec<usize> = Vec::with_capacity(target);
    for _ in 0..target / m {
        donors.extend(0..m);
    }
    let mut rest: Vec<usize> = (0..m).collect();
    rest.shuffle(&mut rng);
    donors.extend(rest.into_iter().take(target % m));

    let mut origins = Vec::with_capacity(target);
    for d in donors {
        let donor = minority[d];
        let neighbor = neighbors[d][rng.gen_range(0..cfg.k)];
        let gap: f64 = rng.gen();
        let x = &ds.instances[donor].features;
        let y = &ds.instances[neighbor].features;
        let features = x.iter().zip(y).map(|(a, b)| a + gap * (b - a)).collect();
        out.push(features, minority_label, SYNTHETIC);
        origins.push(SyntheticOrigin { donor, neighbor, gap });
    }
    Ok((out, origins))
}

/// The `k` nearest other minority rows to `row`, Euclidean, ties by index.
fn nearest(ds: &Dataset, minority: &[usize], row: usize, k: usize) -> Vec<usize> {
    let x = &ds.instances[row].features;
    let mut dists: Vec<(f64, usize)> = minority
        .iter()
        .filter(|&&j| j != row)
        .map(|&j| {
            let d2: f64 = x.iter().zip(&ds.instances[j].features).map(|(a, b)| (a - b) * (a - b)).sum();
            (d2, j)
        })
        .collect();
    dists.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    dists.into_iter().take(k).map(|(_, j)| j).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn imbalanced(minority: usize, majority: usize) -> Dataset {
        let mut ds = Dataset::new(vec!["a".into(), "b".into()]);
        for i in 0..majority {
            ds.push(vec![(i % 50) as f64, 10.0], Label::NP, format!("n{i}"));
        }
        for i in 0..minority {
            ds.push(vec![60.0 + (i % 40) as f64, (i * 7 % 100) as f64], Label::P, format!("p{i}"));
        }
        ds
    }

    #[test]
    fn table_counts() {
        let ds = imbalanced(66, 223);
        let out = smote(&ds, &SmoteConfig { percent: 235.0, k: 5, seed: 1 }).unwrap();
        assert_eq!(out.count(Label::P), 221);
        assert_eq!(out.count(Label::NP), 223);
        assert_eq!(out.len(), 444);
    }

    #[test]
    fn zero_percent_is_identity() {
        let ds = imbalanced(3, 10);
        assert_eq!(smote(&ds, &SmoteConfig { percent: 0.0, k: 5, seed: 1 }).unwrap(), ds);
    }

    #[test]
    fn existing_rows_untouched_and_synthetic_tagged() {
        let ds = imbalanced(20, 50);
        let out = smote(&ds, &SmoteConfig { percent: 150.0, k: 3, seed: 9 }).unwrap();
        assert_eq!(&out.instances[..ds.len()], &ds.instances[..]);
        assert_eq!(out.len(), ds.len() + 30);
        assert!(out.instances[ds.len()..].iter().all(|i| i.provenance == SYNTHETIC && i.label == Label::P));
    }

    #[test]
    fn seeded_runs_are_identical() {
        let ds = imbalanced(12, 40);
        let cfg = SmoteConfig { percent: 235.0, k: 5, seed: 77 };
        assert_eq!(smote(&ds, &cfg).unwrap(), smote(&ds, &cfg).unwrap());
        let other = smote(&ds, &SmoteConfig { seed: 78, ..cfg }).unwrap();
        assert_ne!(smote(&ds, &cfg).unwrap(), other);
    }

    #[test]
    fn too_few_minority() {
        let ds = imbalanced(5, 40);
        assert!(matches!(
            smote(&ds, &SmoteConfig { percent: 100.0, k: 5, seed: 1 }),
            Err(DatasetError::TooFewMinority { found: 5, .. })
        ));
        let ds = imbalanced(1, 40);
        assert!(matches!(
            smote(&ds, &SmoteConfig { percent: 100.0, k: 1, seed: 1 }),
            Err(DatasetError::TooFewMinority { found: 1, .. })
        ));
    }

    #[test]
    fn neighbors_are_minority_only_and_exclude_self() {
        let ds = imbalanced(8, 30);
        let (out, origins) = smote_detailed(&ds, &SmoteConfig { percent: 300.0, k: 4, seed: 3 }).unwrap();
        assert_eq!(origins.len(), 24);
        for o in &origins {
            assert_ne!(o.donor, o.neighbor);
            assert_eq!(ds.instances[o.neighbor].label, Label::P);
            assert!((0.0..=1.0).contains(&o.gap));
        }
        assert_eq!(out.len(), 62);
    }
}
