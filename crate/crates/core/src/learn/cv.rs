use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{derive_seed, train, ClassifierSpec, ConfusionCounts, EvaluationReport, LearnError};
use crate::dataset::Dataset;
use crate::label::Label;

/// Row indices of each fold. Each class is shuffled and dealt round-robin,
/// continuing where the previous class stopped so fold sizes stay balanced.
pub fn stratified_folds(labels: &[Label], folds: usize, seed: u64) -> Result<Vec<Vec<usize>>, LearnError> {
    if folds < 2 {
        return Err(LearnError::StratificationError(format!("need at least 2 folds, got {folds}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![Vec::new(); folds];
    let mut next = 0;
    for class in Label::ALL {
        let mut rows: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] == class).collect();
        if rows.len() < folds {
            return Err(LearnError::StratificationError(format!(
                "class {class} has {} instances, fewer than {folds} folds",
                rows.len()
            )));
        }
        rows.shuffle(&mut rng);
        for r in rows {
            out[next % folds].push(r);
            next += 1;
        }
    }
    out.iter_mut().for_each(|f| f.sort_unstable());
    Ok(out)
}

/// Stratified k-fold cross-validation; every row is predicted once by a model
/// trained on the remaining folds.
pub fn cross_validate(spec: &ClassifierSpec, ds: &Dataset, folds: usize, seed: u64) -> Result<EvaluationReport, LearnError> {
    spec.validate()?;
    let labels = ds.labels();
    let assignment = stratified_folds(&labels, folds, seed)?;
    let per_fold: Vec<(Vec<usize>, Vec<Label>)> = assignment
        .par_iter()
        .enumerate()
        .map(|(f, test)| {
            let mut in_test = vec![false; ds.len()];
            test.iter().for_each(|&i| in_test[i] = true);
            let train_rows: Vec<usize> = (0..ds.len()).filter(|&i| !in_test[i]).collect();
            let fold_spec = spec.with_seed(derive_seed(spec.seed, f as u64));
            let model = train(&fold_spec, &ds.subset(&train_rows))?;
            let predicted = test.iter().map(|&i| model.predict(&ds.instances[i].features)).collect();
            Ok((test.clone(), predicted))
        })
        .collect::<Result<_, LearnError>>()?;

    let mut pooled = ConfusionCounts::default();
    let mut fold_counts = Vec::with_capacity(folds);
    for (test, predicted) in &per_fold {
        let truth: Vec<Label> = test.iter().map(|&i| labels[i]).collect();
        let c = ConfusionCounts::tally(&truth, predicted, Label::P);
        pooled.tp += c.tp;
        pooled.fp += c.fp;
        pooled.fn_ += c.fn_;
        pooled.tn += c.tn;
        fold_counts.push(c);
    }
    Ok(EvaluationReport::from_counts(spec.kind().name(), folds, seed, pooled, fold_counts))
}
