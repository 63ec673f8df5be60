use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{derive_seed, ForestParams, Samples, TreeModel, TreeParams};
use crate::label::Label;

/// Bagged randomized trees combined by majority vote.
#[derive(Debug, Clone, PartialEq)]
pub struct ForestModel {
    pub trees: Vec<TreeModel>,
}

impl ForestModel {
    pub(crate) fn fit(s: &Samples, p: &ForestParams, seed: u64) -> Self {
        let d = s.arity();
        let mtry = p.features_per_split.unwrap_or_else(|| (d as f64).sqrt().ceil() as usize).max(1);
        let tree_params = TreeParams { max_depth: p.max_depth, min_leaf: p.min_leaf, features_per_split: Some(mtry) };
        let n = s.len();
        let trees = (0..p.trees)
            .into_par_iter()
            .map(|t| {
                let tree_seed = derive_seed(seed, t as u64);
                let rows: Vec<usize> = if p.bootstrap {
                    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(tree_seed, u64::MAX));
                    (0..n).map(|_| rng.gen_range(0..n)).collect()
                } else {
                    (0..n).collect()
                };
                TreeModel::fit_rows(s, &rows, &tree_params, tree_seed)
            })
            .collect();
        ForestModel { trees }
    }

    pub fn votes(&self, x: &[f64]) -> [usize; 2] {
        let mut v = [0; 2];
        self.trees.iter().for_each(|t| v[t.predict(x).index()] += 1);
        v
    }

    pub fn predict(&self, x: &[f64]) -> Label {
        super::majority(self.votes(x))
    }
}
