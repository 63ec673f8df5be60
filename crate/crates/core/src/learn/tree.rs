//! Binary decision tree on numeric features. Thresholds are midpoints between
//! sorted distinct values chosen by information gain; among features whose gain
//! is at least the average positive gain, the one with the best gain ratio wins.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{majority, LearnError, Samples};
use crate::label::Label;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TreeParams {
    pub max_depth: Option<usize>,
    pub min_leaf: usize,
    /// Features drawn at random per split; `None` considers all of them.
    pub features_per_split: Option<usize>,
}

impl Default for TreeParams {
    fn default() -> Self {
        TreeParams { max_depth: None, min_leaf: 2, features_per_split: None }
    }
}

impl TreeParams {
    pub fn validate(&self) -> Result<(), LearnError> {
        if self.min_leaf == 0 {
            return Err(LearnError::InvalidHyperparameters("minimum leaf size must be >= 1".into()));
        }
        if self.features_per_split == Some(0) {
            return Err(LearnError::InvalidHyperparameters("features per split must be >= 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Leaf { label: Label, counts: [usize; 2] },
    /// Rows with `x[feature] <= threshold` go left.
    Split { feature: usize, threshold: f64, left: Box<Node>, right: Box<Node> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct TreeModel {
    pub root: Node,
}

fn entropy(counts: [usize; 2]) -> f64 {
    let n = (counts[0] + counts[1]) as f64;
    counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / n;
            -p * p.log2()
        })
        .sum()
}

struct Candidate {
    feature: usize,
    threshold: f64,
    gain: f64,
    ratio: f64,
}

struct Builder<'a> {
    s: &'a Samples<'a>,
    params: TreeParams,
    rng: ChaCha8Rng,
}

impl Builder<'_> {
    fn counts(&self, rows: &[usize]) -> [usize; 2] {
        let mut c = [0; 2];
        rows.iter().for_each(|&r| c[self.s.y[r].index()] += 1);
        c
    }

    fn best_threshold(&self, rows: &[usize], feature: usize, parent: [usize; 2]) -> Option<Candidate> {
        let mut sorted = rows.to_vec();
        sorted.sort_by(|&a, &b| self.s.x[a][feature].total_cmp(&self.s.x[b][feature]).then(a.cmp(&b)));
        let n = sorted.len();
        let base = entropy(parent);
        let min_leaf = self.params.min_leaf;
        let mut left = [0usize; 2];
        let mut best: Option<Candidate> = None;
        for i in 0..n - 1 {
            left[self.s.y[sorted[i]].index()] += 1;
            let (v, next) = (self.s.x[sorted[i]][feature], self.s.x[sorted[i + 1]][feature]);
            if v == next || i + 1 < min_leaf || n - i - 1 < min_leaf {
                continue;
            }
            let right = [parent[0] - left[0], parent[1] - left[1]];
            let (nl, nr) = ((i + 1) as f64, (n - i - 1) as f64);
            let gain = base - (nl * entropy(left) + nr * entropy(right)) / n as f64;
            if best.as_ref().is_none_or(|b| gain > b.gain + 1e-12) {
                let split_info = entropy([i + 1, n - i - 1]);
                best = Some(Candidate { feature, threshold: (v + next) / 2.0, gain, ratio: gain / split_info });
            }
        }
        best
    }

    fn features(&mut self) -> Vec<usize> {
        let d = self.s.arity();
        match self.params.features_per_split {
            Some(m) if m < d => {
                let mut f = sample(&mut self.rng, d, m).into_vec();
                f.sort_unstable();
                f
            }
            _ => (0..d).collect(),
        }
    }

    fn build(&mut self, rows: &[usize], depth: usize) -> Node {
        let counts = self.counts(rows);
        let leaf = Node::Leaf { label: majority(counts), counts };
        if counts[0] == 0 || counts[1] == 0 || rows.len() < 2 * self.params.min_leaf {
            return leaf;
        }
        if self.params.max_depth.is_some_and(|d| depth >= d) {
            return leaf;
        }
        let candidates: Vec<Candidate> = self
            .features()
            .into_iter()
            .filter_map(|f| self.best_threshold(rows, f, counts))
            .filter(|c| c.gain > 1e-12)
            .collect();
        if candidates.is_empty() {
            return leaf;
        }
        let average = candidates.iter().map(|c| c.gain).sum::<f64>() / candidates.len() as f64;
        let mut chosen: Option<&Candidate> = None;
        for c in candidates.iter().filter(|c| c.gain >= average - 1e-12) {
            if chosen.is_none_or(|b| c.ratio > b.ratio + 1e-12) {
                chosen = Some(c);
            }
        }
        let chosen = chosen.expect("some candidate reaches the average gain");
        let (feature, threshold) = (chosen.feature, chosen.threshold);
        let (l, r): (Vec<usize>, Vec<usize>) = rows.iter().partition(|&&i| self.s.x[i][feature] <= threshold);
        let left = Box::new(self.build(&l, depth + 1));
        let right = Box::new(self.build(&r, depth + 1));
        Node::Split { feature, threshold, left, right }
    }
}

impl TreeModel {
    pub(crate) fn fit(s: &Samples, params: &TreeParams, seed: u64) -> Self {
        let rows: Vec<usize> = (0..s.len()).collect();
        Self::fit_rows(s, &rows, params, seed)
    }

    /// Fits on the given rows of `s`; repeated rows act as weights.
    pub(crate) fn fit_rows(s: &Samples, rows: &[usize], params: &TreeParams, seed: u64) -> Self {
        let mut builder = Builder { s, params: *params, rng: ChaCha8Rng::seed_from_u64(seed) };
        TreeModel { root: builder.build(rows, 0) }
    }

    pub fn predict(&self, x: &[f64]) -> Label {
        let mut node = &self.root;
        loop {
            match node {
                Node::Leaf { label, .. } => return *label,
                Node::Split { feature, threshold, left, right } => {
                    node = if x[*feature] <= *threshold { left } else { right };
                }
            }
        }
    }

    pub fn depth(&self) -> usize {
        fn walk(n: &Node) -> usize {
            match n {
                Node::Leaf { .. } => 0,
                Node::Split { left, right, .. } => 1 + walk(left).max(walk(right)),
            }
        }
        walk(&self.root)
    }
}
