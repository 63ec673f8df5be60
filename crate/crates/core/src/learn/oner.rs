use super::{majority, Samples};
use crate::label::Label;

/// Single-feature rule: sorted thresholds on one feature, one label per
/// interval. Value `v` falls in the first interval whose upper bound is >= `v`.
#[derive(Debug, Clone, PartialEq)]
pub struct OneRModel {
    pub feature: usize,
    pub uppers: Vec<f64>,
    pub labels: Vec<Label>,
}

struct Bucket {
    upper: f64,
    counts: [usize; 2],
}

fn rule_for(values: &[f64], y: &[Label], min_bucket: usize) -> (Vec<Bucket>, usize) {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));
    let mut buckets: Vec<Bucket> = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let mut counts = [0usize; 2];
        loop {
            counts[y[order[i]].index()] += 1;
            i += 1;
            if i >= order.len() {
                break;
            }
            let maj = majority(counts);
            let (prev, next) = (values[order[i - 1]], values[order[i]]);
            if counts[maj.index()] >= min_bucket && next != prev && y[order[i]] != maj {
                break;
            }
        }
        let upper = if i < order.len() { (values[order[i - 1]] + values[order[i]]) / 2.0 } else { f64::INFINITY };
        match buckets.last_mut() {
            Some(last) if majority(last.counts) == majority(counts) => {
                last.upper = upper;
                last.counts[0] += counts[0];
                last.counts[1] += counts[1];
            }
            _ => buckets.push(Bucket { upper, counts }),
        }
    }
    let correct = buckets.iter().map(|b| b.counts[majority(b.counts).index()]).sum();
    (buckets, correct)
}

impl OneRModel {
    pub(crate) fn fit(s: &Samples, min_bucket: usize) -> Self {
        let mut best: Option<(usize, Vec<Bucket>, usize)> = None;
        for f in 0..s.arity() {
            let values: Vec<f64> = s.x.iter().map(|r| r[f]).collect();
            let (buckets, correct) = rule_for(&values, &s.y, min_bucket);
            if best.as_ref().is_none_or(|b| correct > b.2) {
                best = Some((f, buckets, correct));
            }
        }
        match best {
            Some((feature, buckets, _)) => OneRModel {
                feature,
                uppers: buckets.iter().map(|b| b.upper).collect(),
                labels: buckets.iter().map(|b| majority(b.counts)).collect(),
            },
            None => {
                let mut counts = [0; 2];
                s.y.iter().for_each(|l| counts[l.index()] += 1);
                OneRModel { feature: 0, uppers: vec![f64::INFINITY], labels: vec![majority(counts)] }
            }
        }
    }

    pub fn predict(&self, x: &[f64]) -> Label {
        let Some(&v) = x.get(self.feature) else { return self.labels[0] };
        let k = self.uppers.iter().position(|&u| v <= u).unwrap_or(self.labels.len() - 1);
        self.labels[k]
    }
}
