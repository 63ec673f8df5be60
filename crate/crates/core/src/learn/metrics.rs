use serde::{Deserialize, Serialize};

use crate::label::Label;

/// Counts with one class treated as positive.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfusionCounts {
    pub tp: usize,
    pub fp: usize,
    #[serde(rename = "fn")]
    pub fn_: usize,
    pub tn: usize,
}

fn ratio(num: usize, den: usize) -> f64 {
    if den == 0 {
        0.0
    } else {
        num as f64 / den as f64
    }
}

impl ConfusionCounts {
    /// Counts for `positive` from parallel truth/prediction vectors.
    pub fn tally(truth: &[Label], predicted: &[Label], positive: Label) -> Self {
        let mut c = ConfusionCounts::default();
        for (&t, &p) in truth.iter().zip(predicted) {
            match (t == positive, p == positive) {
                (true, true) => c.tp += 1,
                (false, true) => c.fp += 1,
                (true, false) => c.fn_ += 1,
                (false, false) => c.tn += 1,
            }
        }
        c
    }

    /// The same counts with the other class as positive.
    pub fn flipped(self) -> Self {
        ConfusionCounts { tp: self.tn, fp: self.fn_, fn_: self.fp, tn: self.tp }
    }

    pub fn total(&self) -> usize {
        self.tp + self.fp + self.fn_ + self.tn
    }

    pub fn precision(&self) -> f64 {
        ratio(self.tp, self.tp + self.fp)
    }

    pub fn recall(&self) -> f64 {
        ratio(self.tp, self.tp + self.fn_)
    }

    pub fn f1(&self) -> f64 {
        let (p, r) = (self.precision(), self.recall());
        if p + r == 0.0 {
            0.0
        } else {
            2.0 * p * r / (p + r)
        }
    }

    pub fn accuracy(&self) -> f64 {
        ratio(self.tp + self.tn, self.total())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassMetrics {
    pub label: Label,
    pub support: usize,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeightedMetrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub classifier: String,
    pub folds: usize,
    pub seed: u64,
    pub instances: usize,
    /// Pooled over folds, `P` positive.
    pub confusion: ConfusionCounts,
    pub accuracy: f64,
    pub per_class: Vec<ClassMetrics>,
    pub weighted: WeightedMetrics,
    /// Per-fold counts, `P` positive.
    pub per_fold: Vec<ConfusionCounts>,
}

impl EvaluationReport {
    pub fn from_counts(
        classifier: &str,
        folds: usize,
        seed: u64,
        confusion: ConfusionCounts,
        per_fold: Vec<ConfusionCounts>,
    ) -> Self {
        let per_class: Vec<ClassMetrics> = Label::ALL
            .iter()
            .map(|&label| {
                let c = if label == Label::P { confusion } else { confusion.flipped() };
                ClassMetrics {
                    label,
                    support: c.tp + c.fn_,
                    precision: c.precision(),
                    recall: c.recall(),
                    f1: c.f1(),
                }
            })
            .collect();
        let weighted = weighted_average(&per_class);
        EvaluationReport {
            classifier: classifier.to_string(),
            folds,
            seed,
            instances: confusion.total(),
            confusion,
            accuracy: confusion.accuracy(),
            per_class,
            weighted,
            per_fold,
        }
    }

    /// One row: classifier name, weighted P, R, F1 to three decimals.
    pub fn table_row(&self) -> String {
        format!(
            "{:<14} {:>6.3} {:>6.3} {:>6.3}",
            self.classifier, self.weighted.precision, self.weighted.recall, self.weighted.f1
        )
    }

    pub fn table_header() -> String {
        format!("{:<14} {:>6} {:>6} {:>6}", "Classifier", "P", "R", "F1")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{}\n{}\n\n", Self::table_header(), self.table_row()));
        out.push_str(&format!("{:<6} {:>7} {:>6} {:>6} {:>6}\n", "class", "support", "P", "R", "F1"));
        for m in &self.per_class {
            out.push_str(&format!(
                "{:<6} {:>7} {:>6.3} {:>6.3} {:>6.3}\n",
                m.label.as_str(),
                m.support,
                m.precision,
                m.recall,
                m.f1
            ));
        }
        let c = self.confusion;
        out.push_str(&format!("\ntp={} fp={} fn={} tn={} accuracy={:.3}\n", c.tp, c.fp, c.fn_, c.tn, self.accuracy));
        out
    }
}

/// Support-weighted mean of the per-class metrics.
pub fn weighted_average(per_class: &[ClassMetrics]) -> WeightedMetrics {
    let total: usize = per_class.iter().map(|m| m.support).sum();
    if total == 0 {
        return WeightedMetrics { precision: 0.0, recall: 0.0, f1: 0.0 };
    }
    let avg = |f: fn(&ClassMetrics) -> f64| per_class.iter().map(|m| m.support as f64 * f(m)).sum::<f64>() / total as f64;
    WeightedMetrics { precision: avg(|m| m.precision), recall: avg(|m| m.recall), f1: avg(|m| m.f1) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_thirds() {
        let c = ConfusionCounts { tp: 2, fp: 1, fn_: 1, tn: 0 };
        for v in [c.precision(), c.recall(), c.f1()] {
            assert!((v - 2.0 / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn empty_denominators_are_zero() {
        let c = ConfusionCounts { tp: 0, fp: 0, fn_: 0, tn: 5 };
        assert_eq!((c.precision(), c.recall(), c.f1()), (0.0, 0.0, 0.0));
    }

    #[test]
    fn tally_and_flip() {
        let truth = [Label::P, Label::P, Label::NP, Label::NP];
        let pred = [Label::P, Label::NP, Label::P, Label::NP];
        let c = ConfusionCounts::tally(&truth, &pred, Label::P);
        assert_eq!(c, ConfusionCounts { tp: 1, fp: 1, fn_: 1, tn: 1 });
        assert_eq!(c.flipped(), ConfusionCounts::tally(&truth, &pred, Label::NP));
    }

    #[test]
    fn json_uses_fn_key() {
        let json = serde_json::to_string(&ConfusionCounts { tp: 1, fp: 2, fn_: 3, tn: 4 }).unwrap();
        assert_eq!(json, r#"{"tp":1,"fp":2,"fn":3,"tn":4}"#);
    }

    #[test]
    fn weighted_metrics_of_a_perfect_classifier() {
        let r = EvaluationReport::from_counts("x", 2, 0, ConfusionCounts { tp: 3, fp: 0, fn_: 0, tn: 7 }, vec![]);
        assert_eq!(r.weighted, WeightedMetrics { precision: 1.0, recall: 1.0, f1: 1.0 });
        assert_eq!(r.per_class[0].support, 7);
        assert!(r.to_text().contains("Classifier"));
    }
}
