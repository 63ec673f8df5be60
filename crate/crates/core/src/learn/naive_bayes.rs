use super::Samples;
use crate::label::Label;

/// Gaussian class-conditional likelihoods with empirical priors.
#[derive(Debug, Clone, PartialEq)]
pub struct NaiveBayesModel {
    /// Indexed by [`Label::index`].
    pub priors: [f64; 2],
    pub means: [Vec<f64>; 2],
    pub variances: [Vec<f64>; 2],
}

impl NaiveBayesModel {
    pub(crate) fn fit(s: &Samples, variance_floor: f64) -> Self {
        let d = s.arity();
        let mut counts = [0usize; 2];
        let mut means = [vec![0.0; d], vec![0.0; d]];
        let mut variances = [vec![0.0; d], vec![0.0; d]];
        for (x, y) in s.x.iter().zip(&s.y) {
            let c = y.index();
            counts[c] += 1;
            means[c].iter_mut().zip(x.iter()).for_each(|(m, v)| *m += v);
        }
        for c in 0..2 {
            if counts[c] > 0 {
                means[c].iter_mut().for_each(|m| *m /= counts[c] as f64);
            }
        }
        for (x, y) in s.x.iter().zip(&s.y) {
            let c = y.index();
            for f in 0..d {
                variances[c][f] += (x[f] - means[c][f]).powi(2);
            }
        }
        for c in 0..2 {
            let n = counts[c].max(1) as f64;
            variances[c].iter_mut().for_each(|v| *v = (*v / n).max(variance_floor));
        }
        let n = s.len() as f64;
        NaiveBayesModel { priors: [counts[0] as f64 / n, counts[1] as f64 / n], means, variances }
    }

    fn log_joint(&self, x: &[f64]) -> [f64; 2] {
        let mut out = [f64::NEG_INFINITY; 2];
        for (c, slot) in out.iter_mut().enumerate() {
            if self.priors[c] == 0.0 {
                continue;
            }
            let mut lp = self.priors[c].ln();
            for (f, &v) in x.iter().enumerate() {
                let var = self.variances[c][f];
                lp -= 0.5 * ((2.0 * std::f64::consts::PI * var).ln() + (v - self.means[c][f]).powi(2) / var);
            }
            *slot = lp;
        }
        out
    }

    /// Posterior class probabilities, indexed by [`Label::index`]; they sum to 1.
    pub fn posterior(&self, x: &[f64]) -> [f64; 2] {
        let lj = self.log_joint(x);
        let top = lj[0].max(lj[1]);
        let e = [(lj[0] - top).exp(), (lj[1] - top).exp()];
        let z = e[0] + e[1];
        [e[0] / z, e[1] / z]
    }

    pub fn predict(&self, x: &[f64]) -> Label {
        let lj = self.log_joint(x);
        if lj[Label::P.index()] > lj[Label::NP.index()] {
            Label::P
        } else {
            Label::NP
        }
    }
}
