//! L2-regularized logistic regression fit by batch gradient descent on
//! standardized features.

use serde::{Deserialize, Serialize};

use super::{LearnError, Samples};
use crate::label::Label;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogisticParams {
    pub lambda: f64,
    pub learning_rate: f64,
    pub max_iter: usize,
    /// Stop once the largest gradient component falls below this.
    pub tol: f64,
}

impl Default for LogisticParams {
    fn default() -> Self {
        LogisticParams { lambda: 1e-8, learning_rate: 0.5, max_iter: 10_000, tol: 1e-6 }
    }
}

impl LogisticParams {
    // negated comparisons also reject NaN
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn validate(&self) -> Result<(), LearnError> {
        let bad = |m: &str| Err(LearnError::InvalidHyperparameters(m.to_string()));
        if !(self.lambda >= 0.0) {
            return bad("lambda must be >= 0");
        }
        if !(self.learning_rate > 0.0) {
            return bad("learning rate must be positive");
        }
        if self.max_iter == 0 {
            return bad("iteration limit must be >= 1");
        }
        if !(self.tol > 0.0) {
            return bad("tolerance must be positive");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LogisticModel {
    pub means: Vec<f64>,
    pub scales: Vec<f64>,
    pub weights: Vec<f64>,
    pub bias: f64,
    pub iterations: usize,
}

fn sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + (-z).exp())
    } else {
        let e = z.exp();
        e / (1.0 + e)
    }
}

/// `ln(1 + e^z)` without overflow.
fn softplus(z: f64) -> f64 {
    if z > 0.0 {
        z + (-z).exp().ln_1p()
    } else {
        z.exp().ln_1p()
    }
}

fn margin(weights: &[f64], bias: f64, x: &[f64]) -> f64 {
    bias + weights.iter().zip(x).map(|(w, v)| w * v).sum::<f64>()
}

/// Mean negative log-likelihood plus `lambda / 2 * |w|^2` (bias unpenalized).
pub fn log_loss(weights: &[f64], bias: f64, x: &[&[f64]], y: &[Label], lambda: f64) -> f64 {
    let n = x.len() as f64;
    let data: f64 = x
        .iter()
        .zip(y)
        .map(|(row, label)| {
            let z = margin(weights, bias, row);
            softplus(z) - label.indicator() * z
        })
        .sum();
    data / n + 0.5 * lambda * weights.iter().map(|w| w * w).sum::<f64>()
}

/// Gradient of [`log_loss`] with respect to the weights and the bias.
pub fn log_loss_gradient(weights: &[f64], bias: f64, x: &[&[f64]], y: &[Label], lambda: f64) -> (Vec<f64>, f64) {
    let n = x.len() as f64;
    let mut gw = vec![0.0; weights.len()];
    let mut gb = 0.0;
    for (row, label) in x.iter().zip(y) {
        let r = sigmoid(margin(weights, bias, row)) - label.indicator();
        gw.iter_mut().zip(row.iter()).for_each(|(g, v)| *g += r * v);
        gb += r;
    }
    gw.iter_mut().zip(weights).for_each(|(g, w)| *g = *g / n + lambda * w);
    (gw, gb / n)
}

impl LogisticModel {
    pub(crate) fn fit(s: &Samples, p: &LogisticParams) -> Self {
        let d = s.arity();
        let n = s.len() as f64;
        let mut means = vec![0.0; d];
        for row in &s.x {
            means.iter_mut().zip(row.iter()).for_each(|(m, v)| *m += v / n);
        }
        let mut scales = vec![0.0; d];
        for row in &s.x {
            for f in 0..d {
                scales[f] += (row[f] - means[f]).powi(2) / n;
            }
        }
        scales.iter_mut().for_each(|v| *v = if *v > 0.0 { v.sqrt() } else { 1.0 });
        let z: Vec<Vec<f64>> =
            s.x.iter().map(|row| (0..d).map(|f| (row[f] - means[f]) / scales[f]).collect()).collect();
        let zr: Vec<&[f64]> = z.iter().map(Vec::as_slice).collect();

        let mut weights = vec![0.0; d];
        let mut bias = 0.0;
        let mut iterations = 0;
        while iterations < p.max_iter {
            let (gw, gb) = log_loss_gradient(&weights, bias, &zr, &s.y, p.lambda);
            let largest = gw.iter().fold(gb.abs(), |m, g| m.max(g.abs()));
            if largest < p.tol {
                break;
            }
            weights.iter_mut().zip(&gw).for_each(|(w, g)| *w -= p.learning_rate * g);
            bias -= p.learning_rate * gb;
            iterations += 1;
        }
        LogisticModel { means, scales, weights, bias, iterations }
    }

    /// Probability of `P`.
    pub fn probability(&self, x: &[f64]) -> f64 {
        let z: f64 = self.bias
            + x.iter().enumerate().map(|(f, v)| self.weights[f] * (v - self.means[f]) / self.scales[f]).sum::<f64>();
        sigmoid(z)
    }

    pub fn predict(&self, x: &[f64]) -> Label {
        if self.probability(x) > 0.5 {
            Label::P
        } else {
            Label::NP
        }
    }
}
