//! Linear pairwise max-margin fitting of appeal weights.
//!
//! Minimizes `sum(max(0, 1 - w.d)) + lambda * |w|^2` over difference vectors
//! `d = winner - loser` with stochastic subgradient descent. Difference
//! vectors are first divided by their root-mean-square norm so the learned
//! ordering does not depend on the feature scale; the returned weights are
//! mapped back to the original scale.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{RankError, ResourceError};
use crate::resources::text::{columns, content_lines};
use crate::scoring::AppealWeights;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairwisePreference {
    pub winner: [f64; 4],
    pub loser: [f64; 4],
}

impl PairwisePreference {
    pub fn difference(&self) -> [f64; 4] {
        std::array::from_fn(|i| self.winner[i] - self.loser[i])
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitConfig {
    pub epochs: usize,
    pub learning_rate: f64,
    pub regularization: f64,
    pub seed: u64,
}

impl Default for FitConfig {
    fn default() -> Self {
        FitConfig {
            epochs: 200,
            learning_rate: 0.1,
            regularization: 1e-4,
            seed: 0,
        }
    }
}

fn dot(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn fit_weights(preferences: &[PairwisePreference], config: &FitConfig) -> Result<AppealWeights, RankError> {
    if config.epochs == 0 {
        return Err(RankError::InvalidParameter("epochs must be positive".into()));
    }
    if !(config.learning_rate > 0.0 && config.learning_rate.is_finite()) {
        return Err(RankError::InvalidParameter("learning rate must be positive".into()));
    }
    if !(config.regularization > 0.0 && config.regularization.is_finite()) {
        return Err(RankError::InvalidParameter("regularization must be positive".into()));
    }
    let diffs: Vec<[f64; 4]> = preferences.iter().map(PairwisePreference::difference).collect();
    if diffs.iter().flatten().any(|x| !x.is_finite()) {
        return Err(RankError::Unlearnable);
    }
    let sq_norm_mean = diffs.iter().map(|d| dot(d, d)).sum::<f64>() / diffs.len().max(1) as f64;
    if diffs.is_empty() || sq_norm_mean == 0.0 {
        return Err(RankError::Unlearnable);
    }
    let scale = sq_norm_mean.sqrt();
    let diffs: Vec<[f64; 4]> = diffs.iter().map(|d| d.map(|x| x / scale)).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut order: Vec<usize> = (0..diffs.len()).collect();
    let mut w = [0.0f64; 4];
    let mut step = 0u64;
    for _ in 0..config.epochs {
        order.shuffle(&mut rng);
        for &i in &order {
            let d = &diffs[i];
            let eta = config.learning_rate / (1.0 + config.learning_rate * config.regularization * step as f64);
            let violated = dot(&w, d) < 1.0;
            for k in 0..4 {
                let mut grad = 2.0 * config.regularization * w[k];
                if violated {
                    grad -= d[k];
                }
                w[k] -= eta * grad;
            }
            step += 1;
        }
    }
    if w.iter().all(|&x| x == 0.0) {
        return Err(RankError::Unlearnable);
    }
    Ok(AppealWeights::from_array(w.map(|x| x / scale)))
}

/// Fraction of preferences whose winner scores strictly higher under `weights`.
pub fn pairwise_agreement(weights: &AppealWeights, preferences: &[PairwisePreference]) -> f64 {
    if preferences.is_empty() {
        return 0.0;
    }
    let w = weights.to_array();
    let agree = preferences.iter().filter(|p| dot(&w, &p.difference()) > 0.0).count();
    agree as f64 / preferences.len() as f64
}

/// Parses `winner_r winner_p winner_m winner_u loser_r loser_p loser_m loser_u`
/// rows (tab-separated).
pub fn parse_preferences(source: &str, text: &str) -> Result<Vec<PairwisePreference>, ResourceError> {
    let mut out = Vec::new();
    for (line_no, line) in content_lines(text) {
        let cols = columns(source, line_no, line, 8)?;
        let mut values = [0.0f64; 8];
        for (slot, col) in values.iter_mut().zip(&cols) {
            *slot = col
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| ResourceError::malformed(source, line_no, format!("bad number {col:?}")))?;
        }
        out.push(PairwisePreference {
            winner: [values[0], values[1], values[2], values[3]],
            loser: [values[4], values[5], values[6], values[7]],
        });
    }
    Ok(out)
}
