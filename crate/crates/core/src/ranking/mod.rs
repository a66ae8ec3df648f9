//! Ordering, diversification, weight fitting and evaluation metrics.

mod diversify;
mod fit;
mod metrics;

pub use diversify::{diversify_order, diversify_select, DiversityItem, DiversitySelection, DEFAULT_ITERATIONS};
pub use fit::{fit_weights, pairwise_agreement, parse_preferences, FitConfig, PairwisePreference};
pub use metrics::{dcg, kendall_tau, ndcg, ndcg_from_relevances, parse_ratings, RatedName};

use std::cmp::Ordering;

use crate::scoring::Candidate;

/// Descending appeal, ties by ascending name.
pub fn appeal_order(a_appeal: f64, a_name: &str, b_appeal: f64, b_name: &str) -> Ordering {
    b_appeal.total_cmp(&a_appeal).then_with(|| a_name.cmp(b_name))
}

pub fn rank_by_appeal(mut candidates: Vec<Candidate>) -> Vec<Candidate> {
    candidates.sort_by(|a, b| appeal_order(a.appeal, a.text(), b.appeal, b.text()));
    candidates
}
