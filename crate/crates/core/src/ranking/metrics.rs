//! Rank correlation and graded-relevance metrics.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{RankError, ResourceError};
use crate::resources::text::{columns, content_lines};

/// Tau-a between two strict orderings of the same items.
pub fn kendall_tau<T: Eq + Hash>(order_a: &[T], order_b: &[T]) -> Result<f64, RankError> {
    let n = order_a.len();
    if n != order_b.len() {
        return Err(RankError::Mismatch(format!(
            "lengths differ: {} vs {}",
            n,
            order_b.len()
        )));
    }
    if n < 2 {
        return Err(RankError::Mismatch("need at least two items".into()));
    }
    let pos_b: HashMap<&T, usize> = order_b.iter().enumerate().map(|(i, x)| (x, i)).collect();
    if pos_b.len() != n {
        return Err(RankError::Mismatch("second ordering repeats an item".into()));
    }
    let mapped: Vec<usize> = order_a
        .iter()
        .map(|x| pos_b.get(x).copied())
        .collect::<Option<_>>()
        .ok_or_else(|| RankError::Mismatch("orderings cover different items".into()))?;
    let mut concordant = 0i64;
    let mut discordant = 0i64;
    for i in 0..n {
        for j in i + 1..n {
            match mapped[i].cmp(&mapped[j]) {
                std::cmp::Ordering::Less => concordant += 1,
                std::cmp::Ordering::Greater => discordant += 1,
                std::cmp::Ordering::Equal => return Err(RankError::Mismatch("first ordering repeats an item".into())),
            }
        }
    }
    let pairs = (n * (n - 1) / 2) as f64;
    Ok((concordant - discordant) as f64 / pairs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatedName {
    pub name: String,
    pub good: u32,
    pub fair: u32,
    pub bad: u32,
}

impl RatedName {
    /// Good counts 1, fair 0.5, bad 0.
    pub fn relevance(&self) -> f64 {
        f64::from(self.good) + 0.5 * f64::from(self.fair)
    }
}

/// Discounted cumulative gain with a `log2(i + 1)` discount at 1-based position `i`.
pub fn dcg(relevances: &[f64]) -> f64 {
    relevances
        .iter()
        .enumerate()
        .map(|(i, r)| r / ((i + 2) as f64).log2())
        .sum()
}

/// nDCG of relevances listed in system order; 1 when the ideal gain is 0.
pub fn ndcg_from_relevances(relevances: &[f64]) -> f64 {
    let mut ideal = relevances.to_vec();
    ideal.sort_by(|a, b| b.total_cmp(a));
    let best = dcg(&ideal);
    if best == 0.0 {
        return 1.0;
    }
    dcg(relevances) / best
}

pub fn ndcg<S: AsRef<str>>(system_order: &[S], ratings: &[RatedName]) -> Result<f64, RankError> {
    let by_name: HashMap<&str, &RatedName> = ratings.iter().map(|r| (r.name.as_str(), r)).collect();
    let relevances = system_order
        .iter()
        .map(|name| {
            by_name
                .get(name.as_ref())
                .map(|r| r.relevance())
                .ok_or_else(|| RankError::Mismatch(format!("no rating for {:?}", name.as_ref())))
        })
        .collect::<Result<Vec<f64>, RankError>>()?;
    Ok(ndcg_from_relevances(&relevances))
}

/// Parses `name good fair bad` rows (tab-separated).
pub fn parse_ratings(source: &str, text: &str) -> Result<Vec<RatedName>, ResourceError> {
    let mut out = Vec::new();
    for (line_no, line) in content_lines(text) {
        let cols = columns(source, line_no, line, 4)?;
        let count = |s: &str| {
            s.parse::<u32>()
                .map_err(|_| ResourceError::malformed(source, line_no, format!("bad count {s:?}")))
        };
        out.push(RatedName {
            name: cols[0].to_string(),
            good: count(cols[1])?,
            fair: count(cols[2])?,
            bad: count(cols[3])?,
        });
    }
    Ok(out)
}
