//! Feature scores and the appeal combination.
//!
//! Four raw features are computed per name: readability (a linear function
//! of syllable count), pronounceability (length-weighted mean n-gram
//! frequency), memorability (the share of characters covered by dictionary
//! words) and recency-weighted usage. Readability, pronounceability and
//! usage are min-max normalized against the dictionary corpus; uniqueness is
//! one minus normalized usage, and 1 for names with no usage series.

use serde::{Deserialize, Serialize};

use crate::error::ScoreError;
use crate::pipeline::{syllabify, RawCandidate};
use crate::resources::{
    FeatureRange, FrequencyDictionary, HyphenationPatterns, NgramTable, NormStats, ResourceStore, UsageStore,
};

pub const READING_EASE_BASE: f64 = 205.82;
pub const READING_EASE_PER_SYLLABLE: f64 = 84.6;
/// Meaningful substrings must be at least this long.
pub const MIN_MEANINGFUL_LEN: usize = 3;

pub fn readability_from_syllables(syllables: usize) -> f64 {
    READING_EASE_BASE - READING_EASE_PER_SYLLABLE * syllables as f64
}

/// Single-word reading ease: `205.82 - 84.6 * syllables`. May be negative.
pub fn readability_raw(name: &str, patterns: &HyphenationPatterns) -> f64 {
    readability_from_syllables(syllabify(name, patterns).len())
}

/// Mean n-gram frequency of `name` for one table; zero when the name is
/// shorter than the table's order.
pub fn ngram_feature(name: &str, table: &NgramTable) -> f64 {
    let l = table.order();
    let len = name.len();
    if len < l {
        return 0.0;
    }
    let total: u64 = (0..=len - l).map(|i| table.freq(&name[i..i + l])).sum();
    total as f64 / (len - l + 1) as f64
}

/// Pronounceability: `sum over l of (l / 9) * S_l` for the order 2, 3 and 4
/// tables, where `S_l` is [`ngram_feature`].
pub fn pronounceability_raw(name: &str, ngrams: &[NgramTable]) -> Result<f64, ScoreError> {
    if !name.is_ascii() {
        return Err(ScoreError::NotAlphabetic(name.to_string()));
    }
    if name.len() < 2 {
        return Err(ScoreError::TooShort(name.to_string()));
    }
    let order_sum: usize = ngrams.iter().map(NgramTable::order).sum();
    Ok(ngrams
        .iter()
        .map(|t| t.order() as f64 / order_sum as f64 * ngram_feature(name, t))
        .sum())
}

/// Largest fraction of `name` covered by disjoint dictionary words of at
/// least three letters.
pub fn memorability(name: &str, dict: &FrequencyDictionary) -> f64 {
    let n = name.len();
    if n == 0 {
        return 0.0;
    }
    let longest = dict.max_word_len();
    // best[i]: most characters of name[..i] covered by meaningful words
    let mut best = vec![0usize; n + 1];
    for i in 1..=n {
        let mut b = best[i - 1];
        if i >= MIN_MEANINGFUL_LEN {
            let lowest = i.saturating_sub(longest);
            for j in lowest..=i - MIN_MEANINGFUL_LEN {
                if name.is_char_boundary(j) && dict.contains(&name[j..i]) {
                    b = b.max(best[j] + (i - j));
                }
            }
        }
        best[i] = b;
    }
    best[n] as f64 / n as f64
}

/// Recency-weighted usage: yearly values weighted by years elapsed since the
/// series start. Returns `(0.0, false)` when no usable series exists.
pub fn usage_weighted(name: &str, usage: &UsageStore) -> (f64, bool) {
    let Some(series) = usage.series(name) else {
        return (0.0, false);
    };
    let Some(first) = series.first() else {
        return (0.0, false);
    };
    let mut num = 0.0;
    let mut den = 0.0;
    for p in series {
        let dt = f64::from(p.year - first.year);
        num += p.value * dt;
        den += dt;
    }
    if den <= 0.0 {
        return (0.0, false);
    }
    (num / den, true)
}

/// Min-max normalization, clamped to `[0, 1]`.
pub fn normalize(raw: f64, range: FeatureRange) -> f64 {
    ((raw - range.min) / (range.max - range.min)).clamp(0.0, 1.0)
}

pub fn uniqueness(name: &str, usage: &UsageStore, stats: &NormStats) -> f64 {
    match usage_weighted(name, usage) {
        (_, false) => 1.0,
        (v, true) => (1.0 - normalize(v, stats.usage)).clamp(0.0, 1.0),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeatureScores {
    pub readability_raw: f64,
    pub pronounceability_raw: f64,
    pub memorability: f64,
    /// `None` when the name has no usage series.
    pub usage_weighted: Option<f64>,
    pub readability: f64,
    pub pronounceability: f64,
    pub uniqueness: f64,
}

impl FeatureScores {
    pub fn compute(name: &str, store: &ResourceStore) -> Result<Self, ScoreError> {
        if !name.bytes().all(|b| b.is_ascii_lowercase()) {
            return Err(ScoreError::NotAlphabetic(name.to_string()));
        }
        let stats = store.norm_stats();
        let readability_raw = readability_raw(name, store.hyphenation());
        let pronounceability_raw = pronounceability_raw(name, store.ngrams())?;
        let (usage, found) = usage_weighted(name, store.usage());
        Ok(FeatureScores {
            readability_raw,
            pronounceability_raw,
            memorability: memorability(name, store.dictionary()),
            usage_weighted: found.then_some(usage),
            readability: normalize(readability_raw, stats.readability),
            pronounceability: normalize(pronounceability_raw, stats.pronounceability),
            uniqueness: if found {
                (1.0 - normalize(usage, stats.usage)).clamp(0.0, 1.0)
            } else {
                1.0
            },
        })
    }

    /// Normalized `(readability, pronounceability, memorability, uniqueness)`.
    pub fn vector(&self) -> [f64; 4] {
        [
            self.readability,
            self.pronounceability,
            self.memorability,
            self.uniqueness,
        ]
    }
}

/// Linear weights of the four normalized features.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AppealWeights {
    pub readability: f64,
    pub pronounceability: f64,
    pub memorability: f64,
    pub uniqueness: f64,
}

impl AppealWeights {
    pub const fn new(readability: f64, pronounceability: f64, memorability: f64, uniqueness: f64) -> Self {
        AppealWeights {
            readability,
            pronounceability,
            memorability,
            uniqueness,
        }
    }

    pub fn from_array(w: [f64; 4]) -> Self {
        AppealWeights::new(w[0], w[1], w[2], w[3])
    }

    pub fn to_array(self) -> [f64; 4] {
        [
            self.readability,
            self.pronounceability,
            self.memorability,
            self.uniqueness,
        ]
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|w| w.is_finite())
    }
}

impl Default for AppealWeights {
    /// Weights fitted on human pairwise preferences; readability matters most.
    fn default() -> Self {
        AppealWeights::new(2.18, 1.63, 0.91, 1.05)
    }
}

/// Appeal from the four normalized values, in `[R, P, M, U]` order.
pub fn appeal_of(features: [f64; 4], weights: &AppealWeights) -> f64 {
    weights.readability * features[0]
        + weights.pronounceability * features[1]
        + weights.memorability * features[2]
        + weights.uniqueness * features[3]
}

pub fn appeal(scores: &FeatureScores, weights: &AppealWeights) -> f64 {
    appeal_of(scores.vector(), weights)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub raw: RawCandidate,
    pub scores: FeatureScores,
    pub appeal: f64,
}

impl Candidate {
    pub fn text(&self) -> &str {
        &self.raw.text
    }
}

/// Scores every candidate independently, keeping input order.
pub fn score_candidates(
    candidates: Vec<RawCandidate>,
    store: &ResourceStore,
    weights: &AppealWeights,
) -> Result<Vec<Candidate>, ScoreError> {
    candidates
        .into_iter()
        .map(|raw| {
            let scores = FeatureScores::compute(&raw.text, store)?;
            let appeal = appeal(&scores, weights);
            Ok(Candidate { raw, scores, appeal })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resources::UsagePoint;

    fn table(order: usize, counts: &[(&str, u64)]) -> NgramTable {
        NgramTable::from_counts(order, counts.iter().map(|&(k, c)| (k, c))).unwrap()
    }

    #[test]
    fn reading_ease_per_syllable_count() {
        assert!((readability_from_syllables(1) - 121.22).abs() < 1e-9);
        assert!((readability_from_syllables(2) - 36.62).abs() < 1e-9);
        assert!((readability_from_syllables(4) - -132.58).abs() < 1e-9);
    }

    #[test]
    fn facebook_bigram_feature() {
        let bigrams = table(
            2,
            &[
                ("fa", 109),
                ("ac", 343),
                ("ce", 438),
                ("eb", 29),
                ("bo", 118),
                ("oo", 114),
                ("ok", 109),
            ],
        );
        // Seven bigrams summing to 1260 over 8 - 2 + 1 positions.
        assert!((ngram_feature("facebook", &bigrams) - 180.0).abs() < 1e-12);
    }

    #[test]
    fn pronounceability_of_unknown_ngrams_is_zero() {
        let tables = [table(2, &[("ab", 1)]), NgramTable::empty(3), NgramTable::empty(4)];
        assert_eq!(pronounceability_raw("xqzt", &tables).unwrap(), 0.0);
    }

    #[test]
    fn pronounceability_short_name() {
        let tables = [
            table(2, &[("ab", 2), ("bc", 4)]),
            NgramTable::empty(3),
            NgramTable::empty(4),
        ];
        let p = pronounceability_raw("abc", &tables).unwrap();
        assert!((p - 2.0 / 9.0 * 3.0).abs() < 1e-12);
        assert_eq!(
            pronounceability_raw("a", &tables),
            Err(ScoreError::TooShort("a".into()))
        );
    }

    #[test]
    fn memorability_examples() {
        let dict = FrequencyDictionary::from_words(["face", "book"]);
        assert_eq!(memorability("facebook", &dict), 1.0);
        assert_eq!(memorability("xqzt", &dict), 0.0);
        let dict = FrequencyDictionary::from_words(["book"]);
        assert!((memorability("bookx", &dict) - 0.8).abs() < 1e-12);
    }

    #[test]
    fn memorability_ignores_short_words() {
        let dict = FrequencyDictionary::from_words(["ab", "cd"]);
        assert_eq!(memorability("abcd", &dict), 0.0);
    }

    fn usage(rows: &[(i32, f64)]) -> UsageStore {
        UsageStore::from_series([(
            "foo".to_string(),
            rows.iter().map(|&(year, value)| UsagePoint { year, value }).collect(),
        )])
    }

    #[test]
    fn usage_weighting() {
        assert_eq!(usage_weighted("bar", &usage(&[(2000, 0.5), (2001, 0.5)])), (0.0, false));
        let (v, found) = usage_weighted("foo", &usage(&[(2000, 0.5), (2001, 0.5)]));
        assert!(found && (v - 0.5).abs() < 1e-12);
        let (v, _) = usage_weighted("foo", &usage(&[(2000, 0.0), (2001, 0.1), (2002, 0.4)]));
        assert!((v - 0.3).abs() < 1e-12);
    }

    #[test]
    fn uniqueness_endpoints() {
        let store = usage(&[(2000, 0.0), (2001, 0.1), (2002, 0.4)]);
        let range = |min, max| NormStats {
            readability: FeatureRange { min: 0.0, max: 1.0 },
            pronounceability: FeatureRange { min: 0.0, max: 1.0 },
            memorability: FeatureRange { min: 0.0, max: 1.0 },
            usage: FeatureRange { min, max },
        };
        assert_eq!(uniqueness("absent", &store, &range(0.0, 1.0)), 1.0);
        assert_eq!(uniqueness("foo", &store, &range(0.1, 0.3)), 0.0);
        assert_eq!(uniqueness("foo", &store, &range(0.3, 0.9)), 1.0);
    }

    #[test]
    fn normalize_clamps() {
        let r = FeatureRange { min: 2.0, max: 4.0 };
        assert_eq!(normalize(2.0, r), 0.0);
        assert_eq!(normalize(4.0, r), 1.0);
        assert_eq!(normalize(3.0, r), 0.5);
        assert_eq!(normalize(9.0, r), 1.0);
        assert_eq!(normalize(-9.0, r), 0.0);
    }

    #[test]
    fn appeal_examples() {
        let w = AppealWeights::default();
        let a = appeal_of([0.77, 0.04, 1.0, 1.0], &w);
        assert!((a - 3.7038).abs() < 1e-9, "{a}");
        assert_eq!(appeal_of([0.0; 4], &w), 0.0);
        assert_eq!(appeal_of([0.25; 4], &AppealWeights::new(1.0, 1.0, 1.0, 1.0)), 1.0);
    }
}
