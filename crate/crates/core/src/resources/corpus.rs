//! Frequency dictionary, character n-gram tables and yearly usage series.

use std::path::Path;

use rustc_hash::{FxHashMap, FxHashSet};

use super::text::{columns, content_lines, is_alphabetic_word, read_file};
use crate::error::ResourceError;

/// Word counts. Also serves as the set of meaningful words and as the
/// corpus that feature normalization is computed over.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FrequencyDictionary {
    entries: FxHashMap<String, u64>,
    max_word_len: usize,
}

impl FrequencyDictionary {
    pub fn parse(source: &str, text: &str) -> Result<Self, ResourceError> {
        let mut entries: FxHashMap<String, u64> = FxHashMap::default();
        for (line_no, line) in content_lines(text) {
            let cols = columns(source, line_no, line, 2)?;
            let count: i64 = cols[1]
                .parse()
                .map_err(|_| ResourceError::malformed(source, line_no, format!("bad count {:?}", cols[1])))?;
            if count <= 0 {
                return Err(ResourceError::malformed(
                    source,
                    line_no,
                    format!("count must be positive, got {count}"),
                ));
            }
            let word = cols[0].to_ascii_lowercase();
            if !is_alphabetic_word(&word) {
                continue;
            }
            *entries.entry(word).or_default() += count as u64;
        }
        Ok(Self::from_counts(entries))
    }

    pub fn from_counts(entries: impl IntoIterator<Item = (String, u64)>) -> Self {
        let mut map: FxHashMap<String, u64> = FxHashMap::default();
        for (w, c) in entries {
            *map.entry(w.to_ascii_lowercase()).or_default() += c.max(1);
        }
        let max_word_len = map.keys().map(String::len).max().unwrap_or(0);
        FrequencyDictionary {
            entries: map,
            max_word_len,
        }
    }

    /// Builds a dictionary where every word has count 1.
    pub fn from_words<S: AsRef<str>>(words: impl IntoIterator<Item = S>) -> Self {
        Self::from_counts(words.into_iter().map(|w| (w.as_ref().to_string(), 1)))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains_key(word)
    }

    pub fn count(&self, word: &str) -> Option<u64> {
        self.entries.get(word).copied()
    }

    pub fn max_word_len(&self) -> usize {
        self.max_word_len
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Words in lexicographic order.
    pub fn sorted_words(&self) -> Vec<&str> {
        let mut words: Vec<&str> = self.entries.keys().map(String::as_str).collect();
        words.sort_unstable();
        words
    }
}

pub fn load_frequency_dictionary(path: &Path) -> Result<FrequencyDictionary, ResourceError> {
    FrequencyDictionary::parse(&path.display().to_string(), &read_file(path)?)
}

/// Occurrence counts of every length-`order` substring.
#[derive(Debug, Clone, PartialEq)]
pub struct NgramTable {
    order: usize,
    counts: FxHashMap<String, u64>,
}

impl NgramTable {
    /// Counts n-grams over dictionary word types: every word contributes
    /// each of its substrings once per occurrence, regardless of the word's
    /// corpus count.
    pub fn build(dict: &FrequencyDictionary, order: usize) -> Self {
        assert!((2..=4).contains(&order), "n-gram order must be 2, 3 or 4");
        let mut counts: FxHashMap<String, u64> = FxHashMap::default();
        for word in dict.entries.keys() {
            if word.len() < order {
                continue;
            }
            for i in 0..=word.len() - order {
                *counts.entry(word[i..i + order].to_string()).or_default() += 1;
            }
        }
        NgramTable { order, counts }
    }

    pub fn from_counts<S: Into<String>>(
        order: usize,
        counts: impl IntoIterator<Item = (S, u64)>,
    ) -> Result<Self, ResourceError> {
        let mut map = FxHashMap::default();
        for (k, c) in counts {
            let k: String = k.into();
            if k.len() != order || c == 0 {
                return Err(ResourceError::malformed(
                    "ngrams",
                    0,
                    format!("entry {k:?}:{c} does not fit an order-{order} table"),
                ));
            }
            map.insert(k, c);
        }
        Ok(NgramTable { order, counts: map })
    }

    pub fn empty(order: usize) -> Self {
        NgramTable {
            order,
            counts: FxHashMap::default(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn freq(&self, gram: &str) -> u64 {
        self.counts.get(gram).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

/// One yearly usage point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UsagePoint {
    pub year: i32,
    pub value: f64,
}

/// Yearly usage series, sorted by year. Series with fewer than two points
/// carry no recency signal and are dropped at load.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct UsageStore {
    series: FxHashMap<String, Vec<UsagePoint>>,
}

impl UsageStore {
    pub fn parse(source: &str, text: &str) -> Result<Self, ResourceError> {
        let mut rows: Vec<(String, UsagePoint, usize)> = Vec::new();
        for (line_no, line) in content_lines(text) {
            let cols = columns(source, line_no, line, 3)?;
            let year: i32 = cols[1]
                .parse()
                .map_err(|_| ResourceError::malformed(source, line_no, format!("bad year {:?}", cols[1])))?;
            let value: f64 = cols[2]
                .parse()
                .map_err(|_| ResourceError::malformed(source, line_no, format!("bad value {:?}", cols[2])))?;
            if !value.is_finite() || value < 0.0 {
                return Err(ResourceError::malformed(
                    source,
                    line_no,
                    format!("usage must be a non-negative real, got {value}"),
                ));
            }
            rows.push((cols[0].to_lowercase(), UsagePoint { year, value }, line_no));
        }
        let mut series: FxHashMap<String, Vec<UsagePoint>> = FxHashMap::default();
        let mut seen: FxHashSet<(String, i32)> = FxHashSet::default();
        for (word, point, line_no) in rows {
            if !seen.insert((word.clone(), point.year)) {
                return Err(ResourceError::malformed(
                    source,
                    line_no,
                    format!("duplicate year {} for {word:?}", point.year),
                ));
            }
            series.entry(word).or_default().push(point);
        }
        Ok(Self::from_series(series))
    }

    pub fn from_series(series: impl IntoIterator<Item = (String, Vec<UsagePoint>)>) -> Self {
        let series = series
            .into_iter()
            .filter_map(|(w, mut pts)| {
                pts.sort_by_key(|p| p.year);
                pts.dedup_by_key(|p| p.year);
                (pts.len() >= 2).then_some((w, pts))
            })
            .collect();
        UsageStore { series }
    }

    pub fn series(&self, word: &str) -> Option<&[UsagePoint]> {
        self.series.get(word).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.series.len()
    }

    pub fn is_empty(&self) -> bool {
        self.series.is_empty()
    }
}

pub fn load_usage_series(path: &Path) -> Result<UsageStore, ResourceError> {
    UsageStore::parse(&path.display().to_string(), &read_file(path)?)
}
