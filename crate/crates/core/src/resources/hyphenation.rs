//! Liang hyphenation pattern files.
//!
//! A pattern such as `.ap4` is stored as its letter skeleton (`.ap`) plus a
//! weight for every inter-letter gap, including the gaps before the first and
//! after the last character. Gap `i` sits immediately before skeleton
//! character `i`.

use std::path::Path;

use rustc_hash::FxHashMap;

use super::text::{content_lines, read_file};
use crate::error::ResourceError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    pub skeleton: String,
    pub weights: Vec<u8>,
}

impl Pattern {
    /// Decomposes a raw pattern like `1ca` or `.ap4` into skeleton and gap
    /// weights. Fails on patterns without letters or without any digit.
    pub fn parse(raw: &str) -> Result<Self, String> {
        let mut skeleton = String::with_capacity(raw.len());
        let mut weights = vec![0u8];
        let mut saw_digit = false;
        let mut pending_digit = false;
        for ch in raw.chars() {
            if let Some(d) = ch.to_digit(10) {
                if pending_digit {
                    return Err(format!("pattern {raw:?} has adjacent digits"));
                }
                *weights.last_mut().expect("non-empty") = d as u8;
                saw_digit = true;
                pending_digit = true;
            } else if ch == '.' || ch.is_ascii_alphabetic() {
                skeleton.push(ch.to_ascii_lowercase());
                weights.push(0);
                pending_digit = false;
            } else {
                return Err(format!("pattern {raw:?} contains invalid character {ch:?}"));
            }
        }
        if !skeleton.bytes().any(|b| b.is_ascii_alphabetic()) {
            return Err(format!("pattern {raw:?} has no letters"));
        }
        if !saw_digit {
            return Err(format!("pattern {raw:?} has no digits"));
        }
        Ok(Pattern { skeleton, weights })
    }
}

#[derive(Debug, Clone)]
pub struct HyphenationPatterns {
    patterns: FxHashMap<String, Vec<u8>>,
    max_len: usize,
    pub left_min: usize,
    pub right_min: usize,
}

impl HyphenationPatterns {
    pub fn new(
        patterns: impl IntoIterator<Item = Pattern>,
        left_min: usize,
        right_min: usize,
    ) -> Result<Self, ResourceError> {
        if left_min == 0 || right_min == 0 {
            return Err(ResourceError::malformed(
                "hyphenation",
                0,
                "LEFTMIN and RIGHTMIN must be positive",
            ));
        }
        let mut map: FxHashMap<String, Vec<u8>> = FxHashMap::default();
        let mut max_len = 0;
        for p in patterns {
            max_len = max_len.max(p.skeleton.len());
            // Duplicate skeletons merge by taking the larger weight per gap.
            match map.get_mut(&p.skeleton) {
                Some(existing) => {
                    for (e, w) in existing.iter_mut().zip(&p.weights) {
                        *e = (*e).max(*w);
                    }
                }
                None => {
                    map.insert(p.skeleton, p.weights);
                }
            }
        }
        if map.is_empty() {
            return Err(ResourceError::Empty("hyphenation".into()));
        }
        Ok(HyphenationPatterns {
            patterns: map,
            max_len,
            left_min,
            right_min,
        })
    }

    pub fn parse(source: &str, text: &str) -> Result<Self, ResourceError> {
        let mut left_min = None;
        let mut right_min = None;
        let mut patterns = Vec::new();
        for (line_no, line) in content_lines(text) {
            if let Some((key, value)) = line.split_once('=') {
                let value: usize = value
                    .trim()
                    .parse()
                    .map_err(|_| ResourceError::malformed(source, line_no, format!("bad header value {value:?}")))?;
                match key.trim() {
                    "LEFTMIN" => left_min = Some(value),
                    "RIGHTMIN" => right_min = Some(value),
                    other => {
                        return Err(ResourceError::malformed(
                            source,
                            line_no,
                            format!("unknown header {other:?}"),
                        ))
                    }
                }
                continue;
            }
            for raw in line.split_whitespace() {
                let p = Pattern::parse(raw).map_err(|msg| ResourceError::malformed(source, line_no, msg))?;
                patterns.push(p);
            }
        }
        if patterns.is_empty() {
            return Err(ResourceError::Empty(source.to_string()));
        }
        Self::new(patterns, left_min.unwrap_or(2), right_min.unwrap_or(2)).map_err(|e| match e {
            ResourceError::Malformed { message, .. } => ResourceError::malformed(source, 0, message),
            other => other,
        })
    }

    /// Gap weights for an exact skeleton, if a pattern has it.
    pub fn weights(&self, skeleton: &str) -> Option<&[u8]> {
        self.patterns.get(skeleton).map(Vec::as_slice)
    }

    /// Length of the longest skeleton; bounds the substring search.
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }
}

pub fn load_hyphenation_patterns(path: &Path) -> Result<HyphenationPatterns, ResourceError> {
    let text = read_file(path)?;
    HyphenationPatterns::parse(&path.display().to_string(), &text)
}
