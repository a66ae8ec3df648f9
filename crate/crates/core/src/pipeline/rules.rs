//! Blending rules: unordered tag pairs with their observed prevalence.

use std::collections::{BTreeMap, BTreeSet};

use crate::resources::PosTag;

/// Unordered tag pair, stored with the smaller tag first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TagPair(PosTag, PosTag);

impl TagPair {
    pub fn new(a: PosTag, b: PosTag) -> Self {
        if a <= b {
            TagPair(a, b)
        } else {
            TagPair(b, a)
        }
    }

    pub fn tags(self) -> (PosTag, PosTag) {
        (self.0, self.1)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuleTable {
    pub rows: BTreeMap<TagPair, f64>,
    /// Minimum percentage for a rule to be allowed.
    pub threshold: f64,
}

impl RuleTable {
    /// Percentage of annotated blended brand names per tag pair.
    pub const OBSERVED: [(PosTag, PosTag, f64); 10] = [
        (PosTag::Noun, PosTag::Adjective, 40.10),
        (PosTag::Noun, PosTag::Verb, 8.02),
        (PosTag::Noun, PosTag::Adverb, 4.81),
        (PosTag::Verb, PosTag::Adjective, 0.53),
        (PosTag::Verb, PosTag::Adverb, 3.7),
        (PosTag::Adjective, PosTag::Adverb, 3.2),
        (PosTag::Noun, PosTag::Noun, 36.36),
        (PosTag::Verb, PosTag::Verb, 0.00),
        (PosTag::Adjective, PosTag::Adjective, 3.28),
        (PosTag::Adverb, PosTag::Adverb, 0.00),
    ];

    pub fn new(rows: impl IntoIterator<Item = (PosTag, PosTag, f64)>, threshold: f64) -> Self {
        RuleTable {
            rows: rows
                .into_iter()
                .map(|(a, b, pct)| (TagPair::new(a, b), pct.max(0.0)))
                .collect(),
            threshold,
        }
    }

    pub fn with_threshold(mut self, threshold: f64) -> Self {
        self.threshold = threshold;
        self
    }

    pub fn percentage(&self, a: PosTag, b: PosTag) -> Option<f64> {
        self.rows.get(&TagPair::new(a, b)).copied()
    }

    pub fn allowed_rules(&self) -> AllowedRules {
        AllowedRules(
            self.rows
                .iter()
                .filter(|(_, &pct)| pct >= self.threshold)
                .map(|(&pair, _)| pair)
                .collect(),
        )
    }
}

impl Default for RuleTable {
    fn default() -> Self {
        RuleTable::new(Self::OBSERVED, 1.0)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AllowedRules(pub BTreeSet<TagPair>);

impl AllowedRules {
    pub fn allows(&self, a: PosTag, b: PosTag) -> bool {
        self.0.contains(&TagPair::new(a, b))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}
