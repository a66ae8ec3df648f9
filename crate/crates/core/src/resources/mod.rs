//! Loading and holding the linguistic resources every stage reads from.
//!
//! A resource directory holds seven UTF-8 files (see [`FILE_NAMES`]); `#`
//! starts a comment line in each of them. Once built, a [`ResourceStore`] is
//! immutable and can be shared across threads.

mod corpus;
mod hyphenation;
mod lexicon;
pub(crate) mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub use corpus::{
    load_frequency_dictionary, load_usage_series, FrequencyDictionary, NgramTable, UsagePoint, UsageStore,
};
pub use hyphenation::{load_hyphenation_patterns, HyphenationPatterns, Pattern};
pub use lexicon::{
    load_pos_lexicon, load_similes, load_stopwords, load_synonyms, PosLexicon, SimileDb, StopwordSet, SynonymDb,
};

use crate::error::ResourceError;
use crate::pipeline::syllabify;
use crate::scoring;

pub const STOPWORDS_FILE: &str = "stopwords.txt";
pub const POS_LEXICON_FILE: &str = "pos_lexicon.tsv";
pub const SYNONYMS_FILE: &str = "synonyms.tsv";
pub const SIMILES_FILE: &str = "similes.tsv";
pub const HYPHENATION_FILE: &str = "hyphen.pat";
pub const DICTIONARY_FILE: &str = "dictionary.tsv";
pub const USAGE_FILE: &str = "usage.tsv";

pub const FILE_NAMES: [&str; 7] = [
    STOPWORDS_FILE,
    POS_LEXICON_FILE,
    SYNONYMS_FILE,
    SIMILES_FILE,
    HYPHENATION_FILE,
    DICTIONARY_FILE,
    USAGE_FILE,
];

/// Coarse part-of-speech tag. The declaration order doubles as the
/// tie-breaking order for tagging.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PosTag {
    Noun,
    Verb,
    Adjective,
    Adverb,
    Other,
}

impl PosTag {
    pub const BLENDABLE: [PosTag; 4] = [PosTag::Noun, PosTag::Verb, PosTag::Adjective, PosTag::Adverb];

    /// Parses the file-format codes `NOUN`, `VERB`, `ADJ`, `ADV`, `OTHER`.
    pub fn from_code(code: &str) -> Option<PosTag> {
        match code.to_ascii_uppercase().as_str() {
            "NOUN" => Some(PosTag::Noun),
            "VERB" => Some(PosTag::Verb),
            "ADJ" => Some(PosTag::Adjective),
            "ADV" => Some(PosTag::Adverb),
            "OTHER" => Some(PosTag::Other),
            _ => None,
        }
    }

    pub fn is_blendable(self) -> bool {
        self != PosTag::Other
    }
}

impl fmt::Display for PosTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PosTag::Noun => "Noun",
            PosTag::Verb => "Verb",
            PosTag::Adjective => "Adjective",
            PosTag::Adverb => "Adverb",
            PosTag::Other => "Other",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeatureRange {
    pub min: f64,
    pub max: f64,
}

/// Min/max of every raw feature over the dictionary corpus.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormStats {
    pub readability: FeatureRange,
    pub pronounceability: FeatureRange,
    pub memorability: FeatureRange,
    pub usage: FeatureRange,
}

/// Everything a [`ResourceStore`] is built from.
#[derive(Debug, Clone)]
pub struct ResourceParts {
    pub stopwords: StopwordSet,
    pub pos_lexicon: PosLexicon,
    pub synonyms: SynonymDb,
    pub similes: SimileDb,
    pub hyphenation: HyphenationPatterns,
    pub dictionary: FrequencyDictionary,
    pub usage: UsageStore,
}

#[derive(Debug, Clone)]
pub struct ResourceStore {
    stopwords: StopwordSet,
    pos_lexicon: PosLexicon,
    synonyms: SynonymDb,
    similes: SimileDb,
    hyphenation: HyphenationPatterns,
    dictionary: FrequencyDictionary,
    ngrams: [NgramTable; 3],
    usage: UsageStore,
    norm_stats: NormStats,
    checksums: BTreeMap<String, String>,
}

impl ResourceStore {
    /// Builds n-gram tables and normalization statistics from parsed parts.
    pub fn from_parts(parts: ResourceParts) -> Result<Self, ResourceError> {
        let ngrams = [
            NgramTable::build(&parts.dictionary, 2),
            NgramTable::build(&parts.dictionary, 3),
            NgramTable::build(&parts.dictionary, 4),
        ];
        let norm_stats = feature_stats(&parts.dictionary, &parts.hyphenation, &ngrams, &parts.usage)?;
        Ok(ResourceStore {
            stopwords: parts.stopwords,
            pos_lexicon: parts.pos_lexicon,
            synonyms: parts.synonyms,
            similes: parts.similes,
            hyphenation: parts.hyphenation,
            dictionary: parts.dictionary,
            ngrams,
            usage: parts.usage,
            norm_stats,
            checksums: BTreeMap::new(),
        })
    }

    /// Loads the seven resource files from `dir`.
    pub fn load_dir(dir: impl AsRef<Path>) -> Result<Self, ResourceError> {
        let dir = dir.as_ref();
        let parts = ResourceParts {
            stopwords: load_stopwords(&dir.join(STOPWORDS_FILE))?,
            pos_lexicon: load_pos_lexicon(&dir.join(POS_LEXICON_FILE))?,
            synonyms: load_synonyms(&dir.join(SYNONYMS_FILE))?,
            similes: load_similes(&dir.join(SIMILES_FILE))?,
            hyphenation: load_hyphenation_patterns(&dir.join(HYPHENATION_FILE))?,
            dictionary: load_frequency_dictionary(&dir.join(DICTIONARY_FILE))?,
            usage: load_usage_series(&dir.join(USAGE_FILE))?,
        };
        let mut store = Self::from_parts(parts)?;
        for name in FILE_NAMES {
            let path = dir.join(name);
            let bytes = std::fs::read(&path).map_err(|source| ResourceError::Io { path, source })?;
            store
                .checksums
                .insert(name.to_string(), hex::encode(Sha256::digest(&bytes)));
        }
        Ok(store)
    }

    pub fn stopwords(&self) -> &StopwordSet {
        &self.stopwords
    }

    pub fn pos_lexicon(&self) -> &PosLexicon {
        &self.pos_lexicon
    }

    pub fn synonyms(&self) -> &SynonymDb {
        &self.synonyms
    }

    pub fn similes(&self) -> &SimileDb {
        &self.similes
    }

    pub fn hyphenation(&self) -> &HyphenationPatterns {
        &self.hyphenation
    }

    pub fn dictionary(&self) -> &FrequencyDictionary {
        &self.dictionary
    }

    /// N-gram tables for orders 2, 3 and 4, in that order.
    pub fn ngrams(&self) -> &[NgramTable; 3] {
        &self.ngrams
    }

    pub fn usage(&self) -> &UsageStore {
        &self.usage
    }

    pub fn norm_stats(&self) -> &NormStats {
        &self.norm_stats
    }

    /// SHA-256 of every file, keyed by file name. Empty for stores built
    /// from in-memory parts.
    pub fn checksums(&self) -> &BTreeMap<String, String> {
        &self.checksums
    }
}

/// Raw feature ranges over the dictionary.
///
/// Readability bounds come from the extreme syllable counts observed;
/// memorability is a length ratio and is pinned to `[0, 1]`; usage covers the
/// dictionary words that have a usage series.
pub fn feature_stats(
    dictionary: &FrequencyDictionary,
    hyphenation: &HyphenationPatterns,
    ngrams: &[NgramTable; 3],
    usage: &UsageStore,
) -> Result<NormStats, ResourceError> {
    let mut min_syll = usize::MAX;
    let mut max_syll = 0usize;
    let mut pron = FeatureRange {
        min: f64::INFINITY,
        max: f64::NEG_INFINITY,
    };
    let mut use_range = FeatureRange {
        min: f64::INFINITY,
        max: f64::NEG_INFINITY,
    };
    for word in dictionary.sorted_words() {
        let n = syllabify(word, hyphenation).len();
        min_syll = min_syll.min(n);
        max_syll = max_syll.max(n);
        if let Ok(p) = scoring::pronounceability_raw(word, ngrams) {
            pron.min = pron.min.min(p);
            pron.max = pron.max.max(p);
        }
        if let (v, true) = scoring::usage_weighted(word, usage) {
            use_range.min = use_range.min.min(v);
            use_range.max = use_range.max.max(v);
        }
    }
    let readability = if max_syll == 0 {
        FeatureRange {
            min: f64::NAN,
            max: f64::NAN,
        }
    } else {
        FeatureRange {
            min: scoring::readability_from_syllables(max_syll),
            max: scoring::readability_from_syllables(min_syll),
        }
    };
    let stats = NormStats {
        readability,
        pronounceability: pron,
        memorability: FeatureRange { min: 0.0, max: 1.0 },
        usage: use_range,
    };
    for (feature, r) in [
        ("readability", stats.readability),
        ("pronounceability", stats.pronounceability),
        ("usage", stats.usage),
    ] {
        // also rejects NaN / infinite bounds from empty corpora
        if !(r.min.is_finite() && r.max.is_finite() && r.min < r.max) {
            return Err(ResourceError::Degenerate {
                feature,
                min: r.min,
                max: r.max,
            });
        }
    }
    Ok(stats)
}
