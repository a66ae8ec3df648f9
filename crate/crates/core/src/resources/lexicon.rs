//! Word-level lexicons: stopwords, POS counts, synonyms and similes.

use std::collections::BTreeSet;
use std::path::Path;

use rustc_hash::FxHashMap;

use super::text::{columns, content_lines, is_alphabetic_word, read_file};
use super::PosTag;
use crate::error::ResourceError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StopwordSet {
    words: BTreeSet<String>,
}

impl StopwordSet {
    pub fn parse(source: &str, text: &str) -> Result<Self, ResourceError> {
        let words: BTreeSet<String> = content_lines(text).map(|(_, line)| line.to_lowercase()).collect();
        if words.is_empty() {
            return Err(ResourceError::Empty(source.to_string()));
        }
        Ok(StopwordSet { words })
    }

    pub fn contains(&self, word: &str) -> bool {
        if word.bytes().any(|b| b.is_ascii_uppercase()) {
            self.words.contains(&word.to_ascii_lowercase())
        } else {
            self.words.contains(word)
        }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }
}

pub fn load_stopwords(path: &Path) -> Result<StopwordSet, ResourceError> {
    StopwordSet::parse(&path.display().to_string(), &read_file(path)?)
}

/// Per-word tag distributions. Tags for a word are kept in the fixed
/// [`PosTag`] order so lookups are deterministic.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PosLexicon {
    entries: FxHashMap<String, Vec<(PosTag, f64)>>,
}

impl PosLexicon {
    pub fn parse(source: &str, text: &str) -> Result<Self, ResourceError> {
        let mut counts: FxHashMap<String, Vec<(PosTag, u64)>> = FxHashMap::default();
        for (line_no, line) in content_lines(text) {
            let cols = columns(source, line_no, line, 3)?;
            let tag = PosTag::from_code(cols[1])
                .ok_or_else(|| ResourceError::malformed(source, line_no, format!("unknown tag {:?}", cols[1])))?;
            let count: u64 = cols[2]
                .parse()
                .map_err(|_| ResourceError::malformed(source, line_no, format!("bad count {:?}", cols[2])))?;
            let word = cols[0].to_lowercase();
            let slot = counts.entry(word).or_default();
            match slot.iter_mut().find(|(t, _)| *t == tag) {
                Some((_, c)) => *c += count,
                None => slot.push((tag, count)),
            }
        }
        let mut entries = FxHashMap::default();
        for (word, mut tags) in counts {
            let total: u64 = tags.iter().map(|(_, c)| c).sum();
            if total == 0 {
                continue;
            }
            tags.sort_by_key(|(t, _)| *t);
            let dist = tags.into_iter().map(|(t, c)| (t, c as f64 / total as f64)).collect();
            entries.insert(word, dist);
        }
        Ok(PosLexicon { entries })
    }

    pub fn lookup(&self, word: &str) -> Option<&[(PosTag, f64)]> {
        self.entries.get(word).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn load_pos_lexicon(path: &Path) -> Result<PosLexicon, ResourceError> {
    PosLexicon::parse(&path.display().to_string(), &read_file(path)?)
}

/// Sense-ordered synonyms keyed by `(word, tag)`. Multi-word and
/// non-alphabetic synonyms are skipped at load.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SynonymDb {
    entries: FxHashMap<(String, PosTag), Vec<String>>,
}

impl SynonymDb {
    pub fn parse(source: &str, text: &str) -> Result<Self, ResourceError> {
        let mut entries: FxHashMap<(String, PosTag), Vec<String>> = FxHashMap::default();
        for (line_no, line) in content_lines(text) {
            let cols = columns(source, line_no, line, 3)?;
            let tag = PosTag::from_code(cols[1])
                .ok_or_else(|| ResourceError::malformed(source, line_no, format!("unknown tag {:?}", cols[1])))?;
            let word = cols[0].to_lowercase();
            let synonym = cols[2].to_lowercase();
            if word.is_empty() {
                return Err(ResourceError::malformed(source, line_no, "empty word"));
            }
            if synonym == word || !is_alphabetic_word(&synonym) {
                continue;
            }
            let list = entries.entry((word, tag)).or_default();
            if !list.contains(&synonym) {
                list.push(synonym);
            }
        }
        Ok(SynonymDb { entries })
    }

    pub fn lookup(&self, word: &str, tag: PosTag) -> &[String] {
        self.entries
            .get(&(word.to_string(), tag))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn load_synonyms(path: &Path) -> Result<SynonymDb, ResourceError> {
    SynonymDb::parse(&path.display().to_string(), &read_file(path)?)
}

/// Simile metaphors (`wise` -> `owl` from "as wise as an owl").
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SimileDb {
    entries: FxHashMap<String, Vec<String>>,
}

impl SimileDb {
    pub fn parse(source: &str, text: &str) -> Result<Self, ResourceError> {
        let mut entries: FxHashMap<String, Vec<String>> = FxHashMap::default();
        for (line_no, line) in content_lines(text) {
            let cols = columns(source, line_no, line, 2)?;
            let word = cols[0].to_lowercase();
            let metaphor = cols[1].to_lowercase();
            if word.is_empty() {
                return Err(ResourceError::malformed(source, line_no, "empty word"));
            }
            if metaphor == word || !is_alphabetic_word(&metaphor) {
                continue;
            }
            let list = entries.entry(word).or_default();
            if !list.contains(&metaphor) {
                list.push(metaphor);
            }
        }
        Ok(SimileDb { entries })
    }

    pub fn lookup(&self, stem: &str) -> &[String] {
        self.entries.get(stem).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Looks the word up as is, then with an adverbial `-ly` stripped
    /// (`wisely` -> `wise`, `happily` -> `happy`).
    pub fn lookup_stemmed(&self, word: &str) -> &[String] {
        let direct = self.lookup(word);
        if !direct.is_empty() {
            return direct;
        }
        if let Some(stem) = word.strip_suffix("ily") {
            let hit = self.lookup(&format!("{stem}y"));
            if !hit.is_empty() {
                return hit;
            }
        }
        if let Some(stem) = word.strip_suffix("ly") {
            return self.lookup(stem);
        }
        &[]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn load_similes(path: &Path) -> Result<SimileDb, ResourceError> {
    SimileDb::parse(&path.display().to_string(), &read_file(path)?)
}
