//! From description text to the raw candidate set.
//!
//! Stages run in order: [`tokenize`], [`extract_roots`], [`tag_pos`],
//! [`expand_related`], [`build_syllable_pool`] and [`generate_blends`].
//! Every stage is a pure function of its inputs and the resource store.

mod blend;
mod expand;
mod rules;
mod syllables;
mod tagging;
mod tokenize;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use blend::{generate_blends, BlendSpec, MAX_NAME_LEN};
pub use expand::expand_related;
pub use rules::{AllowedRules, RuleTable, TagPair};
pub use syllables::{build_syllable_pool, syllabify};
pub use tagging::{suffix_tag, tag_pos};
pub use tokenize::{extract_roots, tokenize};

use crate::error::PipelineError;
use crate::resources::{PosTag, ResourceStore};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Origin {
    Root,
    Synonym,
    Metaphor,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TaggedWord {
    pub surface: String,
    pub tag: PosTag,
    pub origin: Origin,
    /// The description word this one derives from; equals `surface` for roots.
    pub root: String,
}

impl TaggedWord {
    pub fn root(surface: impl Into<String>, tag: PosTag) -> Self {
        let surface = surface.into();
        TaggedWord {
            root: surface.clone(),
            surface,
            tag,
            origin: Origin::Root,
        }
    }

    pub fn related(surface: impl Into<String>, origin: Origin, parent: &TaggedWord) -> Self {
        TaggedWord {
            surface: surface.into(),
            tag: parent.tag,
            origin,
            root: parent.root.clone(),
        }
    }
}

/// A blendable piece of a word: one syllable, or a run of consecutive
/// syllables that starts or ends the word (a composite unit).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SyllableUnit {
    pub text: String,
    pub tag: PosTag,
    pub parent: Arc<TaggedWord>,
    /// Index of the first syllable this unit covers within its parent.
    pub index: usize,
    /// The syllables covered, in order; one element for a plain syllable.
    pub pieces: Vec<String>,
}

impl SyllableUnit {
    pub fn is_composite(&self) -> bool {
        self.pieces.len() > 1
    }

    pub fn root(&self) -> &str {
        &self.parent.root
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawCandidate {
    pub syllables: Vec<Arc<SyllableUnit>>,
    pub text: String,
}

impl RawCandidate {
    pub fn new(syllables: Vec<Arc<SyllableUnit>>) -> Self {
        let text = syllables.iter().map(|s| s.text.as_str()).collect();
        RawCandidate { syllables, text }
    }

    /// CamelCase with a capital at every syllable boundary (`ExPenseBreak`).
    pub fn display(&self) -> String {
        let mut out = String::with_capacity(self.text.len());
        for piece in self.syllables.iter().flat_map(|u| u.pieces.iter()) {
            let mut chars = piece.chars();
            if let Some(first) = chars.next() {
                out.extend(first.to_uppercase());
                out.push_str(chars.as_str());
            }
        }
        out
    }

    /// Texts of the constituent units, as used for diversification.
    pub fn unit_texts(&self) -> Vec<String> {
        self.syllables.iter().map(|u| u.text.clone()).collect()
    }

    /// Root words the constituents derive from, in order, without repeats.
    pub fn sources(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for u in &self.syllables {
            if !out.iter().any(|r| r == u.root()) {
                out.push(u.root().to_string());
            }
        }
        out
    }
}

/// Knobs for one pipeline run.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineOptions {
    pub max_per_root: usize,
    pub rules: RuleTable,
    pub blend: BlendSpec,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            max_per_root: 5,
            rules: RuleTable::default(),
            blend: BlendSpec::default(),
        }
    }
}

/// Runs every stage and returns the candidates sorted by text.
pub fn generate_candidates(
    description: &str,
    store: &ResourceStore,
    options: &PipelineOptions,
) -> Result<Vec<RawCandidate>, PipelineError> {
    let tokens = tokenize(description)?;
    let roots = extract_roots(&tokens, store.stopwords())?;
    let tagged = tag_pos(&roots, store.pos_lexicon());
    if tagged.is_empty() {
        return Err(PipelineError::NoRoots);
    }
    let related = expand_related(&tagged, store.synonyms(), store.similes(), options.max_per_root);
    let pool = build_syllable_pool(&related, store.hyphenation());
    let allowed = options.rules.allowed_rules();
    generate_blends(&pool, &allowed, &options.blend)
}
