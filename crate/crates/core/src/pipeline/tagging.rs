use std::collections::HashSet;

use super::TaggedWord;
use crate::resources::{PosLexicon, PosTag};

/// Fallback tag for words the lexicon does not know.
pub fn suffix_tag(word: &str) -> PosTag {
    if word.ends_with("ly") {
        PosTag::Adverb
    } else if word.ends_with("ing") || word.ends_with("ate") {
        PosTag::Verb
    } else if word.ends_with("ous") || word.ends_with("ful") || word.ends_with("ive") {
        PosTag::Adjective
    } else {
        PosTag::Noun
    }
}

fn lexicon_tag(tags: &[(PosTag, f64)]) -> Option<PosTag> {
    // Highest frequency wins; on ties the earlier tag in PosTag order wins.
    tags.iter()
        .copied()
        .fold(None, |best: Option<(PosTag, f64)>, (tag, freq)| match best {
            Some((bt, bf)) if bf > freq || (bf == freq && bt < tag) => Some((bt, bf)),
            _ => Some((tag, freq)),
        })
        .map(|(t, _)| t)
}

/// Tags each root with its most frequent lexicon tag, falling back to suffix
/// rules. Words tagged `Other` are dropped; repeats collapse.
pub fn tag_pos(roots: &[String], lexicon: &PosLexicon) -> Vec<TaggedWord> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for word in roots {
        let tag = lexicon
            .lookup(word)
            .and_then(lexicon_tag)
            .unwrap_or_else(|| suffix_tag(word));
        if !tag.is_blendable() {
            continue;
        }
        if seen.insert((word.clone(), tag)) {
            out.push(TaggedWord::root(word.clone(), tag));
        }
    }
    out
}
