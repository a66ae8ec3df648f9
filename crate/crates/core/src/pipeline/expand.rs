use std::collections::HashSet;

use super::{Origin, TaggedWord};
use crate::resources::{PosTag, SimileDb, SynonymDb};

/// Builds the related-word list: each root, then up to `max_per_root` of
/// its synonyms, then simile metaphors for adjective and adverb roots.
/// Related words inherit the root's tag; the first `(surface, tag)` wins.
pub fn expand_related(
    roots: &[TaggedWord],
    synonyms: &SynonymDb,
    similes: &SimileDb,
    max_per_root: usize,
) -> Vec<TaggedWord> {
    let mut seen: HashSet<(String, PosTag)> = HashSet::new();
    let mut out = Vec::new();
    let mut push = |w: TaggedWord, out: &mut Vec<TaggedWord>| {
        if seen.insert((w.surface.clone(), w.tag)) {
            out.push(w);
        }
    };
    for root in roots {
        push(root.clone(), &mut out);
        for syn in synonyms.lookup(&root.surface, root.tag).iter().take(max_per_root) {
            push(TaggedWord::related(syn.clone(), Origin::Synonym, root), &mut out);
        }
        if matches!(root.tag, PosTag::Adjective | PosTag::Adverb) {
            for m in similes.lookup_stemmed(&root.surface) {
                push(TaggedWord::related(m.clone(), Origin::Metaphor, root), &mut out);
            }
        }
    }
    out
}
