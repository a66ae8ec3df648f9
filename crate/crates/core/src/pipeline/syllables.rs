//! Knuth-Liang syllabification and the syllable pool.

use std::collections::HashSet;
use std::sync::Arc;

use super::{SyllableUnit, TaggedWord};
use crate::resources::{HyphenationPatterns, PosTag};

/// Splits a word into syllables with Liang's algorithm.
///
/// Every inter-letter gap of `.word.` takes the maximum weight of all
/// patterns matching around it; odd gaps become breaks, except within
/// `left_min` letters of the start or `right_min` letters of the end.
pub fn syllabify(word: &str, patterns: &HyphenationPatterns) -> Vec<String> {
    let word = word.to_ascii_lowercase();
    let n = word.len();
    if n < patterns.left_min + patterns.right_min || !word.is_ascii() {
        return vec![word];
    }
    let padded = format!(".{word}.");
    let bytes = padded.len();
    let mut levels = vec![0u8; bytes + 1];
    let max_len = patterns.max_len();
    for start in 0..bytes {
        for end in start + 1..=bytes.min(start + max_len) {
            if let Some(weights) = patterns.weights(&padded[start..end]) {
                for (offset, &w) in weights.iter().enumerate() {
                    let slot = &mut levels[start + offset];
                    *slot = (*slot).max(w);
                }
            }
        }
    }
    // Gap before word[i] is gap i + 1 of the padded string.
    let mut out = Vec::new();
    let mut last = 0;
    for i in patterns.left_min..=n - patterns.right_min {
        if i > 0 && i < n && levels[i + 1] % 2 == 1 {
            out.push(word[last..i].to_string());
            last = i;
        }
    }
    out.push(word[last..].to_string());
    out
}

/// Syllabifies every related word into blendable units.
///
/// Besides single syllables, each multi-syllable word contributes its runs
/// of two or more consecutive syllables that start or end the word
/// (including the whole word). Units are deduplicated on `(text, tag)`,
/// keeping the first.
pub fn build_syllable_pool(words: &[TaggedWord], patterns: &HyphenationPatterns) -> Vec<Arc<SyllableUnit>> {
    let mut seen: HashSet<(String, PosTag)> = HashSet::new();
    let mut pool = Vec::new();
    for word in words {
        let parent = Arc::new(word.clone());
        let sylls = syllabify(&word.surface, patterns);
        let n = sylls.len();
        let mut spans: Vec<(usize, usize)> = (0..n).map(|i| (i, i + 1)).collect();
        if n > 1 {
            spans.extend((2..=n).map(|end| (0, end)));
            spans.extend((1..n - 1).map(|start| (start, n)));
        }
        for (start, end) in spans {
            let pieces: Vec<String> = sylls[start..end].to_vec();
            let text = pieces.concat();
            if seen.insert((text.clone(), word.tag)) {
                pool.push(Arc::new(SyllableUnit {
                    text,
                    tag: word.tag,
                    parent: Arc::clone(&parent),
                    index: start,
                    pieces,
                }));
            }
        }
    }
    pool
}

#[cfg(test)]
mod tests {
    use super::*;

    fn patterns() -> HyphenationPatterns {
        // a handful of real US English patterns plus the application override
        HyphenationPatterns::parse("t", "LEFTMIN=2\nRIGHTMIN=2\n1tio\nap8p9lic\n1ca\nx1p\ne1at\n1ing\n").unwrap()
    }

    #[test]
    fn splits_example_words() {
        assert_eq!(syllabify("application", &patterns()), vec!["app", "li", "ca", "tion"]);
        assert_eq!(syllabify("creating", &patterns()), vec!["cre", "at", "ing"]);
        assert_eq!(syllabify("Expense", &patterns()), vec!["ex", "pense"]);
    }

    #[test]
    fn short_words_stay_whole() {
        assert_eq!(syllabify("ox", &patterns()), vec!["ox"]);
        assert_eq!(syllabify("owl", &patterns()), vec!["owl"]);
    }

    #[test]
    fn margins_forbid_edge_breaks() {
        let p = HyphenationPatterns::parse("t", "LEFTMIN=2\nRIGHTMIN=2\n1b\n1c\n1d\n1e\n").unwrap();
        assert_eq!(syllabify("abcde", &p), vec!["ab", "c", "de"]);
        let p = HyphenationPatterns::parse("t", "LEFTMIN=1\nRIGHTMIN=1\n1b\n1c\n1d\n1e\n").unwrap();
        assert_eq!(syllabify("abcde", &p), vec!["a", "b", "c", "d", "e"]);
    }

    #[test]
    fn even_weights_inhibit() {
        let p = HyphenationPatterns::parse("t", "LEFTMIN=1\nRIGHTMIN=1\nb1c\nab2c\n").unwrap();
        assert_eq!(syllabify("abcd", &p), vec!["abcd"]);
        assert_eq!(syllabify("xbcd", &p), vec!["xb", "cd"]);
    }

    #[test]
    fn pool_carries_tags_parents_and_composites() {
        let words = vec![
            TaggedWord::root("expense", PosTag::Noun),
            TaggedWord::root("owl", PosTag::Adverb),
        ];
        let pool = build_syllable_pool(&words, &patterns());
        let texts: Vec<(&str, PosTag)> = pool.iter().map(|u| (u.text.as_str(), u.tag)).collect();
        assert_eq!(
            texts,
            vec![
                ("ex", PosTag::Noun),
                ("pense", PosTag::Noun),
                ("expense", PosTag::Noun),
                ("owl", PosTag::Adverb)
            ]
        );
        assert!(pool[2].is_composite());
        assert_eq!(pool[2].pieces, vec!["ex", "pense"]);
        assert_eq!(pool[1].index, 1);
    }

    #[test]
    fn pool_dedupes_on_text_and_tag() {
        let words = vec![
            TaggedWord::root("split", PosTag::Verb),
            TaggedWord::related(
                "split",
                crate::pipeline::Origin::Synonym,
                &TaggedWord::root("rend", PosTag::Verb),
            ),
        ];
        let pool = build_syllable_pool(&words, &patterns());
        assert_eq!(pool.len(), 1);
        assert_eq!(pool[0].root(), "split");
    }
}
