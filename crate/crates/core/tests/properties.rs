mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use blendsmith::api::{GenerationResponse, NameEntry};
use blendsmith::pipeline::{generate_blends, syllabify, BlendSpec, RuleTable, SyllableUnit, TaggedWord};
use blendsmith::ranking::{
    diversify_select, fit_weights, kendall_tau, ndcg_from_relevances, pairwise_agreement, rank_by_appeal, FitConfig,
    PairwisePreference,
};
use blendsmith::resources::{FrequencyDictionary, NgramTable, UsageStore};
use blendsmith::scoring::{appeal_of, readability_from_syllables, uniqueness};
use blendsmith::{AppealWeights, FeatureScores, PosTag};
use proptest::prelude::*;

use common::*;

fn tag() -> impl Strategy<Value = PosTag> {
    prop_oneof![
        Just(PosTag::Noun),
        Just(PosTag::Verb),
        Just(PosTag::Adjective),
        Just(PosTag::Adverb)
    ]
}

/// Units over a small alphabet so that text collisions happen.
fn pool() -> impl Strategy<Value = Vec<Arc<SyllableUnit>>> {
    prop::collection::vec(("[a-c]{1,4}", tag(), 0..4usize), 0..12).prop_map(|raw| {
        let mut seen = BTreeSet::new();
        raw.into_iter()
            .filter(|(text, tag, _)| seen.insert((text.clone(), *tag)))
            .map(|(text, tag, root)| {
                Arc::new(SyllableUnit {
                    text: text.clone(),
                    tag,
                    parent: Arc::new(TaggedWord::root(format!("root{root}"), tag)),
                    index: 0,
                    pieces: vec![text],
                })
            })
            .collect()
    })
}

fn features() -> impl Strategy<Value = [f64; 4]> {
    prop::array::uniform4(0.0..=1.0f64)
}

fn weights() -> impl Strategy<Value = [f64; 4]> {
    prop::array::uniform4(-5.0..5.0f64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn syllables_concatenate_to_word(word in "[a-z]{1,20}") {
        let pieces = syllabify(&word, fixture_store().hyphenation());
        prop_assert_eq!(pieces.concat(), word);
        prop_assert!(pieces.iter().all(|p| !p.is_empty()));
    }

    #[test]
    fn readability_strictly_decreases_per_syllable(k in 1usize..20) {
        let diff = readability_from_syllables(k) - readability_from_syllables(k + 1);
        prop_assert!((diff - 84.6).abs() < 1e-9);
    }

    #[test]
    fn blends_respect_rules_roots_and_length(pool in pool(), threshold in 0.0..50.0f64) {
        let allowed = RuleTable::default().with_threshold(threshold).allowed_rules();
        let spec = BlendSpec { max_len: 8, ..BlendSpec::default() };
        let blends = generate_blends(&pool, &allowed, &spec).unwrap_or_default();
        let mut texts = BTreeSet::new();
        for c in &blends {
            prop_assert!(c.syllables.len() == 2 || c.syllables.len() == 3);
            prop_assert!(c.text.len() <= 8);
            prop_assert!(texts.insert(c.text.clone()), "duplicate text {}", c.text);
            for (i, a) in c.syllables.iter().enumerate() {
                for b in &c.syllables[i + 1..] {
                    prop_assert!(allowed.allows(a.tag, b.tag));
                    prop_assert_ne!(a.root(), b.root());
                }
            }
        }
        let sorted: Vec<&String> = texts.iter().collect();
        let order: Vec<&String> = blends.iter().map(|c| &c.text).collect();
        prop_assert_eq!(order, sorted);
    }

    #[test]
    fn two_unit_blends_match_double_loop(pool in pool()) {
        let allowed = RuleTable::default().allowed_rules();
        let spec = BlendSpec { two_units: true, three_units: false, max_len: 6, cap: None };
        let got: BTreeSet<String> = generate_blends(&pool, &allowed, &spec)
            .unwrap_or_default()
            .into_iter()
            .map(|c| c.text)
            .collect();
        let mut want = BTreeSet::new();
        for (i, a) in pool.iter().enumerate() {
            for (j, b) in pool.iter().enumerate() {
                let text = format!("{}{}", a.text, b.text);
                if i != j && a.root() != b.root() && allowed.allows(a.tag, b.tag) && text.len() <= 6 {
                    want.insert(text);
                }
            }
        }
        prop_assert_eq!(got, want);
    }

    #[test]
    fn appeal_is_linear(s in features(), w1 in weights(), w2 in weights(), c in -10.0..10.0f64) {
        let a = |w: [f64; 4]| appeal_of(s, &AppealWeights::from_array(w));
        let sum: [f64; 4] = std::array::from_fn(|i| w1[i] + w2[i]);
        let scaled: [f64; 4] = std::array::from_fn(|i| c * w1[i]);
        prop_assert!((a(sum) - (a(w1) + a(w2))).abs() < 1e-9);
        prop_assert!((a(scaled) - c * a(w1)).abs() < 1e-9);
    }

    #[test]
    fn ranking_invariant_under_weight_rescaling(
        rows in prop::collection::vec(features(), 1..30),
        w in prop::array::uniform4(0.0..5.0f64),
        c in prop_oneof![Just(2.0), Just(0.5), Just(4.0), Just(0.25)],
    ) {
        // Power-of-two factors scale every product exactly.
        let order = |w: [f64; 4]| -> Vec<String> {
            let cands = rows
                .iter()
                .enumerate()
                .map(|(i, f)| candidate(&[format!("n{i:02}").as_str()], appeal_of(*f, &AppealWeights::from_array(w))))
                .collect();
            rank_by_appeal(cands).iter().map(|c| c.text().to_string()).collect()
        };
        prop_assert_eq!(order(w), order(w.map(|x| x * c)));
    }

    #[test]
    fn normalized_scores_stay_in_unit_interval(name in "[a-z]{2,15}") {
        let s = FeatureScores::compute(&name, fixture_store()).unwrap();
        for v in [s.readability, s.pronounceability, s.memorability, s.uniqueness] {
            prop_assert!((0.0..=1.0).contains(&v), "{} out of range for {}", v, name);
        }
    }

    #[test]
    fn absent_usage_means_full_uniqueness(name in "[a-z]{1,12}q[a-z]{0,3}") {
        let store = fixture_store();
        if store.usage().series(&name).is_none() {
            prop_assert_eq!(uniqueness(&name, store.usage(), store.norm_stats()), 1.0);
        }
        let empty = UsageStore::from_series(Vec::new());
        prop_assert_eq!(uniqueness(&name, &empty, store.norm_stats()), 1.0);
    }

    #[test]
    fn diversification_never_raises_appeal(
        rows in prop::collection::vec((prop::collection::vec(0..6usize, 1..4), 0.0..10.0f64), 1..40),
        iterations in 1usize..40,
    ) {
        let mut seen = BTreeSet::new();
        let cands: Vec<_> = rows
            .iter()
            .filter_map(|(units, appeal)| {
                let texts: Vec<String> = units.iter().map(|u| format!("s{u}")).collect();
                seen.insert(texts.concat()).then(|| {
                    candidate(&texts.iter().map(String::as_str).collect::<Vec<_>>(), *appeal)
                })
            })
            .collect();
        let sel = diversify_select(&cands, iterations);
        for (c, w) in cands.iter().zip(&sel.working_appeals) {
            prop_assert!(*w <= c.appeal);
        }
        for pair in sel.pick_appeals.windows(2) {
            prop_assert!(pair[1] <= pair[0]);
        }
        let first = rank_by_appeal(cands.clone())[0].text().to_string();
        prop_assert_eq!(cands[sel.picks[0]].text(), first.as_str());
        let distinct: BTreeSet<usize> = sel.picks.iter().copied().collect();
        prop_assert_eq!(distinct.len(), sel.picks.len());
        prop_assert_eq!(sel.picks.len(), iterations.min(cands.len()));
    }

    #[test]
    fn ndcg_ignores_order_among_equal_relevances(
        rel in prop::collection::vec(0u8..4, 1..12),
        seed in any::<u64>(),
    ) {
        let rel: Vec<f64> = rel.into_iter().map(|r| f64::from(r) * 0.5).collect();
        let base = ndcg_from_relevances(&rel);
        // Swap two positions holding the same relevance.
        let mut permuted = rel.clone();
        let n = rel.len();
        let i = (seed as usize) % n;
        if let Some(j) = (0..n).find(|&j| j != i && rel[j] == rel[i]) {
            permuted.swap(i, j);
        }
        prop_assert!((ndcg_from_relevances(&permuted) - base).abs() < 1e-12);
        prop_assert!((0.0..=1.0 + 1e-12).contains(&base));
        let mut ideal = rel.clone();
        ideal.sort_by(|a, b| b.total_cmp(a));
        prop_assert!((ndcg_from_relevances(&ideal) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fit_agreement_invariant_under_rescaling(
        truth in prop::array::uniform4(0.1..3.0f64),
        seed in any::<u64>(),
        scale in prop_oneof![Just(0.01), Just(3.0), Just(250.0)],
    ) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let prefs = synthetic_preferences(truth, 60, &mut rng);
        let scaled: Vec<PairwisePreference> = prefs
            .iter()
            .map(|p| PairwisePreference { winner: p.winner.map(|x| x * scale), loser: p.loser.map(|x| x * scale) })
            .collect();
        let cfg = FitConfig { epochs: 50, ..FitConfig::default() };
        let a = fit_weights(&prefs, &cfg).unwrap();
        let b = fit_weights(&scaled, &cfg).unwrap();
        prop_assert!((pairwise_agreement(&a, &prefs) - pairwise_agreement(&b, &scaled)).abs() < 1e-9);
    }

    #[test]
    fn response_json_round_trips(
        rows in prop::collection::vec(("[a-z]{2,6}", "[a-z]{2,6}", features(), -10.0..10.0f64), 0..8),
        count in 0usize..100_000,
        elapsed in any::<u32>(),
    ) {
        let names = rows
            .into_iter()
            .map(|(a, b, f, appeal)| NameEntry {
                display: format!("{a}{b}"),
                appeal,
                readability: f[0],
                pronounceability: f[1],
                memorability: f[2],
                uniqueness: f[3],
                syllables: vec![a, b],
                sources: vec!["root".into()],
            })
            .collect();
        let resp = GenerationResponse { names, candidate_count: count, elapsed_ms: u64::from(elapsed) };
        let text = serde_json::to_string(&resp).unwrap();
        let back: GenerationResponse = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, resp);
    }

    #[test]
    fn ngram_totals_match_word_lengths(words in prop::collection::btree_set("[a-z]{1,9}", 1..30), order in 2usize..5) {
        let dict = FrequencyDictionary::from_words(&words);
        let table = NgramTable::build(&dict, order);
        let expected: usize = words.iter().map(|w| (w.len() + 1).saturating_sub(order)).sum();
        prop_assert_eq!(table.total(), expected as u64);
    }
}

#[test]
fn kendall_tau_extremes_up_to_six_items() {
    for n in 2..=6 {
        for p in all_permutations(n) {
            let rev: Vec<usize> = p.iter().rev().copied().collect();
            assert_eq!(kendall_tau(&p, &p).unwrap(), 1.0);
            assert_eq!(kendall_tau(&p, &rev).unwrap(), -1.0);
            assert_eq!(kendall_tau(&p, &rev).unwrap(), kendall_brute(&p, &rev));
        }
    }
}

#[test]
fn loading_twice_gives_identical_stores() {
    let a = blendsmith::ResourceStore::load_dir(fixture_dir()).unwrap();
    let b = blendsmith::ResourceStore::load_dir(fixture_dir()).unwrap();
    assert_eq!(a.checksums(), b.checksums());
    assert_eq!(a.norm_stats(), b.norm_stats());
    assert_eq!(a.checksums().len(), 7);
}
