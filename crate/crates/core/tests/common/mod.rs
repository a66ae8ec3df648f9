//! Shared fixtures and independent reference implementations.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};
use std::path::PathBuf;
use std::sync::{Arc, OnceLock};

use blendsmith::pipeline::{RawCandidate, SyllableUnit, TaggedWord};
use blendsmith::ranking::PairwisePreference;
use blendsmith::{Candidate, FeatureScores, PosTag, ResourceStore};
use rand::Rng;

pub const EXAMPLE: &str = "Creating an application to split expense wisely";

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/resources/en"))
}

pub fn fixture_store() -> &'static ResourceStore {
    static STORE: OnceLock<ResourceStore> = OnceLock::new();
    STORE.get_or_init(|| ResourceStore::load_dir(fixture_dir()).expect("fixture resources load"))
}

/// Candidate built from unit texts, each unit from its own root.
pub fn candidate(units: &[&str], appeal: f64) -> Candidate {
    let syllables = units
        .iter()
        .map(|u| {
            Arc::new(SyllableUnit {
                text: u.to_string(),
                tag: PosTag::Noun,
                parent: Arc::new(TaggedWord::root(*u, PosTag::Noun)),
                index: 0,
                pieces: vec![u.to_string()],
            })
        })
        .collect();
    Candidate {
        raw: RawCandidate::new(syllables),
        scores: FeatureScores {
            readability_raw: 0.0,
            pronounceability_raw: 0.0,
            memorability: 0.0,
            usage_weighted: None,
            readability: 0.0,
            pronounceability: 0.0,
            uniqueness: 0.0,
        },
        appeal,
    }
}

/// Best coverage over every segmentation, enumerated recursively.
pub fn memorability_brute(name: &str, dict: &HashSet<String>) -> f64 {
    fn best(s: &str, dict: &HashSet<String>) -> usize {
        if s.is_empty() {
            return 0;
        }
        // Either the first character is uncovered, or a word starts here.
        let mut b = best(&s[1..], dict);
        for end in 3..=s.len() {
            if dict.contains(&s[..end]) {
                b = b.max(end + best(&s[end..], dict));
            }
        }
        b
    }
    if name.is_empty() {
        return 0.0;
    }
    best(name, dict) as f64 / name.len() as f64
}

/// Literal simulation of the update rule over a shrinking list.
pub fn diversify_brute(items: &[(String, Vec<String>, f64)], iterations: usize) -> Vec<String> {
    let mut pool: Vec<(String, Vec<String>, f64)> = items.to_vec();
    let mut picks = Vec::new();
    for _ in 0..iterations {
        if pool.is_empty() {
            break;
        }
        let mut best = 0;
        for i in 1..pool.len() {
            let (a, b) = (&pool[i], &pool[best]);
            if a.2 > b.2 || (a.2 == b.2 && a.0 < b.0) {
                best = i;
            }
        }
        let (name, sylls, _) = pool.remove(best);
        let chosen: BTreeSet<&String> = sylls.iter().collect();
        for (_, s, a) in pool.iter_mut() {
            let mine: BTreeSet<&String> = s.iter().collect();
            let m = chosen.intersection(&mine).count();
            if m > 0 {
                let k = s.len();
                *a *= 1.0 / (m * k) as f64;
            }
        }
        picks.push(name);
    }
    picks
}

/// Tau-a by looking up both ranks of every unordered item pair.
pub fn kendall_brute(a: &[usize], b: &[usize]) -> f64 {
    let rank = |order: &[usize], item: usize| order.iter().position(|&x| x == item).unwrap();
    let items: Vec<usize> = a.to_vec();
    let (mut c, mut d) = (0i64, 0i64);
    for x in 0..items.len() {
        for y in 0..items.len() {
            if x >= y {
                continue;
            }
            let (p, q) = (items[x], items[y]);
            let sa = (rank(a, p) as i64 - rank(a, q) as i64).signum();
            let sb = (rank(b, p) as i64 - rank(b, q) as i64).signum();
            if sa == sb {
                c += 1;
            } else {
                d += 1;
            }
        }
    }
    let n = items.len() as f64;
    (c - d) as f64 / (n * (n - 1.0) / 2.0)
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

fn dot(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Pairs of uniform random feature vectors labelled by `truth`.
pub fn synthetic_preferences(truth: [f64; 4], count: usize, rng: &mut impl Rng) -> Vec<PairwisePreference> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let a: [f64; 4] = std::array::from_fn(|_| rng.random::<f64>());
        let b: [f64; 4] = std::array::from_fn(|_| rng.random::<f64>());
        let (sa, sb) = (dot(&truth, &a), dot(&truth, &b));
        if sa == sb {
            continue;
        }
        out.push(if sa > sb {
            PairwisePreference { winner: a, loser: b }
        } else {
            PairwisePreference { winner: b, loser: a }
        });
    }
    out
}

/// Fraction of pairs on which `w` orders the two vectors as `truth` does.
pub fn agreement_with(truth: [f64; 4], w: [f64; 4], pairs: &[PairwisePreference]) -> f64 {
    let hits = pairs
        .iter()
        .filter(|p| {
            let t = dot(&truth, &p.winner) - dot(&truth, &p.loser);
            let f = dot(&w, &p.winner) - dot(&w, &p.loser);
            t.signum() == f.signum()
        })
        .count();
    hits as f64 / pairs.len() as f64
}
