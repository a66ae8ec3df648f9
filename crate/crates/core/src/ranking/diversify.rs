//! Greedy diversification by syllable overlap.
//!
//! After each pick `p`, every remaining name `n` that shares at least one
//! syllable text with `p` has its working appeal multiplied by
//! `1 / (m * k)`, where `m` is the number of distinct syllable texts shared
//! with `p` and `k` is the number of syllables in `n`. Names sharing nothing
//! are untouched. Picks leave the pool.

use crate::scoring::Candidate;

use super::appeal_order;

pub const DEFAULT_ITERATIONS: usize = 30;

#[derive(Debug, Clone, PartialEq)]
pub struct DiversityItem<'a> {
    pub name: &'a str,
    pub syllables: Vec<&'a str>,
    pub appeal: f64,
}

impl<'a> DiversityItem<'a> {
    pub fn from_candidate(c: &'a Candidate) -> Self {
        DiversityItem {
            name: c.text(),
            syllables: c.raw.syllables.iter().map(|u| u.text.as_str()).collect(),
            appeal: c.appeal,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiversitySelection {
    /// Input indices in pick order.
    pub picks: Vec<usize>,
    /// Working appeal of each pick at the moment it was chosen.
    pub pick_appeals: Vec<f64>,
    /// Working appeal of every input item after the last update.
    pub working_appeals: Vec<f64>,
}

impl DiversitySelection {
    pub fn picked<'c>(&self, candidates: &'c [Candidate]) -> Vec<&'c Candidate> {
        self.picks.iter().map(|&i| &candidates[i]).collect()
    }
}

/// Runs up to `iterations` pick-and-penalize rounds.
pub fn diversify_order(items: &[DiversityItem<'_>], iterations: usize) -> DiversitySelection {
    let mut working: Vec<f64> = items.iter().map(|i| i.appeal).collect();
    let mut alive = vec![true; items.len()];
    let mut picks = Vec::new();
    let mut pick_appeals = Vec::new();
    let mut shared: Vec<&str> = Vec::with_capacity(4);
    for _ in 0..iterations {
        let mut best: Option<usize> = None;
        for (i, item) in items.iter().enumerate() {
            if !alive[i] {
                continue;
            }
            best = match best {
                Some(b) if appeal_order(working[b], items[b].name, working[i], item.name).is_le() => Some(b),
                _ => Some(i),
            };
        }
        let Some(pick) = best else { break };
        alive[pick] = false;
        picks.push(pick);
        pick_appeals.push(working[pick]);

        shared.clear();
        for &s in &items[pick].syllables {
            if !shared.contains(&s) {
                shared.push(s);
            }
        }
        for (i, item) in items.iter().enumerate() {
            if !alive[i] {
                continue;
            }
            let common = shared.iter().filter(|s| item.syllables.contains(s)).count();
            if common > 0 {
                let k = item.syllables.len();
                working[i] *= 1.0 / (common * k) as f64;
            }
        }
    }
    DiversitySelection {
        picks,
        pick_appeals,
        working_appeals: working,
    }
}

pub fn diversify_select(candidates: &[Candidate], iterations: usize) -> DiversitySelection {
    let items: Vec<DiversityItem<'_>> = candidates.iter().map(DiversityItem::from_candidate).collect();
    diversify_order(&items, iterations)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn item<'a>(name: &'a str, syllables: &[&'a str], appeal: f64) -> DiversityItem<'a> {
        DiversityItem {
            name,
            syllables: syllables.to_vec(),
            appeal,
        }
    }

    #[test]
    fn shared_syllable_is_penalized() {
        let items = vec![
            item("abcd", &["ab", "cd"], 5.0),
            item("abef", &["ab", "ef"], 4.0),
            item("ghij", &["gh", "ij"], 3.0),
        ];
        let sel = diversify_order(&items, 2);
        assert_eq!(sel.picks, vec![0, 2]);
        assert_eq!(sel.working_appeals[1], 2.0);
        assert_eq!(sel.pick_appeals, vec![5.0, 3.0]);
    }

    #[test]
    fn single_candidate_exhausts() {
        let items = vec![item("ab", &["ab"], 1.0)];
        assert_eq!(diversify_order(&items, 30).picks, vec![0]);
    }

    #[test]
    fn disjoint_syllables_follow_plain_order() {
        let items = vec![
            item("c", &["c"], 1.0),
            item("a", &["a"], 3.0),
            item("b", &["b"], 2.0),
            item("d", &["d"], 2.0),
        ];
        assert_eq!(diversify_order(&items, 10).picks, vec![1, 2, 3, 0]);
    }

    #[test]
    fn two_shared_syllables_divide_by_m_times_k() {
        let items = vec![
            item("abcdef", &["ab", "cd", "ef"], 9.0),
            item("cdabxy", &["cd", "ab", "xy"], 6.0),
        ];
        let sel = diversify_order(&items, 1);
        assert_eq!(sel.working_appeals[1], 6.0 * (1.0 / 6.0));
    }
}
