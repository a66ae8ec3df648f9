use std::sync::Arc;

use rustc_hash::FxHashSet;

use super::{AllowedRules, RawCandidate, SyllableUnit};
use crate::error::PipelineError;

/// Names longer than this are not generated.
pub const MAX_NAME_LEN: usize = 15;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlendSpec {
    pub two_units: bool,
    pub three_units: bool,
    pub max_len: usize,
    /// Upper bound on candidates kept after scoring and ranking. Enumeration
    /// itself is always exhaustive; callers truncate the ranked list.
    pub cap: Option<usize>,
}

impl Default for BlendSpec {
    fn default() -> Self {
        BlendSpec {
            two_units: true,
            three_units: true,
            max_len: MAX_NAME_LEN,
            cap: None,
        }
    }
}

/// Enumerates ordered arrangements of two or three distinct pool units.
///
/// A blend is kept when every unordered pair of its unit tags is an allowed
/// rule, no two units come from the same root word and the joined text fits
/// `spec.max_len`. Candidates are deduplicated on text (first arrangement
/// wins) and returned sorted by text.
pub fn generate_blends(
    pool: &[Arc<SyllableUnit>],
    rules: &AllowedRules,
    spec: &BlendSpec,
) -> Result<Vec<RawCandidate>, PipelineError> {
    let n = pool.len();
    let lens: Vec<usize> = pool.iter().map(|u| u.text.len()).collect();
    let mut compatible = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            compatible[i * n + j] =
                i != j && pool[i].root() != pool[j].root() && rules.allows(pool[i].tag, pool[j].tag);
        }
    }
    let ok = |i: usize, j: usize| compatible[i * n + j];

    let mut seen: FxHashSet<String> = FxHashSet::default();
    let mut out: Vec<RawCandidate> = Vec::new();
    let mut buf = String::with_capacity(spec.max_len);
    let mut emit = |units: &[usize], buf: &mut String| {
        buf.clear();
        for &u in units {
            buf.push_str(&pool[u].text);
        }
        if !seen.contains(buf.as_str()) {
            seen.insert(buf.clone());
            out.push(RawCandidate {
                syllables: units.iter().map(|&u| Arc::clone(&pool[u])).collect(),
                text: buf.clone(),
            });
        }
    };

    if spec.two_units {
        for i in 0..n {
            for j in 0..n {
                if ok(i, j) && lens[i] + lens[j] <= spec.max_len {
                    emit(&[i, j], &mut buf);
                }
            }
        }
    }
    if spec.three_units {
        for i in 0..n {
            for j in 0..n {
                if !ok(i, j) || lens[i] + lens[j] >= spec.max_len {
                    continue;
                }
                for k in 0..n {
                    if ok(i, k) && ok(j, k) && lens[i] + lens[j] + lens[k] <= spec.max_len {
                        emit(&[i, j, k], &mut buf);
                    }
                }
            }
        }
    }
    if out.is_empty() {
        return Err(PipelineError::NoCandidates);
    }
    out.sort_by(|a, b| a.text.cmp(&b.text));
    Ok(out)
}
