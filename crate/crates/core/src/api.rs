//! Request/response types and the two top-level operations.
//!
//! [`generate`] runs the full pipeline for a description. [`rerank`] takes
//! names from an earlier response and reorders them under new weights
//! without regenerating anything; every score it needs travels with the
//! names.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::RequestError;
use crate::pipeline::{generate_candidates, PipelineOptions};
use crate::ranking::{self, diversify_order, DiversityItem, DEFAULT_ITERATIONS};
use crate::resources::ResourceStore;
use crate::scoring::{appeal_of, score_candidates, AppealWeights, Candidate};

fn default_top_k() -> usize {
    30
}

fn default_true() -> bool {
    true
}

fn default_iterations() -> usize {
    DEFAULT_ITERATIONS
}

fn default_max_per_root() -> usize {
    5
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenerationRequest {
    pub description: String,
    #[serde(default = "default_top_k")]
    pub top_k: usize,
    #[serde(default = "default_true")]
    pub diversify: bool,
    #[serde(default = "default_iterations")]
    pub iterations: usize,
    #[serde(default)]
    pub weights: Option<AppealWeights>,
    #[serde(default = "default_max_per_root")]
    pub max_per_root: usize,
    /// Keep only this many top-ranked candidates before diversifying.
    #[serde(default)]
    pub max_candidates: Option<usize>,
    /// Report wall-clock time in `elapsed_ms`; left at 0 otherwise so that
    /// identical requests produce identical responses.
    #[serde(default)]
    pub include_timing: bool,
}

impl GenerationRequest {
    pub fn new(description: impl Into<String>) -> Self {
        GenerationRequest {
            description: description.into(),
            top_k: default_top_k(),
            diversify: true,
            iterations: default_iterations(),
            weights: None,
            max_per_root: default_max_per_root(),
            max_candidates: None,
            include_timing: false,
        }
    }

    fn validate(&self) -> Result<(), RequestError> {
        if self.top_k == 0 {
            return Err(RequestError::Invalid("top_k must be at least 1".into()));
        }
        if self.iterations == 0 {
            return Err(RequestError::Invalid("iterations must be at least 1".into()));
        }
        if self.max_candidates == Some(0) {
            return Err(RequestError::Invalid("max_candidates must be at least 1".into()));
        }
        if let Some(w) = &self.weights {
            if !w.is_finite() {
                return Err(RequestError::Invalid("weights must be finite".into()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NameEntry {
    pub display: String,
    pub appeal: f64,
    pub readability: f64,
    pub pronounceability: f64,
    pub memorability: f64,
    pub uniqueness: f64,
    /// Constituent units, lowercase. Their concatenation is the name.
    pub syllables: Vec<String>,
    /// Description words the units derive from.
    pub sources: Vec<String>,
}

impl NameEntry {
    pub fn from_candidate(c: &Candidate) -> Self {
        NameEntry {
            display: c.raw.display(),
            appeal: c.appeal,
            readability: c.scores.readability,
            pronounceability: c.scores.pronounceability,
            memorability: c.scores.memorability,
            uniqueness: c.scores.uniqueness,
            syllables: c.raw.unit_texts(),
            sources: c.raw.sources(),
        }
    }

    /// Lowercase name text, the tie-breaking key.
    pub fn text(&self) -> String {
        self.syllables.concat()
    }

    pub fn features(&self) -> [f64; 4] {
        [
            self.readability,
            self.pronounceability,
            self.memorability,
            self.uniqueness,
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationResponse {
    pub names: Vec<NameEntry>,
    pub candidate_count: usize,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RerankRequest {
    pub names: Vec<NameEntry>,
    pub weights: AppealWeights,
    #[serde(default = "default_true")]
    pub diversify: bool,
    #[serde(default = "default_iterations")]
    pub iterations: usize,
    /// Defaults to the number of names supplied.
    #[serde(default)]
    pub top_k: Option<usize>,
    #[serde(default)]
    pub include_timing: bool,
}

/// Picks output indices: diversified picks or the plain appeal order.
fn select(items: &[DiversityItem<'_>], diversify: bool, iterations: usize, top_k: usize) -> Vec<usize> {
    if diversify {
        let mut picks = diversify_order(items, iterations).picks;
        picks.truncate(top_k);
        picks
    } else {
        let mut idx: Vec<usize> = (0..items.len()).collect();
        idx.sort_by(|&a, &b| ranking::appeal_order(items[a].appeal, items[a].name, items[b].appeal, items[b].name));
        idx.truncate(top_k);
        idx
    }
}

pub fn generate(store: &ResourceStore, request: &GenerationRequest) -> Result<GenerationResponse, RequestError> {
    let start = Instant::now();
    request.validate()?;
    let options = PipelineOptions {
        max_per_root: request.max_per_root,
        ..PipelineOptions::default()
    };
    let raw = generate_candidates(&request.description, store, &options)?;
    let candidate_count = raw.len();
    let weights = request.weights.unwrap_or_default();
    let mut ranked = ranking::rank_by_appeal(score_candidates(raw, store, &weights)?);
    if let Some(cap) = request.max_candidates {
        ranked.truncate(cap);
    }
    let items: Vec<DiversityItem<'_>> = ranked.iter().map(DiversityItem::from_candidate).collect();
    let chosen = select(&items, request.diversify, request.iterations, request.top_k);
    let names = chosen.iter().map(|&i| NameEntry::from_candidate(&ranked[i])).collect();
    Ok(GenerationResponse {
        names,
        candidate_count,
        elapsed_ms: if request.include_timing {
            start.elapsed().as_millis() as u64
        } else {
            0
        },
    })
}

pub fn rerank(request: &RerankRequest) -> Result<GenerationResponse, RequestError> {
    let start = Instant::now();
    if !request.weights.is_finite() {
        return Err(RequestError::Invalid("weights must be finite".into()));
    }
    if request.iterations == 0 || request.top_k == Some(0) {
        return Err(RequestError::Invalid("iterations and top_k must be at least 1".into()));
    }
    let texts: Vec<String> = request.names.iter().map(NameEntry::text).collect();
    let appeals: Vec<f64> = request
        .names
        .iter()
        .map(|n| appeal_of(n.features(), &request.weights))
        .collect();
    let items: Vec<DiversityItem<'_>> = request
        .names
        .iter()
        .zip(&texts)
        .zip(&appeals)
        .map(|((n, text), &appeal)| DiversityItem {
            name: text,
            syllables: n.syllables.iter().map(String::as_str).collect(),
            appeal,
        })
        .collect();
    let top_k = request.top_k.unwrap_or(request.names.len());
    let chosen = select(&items, request.diversify, request.iterations, top_k);
    let names = chosen
        .iter()
        .map(|&i| NameEntry {
            appeal: appeals[i],
            ..request.names[i].clone()
        })
        .collect();
    Ok(GenerationResponse {
        names,
        candidate_count: request.names.len(),
        elapsed_ms: if request.include_timing {
            start.elapsed().as_millis() as u64
        } else {
            0
        },
    })
}
