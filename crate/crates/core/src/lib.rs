//! Brand-name generation from an entity description.
//!
//! The engine strips stopwords from a description, tags the remaining root
//! words, expands them with synonyms and simile metaphors, splits every word
//! into syllables with Liang hyphenation patterns and blends two or three
//! syllables from different roots into candidate names. Candidates are scored
//! on readability, pronounceability, memorability and uniqueness, combined
//! into a single appeal value and finally diversified so that one syllable
//! does not dominate the recommendation list.
//!
//! ```no_run
//! use blendsmith::{GenerationRequest, ResourceStore};
//!
//! let store = ResourceStore::load_dir("resources/en").unwrap();
//! let request = GenerationRequest::new("Creating an application to split expense wisely");
//! let response = blendsmith::generate(&store, &request).unwrap();
//! for name in &response.names {
//!     println!("{} {:.3}", name.display, name.appeal);
//! }
//! ```

pub mod api;
#[cfg(feature = "cli")]
pub mod config;
pub mod error;
pub mod pipeline;
pub mod ranking;
pub mod resources;
pub mod scoring;
#[cfg(feature = "server")]
pub mod server;

pub use api::{generate, rerank, GenerationRequest, GenerationResponse, NameEntry, RerankRequest};
pub use error::{PipelineError, RankError, RequestError, ResourceError, ScoreError};
pub use resources::{PosTag, ResourceStore};
pub use scoring::{AppealWeights, Candidate, FeatureScores};

/// Version string reported by the CLI, the health endpoint and the C ABI.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
