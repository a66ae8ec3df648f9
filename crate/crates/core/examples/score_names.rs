//! Generates names for a description and shows how a few of them score.
//!
//! ```text
//! cargo run --example score_names -- "Creating an application to split expense wisely" splitwise breakowl
//! ```

use blendsmith::pipeline::{generate_candidates, PipelineOptions};
use blendsmith::scoring::score_candidates;
use blendsmith::{AppealWeights, GenerationRequest, ResourceStore};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let description = args
        .next()
        .unwrap_or_else(|| "Creating an application to split expense wisely".to_string());
    let watch: Vec<String> = args.collect();

    let store = ResourceStore::load_dir(concat!(env!("CARGO_MANIFEST_DIR"), "/resources/en"))?;

    let mut request = GenerationRequest::new(description.clone());
    request.top_k = 10;
    let response = blendsmith::generate(&store, &request)?;
    println!(
        "{} candidates; top {} after diversification:",
        response.candidate_count,
        response.names.len()
    );
    for (i, name) in response.names.iter().enumerate() {
        println!("{:>3}. {:<16} {:.3}", i + 1, name.display, name.appeal);
    }

    if watch.is_empty() {
        return Ok(());
    }
    let raw = generate_candidates(&description, &store, &PipelineOptions::default())?;
    let picked: Vec<_> = raw.into_iter().filter(|c| watch.contains(&c.text)).collect();
    println!();
    for c in score_candidates(picked, &store, &AppealWeights::default())? {
        let s = &c.scores;
        println!(
            "{:<16} R={:.3} P={:.3} M={:.3} U={:.3} appeal={:.3}",
            c.raw.display(),
            s.readability,
            s.pronounceability,
            s.memorability,
            s.uniqueness,
            c.appeal
        );
    }
    Ok(())
}
