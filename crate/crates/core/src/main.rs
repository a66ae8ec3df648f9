use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use blendsmith::config::{self, bundled_resources, parse_weights, pick, FileConfig};
use blendsmith::ranking::{self, FitConfig, RatedName};
use blendsmith::{GenerationRequest, GenerationResponse, RequestError, ResourceStore};

const EXIT_RESOURCE: u8 = 2;
const EXIT_PIPELINE: u8 = 3;

#[derive(Parser)]
#[command(name = "blendsmith", version, about = "Blended brand-name generator")]
struct Cli {
    /// TOML file with default settings.
    #[arg(long, global = true, env = "BLENDSMITH_CONFIG")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate ranked names for a description.
    Generate(GenerateArgs),
    /// Score a system ordering against human ratings.
    Eval(EvalArgs),
    /// Fit appeal weights from pairwise preferences.
    Fit(FitArgs),
    /// Run the HTTP service.
    Serve(ServeArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, env = "BLENDSMITH_RESOURCES")]
    resources: Option<PathBuf>,
    #[arg(long)]
    description: String,
    #[arg(long, env = "BLENDSMITH_TOP")]
    top: Option<usize>,
    #[arg(long, env = "BLENDSMITH_NO_DIVERSIFY")]
    no_diversify: bool,
    #[arg(long, env = "BLENDSMITH_ITERATIONS")]
    iterations: Option<usize>,
    /// Appeal weights as r,p,m,u.
    #[arg(long, env = "BLENDSMITH_WEIGHTS")]
    weights: Option<String>,
    #[arg(long, env = "BLENDSMITH_MAX_PER_ROOT")]
    max_per_root: Option<usize>,
    #[arg(long, value_enum, env = "BLENDSMITH_FORMAT")]
    format: Option<Format>,
    /// Report elapsed time (makes output run-dependent).
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct EvalArgs {
    /// TSV of `name good fair bad`.
    #[arg(long, requires = "order")]
    ratings: Option<PathBuf>,
    /// System ranking: `description<TAB>name` per line (or just `name`), best first.
    #[arg(long, requires = "ratings")]
    order: Option<PathBuf>,
    /// First ranking for Kendall tau, one item per line.
    #[arg(long, requires = "rank_b")]
    rank_a: Option<PathBuf>,
    #[arg(long, requires = "rank_a")]
    rank_b: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct FitArgs {
    /// TSV of eight feature values per line: winner r p m u, loser r p m u.
    #[arg(long)]
    preferences: PathBuf,
    #[arg(long, default_value_t = FitConfig::default().epochs)]
    epochs: usize,
    #[arg(long, default_value_t = FitConfig::default().learning_rate)]
    learning_rate: f64,
    #[arg(long, default_value_t = FitConfig::default().regularization)]
    regularization: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ServeArgs {
    #[arg(long, env = "BLENDSMITH_RESOURCES")]
    resources: Option<PathBuf>,
    #[arg(long, env = "BLENDSMITH_BIND")]
    bind: Option<String>,
}

struct Failure(u8, String);

impl Failure {
    fn resource(msg: impl ToString) -> Self {
        Failure(EXIT_RESOURCE, msg.to_string())
    }
}

impl From<RequestError> for Failure {
    fn from(e: RequestError) -> Self {
        match e {
            RequestError::Pipeline(_) => Failure(EXIT_PIPELINE, e.to_string()),
            RequestError::Invalid(_) => Failure(EXIT_RESOURCE, e.to_string()),
            RequestError::Score(_) => Failure(1, e.to_string()),
        }
    }
}

fn load_store(path: &Path) -> Result<ResourceStore, Failure> {
    ResourceStore::load_dir(path).map_err(Failure::resource)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::resource(format!("{}: {e}", path.display())))
}

fn render_text(response: &GenerationResponse, timing: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:>4}  {:<16} {:>7} {:>6} {:>6} {:>6} {:>6}  sources\n",
        "rank", "name", "appeal", "R", "P", "M", "U"
    ));
    for (i, n) in response.names.iter().enumerate() {
        out.push_str(&format!(
            "{:>4}  {:<16} {:>7.4} {:>6.3} {:>6.3} {:>6.3} {:>6.3}  {}\n",
            i + 1,
            n.display,
            n.appeal,
            n.readability,
            n.pronounceability,
            n.memorability,
            n.uniqueness,
            n.sources.join(", ")
        ));
    }
    out.push_str(&format!("candidates: {}\n", response.candidate_count));
    if timing {
        out.push_str(&format!("elapsed: {} ms\n", response.elapsed_ms));
    }
    out
}

fn run_generate(args: GenerateArgs, file: FileConfig) -> Result<(), Failure> {
    let weights = match args.weights.or(file.weights) {
        Some(s) => Some(parse_weights(&s).map_err(Failure::resource)?),
        None => None,
    };
    let format = pick(
        args.format,
        file.format.as_deref().and_then(|f| Format::from_str(f, true).ok()),
        Format::Text,
    );
    let request = GenerationRequest {
        description: args.description,
        top_k: pick(args.top, file.top, 30),
        diversify: !args.no_diversify && file.diversify.unwrap_or(true),
        iterations: pick(args.iterations, file.iterations, ranking::DEFAULT_ITERATIONS),
        weights,
        max_per_root: pick(args.max_per_root, file.max_per_root, 5),
        max_candidates: None,
        include_timing: args.timing,
    };
    // Reject empty descriptions before paying for resource loading.
    blendsmith::pipeline::tokenize(&request.description).map_err(RequestError::from)?;
    let store = load_store(&pick(args.resources, file.resources, bundled_resources()))?;
    let response = blendsmith::generate(&store, &request)?;
    match format {
        Format::Json => {
            let json = serde_json::to_string_pretty(&response).map_err(|e| Failure(1, e.to_string()))?;
            println!("{json}");
        }
        Format::Text => print!("{}", render_text(&response, args.timing)),
    }
    Ok(())
}

#[derive(Serialize)]
struct EvalReport {
    descriptions: Vec<(String, f64)>,
    average_ndcg: Option<f64>,
    kendall_tau: Option<f64>,
}

fn parse_order(source: &str, text: &str) -> Vec<(String, Vec<String>)> {
    let mut groups: Vec<(String, Vec<String>)> = Vec::new();
    for line in text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
    {
        let (desc, name) = match line.split_once('\t') {
            Some((d, n)) => (d.trim().to_string(), n.trim().to_string()),
            None => (source.to_string(), line.to_string()),
        };
        match groups.iter_mut().find(|(d, _)| *d == desc) {
            Some((_, names)) => names.push(name),
            None => groups.push((desc, vec![name])),
        }
    }
    groups
}

fn item_lines(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect()
}

fn run_eval(args: EvalArgs) -> Result<(), Failure> {
    let mut report = EvalReport {
        descriptions: Vec::new(),
        average_ndcg: None,
        kendall_tau: None,
    };
    if let (Some(ratings_path), Some(order_path)) = (&args.ratings, &args.order) {
        let ratings: Vec<RatedName> = ranking::parse_ratings(&ratings_path.display().to_string(), &read(ratings_path)?)
            .map_err(Failure::resource)?;
        let groups = parse_order("all", &read(order_path)?);
        if groups.is_empty() {
            return Err(Failure::resource(format!("{}: no names", order_path.display())));
        }
        for (desc, names) in groups {
            let v = ranking::ndcg(&names, &ratings).map_err(Failure::resource)?;
            report.descriptions.push((desc, v));
        }
        let n = report.descriptions.len() as f64;
        report.average_ndcg = Some(report.descriptions.iter().map(|(_, v)| v).sum::<f64>() / n);
    }
    if let (Some(a), Some(b)) = (&args.rank_a, &args.rank_b) {
        let tau = ranking::kendall_tau(&item_lines(&read(a)?), &item_lines(&read(b)?)).map_err(Failure::resource)?;
        report.kendall_tau = Some(tau);
    }
    if report.average_ndcg.is_none() && report.kendall_tau.is_none() {
        return Err(Failure::resource(
            "nothing to evaluate: pass --ratings/--order and/or --rank-a/--rank-b",
        ));
    }
    match args.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).map_err(|e| Failure(1, e.to_string()))?
        ),
        Format::Text => {
            for (desc, v) in &report.descriptions {
                println!("ndcg\t{desc}\t{v:.6}");
            }
            if let Some(avg) = report.average_ndcg {
                println!("ndcg\taverage\t{avg:.6}");
            }
            if let Some(tau) = report.kendall_tau {
                println!("kendall_tau\t{tau:.6}");
            }
        }
    }
    Ok(())
}

fn run_fit(args: FitArgs) -> Result<(), Failure> {
    let prefs = ranking::parse_preferences(&args.preferences.display().to_string(), &read(&args.preferences)?)
        .map_err(Failure::resource)?;
    let cfg = FitConfig {
        epochs: args.epochs,
        learning_rate: args.learning_rate,
        regularization: args.regularization,
        seed: args.seed,
    };
    let w = ranking::fit_weights(&prefs, &cfg).map_err(Failure::resource)?;
    println!(
        "weights\t{},{},{},{}",
        w.readability, w.pronounceability, w.memorability, w.uniqueness
    );
    println!("training_agreement\t{:.6}", ranking::pairwise_agreement(&w, &prefs));
    Ok(())
}

fn run_serve(args: ServeArgs, file: FileConfig) -> Result<(), Failure> {
    let bind = pick(args.bind, file.bind, config::DEFAULT_BIND.to_string());
    let addr = bind
        .parse()
        .map_err(|e| Failure::resource(format!("bad bind address {bind:?}: {e}")))?;
    let store = Arc::new(load_store(&pick(args.resources, file.resources, bundled_resources()))?);
    let runtime = tokio::runtime::Runtime::new().map_err(|e| Failure(1, e.to_string()))?;
    runtime
        .block_on(blendsmith::server::serve(store, addr))
        .map_err(|e| Failure(1, e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let file = match &cli.config {
        Some(path) => match FileConfig::load(path) {
            Ok(cfg) => cfg,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_RESOURCE);
            }
        },
        None => FileConfig::default(),
    };
    let result = match cli.command {
        Command::Generate(args) => run_generate(args, file),
        Command::Eval(args) => run_eval(args),
        Command::Fit(args) => run_fit(args),
        Command::Serve(args) => run_serve(args, file),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
