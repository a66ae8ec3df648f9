//! Settings resolution for the command-line tool.
//!
//! Each value is taken from the first source that has it: command-line
//! flag, `BLENDSMITH_*` environment variable (both handled by the argument
//! parser), the TOML config file, then the built-in default.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::scoring::AppealWeights;

pub const ENV_PREFIX: &str = "BLENDSMITH_";
pub const DEFAULT_BIND: &str = "127.0.0.1:8080";

/// Resource set shipped with the source tree.
pub fn bundled_resources() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/resources/en"))
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub resources: Option<PathBuf>,
    pub bind: Option<String>,
    pub top: Option<usize>,
    pub iterations: Option<usize>,
    pub diversify: Option<bool>,
    pub weights: Option<String>,
    pub max_per_root: Option<usize>,
    pub format: Option<String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

/// First present value wins.
pub fn pick<T>(flag_or_env: Option<T>, file: Option<T>, default: T) -> T {
    flag_or_env.or(file).unwrap_or(default)
}

/// Parses `r,p,m,u`.
pub fn parse_weights(s: &str) -> Result<AppealWeights, String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|_| format!("bad weight {p:?}")))
        .collect::<Result<_, _>>()?;
    let arr: [f64; 4] = parts
        .try_into()
        .map_err(|_| format!("expected four comma-separated weights, got {s:?}"))?;
    let w = AppealWeights::from_array(arr);
    if !w.is_finite() {
        return Err("weights must be finite".into());
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_is_flag_then_file_then_default() {
        assert_eq!(pick(Some(1), Some(2), 3), 1);
        assert_eq!(pick(None, Some(2), 3), 2);
        assert_eq!(pick(None, None, 3), 3);
    }

    #[test]
    fn weights_parse() {
        assert_eq!(parse_weights("2.18,1.63,0.91,1.05").unwrap(), AppealWeights::default());
        assert_eq!(
            parse_weights(" 0, 0 ,0,1").unwrap(),
            AppealWeights::new(0.0, 0.0, 0.0, 1.0)
        );
        assert!(parse_weights("1,2,3").is_err());
        assert!(parse_weights("1,2,3,x").is_err());
        assert!(parse_weights("1,2,3,inf").is_err());
    }

    #[test]
    fn config_file_parses() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("b.toml");
        std::fs::write(&path, "top = 5\nweights = \"0,0,0,1\"\nbind = \"0.0.0.0:9000\"\n").unwrap();
        let cfg = FileConfig::load(&path).unwrap();
        assert_eq!(cfg.top, Some(5));
        assert_eq!(cfg.bind.as_deref(), Some("0.0.0.0:9000"));
        std::fs::write(&path, "colour = 1\n").unwrap();
        assert!(FileConfig::load(&path).is_err());
    }
}
