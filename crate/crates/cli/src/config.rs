//! Optional TOML configuration. Command-line flags take precedence; the
//! environment is never consulted.

use std::path::Path;

use anyhow::Context;
use serde::Deserialize;

#[derive(Clone, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct Config {
    pub jobs: Option<usize>,
    pub format: Option<String>,
    /// Subgroup cap for the type D search.
    pub cap: Option<usize>,
    pub timings: Option<bool>,
    pub max_degree: Option<usize>,
    pub max_points: Option<usize>,
    pub max_rows: Option<u64>,
    pub max_block: Option<usize>,
}

impl Config {
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn parse(text: &str) -> anyhow::Result<Self> {
        Ok(toml::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_known_keys() {
        let c = Config::parse("cap = 10\njobs = 2\nmax-rows = 100\n").unwrap();
        assert_eq!(c.cap, Some(10));
        assert_eq!(c.jobs, Some(2));
        assert_eq!(c.max_rows, Some(100));
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(Config::parse("subgroup_cap = 1").is_err());
    }
}
