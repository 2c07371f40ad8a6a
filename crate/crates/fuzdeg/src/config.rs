//! Runtime configuration shared by the CLI commands.

use crate::group::DEFAULT_MAX_ORDER;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
    Dot,
    Text,
}

impl std::str::FromStr for OutputFormat {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            "dot" => Ok(OutputFormat::Dot),
            "text" => Ok(OutputFormat::Text),
            other => Err(crate::error::Error::InvalidSpec(format!(
                "unknown output format {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub max_order: usize,
    pub class_cap: u64,
    pub pair_cap: u64,
    pub oracle_depth: Option<usize>,
    pub format: OutputFormat,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_order: DEFAULT_MAX_ORDER,
            class_cap: 10_000_000,
            pair_cap: 100_000_000,
            oracle_depth: None,
            format: OutputFormat::Json,
            seed: 7,
        }
    }
}

/// Default order cap, honoring the FUZDEG_MAX_ORDER environment override.
pub fn default_max_order_from_env() -> usize {
    std::env::var("FUZDEG_MAX_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_ORDER)
}
