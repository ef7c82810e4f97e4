//! Run configuration and its validation.

use std::fmt;

use qdouble_core::heckerep::Partition;
use qdouble_core::suites::SUITES;
use serde::Serialize;

/// Exact arithmetic over `Q(q)` or evaluation at seeded rational points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Sampled,
}

/// Everything that determines a report. Two runs with equal configs
/// produce identical bytes unless `timings` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// A suite name or `"all"` for the default grid.
    pub suite: String,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub lambda: Option<Vec<usize>>,
    pub degree: Option<usize>,
    pub mode: Mode,
    pub samples: usize,
    pub seed: u64,
    pub jobs: usize,
    pub timings: bool,
}

impl SuiteConfig {
    pub fn new(suite: impl Into<String>, mode: Mode) -> Self {
        SuiteConfig {
            suite: suite.into(),
            n: None,
            k: None,
            lambda: None,
            degree: None,
            mode,
            samples: 3,
            seed: 0,
            jobs: 1,
            timings: false,
        }
    }

    pub fn partition(&self) -> Option<Partition> {
        self.lambda.clone().map(Partition::new)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.suite != "all" && !SUITES.contains(&self.suite.as_str()) {
            return Err(ConfigError(format!(
                "unknown suite `{}`; expected one of: all, {}",
                self.suite,
                SUITES.join(", ")
            )));
        }
        if let Some(n) = self.n {
            if !(1..=6).contains(&n) {
                return Err(ConfigError(format!("--n must lie in 1..=6, got {n}")));
            }
        }
        if let Some(k) = self.k {
            if !(1..=6).contains(&k) {
                return Err(ConfigError(format!("--k must lie in 1..=6, got {k}")));
            }
        }
        if let Some(d) = self.degree {
            if !(1..=4).contains(&d) {
                return Err(ConfigError(format!("--degree must lie in 1..=4, got {d}")));
            }
        }
        if let Some(parts) = &self.lambda {
            if parts.is_empty() || parts.contains(&0) {
                return Err(ConfigError(String::from("--lambda needs positive parts")));
            }
            if self.suite != "spectrum" {
                return Err(ConfigError(String::from("--lambda applies to the spectrum suite only")));
            }
            if let Some(n) = self.n {
                if parts.len() > n {
                    return Err(ConfigError(format!("--lambda has {} rows but N = {n}", parts.len())));
                }
            }
        }
        if self.samples == 0 || self.samples > 16 {
            return Err(ConfigError(format!(
                "--samples must lie in 1..=16, got {}",
                self.samples
            )));
        }
        if self.jobs == 0 {
            return Err(ConfigError(String::from("--jobs must be positive")));
        }
        if self.suite == "all" && (self.n.is_some() || self.k.is_some() || self.degree.is_some()) {
            return Err(ConfigError(String::from("--n, --k and --degree need a single --suite")));
        }
        Ok(())
    }
}

/// Parse `"2,1,1"` into parts.
pub fn parse_parts(s: &str) -> Result<Vec<usize>, ConfigError> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| ConfigError(format!("bad partition part `{p}`")))
        })
        .collect()
}

/// An invalid flag combination; maps to exit status 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}
