//! Driver for the `qdouble-core` verification suites: configuration, seeded
//! sampling, parallel execution and JSON reports.

pub mod config;
pub mod grid;
pub mod output;
pub mod sampling;

use qdouble_core::report::CheckRecord;

pub use config::{ConfigError, Mode, SuiteConfig};
pub use grid::{Job, Task, TaskResult};

/// Process exit statuses.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_HARD_FAILURE: i32 = 1;
pub const EXIT_CONJECTURE: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

/// The outcome of one run.
#[derive(Clone, Debug)]
pub struct Report {
    pub config: SuiteConfig,
    pub results: Vec<TaskResult>,
}

impl Report {
    pub fn records(&self) -> impl Iterator<Item = &CheckRecord> {
        self.results.iter().flat_map(|t| t.records.iter())
    }

    /// Records of one suite, in order.
    pub fn suite_records<'a>(&'a self, suite: &'a str) -> impl Iterator<Item = &'a CheckRecord> {
        self.results
            .iter()
            .filter(move |t| t.suite == suite)
            .flat_map(|t| t.records.iter())
    }

    /// 1 on any hard failure, else 2 on any conjecture finding, else 0.
    pub fn exit_code(&self) -> i32 {
        let (_, _, hard, conj) = output::counts(self.records());
        if hard > 0 {
            EXIT_HARD_FAILURE
        } else if conj > 0 {
            EXIT_CONJECTURE
        } else {
            EXIT_PASS
        }
    }

    pub fn to_json(&self) -> String {
        output::render(&self.config, &self.results, self.exit_code())
    }
}

/// Run one suite, or the default grid when the suite is `"all"`.
pub fn run_suite(config: &SuiteConfig) -> Result<Report, ConfigError> {
    let tasks = grid::plan(config)?;
    let results = grid::execute(&tasks, config.jobs);
    Ok(Report {
        config: config.clone(),
        results,
    })
}

/// The default acceptance grid over every suite.
pub fn run_all(mode: Mode, seed: u64, samples: usize, jobs: usize) -> Report {
    let mut cfg = SuiteConfig::new("all", mode);
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.jobs = jobs;
    run_suite(&cfg).expect("the default grid is a valid configuration")
}
