//! JSON rendering with a fixed key order.

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use qdouble_core::report::CheckRecord;
use qdouble_core::suites::CONVENTIONS;

use crate::config::{Mode, SuiteConfig};
use crate::grid::TaskResult;

pub const SCHEMA: u32 = 1;

/// Key/value pairs serialized as an object in insertion order.
struct Pairs<'a>(&'a [(String, String)]);

impl Serialize for Pairs<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

struct Conventions;

impl Serialize for Conventions {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(CONVENTIONS.len()))?;
        for (k, v) in CONVENTIONS {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

#[derive(Serialize)]
struct ConfigJson<'a> {
    suite: &'a str,
    n: Option<usize>,
    k: Option<usize>,
    lambda: Option<&'a [usize]>,
    degree: Option<usize>,
    mode: Mode,
    samples: usize,
    seed: u64,
}

#[derive(Serialize)]
struct RecordJson<'a> {
    id: &'a str,
    suite: &'a str,
    anchor: &'a str,
    passed: bool,
    conjecture: bool,
    witness: Option<&'a str>,
    values: Pairs<'a>,
    wall_time: Option<f64>,
}

#[derive(Serialize)]
struct SummaryJson {
    checks: usize,
    passed: usize,
    hard_failures: usize,
    conjecture_failures: usize,
    exit_code: i32,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    schema: u32,
    suite: &'a str,
    config: ConfigJson<'a>,
    conventions: Conventions,
    records: Vec<RecordJson<'a>>,
    summary: SummaryJson,
}

/// Counts over all records: `(checks, passed, hard failures, conjecture failures)`.
pub fn counts<'a>(records: impl Iterator<Item = &'a CheckRecord>) -> (usize, usize, usize, usize) {
    let mut c = (0, 0, 0, 0);
    for r in records {
        c.0 += 1;
        if r.passed {
            c.1 += 1;
        } else if r.conjecture {
            c.3 += 1;
        } else {
            c.2 += 1;
        }
    }
    c
}

/// Pretty JSON terminated by a newline. Wall times are emitted only when
/// the configuration asks for them.
pub fn render(cfg: &SuiteConfig, results: &[TaskResult], exit_code: i32) -> String {
    let mut records = Vec::new();
    for t in results {
        for r in &t.records {
            records.push(RecordJson {
                id: &r.id,
                suite: t.suite,
                anchor: &r.anchor,
                passed: r.passed,
                conjecture: r.conjecture,
                witness: r.witness.as_deref(),
                values: Pairs(&r.values),
                wall_time: cfg.timings.then_some(t.seconds),
            });
        }
    }
    let (checks, passed, hard, conj) = counts(results.iter().flat_map(|t| t.records.iter()));
    let report = ReportJson {
        schema: SCHEMA,
        suite: &cfg.suite,
        config: ConfigJson {
            suite: &cfg.suite,
            n: cfg.n,
            k: cfg.k,
            lambda: cfg.lambda.as_deref(),
            degree: cfg.degree,
            mode: cfg.mode,
            samples: cfg.samples,
            seed: cfg.seed,
        },
        conventions: Conventions,
        records,
        summary: SummaryJson {
            checks,
            passed,
            hard_failures: hard,
            conjecture_failures: conj,
            exit_code,
        },
    };
    let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
    s.push('\n');
    s
}
