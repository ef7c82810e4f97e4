//! Acceptance grid: one pass/fail line per criterion. All comparisons are
//! exact (zero tolerance) unless a criterion says SAMPLED; runtime targets
//! are asserted against the measured time of the suite's tasks.

use std::process::ExitCode;
use std::time::Instant;

use qdouble::{
    run_all, run_suite, Mode, Report, SuiteConfig, TaskResult, EXIT_CONJECTURE, EXIT_HARD_FAILURE, EXIT_PASS,
};
use qdouble_core::heckerep::Partition;
use qdouble_core::report::CheckRecord;
use qdouble_core::scalar::Param;
use qdouble_core::Scalar;

const SEED: u64 = 7;
const SAMPLES: usize = 3;

struct Outcome {
    id: usize,
    name: &'static str,
    failures: Vec<String>,
    seconds: f64,
}

impl Outcome {
    fn new(id: usize, name: &'static str) -> Self {
        Outcome {
            id,
            name,
            failures: Vec::new(),
            seconds: 0.0,
        }
    }

    fn require(&mut self, ok: bool, msg: impl Into<String>) {
        if !ok {
            self.failures.push(msg.into());
        }
    }

    /// Every record passes and at least `min` were produced.
    fn all_pass<'a>(&mut self, records: impl Iterator<Item = &'a CheckRecord>, min: usize) {
        let mut count = 0;
        for r in records {
            count += 1;
            if !r.passed {
                self.failures
                    .push(format!("{}: {}", r.id, r.witness.as_deref().unwrap_or("failed")));
            }
        }
        self.require(count >= min, format!("expected at least {min} records, got {count}"));
    }

    fn within(&mut self, limit: f64) {
        self.require(
            self.seconds < limit,
            format!("took {:.2} s, target {limit} s", self.seconds),
        );
    }
}

fn seconds(results: &[TaskResult], suites: &[&str]) -> f64 {
    results
        .iter()
        .filter(|t| suites.contains(&t.suite))
        .map(|t| t.seconds)
        .sum()
}

fn find<'a>(report: &'a Report, id: &str) -> Option<&'a CheckRecord> {
    report.records().find(|r| r.id == id)
}

fn ids_with<'a>(report: &'a Report, suite: &'a str, needle: &'a str) -> impl Iterator<Item = &'a CheckRecord> {
    report.suite_records(suite).filter(move |r| r.id.contains(needle))
}

fn braiding(report: &Report) -> Outcome {
    let mut o = Outcome::new(1, "braid relation, Hecke condition and R^-1 = R - nu I for N = 1..4");
    for n in 1..=4 {
        for what in ["braid", "hecke", "inverse"] {
            let id = format!("braiding/N={n}/{what}");
            o.require(
                find(report, &id).is_some_and(|r| r.passed),
                format!("{id} missing or failed"),
            );
        }
    }
    o.all_pass(report.suite_records("braiding"), 12);
    o.seconds = seconds(&report.results, &["braiding"]);
    o.within(5.0);
    o
}

fn heckerep(report: &Report) -> Outcome {
    let mut o = Outcome::new(2, "Hecke representations for N <= 3, k <= 3, Weyl ranks at q = 1");
    o.all_pass(report.suite_records("heckerep"), 1);
    for n in 1..=3 {
        for k in 1..=3 {
            for what in ["jm-commute", "skew-idempotent", "skew-symmetry", "idempotents"] {
                let id = format!("heckerep/N={n}/k={k}/{what}");
                o.require(find(report, &id).is_some(), format!("{id} missing"));
            }
        }
        let id = format!("heckerep/N={n}/bi-rank");
        o.require(
            find(report, &id).is_some_and(|r| r.passed),
            format!("{id} missing or failed"),
        );
        // Independent Weyl counts: dimensions of GL(N) modules of small shapes.
        for (parts, dim) in [(vec![1], n), (vec![2], n * (n + 1) / 2), (vec![1, 1], n * (n - 1) / 2)] {
            if parts.len() > n {
                continue;
            }
            let id = format!("heckerep/N={n}/lambda={}/weyl-rank", Partition::new(parts));
            let got = find(report, &id)
                .and_then(|r| r.values.iter().find(|(k, _)| k == "dimension"))
                .map(|(_, v)| v.clone());
            o.require(
                got.as_deref() == Some(dim.to_string().as_str()),
                format!("{id}: dimension {got:?}, expected {dim}"),
            );
        }
    }
    o.seconds = seconds(&report.results, &["heckerep"]);
    o.within(60.0);
    o
}

fn laurent(low: i32, coeffs: &[i64]) -> String {
    Scalar::laurent(Param::Q, low, coeffs).to_string()
}

fn spectrum(report: &Report) -> Outcome {
    let mut o = Outcome::new(3, "Tr_R L spectrum on Young modules, k <= 3, N <= 3");
    o.all_pass(report.suite_records("spectrum"), 1);
    // λ ⊢ k ≤ 3 with at most N rows: 1 + 2 + 3 for N = 3, 1 + 2 + 2 for N = 2, 3 for N = 1.
    o.require(
        report.suite_records("spectrum").count() == 6 + 5 + 3,
        "partition count mismatch",
    );
    let closed = [
        ("(1)", laurent(-5, &[1, 0, 0, 0, 1])),
        ("(2)", laurent(-7, &[1, 0, 0, 0, 0, 0, 1])),
        ("(1,1)", laurent(-5, &[1, 0, 1])),
    ];
    for (lambda, expected) in closed {
        let id = format!("spectrum/N=2/lambda={lambda}");
        let chi = find(report, &id)
            .and_then(|r| r.values.iter().find(|(k, _)| k == "chi"))
            .map(|(_, v)| v.clone());
        o.require(
            chi.as_deref() == Some(expected.as_str()),
            format!("{id}: chi {chi:?}, expected {expected}"),
        );
    }
    o.seconds = seconds(&report.results, &["spectrum"]);
    o.within(120.0);
    o
}

fn conjecture(report: &Report) -> Outcome {
    let mut o = Outcome::new(
        4,
        "eigenvalue characters for k <= 4, e2 on Young modules for k = 2, 3 at N = 2",
    );
    o.all_pass(report.suite_records("conjecture"), 1);
    o.require(
        report.suite_records("conjecture").all(|r| r.conjecture),
        "records must be marked conjectural",
    );
    for n in [2, 3] {
        for k in 1..=4 {
            for lambda in Partition::all(k).into_iter().filter(|l| l.len() <= n) {
                let id = format!("conjecture/N={n}/lambda={lambda}/characters");
                o.require(find(report, &id).is_some(), format!("{id} missing"));
            }
        }
    }
    for lambda in ["(2)", "(1,1)", "(3)", "(2,1)"] {
        let id = format!("conjecture/N=2/lambda={lambda}/E2");
        o.require(
            find(report, &id).is_some_and(|r| r.passed),
            format!("{id} missing or failed"),
        );
    }
    // A conjecture finding alone maps to its own exit status.
    let mut synthetic = Report {
        config: report.config.clone(),
        results: Vec::new(),
    };
    synthetic.results.push(TaskResult {
        suite: "conjecture",
        records: vec![CheckRecord::fail("conjecture/synthetic", "finding", "residual").conjectural()],
        seconds: 0.0,
    });
    o.require(
        synthetic.exit_code() == EXIT_CONJECTURE,
        "conjecture finding must exit with 2",
    );
    synthetic.results[0]
        .records
        .push(CheckRecord::fail("capelli/synthetic", "defect", "residual"));
    o.require(
        synthetic.exit_code() == EXIT_HARD_FAILURE,
        "hard failure must exit with 1",
    );
    o.seconds = seconds(&report.results, &["conjecture"]);
    o.within(600.0);
    o
}

fn cayley_hamilton(report: &Report) -> Outcome {
    let mut o = Outcome::new(5, "Cayley-Hamilton: N = 2 exact, N = 3 at 3 sample points");
    o.all_pass(report.suite_records("cayley-hamilton"), 4);
    o.require(
        find(report, "cayley-hamilton/N=2").is_some(),
        "exact N = 2 record missing",
    );
    let sampled = report
        .suite_records("cayley-hamilton")
        .filter(|r| r.id.starts_with("cayley-hamilton/N=3@q="))
        .count();
    o.require(sampled == SAMPLES, format!("{sampled} sampled N = 3 records"));
    o.seconds = seconds(&report.results, &["cayley-hamilton"]);
    o.within(300.0);
    o
}

fn capelli(report: &Report) -> Outcome {
    let mut o = Outcome::new(
        6,
        "matrix Capelli (words and operators) for k = 1, 2 and determinant Capelli at N = 2",
    );
    for k in 1..=2 {
        for route in ["words", "operators"] {
            let id = format!("capelli/N=2/k={k}/{route}");
            o.require(
                find(report, &id).is_some_and(|r| r.passed),
                format!("{id} missing or failed"),
            );
        }
    }
    o.all_pass(report.suite_records("capelli"), 4);
    o.all_pass(report.suite_records("det-capelli"), 1);
    o.seconds = seconds(&report.results, &["capelli", "det-capelli"]);
    o.within(600.0);
    o
}

fn adjoint(report: &Report) -> Outcome {
    let mut o = Outcome::new(7, "adjoint commutation, annihilation and descent for k <= 2 at N = 2");
    for k in 1..=2 {
        for what in ["commutation", "annihilation", "descends"] {
            let id = format!("adjoint/N=2/k={k}/{what}");
            o.require(
                find(report, &id).is_some_and(|r| r.passed),
                format!("{id} missing or failed"),
            );
        }
    }
    o.all_pass(report.suite_records("orbits"), 2);
    o.seconds = seconds(&report.results, &["adjoint", "orbits"]);
    o.within(300.0);
    o
}

fn u2h(report: &Report) -> Outcome {
    let mut o = Outcome::new(
        8,
        "u(2)_h derivatives: commutativity, multiplicativity, brackets, radius, classical limit",
    );
    for id in [
        "u2h/degree=3/commuting",
        "u2h/multiplicative/generators",
        "u2h/multiplicative/random",
        "u2h/bracket/xy",
        "u2h/bracket/yz",
        "u2h/bracket/zx",
        "u2h/radius/square",
        "u2h/radius/actions",
        "u2h/degree=3/classical-limit",
    ] {
        o.require(
            find(report, id).is_some_and(|r| r.passed),
            format!("{id} missing or failed"),
        );
    }
    let pairs = find(report, "u2h/multiplicative/random")
        .and_then(|r| r.values.first())
        .map(|(_, v)| v.clone());
    o.require(pairs.as_deref() == Some("20"), format!("random pairs: {pairs:?}"));
    o.all_pass(report.suite_records("u2h"), 9);
    o.seconds = seconds(&report.results, &["u2h"]);
    o.within(120.0);
    o
}

fn guard(report: &Report) -> Outcome {
    let mut o = Outcome::new(9, "trace property and e1 consistency pin the R and C conventions");
    for n in 1..=3 {
        let id = format!("guard/N={n}/trace-property");
        o.require(
            find(report, &id).is_some_and(|r| r.passed),
            format!("{id} missing or failed"),
        );
    }
    o.require(ids_with(report, "guard", "/e1").count() >= 10, "too few e1 records");
    o.all_pass(report.suite_records("guard"), 13);
    o.seconds = seconds(&report.results, &["guard"]);
    o.within(5.0);
    o
}

fn determinism(first: &Report) -> Outcome {
    let mut o = Outcome::new(10, "run_all with a fixed seed is byte-identical across runs");
    let start = Instant::now();
    let second = run_all(Mode::Exact, SEED, SAMPLES, 1);
    o.require(first.to_json() == second.to_json(), "exact reports differ");
    let mut cfg = SuiteConfig::new("all", Mode::Sampled);
    cfg.seed = SEED;
    cfg.samples = 1;
    let s1 = run_suite(&cfg).map(|r| r.to_json());
    cfg.jobs = 2;
    let s2 = run_suite(&cfg).map(|r| r.to_json());
    o.require(s1.is_ok() && s1 == s2, "sampled reports differ between 1 and 2 jobs");
    o.seconds = start.elapsed().as_secs_f64();
    o
}

fn main() -> ExitCode {
    let report = run_all(Mode::Exact, SEED, SAMPLES, 1);
    let outcomes = [
        braiding(&report),
        heckerep(&report),
        spectrum(&report),
        conjecture(&report),
        cayley_hamilton(&report),
        capelli(&report),
        adjoint(&report),
        u2h(&report),
        guard(&report),
        determinism(&report),
    ];
    let mut ok = report.exit_code() == EXIT_PASS;
    for o in &outcomes {
        let status = if o.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status} ({:.2} s): {}", o.id, o.seconds, o.name);
        for f in &o.failures {
            println!("    {f}");
        }
        ok &= o.failures.is_empty();
    }
    println!("acceptance: {}", if ok { "all criteria pass" } else { "FAILED" });
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
