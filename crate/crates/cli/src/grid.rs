//! Expansion of a configuration into independent tasks, and their execution.

use std::time::Instant;

use qdouble_core::braiding::Braiding;
use qdouble_core::heckerep::Partition;
use qdouble_core::report::CheckRecord;
use qdouble_core::suites;
use qdouble_core::u2h::U2h;
use qdouble_core::{Field, Rat, Scalar};
use rayon::prelude::*;

use crate::config::{ConfigError, Mode, SuiteConfig};
use crate::sampling::{random_pairs, sample_points};

/// Number of seeded random pairs for the multiplicativity check.
pub const RANDOM_PAIRS: usize = 20;

/// One unit of work; parameters only, so tasks are cheap to clone and send.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Job {
    Braiding {
        n: usize,
    },
    Guard {
        n: usize,
        k: usize,
    },
    Heckerep {
        n: usize,
        k: usize,
    },
    WeylRanks {
        n: usize,
        k: usize,
    },
    Doubles {
        n: usize,
        bound: usize,
    },
    Spectrum {
        n: usize,
        k: usize,
        lambda: Option<Vec<usize>>,
    },
    Conjecture {
        n: usize,
        k: usize,
        word_k: usize,
    },
    CayleyHamilton {
        n: usize,
    },
    Capelli {
        n: usize,
        k: usize,
        degree: usize,
    },
    DetCapelli {
        n: usize,
    },
    Adjoint {
        n: usize,
        k: usize,
    },
    Orbits {
        n: usize,
        degree: usize,
    },
    U2h {
        degree: u32,
        seed: u64,
    },
    U2hLimit {
        degree: u32,
    },
}

impl Job {
    /// Jobs computed over `Q(q)` or `Q(h)` regardless of the mode.
    fn symbolic_only(&self) -> bool {
        matches!(self, Job::WeylRanks { .. } | Job::U2hLimit { .. })
    }
}

/// A job at a sample point, or exactly when `point` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Task {
    pub suite: &'static str,
    pub job: Job,
    pub point: Option<Rat>,
}

/// Records of one task with the time it took.
#[derive(Clone, Debug)]
pub struct TaskResult {
    pub suite: &'static str,
    pub records: Vec<CheckRecord>,
    pub seconds: f64,
}

fn suite_name(s: &str) -> &'static str {
    suites::SUITES.iter().find(|x| **x == s).copied().unwrap_or("all")
}

fn orbit_alphas<F: Field>(n: usize) -> Vec<F> {
    (1..=n as i64).map(|k| F::from_i64(k * k + k - 1)).collect()
}

fn run_job<F: Field>(job: &Job, q: F) -> Vec<CheckRecord> {
    let hecke = |n: usize| Braiding::standard_hecke(n, q.clone());
    macro_rules! with_r {
        ($n:expr, $name:expr, |$r:ident| $body:expr) => {
            match hecke($n) {
                Ok($r) => $body,
                Err(e) => vec![CheckRecord::fail(
                    format!("{}/N={}", $name, $n),
                    "standard Hecke braiding",
                    e.to_string(),
                )],
            }
        };
    }
    match job {
        Job::Braiding { n } => with_r!(*n, "braiding", |r| suites::braiding_checks(&r)),
        Job::Guard { n, k } => with_r!(*n, "guard", |r| suites::guard_checks(&r, *k)),
        Job::Heckerep { n, k } => with_r!(*n, "heckerep", |r| suites::heckerep_checks(&r, *k)),
        Job::WeylRanks { n, k } => suites::weyl_rank_checks(*n, *k),
        Job::Doubles { n, bound } => with_r!(*n, "doubles", |r| suites::doubles_checks(&r, *bound)),
        Job::Spectrum { n, k, lambda } => {
            let p = lambda.clone().map(Partition::new);
            with_r!(*n, "spectrum", |r| suites::spectrum_checks(&r, *k, p.as_ref()))
        }
        Job::Conjecture { n, k, word_k } => with_r!(*n, "conjecture", |r| suites::conjecture_checks(&r, *k, *word_k)),
        Job::CayleyHamilton { n } => with_r!(*n, "cayley-hamilton", |r| suites::cayley_hamilton_checks(&r)),
        Job::Capelli { n, k, degree } => with_r!(*n, "capelli", |r| suites::capelli_checks(&r, *k, *degree)),
        Job::DetCapelli { n } => with_r!(*n, "det-capelli", |r| suites::det_capelli_checks(&r)),
        Job::Adjoint { n, k } => with_r!(*n, "adjoint", |r| suites::adjoint_checks(&r, *k)),
        Job::Orbits { n, degree } => with_r!(*n, "orbits", |r| suites::orbit_checks(
            &r,
            &orbit_alphas::<F>(*n),
            *degree
        )),
        Job::U2h { degree, seed } => match U2h::new(q.clone()) {
            Ok(u) => suites::u2h_checks(&u, *degree, &random_pairs::<F>(*seed, RANDOM_PAIRS, *degree)),
            Err(e) => vec![CheckRecord::fail("u2h", "u(2)_h calculus", e.to_string())],
        },
        Job::U2hLimit { degree } => vec![suites::u2h_classical_limit(*degree)],
    }
}

/// Execute a task and append the sample point to every record id.
pub fn run_task(task: &Task) -> Vec<CheckRecord> {
    let var = if matches!(task.job, Job::U2h { .. }) { "h" } else { "q" };
    match &task.point {
        None if matches!(task.job, Job::U2h { .. }) => run_job(&task.job, Scalar::h()),
        None => run_job(&task.job, Scalar::q()),
        Some(p) => {
            let mut recs = run_job(&task.job, p.clone());
            for r in &mut recs {
                r.id = format!("{}@{var}={p}", r.id);
            }
            recs
        }
    }
}

fn range_or(n: Option<usize>, default: std::ops::RangeInclusive<usize>) -> Vec<usize> {
    match n {
        Some(n) => vec![n],
        None => default.collect(),
    }
}

/// Jobs of one suite with defaults filled in. `exact_n` lists sizes run
/// exactly even in exact mode; the remaining entries of the second vector
/// are always sampled.
fn suite_jobs(suite: &str, cfg: &SuiteConfig) -> (Vec<Job>, Vec<Job>) {
    let sampled = cfg.mode == Mode::Sampled;
    let k = cfg.k;
    let degree = cfg.degree;
    let mut always_sampled = Vec::new();
    let jobs = match suite {
        "braiding" => range_or(cfg.n, if sampled { 1..=5 } else { 1..=4 })
            .into_iter()
            .map(|n| Job::Braiding { n })
            .collect(),
        "guard" => range_or(cfg.n, 1..=3)
            .into_iter()
            .map(|n| Job::Guard { n, k: k.unwrap_or(4) })
            .collect(),
        "heckerep" => {
            let k = k.unwrap_or(3);
            range_or(cfg.n, 1..=3)
                .into_iter()
                .flat_map(|n| [Job::Heckerep { n, k }, Job::WeylRanks { n, k }])
                .collect()
        }
        "doubles" => range_or(cfg.n, 2..=2)
            .into_iter()
            .map(|n| Job::Doubles {
                n,
                bound: degree.unwrap_or(2),
            })
            .collect(),
        "spectrum" => {
            let lambda = cfg.lambda.clone();
            let k = lambda.as_ref().map_or(k.unwrap_or(3), |l| l.iter().sum());
            let ns = match (&lambda, cfg.n) {
                (Some(l), None) => (l.len().max(1)..=3).collect(),
                _ => range_or(cfg.n, 1..=3),
            };
            ns.into_iter()
                .map(|n| Job::Spectrum {
                    n,
                    k,
                    lambda: lambda.clone(),
                })
                .collect()
        }
        "conjecture" => range_or(cfg.n, 2..=3)
            .into_iter()
            .map(|n| Job::Conjecture {
                n,
                k: k.unwrap_or(4),
                word_k: if n == 2 { degree.unwrap_or(3) } else { 0 },
            })
            .collect(),
        "cayley-hamilton" => match (cfg.n, sampled) {
            (Some(n), _) => vec![Job::CayleyHamilton { n }],
            (None, true) => vec![Job::CayleyHamilton { n: 2 }, Job::CayleyHamilton { n: 3 }],
            (None, false) => {
                always_sampled.push(Job::CayleyHamilton { n: 3 });
                vec![Job::CayleyHamilton { n: 2 }]
            }
        },
        "capelli" => range_or(cfg.n, 2..=2)
            .into_iter()
            .map(|n| Job::Capelli {
                n,
                k: k.unwrap_or(2),
                degree: degree.unwrap_or(2),
            })
            .collect(),
        "det-capelli" => range_or(cfg.n, 2..=2)
            .into_iter()
            .map(|n| Job::DetCapelli { n })
            .collect(),
        "adjoint" => range_or(cfg.n, 2..=2)
            .into_iter()
            .map(|n| Job::Adjoint { n, k: k.unwrap_or(2) })
            .collect(),
        "orbits" => range_or(cfg.n, 2..=2)
            .into_iter()
            .map(|n| Job::Orbits {
                n,
                degree: degree.unwrap_or(2),
            })
            .collect(),
        "u2h" => {
            let degree = degree.unwrap_or(3) as u32;
            vec![Job::U2h { degree, seed: cfg.seed }, Job::U2hLimit { degree }]
        }
        _ => Vec::new(),
    };
    (jobs, always_sampled)
}

/// Expand a configuration into tasks in report order.
pub fn plan(cfg: &SuiteConfig) -> Result<Vec<Task>, ConfigError> {
    cfg.validate()?;
    let names: Vec<&'static str> = if cfg.suite == "all" {
        suites::SUITES.to_vec()
    } else {
        vec![suite_name(&cfg.suite)]
    };
    let points = sample_points(cfg.seed, cfg.samples);
    let mut tasks = Vec::new();
    for suite in names {
        let (jobs, always_sampled) = suite_jobs(suite, cfg);
        for job in jobs {
            if cfg.mode == Mode::Exact || job.symbolic_only() {
                tasks.push(Task {
                    suite,
                    job,
                    point: None,
                });
            } else {
                for p in &points {
                    tasks.push(Task {
                        suite,
                        job: job.clone(),
                        point: Some(p.clone()),
                    });
                }
            }
        }
        for job in always_sampled {
            for p in &points {
                tasks.push(Task {
                    suite,
                    job: job.clone(),
                    point: Some(p.clone()),
                });
            }
        }
    }
    Ok(tasks)
}

/// Run tasks on at most `jobs` threads; results keep the task order.
pub fn execute(tasks: &[Task], jobs: usize) -> Vec<TaskResult> {
    let run = |t: &Task| {
        let start = Instant::now();
        let records = run_task(t);
        TaskResult {
            suite: t.suite,
            records,
            seconds: start.elapsed().as_secs_f64(),
        }
    };
    if jobs <= 1 {
        return tasks.iter().map(run).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| tasks.par_iter().map(run).collect()),
        Err(_) => tasks.iter().map(run).collect(),
    }
}
