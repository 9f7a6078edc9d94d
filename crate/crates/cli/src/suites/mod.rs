//! Named identity-verification suites.
//!
//! A suite is a list of checks. Checks run concurrently on a pool of
//! `jobs` threads and the report keeps definition order.

use std::time::Instant;

use dendexp_core::{AlgebraError, Ring};
use rayon::prelude::*;

use crate::report::{IdentityResult, Status, VerifyReport};

mod algebra;
mod combinatorics;
mod series;
pub(crate) mod support;

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite `{0}`; available: {list}", list = SUITE_NAMES.join(", "))]
    UnknownSuite(String),
    #[error("suite `{suite}` needs --max-degree at least {min}, got {got}")]
    DegreeTooSmall {
        suite: String,
        min: usize,
        got: usize,
    },
    #[error("cannot start worker pool: {0}")]
    Pool(String),
}

/// Parameters shared by every check of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_degree: usize,
    pub ring: Ring,
    pub seed: u64,
    pub jobs: usize,
}

impl SuiteConfig {
    pub fn new(max_degree: usize, ring: Ring) -> SuiteConfig {
        SuiteConfig {
            max_degree,
            ring,
            seed: 0,
            jobs: 0,
        }
    }
}

/// Result of running one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub holds: bool,
    pub failing_degree: Option<usize>,
    pub counterexample: Option<String>,
    pub detail: String,
}

type CheckFn = Box<dyn Fn(&SuiteConfig) -> dendexp_core::Result<Outcome> + Send + Sync>;

pub(crate) struct Check {
    name: String,
    expect_fail: bool,
    run: CheckFn,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        run: impl Fn(&SuiteConfig) -> dendexp_core::Result<Outcome> + Send + Sync + 'static,
    ) -> Check {
        Check {
            name: name.into(),
            expect_fail: false,
            run: Box::new(run),
        }
    }

    /// A documented false statement: failing is the expected result.
    pub fn expected_fail(
        name: impl Into<String>,
        run: impl Fn(&SuiteConfig) -> dendexp_core::Result<Outcome> + Send + Sync + 'static,
    ) -> Check {
        Check {
            expect_fail: true,
            ..Check::new(name, run)
        }
    }

    fn execute(&self, cfg: &SuiteConfig) -> IdentityResult {
        let outcome = (self.run)(cfg).unwrap_or_else(|e: AlgebraError| Outcome {
            holds: false,
            failing_degree: None,
            counterexample: None,
            detail: format!("error: {e}"),
        });
        let errored = outcome.failing_degree.is_none() && !outcome.holds;
        let (status, detail) = match (self.expect_fail, outcome.holds) {
            (false, true) => (Status::Pass, outcome.detail),
            (false, false) => (Status::Fail, outcome.detail),
            (true, false) if !errored => (Status::ExpectedFail, outcome.detail),
            (true, false) => (Status::Fail, outcome.detail),
            (true, true) => (
                Status::Fail,
                format!("expected to fail but holds; {}", outcome.detail),
            ),
        };
        IdentityResult {
            name: self.name.clone(),
            status,
            failing_degree: outcome.failing_degree,
            counterexample: outcome.counterexample,
            detail,
        }
    }
}

type SuiteFn = fn(&SuiteConfig) -> Vec<Check>;

struct SuiteDef {
    name: &'static str,
    min_degree: usize,
    in_all: bool,
    build: SuiteFn,
}

const SUITES: &[SuiteDef] = &[
    SuiteDef {
        name: "dend-axioms",
        min_degree: 3,
        in_all: true,
        build: algebra::dend_axioms,
    },
    SuiteDef {
        name: "zinb-axiom",
        min_degree: 3,
        in_all: true,
        build: algebra::zinb_axiom,
    },
    SuiteDef {
        name: "lemma-2-2",
        min_degree: 1,
        in_all: true,
        build: series::lemma_2_2,
    },
    SuiteDef {
        name: "prop-2-3",
        min_degree: 1,
        in_all: true,
        build: series::prop_2_3,
    },
    SuiteDef {
        name: "thm-3-1",
        min_degree: 2,
        in_all: true,
        build: series::thm_3_1,
    },
    SuiteDef {
        name: "cor-3-2",
        min_degree: 2,
        in_all: true,
        build: series::cor_3_2,
    },
    SuiteDef {
        name: "cor-3-4",
        min_degree: 2,
        in_all: true,
        build: series::cor_3_4,
    },
    SuiteDef {
        name: "cor-3-4-literal-sign",
        min_degree: 2,
        in_all: false,
        build: series::cor_3_4_literal_sign,
    },
    SuiteDef {
        name: "prop-3-6",
        min_degree: 2,
        in_all: true,
        build: series::prop_3_6,
    },
    SuiteDef {
        name: "power-sum",
        min_degree: 1,
        in_all: true,
        build: combinatorics::power_sum,
    },
    SuiteDef {
        name: "fibers",
        min_degree: 3,
        in_all: true,
        build: combinatorics::fibers,
    },
    SuiteDef {
        name: "example-1-4",
        min_degree: 2,
        in_all: true,
        build: combinatorics::example_1_4,
    },
    SuiteDef {
        name: "prelie-brace",
        min_degree: 3,
        in_all: true,
        build: algebra::prelie_brace,
    },
    SuiteDef {
        name: "quotient-morphism",
        min_degree: 2,
        in_all: true,
        build: algebra::quotient_morphism,
    },
    SuiteDef {
        name: "zinbiel-additivity",
        min_degree: 2,
        in_all: true,
        build: series::zinbiel_additivity,
    },
    SuiteDef {
        name: "y-linearity",
        min_degree: 2,
        in_all: true,
        build: series::y_linearity,
    },
    SuiteDef {
        name: "charp-2-6",
        min_degree: 1,
        in_all: true,
        build: combinatorics::charp_2_6,
    },
    SuiteDef {
        name: "matrix-axioms",
        min_degree: 1,
        in_all: true,
        build: algebra::matrix_axioms,
    },
    SuiteDef {
        name: "tau-contract",
        min_degree: 2,
        in_all: true,
        build: algebra::tau_contract,
    },
];

/// Every runnable suite name, `all` last.
pub const SUITE_NAMES: &[&str] = &[
    "dend-axioms",
    "zinb-axiom",
    "lemma-2-2",
    "prop-2-3",
    "thm-3-1",
    "cor-3-2",
    "cor-3-4",
    "cor-3-4-literal-sign",
    "prop-3-6",
    "power-sum",
    "fibers",
    "example-1-4",
    "prelie-brace",
    "quotient-morphism",
    "zinbiel-additivity",
    "y-linearity",
    "charp-2-6",
    "matrix-axioms",
    "tau-contract",
    "all",
];

fn checks_for(name: &str, cfg: &SuiteConfig) -> Result<Vec<Check>, SuiteError> {
    let too_small = |min: usize| SuiteError::DegreeTooSmall {
        suite: name.to_string(),
        min,
        got: cfg.max_degree,
    };
    if name == "all" {
        let min = SUITES
            .iter()
            .filter(|s| s.in_all)
            .map(|s| s.min_degree)
            .max()
            .unwrap_or(1);
        if cfg.max_degree < min {
            return Err(too_small(min));
        }
        let mut checks = Vec::new();
        for s in SUITES.iter().filter(|s| s.in_all) {
            for mut c in (s.build)(cfg) {
                c.name = format!("{}: {}", s.name, c.name);
                checks.push(c);
            }
        }
        return Ok(checks);
    }
    let def = SUITES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| SuiteError::UnknownSuite(name.to_string()))?;
    if cfg.max_degree < def.min_degree {
        return Err(too_small(def.min_degree));
    }
    Ok((def.build)(cfg))
}

/// Run a named suite. `cfg.jobs == 0` uses one thread per core.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<VerifyReport, SuiteError> {
    let start = Instant::now();
    let checks = checks_for(name, cfg)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| SuiteError::Pool(e.to_string()))?;
    let results: Vec<IdentityResult> =
        pool.install(|| checks.par_iter().map(|c| c.execute(cfg)).collect());
    let ms = u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX);
    Ok(VerifyReport::new(
        name,
        cfg.max_degree,
        cfg.ring,
        cfg.seed,
        results,
        ms,
    ))
}
