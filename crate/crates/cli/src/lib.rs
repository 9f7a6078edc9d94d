//! Expression language, evaluator and identity-verification suites for the
//! `dendexp` command line tool.

pub mod eval;
pub mod expr;
pub mod parse;
pub mod report;
pub mod suites;

pub use eval::eval;
pub use expr::Expr;
pub use parse::{parse, ParseError};
pub use report::{IdentityResult, Status, VerifyReport};
pub use suites::{run_suite, SuiteConfig, SuiteError, SUITE_NAMES};
