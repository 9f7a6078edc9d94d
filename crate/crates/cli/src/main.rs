use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dendexp_cli::{eval, parse, run_suite, SuiteConfig};
use dendexp_core::json::series_to_json;
use dendexp_core::zinbiel::phi_fiber_count;
use dendexp_core::{enumerate_trees, Ring};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "dendexp",
    version,
    about = "Exact computations in free dendriform and Zinbiel algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// `int` or `mod:P` for a prime P.
        #[arg(long, default_value = "int")]
        ring: Ring,
        /// Worker threads; 0 means one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate an expression as a truncated series.
    Expand {
        #[arg(long)]
        expr: String,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, default_value = "int")]
        ring: Ring,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Fiber sizes of the quotient map over trees with n + 1 leaves.
    Fibers {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Serialize)]
struct FiberJson {
    tree: String,
    count: String,
}

#[derive(Serialize)]
struct FibersJson {
    n: usize,
    fibers: Vec<FiberJson>,
    total: String,
}

const USAGE_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            suite,
            max_degree,
            ring,
            jobs,
            seed,
            format,
        } => {
            let cfg = SuiteConfig {
                max_degree,
                ring,
                seed,
                jobs,
            };
            match run_suite(&suite, &cfg) {
                Ok(report) => {
                    match format {
                        Format::Text => print!("{}", report.to_text()),
                        Format::Json => println!("{}", report.to_json()),
                    }
                    if report.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(USAGE_ERROR)
                }
            }
        }
        Command::Expand {
            expr,
            max_degree,
            ring,
            format,
        } => {
            let parsed = match parse(&expr) {
                Ok(e) => e,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(USAGE_ERROR);
                }
            };
            match eval(&parsed, max_degree, ring) {
                Ok(s) => {
                    match format {
                        Format::Text => println!("{}", s.render()),
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string_pretty(&series_to_json(&s))
                                .expect("series serializes")
                        ),
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(USAGE_ERROR)
                }
            }
        }
        Command::Fibers { n, format } => {
            let trees = match enumerate_trees(n + 1) {
                Ok(t) if n > 0 => t,
                _ => {
                    eprintln!("error: --n must be at least 1");
                    return ExitCode::from(USAGE_ERROR);
                }
            };
            let mut fibers = Vec::with_capacity(trees.len());
            let mut total = dendexp_core::Coeff::ZERO;
            for t in trees.iter() {
                let c = phi_fiber_count(t).expect("n >= 1");
                total = total.add(&c);
                fibers.push(FiberJson {
                    tree: t.encode(),
                    count: c.to_string(),
                });
            }
            match format {
                Format::Text => {
                    for f in &fibers {
                        println!("{} {}", f.tree, f.count);
                    }
                    println!("total {total}");
                }
                Format::Json => {
                    let out = FibersJson {
                        n,
                        fibers,
                        total: total.to_string(),
                    };
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&out).expect("fibers serialize")
                    );
                }
            }
            ExitCode::SUCCESS
        }
    }
}
