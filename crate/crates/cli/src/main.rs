//! Command-line front end: loads catalog entries or documents, runs the
//! requested suite, prints one line per report, and writes the full
//! machine-readable run report.
//!
//! Exit codes: 0 all checks passed, 1 at least one check failed,
//! 2 structural or parse error, 3 unsupported feature.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rbcm::catalog::{self, EntryKind};
use rbcm::report::{CheckError, ConfigEcho, RunReport, ValidationReport};
use rbcm::suites;
use rbcm::tangent::TangentProbe;

#[derive(Parser)]
#[command(
    name = "rbcm",
    version,
    about = "verification suites for operator structure on groups, Lie algebras and crossed modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Seed for all sampled sweeps; recorded in the report.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Sample count per sweep on tolerance carriers.
    #[arg(long, default_value_t = 200)]
    budget: u64,
    /// Residual tolerance for float-mode checks.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Equality tolerance of matrix carriers built from the catalog
    /// (documents carry their own).
    #[arg(long, default_value_t = 1e-9)]
    eps: f64,
    /// Finite-difference step for Jacobian probes.
    #[arg(long = "fd-step", default_value_t = 1e-5)]
    fd_step: f64,
    /// Central-difference order (2 or 4).
    #[arg(long = "fd-scheme", default_value_t = 2)]
    fd_scheme: u8,
    /// Write the run report (JSON) here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a carrier or crossed module against its axioms.
    Validate {
        #[command(flatten)]
        common: Common,
        /// Catalog key to validate.
        #[arg(long, conflicts_with_all = ["group", "cm", "algebra", "acm"])]
        catalog: Option<String>,
        /// Group document (finite table or matrix family).
        #[arg(long)]
        group: Option<PathBuf>,
        /// Crossed-module document.
        #[arg(long)]
        cm: Option<PathBuf>,
        /// Lie-algebra document.
        #[arg(long)]
        algebra: Option<PathBuf>,
        /// Algebra-crossed-module document.
        #[arg(long)]
        acm: Option<PathBuf>,
    },
    /// Check operators and run every group-level construction they
    /// admit.
    RbCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with_all = ["group", "rb", "cm", "pair"])]
        catalog: Option<String>,
        /// Group document for a single-operator check.
        #[arg(long, requires = "rb")]
        group: Option<PathBuf>,
        /// Operator document for the group.
        #[arg(long)]
        rb: Option<PathBuf>,
        /// Crossed-module document for a pair check.
        #[arg(long, requires = "pair")]
        cm: Option<PathBuf>,
        /// Pair document for the crossed module.
        #[arg(long)]
        pair: Option<PathBuf>,
    },
    /// Braid-check the solution built from an operator.
    YbeSet {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with_all = ["group", "rb"])]
        catalog: Option<String>,
        #[arg(long, requires = "rb")]
        group: Option<PathBuf>,
        #[arg(long)]
        rb: Option<PathBuf>,
    },
    /// Verify the categorical solution and the operator endofunctor.
    YbeCat {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with_all = ["cm", "pair"])]
        catalog: Option<String>,
        #[arg(long, requires = "pair")]
        cm: Option<PathBuf>,
        #[arg(long)]
        pair: Option<PathBuf>,
    },
    /// Run the exact algebra-level suite.
    Algebra {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with_all = ["acm", "pair"])]
        catalog: Option<String>,
        #[arg(long, requires = "pair")]
        acm: Option<PathBuf>,
        #[arg(long)]
        pair: Option<PathBuf>,
    },
    /// Run the numeric differentiation/integration suite on matrix
    /// carriers.
    Lie {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        catalog: String,
    },
    /// List the built-in instances.
    Catalog {
        /// Print the entry list (default action).
        #[arg(long, default_value_t = true)]
        list: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                CheckError::Unsupported(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn config_of(common: &Common, catalog: Option<&String>, inputs: &[&Option<PathBuf>]) -> ConfigEcho {
    ConfigEcho {
        seed: common.seed,
        budget: common.budget,
        tolerance: common.tol,
        carrier_eps: common.eps,
        fd_step: common.fd_step,
        fd_scheme: common.fd_scheme,
        catalog: catalog.cloned(),
        inputs: inputs
            .iter()
            .filter_map(|p| p.as_ref().map(|p| p.display().to_string()))
            .collect(),
    }
}

fn run(cli: Cli) -> Result<ExitCode, CheckError> {
    match cli.command {
        Command::Catalog { .. } => {
            for e in catalog::entries() {
                let kind = match e.kind {
                    EntryKind::FinitePair => "finite pair",
                    EntryKind::FiniteOperator => "finite operator",
                    EntryKind::MatrixPair => "matrix pair",
                    EntryKind::AlgebraPair => "algebra pair",
                };
                let expect = if e.expected_pass {
                    "passes"
                } else {
                    "negative control"
                };
                println!("{:26} [{kind}, {expect}] {}", e.key, e.summary);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate {
            common,
            catalog: key,
            group,
            cm,
            algebra,
            acm,
        } => {
            let config = config_of(&common, key.as_ref(), &[&group, &cm, &algebra, &acm]);
            let reports = validate_dispatch(&common, key, group, cm, algebra, acm)?;
            finish("validate", config, reports, &common)
        }
        Command::RbCheck {
            common,
            catalog: key,
            group,
            rb,
            cm,
            pair,
        } => {
            let config = config_of(&common, key.as_ref(), &[&group, &rb, &cm, &pair]);
            let reports = rb_check_dispatch(&common, key, group, rb, cm, pair)?;
            finish("rb-check", config, reports, &common)
        }
        Command::YbeSet {
            common,
            catalog: key,
            group,
            rb,
        } => {
            let config = config_of(&common, key.as_ref(), &[&group, &rb]);
            let op = match (&key, &group, &rb) {
                (Some(k), _, _) => catalog::finite_operator(k)?,
                (None, Some(g), Some(r)) => rbcm::doc::load_rb_operator(g, r)?,
                _ => {
                    return Err(CheckError::Structural(
                        "ybe-set needs --catalog or --group with --rb".into(),
                    ))
                }
            };
            let reports = suites::set_ybe_suite(&op, common.budget)?;
            finish("ybe-set", config, reports, &common)
        }
        Command::YbeCat {
            common,
            catalog: key,
            cm,
            pair,
        } => {
            let config = config_of(&common, key.as_ref(), &[&cm, &pair]);
            let (module, pair) = match (&key, &cm, &pair) {
                (Some(k), _, _) => catalog::finite_pair(k)?,
                (None, Some(c), Some(p)) => {
                    let pair = rbcm::doc::load_rb_pair(c, p)?;
                    (pair.cm.clone(), pair)
                }
                _ => {
                    return Err(CheckError::Structural(
                        "ybe-cat needs --catalog or --cm with --pair".into(),
                    ))
                }
            };
            let reports = suites::categorical_suite(&module, &pair, common.budget)?;
            finish("ybe-cat", config, reports, &common)
        }
        Command::Algebra {
            common,
            catalog: key,
            acm,
            pair,
        } => {
            let config = config_of(&common, key.as_ref(), &[&acm, &pair]);
            let reports = match (&key, &acm, &pair) {
                (Some(k), _, _) => {
                    let pair = catalog::algebra_pair(k)?;
                    suites::algebra_suite(&pair, 0.0)
                }
                (None, Some(a), Some(p)) => {
                    let pair = rbcm::doc::load_algebra_pair(a, p)?;
                    suites::algebra_suite(&pair, 0.0)
                }
                _ => {
                    return Err(CheckError::Structural(
                        "algebra needs --catalog or --acm with --pair".into(),
                    ))
                }
            };
            finish("algebra", config, reports, &common)
        }
        Command::Lie {
            common,
            catalog: key,
        } => {
            let config = config_of(&common, Some(&key), &[]);
            let (_, pair) = catalog::matrix_pair(&key, common.seed, common.eps)?;
            let jac = TangentProbe::new(common.fd_step, common.fd_scheme)?;
            let bracket = TangentProbe::bracket_default();
            let reports = suites::lie_suite(
                &pair,
                &jac,
                &bracket,
                common.tol,
                rbcm::tangent::DEFAULT_BRACKET_TOLERANCE,
                common.budget,
            )?;
            finish("lie", config, reports, &common)
        }
    }
}

fn validate_dispatch(
    common: &Common,
    key: Option<String>,
    group: Option<PathBuf>,
    cm: Option<PathBuf>,
    algebra: Option<PathBuf>,
    acm: Option<PathBuf>,
) -> Result<Vec<ValidationReport>, CheckError> {
    if let Some(key) = key {
        let entry = catalog::find(&key)?;
        return Ok(match entry.kind {
            EntryKind::FinitePair => {
                let (module, _) = catalog::finite_pair(&key)?;
                suites::crossed_module_suite(&module, common.budget)
            }
            EntryKind::MatrixPair => {
                let (module, _) = catalog::matrix_pair(&key, common.seed, common.eps)?;
                suites::crossed_module_suite(&module, common.budget)
            }
            EntryKind::FiniteOperator => {
                let op = catalog::finite_operator(&key)?;
                vec![rbcm::group::validate_group(&op.host, common.budget)]
            }
            EntryKind::AlgebraPair => {
                let pair = catalog::algebra_pair(&key)?;
                suites::algebra_cm_suite(&pair.acm, 0.0)
            }
        });
    }
    if let Some(path) = group {
        return Ok(vec![rbcm::doc::load_group(&path)?.validate(common.budget)]);
    }
    if let Some(path) = cm {
        let module = rbcm::doc::load_crossed_module(&path)?;
        return Ok(suites::crossed_module_suite(&module, common.budget));
    }
    if let Some(path) = algebra {
        return Ok(match rbcm::doc::load_lie_algebra(&path)? {
            rbcm::doc::LoadedAlgebra::Rational(a) => vec![a.validate(0.0)],
            rbcm::doc::LoadedAlgebra::Float(a) => vec![a.validate(common.tol)],
        });
    }
    if let Some(path) = acm {
        let module = rbcm::doc::load_algebra_cm(&path)?;
        return Ok(suites::algebra_cm_suite(&module, 0.0));
    }
    Err(CheckError::Structural(
        "validate needs --catalog, --group, --cm, --algebra or --acm".into(),
    ))
}

fn rb_check_dispatch(
    common: &Common,
    key: Option<String>,
    group: Option<PathBuf>,
    rb: Option<PathBuf>,
    cm: Option<PathBuf>,
    pair: Option<PathBuf>,
) -> Result<Vec<ValidationReport>, CheckError> {
    if let Some(key) = key {
        let entry = catalog::find(&key)?;
        return Ok(match entry.kind {
            EntryKind::FiniteOperator => {
                suites::group_operator_suite(&catalog::finite_operator(&key)?, common.budget)
            }
            EntryKind::FinitePair => {
                let (_, pair) = catalog::finite_pair(&key)?;
                suites::group_pair_suite(&pair, common.budget)
            }
            EntryKind::MatrixPair => {
                let (_, pair) = catalog::matrix_pair(&key, common.seed, common.eps)?;
                suites::group_pair_suite(&pair, common.budget)
            }
            EntryKind::AlgebraPair => {
                return Err(CheckError::Structural(format!(
                    "`{key}` is an algebra entry; use the `algebra` command"
                )))
            }
        });
    }
    if let (Some(g), Some(r)) = (&group, &rb) {
        let op = rbcm::doc::load_rb_operator(g, r)?;
        return Ok(suites::group_operator_suite(&op, common.budget));
    }
    if let (Some(c), Some(p)) = (&cm, &pair) {
        let pair = rbcm::doc::load_rb_pair(c, p)?;
        return Ok(suites::group_pair_suite(&pair, common.budget));
    }
    Err(CheckError::Structural(
        "rb-check needs --catalog, --group with --rb, or --cm with --pair".into(),
    ))
}

fn finish(
    command: &str,
    config: ConfigEcho,
    reports: Vec<ValidationReport>,
    common: &Common,
) -> Result<ExitCode, CheckError> {
    let run = RunReport::new(command, config, reports);
    for rep in &run.reports {
        let status = if rep.passed() { "PASS" } else { "FAIL" };
        println!("[{status}] {} ({} checks)", rep.subject, rep.checks.len());
        if let Some(failure) = rep.first_failure() {
            println!(
                "       first failure: {} at {}",
                failure.law,
                failure.witness.as_deref().unwrap_or("(no witness)")
            );
        }
    }
    let json = run.to_json();
    match &common.out {
        Some(path) => std::fs::write(path, json)
            .map_err(|e| CheckError::Structural(format!("cannot write report: {e}")))?,
        None => println!("{json}"),
    }
    Ok(if run.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
