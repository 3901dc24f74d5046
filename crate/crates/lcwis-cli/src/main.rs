//! `lcwis`: solve LCWIS instances, run the MAX-SAT reduction chain,
//! verify the gadget identities, and benchmark the quadratic solver.
//!
//! Exit codes: 0 success, 1 internal invariant breach (a property failed
//! or an oracle disagreed), 2 unreadable or malformed input, 3 budget
//! exceeded. Reports go to standard output, diagnostics to standard error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use lcwis_cli::bench;
use lcwis_cli::formats;
use lcwis_core::reduce::{self, ReduceError};
use lcwis_core::solve::{lcwis, wlcwis, SolveError};
use lcwis_core::verify::{run_suite, Suite, SuiteReport, VerifyConfig};
use lcwis_core::Sequence;

#[derive(Parser)]
#[command(name = "lcwis", version, about = "Longest common weakly increasing subsequence toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a sequence pair exactly
    Solve {
        #[command(subcommand)]
        variant: SolveVariant,
    },
    /// Transform instances along the CNF -> vectors -> LCWIS chain
    Reduce {
        #[command(subcommand)]
        variant: ReduceVariant,
    },
    /// Exact MAX-SAT of a DIMACS formula via one LCWIS solve
    Maxsat {
        /// DIMACS CNF file
        file: PathBuf,
        /// Cross-check the answer against full assignment enumeration
        #[arg(long)]
        oracle: bool,
        /// Raise the variable budget past the default of 12
        #[arg(long)]
        unsafe_budget: Option<u32>,
    },
    /// Run the seeded property suites
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random trials per suite (default varies by suite)
        #[arg(long)]
        trials: Option<u64>,
        /// Run a single suite: coordinate, vector, combine, expansion,
        /// oracle, andor, or pipeline
        #[arg(long)]
        suite: Option<String>,
    },
    /// Measure solver scaling on random inputs
    Bench {
        /// Comma-separated ascending input sizes
        #[arg(long, value_delimiter = ',', default_values_t = [4096usize, 8192, 16384])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum SolveVariant {
    /// Unweighted: maximize length
    Lcwis {
        /// Two-line sequence file
        file: PathBuf,
        /// Also print one optimal subsequence
        #[arg(long)]
        witness: bool,
    },
    /// Weighted: maximize total symbol weight
    Wlcwis {
        /// Two-line sequence file
        file: PathBuf,
        /// symbol:weight lines covering every occurring symbol
        weights: PathBuf,
        #[arg(long)]
        witness: bool,
    },
}

#[derive(Subcommand)]
enum ReduceVariant {
    /// Split-and-list a formula into two vector sets
    CnfToOvp {
        file: PathBuf,
        /// Output stem; writes <stem>.u.vec and <stem>.v.vec
        #[arg(long)]
        output: PathBuf,
        #[arg(long)]
        unsafe_budget: Option<u32>,
    },
    /// Build the gadget instance for two vector-set files
    OvpToLcwis {
        u_file: PathBuf,
        v_file: PathBuf,
        /// Output stem; writes <stem>.seq and <stem>.cert
        #[arg(long)]
        output: PathBuf,
    },
    /// Full chain from a formula to a solvable instance
    CnfToLcwis {
        file: PathBuf,
        /// Output stem; writes <stem>.seq and <stem>.cert
        #[arg(long)]
        output: PathBuf,
        #[arg(long)]
        unsafe_budget: Option<u32>,
    },
}

enum CliError {
    /// Exit 1: a verified property failed or an internal value was impossible.
    Internal(String),
    /// Exit 2: unreadable, malformed, or inconsistent input.
    Parse(String),
    /// Exit 3: the requested work exceeds a size budget.
    Budget(String),
}

impl CliError {
    fn message(&self) -> &str {
        match self {
            CliError::Internal(m) | CliError::Parse(m) | CliError::Budget(m) => m,
        }
    }

    fn code(&self) -> u8 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

fn reduce_error(e: ReduceError) -> CliError {
    match e {
        ReduceError::BudgetExceeded { .. } | ReduceError::TooManyVariables { .. } => {
            CliError::Budget(e.to_string())
        }
        // These can only arise from values this binary constructed itself.
        ReduceError::ValueOutOfBand { .. } | ReduceError::Gadget(_) | ReduceError::Solve(_) => {
            CliError::Internal(e.to_string())
        }
        _ => CliError::Parse(e.to_string()),
    }
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn diagnose<T>(
    result: Result<T, formats::ParseDiagnostic>,
    path: &Path,
) -> Result<T, CliError> {
    result.map_err(|d| CliError::Parse(format!("{}: {d}", path.display())))
}

/// Reads a two-line sequence file into a pair.
fn read_pair(path: &Path) -> Result<(Sequence, Sequence), CliError> {
    let mut seqs = diagnose(formats::parse_sequences(&read(path)?), path)?;
    if seqs.len() != 2 {
        return Err(CliError::Parse(format!(
            "{}: expected exactly 2 sequences, found {}",
            path.display(),
            seqs.len()
        )));
    }
    let b = seqs.pop().unwrap();
    let a = seqs.pop().unwrap();
    Ok((a, b))
}

fn stem_path(stem: &Path, suffix: &str) -> PathBuf {
    let mut name = stem.as_os_str().to_os_string();
    name.push(suffix);
    PathBuf::from(name)
}

fn print_result(value: i64, witness: Option<&Sequence>) {
    println!("value={value}");
    if let Some(w) = witness {
        println!("witness={w}");
    }
}

fn cmd_solve(variant: SolveVariant) -> Result<(), CliError> {
    match variant {
        SolveVariant::Lcwis { file, witness } => {
            let (a, b) = read_pair(&file)?;
            let result = lcwis(&a, &b, witness);
            print_result(result.value, result.witness.as_ref());
        }
        SolveVariant::Wlcwis {
            file,
            weights,
            witness,
        } => {
            let (a, b) = read_pair(&file)?;
            let w = diagnose(formats::parse_alphabet(&read(&weights)?), &weights)?;
            let result = wlcwis(&a, &b, &w, witness).map_err(|e| match e {
                // A sequence symbol the weight file does not cover.
                SolveError::Seq(_) => CliError::Parse(e.to_string()),
                SolveError::OracleTooLong { .. } => CliError::Internal(e.to_string()),
            })?;
            print_result(result.value, result.witness.as_ref());
        }
    }
    Ok(())
}

fn budget_check(f: &reduce::CnfFormula, unsafe_budget: Option<u32>) -> Result<u32, CliError> {
    let budget = unsafe_budget.unwrap_or(reduce::DEFAULT_MAXSAT_BUDGET);
    if f.num_vars() > budget {
        return Err(CliError::Budget(
            ReduceError::BudgetExceeded {
                num_vars: f.num_vars(),
                budget,
            }
            .to_string(),
        ));
    }
    Ok(budget)
}

fn cmd_reduce(variant: ReduceVariant) -> Result<(), CliError> {
    match variant {
        ReduceVariant::CnfToOvp {
            file,
            output,
            unsafe_budget,
        } => {
            let f = diagnose(formats::parse_dimacs(&read(&file)?), &file)?;
            budget_check(&f, unsafe_budget)?;
            let (u, v) = reduce::vectors_from_cnf(&f).map_err(reduce_error)?;
            println!("u_vectors={} v_vectors={} dim={}", u.len(), v.len(), u.dim());
            write(&stem_path(&output, ".u.vec"), &formats::serialize_vectors(&u))?;
            write(&stem_path(&output, ".v.vec"), &formats::serialize_vectors(&v))?;
        }
        ReduceVariant::OvpToLcwis {
            u_file,
            v_file,
            output,
        } => {
            let u = diagnose(formats::parse_vectors(&read(&u_file)?), &u_file)?;
            let v = diagnose(formats::parse_vectors(&read(&v_file)?), &v_file)?;
            let (a, b, cert) = reduce::ovp_to_lcwis_instance(&u, &v).map_err(reduce_error)?;
            emit_instance(&output, &a, &b, &cert)?;
        }
        ReduceVariant::CnfToLcwis {
            file,
            output,
            unsafe_budget,
        } => {
            let f = diagnose(formats::parse_dimacs(&read(&file)?), &file)?;
            budget_check(&f, unsafe_budget)?;
            let (u, v) = reduce::vectors_from_cnf(&f).map_err(reduce_error)?;
            let (a, b, mut cert) = reduce::ovp_to_lcwis_instance(&u, &v).map_err(reduce_error)?;
            cert.num_clauses = Some(f.num_clauses());
            emit_instance(&output, &a, &b, &cert)?;
        }
    }
    Ok(())
}

fn emit_instance(
    output: &Path,
    a: &Sequence,
    b: &Sequence,
    cert: &reduce::ReductionCertificate,
) -> Result<(), CliError> {
    println!("p1_tokens={} p2_tokens={}", a.len(), b.len());
    write(
        &stem_path(output, ".seq"),
        &formats::serialize_sequences(&[a.clone(), b.clone()]),
    )?;
    write(
        &stem_path(output, ".cert"),
        &formats::serialize_certificate(cert),
    )
}

fn cmd_maxsat(file: PathBuf, oracle: bool, unsafe_budget: Option<u32>) -> Result<(), CliError> {
    let f = diagnose(formats::parse_dimacs(&read(&file)?), &file)?;
    let budget = budget_check(&f, unsafe_budget)?;
    let value = reduce::maxsat_via_lcwis(&f, budget).map_err(reduce_error)?;
    println!("maxsat={value}");
    if oracle {
        let reference = reduce::maxsat_oracle(&f).map_err(reduce_error)?;
        if reference != value {
            return Err(CliError::Internal(format!(
                "reduction answered {value}, but assignment enumeration finds {reference}"
            )));
        }
        println!("oracle=agree");
    }
    Ok(())
}

fn cmd_verify(seed: u64, trials: Option<u64>, suite: Option<String>) -> Result<(), CliError> {
    let suites: Vec<Suite> = match suite {
        Some(name) => {
            let suite = Suite::from_name(&name).ok_or_else(|| {
                let known: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                CliError::Parse(format!(
                    "unknown suite `{name}`; expected one of {}",
                    known.join(", ")
                ))
            })?;
            vec![suite]
        }
        None => Suite::ALL.to_vec(),
    };

    let config = VerifyConfig { seed, trials };
    let mut first_failure: Option<SuiteReport> = None;
    for suite in suites {
        let report = run_suite(suite, &config);
        println!("{report}");
        if !report.passed() && first_failure.is_none() {
            first_failure = Some(report);
        }
    }
    match first_failure {
        None => Ok(()),
        Some(report) => Err(CliError::Internal(format!(
            "suite {} failed: {}",
            report.suite.name(),
            report
                .counterexample
                .unwrap_or_else(|| "no counterexample captured".into())
        ))),
    }
}

fn cmd_bench(sizes: Vec<usize>, repeats: usize, seed: u64) -> Result<(), CliError> {
    let rows = bench::run(&sizes, repeats, seed).map_err(|e| CliError::Parse(e.to_string()))?;
    for row in rows {
        let ratio = match row.ratio {
            Some(r) => format!("{r:.2}"),
            None => "-".into(),
        };
        println!(
            "size={} median_ms={:.3} ratio={ratio}",
            row.size,
            row.median.as_secs_f64() * 1e3
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve { variant } => cmd_solve(variant),
        Command::Reduce { variant } => cmd_reduce(variant),
        Command::Maxsat {
            file,
            oracle,
            unsafe_budget,
        } => cmd_maxsat(file, oracle, unsafe_budget),
        Command::Verify {
            seed,
            trials,
            suite,
        } => cmd_verify(seed, trials, suite),
        Command::Bench {
            sizes,
            repeats,
            seed,
        } => cmd_bench(sizes, repeats, seed),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
