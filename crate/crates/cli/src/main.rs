//! `pio`: analyze and evaluate integer linear recurrences from JSON specs.
//!
//! Exit codes: 0 success, 1 internal error, 2 invalid input, 3 resource cap
//! exceeded (modulus or precision), 4 time budget exceeded.

mod report;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;

use pio_core::classifier::{classify_with_cap, Classification};
use pio_core::degeneracy::DEFAULT_MODULUS_CAP;
use pio_core::document::{parse_index, parse_spec, AnalysisDocument};
use pio_core::evaluator::{bench_compare, eval_pio_until, EvalMethod};
use pio_core::powersum::{power_sum, verify_powersum, zero_scan};
use pio_core::recurrence::RecurrenceSpec;
use pio_core::Error;

#[derive(Parser)]
#[command(name = "pio", version, about = "Exact evaluation of integer linear recurrences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Spec document (JSON); stdin when absent or "-".
    input: Option<PathBuf>,

    /// Largest sectioning modulus to accept.
    #[arg(long, env = "PIO_MODULUS_CAP", default_value_t = DEFAULT_MODULUS_CAP)]
    modulus_cap: u64,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Simple,
    Matrix,
    Pio,
}

impl From<MethodArg> for EvalMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => EvalMethod::Auto,
            MethodArg::Simple => EvalMethod::ForcedSimple,
            MethodArg::Matrix => EvalMethod::ForcedMatrix,
            MethodArg::Pio => EvalMethod::ForcedPio,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify residue classes and print the analysis document.
    Analyze {
        #[command(flatten)]
        common: Common,
    },
    /// Print f(n) in decimal.
    Eval {
        /// Index n >= 1, any size.
        n: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Seconds allowed for forward iteration.
        #[arg(long, default_value_t = 30.0)]
        budget: f64,
    },
    /// Time the dispatching evaluator against forward iteration.
    Bench {
        #[command(flatten)]
        common: Common,
        /// Comma-separated indices.
        #[arg(long, value_delimiter = ',', required = true)]
        ns: Vec<String>,
        /// Seconds allowed for forward iteration per index.
        #[arg(long, default_value_t = 30.0)]
        budget: f64,
    },
    /// List n <= limit with f(n) = 0.
    Zeros {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1000)]
        limit: u64,
    },
    /// Certified numeric power-sum representation.
    Powersum {
        #[command(flatten)]
        common: Common,
        /// Enclosure width target in bits.
        #[arg(long, default_value_t = 64)]
        precision: u64,
    },
    /// Minimal recurrences of the m-sections.
    Sections {
        #[command(flatten)]
        common: Common,
        /// Section modulus; the computed one when absent.
        #[arg(long)]
        m: Option<u64>,
    },
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InvalidSpec(_) | Error::OutOfRange(_) => 2,
            Error::ModulusCapExceeded { .. } | Error::PrecisionExhausted { .. } => 3,
            Error::BudgetExceeded { .. } => 4,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn budget(seconds: f64) -> Result<Duration, Failure> {
    Duration::try_from_secs_f64(seconds).map_err(|_| usage(format!("--budget {seconds} is not a valid duration")))
}

fn index_u64(n: &BigUint) -> Result<u64, Failure> {
    n.to_u64()
        .ok_or_else(|| usage(format!("n = {n} is too large for a forced iteration method")))
}

fn read_input(common: &Common) -> Result<RecurrenceSpec, Failure> {
    let text = match &common.input {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| usage(format!("cannot read {}: {e}", p.display())))?
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    Ok(parse_spec(&text)?)
}

fn classify_input(common: &Common) -> Result<Classification, Failure> {
    Ok(classify_with_cap(&read_input(common)?, common.modulus_cap)?)
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Analyze { common } => {
            let cls = classify_input(&common)?;
            let doc = AnalysisDocument::from_classification(&cls);
            Ok(match common.format {
                Format::Json => doc.to_json(),
                Format::Text => report::analysis_text(&cls),
            })
        }
        Command::Eval {
            n,
            common,
            method,
            budget: seconds,
        } => {
            let n = parse_index("n", &n)?;
            let deadline = Instant::now() + budget(seconds)?;
            let spec = read_input(&common)?;
            let method = EvalMethod::from(method);
            // forced paths skip classification, so no modulus cap applies
            let value = match method {
                EvalMethod::ForcedSimple => spec.eval_simple_until(index_u64(&n)?, Some(deadline))?,
                EvalMethod::ForcedMatrix => spec.eval_matrix(index_u64(&n)?)?,
                _ => {
                    let cls = classify_with_cap(&spec, common.modulus_cap)?;
                    eval_pio_until(&cls, &n, method, Some(deadline))?
                }
            };
            Ok(format!("{value}\n"))
        }
        Command::Bench {
            common,
            ns,
            budget: seconds,
        } => {
            let indices = ns
                .iter()
                .enumerate()
                .map(|(i, s)| parse_index(&format!("ns[{i}]"), s.trim()))
                .collect::<Result<Vec<BigUint>, _>>()?;
            let cls = classify_input(&common)?;
            let report = bench_compare(&cls, &indices, budget(seconds)?)?;
            Ok(match common.format {
                Format::Json => report::bench_json(&report),
                Format::Text => report::bench_text(&report),
            })
        }
        Command::Zeros { common, limit } => {
            let cls = classify_input(&common)?;
            let zeros = zero_scan(&cls, limit);
            Ok(match common.format {
                Format::Json => report::zeros_json(limit, &zeros),
                Format::Text => report::zeros_text(&zeros),
            })
        }
        Command::Powersum { common, precision } => {
            if precision == 0 {
                return Err(usage("--precision must be positive"));
            }
            let spec = read_input(&common)?;
            let s = power_sum(&spec, precision)?;
            let check = verify_powersum(&s, 2 * spec.order().max(1) as u64)?;
            Ok(match common.format {
                Format::Json => report::powersum_json(&s, &check),
                Format::Text => report::powersum_text(&s, &check),
            })
        }
        Command::Sections { common, m } => {
            let spec = read_input(&common)?;
            let m = match m {
                Some(0) => return Err(usage("--m must be at least 1")),
                Some(m) if m > common.modulus_cap => {
                    return Err(Failure {
                        code: 3,
                        message: format!("--m {m} exceeds the modulus cap {}", common.modulus_cap),
                    })
                }
                Some(m) => m,
                None => classify_with_cap(&spec, common.modulus_cap)?.modulus(),
            };
            let sections = (1..=m)
                .map(|j| spec.section(m, j))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(match common.format {
                Format::Json => report::sections_json(m, &sections),
                Format::Text => report::sections_text(m, &sections),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("pio: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
