//! Command-line surface: every command writes exactly one JSON document (or
//! CSV on request) to stdout with a fixed key order and exact integers;
//! diagnostics go to stderr only.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain or input error,
//! 3 verification or agreement failure. No other codes.

use std::env;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::closed_form::{self, ClassicSummary};
use crate::domain::{gcd, BoundedInstance, Error};
use crate::oracle::{self, GeneralInstance, DEFAULT_CAPACITY};
use crate::representation;

/// Bumped on any output field change.
pub const SCHEMA_VERSION: &str = "1";

/// Environment variable overriding the oracle capacity (positive integer).
/// The `--capacity` flag, where available, wins over the environment.
pub const CAPACITY_ENV_VAR: &str = "COINBOUND_CAPACITY";

pub mod exit_code {
    pub const SUCCESS: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const DOMAIN: i32 = 2;
    pub const MISMATCH: i32 = 3;
}

/// Parses `std::env::args`, executes, prints, and returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = err.print();
                return exit_code::SUCCESS;
            }
            eprint!("{err}");
            return exit_code::USAGE;
        }
    };
    let capacity = match capacity_from_env() {
        Ok(capacity) => capacity,
        Err(message) => {
            eprintln!("error: {message}");
            return exit_code::USAGE;
        }
    };
    match execute(cli.command, capacity) {
        Ok(output) => {
            print!("{}", output.stdout);
            output.code
        }
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            exit_code::USAGE
        }
        Err(CliError::Domain(err)) => {
            eprintln!("error: {err}");
            exit_code::DOMAIN
        }
    }
}

fn capacity_from_env() -> Result<u64, String> {
    match env::var(CAPACITY_ENV_VAR) {
        Ok(raw) => match raw.parse::<u64>() {
            Ok(capacity) if capacity > 0 => Ok(capacity),
            _ => Err(format!(
                "{CAPACITY_ENV_VAR} must be a positive integer, got {raw:?}"
            )),
        },
        Err(env::VarError::NotPresent) => Ok(DEFAULT_CAPACITY),
        Err(env::VarError::NotUnicode(_)) => {
            Err(format!("{CAPACITY_ENV_VAR} must be a positive integer"))
        }
    }
}

#[derive(Parser)]
#[command(
    name = "coinbound",
    version,
    about = "Exact counts, gaps, and witnesses for two bounded coin denominations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the reachable values of an instance
    Count(CountArgs),
    /// List the unachievable values of an instance
    Gaps(GapsArgs),
    /// Classic unbounded scalars: gap count h and Frobenius number g
    Frobenius(FrobeniusArgs),
    /// Find a coefficient pair representing a target value
    Represent(RepresentArgs),
    /// Sweep instances and pit the closed form against the oracle
    Verify(VerifyArgs),
}

#[derive(Args)]
struct InstanceArgs {
    /// First coin denomination
    #[arg(long, allow_negative_numbers = true)]
    m: i64,
    /// Second coin denomination (coprime with m)
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    /// Maximum number of m-coins
    #[arg(long = "A", allow_negative_numbers = true)]
    supply_m: i64,
    /// Maximum number of n-coins
    #[arg(long = "B", allow_negative_numbers = true)]
    supply_n: i64,
}

impl InstanceArgs {
    fn build(&self) -> Result<BoundedInstance, CliError> {
        Ok(BoundedInstance::new(
            self.m,
            self.n,
            self.supply_m,
            self.supply_n,
        )?)
    }

    fn echo(&self) -> InstanceEcho {
        InstanceEcho {
            m: self.m,
            n: self.n,
            supply_m: self.supply_m,
            supply_n: self.supply_n,
        }
    }
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Computation route
    #[arg(long, value_enum, default_value_t = Method::Formula)]
    method: Method,
}

#[derive(Args)]
struct GapsArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
struct FrobeniusArgs {
    /// First coin denomination
    #[arg(long, allow_negative_numbers = true)]
    m: i64,
    /// Second coin denomination (coprime with m)
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
}

#[derive(Args)]
struct RepresentArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Target value in 0..=A*m+B*n
    #[arg(long, allow_negative_numbers = true)]
    s: i64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest denomination in the sweep; all coprime pairs 2 <= m < n <= m-max
    #[arg(long, allow_negative_numbers = true)]
    m_max: i64,
    /// Supplies range over 0..=bound-factor*n (for A) and 0..=bound-factor*m (for B)
    #[arg(long, default_value_t = 2)]
    bound_factor: u64,
    /// Oracle capacity override (defaults to COINBOUND_CAPACITY or 10^7)
    #[arg(long)]
    capacity: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Oracle,
    Both,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Oracle => "oracle",
            Method::Both => "both",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Domain(err)
    }
}

struct Output {
    stdout: String,
    code: i32,
}

impl Output {
    fn success(stdout: String) -> Self {
        Output {
            stdout,
            code: exit_code::SUCCESS,
        }
    }
}

/// Single JSON document per invocation; field order here is the documented
/// key order of the output.
#[derive(Serialize)]
struct Envelope<I: Serialize, R: Serialize> {
    schema_version: &'static str,
    command: &'static str,
    input: I,
    result: R,
    #[serde(skip_serializing_if = "Option::is_none")]
    case: Option<&'static str>,
    method: &'static str,
}

fn to_json_line(value: &impl Serialize) -> String {
    let mut line = serde_json::to_string(value).expect("output types always serialize");
    line.push('\n');
    line
}

#[derive(Serialize)]
struct InstanceEcho {
    m: i64,
    n: i64,
    #[serde(rename = "A")]
    supply_m: i64,
    #[serde(rename = "B")]
    supply_n: i64,
}

#[derive(Serialize)]
struct PairEcho {
    m: i64,
    n: i64,
}

#[derive(Serialize)]
struct RepresentEcho {
    m: i64,
    n: i64,
    #[serde(rename = "A")]
    supply_m: i64,
    #[serde(rename = "B")]
    supply_n: i64,
    s: i64,
}

#[derive(Serialize)]
struct VerifyEcho {
    m_max: i64,
    bound_factor: u64,
    capacity: u64,
}

#[derive(Serialize)]
struct CountResult {
    count: u64,
}

#[derive(Serialize)]
struct CountBothResult {
    count_formula: u64,
    count_oracle: u64,
    agree: bool,
}

#[derive(Serialize)]
struct GapsResult {
    gaps: Vec<u64>,
    lower_gaps: Vec<u64>,
    upper_gaps: Vec<u64>,
}

#[derive(Serialize)]
struct FrobeniusResult {
    h: u64,
    g: i64,
}

#[derive(Serialize)]
struct RepresentResult {
    representable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    a: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b: Option<u64>,
}

#[derive(Serialize)]
struct VerifyResult {
    checked: u64,
    mismatches: u64,
    skipped: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_mismatch: Option<Mismatch>,
}

/// First disagreement found by a verify sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub m: u64,
    pub n: u64,
    #[serde(rename = "A")]
    pub supply_m: u64,
    #[serde(rename = "B")]
    pub supply_n: u64,
    /// "count" (formula vs oracle count) or "gaps" (gap lists differ).
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count_formula: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count_oracle: Option<u64>,
}

fn execute(command: Command, env_capacity: u64) -> Result<Output, CliError> {
    match command {
        Command::Count(args) => cmd_count(args, env_capacity),
        Command::Gaps(args) => cmd_gaps(args, env_capacity),
        Command::Frobenius(args) => cmd_frobenius(args),
        Command::Represent(args) => cmd_represent(args),
        Command::Verify(args) => cmd_verify(args, env_capacity),
    }
}

fn cmd_count(args: CountArgs, capacity: u64) -> Result<Output, CliError> {
    let inst = args.instance.build()?;
    let case = Some(inst.classify().as_str());
    match args.method {
        Method::Formula => {
            let envelope = Envelope {
                schema_version: SCHEMA_VERSION,
                command: "count",
                input: args.instance.echo(),
                result: CountResult {
                    count: closed_form::count_representable(&inst)?,
                },
                case,
                method: args.method.as_str(),
            };
            Ok(Output::success(to_json_line(&envelope)))
        }
        Method::Oracle => {
            let envelope = Envelope {
                schema_version: SCHEMA_VERSION,
                command: "count",
                input: args.instance.echo(),
                result: CountResult {
                    count: oracle::count(&GeneralInstance::from(&inst), capacity)?,
                },
                case,
                method: args.method.as_str(),
            };
            Ok(Output::success(to_json_line(&envelope)))
        }
        Method::Both => {
            let count_formula = closed_form::count_representable(&inst)?;
            let count_oracle = oracle::count(&GeneralInstance::from(&inst), capacity)?;
            let agree = count_formula == count_oracle;
            let envelope = Envelope {
                schema_version: SCHEMA_VERSION,
                command: "count",
                input: args.instance.echo(),
                result: CountBothResult {
                    count_formula,
                    count_oracle,
                    agree,
                },
                case,
                method: args.method.as_str(),
            };
            Ok(Output {
                stdout: to_json_line(&envelope),
                code: if agree {
                    exit_code::SUCCESS
                } else {
                    exit_code::MISMATCH
                },
            })
        }
    }
}

fn cmd_gaps(args: GapsArgs, capacity: u64) -> Result<Output, CliError> {
    let inst = args.instance.build()?;
    let report = representation::bounded_gaps_with_capacity(&inst, capacity)?;
    match args.format {
        OutputFormat::Json => {
            let envelope = Envelope {
                schema_version: SCHEMA_VERSION,
                command: "gaps",
                input: args.instance.echo(),
                result: GapsResult {
                    gaps: report.gaps().to_vec(),
                    lower_gaps: report.lower_gaps().to_vec(),
                    upper_gaps: report.upper_gaps().to_vec(),
                },
                case: Some(report.case().as_str()),
                method: "formula",
            };
            Ok(Output::success(to_json_line(&envelope)))
        }
        OutputFormat::Csv => {
            let mut csv = String::from("gap\n");
            for gap in report.gaps() {
                csv.push_str(&gap.to_string());
                csv.push('\n');
            }
            Ok(Output::success(csv))
        }
    }
}

fn cmd_frobenius(args: FrobeniusArgs) -> Result<Output, CliError> {
    let denoms = crate::domain::DenominationPair::new(args.m, args.n)?;
    let summary = ClassicSummary::compute(&denoms)?;
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION,
        command: "frobenius",
        input: PairEcho {
            m: args.m,
            n: args.n,
        },
        result: FrobeniusResult {
            h: summary.h(),
            g: summary.g(),
        },
        case: None,
        method: "formula",
    };
    Ok(Output::success(to_json_line(&envelope)))
}

fn cmd_represent(args: RepresentArgs) -> Result<Output, CliError> {
    let inst = args.instance.build()?;
    let witness = representation::find_representation(&inst, args.s)?;
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION,
        command: "represent",
        input: RepresentEcho {
            m: args.instance.m,
            n: args.instance.n,
            supply_m: args.instance.supply_m,
            supply_n: args.instance.supply_n,
            s: args.s,
        },
        result: RepresentResult {
            representable: witness.is_some(),
            a: witness.map(|rep| rep.a()),
            b: witness.map(|rep| rep.b()),
        },
        case: Some(inst.classify().as_str()),
        method: "formula",
    };
    Ok(Output::success(to_json_line(&envelope)))
}

fn cmd_verify(args: VerifyArgs, env_capacity: u64) -> Result<Output, CliError> {
    if args.m_max < 2 {
        return Err(CliError::Usage(format!(
            "--m-max must be at least 2 (the sweep over coprime pairs 2 <= m < n <= m-max is empty otherwise), got {}",
            args.m_max
        )));
    }
    let capacity = args.capacity.unwrap_or(env_capacity);
    if capacity == 0 {
        return Err(CliError::Usage("--capacity must be positive".to_string()));
    }
    let sweep = run_verify_sweep(args.m_max as u64, args.bound_factor, capacity)?;
    let code = if sweep.mismatches == 0 {
        exit_code::SUCCESS
    } else {
        exit_code::MISMATCH
    };
    let envelope = Envelope {
        schema_version: SCHEMA_VERSION,
        command: "verify",
        input: VerifyEcho {
            m_max: args.m_max,
            bound_factor: args.bound_factor,
            capacity,
        },
        result: VerifyResult {
            checked: sweep.checked,
            mismatches: sweep.mismatches,
            skipped: sweep.skipped,
            first_mismatch: sweep.first_mismatch,
        },
        case: None,
        method: "both",
    };
    Ok(Output {
        stdout: to_json_line(&envelope),
        code,
    })
}

/// Outcome of a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySweep {
    /// Tuples `(m, n, A, B)` enumerated, skipped ones included.
    pub checked: u64,
    /// Tuples whose oracle run exceeded the capacity.
    pub skipped: u64,
    /// Tuples where a comparison disagreed.
    pub mismatches: u64,
    pub first_mismatch: Option<Mismatch>,
}

/// Enumerates all coprime pairs `2 <= m < n <= m_max` with supplies
/// `A in 0..=bound_factor*n`, `B in 0..=bound_factor*m`, in lexicographic
/// order, comparing the closed-form count against the oracle count on every
/// tuple and the gap report against the oracle gap list on the deterministic
/// subsample `(A + B) % 4 == 0`.
pub fn run_verify_sweep(
    m_max: u64,
    bound_factor: u64,
    capacity: u64,
) -> Result<VerifySweep, Error> {
    let mut sweep = VerifySweep {
        checked: 0,
        skipped: 0,
        mismatches: 0,
        first_mismatch: None,
    };
    for m in 2..=m_max {
        for n in (m + 1)..=m_max {
            if gcd(m, n) != 1 {
                continue;
            }
            let supply_m_max = crate::domain::checked_mul(bound_factor, n)?;
            let supply_n_max = crate::domain::checked_mul(bound_factor, m)?;
            for supply_m in 0..=supply_m_max {
                for supply_n in 0..=supply_n_max {
                    sweep.checked += 1;
                    let inst = BoundedInstance::new(
                        as_i64(m)?,
                        as_i64(n)?,
                        as_i64(supply_m)?,
                        as_i64(supply_n)?,
                    )?;
                    let general = GeneralInstance::from(&inst);
                    let oracle_count = match oracle::count(&general, capacity) {
                        Ok(count) => count,
                        Err(Error::CapacityExceeded { .. }) => {
                            sweep.skipped += 1;
                            continue;
                        }
                        Err(err) => return Err(err),
                    };
                    let formula_count = closed_form::count_representable(&inst)?;
                    if formula_count != oracle_count {
                        record_mismatch(
                            &mut sweep,
                            &inst,
                            "count",
                            Some(formula_count),
                            Some(oracle_count),
                        );
                        continue;
                    }
                    if (supply_m + supply_n) % 4 == 0 {
                        let report =
                            match representation::bounded_gaps_with_capacity(&inst, capacity) {
                                Ok(report) => report,
                                Err(Error::CapacityExceeded { .. }) => {
                                    sweep.skipped += 1;
                                    continue;
                                }
                                Err(err) => return Err(err),
                            };
                        if report.gaps() != oracle::gaps(&general, capacity)? {
                            record_mismatch(&mut sweep, &inst, "gaps", None, None);
                        }
                    }
                }
            }
        }
    }
    Ok(sweep)
}

fn as_i64(value: u64) -> Result<i64, Error> {
    i64::try_from(value).map_err(|_| Error::Overflow)
}

fn record_mismatch(
    sweep: &mut VerifySweep,
    inst: &BoundedInstance,
    kind: &'static str,
    count_formula: Option<u64>,
    count_oracle: Option<u64>,
) {
    sweep.mismatches += 1;
    if sweep.first_mismatch.is_none() {
        sweep.first_mismatch = Some(Mismatch {
            m: inst.m(),
            n: inst.n(),
            supply_m: inst.supply_m(),
            supply_n: inst.supply_n(),
            kind,
            count_formula,
            count_oracle,
        });
    }
}
