//! Command execution. Each command produces its report as a string plus an
//! exit status; printing and process exit are left to the binary.

use std::fmt;

use serde::Serialize;

use omega_forge_core::invariantize::{hilbert_generators, HilbertOptions};
use omega_forge_core::omega::{cayley_constants, OmegaOperator, Process};
use omega_forge_core::reps::DEFAULT_DIMENSION_CAP;
use omega_forge_core::weightlattice::{
    ideal_check, matrix_monoid_cone, omega_coefficient_family, polynomial_dominant_weights, saturation_check,
    TruncationBox, Weight,
};
use omega_forge_core::{Error, Polynomial, Ring};

use crate::config::{
    Command, Family, Format, InvariantsArgs, OmegaArgs, OutputArgs, RunConfig, VerifyArgs, WeightsArgs, CAP_ENV,
};
use crate::formats::{ApplyJson, ConstantsJson, InvariantReportJson, WeightsJson};
use crate::suite::{default_max_degree, run_suite, SuiteConfig};

/// Exit status contract.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Usage = 1,
    Failure = 2,
}

/// A finished command: its rendered report and verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub body: String,
    pub status: Status,
}

/// A command that could not produce a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandError {
    pub status: Status,
    pub message: String,
}

impl CommandError {
    fn usage(message: impl Into<String>) -> Self {
        CommandError { status: Status::Usage, message: message.into() }
    }
}

impl fmt::Display for CommandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CommandError {}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::IdentityFailure(_) | Error::NotProper(_) => Status::Failure,
            _ => Status::Usage,
        };
        CommandError { status, message: e.to_string() }
    }
}

/// Renders a polynomial parse error with a caret under the offending byte.
fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial, CommandError> {
    Polynomial::parse(text, ring).map_err(|e| match e {
        Error::Parse { position, .. } => {
            CommandError::usage(format!("{e}\n  {text}\n  {}^", " ".repeat(position)))
        }
        other => other.into(),
    })
}

fn render<T: Serialize>(value: &T, format: Format, text: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
            s.push('\n');
            s
        }
        Format::Text => text(value),
    }
}

fn chosen(out: &OutputArgs, default: Format) -> Format {
    out.format.unwrap_or(default)
}

/// The dimension cap, from the environment when set.
pub fn dimension_cap() -> Result<usize, CommandError> {
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CommandError::usage(format!("{CAP_ENV} must be a positive integer, got '{v}'"))),
        Err(_) => Ok(DEFAULT_DIMENSION_CAP),
    }
}

pub fn run(config: &RunConfig) -> Result<Report, CommandError> {
    match &config.command {
        Command::Omega(a) => omega(a),
        Command::Invariants(a) => invariants(a),
        Command::Weights(a) => weights(a),
        Command::Verify(a) => verify(a),
    }
}

/// Where the report of `config` goes, if not standard output.
pub fn output_path(config: &RunConfig) -> Option<&std::path::Path> {
    let out = match &config.command {
        Command::Omega(a) => &a.out,
        Command::Invariants(a) => &a.out,
        Command::Weights(a) => &a.out,
        Command::Verify(a) => &a.out,
    };
    out.output.as_deref()
}

fn omega(args: &OmegaArgs) -> Result<Report, CommandError> {
    let op = OmegaOperator::new(args.n)?;
    let applied = match &args.apply {
        Some(text) => {
            let f = parse_polynomial(text, &Ring::matrix(args.n))?;
            let result = op.power(&f, args.power)?;
            Some(ApplyJson { n: args.n, input: f.to_string(), power: args.power, result: result.to_string() })
        }
        None => None,
    };
    let constants = match args.constants {
        Some(s_max) => Some(ConstantsJson::new(args.n, s_max, &cayley_constants(&op, s_max)?)),
        None => None,
    };
    let body = match (applied, constants) {
        (None, None) => return Err(CommandError::usage("omega needs --apply or --constants")),
        (Some(a), None) => render(&a, chosen(&args.out, Format::Text), |a| format!("{}\n", a.result)),
        (None, Some(c)) => render(&c, chosen(&args.out, Format::Json), ConstantsJson::to_text),
        (Some(a), Some(c)) => {
            #[derive(Serialize)]
            struct Both {
                apply: ApplyJson,
                constants: ConstantsJson,
            }
            render(&Both { apply: a, constants: c }, chosen(&args.out, Format::Json), |b| {
                format!("{}\n{}", b.apply.result, b.constants.to_text())
            })
        }
    };
    Ok(Report { body, status: Status::Success })
}

fn invariants(args: &InvariantsArgs) -> Result<Report, CommandError> {
    let op = OmegaOperator::new(2)?;
    let options = HilbertOptions { degree_bound: args.bound, twist: args.twist, dimension_cap: dimension_cap()? };
    let report = hilbert_generators(&op, args.form_degree, &options).map_err(|e| match e {
        Error::CapExceeded { dim, cap } => CommandError::usage(format!(
            "refusing to build a module of dimension {dim}: the cap is {cap} (raise it with {CAP_ENV})"
        )),
        other => other.into(),
    })?;
    let json = InvariantReportJson::from(&report);
    let status = if json.agreement { Status::Success } else { Status::Failure };
    Ok(Report { body: render(&json, chosen(&args.out, Format::Json), InvariantReportJson::to_text), status })
}

fn weights(args: &WeightsArgs) -> Result<Report, CommandError> {
    const MAX_POINTS: u64 = 2_000_000;
    let n = args.n;
    let side = 2 * u64::from(args.bound) + 1;
    if n == 0 || side.checked_pow(n as u32).is_none_or(|p| p > MAX_POINTS) {
        return Err(CommandError::usage(format!("box [-{0}, {0}]^{n} is too large to enumerate", args.bound)));
    }
    let bounds = TruncationBox::symmetric(i64::from(args.bound));
    let pw = polynomial_dominant_weights(&matrix_monoid_cone(n), n, bounds)?;
    let saturation = saturation_check(&pw.weights, n, bounds, 4);
    let ideal = ideal_check(&pw.weights, n, bounds);
    let family = match args.family {
        Some(Family::Det) => Some(omega_coefficient_family(&Weight::det_power(n, 1), &pw)?),
        None => None,
    };
    let json = WeightsJson::new(n, &pw, &saturation, &ideal, family.as_ref());
    let status = if json.passed() { Status::Success } else { Status::Failure };
    Ok(Report { body: render(&json, chosen(&args.out, Format::Json), WeightsJson::to_text), status })
}

fn verify(args: &VerifyArgs) -> Result<Report, CommandError> {
    let config = SuiteConfig {
        n: args.n,
        seed: args.seed,
        max_degree: args.max_degree.unwrap_or_else(|| default_max_degree(args.n)),
        cases: args.cases,
        fault: args.inject_fault,
    };
    let suite = run_suite(&config)?;
    let status = if suite.passed { Status::Success } else { Status::Failure };
    Ok(Report { body: render(&suite, chosen(&args.out, Format::Text), |s| s.to_text()), status })
}
