use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use nearirr_core::criteria::condition2_violations;
use nearirr_core::geometry::{edges_of, newton_diagram};
use nearirr_core::oracle::kb_verify;
use nearirr_core::{parse_polynomial, Error, ParseError, Polynomial, WeightVector};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::report::{
    DiagramReport, FactorsReport, InitFormReport, KbJson, KbReport, NuReport, Report,
};
use crate::svg::render_svg;

#[derive(Debug, Parser)]
#[command(
    name = "nearirr",
    version,
    about = "Near-irreducibility criteria via Newton diagrams at infinity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run every criterion and print the full report.
    Check {
        /// Polynomial, `-` for stdin, or `@PATH` to read a file.
        #[arg(allow_hyphen_values = true, required_unless_present = "batch")]
        poly: Option<String>,
        /// One polynomial per line; prints JSON Lines in input order.
        #[arg(long, value_name = "FILE", conflicts_with = "poly")]
        batch: Option<PathBuf>,
    },
    /// Print the Newton diagram at infinity.
    Diagram {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Also write an SVG rendering to this path.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// Print the initial form for a weight and its face polynomial.
    Initform {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Weight vector as `p,q`.
        #[arg(short = 'w', long = "weight", value_parser = parse_weight, allow_hyphen_values = true)]
        weight: WeightVector,
    },
    /// Print the mixed-area bound for a pair.
    Nu {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Compare the affine intersection count of a pair with the bound.
    Kb {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Validate a factorization and test whether every pair of factors meets.
    Factors {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true, required = true)]
        factors: Vec<String>,
    },
}

fn parse_weight(s: &str) -> Result<WeightVector, String> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| format!("expected p,q but got {s:?}"))?;
    let p: i64 = p.trim().parse().map_err(|e| format!("bad p: {e}"))?;
    let q: i64 = q.trim().parse().map_err(|e| format!("bad q: {e}"))?;
    WeightVector::new(p, q).map_err(|e| e.to_string())
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(String),
    Parse(ParseError),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(p) => Failure::Parse(p),
            e => Failure::Core(e),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse(_) => "parse",
        Error::ZeroPolynomial => "zero_polynomial",
        Error::ConstantPolynomial => "constant_polynomial",
        Error::BothZero => "both_zero",
        Error::NotQuasiConvenient => "not_quasi_convenient",
        Error::YConstantResultant => "y_constant_resultant",
        Error::NotCoprime => "not_coprime",
        Error::NotCollinear => "not_collinear",
        Error::NotAntipodal => "not_antipodal",
        Error::ZeroWeight => "zero_weight",
        Error::EmptyFactorList => "empty_factor_list",
        Error::ConstantFactor(_) => "constant_factor",
        Error::InvalidFactorization => "invalid_factorization",
        Error::TheoremViolation(_) => "theorem_violation",
        Error::Internal(_) => "internal",
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Io(_) | Failure::Parse(_) => EXIT_USAGE,
            Failure::Core(Error::TheoremViolation(_) | Error::Internal(_)) => EXIT_INTERNAL,
            Failure::Core(Error::Parse(_)) => EXIT_USAGE,
            Failure::Core(_) => EXIT_PRECONDITION,
        }
    }

    fn to_json(&self) -> serde_json::Value {
        let body = match self {
            Failure::Usage(m) => json!({ "kind": "usage", "message": m }),
            Failure::Io(m) => json!({ "kind": "io", "message": m }),
            Failure::Parse(p) => json!({
                "kind": "parse",
                "message": p.kind.to_string(),
                "position": p.position,
            }),
            Failure::Core(e) => json!({ "kind": error_kind(e), "message": e.to_string() }),
        };
        json!({ "error": body, "exit_code": self.code() })
    }
}

/// One JSON document per line.
fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("report types serialize");
    s.push('\n');
    s
}

fn read_input(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{path}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn poly(arg: &str) -> Result<Polynomial, Failure> {
    Ok(parse_polynomial(read_input(arg)?.trim())?)
}

/// The `check` report for one expression.
pub fn check_report(src: &str) -> Result<Report, Error> {
    Report::build(&parse_polynomial(src)?)
}

fn batch(path: &PathBuf) -> Result<String, Failure> {
    let text = if path.as_os_str() == "-" {
        read_input("-")?
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?
    };
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let out: Vec<String> = lines
        .par_iter()
        .map(|&(n, src)| {
            let line = match check_report(src) {
                Ok(r) => serde_json::to_string(&r),
                Err(e) => {
                    let mut v = Failure::from(e).to_json();
                    v["line"] = json!(n);
                    v["source"] = json!(src);
                    serde_json::to_string(&v)
                }
            };
            line.expect("report types serialize")
        })
        .collect();
    let mut s = out.join("\n");
    if !s.is_empty() {
        s.push('\n');
    }
    Ok(s)
}

fn dispatch(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Check {
            poly: _,
            batch: Some(path),
        } => batch(&path),
        Command::Check {
            poly: Some(p),
            batch: None,
        } => Ok(json_line(&Report::build(&poly(&p)?)?)),
        Command::Check {
            poly: None,
            batch: None,
        } => Err(Failure::Usage("check needs a polynomial or --batch".into())),
        Command::Diagram { poly: p, svg } => {
            let f = poly(&p)?;
            let path = match svg {
                Some(path) => {
                    let d = newton_diagram(&f)?;
                    let edges = edges_of(&d);
                    let highlight: Vec<WeightVector> =
                        if nearirr_core::criteria::is_quasi_convenient(&f)? {
                            condition2_violations(&f)?
                                .iter()
                                .filter_map(|v| v.weight)
                                .collect()
                        } else {
                            Vec::new()
                        };
                    let points: Vec<_> = f.support().into_iter().collect();
                    let doc = render_svg(&d, &edges, &highlight, &points);
                    std::fs::write(&path, doc)
                        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                    Some(path.display().to_string())
                }
                None => None,
            };
            Ok(json_line(&DiagramReport::build(&f, path)?))
        }
        Command::Initform { poly: p, weight } => {
            Ok(json_line(&InitFormReport::build(&poly(&p)?, weight)?))
        }
        Command::Nu { f, g } => Ok(json_line(&NuReport::build(&poly(&f)?, &poly(&g)?)?)),
        Command::Kb { f, g } => {
            let (f, g) = (poly(&f)?, poly(&g)?);
            let record = kb_verify(&f, &g)?;
            Ok(json_line(&KbReport {
                f: nearirr_core::format_polynomial(&f),
                g: nearirr_core::format_polynomial(&g),
                record: KbJson::from(&record),
            }))
        }
        Command::Factors { poly: p, factors } => {
            let f = poly(&p)?;
            let factors = factors
                .iter()
                .map(|s| poly(s))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(json_line(&FactorsReport::build(&f, &factors)?))
        }
    }
}

/// Runs one invocation. `args` includes the program name, as in
/// [`std::env::args_os`].
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            let failure = Failure::Usage(e.render().to_string().trim_end().to_string());
            return Outcome {
                code: failure.code(),
                stdout: String::new(),
                stderr: json_line(&failure.to_json()),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code(),
            stdout: String::new(),
            stderr: json_line(&f.to_json()),
        },
    }
}
