//! Command-line front end.
//!
//! Results go to the output stream as `key=value` records, one logical
//! result per line. Diagnostics go to the error stream. Exit codes: 0 on
//! success, 1 for usage and parse errors, 2 for domain errors (a = 0,
//! f = 0, size limits).

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::classify::{self, Classification, DEFAULT_SCAN_LIMIT};
use crate::cyclo;
use crate::error::{Error, Limits};
use crate::parse::parse_poly_with;
use crate::poly::IntPoly;
use crate::unitcheck::{self, CheckOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cyclounits", version, about = "Units of Z[X]/(X^n - a) from integer polynomials")]
struct Cli {
    /// Largest polynomial degree any command may build.
    #[arg(long, global = true, default_value_t = 10_000)]
    degree_budget: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Emit a Bezout certificate `p`, `q` with p*f + q*(x^n - a) = 1.
    #[arg(long)]
    certificate: bool,
    /// Recompute the norm as a determinant and fail on disagreement.
    #[arg(long)]
    cross_check: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Is f(x) a unit of Z[X]/(X^n - a)?
    Check {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[command(flatten)]
        opts: CheckArgs,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Same as `check` with a = 1 (units of the group ring of a cyclic group).
    Order {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        opts: CheckArgs,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Does f define generic units?
    Generic {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Describe the set of n for which f is a unit on n-th roots of a.
    Classify {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long = "max-n", default_value_t = DEFAULT_SCAN_LIMIT)]
        max_n: u64,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Upper bound on the number of n when that set is finite.
    Bound {
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Print the m-th cyclotomic polynomial.
    Cyclotomic { m: u64 },
    /// Decide Φ_m(a) = 1 and Φ_m(a) = -1 from the structure of m.
    PhiClass {
        #[arg(long)]
        m: u64,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
    },
    /// Split f into content, sign, power of x, cyclotomic factors and remainder.
    Factor {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let joined = items
        .into_iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(",");
    if joined.is_empty() {
        "none".into()
    } else {
        joined
    }
}

fn check_record(
    f: &IntPoly,
    n: u64,
    a: i64,
    opts: &CheckArgs,
    limits: Limits,
) -> Result<Vec<String>, Error> {
    let v = unitcheck::check_units(
        f,
        n,
        a,
        &CheckOptions {
            certificate: opts.certificate,
            cross_check: opts.cross_check,
            limits,
        },
    )?;
    let mut lines = vec![format!(
        "unit={} n={} a={} resultant={}",
        v.is_unit, v.n, v.a, v.resultant
    )];
    if let Some(c) = &v.certificate {
        lines.push(format!("p={} q={}", c.p, c.q));
    }
    Ok(lines)
}

fn dispatch(cli: Cli) -> Result<Vec<String>, Error> {
    let limits = Limits {
        degree_budget: cli.degree_budget,
        ..Limits::default()
    };
    let parse = |s: &str| parse_poly_with(s, limits.degree_budget);
    match cli.command {
        Command::Check { n, a, opts, poly } => check_record(&parse(&poly)?, n, a, &opts, limits),
        Command::Order { n, opts, poly } => check_record(&parse(&poly)?, n, 1, &opts, limits),
        Command::Generic { poly } => {
            let v = classify::is_generic(&parse(&poly)?)?;
            Ok(vec![match v.modulus {
                Some(d) if v.generic => format!("generic=true D={d}"),
                _ => format!("generic=false offenders={}", list(&v.offenders)),
            }])
        }
        Command::Classify { a, max_n, poly } => {
            let c = classify::classify_roots_with(&parse(&poly)?, a, max_n, &limits)?;
            Ok(vec![match c {
                Classification::All => "class=all".into(),
                Classification::Empty => "class=empty".into(),
                Classification::Infinite(set) => format!(
                    "class=infinite modulus={} residues={}",
                    set.modulus,
                    list(&set.residues)
                ),
                Classification::Finite {
                    bound,
                    members,
                    exhaustive,
                    ..
                } => format!(
                    "class=finite bound={bound} members={} exhaustive={exhaustive}",
                    list(&members)
                ),
            }])
        }
        Command::Bound { a, poly } => {
            let b = classify::compute_bound_with(&parse(&poly)?, a, &limits)?;
            Ok(vec![format!("bound={b}")])
        }
        Command::Cyclotomic { m } => {
            let p = cyclo::cyclotomic_with_budget(m, limits.degree_budget)?;
            Ok(vec![format!("poly={p}")])
        }
        Command::PhiClass { m, a } => {
            let c = cyclo::phi_is_pm1(m, a)?;
            Ok(vec![format!(
                "plus_one={} minus_one={}",
                c.value_is_plus_one, c.value_is_minus_one
            )])
        }
        Command::Factor { poly } => {
            let s = classify::factor_shape_with(&parse(&poly)?, &limits)?;
            Ok(vec![format!(
                "content={} sign={} xpow={} factors={} remainder={}",
                s.content,
                s.sign,
                s.x_power,
                list(s.factors.iter().map(|(m, e)| format!("{m}^{e}"))),
                s.remainder
            )])
        }
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli) {
        Ok(lines) => {
            for line in lines {
                let _ = writeln!(out, "{line}");
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
