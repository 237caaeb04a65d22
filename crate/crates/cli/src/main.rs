//! `groupdet` command line.
//!
//! Exit codes: 0 success or member, 1 clean negative (non-member or a failed
//! verification), 2 usage error, 3 undecidable at the factorization cap,
//! 4 construction gap.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use groupdet::verify::classified_groups;
use groupdet::{
    achieve, build_group, completeness_check, enumerate_window, group_determinant, lambda_from_classifier,
    member, soundness_check, CoeffVector, EnumerationJob, Error, GroupSpec, VerificationReport, SUPPORTED_NAMES,
};
use num_bigint::BigInt;

const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;
const UNDECIDABLE: u8 = 3;
const GAP: u8 = 4;

#[derive(Parser)]
#[command(name = "groupdet", version, about = "Integer group determinants and their value sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Determinant of a comma-separated coefficient vector.
    Det {
        #[arg(value_parser = parse_group)]
        group: GroupSpec,
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Decide whether an integer is a determinant value of the group.
    Member {
        #[arg(value_parser = parse_group)]
        group: GroupSpec,
        #[arg(allow_hyphen_values = true)]
        value: BigInt,
        /// Print the membership certificate as JSON instead of yes/no.
        #[arg(long)]
        json: bool,
    },
    /// Construct and verify a coefficient vector attaining the value.
    Witness {
        #[arg(value_parser = parse_group)]
        group: GroupSpec,
        #[arg(allow_hyphen_values = true)]
        value: BigInt,
    },
    /// Smallest nontrivial |value|. With --radius, exhaustive enumeration
    /// must also attain it; groups without a classifier require --radius.
    Lambda {
        #[arg(value_parser = parse_group)]
        group: GroupSpec,
        #[arg(long)]
        radius: Option<u32>,
    },
    /// Enumerate all vectors with entries in [-radius, radius] and check the
    /// classifier against them; also asks for a witness of every accepted
    /// value in [-bound, bound].
    Verify {
        #[arg(value_parser = parse_group)]
        group: GroupSpec,
        /// Defaults to 2 for order at most 9, otherwise 1.
        #[arg(long)]
        radius: Option<u32>,
        #[arg(long, default_value_t = 300)]
        bound: u64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// List supported group names with their orders.
    Groups,
}

fn parse_group(s: &str) -> Result<GroupSpec, String> {
    let unsupported = || format!("unknown group {s:?}; supported: {}", SUPPORTED_NAMES.join(", "));
    let spec: GroupSpec = s.parse().map_err(|_| unsupported())?;
    if spec.is_supported() {
        Ok(spec)
    } else {
        Err(unsupported())
    }
}

fn parse_coeffs(spec: &GroupSpec, text: &str) -> Result<CoeffVector, String> {
    let entries = text
        .split(',')
        .map(|t| t.trim().parse::<BigInt>().map_err(|_| format!("bad coefficient {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    if entries.len() != spec.order() {
        return Err(format!("{spec} has order {}, got {} coefficients", spec.order(), entries.len()));
    }
    Ok(CoeffVector::new(entries))
}

/// Maps library errors onto exit codes.
fn code_for(e: &Error) -> u8 {
    match e {
        Error::NotInSet { .. } => NEGATIVE,
        Error::UndecidableAtScale(_) => UNDECIDABLE,
        Error::ConstructionGap { .. } => GAP,
        Error::Inconclusive(_) => UNDECIDABLE,
        _ => USAGE,
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(code_for(&e))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn default_radius(spec: &GroupSpec) -> u32 {
    if spec.order() <= 9 {
        2
    } else {
        1
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Det { group, coeffs } => {
            let coeffs = match parse_coeffs(&group, &coeffs) {
                Ok(c) => c,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    return Ok(ExitCode::from(USAGE));
                }
            };
            println!("{}", group_determinant(&build_group(&group)?, &coeffs)?);
        }
        Command::Member { group, value, json: as_json } => {
            let cert = member(&group, &value)?;
            if as_json {
                println!("{}", json(&cert));
            } else {
                println!("{}", if cert.undecidable { "undecidable" } else if cert.verdict { "yes" } else { "no" });
            }
            if cert.undecidable {
                return Ok(ExitCode::from(UNDECIDABLE));
            }
            if !cert.verdict {
                return Ok(ExitCode::from(NEGATIVE));
            }
        }
        Command::Witness { group, value } => match achieve(&group, &value) {
            Ok(w) => println!("{}", json(&w)),
            Err(Error::NotInSet { .. }) => {
                println!("not a member");
                return Ok(ExitCode::from(NEGATIVE));
            }
            Err(e) => return Err(e),
        },
        Command::Lambda { group, radius } => {
            let classified = classified_groups().contains(&group);
            let lambda = match radius {
                None if classified => lambda_from_classifier(&group)?,
                None => {
                    return Err(Error::Precondition(format!("{group} has no classifier; pass --radius")));
                }
                Some(r) => {
                    let job = EnumerationJob::new(group.clone(), r, 1_000_000);
                    let found = enumerate_window(&job)?.into_iter().map(i64::unsigned_abs).filter(|&a| a >= 2).min();
                    let lambda = found.ok_or_else(|| {
                        Error::Inconclusive(format!("{group}: radius {r} attains no |v| >= 2"))
                    })?;
                    if classified && lambda != lambda_from_classifier(&group)? {
                        return Err(Error::Inconclusive(format!(
                            "{group}: radius {r} attains {lambda}, classifier disagrees"
                        )));
                    }
                    lambda
                }
            };
            println!("{lambda}");
        }
        Command::Verify { group, radius, bound, jobs } => {
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(n) = jobs {
                pool = pool.num_threads(n);
            }
            let pool = pool.build().map_err(|e| Error::Precondition(e.to_string()))?;
            let report = pool.install(|| verify(&group, radius.unwrap_or_else(|| default_radius(&group)), bound))?;
            println!("{}", json(&report));
            if !report.passed() {
                return Ok(ExitCode::from(NEGATIVE));
            }
        }
        Command::Groups => {
            for name in SUPPORTED_NAMES {
                let spec: GroupSpec = name.parse()?;
                println!("{name} {}", spec.order());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(group: &GroupSpec, radius: u32, bound: u64) -> Result<VerificationReport, Error> {
    let job = EnumerationJob::new(group.clone(), radius, bound);
    if !classified_groups().contains(group) {
        let attained = enumerate_window(&job)?;
        return Ok(VerificationReport {
            group: Some(group.clone()),
            lambda_observed: attained.iter().map(|v| v.unsigned_abs()).filter(|&a| a >= 2).min(),
            attained,
            ..Default::default()
        });
    }
    let mut report = soundness_check(group, &job)?;
    report.completeness_misses = completeness_check(group, bound)?.completeness_misses;
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    run(cli.command).unwrap_or_else(fail)
}
