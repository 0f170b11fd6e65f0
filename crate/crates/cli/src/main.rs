//! Command-line front end: builds the groups, runs the checks and prints JSON reports.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;

use sylowcm_core::cmcheck::{build_subject, cm_report_timed, Stopwatch, Subject};
use sylowcm_core::fixtures::{self, FIXTURE_NAMES};
use sylowcm_core::grp::GroupTable;
use sylowcm_core::report::{
    betti_report, cm_check_json, emit_report, field_report, lemmas_report, sylow_report, RunConfig, DEFAULT_MAX_DEGREE,
};

#[derive(Parser)]
#[command(name = "sylowcm", version, about = "Sylow 2-subgroups of PSU3 and Suzuki groups and CM certificates for their mod-2 cohomology")]
struct Cli {
    /// Increase log verbosity (-v info, -vv debug).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite field tower data.
    Field {
        #[command(subcommand)]
        action: FieldCmd,
    },
    /// Build a Sylow subgroup.
    Sylow {
        #[command(subcommand)]
        action: SylowCmd,
    },
    /// Structural checks on a Sylow subgroup.
    Verify {
        #[command(subcommand)]
        action: VerifyCmd,
    },
    /// Minimal resolutions and CM certificates.
    Cohomology {
        #[command(subcommand)]
        action: CohomologyCmd,
    },
    /// The built-in reference groups.
    Fixtures {
        #[command(subcommand)]
        action: FixturesCmd,
    },
}

#[derive(Subcommand)]
enum FieldCmd {
    /// Show F_{2^n} ⊂ F_{2^{2n}} with conjugation, ρ and λ.
    Inspect {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        field: FieldOpts,
    },
}

#[derive(Subcommand)]
enum SylowCmd {
    /// Build the group and optionally write its table.
    Build {
        #[command(flatten)]
        group: GroupOpts,
        /// Write the multiplication table in gtab format.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Order, center, involutions, maximal elementary abelian subgroups and extension data.
    Lemmas {
        #[command(flatten)]
        group: GroupOpts,
    },
}

#[derive(Subcommand)]
enum CohomologyCmd {
    /// Betti numbers of the minimal resolution of a group table.
    Betti {
        /// A gtab file.
        #[arg(long)]
        group: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Run the full certificate pipeline.
    CmCheck {
        #[arg(long, value_enum)]
        family: CmFamily,
        /// Family parameter; required for psu3 and sz.
        #[arg(long)]
        n: Option<u32>,
        /// Fixture name; required for the fixture family.
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
        /// Also write the report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Record wall-clock time per stage in the report.
        #[arg(long)]
        timings: bool,
        #[command(flatten)]
        field: FieldOpts,
    },
}

#[derive(Subcommand)]
enum FixturesCmd {
    /// Names and descriptions.
    List,
    /// Write every fixture as a gtab file.
    Export {
        #[arg(long)]
        dir: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Psu3,
    Sz,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CmFamily {
    Psu3,
    Sz,
    Fixture,
}

#[derive(Args)]
struct FieldOpts {
    /// Defining polynomial of the largest field, as a bit string with the leading coefficient first.
    #[arg(long, value_parser = parse_poly)]
    poly: Option<u32>,
    /// Allow the larger, slower parameters (psu3 n = 4, sz n = 2).
    #[arg(long)]
    large: bool,
}

#[derive(Args)]
struct GroupOpts {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: u32,
    #[command(flatten)]
    field: FieldOpts,
}

fn parse_poly(s: &str) -> Result<u32, String> {
    let s = s.trim_start_matches("0b");
    if s.is_empty() || s.len() > 32 || !s.chars().all(|c| c == '0' || c == '1') {
        return Err(format!("{s:?} is not a bit string"));
    }
    u32::from_str_radix(s, 2).map_err(|e| e.to_string())
}

/// Outcome of a command: a math failure (exit 1) or a usage/resource error (exit 2).
enum Failure {
    Check(String),
    Usage(String),
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn config(field: &FieldOpts) -> RunConfig {
    RunConfig { large: field.large, poly: field.poly, ..RunConfig::default() }
}

fn subject(family: Family, n: u32, field: &FieldOpts) -> Subject {
    let (large, poly) = (field.large, field.poly);
    match family {
        Family::Psu3 => Subject::Psu3 { n, large, poly },
        Family::Sz => Subject::Sz { n, large, poly },
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))
}

fn read_group(path: &Path) -> Result<GroupTable, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    GroupTable::from_gtab(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Field { action: FieldCmd::Inspect { n, field } } => {
            let r = field_report(n, &config(&field)).map_err(usage)?;
            Ok(emit_report("field", &r))
        }
        Command::Sylow { action: SylowCmd::Build { group, out } } => {
            let built = build_subject(&subject(group.family, group.n, &group.field)).map_err(usage)?;
            info!("built group of order {}", built.table.order());
            if let Some(path) = &out {
                write_file(path, &built.table.to_gtab())?;
            }
            let r = sylow_report(&built, out.map(|p| p.display().to_string()));
            Ok(emit_report("sylow", &r))
        }
        Command::Verify { action: VerifyCmd::Lemmas { group } } => {
            let r = lemmas_report(&subject(group.family, group.n, &group.field)).map_err(usage)?;
            let json = emit_report("lemmas", &r);
            if r.passed {
                Ok(json)
            } else {
                print!("{json}");
                Err(Failure::Check("a structural check failed".into()))
            }
        }
        Command::Cohomology { action: CohomologyCmd::Betti { group, max_degree } } => {
            let g = read_group(&group)?;
            let name = group.file_stem().map_or("group".into(), |s| s.to_string_lossy().into_owned());
            let r = betti_report(&name, &g, max_degree).map_err(usage)?;
            Ok(emit_report("betti", &r))
        }
        Command::Cohomology {
            action: CohomologyCmd::CmCheck { family, n, fixture, max_degree, report, timings, field },
        } => {
            let subj = match (family, n, fixture) {
                (CmFamily::Psu3, Some(n), None) => subject(Family::Psu3, n, &field),
                (CmFamily::Sz, Some(n), None) => subject(Family::Sz, n, &field),
                (CmFamily::Fixture, None, Some(name)) => Subject::Fixture(name),
                (CmFamily::Fixture, _, _) => return Err(usage("the fixture family takes --fixture NAME and no --n")),
                _ => return Err(usage("psu3 and sz take --n N and no --fixture")),
            };
            let mut watch = Stopwatch::new(timings);
            let built = build_subject(&subj).map_err(usage)?;
            watch.lap("build");
            info!("running the pipeline on {} up to degree {max_degree}", built.name);
            let r = cm_report_timed(&built, max_degree, &mut watch).map_err(usage)?;
            let json = cm_check_json(&r);
            if let Some(path) = &report {
                write_file(path, &json)?;
            }
            let family_claim = family != CmFamily::Fixture;
            let claim_broken = r.verdict == "not-certified" || !r.lemmas.family_checks_pass();
            if r.failed() || (family_claim && claim_broken) {
                print!("{json}");
                return Err(Failure::Check(format!("verdict {}", r.verdict)));
            }
            if !r.certified() {
                log::warn!("verdict {}", r.verdict);
            }
            Ok(json)
        }
        Command::Fixtures { action: FixturesCmd::List } => {
            let mut out = String::new();
            for name in FIXTURE_NAMES {
                let g = fixtures::by_name(name).expect("listed fixture");
                out.push_str(&format!("{name}\t{}\t{}\n", g.order(), fixtures::description(name).unwrap_or("")));
            }
            Ok(out)
        }
        Command::Fixtures { action: FixturesCmd::Export { dir } } => {
            fs::create_dir_all(&dir).map_err(usage)?;
            let mut out = String::new();
            for name in FIXTURE_NAMES {
                let path = dir.join(format!("{name}.gtab"));
                write_file(&path, &fixtures::by_name(name).expect("listed fixture").to_gtab())?;
                out.push_str(&format!("{}\n", path.display()));
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
