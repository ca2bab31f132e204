//! Command-line front end: parse a polynomial system from a file, run one
//! engine operation, print deterministic text or JSON.
//!
//! Exit codes: 0 success; 1 usage or parse error; 2 no unit root functional
//! (infeasible); 3 iteration cap exceeded (undecided). All diagnostics go to
//! stderr.

mod output;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::*;
use rootfn::error::Error;
use rootfn::parse::{parse_poly, parse_system_file, SystemFile};
use rootfn::reduce::{self, EngineConfig};
use rootfn::unit::{unit_functional_escalating, UnitFunctional};
use rootfn::{annihilator_basis, bezoutian, ideal_slice_basis, Convention, StarContext};

#[derive(Parser)]
#[command(
    name = "rootfn",
    version,
    about = "Bezoutians, root functionals, and normal forms of zero-dimensional polynomial systems"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionArg {
    Forward,
    Reverse,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Convention {
        match c {
            ConventionArg::Forward => Convention::Forward,
            ConventionArg::Reverse => Convention::Reverse,
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// System file (vars:, field:, one named equation per line)
    #[arg(long, value_name = "FILE")]
    system: PathBuf,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Divided-difference convention
    #[arg(long, value_enum, default_value_t = ConventionArg::Forward)]
    convention: ConventionArg,
}

#[derive(Args)]
struct UnitArgs {
    /// Support degree tolerance of the unit functional
    #[arg(long, value_name = "E", default_value_t = 0)]
    epsilon: usize,
    /// On infeasibility, retry with epsilon+1 up to K more times
    #[arg(long, value_name = "K", default_value_t = 0)]
    escalate: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the Bezoutian B(x, y) of the system
    Bezoutian {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Row-reduced basis of the ideal slice at a degree
    Slice {
        #[command(flatten)]
        common: CommonArgs,
        /// Slice degree bound
        #[arg(long, value_name = "D")]
        degree: usize,
    },
    /// Basis of the functionals annihilating the ideal slice at a degree
    Annihilators {
        #[command(flatten)]
        common: CommonArgs,
        /// Slice degree bound
        #[arg(long, value_name = "D")]
        degree: usize,
    },
    /// Solve for a unit root functional
    Unit {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        unit: UnitArgs,
    },
    /// Reduce a polynomial to its normal form modulo the ideal
    Reduce {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        unit: UnitArgs,
        /// Polynomial expression to reduce
        #[arg(long, value_name = "S")]
        poly: String,
        /// Also print every reduction step
        #[arg(long)]
        trace: bool,
        /// Iteration cap (default: a generous bound from the degrees)
        #[arg(long, value_name = "N")]
        max_iters: Option<usize>,
    },
    /// Decide ideal membership of a polynomial
    Member {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        unit: UnitArgs,
        /// Polynomial expression to test
        #[arg(long, value_name = "S")]
        poly: String,
        /// Iteration cap (default: a generous bound from the degrees)
        #[arg(long, value_name = "N")]
        max_iters: Option<usize>,
    },
    /// Representatives spanning the quotient modulo the ideal
    QuotientBasis {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        unit: UnitArgs,
    },
    /// Apply the star extension of a functional to a polynomial
    Star {
        #[command(flatten)]
        common: CommonArgs,
        /// Functional in JSON form
        #[arg(long, value_name = "FILE")]
        functional: PathBuf,
        /// Polynomial expression
        #[arg(long, value_name = "S")]
        poly: String,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Infeasible { .. } => 2,
            Error::CapExceeded { .. } => 3,
            _ => 1,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli.cmd) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn load_system(path: &Path) -> Result<SystemFile, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: 1,
        msg: format!("cannot read {}: {e}", path.display()),
    })?;
    Ok(parse_system_file(&text)?)
}

fn solve_unit(
    sf: &SystemFile,
    unit: &UnitArgs,
    convention: Convention,
) -> Result<UnitFunctional, Failure> {
    Ok(unit_functional_escalating(
        &sf.system,
        unit.epsilon,
        unit.escalate,
        convention,
    )?)
}

fn engine_config(
    unit: &UnitArgs,
    convention: Convention,
    max_iters: Option<usize>,
) -> EngineConfig {
    EngineConfig {
        epsilon: unit.epsilon,
        epsilon_escalation_limit: unit.escalate,
        membership_iteration_cap: max_iters,
        convention,
    }
}

fn run(cmd: Cmd) -> Result<String, Failure> {
    match cmd {
        Cmd::Bezoutian { common } => {
            let sf = load_system(&common.system)?;
            let b = bezoutian(&sf.system, common.convention.into());
            if common.json {
                Ok(to_json_line(&poly_to_json(&b)))
            } else {
                Ok(format!("{b}\n"))
            }
        }
        Cmd::Slice { common, degree } => {
            let sf = load_system(&common.system)?;
            let slice = ideal_slice_basis(&sf.system, degree);
            let rows = slice.row_polys();
            if common.json {
                Ok(to_json_line(&SliceJson {
                    degree,
                    rank: slice.rank(),
                    basis: rows.iter().map(poly_to_json).collect(),
                }))
            } else {
                let mut out = String::new();
                writeln!(out, "degree: {degree}").unwrap();
                writeln!(out, "rank: {}", slice.rank()).unwrap();
                for row in rows {
                    writeln!(out, "{row}").unwrap();
                }
                Ok(out)
            }
        }
        Cmd::Annihilators { common, degree } => {
            let sf = load_system(&common.system)?;
            let basis = annihilator_basis(&sf.system, degree);
            if common.json {
                Ok(to_json_line(&AnnihilatorsJson {
                    degree,
                    dimension: basis.len(),
                    functionals: basis.iter().map(functional_to_json).collect(),
                }))
            } else {
                let mut out = String::new();
                writeln!(out, "degree: {degree}").unwrap();
                writeln!(out, "dimension: {}", basis.len()).unwrap();
                for l in &basis {
                    writeln!(out, "{l}").unwrap();
                }
                Ok(out)
            }
        }
        Cmd::Unit { common, unit } => {
            let sf = load_system(&common.system)?;
            let u = solve_unit(&sf, &unit, common.convention.into())?;
            if common.json {
                Ok(to_json_line(&UnitJson {
                    epsilon: u.epsilon(),
                    functional: functional_to_json(u.base()),
                    cofactors: u
                        .certificate()
                        .unwrap_or_default()
                        .iter()
                        .map(poly_to_json)
                        .collect(),
                    unique: u.unique_solution(),
                }))
            } else {
                let mut out = String::new();
                writeln!(out, "epsilon: {}", u.epsilon()).unwrap();
                writeln!(
                    out,
                    "certified_degree: {}",
                    u.base().certified_degree().expect("solver certifies")
                )
                .unwrap();
                writeln!(out, "unique: {}", u.unique_solution()).unwrap();
                writeln!(out, "support: {}", u.base()).unwrap();
                if let Some(gs) = u.certificate() {
                    for (i, g) in gs.iter().enumerate() {
                        writeln!(out, "g{}: {g}", i + 1).unwrap();
                    }
                }
                Ok(out)
            }
        }
        Cmd::Reduce {
            common,
            unit,
            poly,
            trace,
            max_iters,
        } => {
            let sf = load_system(&common.system)?;
            let g = parse_poly(&poly, &sf.context, &sf.field)?;
            let convention = common.convention.into();
            let u = solve_unit(&sf, &unit, convention)?;
            let config = engine_config(&unit, convention, max_iters);
            let (nf, tr) = reduce::normal_form(&sf.system, &u, &g, &config)?;
            if common.json {
                Ok(to_json_line(&ReduceJson {
                    normal_form: poly_to_json(&nf),
                    iterations: tr.iterations,
                    stabilized: tr.stabilized,
                    trace: trace.then(|| tr.steps.iter().map(poly_to_json).collect()),
                }))
            } else {
                let mut out = String::new();
                if trace {
                    for (p, step) in tr.steps.iter().enumerate() {
                        writeln!(out, "step {p}: {step}").unwrap();
                    }
                }
                writeln!(out, "{nf}").unwrap();
                Ok(out)
            }
        }
        Cmd::Member {
            common,
            unit,
            poly,
            max_iters,
        } => {
            let sf = load_system(&common.system)?;
            let g = parse_poly(&poly, &sf.context, &sf.field)?;
            let convention = common.convention.into();
            let u = solve_unit(&sf, &unit, convention)?;
            let config = engine_config(&unit, convention, max_iters);
            let result = reduce::is_member(&sf.system, &u, &g, &config)?;
            if common.json {
                Ok(to_json_line(&MemberJson { member: result }))
            } else {
                Ok(format!("{result}\n"))
            }
        }
        Cmd::QuotientBasis { common, unit } => {
            let sf = load_system(&common.system)?;
            let convention = common.convention.into();
            let u = solve_unit(&sf, &unit, convention)?;
            let reps = reduce::quotient_representatives(&sf.system, &u)?;
            if common.json {
                Ok(to_json_line(&QuotientJson {
                    representatives: reps.iter().map(poly_to_json).collect(),
                }))
            } else {
                let mut out = String::new();
                for r in &reps {
                    writeln!(out, "{r}").unwrap();
                }
                Ok(out)
            }
        }
        Cmd::Star {
            common,
            functional,
            poly,
        } => {
            let sf = load_system(&common.system)?;
            let g = parse_poly(&poly, &sf.context, &sf.field)?;
            let text = std::fs::read_to_string(&functional).map_err(|e| Failure {
                code: 1,
                msg: format!("cannot read {}: {e}", functional.display()),
            })?;
            let json: FunctionalJson = serde_json::from_str(&text).map_err(|e| Failure {
                code: 1,
                msg: format!("bad functional file: {e}"),
            })?;
            let mut l = functional_from_json(&json, &sf.context, &sf.field)?;
            if let Some(d) = json.certified_degree {
                // claimed certificates are re-verified, never trusted
                l = l.certified(&sf.system, d)?;
            }
            let star = StarContext::new(&sf.system, common.convention.into());
            let result = star.star_poly(&l, &g)?;
            if common.json {
                Ok(to_json_line(&poly_to_json(&result)))
            } else {
                Ok(format!("{result}\n"))
            }
        }
    }
}
