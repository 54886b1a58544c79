use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use orbitdual::classify::{classify_on, parse_label};
use orbitdual::cones::{abstract_diagram, bundled_sp2n_gl3, semiinvariance_check, table_weight, ConeSystem};
use orbitdual::conormal::{empirical_dual_in, orbit_dim, verify_case, CaseReport};
use orbitdual::exactlin::seeded;
use orbitdual::poset::builtin_poset;
use orbitdual::repcat::{build_case, grid_cases, Side};
use orbitdual::{CaseId, CaseSpec, Error, Scalar};

#[derive(Parser)]
#[command(name = "orbitdual", version, about = "Orbits and their duals for spherical representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CaseArg {
    /// `A10 n=2 m=3`, or the JSON form `{"family":"A10","params":{"n":2,"m":3}}`
    #[arg(long, num_args = 1.., required = true)]
    case: Vec<String>,
}

#[derive(Args)]
struct Sampling {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    trials: usize,
    /// Bound on the integer coefficients of sampled covectors.
    #[arg(long, default_value_t = 100)]
    height: i64,
}

#[derive(Args)]
struct Out {
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit label of a vector (or covector with --dual).
    Classify {
        #[command(flatten)]
        case: CaseArg,
        /// JSON array of scalars, a file holding one, or `zeros`.
        #[arg(long)]
        vector: String,
        #[arg(long)]
        dual: bool,
    },
    /// Sampled dual of one orbit against the closed form.
    Dual {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long)]
        label: String,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Measured orbit dimension.
    Dim {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long)]
        label: String,
    },
    /// Closure-order diagram with duality.
    Diagram {
        #[command(flatten)]
        case: CaseArg,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
    /// Report for every orbit of one case.
    Verify {
        #[command(flatten)]
        case: CaseArg,
        #[command(flatten)]
        sampling: Sampling,
        #[command(flatten)]
        out: Out,
    },
    /// Faces meeting the valuation cone (the bundled system by default).
    Cones {
        #[arg(long)]
        system: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
    /// Semi-invariance of f1..f6 under their expected weights.
    Semiinv {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Reports for the whole parameter grid.
    VerifyAll {
        #[command(flatten)]
        sampling: Sampling,
        #[command(flatten)]
        out: Out,
    },
    /// Generator matrices, dual generators and pairing of a case.
    Catalog {
        #[command(flatten)]
        case: CaseArg,
        #[command(flatten)]
        out: Out,
    },
}

enum Failure {
    Mismatch(String),
    Schema(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidCase(_)
            | Error::DimensionMismatch { .. }
            | Error::EmptyLabel(_)
            | Error::Unsupported(_) => Failure::Schema(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn load_case(arg: &CaseArg) -> Result<CaseSpec, Failure> {
    let text = arg.case.join(" ");
    let text = if Path::new(&text).is_file() {
        std::fs::read_to_string(&text).map_err(|e| Failure::Schema(e.to_string()))?
    } else {
        text
    };
    let id: CaseId = text.parse()?;
    Ok(build_case(&id)?)
}

fn read_json_arg(arg: &str) -> Result<String, Failure> {
    if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| Failure::Schema(e.to_string()))
    } else {
        Ok(arg.to_string())
    }
}

fn emit(text: &str, out: Option<&Path>) -> Outcome {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Internal(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn summary(r: &CaseReport) -> String {
    let bad = r.labels.iter().filter(|l| !l.matches).count();
    format!(
        "{}: {} orbits, {bad} mismatches, involution {}",
        r.case,
        r.labels.len(),
        if r.involution { "ok" } else { "broken" }
    )
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Classify { case, vector, dual } => {
            let c = load_case(&case)?;
            let v: Vec<Scalar> = if vector == "zeros" {
                vec![Scalar::zero(); c.dim]
            } else {
                serde_json::from_str(&read_json_arg(&vector)?).map_err(|e| Failure::Schema(e.to_string()))?
            };
            if v.len() != c.dim {
                return Err(Error::DimensionMismatch { expected: c.dim, got: v.len() }.into());
            }
            let side = if dual { Side::Dual } else { Side::V };
            let l = classify_on(&c, side, &v)?;
            emit(&serde_json::to_string(&l).expect("serializable"), None)
        }
        Command::Dual { case, label, sampling } => {
            let c = load_case(&case)?;
            let p = builtin_poset(&c)?;
            let l = parse_label(&c, &label)?;
            let expected = p.dual(&l)?;
            let mut rng = seeded(sampling.seed);
            let empirical = empirical_dual_in(&c, &p, l, sampling.trials, &mut rng, sampling.height)?;
            let report = json!({
                "case": c.id,
                "label": l,
                "seed": sampling.seed,
                "trials": sampling.trials,
                "height": sampling.height,
                "expected": expected,
                "empirical": empirical,
                "match": expected == empirical,
            });
            emit(&pretty(&report), None)?;
            if expected != empirical {
                return Err(Failure::Mismatch(format!("{l}: expected {expected}, sampled {empirical}")));
            }
            Ok(())
        }
        Command::Dim { case, label } => {
            let c = load_case(&case)?;
            let l = parse_label(&c, &label)?;
            emit(&orbit_dim(&c, l)?.to_string(), None)
        }
        Command::Diagram { case, format, out } => {
            let p = builtin_poset(&load_case(&case)?)?;
            let text = match format {
                Format::Dot => p.export_dot(),
                Format::Json => p.export_json() + "\n",
            };
            emit(&text, out.out.as_deref())
        }
        Command::Verify { case, sampling, out } => {
            let c = load_case(&case)?;
            let r = verify_case(&c, sampling.trials, sampling.seed, sampling.height)?;
            emit(&pretty(&r), out.out.as_deref())?;
            eprintln!("{}", summary(&r));
            if !r.ok {
                return Err(Failure::Mismatch(format!("{} failed", r.case)));
            }
            Ok(())
        }
        Command::Cones { system, format, out } => {
            let sys = match system {
                None => bundled_sp2n_gl3(),
                Some(p) => {
                    let text = std::fs::read_to_string(&p).map_err(|e| Failure::Schema(format!("{}: {e}", p.display())))?;
                    let s: ConeSystem = serde_json::from_str(&text).map_err(|e| Failure::Schema(e.to_string()))?;
                    ConeSystem::new(s.r, s.roots.clone())?;
                    s
                }
            };
            let d = abstract_diagram(&sys);
            let text = match format {
                Format::Dot => d.export_dot(),
                Format::Json => pretty(&d),
            };
            emit(&text, out.out.as_deref())
        }
        Command::Semiinv { n, trials, seed } => {
            if n < 3 {
                return Err(Failure::Schema(format!("n = {n}; the semi-invariants need n ≥ 3")));
            }
            let mut rng = seeded(seed);
            let mut failed = Vec::new();
            for i in 1..=6 {
                let w = table_weight(i, n)?;
                let ok = semiinvariance_check(i, n, &w, trials, &mut rng)?;
                println!("f{i} sp={:?} gl={:?} {}", w.sp, w.gl, if ok { "ok" } else { "FAIL" });
                if !ok {
                    failed.push(i);
                }
            }
            if !failed.is_empty() {
                return Err(Failure::Mismatch(format!("weights fail for {failed:?}")));
            }
            Ok(())
        }
        Command::VerifyAll { sampling, out } => {
            // collect() on an indexed parallel iterator keeps case order
            let reports: Vec<Result<CaseReport, Error>> = grid_cases()
                .par_iter()
                .map(|id| verify_case(&build_case(id)?, sampling.trials, sampling.seed, sampling.height))
                .collect();
            let reports = reports.into_iter().collect::<Result<Vec<_>, _>>()?;
            emit(&pretty(&reports), out.out.as_deref())?;
            let bad: Vec<String> = reports.iter().filter(|r| !r.ok).map(summary).collect();
            eprintln!("{} cases, {} failing", reports.len(), bad.len());
            if !bad.is_empty() {
                return Err(Failure::Mismatch(bad.join("\n")));
            }
            Ok(())
        }
        Command::Catalog { case, out } => {
            let c = load_case(&case)?;
            let dump = json!({
                "case": c.id,
                "dim": c.dim,
                "summands": c.summands,
                "generators": c.generators,
                "dual_generators": c.dual_generators,
                "pairing": c.pairing,
            });
            emit(&pretty(&dump), out.out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(m)) => {
            eprintln!("mismatch: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Schema(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(3)
        }
    }
}
