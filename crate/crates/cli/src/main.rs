use clap::{Parser, Subcommand};
use serde_json::json;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use tvarih::divisor::Policy;
use tvarih::engine;
use tvarih::examples;
use tvarih::io;
use tvarih::num::Int;
use tvarih::toric::{g_cone, h_fan};
use tvarih::{DivisorialFan, Error, HFPoset, Polynomial};

#[derive(Parser)]
#[command(
    name = "tvarih",
    version,
    about = "Intersection cohomology of complete complexity-one T-varieties"
)]
struct Cli {
    /// Machine-readable output, and JSON error objects on stderr.
    #[arg(long, global = true)]
    json: bool,
    /// Override the principality policy of the input (genus0 or generic).
    #[arg(long, global = true)]
    policy: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the divisorial fan axioms, properness and completeness.
    Validate { file: PathBuf },
    /// Poincaré polynomial of intersection cohomology.
    Poincare {
        file: PathBuf,
        /// Include per-orbit data in the JSON output.
        #[arg(long)]
        trace: bool,
        /// Compare with the closed formulas in ranks 1 and 2.
        #[arg(long)]
        closed_form_check: bool,
    },
    /// Orbits of the exceptional image and their order.
    Orbits {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Downgrade one divisor of the document along an interior direction.
    Downgrade {
        file: PathBuf,
        #[arg(long)]
        divisor: usize,
        /// Comma-separated integer direction.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        u: Option<Vec<i64>>,
    },
    /// h-polynomial of a complete fan.
    ToricH { file: PathBuf },
    /// g-polynomial of a pointed cone.
    ToricG { file: PathBuf },
    /// Run the built-in example corpus.
    Selfcheck,
}

enum Failure {
    Math(Error),
    Usage(&'static str, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage("parse", e.to_string()),
            e => Failure::Math(e),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage("usage", format!("{}: {}", path.display(), e)))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Usage("parse", format!("{}: {}", path.display(), e)))
}

fn load(path: &Path, policy: Option<&Policy>) -> Result<DivisorialFan, Failure> {
    let doc = io::parse(&read(path)?)?;
    Ok(io::build(&doc, policy)?)
}

fn print_json<T: serde::Serialize>(v: &T) {
    // a closed pipe downstream is not an error worth a panic
    let _ = writeln!(std::io::stdout(), "{}", io::to_json(v));
}

fn validate(file: &Path, policy: Option<&Policy>, as_json: bool) -> Outcome {
    let doc = io::parse(&read(file)?)?;
    let (fan, report) = io::build_with_report(&doc, policy)?;
    let complete = report.is_valid() && fan.is_complete_variety();
    if as_json {
        print_json(&json!({
            "valid": report.is_valid(),
            "complete": complete,
            "divisors": fan.divisors().len(),
            "synthesized": report.synthesized.len(),
            "problems": report.problems,
        }));
    } else {
        println!(
            "divisors: {} ({} added by intersection)",
            fan.divisors().len(),
            report.synthesized.len()
        );
        println!("complete: {}", complete);
        if complete {
            println!("valid");
        } else if report.is_valid() {
            println!("problem: the fiber fans do not cover N_Q × Q, so the variety is not complete");
        }
        for p in &report.problems {
            println!("problem: {}", p);
        }
    }
    Ok(complete)
}

fn poincare(file: &Path, policy: Option<&Policy>, as_json: bool, trace: bool, check: bool) -> Outcome {
    let fan = load(file, policy)?;
    let report = engine::poincare_complete(&fan)?;
    let mut ok = true;
    let closed = if check {
        let c = match fan.rank() {
            1 => Some(engine::poincare_surface_closed_form(&fan)?),
            2 => Some(engine::poincare_threefold_closed_form(&fan)?),
            _ => None,
        };
        if let Some(c) = &c {
            ok = *c == report.poincare;
        }
        c
    } else {
        None
    };
    if as_json {
        let doc = io::output_document(&fan, &report, trace);
        let mut v = serde_json::to_value(&doc).expect("serializable");
        if let Some(c) = &closed {
            v["closed_form"] = json!({"poincare": c.coeffs(), "agrees": ok});
        }
        print_json(&v);
    } else {
        println!("{}", report.poincare.pretty());
        if trace {
            for l in &report.trace {
                println!("  {}", l);
            }
        }
        if let Some(c) = &closed {
            println!("closed form: {}{}", c.pretty(), if ok { "" } else { " (MISMATCH)" });
        }
    }
    if !ok {
        eprintln!("closed form disagrees with the orbit computation");
    }
    Ok(ok)
}

fn orbits(file: &Path, policy: Option<&Policy>, dot: bool) -> Outcome {
    let fan = load(file, policy)?;
    let hf = HFPoset::new(&fan);
    if dot {
        let _ = write!(std::io::stdout(), "{}", hf.to_dot());
    } else {
        print_json(&io::orbits_document(&hf));
    }
    Ok(true)
}

fn downgrade(file: &Path, policy: Option<&Policy>, index: usize, u: Option<Vec<i64>>) -> Outcome {
    let doc = io::parse(&read(file)?)?;
    let (curve, divs) = io::build_parts(&doc, policy)?;
    let d = divs.get(index).ok_or_else(|| {
        Failure::Usage(
            "usage",
            format!("--divisor {} out of range ({} divisors)", index, divs.len()),
        )
    })?;
    let u: Option<Vec<Int>> = u.map(|v| v.into_iter().map(Int::from).collect());
    if let Some(u) = &u {
        if u.len() != d.rank() {
            return Err(Failure::Usage("usage", format!("--u needs {} entries", d.rank())));
        }
    }
    let f = tvarih::downgrade(d, &curve, u.as_deref())?;
    print_json(&io::emit(&f));
    Ok(true)
}

fn show(p: &Polynomial, as_json: bool) {
    if as_json {
        print_json(&json!({"coefficients": p.coeffs(), "pretty": p.pretty_ascending()}));
    } else {
        println!("{}", p.pretty_ascending());
    }
}

fn selfcheck(as_json: bool) -> Outcome {
    let mut results: Vec<(String, bool, String)> = Vec::new();
    let mut record = |name: &str, got: tvarih::Result<Polynomial>, want: &str| {
        let want = Polynomial::parse(want).expect("literal");
        let (ok, detail) = match got {
            Ok(p) => (p == want, p.pretty()),
            Err(e) => (false, e.to_string()),
        };
        results.push((name.to_string(), ok, detail));
    };
    let q = examples::quadric_threefold();
    record("quadric threefold", engine::poincare(&q), "t^6 + t^4 + t^2 + 1");
    record(
        "quadric threefold closed form",
        engine::poincare_threefold_closed_form(&q),
        "t^6 + t^4 + t^2 + 1",
    );
    let s = examples::projective_plane_surface();
    record("projective plane", engine::poincare(&s), "t^4 + t^2 + 1");
    record(
        "projective plane closed form",
        engine::poincare_surface_closed_form(&s),
        "t^4 + t^2 + 1",
    );
    let (d, c) = examples::affine_threefold_cone();
    record("affine threefold cone", engine::poincare_attractive(&d, &c), "2t^2 + 1");
    let (d, c) = examples::disconnected_stabilizer();
    record(
        "disconnected stabilizer",
        engine::poincare_torus_product(&d, &c),
        "t + 1",
    );
    for g in 0..4u32 {
        let (d, c) = examples::attractive_surface(g);
        record(
            &format!("attractive surface, genus {}", g),
            engine::poincare_attractive(&d, &c),
            &format!("{}t + 1", 2 * g),
        );
    }
    let all = results.iter().all(|r| r.1);
    if as_json {
        let rows: Vec<_> = results
            .iter()
            .map(|(n, ok, d)| json!({"check": n, "ok": ok, "value": d}))
            .collect();
        print_json(&json!({"ok": all, "checks": rows}));
    } else {
        for (n, ok, d) in &results {
            println!("{} {}: {}", if *ok { "pass" } else { "FAIL" }, n, d);
        }
    }
    Ok(all)
}

fn run(cli: Cli) -> Outcome {
    let policy = cli.policy.as_deref().map(io::parse_policy).transpose()?;
    let policy = policy.as_ref();
    match cli.command {
        Command::Validate { file } => validate(&file, policy, cli.json),
        Command::Poincare {
            file,
            trace,
            closed_form_check,
        } => poincare(&file, policy, cli.json, trace, closed_form_check),
        Command::Orbits { file, dot } => orbits(&file, policy, dot),
        Command::Downgrade { file, divisor, u } => downgrade(&file, policy, divisor, u),
        Command::ToricH { file } => {
            let fan = io::build_fan(&read_json(&file)?)?;
            show(&h_fan(&fan)?, cli.json);
            Ok(true)
        }
        Command::ToricG { file } => {
            let cone = io::build_cone(&read_json(&file)?, None, "cone")?;
            show(&g_cone(&cone)?, cli.json);
            Ok(true)
        }
        Command::Selfcheck => selfcheck(cli.json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = cli.json;
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            let (code, kind, msg) = match f {
                Failure::Math(e) => (1, kind_of(&e), e.to_string()),
                Failure::Usage(kind, m) => (2, kind, m),
            };
            if as_json {
                eprintln!("{}", json!({"error": kind, "message": msg}));
            } else {
                eprintln!("error: {}", msg);
            }
            ExitCode::from(code)
        }
    }
}

fn kind_of(e: &Error) -> &'static str {
    match e {
        Error::Geometry(_) => "geometry",
        Error::InvalidFan(_) => "invalid_fan",
        Error::Incomplete(_) => "incomplete",
        Error::Validation(_) => "validation",
        Error::UnknownPrincipality(_) => "unknown_principality",
        Error::NotDecomposable(_) => "not_decomposable",
        Error::Precondition(_) => "precondition",
        Error::Consistency(_) => "consistency",
        Error::Parse(_) => "parse",
    }
}
