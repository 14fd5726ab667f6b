use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hallbridge::algdef::{load_algebra, AlgebraData};
use hallbridge::hall::{Budgets, DHElem, HallElem, Lab};
use hallbridge::modcat::{ModCat, ModuleUniverse};
use hallbridge::verify::{algebra_fingerprint, gldim_certificate, run_verify, Check, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "hallbridge",
    version,
    about = "Exact Hall algebra computations for small finite-dimensional algebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the verification checks and write a JSON report.
    Verify(VerifyArgs),
    /// Write the structure constants over the enumerated basis.
    Table {
        input: PathBuf,
        #[arg(long)]
        max_dim: usize,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        budget: Option<u128>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// List the isomorphism classes of modules up to the dimension bound.
    Enumerate {
        input: PathBuf,
        #[arg(long)]
        max_dim: usize,
        #[arg(long)]
        budget: Option<u128>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    input: PathBuf,
    #[arg(long)]
    max_dim: usize,
    /// Comma-separated subset of: main, reduced, shifted, phi, extiso, epad, relations, rp, assoc, structure.
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    /// Candidate budget for each exhaustive search.
    #[arg(long)]
    budget: Option<u128>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Include wall-clock times per phase (makes the report nondeterministic).
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Hall,
    Dh,
}

/// A failure that maps to exit code 2.
struct Fatal(String);

impl<E: std::fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

fn budgets(b: Option<u128>) -> Budgets {
    match b {
        Some(b) => Budgets {
            iso: b,
            raw: b,
            ext: b,
        },
        None => Budgets::default(),
    }
}

fn load(path: &Path) -> Result<AlgebraData, Fatal> {
    let bytes = fs::read(path).map_err(|e| Fatal(format!("{}: {e}", path.display())))?;
    Ok(load_algebra(&bytes)?)
}

fn write_json(path: Option<&Path>, v: &Value) -> Result<(), Fatal> {
    let text = serde_json::to_string_pretty(v)? + "\n";
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Fatal(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool, Fatal> {
    Ok(rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()?)
}

fn verify(args: VerifyArgs) -> Result<u8, Fatal> {
    let alg = load(&args.input)?;
    let mut cfg = VerifyConfig::new(args.max_dim);
    if let Some(names) = args.checks {
        cfg.checks = names
            .iter()
            .map(|n| n.trim().parse::<Check>())
            .collect::<Result<_, _>>()?;
    }
    cfg.budgets = budgets(args.budget);
    cfg.seed = args.seed;
    cfg.timings = args.timings;
    let report = pool(args.workers)?.install(|| run_verify(alg, &cfg));
    write_json(Some(&args.out), &serde_json::to_value(&report)?)?;
    for c in &report.checks {
        let status = if c.passed() { "pass" } else { "FAIL" };
        println!(
            "{:<10} {status} ({} tested, {} failures)",
            c.name,
            c.pairs_tested,
            c.failures.len()
        );
    }
    if let Some(e) = &report.error {
        eprintln!("error: {e}");
    }
    Ok(report.exit_code() as u8)
}

fn table(
    input: &Path,
    max_dim: usize,
    which: Which,
    budget: Option<u128>,
    workers: usize,
    out: &Path,
) -> Result<u8, Fatal> {
    let alg = load(input)?;
    let fingerprint = algebra_fingerprint(alg.quiver());
    let lab = Lab::new(alg, max_dim, budgets(budget))?;
    let entries = pool(workers)?.install(|| -> Result<Vec<Value>, Fatal> {
        let mut out = Vec::new();
        for (a, b) in lab.in_bound_pairs() {
            let (left, right, terms) = match which {
                Which::Hall => {
                    let x = HallElem::basis(lab.q(), a.clone());
                    let y = HallElem::basis(lab.q(), b.clone());
                    (
                        a.to_string(),
                        b.to_string(),
                        serde_json::to_value(lab.hall_mul(&x, &y)?)?,
                    )
                }
                Which::Dh => {
                    let p: DHElem = lab.dh_mul(&lab.e_of_module(&a), &lab.e_of_module(&b))?;
                    (format!("E{a}"), format!("E{b}"), serde_json::to_value(p)?)
                }
            };
            out.push(json!({ "left": left, "right": right, "terms": terms }));
        }
        Ok(out)
    })?;
    let which = match which {
        Which::Hall => "hall",
        Which::Dh => "dh",
    };
    let v = json!({
        "algebra_fingerprint": fingerprint,
        "q": lab.q(),
        "bound": max_dim,
        "which": which,
        "entries": entries,
    });
    write_json(Some(out), &v)?;
    Ok(0)
}

fn enumerate(
    input: &Path,
    max_dim: usize,
    budget: Option<u128>,
    out: Option<&Path>,
) -> Result<u8, Fatal> {
    let alg = load(input)?;
    let fingerprint = algebra_fingerprint(alg.quiver());
    let b = budgets(budget);
    let mut m = ModCat::new(alg);
    m.iso_budget = b.iso;
    let u = ModuleUniverse::enumerate(&m, max_dim, b.raw)?;
    let classes: Vec<Value> = u
        .classes
        .iter()
        .map(|c| json!({ "id": c.id.to_string(), "dims": c.rep.dims, "end_dim": c.fingerprint.end_dim }))
        .collect();
    let census: Vec<Value> = u
        .census()
        .into_iter()
        .map(|(d, n)| json!({ "dims": d, "classes": n }))
        .collect();
    let v = json!({
        "algebra_fingerprint": fingerprint,
        "q": m.q(),
        "bound": max_dim,
        "dim": m.alg.dim(),
        "gldim": gldim_certificate(&m),
        "representations_scanned": u.raw_count.to_string(),
        "census": census,
        "classes": classes,
    });
    write_json(out, &v)?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Fatal> {
    match cli.cmd {
        Cmd::Verify(args) => verify(args),
        Cmd::Table {
            input,
            max_dim,
            which,
            budget,
            workers,
            out,
        } => table(&input, max_dim, which, budget, workers, &out),
        Cmd::Enumerate {
            input,
            max_dim,
            budget,
            out,
        } => enumerate(&input, max_dim, budget, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(code)) => ExitCode::from(code),
        Ok(Err(Fatal(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(_) => {
            eprintln!("error: internal failure");
            ExitCode::from(2)
        }
    }
}
