use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use trigva_core::fock::Trunc;
use trigva_core::suite::{emit_report, run_suite, Fault, Format, Suite, SuiteConfig};

#[derive(Parser)]
#[command(
    name = "trigva",
    version,
    about = "Exact verification suites for trigonometric Lie algebras and their vertex-operator realizations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite and print its report.
    Verify(VerifyArgs),
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// jacobi, iso, singular, dims, fock-relations, ope, vanish, quasi-comm, weights or all
    suite: Suite,
    /// Label box for the isomorphism and quantum-torus checks.
    #[arg(long = "box")]
    label_box: Option<i32>,
    /// Label box for the random Jacobi triples.
    #[arg(long)]
    jacobi_box: Option<i32>,
    /// Number of random Jacobi triples per algebra.
    #[arg(long)]
    triples: Option<usize>,
    /// Interval of the vacuum-module suites, as LO..HI.
    #[arg(long, value_parser = parse_interval)]
    interval: Option<(i32, i32)>,
    /// Level to test; repeat for several.
    #[arg(long = "level")]
    levels: Vec<u32>,
    /// Number of Fock variables K.
    #[arg(long = "vars")]
    vars: Option<u32>,
    /// Fock degree bound D.
    #[arg(long = "deg")]
    deg: Option<u32>,
    /// Series order N.
    #[arg(long = "order")]
    order: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
    /// Rational specialization of q for rank computations, as p/q; repeat.
    #[arg(long = "q-spec")]
    q_specs: Vec<String>,
    /// json or md.
    #[arg(long, default_value = "json")]
    format: Format,
    /// Inject a named fault.
    #[arg(long)]
    perturb: Option<Fault>,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report elapsed_ms as 0 so identical runs give identical output.
    #[arg(long)]
    no_timing: bool,
}

fn parse_interval(s: &str) -> Result<(i32, i32), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got '{s}'"))?;
    let lo = lo
        .trim()
        .parse()
        .map_err(|e| format!("bad lower end: {e}"))?;
    let hi = hi
        .trim()
        .parse()
        .map_err(|e| format!("bad upper end: {e}"))?;
    Ok((lo, hi))
}

fn config(a: &VerifyArgs) -> SuiteConfig {
    let mut c = SuiteConfig::default();
    if let Some(b) = a.label_box {
        c.r#box = b;
    }
    if let Some(b) = a.jacobi_box {
        c.jacobi_box = b;
    }
    if let Some(n) = a.triples {
        c.jacobi_triples = n;
    }
    if let Some(i) = a.interval {
        c.interval = i;
    }
    if !a.levels.is_empty() {
        c.levels = a.levels.clone();
    }
    c.trunc = Trunc {
        k: a.vars.unwrap_or(c.trunc.k),
        d: a.deg.unwrap_or(c.trunc.d),
        n: a.order.unwrap_or(c.trunc.n),
    };
    if let Some(s) = a.seed {
        c.seed = s;
    }
    if !a.q_specs.is_empty() {
        c.q_specs = a.q_specs.clone();
    }
    c.format = a.format;
    c.perturb = a.perturb;
    c.timing = !a.no_timing;
    c
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Command::Verify(args) = cli.command;
    let cfg = config(&args);
    let report = match run_suite(&cfg, args.suite) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut text = emit_report(&report, cfg.format);
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    for r in report.failures() {
        eprintln!(
            "{} {}: {}",
            r.check_id,
            if r.status == trigva_core::suite::Status::Fail {
                "failed"
            } else {
                "errored"
            },
            r.witness.as_deref().unwrap_or("")
        );
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
