use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use stablemap_cohomology::blowup::Presentation;
use stablemap_cohomology::error::PipelineError;
use stablemap_cohomology::par::Execution;
use stablemap_cohomology::pipeline::{
    degree2_betti, degree2_presentation, degree3_betti, degree3_infinite_presentation,
    degree3_p1_presentation, run_suite, Suite, SuiteConfig,
};
use stablemap_cohomology::series::RationalSeries;

#[derive(Parser)]
#[command(
    name = "stablemap",
    version,
    about = "Betti numbers and cohomology rings of moduli of degree-2 and degree-3 stable maps to P^(n-1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Poincaré polynomial for one n.
    Betti {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3))]
        degree: u32,
        #[arg(long)]
        n: u32,
        /// Print Betti numbers up to this (even) degree.
        #[arg(long)]
        expand: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Ring presentation with its Hilbert series.
    Ring {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3))]
        degree: u32,
        #[arg(
            long,
            conflicts_with = "infinite",
            required_unless_present = "infinite"
        )]
        n: Option<u32>,
        #[arg(long)]
        infinite: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        /// Largest n for Gröbner-backed ring checks.
        #[arg(long, default_value_t = 4)]
        n_max: u32,
        /// Largest n for the series-only Betti identities.
        #[arg(long, default_value_t = 8)]
        betti_n_max: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also write the report here, in the chosen format.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run cases one after another.
        #[arg(long)]
        sequential: bool,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::OutOfRange(m) => Failure::Usage(m),
            other => Failure::Verification(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Betti {
            degree,
            n,
            expand,
            format,
        } => betti(degree, n, expand, format),
        Command::Ring {
            degree,
            n,
            infinite,
            format,
        } => ring(degree, n, infinite, format),
        Command::Verify {
            suite,
            n_max,
            betti_n_max,
            format,
            out,
            sequential,
        } => verify(suite, n_max, betti_n_max, format, out, sequential),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(1)
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn betti(degree: u32, n: u32, expand: Option<u32>, format: Format) -> Result<(), Failure> {
    if let Some(e) = expand {
        if e % 2 != 0 {
            return Err(Failure::Usage(format!("--expand must be even, got {e}")));
        }
    }
    let series = if degree == 2 {
        degree2_betti(n)?
    } else {
        degree3_betti(n)?
    };
    let expansion: Option<Vec<String>> =
        expand.map(|e| series.expand_to(e).iter().map(|c| c.to_string()).collect());
    let poly = series.as_polynomial().map(|p| p.to_string());
    match format {
        Format::Text => {
            if let Some(xs) = &expansion {
                println!("[{}]", xs.join(","));
            }
            println!("{series}");
            if let Some(p) = poly {
                println!("= {p}");
            }
        }
        Format::Json => {
            let mut v = json!({"degree": degree, "n": n, "series": series.to_json()});
            if let Some(p) = poly {
                v["polynomial"] = Value::String(p);
            }
            if let Some(xs) = expansion {
                let nums: Vec<Value> = xs
                    .iter()
                    .map(|s| serde_json::from_str(s).expect("integer literal"))
                    .collect();
                v["expansion"] = Value::Array(nums);
            }
            print_json(&v);
        }
    }
    Ok(())
}

// Stated in the literature; nothing here computes it.
fn picard(n: Option<u32>) -> &'static str {
    match n {
        Some(2) => "Z",
        _ => "Z + Z",
    }
}

fn ring(degree: u32, n: Option<u32>, infinite: bool, format: Format) -> Result<(), Failure> {
    let presentation: Presentation = match (degree, n, infinite) {
        (2, Some(n), false) => degree2_presentation(n)?,
        (2, _, true) => {
            return Err(Failure::Usage(
                "degree 2 has no n = infinity presentation here".into(),
            ))
        }
        (3, _, true) => degree3_infinite_presentation(),
        (3, Some(2), false) => degree3_p1_presentation(),
        (3, Some(n), false) => {
            return Err(Failure::Usage(format!(
                "degree-3 rings are available for n = 2 and --infinite only, not n = {n}"
            )))
        }
        _ => return Err(Failure::Usage("pass --n or --infinite".into())),
    };
    let hilbert: RationalSeries = presentation.hilbert_series();
    let relations: Vec<String> = presentation
        .relations
        .iter()
        .map(|r| r.to_string())
        .collect();
    let pic = picard(n);
    match format {
        Format::Text => {
            println!("{}", presentation.label);
            println!("ring: {}", presentation.ring);
            println!("relations:");
            for r in &relations {
                println!("  {r}");
            }
            println!("hilbert series: {hilbert}");
            println!("picard group: {pic} (stated, not verified)");
        }
        Format::Json => print_json(&json!({
            "label": presentation.label,
            "ring": presentation.ring.to_string(),
            "relations": relations,
            "hilbert_series": hilbert.to_json(),
            "picard": {"group": pic, "status": "stated, not verified"},
        })),
    }
    Ok(())
}

fn verify(
    suite: Suite,
    n_max: u32,
    betti_n_max: u32,
    format: Format,
    out: Option<PathBuf>,
    sequential: bool,
) -> Result<(), Failure> {
    let config = SuiteConfig {
        ring_n_max: n_max,
        betti_n_max,
    };
    let execution = if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let report = run_suite(suite, config, execution)?;
    let rendered = match format {
        Format::Text => report.to_text(),
        Format::Json => {
            serde_json::to_string_pretty(&report.to_json()).expect("serializable") + "\n"
        }
    };
    print!("{rendered}");
    if let Some(path) = out {
        fs::write(&path, &rendered)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    if report.pass() {
        Ok(())
    } else {
        let failed: Vec<String> = report.failures().map(|c| c.name.clone()).collect();
        Err(Failure::Verification(failed.join(", ")))
    }
}
