use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use realspherical::cli::{
    analyze, catalog, hyperboloid_polar_demo, parse_space, render_text, AnalyzeOptions,
};

const MISMATCH: u8 = 1;
const INPUT_ERROR: u8 = 2;

#[derive(Parser)]
#[command(
    name = "realspherical",
    version,
    about = "Structural invariants of real spherical spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a space-description file.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Skip the Grassmannian degeneration check.
        #[arg(long)]
        skip_numeric: bool,
        #[arg(long)]
        tmax: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Polar decomposition of sampled points on the one-sheeted hyperboloid.
    DemoPolar {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Forbid the flip `w`.
        #[arg(long)]
        no_flip: bool,
    },
    /// The shipped fixtures.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    /// Run one fixture, or all of them, against the pinned reports.
    Run {
        name: Option<String>,
    },
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Analyze {
            file,
            format,
            skip_numeric,
            tmax,
            seed,
        } => run_analyze(&file, format, skip_numeric, tmax, seed),
        Command::DemoPolar {
            samples,
            seed,
            no_flip,
        } => {
            if samples == 0 {
                eprintln!("error: --samples must be at least 1");
                return ExitCode::from(INPUT_ERROR);
            }
            let s = hyperboloid_polar_demo(samples, seed, !no_flip);
            println!("samples     {}", s.samples);
            println!(
                "flip        {}",
                if s.with_w { "allowed" } else { "forbidden" }
            );
            println!("decomposed  {} ({} via flip)", s.decomposed, s.flips_used);
            println!("coverage    {:.4}%", 100.0 * s.coverage);
            println!("max residual {:.3e}", s.max_residual);
            ExitCode::SUCCESS
        }
        Command::Catalog { action } => run_catalog(action),
    }
}

fn run_analyze(
    file: &Path,
    format: Format,
    skip_numeric: bool,
    tmax: Option<u32>,
    seed: Option<u64>,
) -> ExitCode {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            return ExitCode::from(INPUT_ERROR);
        }
    };
    let desc = match parse_space(&text) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {}: {e}", file.display());
            return ExitCode::from(INPUT_ERROR);
        }
    };
    let mut opts = AnalyzeOptions::from_description(&desc);
    opts.skip_numeric = skip_numeric;
    if let Some(t) = tmax {
        opts.tmax = t;
    }
    if let Some(s) = seed {
        opts.seed = s;
    }
    let report = match analyze(&desc, &opts) {
        Ok(a) => a.report,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if e.input_error { INPUT_ERROR } else { MISMATCH });
        }
    };
    match format {
        Format::Text => print!("{}", render_text(&report)),
        Format::Structured => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("reports serialize")
        ),
    }
    let checks_ok = report.oracle_agrees && report.grasslimit.as_ref().is_none_or(|g| g.passed);
    if checks_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(MISMATCH)
    }
}

fn run_catalog(action: CatalogAction) -> ExitCode {
    match action {
        CatalogAction::List => {
            for n in catalog::list() {
                println!("{n}");
            }
            ExitCode::SUCCESS
        }
        CatalogAction::Run { name } => {
            let names: Vec<&str> = match &name {
                Some(n) if catalog::fixture(n).is_none() => {
                    eprintln!("error: unknown fixture {n:?}; try `catalog list`");
                    return ExitCode::from(INPUT_ERROR);
                }
                Some(n) => vec![n.as_str()],
                None => catalog::list(),
            };
            let mut ok = true;
            for (n, r) in names.iter().zip(catalog::run(&names)) {
                match r {
                    Ok(r) if r.passed() => println!("{n:<14} pass ({} ms)", r.report.timing_ms),
                    Ok(r) => {
                        ok = false;
                        println!("{n:<14} MISMATCH");
                        for d in &r.diffs {
                            println!("  {}: expected {}, got {}", d.path, d.expected, d.actual);
                        }
                    }
                    Err(e) => {
                        ok = false;
                        println!("{n:<14} ERROR {e}");
                    }
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(MISMATCH)
            }
        }
    }
}
