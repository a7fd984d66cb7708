use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hardy_spectral::graph::{random_graph, random_path};
use hardy_spectral::harness::{
    analyze, emit_quantities_csv, emit_report, parse_range, parse_suites, parse_vertex_list, parse_wgr, run_suite,
    write_wgr, ReportFormat, SuiteOptions, WgrFile,
};
use hardy_spectral::resistance::effective_resistance;
use hardy_spectral::VertexSet;

const THREADS_VAR: &str = "HARDY_SPECTRAL_THREADS";

/// Laplacian eigenvalues, effective resistance and Hardy-type bounds for
/// vertex- and edge-weighted graphs.
#[derive(Parser)]
#[command(name = "hardy-spectral", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print eigenvalues, contents and the isoperimetric constant.
    Analyze {
        file: PathBuf,
        /// Comma-separated boundary labels; defaults to the file's boundary.
        #[arg(long)]
        boundary: Option<String>,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Run verification suites and print a report; exits 1 if a check fails.
    Verify(VerifyArgs),
    /// Write a seeded random graph in .wgr format.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Print the effective resistance between two vertex sets.
    Resistance {
        file: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    file: PathBuf,
    /// `all` or a comma-separated subset of
    /// dirichlet,neumann,cheeger,pinch,ressum,path-reduction.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated boundary labels; defaults to the file's boundary,
    /// then to the first vertex.
    #[arg(long)]
    boundary: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, default_value_t = 50)]
    pinch_samples: usize,
    #[arg(long, default_value_t = 100)]
    ressum_samples: usize,
    /// Record wall-clock timings (makes the report non-reproducible).
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum GenCommand {
    /// A random path v0 - v1 - ... with `n` vertices.
    Path {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "0.1,10")]
        mass_range: String,
        #[arg(long, default_value = "0.1,10")]
        kappa_range: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A random spanning tree plus independent extra edges with probability `p`.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value = "0.1,10")]
        mass_range: String,
        #[arg(long, default_value = "0.1,10")]
        kappa_range: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

struct Failure(String);

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn read_graph(path: &Path) -> Result<WgrFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_wgr(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn boundary_for(file: &WgrFile, flag: Option<&str>) -> Result<Option<VertexSet>, Failure> {
    match flag {
        Some(list) => Ok(Some(parse_vertex_list(&file.graph, list)?)),
        None => Ok(file.boundary.clone()),
    }
}

fn write_output(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Analyze {
            file,
            boundary,
            json,
            csv,
        } => {
            let wgr = read_graph(&file)?;
            let boundary = boundary_for(&wgr, boundary.as_deref())?;
            let (report, errors) = analyze(&wgr.graph, boundary.as_ref());
            for (name, e) in &errors {
                eprintln!("warning: {name}: {e}");
            }
            if json {
                print!("{}", emit_report(&report, ReportFormat::Json));
            } else if csv {
                print!("{}", emit_quantities_csv(&report.quantities));
            } else {
                for (name, value) in &report.quantities {
                    println!("{name:<18} {:?}", value.0);
                }
            }
        }
        Command::Verify(args) => {
            if !(args.tolerance >= 0.0 && args.tolerance.is_finite()) {
                return Err(Failure(format!("tolerance must be a nonnegative number, found {}", args.tolerance)));
            }
            let wgr = read_graph(&args.file)?;
            let opts = SuiteOptions {
                boundary: boundary_for(&wgr, args.boundary.as_deref())?,
                suites: parse_suites(&args.suite)?,
                tolerance: args.tolerance,
                seed: args.seed,
                pinch_samples: args.pinch_samples,
                ressum_samples: args.ressum_samples,
                record_timing: args.timing,
                ..SuiteOptions::default()
            };
            let report = run_suite(&wgr.graph, &opts);
            let format = match args.format {
                Format::Json => ReportFormat::Json,
                Format::Csv => ReportFormat::Csv,
            };
            print!("{}", emit_report(&report, format));
            let failed = report.failures().count();
            if failed > 0 {
                eprintln!("{failed} of {} checks failed", report.checks.len());
                return Ok(ExitCode::from(1));
            }
        }
        Command::Gen(GenCommand::Path {
            n,
            mass_range,
            kappa_range,
            seed,
            output,
        }) => {
            let g = random_path(n, parse_range(&mass_range)?, parse_range(&kappa_range)?, seed)?;
            write_output(&write_wgr(&g, None), output.as_deref())?;
        }
        Command::Gen(GenCommand::Random {
            n,
            p,
            mass_range,
            kappa_range,
            seed,
            output,
        }) => {
            let g = random_graph(n, p, parse_range(&mass_range)?, parse_range(&kappa_range)?, seed)?;
            write_output(&write_wgr(&g, None), output.as_deref())?;
        }
        Command::Resistance { file, a, b } => {
            let wgr = read_graph(&file)?;
            let a = parse_vertex_list(&wgr.graph, &a)?;
            let b = parse_vertex_list(&wgr.graph, &b)?;
            println!("{:?}", effective_resistance(&wgr.graph, &a, &b)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Failure(format!("{THREADS_VAR} must be a positive integer, found `{value}`")))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(code) => code,
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
