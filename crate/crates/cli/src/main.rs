use clap::{Parser, Subcommand};
use hhc_core::harness::{
    load_workspace, run_compute, run_task, run_verify, ComputeRequest, Format, TableKind, TaskOutput, Workspace,
};
use hhc_core::Error;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact Hochschild, cyclic, dihedral, Lie and Leibniz homology over Q.
#[derive(Parser)]
#[command(name = "hhc", version)]
struct Cli {
    /// Workspace file to use instead of the bundled corpus.
    #[arg(long, global = true)]
    workspace: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Load and validate a workspace file.
    Validate { file: PathBuf },
    /// Print a homology table.
    Compute {
        /// hh, hc, hd, lambda, lie, leibniz or forms.
        table: String,
        #[arg(long)]
        algebra: Option<String>,
        /// Also report ranks of the maps induced by this measuring (hh, hc, hd).
        #[arg(long)]
        measuring: Option<String>,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Matrix size for lie and leibniz.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value = "md")]
        format: String,
    },
    /// Run verification suites and print a summary.
    Verify {
        /// Suite id, alias, or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long)]
        measuring: Option<String>,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Run verification suites and write the full report.
    Report {
        #[arg(long)]
        format: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        measuring: Option<String>,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Run the tasks listed in a workspace file, in order.
    Run { file: PathBuf },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::TruncationTooLarge { .. } => 3,
        _ => 1,
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("HHC_THREADS") else { return Ok(()) };
    let n: usize = v.parse().map_err(|_| format!("HHC_THREADS must be a positive integer, got {v:?}"))?;
    if n == 0 {
        return Err("HHC_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn workspace(path: &Option<PathBuf>) -> hhc_core::Result<Workspace> {
    match path {
        Some(p) => load_workspace(p),
        None => Ok(Workspace::bundled()),
    }
}

fn run(cli: Cli) -> hhc_core::Result<u8> {
    match cli.command {
        Command::Validate { file } => {
            let ws = load_workspace(&file)?;
            let c = &ws.corpus;
            println!(
                "{}: {} algebras, {} coalgebras, {} measurings, {} tasks; all valid",
                file.display(),
                c.algebras.len(),
                c.coalgebras.len(),
                c.measurings.len(),
                ws.tasks.len()
            );
            Ok(0)
        }
        Command::Compute { table, algebra, measuring, max_degree, r, format } => {
            let ws = workspace(&cli.workspace)?;
            let kind: TableKind = table.parse()?;
            let format: Format = format.parse()?;
            let t = run_compute(&ws, kind, &ComputeRequest { algebra, measuring, max_degree, r })?;
            print!("{}", t.render(format));
            Ok(0)
        }
        Command::Verify { suite, measuring, max_degree } => {
            let ws = workspace(&cli.workspace)?;
            let rep = run_verify(&ws, &suite, measuring.as_deref(), max_degree)?;
            print!("{}", rep.markdown(false));
            Ok(if rep.failures() > 0 { 2 } else { 0 })
        }
        Command::Report { format, out, suite, measuring, max_degree } => {
            let ws = workspace(&cli.workspace)?;
            let format: Format = format.parse()?;
            let rep = run_verify(&ws, &suite, measuring.as_deref(), max_degree)?;
            std::fs::write(&out, rep.render(format)).map_err(|e| Error::InvalidInput(format!("{}: {e}", out.display())))?;
            println!("{}: {} checks, {} failing", out.display(), rep.records.len(), rep.failures());
            Ok(if rep.failures() > 0 { 2 } else { 0 })
        }
        Command::Run { file } => {
            let ws = load_workspace(&file)?;
            let mut code = 0;
            for task in &ws.tasks {
                match run_task(&ws, task)? {
                    TaskOutput::Table(t) => println!("{}", t.render(Format::Md)),
                    TaskOutput::Report(r) => {
                        println!("{}", r.markdown(false));
                        if r.failures() > 0 {
                            code = 2;
                        }
                    }
                }
            }
            Ok(code)
        }
    }
}

fn main() -> ExitCode {
    // Usage errors exit with 1; clap's own code 2 is reserved for failed checks.
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
