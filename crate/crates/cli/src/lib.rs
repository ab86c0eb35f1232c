//! Command-line front end: circumcenters of point files, solver runs,
//! problem generation and multi-method benchmarks.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use circum::circumcenter::circumcenter;
use circum::problems::{
    generate_two_subspace, load_points, load_problem, read_problem_file, save_problem, trace_rows, write_trace_csv,
    FileError, ProblemFile, TraceRow,
};
use circum::solvers::{estimate_rate, run, Initializer, Method, Problem, SolverConfig, SolverTrace};
use circum::{friedrichs_cos, CircumConfig, CircumOutcome, Error};

/// Exit status for malformed input and failed validation.
pub const EXIT_INVALID: i32 = 1;
/// Exit status when a solver hits an empty circumcenter.
pub const EXIT_DEGENERATE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "circum", version, about = "Circumcenters and circumcentered reflection methods")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the circumcenter and circumradius of a point set, or EMPTY.
    Cc {
        points: PathBuf,
        /// Relative equidistance tolerance.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Run one method on a problem file and print a summary.
    Solve {
        problem: PathBuf,
        #[arg(long, default_value = "cdrm")]
        method: String,
        #[command(flatten)]
        run: RunArgs,
        /// Write the per-iteration trace as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Generate a two-subspace problem with a prescribed Friedrichs angle.
    Gen {
        #[arg(long)]
        n: usize,
        /// Subspace dimensions, e.g. `10,10`.
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        #[arg(long)]
        cf: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Run several methods on one problem and emit a combined CSV.
    Bench {
        problem: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "cdrm,dr,map")]
        methods: Vec<String>,
        #[command(flatten)]
        run: RunArgs,
        /// CSV destination; standard output when omitted (summaries then go to standard error).
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Starting point: raw, first or sum.
    #[arg(long, default_value = "first")]
    init: String,
    #[arg(long)]
    max_iter: Option<usize>,
    #[arg(long)]
    step_tol: Option<f64>,
    /// Stop once within this distance of the solution; `0` disables the rule.
    #[arg(long)]
    sol_tol: Option<f64>,
}

impl RunArgs {
    fn config(&self) -> Result<SolverConfig<f64>, CliError> {
        let mut cfg = SolverConfig::default();
        cfg.initializer = self.init.parse::<Initializer>()?;
        if let Some(m) = self.max_iter {
            cfg.max_iter = m;
        }
        if let Some(t) = self.step_tol {
            cfg.step_tol = t;
        }
        if let Some(t) = self.sol_tol {
            cfg.sol_tol = (t > 0.0).then_some(t);
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug)]
enum CliError {
    Invalid(String),
    Degenerate(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Degenerate(_) => EXIT_DEGENERATE,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Invalid(m) | CliError::Degenerate(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::DegenerateStep { .. } => CliError::Degenerate(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<FileError> for CliError {
    fn from(e: FileError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

fn io_error(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(format!("{}: {e}", path.display()))
}

/// Initializes logging from `CIRCUM_LOG` (`off`, `info` or `debug`; default `off`).
pub fn init_logging() {
    let env = env_logger::Env::new().filter_or("CIRCUM_LOG", "off");
    let _ = env_logger::Builder::from_env(env).format_timestamp(None).try_init();
}

/// Parses `argv` (program name first), runs the subcommand and returns the exit status.
pub fn cli_main<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Cc { points, tol } => cmd_cc(&points, tol, out),
        Command::Solve {
            problem,
            method,
            run,
            csv,
        } => cmd_solve(&problem, &method, &run, csv.as_deref(), out),
        Command::Gen {
            n,
            dims,
            cf,
            seed,
            output,
        } => cmd_gen(n, &dims, cf, seed, &output, out),
        Command::Bench {
            problem,
            methods,
            run,
            csv,
        } => cmd_bench(&problem, &methods, &run, csv.as_deref(), out, err),
    }
    .map_err(|e| {
        log::debug!("command failed: {e:?}");
        e
    })
}

fn fmt_vec(v: &[f64]) -> String {
    v.iter().map(|x| format!("{x:.16e}")).collect::<Vec<_>>().join(" ")
}

fn cmd_cc(path: &Path, tol: Option<f64>, out: &mut dyn Write) -> Result<(), CliError> {
    let set = load_points(path)?;
    let mut cfg = CircumConfig::default();
    if let Some(t) = tol {
        cfg = CircumConfig::new(cfg.rank_tol, t, cfg.dedup_tol)?;
    }
    let w = |e| io_error(Path::new("<stdout>"), e);
    match circumcenter(&set, &cfg) {
        CircumOutcome::Exists { center, radius } => {
            writeln!(out, "center: {}", fmt_vec(center.as_slice())).map_err(w)?;
            writeln!(out, "radius: {radius:.16e}").map_err(w)?;
        }
        CircumOutcome::Empty => writeln!(out, "EMPTY").map_err(w)?,
    }
    Ok(())
}

fn summary(problem: &Problem<f64>, trace: &SolverTrace<f64>) -> String {
    let rate = match estimate_rate(trace) {
        Ok(r) => format!("{r:.6e}"),
        Err(_) => "n/a".to_string(),
    };
    let cf = match problem.subspaces() {
        [u, v] => friedrichs_cos(u, v).map_or("n/a".into(), |c| format!("{c:.6e}")),
        _ => "n/a".into(),
    };
    format!(
        "method: {}\niterations: {}\ntermination: {}\nfinal distance: {:.6e}\nestimated rate: {rate}\nfriedrichs cos: {cf}\n",
        trace.method,
        trace.iterations(),
        trace.termination.label(),
        trace.final_distance()
    )
}

fn write_csv(path: Option<&Path>, rows: &[TraceRow], out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| io_error(p, e))?;
            write_trace_csv(BufWriter::new(file), rows).map_err(|e| io_error(p, e))
        }
        None => write_trace_csv(out, rows).map_err(|e| io_error(Path::new("<stdout>"), e)),
    }
}

fn cmd_solve(
    path: &Path,
    method: &str,
    args: &RunArgs,
    csv: Option<&Path>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let method: Method = method.parse()?;
    let cfg = args.config()?;
    let problem = load_problem(path)?;
    let trace = run(method, &problem, &cfg)?;
    write!(out, "{}", summary(&problem, &trace)).map_err(|e| io_error(Path::new("<stdout>"), e))?;
    if let Some(p) = csv {
        write_csv(Some(p), &trace_rows(&trace), out)?;
    }
    Ok(())
}

fn cmd_gen(n: usize, dims: &[usize], cf: f64, seed: u64, output: &Path, out: &mut dyn Write) -> Result<(), CliError> {
    let [du, dv] = dims else {
        return Err(CliError::Invalid("--dims expects two values".into()));
    };
    let problem = generate_two_subspace::<f64>(n, *du, *dv, cf, seed)?;
    let description = format!("two subspaces of R^{n}, dims {du}/{dv}, target c_F {cf}");
    let file = ProblemFile::from_problem(&problem, Some(seed), Some(description));
    save_problem(output, &file)?;
    writeln!(out, "wrote {}", output.display()).map_err(|e| io_error(output, e))?;
    Ok(())
}

fn cmd_bench(
    path: &Path,
    methods: &[String],
    args: &RunArgs,
    csv: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), CliError> {
    let methods: Vec<Method> = methods.iter().map(|m| m.parse()).collect::<Result<_, _>>()?;
    if methods.is_empty() {
        return Err(CliError::Invalid("no methods given".into()));
    }
    let cfg = args.config()?;
    let file = read_problem_file(path)?;
    let problem = file.to_problem()?;

    let results: Vec<Result<SolverTrace<f64>, Error>> = std::thread::scope(|scope| {
        let handles: Vec<_> = methods
            .iter()
            .map(|&m| {
                let (problem, cfg) = (&problem, &cfg);
                scope.spawn(move || run(m, problem, cfg))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("solver thread panicked")).collect()
    });

    let mut rows = Vec::new();
    let mut summaries = String::new();
    for r in results {
        let trace = r?;
        summaries.push_str(&summary(&problem, &trace));
        summaries.push('\n');
        rows.extend(trace_rows(&trace));
    }
    let stdout_err = |e| io_error(Path::new("<stdout>"), e);
    match csv {
        Some(_) => {
            write!(out, "{summaries}").map_err(stdout_err)?;
            write_csv(csv, &rows, out)?;
        }
        None => {
            write!(err, "{summaries}").map_err(stdout_err)?;
            write_csv(None, &rows, out)?;
        }
    }
    Ok(())
}

/// Runs the CLI against the process's standard streams.
pub fn main_with_std_streams() -> i32 {
    init_logging();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = cli_main(std::env::args_os(), &mut out, &mut err);
    let _ = out.flush();
    code
}
