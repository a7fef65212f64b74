//! `cliquex` command-line front end.
//!
//! Graphs are read from `--input` (or stdin) as graph6 lines or an edge list.
//! Numbers go to stdout one per line; reports are JSON. Exit codes: 0 success,
//! 1 verification mismatch, 2 usage or parse error, 3 infeasible parameters.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use cliquex_core::enumerate::EnumerationError;
use cliquex_core::extremal::{decompose_connected, decompose_erdos, erdos_bound, max_cliques_bound, ExtremalError};
use cliquex_core::format::{read_graphs, Format, ParseError};
use cliquex_core::spectral::SpectralError;
use cliquex_core::verify::VerifyError;
use cliquex_core::{
    connected_graphs, construct_b1, construct_b2, construct_bridge, construct_extremal_star, construct_krt,
    count_s_cliques, kernel, s_order_compare, spectral_moments, to_graph6, verify_extremal_kernels,
    verify_lemma_suite, verify_max_cliques, verify_s_order_last, EnumerationTask, Graph, GridConfig,
    LemmaSuiteConfig, SOrder, VerificationReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INFEASIBLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cliquex", version, about = "Clique counts, extremal graphs and S-order in connected graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Maximum number of s-cliques over connected graphs of order n and size m.
    Bound {
        #[arg(long)]
        m: u64,
        /// Order; omit together with --erdos for the bound over all graphs of size m.
        #[arg(long, required_unless_present = "erdos")]
        n: Option<u64>,
        #[arg(long)]
        s: u64,
        /// The size-only bound, ignoring connectivity and order.
        #[arg(long, conflicts_with = "n")]
        erdos: bool,
    },
    /// The (r, t) decomposition of (m, n).
    Decompose {
        #[arg(long)]
        m: u64,
        #[arg(long, required_unless_present = "erdos")]
        n: Option<u64>,
        #[arg(long, conflicts_with = "n")]
        erdos: bool,
    },
    /// Number of s-cliques of each input graph.
    Count {
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        input: InputArgs,
    },
    /// The subgraph left after repeatedly deleting vertices of degree at most s.
    Kernel {
        #[arg(long)]
        s: usize,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Builds a named graph and prints it as graph6.
    Construct(ConstructArgs),
    /// Closed-walk counts S_0..S_jmax of each input graph, space separated.
    Moments {
        #[arg(long)]
        jmax: usize,
        #[command(flatten)]
        input: InputArgs,
    },
    /// S-order relation of the first input graph to the second.
    Compare {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Every connected graph of order n (and size m, if given), one graph6 line each.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, env = "CLIQUEX_WORKERS", default_value_t = 1)]
        workers: usize,
    },
    /// Runs a verification harness and emits its JSON report.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file; `-` or absent reads stdin.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value = "auto", value_parser = parse_format)]
    pub format: Format,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// K_r^t plus pendants on a top-degree vertex (needs --m, --n).
    Star,
    /// K_r plus one vertex joined to t clique vertices (needs --r, --t).
    Krt,
    /// K_p and C_q joined by a path of --len edges (needs --p, --q, --len).
    Bridge,
    /// The pendant-star construction in a t = 2 cell (needs --m, --n).
    B1,
    /// B(r,3) with pendants on the shared vertex in a t = 2 cell (needs --m, --n).
    B2,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long)]
    pub t: Option<u64>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub len: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Harness {
    MaxCliques,
    Kernels,
    SOrder,
    Lemmas,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub harness: Harness,
    #[arg(long, default_value_t = 7)]
    pub nmax: usize,
    #[arg(long, default_value_t = 1)]
    pub nmin: usize,
    /// Clique orders, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [3, 4])]
    pub s: Vec<usize>,
    #[arg(long, env = "CLIQUEX_WORKERS", default_value_t = 1)]
    pub workers: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random instances per randomized property (lemmas only).
    #[arg(long, default_value_t = 1000)]
    pub iterations: u64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Zero all timing fields so repeated runs give identical bytes.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Infeasible(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Infeasible(_) => EXIT_INFEASIBLE,
        }
    }
}

impl From<ExtremalError> for CliError {
    fn from(e: ExtremalError) -> Self {
        CliError::Infeasible(e.to_string())
    }
}

impl From<EnumerationError> for CliError {
    fn from(e: EnumerationError) -> Self {
        CliError::Infeasible(e.to_string())
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        CliError::Infeasible(e.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        CliError::Infeasible(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command. Errors are written
/// to `stderr`; the return value is the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_input(input: &InputArgs, stdin: &mut dyn Read) -> Result<Vec<Graph>, CliError> {
    let text = match &input.input {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(path)?,
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    Ok(read_graphs(&text, input.format)?)
}

fn need(value: Option<u64>, flag: &str, family: &str) -> Result<u64, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--family {family} requires --{flag}")))
}

fn construct(args: &ConstructArgs) -> Result<Graph, CliError> {
    let allowed: &[&str] = match args.family {
        Family::Star | Family::B1 | Family::B2 => &["m", "n"],
        Family::Krt => &["r", "t"],
        Family::Bridge => &["p", "q", "len"],
    };
    let given = [
        ("m", args.m),
        ("n", args.n),
        ("r", args.r),
        ("t", args.t),
        ("p", args.p),
        ("q", args.q),
        ("len", args.len),
    ];
    if let Some((flag, _)) = given.iter().find(|(flag, v)| v.is_some() && !allowed.contains(flag)) {
        return Err(CliError::Usage(format!("--{flag} does not apply to --family {:?}", args.family).to_lowercase()));
    }
    Ok(match args.family {
        Family::Star => construct_extremal_star(need(args.m, "m", "star")?, need(args.n, "n", "star")?)?,
        Family::Krt => construct_krt(need(args.r, "r", "krt")?, need(args.t, "t", "krt")?)?,
        Family::Bridge => construct_bridge(
            need(args.p, "p", "bridge")?,
            need(args.q, "q", "bridge")?,
            need(args.len, "len", "bridge")?,
        )?,
        Family::B1 => construct_b1(need(args.m, "m", "b1")?, need(args.n, "n", "b1")?)?,
        Family::B2 => construct_b2(need(args.m, "m", "b2")?, need(args.n, "n", "b2")?)?,
    })
}

fn run_verify(args: &VerifyArgs) -> Result<VerificationReport, CliError> {
    let grid = GridConfig::new(args.nmax, &args.s).n_min(args.nmin).workers(args.workers);
    Ok(match args.harness {
        Harness::MaxCliques => verify_max_cliques(&grid)?,
        Harness::Kernels => verify_extremal_kernels(&grid)?,
        Harness::SOrder => verify_s_order_last(&grid.n_min(args.nmin.max(4)))?,
        Harness::Lemmas => verify_lemma_suite(&LemmaSuiteConfig {
            seed: args.seed,
            iterations: args.iterations,
            exhaustive_n_max: args.nmax,
            workers: args.workers,
        })?,
    })
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Bound { m, n, s, erdos } => {
            let value = match n {
                Some(n) if !erdos => max_cliques_bound(m, n, s)?,
                _ => erdos_bound(m, s)?,
            };
            writeln!(out, "{value}")?;
        }
        Command::Decompose { m, n, erdos } => match n {
            Some(n) if !erdos => {
                let d = decompose_connected(m, n)?;
                writeln!(out, "r={} t={}", d.r, d.t)?;
            }
            _ => {
                let d = decompose_erdos(m);
                writeln!(out, "r={} t={}", d.r, d.t)?;
            }
        },
        Command::Count { s, input } => {
            for g in read_input(&input, stdin)? {
                writeln!(out, "{}", count_s_cliques(&g, s).count)?;
            }
        }
        Command::Kernel { s, input } => {
            for g in read_input(&input, stdin)? {
                writeln!(out, "{}", to_graph6(&kernel(&g, s)))?;
            }
        }
        Command::Construct(args) => {
            writeln!(out, "{}", to_graph6(&construct(&args)?))?;
        }
        Command::Moments { jmax, input } => {
            for g in read_input(&input, stdin)? {
                let moments = spectral_moments(&g, jmax)?;
                let line: Vec<String> = moments.as_slice().iter().map(u128::to_string).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
        }
        Command::Compare { input } => {
            let graphs = read_input(&input, stdin)?;
            let [a, b] = graphs.as_slice() else {
                return Err(CliError::Usage(format!("compare needs exactly two graphs, got {}", graphs.len())));
            };
            let cmp = s_order_compare(a, b)?;
            let relation = match cmp.relation {
                SOrder::Before => "before",
                SOrder::After => "after",
                SOrder::Equal => "equal",
            };
            match cmp.first_differing_index {
                Some(j) => writeln!(out, "{relation} {j}")?,
                None => writeln!(out, "{relation}")?,
            }
        }
        Command::Enumerate { n, m, workers } => {
            let sizes = match m {
                Some(m) => m..=m,
                None if n == 0 => return Err(CliError::Infeasible("order must be positive".into())),
                None => n - 1..=n * (n - 1) / 2,
            };
            for m in sizes {
                // Workers own disjoint partitions; printing them in index order
                // keeps the output independent of scheduling.
                let streams: Vec<Vec<String>> = std::thread::scope(|scope| -> Result<_, EnumerationError> {
                    let handles: Vec<_> = (0..workers.max(1))
                        .map(|w| {
                            let task = EnumerationTask::connected(n, m).with_partition(w, workers.max(1));
                            scope.spawn(move || -> Result<Vec<String>, EnumerationError> {
                                Ok(connected_graphs(task)?.map(|g| to_graph6(&g)).collect())
                            })
                        })
                        .collect();
                    handles.into_iter().map(|h| h.join().expect("enumeration worker panicked")).collect()
                })?;
                let mut codes: Vec<String> = streams.into_iter().flatten().collect();
                codes.sort_unstable();
                for code in codes {
                    writeln!(out, "{code}")?;
                }
            }
        }
        Command::Verify(args) => {
            let mut report = run_verify(&args)?;
            if args.no_timing {
                report = report.without_timing();
            }
            let json = report.to_json();
            match &args.out {
                Some(path) => fs::write(path, json + "\n")?,
                None => writeln!(out, "{json}")?,
            }
            if !report.all_match() {
                return Ok(EXIT_MISMATCH);
            }
        }
    }
    Ok(EXIT_OK)
}
