use std::fs;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diperfect_core::constructive::run_builder;
use diperfect_core::forbidden::classify;
use diperfect_core::harness::{
    check_diperfect_with, check_property, survey_conjecture, validate_theorem, DiperfectCache,
    SurveyConfig, TheoremClass, EXHAUSTIVE_MAX,
};
use diperfect_core::oracles::check_maximum_stable;
use diperfect_core::{Builder, Digraph, Error, ForbiddenClass, Mode, PathPartition, Witness};
use serde::Serialize;

use crate::document::{render, Kind};
use crate::formats::{detect, emit_digraph, emit_dot_marked, parse_digraph, Format, ParseError};

/// Process exit codes.
pub mod exit {
    /// The property holds or the construction succeeded.
    pub const SUCCESS: i32 = 0;
    /// A definite negative answer; the witness is on standard output.
    pub const NEGATIVE: i32 = 1;
    /// Usage, parse or precondition error.
    pub const USAGE: i32 = 2;
    /// An order exceeds a size cap, or a budget is exhausted.
    pub const TOO_LARGE: i32 = 3;
    /// A constructive step failed where a theorem guarantees success.
    pub const INTERNAL: i32 = 4;
}

#[derive(Debug, Parser)]
#[command(
    name = "diperfect",
    version,
    about = "Path partitions meeting maximum stable sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input file, or `-` for standard input.
    pub file: String,
    /// Input encoding; `auto` picks by the first character.
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub input_format: InputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum InputFormat {
    Auto,
    EdgeList,
    Digraph6,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum OutputFormat {
    Json,
    EdgeList,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report recognition flags, the stability number and forbidden structures.
    Classify(Input),
    /// Look for an induced odd cycle excluding the digraph from the mode's class.
    Forbidden {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "be")]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Build a path partition for a maximum stable set.
    Partition {
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertices of a maximum stable set.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        #[arg(long, default_value = "be")]
        mode: Mode,
        #[arg(long, default_value = "auto")]
        builder: Builder,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Check the property for every maximum stable set.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "be")]
        property: Mode,
        /// Check every induced subdigraph as well.
        #[arg(long)]
        diperfect: bool,
        /// Disable the isomorphism-class cache used with `--diperfect`.
        #[arg(long)]
        no_memo: bool,
    },
    /// Tabulate class membership against diperfection for all orders up to `--n`.
    Survey {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mode: Mode,
        /// Count isomorphism classes instead of labelled digraphs.
        #[arg(long)]
        up_to_iso: bool,
        #[command(flatten)]
        jobs: Jobs,
        /// Maximum number of digraphs to generate.
        #[arg(long, default_value_t = u64::MAX)]
        budget: u64,
        /// Orders up to this one are enumerated; larger ones are sampled.
        #[arg(long, default_value_t = EXHAUSTIVE_MAX)]
        exhaustive_max: usize,
        /// Digraphs sampled per order above the exhaustive range.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a class builder on members of a theorem class and check every result.
    Validate {
        #[arg(long)]
        class: TheoremClass,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mode: Mode,
        /// Sample this many members; omit to enumerate all members up to isomorphism.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Re-encode a digraph.
    Convert {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        to: Format,
    },
}

#[derive(Debug, Args)]
pub struct Jobs {
    /// Worker threads; defaults to one per core.
    #[arg(long, env = "DIPERFECT_JOBS")]
    pub jobs: Option<usize>,
}

/// What a command printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

enum Failure {
    Io(String),
    Parse(ParseError),
    Core(Error),
    Threads(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Digraph(e) => Failure::Core(e),
            e => Failure::Parse(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<Failure> for Outcome {
    fn from(f: Failure) -> Self {
        match f {
            Failure::Io(msg) => Outcome::fail(exit::USAGE, msg),
            Failure::Parse(e) => Outcome::fail(exit::USAGE, e),
            Failure::Threads(msg) => Outcome::fail(exit::USAGE, msg),
            Failure::Core(e) => Outcome::fail(error_code(&e), e),
        }
    }
}

pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::TooLarge { .. } | Error::BudgetExceeded { .. } => exit::TOO_LARGE,
        Error::InternalTheoremViolation(_) => exit::INTERNAL,
        _ => exit::USAGE,
    }
}

/// Runs a parsed command line; `stdin` backs the `-` file name.
pub fn run(cli: Cli, stdin: &mut dyn Read) -> Outcome {
    execute(cli.command, stdin).unwrap_or_else(Outcome::from)
}

/// Parses `args` (program name first) and runs them.
pub fn run_args<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, stdin),
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::SUCCESS
            };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(code, text)
            }
        }
    }
}

fn read_input(input: &Input, stdin: &mut dyn Read) -> Result<Digraph, Failure> {
    let text = if input.file == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Io(format!("reading standard input: {e}")))?;
        buf
    } else {
        fs::read_to_string(&input.file)
            .map_err(|e| Failure::Io(format!("reading {}: {e}", input.file)))?
    };
    let format = match input.input_format {
        InputFormat::Auto => detect(&text),
        InputFormat::EdgeList => Format::EdgeList,
        InputFormat::Digraph6 => Format::Digraph6,
        InputFormat::Json => Format::Json,
    };
    Ok(parse_digraph(&text, format)?)
}

fn with_jobs<T: Send>(jobs: &Jobs, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs.jobs {
        None => Ok(f()),
        Some(0) => Err(Failure::Threads("--jobs must be at least 1".into())),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Failure::Threads(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

#[derive(Serialize)]
struct ForbiddenDoc {
    mode: Mode,
    class: ForbiddenClass,
    in_class: bool,
    witness: Option<Witness>,
}

#[derive(Serialize)]
struct PartitionDoc {
    digraph: Digraph,
    stable_set: Vec<usize>,
    mode: Mode,
    builder: Builder,
    partition: Option<PathPartition>,
    trace: Option<diperfect_core::BuildTrace>,
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Outcome, Failure> {
    match command {
        Command::Classify(input) => {
            let d = read_input(&input, stdin)?;
            Ok(Outcome::ok(
                exit::SUCCESS,
                render(Kind::ClassReport, &classify(&d)?),
            ))
        }
        Command::Forbidden {
            input,
            mode,
            format,
        } => {
            let d = read_input(&input, stdin)?;
            let class = ForbiddenClass::for_mode(mode);
            let witness = class.obstruction(&d)?;
            let code = if witness.is_some() {
                exit::NEGATIVE
            } else {
                exit::SUCCESS
            };
            let text = match format {
                OutputFormat::Json => render(
                    Kind::Forbidden,
                    &ForbiddenDoc {
                        mode,
                        class,
                        in_class: witness.is_none(),
                        witness: witness.clone(),
                    },
                ),
                OutputFormat::EdgeList => match &witness {
                    Some(w) => emit_witness(w),
                    None => String::new(),
                },
                OutputFormat::Dot => {
                    let vs = witness.as_ref().map_or(&[][..], |w| &w.vertices[..]);
                    let arcs: Vec<_> = d
                        .arcs()
                        .filter(|(u, v)| vs.contains(u) && vs.contains(v))
                        .collect();
                    emit_dot_marked(&d, vs, &arcs)
                }
            };
            Ok(Outcome::ok(code, text))
        }
        Command::Partition {
            input,
            set,
            mode,
            builder,
            format,
        } => {
            let d = read_input(&input, stdin)?;
            check_maximum_stable(&d, &set)?;
            let built = run_builder(builder, &d, &set, mode)?;
            let code = if built.is_some() {
                exit::SUCCESS
            } else {
                exit::NEGATIVE
            };
            let mut stable_set = set.clone();
            stable_set.sort_unstable();
            let text = match format {
                OutputFormat::Json => {
                    let (partition, trace) = built.map(|b| (b.partition, b.trace)).unzip();
                    render(
                        Kind::Partition,
                        &PartitionDoc {
                            digraph: d,
                            stable_set,
                            mode,
                            builder,
                            partition,
                            trace,
                        },
                    )
                }
                OutputFormat::EdgeList => {
                    built.map_or_else(String::new, |b| emit_paths(&b.partition))
                }
                OutputFormat::Dot => {
                    let arcs: Vec<_> = built
                        .iter()
                        .flat_map(|b| b.partition.paths.iter())
                        .flat_map(|p| {
                            p.vertices()
                                .windows(2)
                                .map(|w| (w[0], w[1]))
                                .collect::<Vec<_>>()
                        })
                        .collect();
                    emit_dot_marked(&d, &stable_set, &arcs)
                }
            };
            Ok(Outcome::ok(code, text))
        }
        Command::Check {
            input,
            property,
            diperfect,
            no_memo,
        } => {
            let d = read_input(&input, stdin)?;
            let report = if diperfect {
                let cache = DiperfectCache::new();
                check_diperfect_with(&d, property, (!no_memo).then_some(&cache))?
            } else {
                check_property(&d, property)?
            };
            let code = if report.holds {
                exit::SUCCESS
            } else {
                exit::NEGATIVE
            };
            Ok(Outcome::ok(code, render(Kind::PropertyReport, &report)))
        }
        Command::Survey {
            n,
            mode,
            up_to_iso,
            jobs,
            budget,
            exhaustive_max,
            samples,
            seed,
        } => {
            let config = SurveyConfig {
                n_max: n,
                mode,
                budget,
                up_to_iso,
                exhaustive_max: exhaustive_max.min(n),
                samples,
                seed,
            };
            let report = with_jobs(&jobs, || survey_conjecture(&config))??;
            let code = if report.counterexamples.is_empty() {
                exit::SUCCESS
            } else {
                exit::NEGATIVE
            };
            Ok(Outcome::ok(code, render(Kind::SurveyReport, &report)))
        }
        Command::Validate {
            class,
            n,
            mode,
            samples,
            seed,
            jobs,
        } => {
            let report = with_jobs(&jobs, || validate_theorem(class, n, mode, samples, seed))??;
            let code = if report.failures.is_empty() {
                exit::SUCCESS
            } else {
                exit::NEGATIVE
            };
            Ok(Outcome::ok(code, render(Kind::ValidationReport, &report)))
        }
        Command::Convert { input, to } => {
            let d = read_input(&input, stdin)?;
            Ok(Outcome::ok(exit::SUCCESS, emit_digraph(&d, to)))
        }
    }
}

/// One path per line, vertices separated by spaces.
fn emit_paths(p: &PathPartition) -> String {
    p.paths
        .iter()
        .map(|path| {
            path.vertices()
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" ")
                + "\n"
        })
        .collect()
}

fn emit_witness(w: &Witness) -> String {
    let kind = serde_json::to_value(w.kind).expect("kinds serialize");
    let vs: Vec<String> = w.vertices.iter().map(usize::to_string).collect();
    format!("{} {}\n", kind.as_str().unwrap_or_default(), vs.join(" "))
}
