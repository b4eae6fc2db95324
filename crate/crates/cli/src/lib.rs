//! The `starr` command line: file formats, the built-in example corpus, the
//! verification suite and the conjecture-search harness.
//!
//! Exit codes: 0 on success, 1 when a check fails or a computation is
//! inconsistent, 2 on usage or input errors.

pub mod commands;
pub mod corpus;
pub mod file;
pub mod report;
pub mod search;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{CliError, Input};
use report::Report;
use search::{Conjecture, Generator, SearchConfig};

#[derive(Debug, Parser)]
#[command(name = "starr", version, about = "Solomon-Terao algebras of hyperplane arrangements")]
pub struct Cli {
    /// Print the machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// A built-in example, e.g. ex4, notsplit, boolean-3, weyl-B2, inversion-4123.
    #[arg(long, conflicts_with = "file")]
    example: Option<String>,
    /// An arrangement file (JSON).
    file: Option<PathBuf>,
}

impl InputArgs {
    fn load(&self) -> Result<Input, CliError> {
        commands::load_input(self.example.as_deref(), self.file.as_deref())
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct EtaArgs {
    /// The polynomial eta, or "default" for the built-in choice.
    #[arg(long)]
    eta: Option<String>,
    /// Degree of the default eta.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=8))]
    degree: u32,
    /// Report format (same as --json when set to json).
    #[arg(long, value_enum)]
    report: Option<ReportFormat>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lattice, freeness, Psi and the Solomon-Terao algebra, with all checks.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        eta: EtaArgs,
    },
    /// The Solomon-Terao algebra and its ring-theoretic properties.
    St {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        eta: EtaArgs,
    },
    /// The Solomon-Terao polynomial Psi(x, t).
    Psi {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Freeness and exponents.
    Free {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Intersection lattice and characteristic polynomial.
    Lattice {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Root systems, ideal arrangements and inversion arrangements.
    Coxeter {
        #[command(subcommand)]
        sub: CoxeterCommand,
    },
    /// Run a verification suite over the built-in corpus.
    Verify {
        /// all, reference, identities, free, sweep or coxeter.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Search for counterexamples to the conjectures.
    Search(SearchArgs),
    /// Print an example as an arrangement file.
    Export {
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Debug, Subcommand)]
enum CoxeterCommand {
    /// Weyl arrangement, e.g. `weyl A 3`.
    Weyl { kind: String, rank: usize },
    /// Ideal arrangement from root indices, e.g. `ideal A 3 --roots 0,1,2`.
    Ideal {
        kind: String,
        rank: usize,
        #[arg(long, value_delimiter = ',')]
        roots: Vec<usize>,
    },
    /// All lower ideals of a root system.
    Ideals { kind: String, rank: usize },
    /// Inversion arrangement of a permutation, e.g. `inversion 4123`.
    Inversion { permutation: String },
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// random or sub.
    #[arg(long, default_value = "random")]
    generator: String,
    /// Parent example for the sub generator.
    #[arg(long, default_value = "weyl-B3")]
    parent: String,
    #[arg(long, default_value_t = 3)]
    dim: usize,
    #[arg(long, default_value_t = 3)]
    min_size: usize,
    #[arg(long, default_value_t = 6)]
    max_size: usize,
    /// Coefficient bound for random forms.
    #[arg(long, default_value_t = 2)]
    bound: i64,
    #[arg(long, default_value_t = 20)]
    count: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// all, factorization, palindromic or socle-degree.
    #[arg(long, default_value = "all")]
    conjecture: Conjecture,
    #[arg(long, default_value_t = 2)]
    degree: u32,
    /// Write the JSON-lines log here instead of standard output.
    #[arg(long)]
    log: Option<PathBuf>,
    /// Directory for counterexample files.
    #[arg(long, default_value = "counterexamples")]
    out: PathBuf,
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn finish(report: Report, json: bool) -> Outcome {
    let stdout = if json { report.to_json() + "\n" } else { report.to_text() };
    Outcome { code: if report.passed() { 0 } else { 1 }, stdout, stderr: String::new() }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let json = cli.json;
    let wants_json = |eta: &EtaArgs| json || matches!(eta.report, Some(ReportFormat::Json));
    let report = match &cli.command {
        Command::Analyze { input, eta } => {
            let r = commands::analyze_report(&input.load()?, eta.eta.as_deref(), eta.degree)?;
            return Ok(finish(r, wants_json(eta)));
        }
        Command::St { input, eta } => {
            let r = commands::st_report(&input.load()?, eta.eta.as_deref(), eta.degree)?;
            return Ok(finish(r, wants_json(eta)));
        }
        Command::Psi { input } => commands::psi_report(&input.load()?)?,
        Command::Free { input } => commands::free_report(&input.load()?)?,
        Command::Lattice { input } => commands::lattice_report(&input.load()?),
        Command::Coxeter { sub } => match sub {
            CoxeterCommand::Weyl { kind, rank } => commands::coxeter_weyl(kind, *rank)?,
            CoxeterCommand::Ideal { kind, rank, roots } => commands::coxeter_ideal(kind, *rank, roots)?,
            CoxeterCommand::Ideals { kind, rank } => commands::coxeter_ideals(kind, *rank)?,
            CoxeterCommand::Inversion { permutation } => commands::coxeter_inversion(permutation)?,
        },
        Command::Verify { suite } => commands::verify_report(suite)?,
        Command::Search(args) => return run_search(args, json),
        Command::Export { input } => {
            let input = input.load()?;
            let file = file::ArrangementFile::from_arrangement(&input.arrangement, input.eta.as_ref());
            return Ok(Outcome { code: 0, stdout: file.render() + "\n", stderr: String::new() });
        }
    };
    Ok(finish(report, json))
}

fn run_search(args: &SearchArgs, json: bool) -> Result<Outcome, CliError> {
    let generator = match args.generator.as_str() {
        "random" => {
            Generator::Random { dim: args.dim, min_size: args.min_size, max_size: args.max_size, bound: args.bound }
        }
        "sub" => Generator::Sub { parent: args.parent.clone(), min_size: args.min_size, max_size: args.max_size },
        other => return Err(CliError::Usage(format!("unknown generator {other:?}; use random or sub"))),
    };
    let cfg = SearchConfig { generator, count: args.count, seed: args.seed, conjecture: args.conjecture, degree: args.degree };
    let records = search::conjecture_search(&cfg)?;
    let log = search::render_log(&records);
    let written = search::write_counterexamples(&records, &args.out)?;
    let mut report = Report::new("search", &format!("{} seed {}", args.generator, args.seed));
    report.set("arrangements", records.len());
    report.set("errors", records.iter().filter(|r| r.error.is_some()).count());
    report.set("counterexample_files", &written);
    let violations = records.iter().filter(|r| !r.violations.is_empty()).count();
    report.set("violations", violations);
    let stdout = match &args.log {
        Some(path) => {
            std::fs::write(path, &log).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            if json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            }
        }
        None if json => report.to_json() + "\n",
        None => log + &report.to_text(),
    };
    // a violation is a finding, not a failure of the tool
    Ok(Outcome { code: 0, stdout, stderr: String::new() })
}
