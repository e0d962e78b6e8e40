//! `hammock-lab`: command-line access to the hammock-core constructions.

mod commands;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hammock_core::Error;

use crate::report::{Config, Report};

const CORPUS_ENV: &str = "HAMMOCKLAB_CORPUS";

#[derive(Debug, Parser)]
#[command(name = "hammock-lab", version, about = "Finite homotopy theory of small categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Truncation level of simplicial sets (command default when omitted).
    #[arg(long, global = true)]
    k: Option<usize>,

    /// Length bound for hammocks and zigzag words.
    #[arg(long, global = true)]
    max_length: Option<usize>,

    /// Highest homology degree checked.
    #[arg(long, global = true)]
    degree: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Echoed in the report; all bundled checks are exhaustive.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Exit with status 3 when a length bound was exhausted.
    #[arg(long, global = true)]
    strict: bool,

    /// Include wall-clock time in the report. Breaks byte-identical output.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, clap::Args)]
struct Pair {
    /// Source object name.
    #[arg(long = "A")]
    a: String,
    /// Target object name.
    #[arg(long = "B")]
    b: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and check any hammock-lab file.
    Validate { file: PathBuf },
    /// Nerve of a category, relative category or model structure.
    Nerve { file: PathBuf },
    /// Integer homology of a simplicial set file, or of a nerve.
    Homology { file: PathBuf },
    /// Bousfield–Kan colimit and its dual for an sset or category diagram.
    BkColim { file: PathBuf },
    /// Lax and oplax colimits of a category diagram, with Thomason evidence.
    Grothendieck { file: PathBuf },
    /// Asphericity and Quillen A evidence for a functor.
    Aspherical { file: PathBuf },
    /// Check the model category axioms.
    ModelCheck { file: PathBuf },
    /// Hammock hom-space of a relative category or model structure.
    HammockHom {
        file: PathBuf,
        #[command(flatten)]
        pair: Pair,
    },
    /// The category of special hammocks T(A, B).
    SpecialHammocks {
        file: PathBuf,
        #[command(flatten)]
        pair: Pair,
    },
    /// Cosimplicial and simplicial resolutions of an object.
    Resolve {
        file: PathBuf,
        /// Object to resolve.
        #[arg(long = "A")]
        a: String,
    },
    /// Derived hom-space from resolutions.
    DerivedHom {
        file: PathBuf,
        #[command(flatten)]
        pair: Pair,
    },
    /// Compare the four models of the derived hom-space.
    Compare {
        file: PathBuf,
        #[command(flatten)]
        pair: Pair,
        /// Truncation of the simplex categories indexing the middle colimit.
        #[arg(long, default_value_t = 1)]
        index_truncation: usize,
    },
    /// Hom-space of the simplicial localisation of the standard resolution.
    LocHom {
        file: PathBuf,
        #[command(flatten)]
        pair: Pair,
        /// Highest resolution level (the truncation of the hom-space).
        #[arg(long)]
        level: Option<usize>,
        /// Bound on generators per flattened word.
        #[arg(long)]
        word_bound: Option<usize>,
        /// Also compare with the hammock hom-space.
        #[arg(long)]
        compare: bool,
    },
    /// Finite-level local fibrancy of a simplicial presheaf.
    PresheafCheck { file: PathBuf },
    /// List, export or verify the bundled corpus.
    Corpus {
        /// Write every bundled file into this directory.
        #[arg(long)]
        export: Option<PathBuf>,
        /// Check the corpus directory against the bundled data.
        #[arg(long)]
        verify: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Nerve { .. } => "nerve",
            Command::Homology { .. } => "homology",
            Command::BkColim { .. } => "bk-colim",
            Command::Grothendieck { .. } => "grothendieck",
            Command::Aspherical { .. } => "aspherical",
            Command::ModelCheck { .. } => "model-check",
            Command::HammockHom { .. } => "hammock-hom",
            Command::SpecialHammocks { .. } => "special-hammocks",
            Command::Resolve { .. } => "resolve",
            Command::DerivedHom { .. } => "derived-hom",
            Command::Compare { .. } => "compare",
            Command::LocHom { .. } => "loc-hom",
            Command::PresheafCheck { .. } => "presheaf-check",
            Command::Corpus { .. } => "corpus",
        }
    }

    /// `(k, d)` when the user gives neither; the comparison commands build
    /// four spaces and default lower.
    fn defaults(&self) -> (usize, usize) {
        match self {
            Command::Compare { .. } | Command::SpecialHammocks { .. } => (2, 1),
            _ => (hammock_core::DEFAULT_TRUNCATION, hammock_core::DEFAULT_DEGREE),
        }
    }

    fn file(&self) -> Option<&Path> {
        match self {
            Command::Validate { file }
            | Command::Nerve { file }
            | Command::Homology { file }
            | Command::BkColim { file }
            | Command::Grothendieck { file }
            | Command::Aspherical { file }
            | Command::ModelCheck { file }
            | Command::HammockHom { file, .. }
            | Command::SpecialHammocks { file, .. }
            | Command::Resolve { file, .. }
            | Command::DerivedHom { file, .. }
            | Command::Compare { file, .. }
            | Command::LocHom { file, .. }
            | Command::PresheafCheck { file } => Some(file),
            Command::Corpus { .. } => None,
        }
    }
}

/// Failures that are not verdicts.
#[derive(Debug)]
enum Failure {
    Input(String),
    Bound(String),
    Verdict(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::BoundExhausted(_) => Failure::Bound(e.to_string()),
            Error::NoResolution(_) | Error::LimitMissing(_) | Error::Hypothesis(_) | Error::Endpoint(_) => {
                Failure::Verdict(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        match e.downcast::<Error>() {
            Ok(e) => e.into(),
            Err(e) => Failure::Input(format!("{e:#}")),
        }
    }
}

pub(crate) fn corpus_dir() -> PathBuf {
    std::env::var_os(CORPUS_ENV).map_or_else(|| PathBuf::from("corpus"), PathBuf::from)
}

/// Paths that do not exist are looked up in the corpus directory.
fn resolve_input(path: &Path) -> PathBuf {
    if path.exists() {
        return path.to_path_buf();
    }
    let fallback = corpus_dir().join(path);
    if fallback.exists() {
        fallback
    } else {
        path.to_path_buf()
    }
}

fn run(cli: Cli) -> Result<Report, Failure> {
    let (dk, dd) = cli.command.defaults();
    let k = cli.k.unwrap_or(dk);
    let max_length = cli.max_length.unwrap_or(hammock_core::DEFAULT_LENGTH_BOUND);
    if k == 0 || max_length == 0 {
        return Err(Failure::Input("--k and --max-length must be positive".into()));
    }
    let mut degree = cli.degree.unwrap_or(dd);
    let mut warnings = Vec::new();
    if degree + 1 > k {
        warnings.push(format!(
            "degree {degree} needs truncation at least {}; using degree {}",
            degree + 1,
            k - 1
        ));
        degree = k - 1;
    }
    let config = Config {
        k,
        max_length,
        degree,
        seed: cli.seed,
        strict: cli.strict,
    };
    let file = cli.command.file().map(resolve_input);
    let inputs = file.iter().map(|p| p.display().to_string()).collect();
    let mut report = Report::new(cli.command.name(), inputs, config);
    report.warnings = warnings;
    let start = Instant::now();
    commands::dispatch(&cli.command, file.as_deref(), &mut report)?;
    report.qualify_by_bounds();
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (format, strict) = (cli.format, cli.strict);
    match run(cli) {
        Ok(report) => {
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            if !report.passed() {
                ExitCode::from(1)
            } else if strict && report.bound_exhausted {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Bound(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(if strict { 3 } else { 1 })
        }
        Err(Failure::Verdict(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
