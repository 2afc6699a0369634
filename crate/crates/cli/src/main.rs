//! `taut`: batch front end for the taut-core calculators.
//!
//! Exit codes: 0 success, 1 internal failure (including cache parse
//! errors and failed self-checks), 2 malformed input or unstable `(g, n)`,
//! 3 unsupported mathematical domain.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use taut_core::cache::{self, CacheEntries};
use taut_core::hurwitz::{character_entries, preload_characters};
use taut_core::intersection;
use taut_core::Error;

#[derive(Parser)]
#[command(
    name = "taut",
    version,
    about = "Exact calculators for tautological classes, Hurwitz numbers and boundary strata"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Intersection-number and character cache, one `key<TAB>num/den` per line.
    #[arg(long, global = true, env = "TAUT_CACHE")]
    cache_path: Option<PathBuf>,

    /// Worker threads for enumerations that split across independent items.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
pub enum Command {
    /// Enumerate boundary strata of M̄_{g,n}.
    Strata(StrataArgs),
    /// ∫ ψ_1^{a_1} ⋯ ψ_n^{a_n} over M̄_{g,n}.
    Psi(IntegralArgs),
    /// ∫ ψ_1^{a_1} ⋯ ψ_n^{a_n} λ_g over M̄_{g,n}.
    LambdaG(IntegralArgs),
    /// Single or double Hurwitz numbers.
    Hurwitz(HurwitzArgs),
    /// Compare the ELSV evaluation with every applicable Hurwitz method.
    ElsvCheck(ElsvCheckArgs),
    /// Strata carrying codimension-i tautological classes.
    Support(SupportArgs),
    /// Strata whose vertex data satisfy the band inequalities at dimension j.
    Band(DimArgs),
    /// Zero-dimensional strata of M̄_{g,n} or of a partial compactification.
    Socle(SocleArgs),
    /// Generators of the dimension-j tautological group, j <= 6.
    Lowdim(DimArgs),
    /// Upper bound on the dimension of complete subvarieties.
    Diaz(DiazArgs),
}

#[derive(Args)]
pub struct StrataArgs {
    #[arg(long)]
    pub genus: u32,
    #[arg(long)]
    pub markings: usize,
    #[arg(long)]
    pub max_codim: Option<u32>,
    /// Relabel every stratum by a random vertex permutation drawn from this
    /// seed and check that its canonical key is unchanged.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args)]
pub struct IntegralArgs {
    #[arg(long)]
    pub genus: u32,
    /// Exponents a_1,...,a_n in marking order.
    #[arg(long, value_parser = parse_partition, allow_hyphen_values = true)]
    pub partition: Parts,
    /// Optional check on the number of exponents.
    #[arg(long)]
    pub markings: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Bruteforce,
    Character,
    Cutjoin,
    Elsv,
    All,
}

#[derive(Args)]
pub struct HurwitzArgs {
    /// Arithmetic genus of the source; negative values are allowed for
    /// disconnected counts.
    #[arg(long, allow_hyphen_values = true)]
    pub genus: i64,
    #[arg(long, value_parser = parse_partition)]
    pub partition: Parts,
    /// Ramification over 0 for double Hurwitz numbers.
    #[arg(long, value_parser = parse_partition)]
    pub partition2: Option<Parts>,
    #[arg(long, value_enum, default_value_t = Method::All)]
    pub method: Method,
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    pub connected: bool,
}

#[derive(Args)]
pub struct ElsvCheckArgs {
    #[arg(long)]
    pub genus: u32,
    #[arg(long, value_parser = parse_partition)]
    pub partition: Parts,
}

#[derive(Args)]
pub struct SupportArgs {
    #[arg(long)]
    pub genus: u32,
    #[arg(long)]
    pub markings: usize,
    #[arg(long)]
    pub codim: u32,
}

#[derive(Args)]
pub struct DimArgs {
    #[arg(long)]
    pub genus: u32,
    #[arg(long)]
    pub markings: usize,
    #[arg(long)]
    pub dim: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum SocleKind {
    Full,
    CompactType,
    RationalTails,
}

#[derive(Args)]
pub struct SocleArgs {
    #[arg(long, value_enum)]
    pub variant: SocleKind,
    #[arg(long)]
    pub genus: u32,
    #[arg(long)]
    pub markings: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum DiazKind {
    #[value(name = "s_leq_s", alias = "S_leq_s")]
    SLeqS,
    RationalTails,
    CompactType,
}

#[derive(Args)]
pub struct DiazArgs {
    #[arg(long, value_enum)]
    pub variant: DiazKind,
    #[arg(long)]
    pub genus: u32,
    #[arg(long)]
    pub markings: usize,
    /// Bound on the number of rational components (s_leq_s only).
    #[arg(long)]
    pub s: Option<u32>,
}

/// Parts in typed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parts(pub Vec<u32>);

/// Comma-separated parts; the empty string is the empty partition.
fn parse_partition(s: &str) -> Result<Parts, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Parts(Vec::new()));
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad part {p:?}: {e}"))
        })
        .collect::<Result<_, _>>()
        .map(Parts)
}

/// Why a command stopped, carrying its exit code.
#[derive(Debug)]
pub enum Failure {
    Internal(String),
    Input(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Internal(_) => 1,
            Failure::Input(_) => 2,
            Failure::Domain(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Internal(m) | Failure::Input(m) | Failure::Domain(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_unsupported_domain() {
            return Failure::Domain(e.to_string());
        }
        match e {
            Error::CacheParse { .. }
            | Error::Io(_)
            | Error::SingularSystem { .. }
            | Error::InconsistentSystem(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("taut: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

struct Output {
    text: String,
    code: u8,
}

fn run(cli: Cli) -> Result<Output, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.max(1))
        .build_global()
        .map_err(|e| Failure::Internal(e.to_string()))?;

    let loaded = match &cli.cache_path {
        Some(path) => {
            let entries = cache::load(path).map_err(|e| match e {
                Error::CacheParse { .. } => Failure::Internal(format!("{}: {e}", path.display())),
                other => Failure::from(other),
            })?;
            let pairs = || entries.iter().map(|(k, v)| (k.as_str(), v));
            intersection::global().preload(pairs());
            preload_characters(pairs());
            Some(entries)
        }
        None => None,
    };

    let (name, report) = commands::dispatch(&cli.command)?;

    if let (Some(path), Some(mut entries)) = (&cli.cache_path, loaded) {
        merge(&mut entries, intersection::global().entries());
        merge(&mut entries, character_entries());
        cache::store(path, &entries)?;
    }

    let text = match cli.format {
        Format::Json => report::render_json(name, &report),
        Format::Csv => report::render_csv(&report).map_err(Failure::Internal)?,
        Format::Text => report::render_text(name, &report),
    };
    let code = if report.inconsistent { 1 } else { 0 };
    Ok(Output { text, code })
}

fn merge(into: &mut CacheEntries, entries: Vec<(String, taut_core::Rational)>) {
    for (k, v) in entries {
        into.entry(k).or_insert(v);
    }
}
