//! Command-line interface for `limag`.
//!
//! Exit codes: 0 success, 1 negative verdict (not a `B_t[l]` sequence, not a
//! packing, uncorrectable word, decoding failures in simulation), 2 usage,
//! input, overflow or internal errors.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

pub mod commands;
pub mod format;
pub mod manifest;
pub mod registry;

use manifest::RunManifest;

#[derive(Debug, Parser)]
#[command(name = "limag", version, about = "Perfect codes for asymmetric limited-magnitude errors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a perfect sequence (t = n-1) or the full-cube code (t = n).
    Construct(ConstructArgs),
    /// Check a sequence or lattice file.
    Verify(VerifyArgs),
    /// Decode one received word.
    Decode(DecodeArgs),
    /// Monte Carlo run of the channel over a finite codebook.
    Simulate(SimulateArgs),
    /// Existence table for small parameters, as CSV.
    Survey(SurveyArgs),
    /// Convert between sequence and lattice files.
    Convert(ConvertArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct ConstructArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub ell: u64,
    /// Defaults to n-1.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    /// Sequence or lattice JSON file.
    pub file: PathBuf,
    /// Override the file's t.
    #[arg(long)]
    pub t: Option<usize>,
    /// Override the file's ell.
    #[arg(long)]
    pub ell: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct DecodeArgs {
    /// Sequence or lattice JSON file.
    #[arg(long)]
    pub code: PathBuf,
    /// Alphabet size.
    #[arg(long)]
    pub sigma: u64,
    /// Coset representative, comma separated; defaults to zeros.
    #[arg(long)]
    pub offset: Option<String>,
    /// Received word, comma separated.
    pub word: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct SimulateArgs {
    #[arg(long)]
    pub code: PathBuf,
    #[arg(long)]
    pub sigma: u64,
    #[arg(long)]
    pub offset: Option<String>,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct SurveyArgs {
    #[arg(long)]
    pub max_n: usize,
    #[arg(long)]
    pub max_ell: u64,
    /// Largest group order searched.
    #[arg(long, default_value_t = 4096)]
    pub group_cap: u64,
    /// Node budget per group search.
    #[arg(long, default_value_t = 5_000_000)]
    pub max_nodes: u64,
    /// CSV destination; the manifest goes next to it as `<out>.manifest.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Lattice,
    Sequence,
}

#[derive(Debug, Args, Serialize)]
pub struct ConvertArgs {
    #[arg(long, value_enum)]
    pub to: Target,
    pub file: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    /// Malformed input, with where it went wrong.
    Input {
        location: String,
        message: String,
    },
    Io {
        path: PathBuf,
        source: io::Error,
    },
    Lib(limag::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Input { location, message } => write!(f, "malformed input at {location}: {message}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<limag::Error> for CliError {
    fn from(e: limag::Error) -> Self {
        CliError::Lib(e)
    }
}

pub enum Payload {
    Json(Value),
    Csv(String),
}

pub struct Output {
    pub payload: Payload,
    pub negative: bool,
}

impl Output {
    pub fn json<T: Serialize>(value: &T, negative: bool) -> Result<Self, CliError> {
        let v = serde_json::to_value(value).map_err(|e| limag::Error::Inconsistency(e.to_string()))?;
        Ok(Output { payload: Payload::Json(v), negative })
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write_file(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    std::fs::write(path, bytes).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn parameters<T: Serialize>(args: &T) -> BTreeMap<String, Value> {
    match serde_json::to_value(args) {
        Ok(Value::Object(m)) => m.into_iter().filter(|(k, v)| k != "out" && !v.is_null()).collect(),
        _ => BTreeMap::new(),
    }
}

/// Writes the artifact and its manifest. JSON artifacts embed the manifest
/// under `"manifest"`; a CSV artifact gets a sidecar file, or stderr when
/// written to stdout.
fn emit(
    name: &str,
    params: BTreeMap<String, Value>,
    seed: Option<u64>,
    out: Option<&Path>,
    payload: Payload,
) -> Result<(), CliError> {
    match payload {
        Payload::Json(mut v) => {
            let bytes = serde_json::to_vec(&v).expect("JSON values serialize");
            let m = RunManifest::new(name, params, seed, &bytes);
            v["manifest"] = serde_json::to_value(&m).expect("manifest serializes");
            let mut text = serde_json::to_string_pretty(&v).expect("JSON values serialize");
            text.push('\n');
            match out {
                Some(p) => write_file(p, text.as_bytes()),
                None => io::stdout()
                    .write_all(text.as_bytes())
                    .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
            }
        }
        Payload::Csv(text) => {
            let m = RunManifest::new(name, params, seed, text.as_bytes());
            let mut mtext = serde_json::to_string_pretty(&m).expect("manifest serializes");
            mtext.push('\n');
            match out {
                Some(p) => {
                    write_file(p, text.as_bytes())?;
                    let mut side = p.as_os_str().to_owned();
                    side.push(".manifest.json");
                    write_file(Path::new(&side), mtext.as_bytes())
                }
                None => {
                    io::stdout()
                        .write_all(text.as_bytes())
                        .map_err(|source| CliError::Io { path: "<stdout>".into(), source })?;
                    eprint!("{mtext}");
                    Ok(())
                }
            }
        }
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run(cli: Cli) -> u8 {
    let (name, params, seed, out, result) = match &cli.command {
        Command::Construct(a) => ("construct", parameters(a), None, a.out.as_deref(), commands::construct::run(a)),
        Command::Verify(a) => ("verify", parameters(a), None, a.out.as_deref(), commands::verify::run(a)),
        Command::Decode(a) => ("decode", parameters(a), None, a.out.as_deref(), commands::decode::run(a)),
        Command::Simulate(a) => ("simulate", parameters(a), Some(a.seed), a.out.as_deref(), commands::simulate::run(a)),
        Command::Survey(a) => ("survey", parameters(a), None, a.out.as_deref(), commands::survey::run(a)),
        Command::Convert(a) => ("convert", parameters(a), None, a.out.as_deref(), commands::convert::run(a)),
    };
    let outcome = result.and_then(|o| emit(name, params, seed, out, o.payload).map(|()| o.negative));
    match outcome {
        Ok(false) => 0,
        Ok(true) => 1,
        Err(e) => {
            eprintln!("limag {name}: {e}");
            2
        }
    }
}
