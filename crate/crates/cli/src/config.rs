use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Flags shared by every verb.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// A triple such as `e,23,e`, or `all`.
    #[arg(long)]
    pub triple: Option<String>,
    /// Largest digit or expansion index considered.
    #[arg(long)]
    pub kmax: Option<u64>,
    /// Number of steps, samples or points.
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Grid margin from the triangle boundary.
    #[arg(long)]
    pub margin: Option<f64>,
    /// Pass threshold of the command.
    #[arg(long)]
    pub tol: Option<f64>,
    /// JSON file with defaults for any of these flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

/// Contents of a `--config` file. Every field is optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    triple: Option<String>,
    kmax: Option<u64>,
    n_steps: Option<u64>,
    seed: Option<u64>,
    margin: Option<f64>,
    tolerances: Option<BTreeMap<String, f64>>,
    output_path: Option<PathBuf>,
    format: Option<Format>,
}

/// Settings after applying flags over the config file over the defaults.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: &'static str,
    pub triple: Option<String>,
    pub kmax: Option<u64>,
    pub n_steps: Option<u64>,
    pub seed: u64,
    pub margin: Option<f64>,
    pub tolerances: BTreeMap<String, f64>,
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn resolve(command: &'static str, args: &CommonArgs) -> Result<Self> {
        let file = match &args.config {
            Some(path) => read_config(path)?,
            None => FileConfig::default(),
        };
        let mut tolerances = file.tolerances.unwrap_or_default();
        if let Some(t) = args.tol {
            tolerances.insert(command.to_string(), t);
        }
        for (name, v) in &tolerances {
            if !(*v > 0.0) {
                bail!("tolerance {name} must be positive, got {v}");
            }
        }
        let n_steps = args.n.or(file.n_steps);
        if n_steps == Some(0) {
            bail!("--n must be at least 1");
        }
        Ok(RunConfig {
            command,
            triple: args.triple.clone().or(file.triple),
            kmax: args.kmax.or(file.kmax),
            n_steps,
            seed: args.seed.or(file.seed).unwrap_or(0),
            margin: args.margin.or(file.margin),
            tolerances,
            output_path: args.out.clone().or(file.output_path),
            format: args.format.or(file.format).unwrap_or(Format::Csv),
        })
    }

    /// The command's own tolerance, or `default`.
    pub fn tol(&self, default: f64) -> f64 {
        self.tolerance(self.command, default)
    }

    pub fn tolerance(&self, name: &str, default: f64) -> f64 {
        self.tolerances.get(name).copied().unwrap_or(default)
    }
}

fn read_config(path: &Path) -> Result<FileConfig> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}
