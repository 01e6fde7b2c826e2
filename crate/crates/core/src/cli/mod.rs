//! Command-line front end: presets, TOML configuration and CSV output.

mod config;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::Parser;

pub use config::{load_config, parse_snapshot_list, ConfigFile, RunConfig, Scenario};

use crate::driver::{run_comparison, Comparison};
use crate::mr::format_mask_dump;
use crate::{Error, Result};

pub const MANIFEST: &str = "manifest.toml";
pub const METRICS: &str = "metrics.csv";
pub const TIMING: &str = "timing.csv";

#[derive(Debug, Parser)]
#[command(
    name = "sedmr",
    version,
    about = "Multiresolution sedimentation-consolidation solver"
)]
pub struct Args {
    /// TOML configuration file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// ideal-batch, flocculated-batch, continuous or custom.
    #[arg(long)]
    pub scenario: Option<String>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Base threshold ε.
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Number of coarsenings L.
    #[arg(long)]
    pub levels: Option<usize>,
    /// Finest interval count N0.
    #[arg(long)]
    pub n0: Option<usize>,
    /// Limiter parameter in [0, 2].
    #[arg(long)]
    pub theta: Option<f64>,
    /// Courant number in (0, 1].
    #[arg(long)]
    pub cfl: Option<f64>,
    /// Final time in seconds.
    #[arg(long = "t-end")]
    pub t_end: Option<f64>,
    /// Comma-separated snapshot times in seconds.
    #[arg(long)]
    pub snapshots: Option<String>,
}

impl Args {
    /// Preset, then config file, then flags.
    pub fn resolve(&self) -> Result<RunConfig> {
        let scenario = self
            .scenario
            .as_deref()
            .map(str::parse::<Scenario>)
            .transpose()?;
        let mut file = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path).map_err(|e| {
                    Error::invalid("config", format!("cannot read {}: {e}", path.display()))
                })?;
                ConfigFile::parse(&text)?
            }
            None => ConfigFile::default(),
        };
        if scenario.is_some() {
            file.scenario = scenario;
        }
        let mut cfg = file.resolve(Scenario::IdealBatch);
        if let Some(v) = &self.out {
            cfg.out = v.clone();
        }
        if let Some(v) = self.epsilon {
            cfg.epsilon = v;
        }
        if let Some(v) = self.levels {
            cfg.levels = v;
        }
        if let Some(v) = self.n0 {
            cfg.n0 = v;
        }
        if let Some(v) = self.theta {
            cfg.theta = v;
        }
        if let Some(v) = self.cfl {
            cfg.cfl = v;
        }
        if let Some(v) = self.t_end {
            cfg.t_end = v;
        }
        if let Some(v) = &self.snapshots {
            cfg.snapshots = parse_snapshot_list(v)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Reference and multiresolution runs for a validated config.
pub fn run(cfg: &RunConfig) -> Result<Comparison> {
    let problem = cfg.problem();
    let scheme = cfg.scheme_config(&problem)?;
    run_comparison(&problem, &scheme, &cfg.mr_config(), &cfg.snapshots)
}

/// File-name form of a snapshot time: `300` or `0.5`.
pub fn time_label(t: f64) -> String {
    format!("{t}")
}

/// Write profiles, mask dumps, metrics, timings and the manifest into
/// `outdir`. Everything except the timing file is deterministic.
pub fn write_outputs(cfg: &RunConfig, result: &Comparison, outdir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(outdir)?;
    let mut written = Vec::new();
    let mut put = |name: String, body: String| -> Result<()> {
        let path = outdir.join(name);
        fs::write(&path, body)?;
        written.push(path);
        Ok(())
    };

    let hierarchy = &result.mr.hierarchy;
    for (state, mask) in result.mr.run.snapshots.iter().zip(&result.mr.masks) {
        let label = time_label(state.t);
        put(
            format!("profile_t{label}.csv"),
            profile_csv(&state.values, state.dx),
        )?;
        put(
            format!("mask_t{label}.csv"),
            format_mask_dump(&mask.transform, &mask.retained, hierarchy),
        )?;
    }
    for state in &result.reference.snapshots {
        put(
            format!("reference_t{}.csv", time_label(state.t)),
            profile_csv(&state.values, state.dx),
        )?;
    }

    let mut metrics = String::from("t,V,mu,e1,einf,mass\n");
    for m in &result.metrics.snapshots {
        let _ = writeln!(
            metrics,
            "{},{},{},{:e},{:e},{}",
            m.t, m.v, m.mu, m.e1, m.einf, m.mass
        );
    }
    put(METRICS.to_string(), metrics)?;

    if !result.metrics.snapshots.is_empty() {
        let mut timing = String::from("t,reference_seconds,mr_seconds,mu_wall\n");
        for (i, m) in result.metrics.snapshots.iter().enumerate() {
            let wall = m.mu_wall.map_or_else(String::new, |w| w.to_string());
            let _ = writeln!(
                timing,
                "{},{},{},{}",
                m.t, result.reference.seconds[i], result.mr.run.seconds[i], wall
            );
        }
        put(TIMING.to_string(), timing)?;
    }

    put(MANIFEST.to_string(), cfg.to_toml())?;
    Ok(written)
}

fn profile_csv(values: &[f64], dx: f64) -> String {
    let mut out = String::with_capacity(24 * (values.len() + 1));
    out.push_str("x,u\n");
    for (j, u) in values.iter().enumerate() {
        let _ = writeln!(out, "{},{:e}", j as f64 * dx, u);
    }
    out
}

/// Full command-line run. Returns the process exit code: 0 on success,
/// 1 for invalid arguments or configuration, 2 for runtime failures.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
        }
    };
    let cfg = match args.resolve() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return if e.is_validation() { 1 } else { 2 };
        }
    };
    let result = match run(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return if e.is_validation() { 1 } else { 2 };
        }
    };
    if let Err(e) = write_outputs(&cfg, &result, &cfg.out) {
        eprintln!("error: writing {}: {e}", cfg.out.display());
        return 2;
    }
    println!(
        "{:>8} {:>8} {:>8} {:>11} {:>11}",
        "t", "V", "mu", "e1", "einf"
    );
    for m in &result.metrics.snapshots {
        println!(
            "{:>8} {:>8.4} {:>8.4} {:>11.3e} {:>11.3e}",
            m.t, m.v, m.mu, m.e1, m.einf
        );
    }
    0
}
