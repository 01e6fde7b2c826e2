use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::model::{CompressionModel, FluxModel, InitialProfile, ProblemSpec, TimeFunction};
use crate::mr::MrConfig;
use crate::scheme::SchemeConfig;
use crate::{Error, Result};

/// Named parameter presets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    IdealBatch,
    FlocculatedBatch,
    Continuous,
    /// Ideal-batch defaults, meant to be overridden field by field.
    Custom,
}

impl Scenario {
    pub const ALL: [Scenario; 4] = [
        Scenario::IdealBatch,
        Scenario::FlocculatedBatch,
        Scenario::Continuous,
        Scenario::Custom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::IdealBatch => "ideal-batch",
            Scenario::FlocculatedBatch => "flocculated-batch",
            Scenario::Continuous => "continuous",
            Scenario::Custom => "custom",
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scenario::ALL
            .into_iter()
            .find(|sc| sc.name() == s)
            .ok_or_else(|| {
                Error::invalid(
                    "scenario",
                    format!("unknown scenario `{s}` (expected ideal-batch, flocculated-batch, continuous or custom)"),
                )
            })
    }
}

/// Fully resolved run configuration.
///
/// `q` and `psi` are `[t, value]` breakpoints of piecewise-constant
/// functions; a non-empty `psi` selects the continuous (feed) boundary at
/// the top. The values of `height`, `u0`, `q` and `psi` in the presets are
/// provisional choices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub scenario: Scenario,
    pub out: PathBuf,
    pub height: f64,
    pub u0: f64,
    pub t_end: f64,
    pub snapshots: Vec<f64>,
    pub n0: usize,
    pub levels: usize,
    pub order: usize,
    pub epsilon: f64,
    pub theta: f64,
    pub cfl: f64,
    pub v_inf: f64,
    pub exponent_c: f64,
    pub u_max: f64,
    pub compression: bool,
    pub sigma0: f64,
    pub u_c: f64,
    pub exponent_k: f64,
    pub delta_rho_g: f64,
    pub q: Vec<[f64; 2]>,
    pub psi: Vec<[f64; 2]>,
}

/// Same fields, all optional: what a config file may contain.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub scenario: Option<Scenario>,
    pub out: Option<PathBuf>,
    pub height: Option<f64>,
    pub u0: Option<f64>,
    pub t_end: Option<f64>,
    pub snapshots: Option<Vec<f64>>,
    pub n0: Option<usize>,
    pub levels: Option<usize>,
    pub order: Option<usize>,
    pub epsilon: Option<f64>,
    pub theta: Option<f64>,
    pub cfl: Option<f64>,
    pub v_inf: Option<f64>,
    pub exponent_c: Option<f64>,
    pub u_max: Option<f64>,
    pub compression: Option<bool>,
    pub sigma0: Option<f64>,
    pub u_c: Option<f64>,
    pub exponent_k: Option<f64>,
    pub delta_rho_g: Option<f64>,
    pub q: Option<Vec<[f64; 2]>>,
    pub psi: Option<Vec<[f64; 2]>>,
}

macro_rules! overlay {
    ($cfg:expr, $file:expr, $($field:ident),*) => {
        $(if let Some(v) = $file.$field { $cfg.$field = v; })*
    };
}

impl ConfigFile {
    /// Parse TOML text; syntax and type errors carry a line number.
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse {
            line: e.span().map_or(1, |s| {
                text[..s.start.min(text.len())].matches('\n').count() + 1
            }),
            message: e.message().to_string(),
        })
    }

    /// Preset of the file's scenario (or `fallback`), overlaid with the
    /// file's values. Not yet validated.
    pub fn resolve(self, fallback: Scenario) -> RunConfig {
        let mut cfg = RunConfig::preset(self.scenario.unwrap_or(fallback));
        overlay!(
            cfg,
            self,
            out,
            height,
            u0,
            t_end,
            snapshots,
            n0,
            levels,
            order,
            epsilon,
            theta,
            cfl,
            v_inf,
            exponent_c,
            u_max,
            compression,
            sigma0,
            u_c,
            exponent_k,
            delta_rho_g,
            q,
            psi
        );
        cfg
    }
}

impl RunConfig {
    pub fn preset(scenario: Scenario) -> Self {
        let flux = FluxModel::default();
        let comp = CompressionModel::default();
        let ideal = RunConfig {
            scenario,
            out: PathBuf::from("out"),
            height: 1.0,
            u0: 0.08,
            t_end: 3600.0,
            snapshots: vec![60.0, 300.0, 1800.0, 3600.0],
            n0: 256,
            levels: 5,
            order: 3,
            epsilon: 1e-4,
            theta: 1.0,
            cfl: 0.5,
            v_inf: flux.v_inf,
            exponent_c: flux.exponent_c,
            u_max: flux.u_max,
            compression: false,
            sigma0: comp.sigma0,
            u_c: comp.u_c,
            exponent_k: comp.exponent_k,
            delta_rho_g: comp.delta_rho_g,
            q: Vec::new(),
            psi: Vec::new(),
        };
        match scenario {
            Scenario::IdealBatch | Scenario::Custom => ideal,
            Scenario::FlocculatedBatch => RunConfig {
                t_end: 14400.0,
                snapshots: vec![60.0, 1800.0, 3600.0, 7200.0, 14400.0],
                n0: 128,
                epsilon: 1e-3,
                compression: true,
                ..ideal
            },
            Scenario::Continuous => RunConfig {
                t_end: 7200.0,
                snapshots: vec![600.0, 1800.0, 3600.0, 7200.0],
                n0: 512,
                epsilon: 5e-4,
                compression: true,
                q: vec![[0.0, -1.0e-5], [3600.0, -2.0e-5]],
                psi: vec![[0.0, -1.5e-6], [3600.0, -3.0e-6]],
                ..ideal
            },
        }
    }

    /// Range and consistency checks; errors name the offending field.
    pub fn validate(&self) -> Result<()> {
        let positive = |field: &str, v: f64| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(Error::invalid(
                    field,
                    format!("must be positive and finite, got {v}"),
                ))
            }
        };
        positive("height", self.height)?;
        positive("v_inf", self.v_inf)?;
        positive("exponent_c", self.exponent_c)?;
        positive("u_max", self.u_max)?;
        if !(self.t_end >= 0.0 && self.t_end.is_finite()) {
            return Err(Error::invalid("t_end", "must be non-negative and finite"));
        }
        if !(0.0..=self.u_max).contains(&self.u0) {
            return Err(Error::invalid(
                "u0",
                format!("must lie in [0, {}]", self.u_max),
            ));
        }
        if self.levels == 0 || self.levels >= usize::BITS as usize {
            return Err(Error::invalid("levels", "must be at least 1"));
        }
        if self.n0 == 0 || self.n0 % (1usize << self.levels) != 0 {
            return Err(Error::invalid(
                "n0",
                format!(
                    "{} is not divisible by 2^{} = {}",
                    self.n0,
                    self.levels,
                    1usize << self.levels
                ),
            ));
        }
        if self.order % 2 == 0 {
            return Err(Error::invalid("order", "interpolation degree must be odd"));
        }
        if self.n0 >> self.levels < self.order + 1 {
            return Err(Error::invalid(
                "levels",
                format!(
                    "coarsest grid has {} intervals; degree {} needs {}",
                    self.n0 >> self.levels,
                    self.order,
                    self.order + 1
                ),
            ));
        }
        if !(0.0..=2.0).contains(&self.theta) {
            return Err(Error::invalid("theta", "must lie in [0, 2]"));
        }
        if !(self.cfl > 0.0 && self.cfl <= 1.0) {
            return Err(Error::invalid("cfl", "must lie in (0, 1]"));
        }
        if !(self.epsilon >= 0.0) {
            return Err(Error::invalid("epsilon", "must be non-negative"));
        }
        if let Some(t) = self
            .snapshots
            .iter()
            .find(|t| !(0.0..=self.t_end).contains(*t))
        {
            return Err(Error::invalid(
                "snapshots",
                format!("time {t} outside [0, {}]", self.t_end),
            ));
        }
        if self.compression {
            positive("sigma0", self.sigma0)?;
            positive("exponent_k", self.exponent_k)?;
            positive("delta_rho_g", self.delta_rho_g)?;
            if !(self.u_c > 0.0 && self.u_c < self.u_max) {
                return Err(Error::invalid(
                    "u_c",
                    format!("must lie in (0, {})", self.u_max),
                ));
            }
        }
        for (field, points) in [("q", &self.q), ("psi", &self.psi)] {
            if points.iter().flatten().any(|v| !v.is_finite()) {
                return Err(Error::invalid(field, "values must be finite"));
            }
        }
        self.problem().validate()
    }

    pub fn mr_config(&self) -> MrConfig {
        MrConfig {
            levels: self.levels,
            order: self.order,
            epsilon: self.epsilon,
        }
    }

    pub fn problem(&self) -> ProblemSpec {
        let flux = FluxModel::new(self.v_inf, self.exponent_c, self.u_max);
        let compression = self.compression.then_some(CompressionModel {
            sigma0: self.sigma0,
            u_c: self.u_c,
            exponent_k: self.exponent_k,
            delta_rho_g: self.delta_rho_g,
        });
        let spec = ProblemSpec::sedimentation(
            self.height,
            self.t_end,
            flux,
            compression,
            InitialProfile::Constant(self.u0),
        );
        let q = time_function(&self.q);
        if self.psi.is_empty() {
            ProblemSpec {
                bulk_velocity: q,
                ..spec
            }
        } else {
            spec.continuous(q, time_function(&self.psi))
        }
    }

    pub fn scheme_config(&self, problem: &ProblemSpec) -> Result<SchemeConfig> {
        SchemeConfig::new(self.theta, self.cfl, self.n0, problem)
    }

    /// The configuration in the input format, so it can be fed back in.
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config values are plain TOML")
    }
}

fn time_function(points: &[[f64; 2]]) -> TimeFunction {
    match points {
        [] => TimeFunction::Constant(0.0),
        [[_, v]] => TimeFunction::Constant(*v),
        _ => TimeFunction::Piecewise(points.iter().map(|p| (p[0], p[1])).collect()),
    }
}

/// Read, resolve and validate a config file. `scenario` overrides the
/// file's own `scenario` key.
pub fn load_config(path: &Path, scenario: Option<Scenario>) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path)?;
    let mut file = ConfigFile::parse(&text)?;
    if scenario.is_some() {
        file.scenario = scenario;
    }
    let cfg = file.resolve(Scenario::IdealBatch);
    cfg.validate()?;
    Ok(cfg)
}

/// Comma-separated snapshot times, e.g. `60,300,1800`.
pub fn parse_snapshot_list(text: &str) -> Result<Vec<f64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| {
            let item = item.trim();
            match item.parse::<f64>() {
                Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
                Ok(t) => Err(Error::invalid(
                    "snapshots",
                    format!("time {t} must be finite and non-negative"),
                )),
                Err(_) => Err(Error::invalid(
                    "snapshots",
                    format!("`{item}` is not a number"),
                )),
            }
        })
        .collect()
}
