//! Job configuration: a JSON file, shorthand flags, or both. Flags override
//! the file field by field.
#![allow(non_snake_case)]

use std::fs;
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crosssec_core::geometry::DEFAULT_ARC_RESOLUTION;
use crosssec_core::{DesignSpec, FabricationParams, RootFindConfig};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Inverse,
    Forward,
    Shape,
    Sweep,
    Oracle,
    Compare,
    Force,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Inverse => "inverse",
            Mode::Forward => "forward",
            Mode::Shape => "shape",
            Mode::Sweep => "sweep",
            Mode::Oracle => "oracle",
            Mode::Compare => "compare",
            Mode::Force => "force",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecInput {
    pub H_c_mm: Option<f64>,
    pub H_s_mm: Option<f64>,
    pub w_mm: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FabInput {
    pub S_c_mm: Option<f64>,
    pub S_s_mm: Option<f64>,
    pub L_mm: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepInput {
    pub perimeter_mm: Option<f64>,
    #[serde(default)]
    pub S_c_mm: Vec<f64>,
    #[serde(default)]
    pub L_mm: Vec<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleInput {
    pub S_c_mm: Option<f64>,
    pub L_mm: Option<f64>,
    pub grid_points: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompareInput {
    pub outline: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ForceInput {
    pub pressure_kPa: Option<f64>,
    /// When absent the area comes from the model given by `spec` or
    /// `fabrication`.
    pub area_mm2: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverInput {
    pub bracket_tol: Option<f64>,
    pub max_iter: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputInput {
    /// Result document; stdout when absent.
    pub json: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    /// Sweep table; stdout when absent.
    pub csv: Option<PathBuf>,
    /// Model outline as `x_mm,y_mm` rows.
    pub outline: Option<PathBuf>,
}

/// The on-disk configuration. Every payload is optional here; [`JobConfig::resolve`]
/// checks that the ones present match the mode.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub mode: Option<Mode>,
    pub spec: Option<SpecInput>,
    pub fabrication: Option<FabInput>,
    pub sweep: Option<SweepInput>,
    pub oracle: Option<OracleInput>,
    pub compare: Option<CompareInput>,
    pub force: Option<ForceInput>,
    #[serde(default)]
    pub solver: SolverInput,
    pub arc_resolution_mm: Option<f64>,
    #[serde(default)]
    pub output: OutputInput,
}

/// What the model for `compare` and `force` is built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelSource {
    Spec(DesignSpec),
    Fabrication(FabricationParams),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Inverse(DesignSpec),
    Forward(FabricationParams),
    Shape(DesignSpec),
    Sweep { perimeter: f64, s_c: Vec<f64>, l: Vec<f64> },
    Oracle { s_c: f64, l: f64, grid_points: usize },
    Compare { outline: PathBuf, model: ModelSource },
    Force { pressure_kpa: f64, area: Option<f64>, model: Option<ModelSource> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Job {
    pub mode: Mode,
    pub payload: Payload,
    pub solver: RootFindConfig,
    pub arc_resolution: f64,
    pub output: OutputInput,
}

fn need(v: Option<f64>, key: &str) -> Result<f64, CliError> {
    v.ok_or_else(|| CliError::input(format!("missing {key}")))
}

fn finite(v: f64, key: &str) -> Result<f64, CliError> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::input(format!("{key} must be finite")))
    }
}

impl SpecInput {
    fn resolve(&self) -> Result<DesignSpec, CliError> {
        Ok(DesignSpec::new(
            finite(need(self.H_c_mm, "spec.H_c_mm")?, "spec.H_c_mm")?,
            finite(need(self.H_s_mm, "spec.H_s_mm")?, "spec.H_s_mm")?,
            finite(need(self.w_mm, "spec.w_mm")?, "spec.w_mm")?,
        ))
    }
}

impl FabInput {
    fn resolve(&self) -> Result<FabricationParams, CliError> {
        Ok(FabricationParams::new(
            finite(need(self.S_c_mm, "fabrication.S_c_mm")?, "fabrication.S_c_mm")?,
            finite(need(self.S_s_mm, "fabrication.S_s_mm")?, "fabrication.S_s_mm")?,
            finite(need(self.L_mm, "fabrication.L_mm")?, "fabrication.L_mm")?,
        ))
    }
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::input(format!("invalid config: {e}")))
    }

    /// Reads a config file. Relative paths inside it are taken relative to
    /// the file's directory.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let mut cfg = Self::from_json(&text)?;
        if let Some(dir) = path.parent() {
            cfg.rebase(dir);
        }
        Ok(cfg)
    }

    fn rebase(&mut self, dir: &Path) {
        let fix = |p: &mut Option<PathBuf>| {
            if let Some(p) = p.as_mut() {
                if p.is_relative() {
                    *p = dir.join(&*p);
                }
            }
        };
        if let Some(c) = self.compare.as_mut() {
            fix(&mut c.outline);
        }
        fix(&mut self.output.json);
        fix(&mut self.output.svg);
        fix(&mut self.output.csv);
        fix(&mut self.output.outline);
    }

    fn model_source(&self) -> Result<Option<ModelSource>, CliError> {
        match (&self.spec, &self.fabrication) {
            (Some(_), Some(_)) => Err(CliError::input("give either spec or fabrication, not both")),
            (Some(s), None) => Ok(Some(ModelSource::Spec(s.resolve()?))),
            (None, Some(f)) => Ok(Some(ModelSource::Fabrication(f.resolve()?))),
            (None, None) => Ok(None),
        }
    }

    /// Validates the configuration for `mode`: required payloads present,
    /// payloads of other modes absent, tolerances positive.
    pub fn resolve(&self, mode: Mode) -> Result<Job, CliError> {
        if let Some(m) = self.mode {
            if m != mode {
                return Err(CliError::input(format!(
                    "config is for mode {} but {} was requested",
                    m.name(),
                    mode.name()
                )));
            }
        }
        let allowed: &[&str] = match mode {
            Mode::Inverse | Mode::Shape => &["spec"],
            Mode::Forward => &["fabrication"],
            Mode::Sweep => &["sweep"],
            Mode::Oracle => &["oracle"],
            Mode::Compare => &["compare", "spec", "fabrication"],
            Mode::Force => &["force", "spec", "fabrication"],
        };
        let present = [
            ("spec", self.spec.is_some()),
            ("fabrication", self.fabrication.is_some()),
            ("sweep", self.sweep.is_some()),
            ("oracle", self.oracle.is_some()),
            ("compare", self.compare.is_some()),
            ("force", self.force.is_some()),
        ];
        for (key, is_present) in present {
            if is_present && !allowed.contains(&key) {
                return Err(CliError::input(format!("payload {key} does not belong to mode {}", mode.name())));
            }
        }
        let missing = |key: &str| CliError::input(format!("mode {} requires a {key} payload", mode.name()));

        let payload = match mode {
            Mode::Inverse => Payload::Inverse(self.spec.as_ref().ok_or_else(|| missing("spec"))?.resolve()?),
            Mode::Shape => Payload::Shape(self.spec.as_ref().ok_or_else(|| missing("spec"))?.resolve()?),
            Mode::Forward => {
                Payload::Forward(self.fabrication.as_ref().ok_or_else(|| missing("fabrication"))?.resolve()?)
            }
            Mode::Sweep => {
                let s = self.sweep.as_ref().ok_or_else(|| missing("sweep"))?;
                let perimeter = finite(need(s.perimeter_mm, "sweep.perimeter_mm")?, "sweep.perimeter_mm")?;
                if s.S_c_mm.is_empty() || s.L_mm.is_empty() {
                    return Err(CliError::input("sweep ranges S_c_mm and L_mm must be non-empty"));
                }
                for &v in s.S_c_mm.iter().chain(&s.L_mm) {
                    finite(v, "sweep range value")?;
                }
                Payload::Sweep { perimeter, s_c: s.S_c_mm.clone(), l: s.L_mm.clone() }
            }
            Mode::Oracle => {
                let o = self.oracle.as_ref().ok_or_else(|| missing("oracle"))?;
                Payload::Oracle {
                    s_c: finite(need(o.S_c_mm, "oracle.S_c_mm")?, "oracle.S_c_mm")?,
                    l: finite(need(o.L_mm, "oracle.L_mm")?, "oracle.L_mm")?,
                    grid_points: o.grid_points.ok_or_else(|| CliError::input("missing oracle.grid_points"))?,
                }
            }
            Mode::Compare => {
                let c = self.compare.as_ref().ok_or_else(|| missing("compare"))?;
                Payload::Compare {
                    outline: c.outline.clone().ok_or_else(|| CliError::input("missing compare.outline"))?,
                    model: self.model_source()?.ok_or_else(|| missing("spec or fabrication"))?,
                }
            }
            Mode::Force => {
                let f = self.force.as_ref().ok_or_else(|| missing("force"))?;
                let model = self.model_source()?;
                if f.area_mm2.is_some() == model.is_some() {
                    return Err(CliError::input("force needs exactly one of force.area_mm2 or a spec/fabrication model"));
                }
                let area = f.area_mm2.map(|a| finite(a, "force.area_mm2")).transpose()?;
                Payload::Force {
                    pressure_kpa: finite(need(f.pressure_kPa, "force.pressure_kPa")?, "force.pressure_kPa")?,
                    area,
                    model,
                }
            }
        };

        let defaults = RootFindConfig::default();
        let solver = RootFindConfig {
            bracket_tol: self.solver.bracket_tol.unwrap_or(defaults.bracket_tol),
            max_iter: self.solver.max_iter.unwrap_or(defaults.max_iter),
        };
        if !(solver.bracket_tol > 0.0 && solver.bracket_tol.is_finite()) {
            return Err(CliError::input("solver.bracket_tol must be positive"));
        }
        if solver.max_iter == 0 {
            return Err(CliError::input("solver.max_iter must be at least 1"));
        }
        let arc_resolution = self.arc_resolution_mm.unwrap_or(DEFAULT_ARC_RESOLUTION);
        if !(arc_resolution > 0.0 && arc_resolution.is_finite()) {
            return Err(CliError::input("arc_resolution_mm must be positive"));
        }
        Ok(Job { mode, payload, solver, arc_resolution, output: self.output.clone() })
    }
}
