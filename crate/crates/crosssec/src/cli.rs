use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;

use crate::commands::execute;
use crate::config::{FabInput, ForceInput, JobConfig, Mode, OracleInput, SpecInput, SweepInput};
use crate::error::CliError;
use crate::parallel::thread_cap;

/// Inflated cross-section geometry of radially constrained everting membranes.
#[derive(Debug, Parser)]
#[command(name = "crosssec", version)]
pub struct Args {
    #[arg(value_enum)]
    pub mode: Mode,
    /// JSON job configuration; the flags below override its fields.
    #[arg(long)]
    pub config: Option<PathBuf>,

    #[arg(long, value_name = "MM")]
    pub hc: Option<f64>,
    #[arg(long, value_name = "MM")]
    pub hs: Option<f64>,
    #[arg(long, value_name = "MM")]
    pub w: Option<f64>,
    /// Center arc length; a comma-separated list for `sweep`.
    #[arg(long, value_name = "MM", value_delimiter = ',', allow_negative_numbers = true)]
    pub sc: Vec<f64>,
    #[arg(long, value_name = "MM")]
    pub ss: Option<f64>,
    /// Strip width; a comma-separated list for `sweep`.
    #[arg(long, value_name = "MM", value_delimiter = ',', allow_negative_numbers = true)]
    pub l: Vec<f64>,
    #[arg(long, value_name = "MM")]
    pub perimeter: Option<f64>,
    #[arg(long)]
    pub grid_points: Option<usize>,
    #[arg(long, value_name = "KPA")]
    pub pressure_kpa: Option<f64>,
    #[arg(long, value_name = "MM2")]
    pub area: Option<f64>,
    /// Measured outline CSV for `compare`.
    #[arg(long)]
    pub outline: Option<PathBuf>,
    #[arg(long, value_name = "MM")]
    pub arc_resolution: Option<f64>,

    /// Result document; stdout when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Sweep table; stdout when absent.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Writes the model outline as `x_mm,y_mm` rows.
    #[arg(long)]
    pub export_outline: Option<PathBuf>,
}

fn single(values: &[f64], flag: &str) -> Result<Option<f64>, CliError> {
    match values {
        [] => Ok(None),
        [v] => Ok(Some(*v)),
        _ => Err(CliError::input(format!("--{flag} takes a single value in this mode"))),
    }
}

impl Args {
    /// Loads the config file, if any, and applies the flags on top.
    pub fn job_config(&self) -> Result<JobConfig, CliError> {
        let mut cfg = match &self.config {
            Some(path) => JobConfig::load(path)?,
            None => JobConfig::default(),
        };

        if self.hc.is_some() || self.hs.is_some() || self.w.is_some() {
            let s = cfg.spec.get_or_insert_with(SpecInput::default);
            s.H_c_mm = self.hc.or(s.H_c_mm);
            s.H_s_mm = self.hs.or(s.H_s_mm);
            s.w_mm = self.w.or(s.w_mm);
        }

        match self.mode {
            Mode::Sweep => {
                if self.ss.is_some() {
                    return Err(CliError::input("--ss is derived from --perimeter in sweep mode"));
                }
                if self.perimeter.is_some() || !self.sc.is_empty() || !self.l.is_empty() {
                    let s = cfg.sweep.get_or_insert_with(SweepInput::default);
                    s.perimeter_mm = self.perimeter.or(s.perimeter_mm);
                    if !self.sc.is_empty() {
                        s.S_c_mm = self.sc.clone();
                    }
                    if !self.l.is_empty() {
                        s.L_mm = self.l.clone();
                    }
                }
            }
            Mode::Oracle => {
                let (sc, l) = (single(&self.sc, "sc")?, single(&self.l, "l")?);
                if self.ss.is_some() {
                    return Err(CliError::input("--ss does not apply to oracle mode"));
                }
                if sc.is_some() || l.is_some() || self.grid_points.is_some() {
                    let o = cfg.oracle.get_or_insert_with(OracleInput::default);
                    o.S_c_mm = sc.or(o.S_c_mm);
                    o.L_mm = l.or(o.L_mm);
                    o.grid_points = self.grid_points.or(o.grid_points);
                }
            }
            _ => {
                let (sc, l) = (single(&self.sc, "sc")?, single(&self.l, "l")?);
                if sc.is_some() || self.ss.is_some() || l.is_some() {
                    let f = cfg.fabrication.get_or_insert_with(FabInput::default);
                    f.S_c_mm = sc.or(f.S_c_mm);
                    f.S_s_mm = self.ss.or(f.S_s_mm);
                    f.L_mm = l.or(f.L_mm);
                }
            }
        }
        if self.perimeter.is_some() && self.mode != Mode::Sweep {
            return Err(CliError::input("--perimeter applies to sweep mode only"));
        }
        if self.grid_points.is_some() && self.mode != Mode::Oracle {
            return Err(CliError::input("--grid-points applies to oracle mode only"));
        }

        if self.pressure_kpa.is_some() || self.area.is_some() {
            let f = cfg.force.get_or_insert_with(ForceInput::default);
            f.pressure_kPa = self.pressure_kpa.or(f.pressure_kPa);
            f.area_mm2 = self.area.or(f.area_mm2);
        }
        if let Some(p) = &self.outline {
            cfg.compare.get_or_insert_with(Default::default).outline = Some(p.clone());
        }
        if self.arc_resolution.is_some() {
            cfg.arc_resolution_mm = self.arc_resolution;
        }
        let out = &mut cfg.output;
        out.json = self.output.clone().or(out.json.take());
        out.svg = self.svg.clone().or(out.svg.take());
        out.csv = self.csv.clone().or(out.csv.take());
        out.outline = self.export_outline.clone().or(out.outline.take());
        Ok(cfg)
    }
}

fn one_line(msg: &str) -> String {
    msg.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn run_parsed(args: &Args, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let job = args.job_config()?.resolve(args.mode)?;
    let outcome = execute(&job, thread_cap()?)?;
    let target = if args.mode == Mode::Sweep { job.output.csv.as_ref() } else { job.output.json.as_ref() };
    match target {
        Some(path) => std::fs::write(path, &outcome.document).map_err(|e| CliError::io(path, e))?,
        None => stdout.write_all(outcome.document.as_bytes()).map_err(|e| CliError::io("<stdout>", e))?,
    }
    match outcome.failure {
        Some(msg) => {
            let _ = writeln!(stderr, "error: {}", one_line(&msg));
            Ok(2)
        }
        None => Ok(0),
    }
}

/// Parses `argv` and runs the command. Returns the process exit code:
/// 0 success, 1 input or usage error, 2 infeasible or non-convergent model.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    1
                }
            };
        }
    };
    match run_parsed(&args, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", one_line(&e.to_string()));
            e.exit_code()
        }
    }
}
