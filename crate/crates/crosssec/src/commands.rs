//! One function per mode. Each writes its side files and returns the
//! primary document (JSON or CSV text) plus the exit status.

use std::fs::{self, File};
use std::io::BufWriter;
use std::path::Path;

use crosssec_core::analysis::{area_ratio, eversion_force, total_area};
use crosssec_core::geometry::inverse_solution;
use crosssec_core::{build_cross_section, forward_geometry, validate_spec, CrossSection, Error as ModelError};

use crate::config::{Job, ModelSource, Payload};
use crate::csvio::{read_outline, write_outline, write_sweep};
use crate::dto::{to_json, CompareDoc, CrossSectionDoc, ForceDoc, InverseDoc, OracleDoc};
use crate::error::CliError;
use crate::parallel;
use crate::svg::render_svg;

/// Result of a command that ran to completion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    /// Primary output, written to the output path or stdout.
    pub document: String,
    /// Set when the document was produced but the command still fails, for
    /// example an infeasible spec or an oracle disagreement.
    pub failure: Option<String>,
}

impl Outcome {
    fn ok(document: String) -> Self {
        Self { document, failure: None }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

fn side_outputs(job: &Job, cs: &CrossSection) -> Result<(), CliError> {
    if let Some(path) = &job.output.svg {
        write_file(path, &render_svg(cs))?;
    }
    if let Some(path) = &job.output.outline {
        let f = File::create(path).map_err(|e| CliError::io(path, e))?;
        write_outline(BufWriter::new(f), &cs.outline(job.arc_resolution)).map_err(|e| CliError::io(path, e))?;
    }
    Ok(())
}

fn section_doc(job: &Job, cs: &CrossSection) -> Result<String, CliError> {
    side_outputs(job, cs)?;
    let area = total_area(cs, job.arc_resolution)?;
    Ok(to_json(&CrossSectionDoc::new(cs, area, job.arc_resolution)))
}

fn model(job: &Job, source: ModelSource) -> Result<CrossSection, CliError> {
    Ok(match source {
        ModelSource::Spec(spec) => build_cross_section(&spec)?,
        ModelSource::Fabrication(fab) => forward_geometry(&fab, &job.solver)?,
    })
}

pub fn execute(job: &Job, threads: Option<usize>) -> Result<Outcome, CliError> {
    match &job.payload {
        Payload::Inverse(spec) => {
            let report = validate_spec(spec);
            match inverse_solution(spec) {
                Ok(sol) => Ok(Outcome::ok(to_json(&InverseDoc::new(*spec, &report, Some(&sol))))),
                Err(e @ ModelError::InfeasibleSpec(_)) => Ok(Outcome {
                    document: to_json(&InverseDoc::new(*spec, &report, None)),
                    failure: Some(e.to_string()),
                }),
                Err(e) => Err(e.into()),
            }
        }
        Payload::Forward(fab) => {
            let cs = forward_geometry(fab, &job.solver)?;
            section_doc(job, &cs).map(Outcome::ok)
        }
        Payload::Shape(spec) => {
            let cs = build_cross_section(spec)?;
            section_doc(job, &cs).map(Outcome::ok)
        }
        Payload::Sweep { perimeter, s_c, l } => {
            let rows = parallel::sweep(*perimeter, s_c, l, &job.solver, threads)?;
            let mut buf = Vec::new();
            write_sweep(&mut buf, &rows)?;
            Ok(Outcome::ok(String::from_utf8(buf).expect("csv output is utf-8")))
        }
        Payload::Oracle { s_c, l, grid_points } => {
            let r = parallel::oracle(*s_c, *l, *grid_points, &job.solver, threads)?;
            let doc = OracleDoc::new(*s_c, *l, &r);
            let failure = (!doc.agrees).then(|| {
                format!(
                    "oracle disagreement: grid argmax {} is {} rad from the analytic root, more than one step ({})",
                    doc.theta_grid_argmax_rad, doc.deviation_rad, doc.grid_step_rad
                )
            });
            Ok(Outcome { document: to_json(&doc), failure })
        }
        Payload::Compare { outline, model: source } => {
            let f = File::open(outline).map_err(|e| CliError::io(outline, e))?;
            let measured = read_outline(f)?;
            let cs = model(job, *source)?;
            side_outputs(job, &cs)?;
            let ratio = area_ratio(&measured, &cs, job.arc_resolution)?;
            let doc = CompareDoc {
                outline_points: measured.len(),
                measured_area_mm2: measured.area(),
                model_area_mm2: total_area(&cs, job.arc_resolution)?,
                ratio,
                arc_resolution_mm: job.arc_resolution,
                fabrication: cs.fab.into(),
            };
            Ok(Outcome::ok(to_json(&doc)))
        }
        Payload::Force { pressure_kpa, area, model: source } => {
            let (area, area_source) = match (area, source) {
                (Some(a), _) => (*a, "given"),
                (None, Some(src)) => {
                    let cs = model(job, *src)?;
                    side_outputs(job, &cs)?;
                    (total_area(&cs, job.arc_resolution)?, "model")
                }
                (None, None) => unreachable!("checked when the config was resolved"),
            };
            let doc = ForceDoc {
                pressure_kPa: *pressure_kpa,
                area_mm2: area,
                force_N: eversion_force(*pressure_kpa, area),
                area_source: area_source.to_string(),
            };
            Ok(Outcome::ok(to_json(&doc)))
        }
    }
}
