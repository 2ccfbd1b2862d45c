//! Sweep tables and outline files.

use std::io::{Read, Write};

use crosssec_core::analysis::SweepRecord;
use crosssec_core::{Point, Polygon};

use crate::error::CliError;
use crate::format::g9;

pub const SWEEP_HEADER: [&str; 9] =
    ["S_c_mm", "L_mm", "S_s_mm", "H_c_mm", "H_s_mm", "w_mm", "ergonomic_index", "feasible", "reason"];

fn csv_err(e: csv::Error) -> CliError {
    CliError::input(format!("csv: {e}"))
}

/// Writes sweep rows in the order given. Geometry columns are empty on
/// infeasible rows; an infinite index is written as `inf`.
pub fn write_sweep<W: Write>(out: W, rows: &[SweepRecord]) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(SWEEP_HEADER).map_err(csv_err)?;
    for r in rows {
        let (h_c, h_s, width, index) = match &r.geometry {
            Some(g) => (g9(g.h_c), g9(g.h_s), g9(g.w), g9(g.ergonomic_index)),
            None => Default::default(),
        };
        let reason = r.failure_reason.as_deref().unwrap_or("");
        w.write_record([
            g9(r.s_c).as_str(),
            &g9(r.l),
            &g9(r.s_s),
            &h_c,
            &h_s,
            &width,
            &index,
            if r.feasible { "true" } else { "false" },
            reason,
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(|e| CliError::input(format!("csv: {e}")))
}

fn parse_decimal(field: &str) -> Option<f64> {
    let ok = !field.is_empty()
        && field.bytes().any(|b| b.is_ascii_digit())
        && field.bytes().all(|b| b.is_ascii_digit() || matches!(b, b'+' | b'-' | b'.' | b'e' | b'E'));
    if ok {
        field.parse().ok()
    } else {
        None
    }
}

/// Parses `x_mm,y_mm` rows. A non-numeric first row is taken as a header;
/// blank lines are skipped; the closing point may be repeated or left out.
pub fn read_outline<R: Read>(input: R) -> Result<Polygon, CliError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(input);
    let mut pts = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(csv_err)?;
        if rec.iter().all(str::is_empty) {
            continue;
        }
        let line = rec.position().map_or(i as u64 + 1, |p| p.line());
        if rec.len() != 2 {
            return Err(CliError::input(format!("outline line {line}: expected 2 columns, found {}", rec.len())));
        }
        match (parse_decimal(&rec[0]), parse_decimal(&rec[1])) {
            (Some(x), Some(y)) => pts.push(Point::new(x, y)),
            _ if i == 0 => {}
            _ => return Err(CliError::input(format!("outline line {line}: expected two decimal numbers"))),
        }
    }
    Polygon::new(pts).map_err(|e| CliError::input(format!("outline: {e}")))
}

/// Writes an outline with a header row and shortest round-trip decimals.
pub fn write_outline<W: Write>(mut out: W, polygon: &Polygon) -> std::io::Result<()> {
    writeln!(out, "x_mm,y_mm")?;
    for p in polygon.points() {
        writeln!(out, "{},{}", p.x, p.y)?;
    }
    out.flush()
}
