//! JSON documents. Field names carry their unit as a suffix.
#![allow(non_snake_case)]

use serde::{Deserialize, Serialize};

use crosssec_core::analysis::ergonomic_index;
use crosssec_core::geometry::{FeasibilityReport, InverseSolution, Point, SideChannel};
use crosssec_core::solver::OracleResult;
use crosssec_core::{CrossSection, DesignSpec, FabricationParams};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDoc {
    pub H_c_mm: f64,
    pub H_s_mm: f64,
    pub w_mm: f64,
}

impl From<DesignSpec> for SpecDoc {
    fn from(s: DesignSpec) -> Self {
        Self { H_c_mm: s.h_c, H_s_mm: s.h_s, w_mm: s.w }
    }
}

impl From<SpecDoc> for DesignSpec {
    fn from(s: SpecDoc) -> Self {
        DesignSpec::new(s.H_c_mm, s.H_s_mm, s.w_mm)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FabDoc {
    pub S_c_mm: f64,
    pub S_s_mm: f64,
    pub L_mm: f64,
}

impl From<FabricationParams> for FabDoc {
    fn from(f: FabricationParams) -> Self {
        Self { S_c_mm: f.s_c, S_s_mm: f.s_s, L_mm: f.l }
    }
}

impl From<FabDoc> for FabricationParams {
    fn from(f: FabDoc) -> Self {
        FabricationParams::new(f.S_c_mm, f.S_s_mm, f.L_mm)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointDoc {
    pub x_mm: f64,
    pub y_mm: f64,
}

impl From<Point> for PointDoc {
    fn from(p: Point) -> Self {
        Self { x_mm: p.x, y_mm: p.y }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeasibilityDoc {
    pub feasible: bool,
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_mm4: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arcsin_argument: Option<f64>,
}

impl From<&FeasibilityReport> for FeasibilityDoc {
    fn from(r: &FeasibilityReport) -> Self {
        Self {
            feasible: r.feasible,
            violations: r.violations.iter().map(|v| v.condition().to_string()).collect(),
            gamma_mm4: r.gamma,
            arcsin_argument: r.arcsin_argument,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InverseDerivedDoc {
    pub theta_c_rad: f64,
    pub theta_s_rad: f64,
    pub w_c_mm: f64,
    pub beta_mm: f64,
    /// `"minor"` when the side arc is at most a half circle.
    pub side_arc: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InverseDoc {
    pub spec: SpecDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fabrication: Option<FabDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived: Option<InverseDerivedDoc>,
    pub feasibility: FeasibilityDoc,
}

impl InverseDoc {
    pub fn new(spec: DesignSpec, report: &FeasibilityReport, solution: Option<&InverseSolution>) -> Self {
        let derived = solution.map(|s| InverseDerivedDoc {
            theta_c_rad: 2.0 * s.fab.s_c / spec.h_c,
            theta_s_rad: 2.0 * s.fab.s_s / spec.h_s,
            w_c_mm: s.w_c,
            beta_mm: s.beta,
            side_arc: if s.side_minor_branch { "minor" } else { "major" }.to_string(),
        });
        Self { spec: spec.into(), fabrication: solution.map(|s| s.fab.into()), derived, feasibility: report.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CenterDoc {
    pub r_c_mm: f64,
    pub theta_c_rad: f64,
    pub theta_m_rad: f64,
    pub w_c_mm: f64,
    pub L_mm: f64,
    pub alpha_mm: f64,
    pub A_c_mm2: f64,
    pub arc_center: PointDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SideDoc {
    pub side: String,
    pub r_s_mm: f64,
    pub theta_s_rad: f64,
    pub theta_s_conj_rad: f64,
    pub S_s_conj_mm: f64,
    pub w_s_mm: f64,
    pub L_mm: f64,
    pub arc_center: PointDoc,
    pub A_s_mm2: f64,
}

impl From<&SideChannel> for SideDoc {
    fn from(s: &SideChannel) -> Self {
        Self {
            side: format!("{:?}", s.side).to_lowercase(),
            r_s_mm: s.r_s,
            theta_s_rad: s.theta_s,
            theta_s_conj_rad: s.theta_s_conj,
            S_s_conj_mm: s.s_s_conj,
            w_s_mm: s.w_s,
            L_mm: s.l,
            arc_center: s.center().into(),
            A_s_mm2: s.area,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErgonomicDoc {
    pub slope: f64,
    #[serde(with = "inf_sentinel")]
    pub ergonomic_index: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossSectionDoc {
    pub spec: SpecDoc,
    pub fabrication: FabDoc,
    pub perimeter_mm: f64,
    pub width_mm: f64,
    pub height_mm: f64,
    pub center_channel: CenterDoc,
    pub side_channels: [SideDoc; 2],
    pub straight_midpoints: [PointDoc; 2],
    pub total_area_mm2: f64,
    pub arc_resolution_mm: f64,
    pub ergonomics: ErgonomicDoc,
}

impl CrossSectionDoc {
    /// `total_area` is passed in because it depends on the requested arc
    /// resolution.
    pub fn new(cs: &CrossSection, total_area: f64, arc_resolution: f64) -> Self {
        let c = &cs.center;
        let e = ergonomic_index(cs);
        Self {
            spec: cs.spec.into(),
            fabrication: cs.fab.into(),
            perimeter_mm: cs.perimeter(),
            width_mm: cs.width,
            height_mm: cs.height(),
            center_channel: CenterDoc {
                r_c_mm: c.r_c,
                theta_c_rad: c.theta_c,
                theta_m_rad: c.theta_m,
                w_c_mm: c.w_c,
                L_mm: c.l,
                alpha_mm: c.alpha(),
                A_c_mm2: c.area,
                arc_center: c.center.into(),
            },
            side_channels: [(&cs.left).into(), (&cs.right).into()],
            straight_midpoints: cs.straight_midpoints.map(PointDoc::from),
            total_area_mm2: total_area,
            arc_resolution_mm: arc_resolution,
            ergonomics: ErgonomicDoc { slope: e.slope, ergonomic_index: e.index },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OracleDoc {
    pub S_c_mm: f64,
    pub L_mm: f64,
    pub grid_points: usize,
    pub grid_step_rad: f64,
    pub theta_grid_argmax_rad: f64,
    pub theta_refined_rad: f64,
    pub analytic_root_rad: f64,
    pub A_c_at_argmax_mm2: f64,
    pub deviation_rad: f64,
    pub agrees: bool,
}

impl OracleDoc {
    pub fn new(s_c: f64, l: f64, r: &OracleResult) -> Self {
        Self {
            S_c_mm: s_c,
            L_mm: l,
            grid_points: r.grid_points,
            grid_step_rad: r.grid_step,
            theta_grid_argmax_rad: r.theta_grid_argmax,
            theta_refined_rad: r.theta_refined,
            analytic_root_rad: r.analytic_root,
            A_c_at_argmax_mm2: r.area_at_argmax,
            deviation_rad: r.deviation(),
            agrees: r.agrees(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareDoc {
    pub outline_points: usize,
    pub measured_area_mm2: f64,
    pub model_area_mm2: f64,
    pub ratio: f64,
    pub arc_resolution_mm: f64,
    pub fabrication: FabDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForceDoc {
    pub pressure_kPa: f64,
    pub area_mm2: f64,
    pub force_N: f64,
    /// `"given"` or `"model"`.
    pub area_source: String,
}

/// Serialises `f64::INFINITY` as the string `"inf"`.
pub mod inf_sentinel {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        if *x == f64::INFINITY {
            s.serialize_str("inf")
        } else {
            x.serialize(s)
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(f64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(x) => Ok(x),
            Repr::Str(s) if s == "inf" => Ok(f64::INFINITY),
            Repr::Str(s) => Err(serde::de::Error::custom(format!("expected a number or \"inf\", got {s:?}"))),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents contain only finite numbers or sentinels");
    s.push('\n');
    s
}
