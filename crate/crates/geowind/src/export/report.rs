use std::io::Write;

use geowind_core::validators::{DuplicateEdge, FaceRef, PairResult};
use geowind_core::{GoldenRational, ValidationReport, WingSet};
use serde::Serialize;

use super::{ExportError, Frame};

/// An exact value with its nearest `f64`.
#[derive(Serialize)]
struct Exact {
    exact: String,
    float: f64,
}

impl From<&GoldenRational> for Exact {
    fn from(g: &GoldenRational) -> Self {
        Exact { exact: g.to_string(), float: g.to_f64() }
    }
}

fn exact_all<'a>(values: impl IntoIterator<Item = &'a GoldenRational>) -> Vec<Exact> {
    values.into_iter().map(Exact::from).collect()
}

#[derive(Serialize)]
struct ReportJson {
    model: ModelJson,
    edge_check: EdgeCheckJson,
    shape_check: ShapeCheckJson,
    decagon_check: DecagonCheckJson,
    maximality_check: MaximalityCheckJson,
    intersection_check: IntersectionCheckJson,
    overall: bool,
}

#[derive(Serialize)]
struct ModelJson {
    edge_length: Exact,
    frame: &'static str,
    vertex_count: usize,
    edge_count: usize,
    axis: Vec<Exact>,
    vertices: Vec<VertexJson>,
}

#[derive(Serialize)]
struct VertexJson {
    label: String,
    coordinates: Vec<Exact>,
}

#[derive(Serialize)]
struct FaceRefJson {
    face: String,
    position: usize,
}

impl From<&FaceRef> for FaceRefJson {
    fn from(f: &FaceRef) -> Self {
        FaceRefJson { face: f.name.to_string(), position: f.position }
    }
}

#[derive(Serialize)]
struct DuplicateJson {
    edge: String,
    first: FaceRefJson,
    second: FaceRefJson,
}

impl From<&DuplicateEdge> for DuplicateJson {
    fn from(d: &DuplicateEdge) -> Self {
        DuplicateJson { edge: d.edge.to_string(), first: (&d.first).into(), second: (&d.second).into() }
    }
}

#[derive(Serialize)]
struct EdgeCheckJson {
    pass: bool,
    edge_slots: usize,
    distinct_edges: usize,
    duplicate_pairs: Vec<DuplicateJson>,
}

#[derive(Serialize)]
struct FaceShapeJson {
    face: String,
    pass: bool,
    pole_angle_is_36: bool,
    sq_sides: Vec<Exact>,
    cos_angles: Vec<Option<Exact>>,
    angles_deg_float: [f64; 3],
}

#[derive(Serialize)]
struct ShapeCheckJson {
    pass: bool,
    per_face: Vec<FaceShapeJson>,
}

#[derive(Serialize)]
struct DecagonCheckJson {
    pass: bool,
    in_plane: bool,
    on_circle: bool,
    regular_spacing: bool,
    interlaced: bool,
    expected_sq_radius: Exact,
    sq_radius: Exact,
    radius_float: f64,
    adjacent_cos: Exact,
    spacing_deg_float: f64,
    angular_order: Vec<String>,
}

#[derive(Serialize)]
struct MaximalityCheckJson {
    pass: bool,
    south_candidates: usize,
    north_candidates: usize,
    max_per_south: usize,
    max_per_north: usize,
    max_total: usize,
    unconstrained_candidates: usize,
    unconstrained_max_total: usize,
}

#[derive(Serialize)]
struct PairJson {
    first: FaceRefJson,
    second: FaceRefJson,
    shared_vertices: usize,
    interiors_intersect: bool,
}

impl From<&PairResult> for PairJson {
    fn from(p: &PairResult) -> Self {
        PairJson {
            first: (&p.first).into(),
            second: (&p.second).into(),
            shared_vertices: p.shared_vertices,
            interiors_intersect: p.interiors_intersect,
        }
    }
}

#[derive(Serialize)]
struct IntersectionCheckJson {
    pass: bool,
    pairs_tested: usize,
    vertex_sharing_pairs: usize,
    offending_pairs: Vec<PairJson>,
    pairs: Vec<PairJson>,
}

/// Pretty-printed JSON report with a fixed key order.
pub fn export_report<W: Write + ?Sized>(report: &ValidationReport, ws: &WingSet<'_>, out: &mut W) -> Result<(), ExportError> {
    let json = build(report, ws);
    serde_json::to_writer_pretty(&mut *out, &json).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn build(report: &ValidationReport, ws: &WingSet<'_>) -> ReportJson {
    let model = ws.model();
    let model_json = ModelJson {
        edge_length: model.edge_length().into(),
        frame: Frame::Standard.describe(),
        vertex_count: model.vertices().count(),
        edge_count: model.edges().len(),
        axis: exact_all(model.axis().components()),
        vertices: model
            .vertices()
            .map(|(label, v)| VertexJson { label: label.to_string(), coordinates: exact_all(v.components()) })
            .collect(),
    };

    let e = &report.edge_check;
    let s = &report.shape_check;
    let d = &report.decagon_check;
    let m = &report.maximality_check;
    let i = &report.intersection_check;

    ReportJson {
        model: model_json,
        edge_check: EdgeCheckJson {
            pass: e.pass,
            edge_slots: e.edge_slots,
            distinct_edges: e.distinct_edges,
            duplicate_pairs: e.duplicate_pairs.iter().map(Into::into).collect(),
        },
        shape_check: ShapeCheckJson {
            pass: s.pass,
            per_face: s
                .per_face
                .iter()
                .map(|f| FaceShapeJson {
                    face: f.face.to_string(),
                    pass: f.pass,
                    pole_angle_is_36: f.pole_angle_is_36,
                    sq_sides: exact_all(&f.sq_sides),
                    cos_angles: f.cos_angles.iter().map(|c| c.as_ref().map(Exact::from)).collect(),
                    angles_deg_float: f.angles_deg_float,
                })
                .collect(),
        },
        decagon_check: DecagonCheckJson {
            pass: d.pass,
            in_plane: d.in_plane,
            on_circle: d.on_circle,
            regular_spacing: d.regular_spacing,
            interlaced: d.interlaced,
            expected_sq_radius: (&d.expected_sq_radius).into(),
            sq_radius: (&d.sq_radius).into(),
            radius_float: d.radius_float,
            adjacent_cos: (&d.adjacent_cos).into(),
            spacing_deg_float: d.spacing_deg_float,
            angular_order: d.angular_order.iter().map(ToString::to_string).collect(),
        },
        maximality_check: MaximalityCheckJson {
            pass: m.pass,
            south_candidates: m.south_candidates,
            north_candidates: m.north_candidates,
            max_per_south: m.max_per_south,
            max_per_north: m.max_per_north,
            max_total: m.max_total,
            unconstrained_candidates: m.unconstrained_candidates,
            unconstrained_max_total: m.unconstrained_max_total,
        },
        intersection_check: IntersectionCheckJson {
            pass: i.pass,
            pairs_tested: i.pairs_tested,
            vertex_sharing_pairs: i.vertex_sharing_pairs,
            offending_pairs: i.offending_pairs.iter().map(Into::into).collect(),
            pairs: i.pairs.iter().map(Into::into).collect(),
        },
        overall: report.overall,
    }
}
