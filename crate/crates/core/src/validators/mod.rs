//! Checks of the generation-and-validation workflow, each returning
//! structured evidence. Failures are data; nothing here returns `Err`.

mod decagon;
mod edges;
mod intersection;
mod maximality;
mod shapes;

pub use decagon::{check_decagon, check_decagon_points, DecagonCheck};
pub use edges::{check_edge_disjoint, DuplicateEdge, EdgeCheck};
pub use intersection::{check_non_intersection, IntersectionCheck, PairResult};
pub use maximality::{
    all_pole_triangles, check_maximality, gnomon_candidates, max_edge_disjoint, Candidate,
    MaximalityCheck,
};
pub use shapes::{check_face_shapes, FaceShape, ShapeCheck};

use crate::icosa_model::LabeledIcosahedron;
use crate::wing_set::{FaceName, WingSet};

/// A face identified by its position in the checked list and its name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceRef {
    pub position: usize,
    pub name: FaceName,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub edge_check: EdgeCheck,
    pub shape_check: ShapeCheck,
    pub decagon_check: DecagonCheck,
    pub maximality_check: MaximalityCheck,
    pub intersection_check: IntersectionCheck,
    pub overall: bool,
}

/// Edge disjointness, face shapes, decagon, non-intersection, then maximality.
pub fn run_all(model: &LabeledIcosahedron, ws: &WingSet<'_>) -> ValidationReport {
    let edge_check = check_edge_disjoint(ws);
    let shape_check = check_face_shapes(ws);
    let decagon_check = check_decagon(ws);
    let intersection_check = check_non_intersection(ws);
    let maximality_check = check_maximality(model);
    let overall = edge_check.pass
        && shape_check.pass
        && decagon_check.pass
        && maximality_check.pass
        && intersection_check.pass;
    ValidationReport {
        edge_check,
        shape_check,
        decagon_check,
        maximality_check,
        intersection_check,
        overall,
    }
}

pub(crate) fn rad_to_deg(r: f64) -> f64 {
    r * (180.0 / core::f64::consts::PI)
}
