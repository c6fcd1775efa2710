use alloc::vec::Vec;

use super::FaceRef;
use crate::exact_geometry::triangle_interiors_intersect;
use crate::wing_set::WingSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairResult {
    pub first: FaceRef,
    pub second: FaceRef,
    /// Number of vertex labels the two faces have in common.
    pub shared_vertices: usize,
    pub interiors_intersect: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionCheck {
    pub pass: bool,
    pub pairs_tested: usize,
    /// Pairs that touch only at shared vertices, counted as non-intersecting.
    pub vertex_sharing_pairs: usize,
    pub offending_pairs: Vec<PairResult>,
    pub pairs: Vec<PairResult>,
}

/// Exact open-interior overlap test over all unordered face pairs.
pub fn check_non_intersection(ws: &WingSet<'_>) -> IntersectionCheck {
    let faces = ws.faces();
    let mut pairs = Vec::with_capacity(faces.len() * faces.len().saturating_sub(1) / 2);
    for i in 0..faces.len() {
        for j in (i + 1)..faces.len() {
            let (a, b) = (&faces[i], &faces[j]);
            let shared_vertices = a.vertices().iter().filter(|l| b.vertices().contains(l)).count();
            let interiors_intersect =
                triangle_interiors_intersect(ws.face_coordinates(a), ws.face_coordinates(b));
            pairs.push(PairResult {
                first: FaceRef { position: i, name: a.name() },
                second: FaceRef { position: j, name: b.name() },
                shared_vertices,
                interiors_intersect,
            });
        }
    }
    let offending_pairs: Vec<PairResult> = pairs.iter().filter(|p| p.interiors_intersect).cloned().collect();
    let vertex_sharing_pairs = pairs
        .iter()
        .filter(|p| p.shared_vertices > 0 && !p.interiors_intersect)
        .count();
    IntersectionCheck {
        pass: offending_pairs.is_empty(),
        pairs_tested: pairs.len(),
        vertex_sharing_pairs,
        offending_pairs,
        pairs,
    }
}
