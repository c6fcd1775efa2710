use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::FaceRef;
use crate::icosa_model::Edge;
use crate::wing_set::WingSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DuplicateEdge {
    pub edge: Edge,
    /// Face that listed the edge first.
    pub first: FaceRef,
    pub second: FaceRef,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCheck {
    pub pass: bool,
    pub edge_slots: usize,
    pub distinct_edges: usize,
    pub duplicate_pairs: Vec<DuplicateEdge>,
}

/// Passes iff every edge slot across all faces is a distinct unordered pair.
pub fn check_edge_disjoint(ws: &WingSet<'_>) -> EdgeCheck {
    let mut owner: BTreeMap<Edge, FaceRef> = BTreeMap::new();
    let mut duplicate_pairs = Vec::new();
    let mut edge_slots = 0;
    for (position, face) in ws.faces().iter().enumerate() {
        let here = FaceRef { position, name: face.name() };
        for edge in face.edges() {
            edge_slots += 1;
            match owner.get(&edge) {
                Some(first) => duplicate_pairs.push(DuplicateEdge { edge, first: *first, second: here }),
                None => {
                    owner.insert(edge, here);
                }
            }
        }
    }
    EdgeCheck {
        pass: duplicate_pairs.is_empty(),
        edge_slots,
        distinct_edges: owner.len(),
        duplicate_pairs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use crate::golden_field::GoldenRational;
    use crate::icosa_model::{build_icosahedron, Label, RingIndex};
    use crate::wing_set::{generate_wing_set, Pole, WingFace};

    #[test]
    fn canonical_set_passes() {
        let m = build_icosahedron(GoldenRational::from_integer(2)).unwrap();
        let c = check_edge_disjoint(&generate_wing_set(&m));
        assert!(c.pass);
        assert_eq!(c.distinct_edges, 30);
        assert!(c.duplicate_pairs.is_empty());
    }

    #[test]
    fn self_duplicate_reports_three_pairs() {
        let m = build_icosahedron(GoldenRational::one()).unwrap();
        let mut faces = generate_wing_set(&m).into_faces();
        faces.push(faces[0].clone());
        let c = check_edge_disjoint(&WingSet::from_faces(&m, faces));
        assert!(!c.pass);
        assert_eq!(c.duplicate_pairs.len(), 3);
        assert!(c.duplicate_pairs.iter().all(|d| d.first.position == 0 && d.second.position == 10));
    }

    #[test]
    fn shifted_north_face_collides() {
        let m = build_icosahedron(GoldenRational::one()).unwrap();
        let mut faces = generate_wing_set(&m).into_faces();
        let two = RingIndex::new(2);
        faces[6] = WingFace::new(Pole::North, two, [Label::N, Label::U(two), Label::L(two)]);
        let c = check_edge_disjoint(&WingSet::from_faces(&m, faces));
        assert!(!c.pass);
        // U2L2 collides with S2; N–L2 also collides with N3
        assert_eq!(c.duplicate_pairs.len(), 2);
        let d = c
            .duplicate_pairs
            .iter()
            .find(|d| d.edge == Edge::new(Label::u(2), Label::l(2)))
            .unwrap();
        assert_eq!(d.first.name.to_string(), "S2");
        assert_eq!(d.second.name.to_string(), "N2");
    }
}
