//! The ten pole-anchored wing faces `F_S(i) = △(S, U_i, L_i)` and
//! `F_N(i) = △(N, U_i, L_{i−1})`, stored as labels and resolved through the model.

use alloc::vec::Vec;
use core::fmt;

use crate::exact_geometry::ExactVec3;
use crate::icosa_model::{Edge, Label, LabeledIcosahedron, RingIndex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pole {
    South,
    North,
}

impl Pole {
    pub fn label(self) -> Label {
        match self {
            Pole::South => Label::S,
            Pole::North => Label::N,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pole::South => "south",
            Pole::North => "north",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WingFace {
    pole: Pole,
    index: RingIndex,
    vertices: [Label; 3],
    edges: [Edge; 3],
    cross_edge: Edge,
}

impl WingFace {
    /// `F_S(i) = △(S, U_i, L_i)`.
    pub fn south(i: RingIndex) -> Self {
        Self::new(Pole::South, i, [Label::S, Label::U(i), Label::L(i)])
    }

    /// `F_N(i) = △(N, U_i, L_{i−1})`.
    pub fn north(i: RingIndex) -> Self {
        Self::new(Pole::North, i, [Label::N, Label::U(i), Label::L(i.prev())])
    }

    /// Arbitrary triangle tagged with a pole, for validating face sets other
    /// than the canonical one. Vertex 0 is taken as the anchor, so the cross
    /// edge joins vertices 1 and 2.
    pub fn new(pole: Pole, index: RingIndex, vertices: [Label; 3]) -> Self {
        let [a, b, c] = vertices;
        let edges = [Edge::new(a, b), Edge::new(a, c), Edge::new(b, c)];
        Self { pole, index, vertices, edges, cross_edge: Edge::new(b, c) }
    }

    pub fn pole(&self) -> Pole {
        self.pole
    }

    pub fn index(&self) -> RingIndex {
        self.index
    }

    pub fn vertices(&self) -> [Label; 3] {
        self.vertices
    }

    pub fn edges(&self) -> [Edge; 3] {
        self.edges
    }

    /// The edge not incident to the pole.
    pub fn cross_edge(&self) -> Edge {
        self.cross_edge
    }

    /// Short name such as `S3` or `N1`.
    pub fn name(&self) -> FaceName {
        FaceName { pole: self.pole, index: self.index }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceName {
    pub pole: Pole,
    pub index: RingIndex,
}

impl fmt::Display for FaceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.pole {
            Pole::South => 'S',
            Pole::North => 'N',
        };
        write!(f, "{p}{}", self.index)
    }
}

/// Faces over a model, in order `S1..S5, N1..N5` for the canonical set.
#[derive(Clone, Debug)]
pub struct WingSet<'m> {
    model: &'m LabeledIcosahedron,
    faces: Vec<WingFace>,
}

impl<'m> WingSet<'m> {
    /// A face list that need not satisfy the wing-set invariants; validators
    /// report what fails.
    pub fn from_faces(model: &'m LabeledIcosahedron, faces: Vec<WingFace>) -> Self {
        Self { model, faces }
    }

    pub fn model(&self) -> &'m LabeledIcosahedron {
        self.model
    }

    pub fn faces(&self) -> &[WingFace] {
        &self.faces
    }

    pub fn face(&self, pole: Pole, index: RingIndex) -> Option<&WingFace> {
        self.faces.iter().find(|f| f.pole == pole && f.index == index)
    }

    pub fn face_coordinates(&self, face: &WingFace) -> [&'m ExactVec3; 3] {
        let model = self.model;
        face.vertices.map(|l| model.vertex(l))
    }

    /// Midpoint of a face's cross edge.
    pub fn representative_point(&self, face: &WingFace) -> ExactVec3 {
        let (a, b) = face.cross_edge.endpoints();
        self.model.vertex(a).midpoint(self.model.vertex(b))
    }

    pub fn into_faces(self) -> Vec<WingFace> {
        self.faces
    }
}

/// The ten canonical faces.
pub fn generate_wing_set(model: &LabeledIcosahedron) -> WingSet<'_> {
    let faces = RingIndex::all()
        .into_iter()
        .map(WingFace::south)
        .chain(RingIndex::all().into_iter().map(WingFace::north))
        .collect();
    WingSet { model, faces }
}

/// Cross-edge midpoints in face order.
pub fn representative_points(ws: &WingSet<'_>) -> Vec<ExactVec3> {
    ws.faces.iter().map(|f| ws.representative_point(f)).collect()
}
