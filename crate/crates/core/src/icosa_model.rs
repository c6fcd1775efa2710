//! The labeled regular icosahedron: poles `N`/`S`, upper ring `U1..U5`,
//! lower ring `L1..L5`, and an exact adjacency derived from distances.
//!
//! Coordinates are the standard `(0,±1,±φ), (±1,±φ,0), (±φ,0,±1)` model
//! scaled by `ℓ/2`, with `N = (0,1,φ)·ℓ/2` and `S = −N`. Rings are indexed
//! so that `U_i` is adjacent to `L_i` and to `L_{i−1}` (indices mod 5).

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::exact_geometry::ExactVec3;
use crate::golden_field::{GoldenRational, Rational};

/// Cyclic ring index in `1..=5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingIndex(u8);

impl RingIndex {
    /// Reduces any integer into `1..=5`, so `RingIndex::new(0) == RingIndex::new(5)`.
    pub fn new(i: i64) -> Self {
        Self((i - 1).rem_euclid(5) as u8 + 1)
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn next(self) -> Self {
        Self::new(i64::from(self.0) + 1)
    }

    pub fn prev(self) -> Self {
        Self::new(i64::from(self.0) - 1)
    }

    pub fn all() -> [RingIndex; 5] {
        core::array::from_fn(|k| RingIndex(k as u8 + 1))
    }

    fn slot(self) -> usize {
        usize::from(self.0 - 1)
    }
}

impl fmt::Display for RingIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Vertex label. The derived order (`N`, `S`, `U1..U5`, `L1..L5`) is the
/// model label order used for export.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    N,
    S,
    U(RingIndex),
    L(RingIndex),
}

impl Label {
    pub fn all() -> [Label; 12] {
        core::array::from_fn(Label::from_slot)
    }

    pub fn u(i: i64) -> Label {
        Label::U(RingIndex::new(i))
    }

    pub fn l(i: i64) -> Label {
        Label::L(RingIndex::new(i))
    }

    /// Position in [`Label::all`].
    pub fn slot(self) -> usize {
        match self {
            Label::N => 0,
            Label::S => 1,
            Label::U(i) => 2 + i.slot(),
            Label::L(i) => 7 + i.slot(),
        }
    }

    fn from_slot(k: usize) -> Label {
        match k {
            0 => Label::N,
            1 => Label::S,
            2..=6 => Label::U(RingIndex(k as u8 - 1)),
            _ => Label::L(RingIndex(k as u8 - 6)),
        }
    }

    pub fn is_pole(self) -> bool {
        matches!(self, Label::N | Label::S)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::N => f.write_str("N"),
            Label::S => f.write_str("S"),
            Label::U(i) => write!(f, "U{i}"),
            Label::L(i) => write!(f, "L{i}"),
        }
    }
}

/// Unordered pair of distinct labels, stored smaller-first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Label, Label);

impl Edge {
    pub fn new(a: Label, b: Label) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn endpoints(self) -> (Label, Label) {
        (self.0, self.1)
    }

    pub fn contains(self, l: Label) -> bool {
        self.0 == l || self.1 == l
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelError {
    NonPositiveEdgeLength,
    /// Ring structure does not admit the `U_i ~ L_i, U_i ~ L_{i−1}` indexing.
    LabelingInfeasible(String),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::NonPositiveEdgeLength => f.write_str("NonPositiveEdgeLength: edge length must be positive"),
            ModelError::LabelingInfeasible(why) => write!(f, "LabelingInfeasible: {why}"),
        }
    }
}

impl core::error::Error for ModelError {}

fn infeasible(why: &str) -> ModelError {
    ModelError::LabelingInfeasible(String::from(why))
}

/// Unlabeled standard model: twelve points with distance-derived adjacency.
#[derive(Clone, Debug)]
pub struct StandardModel {
    edge_length: GoldenRational,
    vertices: Vec<ExactVec3>,
    adjacency: Vec<Vec<bool>>,
    north: usize,
    south: usize,
}

/// Vertex indices (into [`StandardModel::vertices`]) of both rings in label order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingLabeling {
    pub upper: [usize; 5],
    pub lower: [usize; 5],
}

impl StandardModel {
    pub fn new(edge_length: GoldenRational) -> Result<Self, ModelError> {
        if !edge_length.is_positive() {
            return Err(ModelError::NonPositiveEdgeLength);
        }
        let half = edge_length.scale(&Rational::new(1.into(), 2.into()));
        let phi = GoldenRational::phi();
        let one = GoldenRational::one();
        let zero = GoldenRational::zero();

        let mut vertices = Vec::with_capacity(12);
        for s1 in [1i64, -1] {
            for s2 in [1i64, -1] {
                let a = one.scale(&Rational::from_integer(s1.into()));
                let b = phi.scale(&Rational::from_integer(s2.into()));
                vertices.push(ExactVec3::new(zero.clone(), a.clone(), b.clone()));
                vertices.push(ExactVec3::new(a.clone(), b.clone(), zero.clone()));
                vertices.push(ExactVec3::new(b, zero.clone(), a));
            }
        }
        let vertices: Vec<ExactVec3> = vertices.iter().map(|v| v.scale(&half)).collect();

        let sq_edge = &edge_length * &edge_length;
        let n = vertices.len();
        let mut adjacency = alloc::vec![alloc::vec![false; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                if vertices[i].sq_dist(&vertices[j]) == sq_edge {
                    adjacency[i][j] = true;
                    adjacency[j][i] = true;
                }
            }
        }

        let pole = ExactVec3::new(zero, one, phi).scale(&half);
        let north = vertices.iter().position(|v| *v == pole).expect("pole is a model vertex");
        let south = vertices.iter().position(|v| *v == -&pole).expect("antipode is a model vertex");

        Ok(Self { edge_length, vertices, adjacency, north, south })
    }

    pub fn edge_length(&self) -> &GoldenRational {
        &self.edge_length
    }

    pub fn vertices(&self) -> &[ExactVec3] {
        &self.vertices
    }

    pub fn north(&self) -> usize {
        self.north
    }

    pub fn south(&self) -> usize {
        self.south
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&j| self.adjacency[i][j]).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|row| row.iter().filter(|&&a| a).count()).sum::<usize>() / 2
    }

    /// Canonical labeling: `U1` is the sign-lexicographically smallest
    /// neighbor of `N`, `U2` the smaller of `U1`'s two ring neighbors.
    pub fn canonical_labeling(&self) -> Result<RingLabeling, ModelError> {
        let upper_ring = self.ring(self.north)?;
        let first = *upper_ring
            .iter()
            .min_by(|&&a, &&b| self.vertices[a].sign_lex_cmp(&self.vertices[b]))
            .ok_or_else(|| infeasible("empty upper ring"))?;
        let second = *self
            .ring_neighbors(first, &upper_ring)?
            .iter()
            .min_by(|&&a, &&b| self.vertices[a].sign_lex_cmp(&self.vertices[b]))
            .expect("two ring neighbors");

        let mut upper = [first; 5];
        upper[1] = second;
        for k in 2..5 {
            let nbrs = self.ring_neighbors(upper[k - 1], &upper_ring)?;
            upper[k] = if nbrs[0] == upper[k - 2] { nbrs[1] } else { nbrs[0] };
        }
        if !self.adjacency[upper[4]][upper[0]] || BTreeSet::from(upper).len() != 5 {
            return Err(infeasible("upper ring walk does not close into a 5-cycle"));
        }
        self.labeling_from_upper_cycle(upper)
    }

    /// Completes a labeling from a cyclic order of the upper ring, forcing
    /// `L_i` to be the common lower neighbor of `U_i` and `U_{i+1}`.
    pub fn labeling_from_upper_cycle(&self, upper: [usize; 5]) -> Result<RingLabeling, ModelError> {
        let upper_ring = self.ring(self.north)?;
        let lower_ring = self.ring(self.south)?;
        if BTreeSet::from(upper) != upper_ring.iter().copied().collect() {
            return Err(infeasible("upper cycle is not the neighbor set of N"));
        }
        let mut lower = [0usize; 5];
        for i in 0..5 {
            let next = upper[(i + 1) % 5];
            if !self.adjacency[upper[i]][next] {
                return Err(infeasible("consecutive upper vertices are not adjacent"));
            }
            let common: Vec<usize> = lower_ring
                .iter()
                .copied()
                .filter(|&l| self.adjacency[upper[i]][l] && self.adjacency[next][l])
                .collect();
            if common.len() != 1 {
                return Err(infeasible("consecutive upper vertices lack a unique common lower neighbor"));
            }
            lower[i] = common[0];
        }
        let labeling = RingLabeling { upper, lower };
        self.check_contract(&labeling, &lower_ring)?;
        Ok(labeling)
    }

    fn check_contract(&self, lab: &RingLabeling, lower_ring: &[usize]) -> Result<(), ModelError> {
        if BTreeSet::from(lab.lower) != lower_ring.iter().copied().collect() {
            return Err(infeasible("lower labels do not cover the neighbor set of S"));
        }
        for i in 0..5 {
            let u = lab.upper[i];
            let lower_nbrs: BTreeSet<usize> =
                lower_ring.iter().copied().filter(|&l| self.adjacency[u][l]).collect();
            let expected = BTreeSet::from([lab.lower[i], lab.lower[(i + 4) % 5]]);
            if lower_nbrs != expected {
                return Err(infeasible("U_i must be adjacent to exactly L_i and L_{i-1}"));
            }
            if !self.adjacency[lab.lower[i]][lab.lower[(i + 1) % 5]] {
                return Err(infeasible("lower ring is not a 5-cycle in label order"));
            }
        }
        Ok(())
    }

    /// Neighbors of a pole; must be five vertices disjoint from both poles.
    fn ring(&self, pole: usize) -> Result<Vec<usize>, ModelError> {
        let ring = self.neighbors(pole);
        if ring.len() != 5 || ring.contains(&self.north) || ring.contains(&self.south) {
            return Err(infeasible("pole does not have five ring neighbors"));
        }
        Ok(ring)
    }

    fn ring_neighbors(&self, v: usize, ring: &[usize]) -> Result<[usize; 2], ModelError> {
        let nbrs: Vec<usize> = ring.iter().copied().filter(|&w| self.adjacency[v][w]).collect();
        match nbrs.as_slice() {
            [a, b] => Ok([*a, *b]),
            _ => Err(infeasible("ring vertex does not have two ring neighbors")),
        }
    }

    /// Attach labels, checking every structural invariant of the result.
    pub fn into_labeled(self, labeling: &RingLabeling) -> Result<LabeledIcosahedron, ModelError> {
        let lower_ring = self.ring(self.south)?;
        self.check_contract(labeling, &lower_ring)?;
        let mut order = [0usize; 12];
        order[0] = self.north;
        order[1] = self.south;
        order[2..7].copy_from_slice(&labeling.upper);
        order[7..12].copy_from_slice(&labeling.lower);
        if BTreeSet::from(order).len() != 12 {
            return Err(infeasible("labels do not cover twelve distinct vertices"));
        }

        let vertices: [ExactVec3; 12] = core::array::from_fn(|k| self.vertices[order[k]].clone());
        let labels = Label::all();
        let mut edges = BTreeSet::new();
        for a in 0..12 {
            for b in (a + 1)..12 {
                if self.adjacency[order[a]][order[b]] {
                    edges.insert(Edge::new(labels[a], labels[b]));
                }
            }
        }
        let axis = &vertices[0] - &vertices[1];
        let model = LabeledIcosahedron { edge_length: self.edge_length, vertices, edges, axis };
        model.check_invariants()?;
        Ok(model)
    }
}

/// Regular icosahedron with the `N, S, U1..U5, L1..L5` labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledIcosahedron {
    edge_length: GoldenRational,
    vertices: [ExactVec3; 12],
    edges: BTreeSet<Edge>,
    axis: ExactVec3,
}

impl LabeledIcosahedron {
    pub fn edge_length(&self) -> &GoldenRational {
        &self.edge_length
    }

    pub fn sq_edge_length(&self) -> GoldenRational {
        &self.edge_length * &self.edge_length
    }

    pub fn vertex(&self, label: Label) -> &ExactVec3 {
        &self.vertices[label.slot()]
    }

    /// Vertices in label order (`N`, `S`, `U1..U5`, `L1..L5`).
    pub fn vertices(&self) -> impl Iterator<Item = (Label, &ExactVec3)> {
        Label::all().into_iter().zip(self.vertices.iter())
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn is_adjacent(&self, a: Label, b: Label) -> bool {
        a != b && self.edges.contains(&Edge::new(a, b))
    }

    pub fn neighbors(&self, l: Label) -> Vec<Label> {
        Label::all().into_iter().filter(|&m| self.is_adjacent(l, m)).collect()
    }

    /// Direction `N − S`.
    pub fn axis(&self) -> &ExactVec3 {
        &self.axis
    }

    /// Center `O`, the origin of the model frame.
    pub fn center(&self) -> ExactVec3 {
        ExactVec3::zero()
    }

    fn check_invariants(&self) -> Result<(), ModelError> {
        let sq_edge = self.sq_edge_length();
        if self.edges.len() != 30 {
            return Err(infeasible("adjacency does not have 30 edges"));
        }
        if Label::all().iter().any(|&l| self.neighbors(l).len() != 5) {
            return Err(infeasible("a vertex does not have degree 5"));
        }
        if self.edges.iter().any(|e| {
            let (a, b) = e.endpoints();
            self.vertex(a).sq_dist(self.vertex(b)) != sq_edge
        }) {
            return Err(infeasible("an adjacent pair is not at distance ℓ"));
        }
        if self.is_adjacent(Label::N, Label::S) || *self.vertex(Label::S) != -self.vertex(Label::N) {
            return Err(infeasible("poles are not antipodal"));
        }
        let upper: Vec<Label> = RingIndex::all().into_iter().map(Label::U).collect();
        let lower: Vec<Label> = RingIndex::all().into_iter().map(Label::L).collect();
        if self.neighbors(Label::N) != upper || self.neighbors(Label::S) != lower {
            return Err(infeasible("rings are not the pole neighborhoods"));
        }
        Ok(())
    }
}

/// Twelve labeled vertices at edge length `edge_length`, canonically labeled.
pub fn build_icosahedron(edge_length: GoldenRational) -> Result<LabeledIcosahedron, ModelError> {
    let model = StandardModel::new(edge_length)?;
    let labeling = ring_labeling(&model)?;
    model.into_labeled(&labeling)
}

/// Deterministic cyclic labeling of both rings.
pub fn ring_labeling(model: &StandardModel) -> Result<RingLabeling, ModelError> {
    model.canonical_labeling()
}
