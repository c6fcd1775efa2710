use alloc::vec::Vec;

use crate::golden_field::GoldenRational;
use crate::icosa_model::{Edge, Label, LabeledIcosahedron};
use crate::wing_set::Pole;

/// Pole-anchored triangle `(pole, X, Y)` with `X < Y` ring vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Candidate {
    pub pole: Pole,
    pub vertices: [Label; 3],
}

impl Candidate {
    pub fn edges(&self) -> [Edge; 3] {
        let [a, b, c] = self.vertices;
        [Edge::new(a, b), Edge::new(a, c), Edge::new(b, c)]
    }

    pub fn uses(&self, l: Label) -> bool {
        self.vertices.contains(&l)
    }

    fn edge_mask(&self) -> u128 {
        self.edges().iter().fold(0, |m, e| m | 1u128 << edge_bit(*e))
    }
}

fn edge_bit(e: Edge) -> u32 {
    let (a, b) = e.endpoints();
    let (a, b) = (a.slot(), b.slot());
    // index of the pair among the 66 pairs of twelve labels
    (a * (23 - a) / 2 + (b - a - 1)) as u32
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalityCheck {
    pub pass: bool,
    pub south_candidates: usize,
    pub north_candidates: usize,
    pub max_per_south: usize,
    pub max_per_north: usize,
    pub max_total: usize,
    /// Informational: the same search with every pole-anchored triangle
    /// admitted, regardless of shape.
    pub unconstrained_candidates: usize,
    pub unconstrained_max_total: usize,
}

fn ring_labels() -> impl Iterator<Item = Label> {
    Label::all().into_iter().filter(|l| !l.is_pole())
}

/// Every `(pole, X, Y)` over the ten ring vertices.
pub fn all_pole_triangles(pole: Pole) -> Vec<Candidate> {
    let ring: Vec<Label> = ring_labels().collect();
    let mut out = Vec::new();
    for (i, &x) in ring.iter().enumerate() {
        for &y in &ring[i + 1..] {
            out.push(Candidate { pole, vertices: [pole.label(), x, y] });
        }
    }
    out
}

/// Pole-anchored triangles whose exact squared sides are `{ℓ², ℓ², φ²ℓ²}`.
pub fn gnomon_candidates(model: &LabeledIcosahedron, pole: Pole) -> Vec<Candidate> {
    let sq_edge = model.sq_edge_length();
    let phi = GoldenRational::phi();
    let mut expected = [sq_edge.clone(), sq_edge.clone(), &(&phi * &phi) * &sq_edge];
    expected.sort();
    all_pole_triangles(pole)
        .into_iter()
        .filter(|c| {
            let mut sides = c.edges().map(|e| {
                let (a, b) = e.endpoints();
                model.vertex(a).sq_dist(model.vertex(b))
            });
            sides.sort();
            sides == expected
        })
        .collect()
}

/// Size of the largest pairwise edge-disjoint subset, by exhaustive
/// branch and bound.
///
/// The bound uses that every candidate spends two edges at its pole, and
/// a pole has at most ten such edges.
pub fn max_edge_disjoint(candidates: &[Candidate]) -> usize {
    let masks: Vec<u128> = candidates.iter().map(Candidate::edge_mask).collect();
    let pole_masks: [u128; 2] = [Pole::South, Pole::North].map(|p| {
        ring_labels().fold(0, |m, l| m | 1u128 << edge_bit(Edge::new(p.label(), l)))
    });
    let mut search = Search { masks: &masks, pole_masks, best: 0 };
    search.run(0, 0, 0);
    search.best
}

struct Search<'a> {
    masks: &'a [u128],
    pole_masks: [u128; 2],
    best: usize,
}

impl Search<'_> {
    fn run(&mut self, next: usize, used: u128, chosen: usize) {
        if chosen > self.best {
            self.best = chosen;
        }
        let remaining = self.masks.len() - next;
        let pole_room: usize = self
            .pole_masks
            .iter()
            .map(|pm| (pm & !used).count_ones() as usize / 2)
            .sum();
        if chosen + remaining.min(pole_room) <= self.best {
            return;
        }
        let mask = self.masks[next];
        if mask & used == 0 {
            self.run(next + 1, used | mask, chosen + 1);
        }
        self.run(next + 1, used, chosen);
    }
}

/// No pole admits more than five edge-disjoint gnomon faces and both poles
/// together no more than ten.
pub fn check_maximality(model: &LabeledIcosahedron) -> MaximalityCheck {
    let south = gnomon_candidates(model, Pole::South);
    let north = gnomon_candidates(model, Pole::North);
    let joint: Vec<Candidate> = south.iter().chain(north.iter()).copied().collect();
    let max_per_south = max_edge_disjoint(&south);
    let max_per_north = max_edge_disjoint(&north);
    let max_total = max_edge_disjoint(&joint);

    let unconstrained: Vec<Candidate> = all_pole_triangles(Pole::South)
        .into_iter()
        .chain(all_pole_triangles(Pole::North))
        .collect();
    let unconstrained_max_total = max_edge_disjoint(&unconstrained);

    MaximalityCheck {
        pass: max_per_south == 5 && max_per_north == 5 && max_total == 10,
        south_candidates: south.len(),
        north_candidates: north.len(),
        max_per_south,
        max_per_north,
        max_total,
        unconstrained_candidates: unconstrained.len(),
        unconstrained_max_total,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::icosa_model::build_icosahedron;

    /// Plain subset enumeration, independent of the branch and bound.
    fn brute_force(c: &[Candidate]) -> usize {
        let mut best = 0;
        for subset in 0u32..(1 << c.len()) {
            let chosen: Vec<&Candidate> =
                (0..c.len()).filter(|k| subset >> k & 1 == 1).map(|k| &c[k]).collect();
            let mut edges: Vec<Edge> = chosen.iter().flat_map(|x| x.edges()).collect();
            let n = edges.len();
            edges.sort();
            edges.dedup();
            if edges.len() == n {
                best = best.max(chosen.len());
            }
        }
        best
    }

    #[test]
    fn edge_bits_are_distinct() {
        let labels = Label::all();
        let mut bits = Vec::new();
        for i in 0..12 {
            for j in i + 1..12 {
                bits.push(edge_bit(Edge::new(labels[i], labels[j])));
            }
        }
        bits.sort();
        bits.dedup();
        assert_eq!(bits.len(), 66);
    }

    #[test]
    fn candidate_universe() {
        let m = build_icosahedron(GoldenRational::one()).unwrap();
        // five (S, U, L) pairs per ring direction plus five (S, L, L) diagonals
        let south = gnomon_candidates(&m, Pole::South);
        assert_eq!(south.len(), 15);
        assert_eq!(south.iter().filter(|c| c.vertices[1..].iter().all(|l| matches!(l, Label::L(_)))).count(), 5);
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        let m = build_icosahedron(GoldenRational::one()).unwrap();
        let south = gnomon_candidates(&m, Pole::South);
        assert_eq!(brute_force(&south), 5);
        assert_eq!(max_edge_disjoint(&south), 5);
        let reduced: Vec<Candidate> = south.iter().copied().filter(|c| !c.uses(Label::u(3))).collect();
        assert_eq!(brute_force(&reduced), 4);
        assert_eq!(max_edge_disjoint(&reduced), 4);
    }

    #[test]
    fn canonical_model_is_maximal() {
        let m = build_icosahedron(GoldenRational::from_integer(2)).unwrap();
        let c = check_maximality(&m);
        assert!(c.pass);
        assert_eq!((c.max_per_south, c.max_per_north, c.max_total), (5, 5, 10));
        assert_eq!(c.unconstrained_candidates, 90);
        assert_eq!(c.unconstrained_max_total, 10);
    }

    #[test]
    fn order_independent() {
        let m = build_icosahedron(GoldenRational::one()).unwrap();
        let mut all: Vec<Candidate> = gnomon_candidates(&m, Pole::South);
        all.extend(gnomon_candidates(&m, Pole::North));
        let forward = max_edge_disjoint(&all);
        all.reverse();
        assert_eq!(max_edge_disjoint(&all), forward);
    }
}
