use alloc::vec::Vec;

use super::rad_to_deg;
use crate::golden_field::{GoldenRational, Rational};
use crate::wing_set::{FaceName, WingFace, WingSet};

#[derive(Clone, Debug, PartialEq)]
pub struct FaceShape {
    pub face: FaceName,
    /// Squared length of the side opposite each vertex.
    pub sq_sides: [GoldenRational; 3],
    /// Law-of-cosines cosine at each vertex; `None` when it leaves Q(√5).
    pub cos_angles: [Option<GoldenRational>; 3],
    /// Display only, derived from the exact cosines when present.
    pub angles_deg_float: [f64; 3],
    pub pole_angle_is_36: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ShapeCheck {
    pub pass: bool,
    pub per_face: Vec<FaceShape>,
}

/// cos 36° = φ/2.
pub fn cos_36() -> GoldenRational {
    GoldenRational::phi().scale(&Rational::new(1.into(), 2.into()))
}

/// cos 108° = (1 − φ)/2.
pub fn cos_108() -> GoldenRational {
    (GoldenRational::one() - GoldenRational::phi()).scale(&Rational::new(1.into(), 2.into()))
}

/// Every face must be a golden gnomon with sides `(ℓ, ℓ, φℓ)`, cosines
/// `(φ/2, φ/2, (1−φ)/2)`, and a 36° angle at its pole vertex.
pub fn check_face_shapes(ws: &WingSet<'_>) -> ShapeCheck {
    let sq_edge = ws.model().sq_edge_length();
    let phi = GoldenRational::phi();
    let sq_long = &(&phi * &phi) * &sq_edge;
    let mut expected_sides = [sq_edge.clone(), sq_edge, sq_long];
    expected_sides.sort();
    let mut expected_cos = [cos_36(), cos_36(), cos_108()];
    expected_cos.sort();

    let per_face: Vec<FaceShape> = ws
        .faces()
        .iter()
        .map(|f| face_shape(ws, f, &expected_sides, &expected_cos))
        .collect();
    ShapeCheck { pass: per_face.iter().all(|f| f.pass), per_face }
}

fn face_shape(
    ws: &WingSet<'_>,
    face: &WingFace,
    expected_sides: &[GoldenRational; 3],
    expected_cos: &[GoldenRational; 3],
) -> FaceShape {
    let p = ws.face_coordinates(face);
    let sq_sides: [GoldenRational; 3] =
        core::array::from_fn(|k| p[(k + 1) % 3].sq_dist(p[(k + 2) % 3]));
    let cos_angles: [Option<GoldenRational>; 3] = core::array::from_fn(|k| {
        let opposite = &sq_sides[k];
        let b = &sq_sides[(k + 1) % 3];
        let c = &sq_sides[(k + 2) % 3];
        // cos = (b² + c² − a²) / (2·|b|·|c|), with |b|·|c| = sqrt(b²c²)
        let len_product = (b * c).sqrt_exact()?;
        let denom = &len_product + &len_product;
        (&(b + c) - opposite).checked_div(&denom).ok()
    });
    let angles_deg_float: [f64; 3] = core::array::from_fn(|k| match &cos_angles[k] {
        Some(c) => rad_to_deg(libm::acos(c.to_f64())),
        None => {
            let a = sq_sides[k].to_f64();
            let b = sq_sides[(k + 1) % 3].to_f64();
            let c = sq_sides[(k + 2) % 3].to_f64();
            rad_to_deg(libm::acos((b + c - a) / (2.0 * libm::sqrt(b * c))))
        }
    });

    let mut sorted_sides = sq_sides.clone();
    sorted_sides.sort();
    let cos_ok = match &cos_angles {
        [Some(a), Some(b), Some(c)] => {
            let mut sorted = [a.clone(), b.clone(), c.clone()];
            sorted.sort();
            &sorted == expected_cos
        }
        _ => false,
    };
    let anchored = face.vertices()[0] == face.pole().label();
    let pole_angle_is_36 = anchored && cos_angles[0].as_ref() == Some(&cos_36());
    let pass = &sorted_sides == expected_sides && cos_ok && pole_angle_is_36;

    FaceShape {
        face: face.name(),
        sq_sides,
        cos_angles,
        angles_deg_float,
        pole_angle_is_36,
        pass,
    }
}
