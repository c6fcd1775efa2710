use alloc::vec::Vec;

use super::rad_to_deg;
use super::shapes::cos_36;
use crate::exact_geometry::ExactVec3;
use crate::golden_field::{GoldenRational, Rational};
use crate::icosa_model::LabeledIcosahedron;
use crate::wing_set::{FaceName, Pole, WingSet};

#[derive(Clone, Debug, PartialEq)]
pub struct DecagonCheck {
    pub pass: bool,
    /// Every point satisfies `(p − O)·(N − S) = 0`.
    pub in_plane: bool,
    /// Every point has squared distance `φ²ℓ²/4` from `O`.
    pub on_circle: bool,
    /// Every angularly adjacent pair has cosine `φ/2`.
    pub regular_spacing: bool,
    /// Angular neighbors alternate between the south and north pentagons.
    pub interlaced: bool,
    pub expected_sq_radius: GoldenRational,
    pub sq_radius: GoldenRational,
    pub radius_float: f64,
    pub adjacent_cos: GoldenRational,
    pub spacing_deg_float: f64,
    /// Faces in angular order about the axis.
    pub angular_order: Vec<FaceName>,
}

/// Cross-edge midpoints must form a regular decagon of radius `(φ/2)ℓ`
/// in the equatorial plane.
pub fn check_decagon(ws: &WingSet<'_>) -> DecagonCheck {
    let points: Vec<(FaceName, ExactVec3)> = ws
        .faces()
        .iter()
        .map(|f| (f.name(), ws.representative_point(f)))
        .collect();
    check_decagon_points(ws.model(), &points)
}

/// Same check over explicit points, each tagged with the face it stands for.
///
/// The angular order comes from float angles; correctness rests only on
/// the exact checks applied to that order.
pub fn check_decagon_points(model: &LabeledIcosahedron, points: &[(FaceName, ExactVec3)]) -> DecagonCheck {
    let center = model.center();
    let axis = model.axis();
    let phi = GoldenRational::phi();
    let expected_sq_radius = (&(&phi * &phi) * &model.sq_edge_length()).scale(&Rational::new(1.into(), 4.into()));

    let rel: Vec<ExactVec3> = points.iter().map(|(_, p)| p - &center).collect();
    let in_plane = rel.iter().all(|p| p.dot(axis).is_zero());
    let on_circle = rel.iter().all(|p| p.sq_norm() == expected_sq_radius);

    let order = angular_order(&rel, axis);
    let expected_dot = &cos_36() * &expected_sq_radius;
    let n = order.len();
    let pairs: Vec<(usize, usize)> = (0..n).map(|k| (order[k], order[(k + 1) % n])).collect();
    let regular_spacing = n == 10 && pairs.iter().all(|&(i, j)| rel[i].dot(&rel[j]) == expected_dot);
    let interlaced = n == 10 && pairs.iter().all(|&(i, j)| points[i].0.pole != points[j].0.pole);
    let south = points.iter().filter(|(f, _)| f.pole == Pole::South).count();
    let balanced = south * 2 == n;

    let sq_radius = rel.first().map(ExactVec3::sq_norm).unwrap_or_default();
    let radius_float = match sq_radius.sqrt_exact() {
        Some(r) => r.to_f64(),
        None => libm::sqrt(sq_radius.to_f64()),
    };
    // first offending pair when spacing fails, otherwise the common value
    let (ci, cj) = pairs
        .iter()
        .copied()
        .find(|&(i, j)| rel[i].dot(&rel[j]) != expected_dot)
        .or_else(|| pairs.first().copied())
        .unwrap_or((0, 0));
    let adjacent_cos = if pairs.is_empty() {
        GoldenRational::zero()
    } else {
        normalized_cos(&rel[ci], &rel[cj])
    };
    let spacing_deg_float = rad_to_deg(libm::acos(adjacent_cos.to_f64().clamp(-1.0, 1.0)));

    DecagonCheck {
        pass: in_plane && on_circle && regular_spacing && interlaced && balanced,
        in_plane,
        on_circle,
        regular_spacing,
        interlaced,
        expected_sq_radius,
        sq_radius,
        radius_float,
        adjacent_cos,
        spacing_deg_float,
        angular_order: order.iter().map(|&k| points[k].0).collect(),
    }
}

fn normalized_cos(u: &ExactVec3, v: &ExactVec3) -> GoldenRational {
    let dot = u.dot(v);
    match (&u.sq_norm() * &v.sq_norm()).sqrt_exact() {
        Some(len) => dot.checked_div(&len).unwrap_or_default(),
        None => GoldenRational::zero(),
    }
}

/// Indices sorted by angle about `axis`, measured from the first point's
/// in-plane component.
fn angular_order(points: &[ExactVec3], axis: &ExactVec3) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    let Some(first) = points.first() else {
        return idx;
    };
    let along = first.dot(axis).checked_div(&axis.sq_norm()).unwrap_or_default();
    let e1 = first - &axis.scale(&along);
    let e2 = axis.cross(&e1);
    let angle = |p: &ExactVec3| {
        let a = libm::atan2(p.dot(&e2).to_f64(), p.dot(&e1).to_f64());
        if a < 0.0 {
            a + 2.0 * core::f64::consts::PI
        } else {
            a
        }
    };
    let angles: Vec<f64> = points.iter().map(angle).collect();
    idx.sort_by(|&a, &b| angles[a].total_cmp(&angles[b]).then(a.cmp(&b)));
    idx
}
