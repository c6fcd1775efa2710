//! Exact orientation predicates and open-interior triangle overlap.
//!
//! Everything is evaluated in Q(√5), so shared vertices and shared edges
//! are classified exactly; only overlap of open interiors counts.

use crate::exact_geometry::ExactVec3;
use crate::golden_field::{GoldenRational, Sign};

/// Coordinate axis dropped when projecting a plane to 2D.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// `det[b − a, c − a, d − a]`, six times the signed tetrahedron volume.
pub fn orient3d_det(a: &ExactVec3, b: &ExactVec3, c: &ExactVec3, d: &ExactVec3) -> GoldenRational {
    let ab = b - a;
    let ac = c - a;
    let ad = d - a;
    ab.dot(&ac.cross(&ad))
}

/// Sign of `det[b − a, c − a, d − a]`; zero iff the four points are coplanar.
pub fn orient3d(a: &ExactVec3, b: &ExactVec3, c: &ExactVec3, d: &ExactVec3) -> Sign {
    orient3d_det(a, b, c, d).sign()
}

fn project(p: &ExactVec3, drop: Axis) -> (&GoldenRational, &GoldenRational) {
    match drop {
        Axis::X => (&p.y, &p.z),
        Axis::Y => (&p.z, &p.x),
        Axis::Z => (&p.x, &p.y),
    }
}

/// 2D orientation of `a, b, c` after dropping `drop`.
pub fn orient2d(a: &ExactVec3, b: &ExactVec3, c: &ExactVec3, drop: Axis) -> Sign {
    let (ax, ay) = project(a, drop);
    let (bx, by) = project(b, drop);
    let (cx, cy) = project(c, drop);
    let det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    det.sign()
}

fn dominant_axis(n: &ExactVec3) -> Axis {
    let (x, y, z) = (n.x.abs(), n.y.abs(), n.z.abs());
    if x >= y && x >= z {
        Axis::X
    } else if y >= z {
        Axis::Y
    } else {
        Axis::Z
    }
}

fn normal(t: [&ExactVec3; 3]) -> ExactVec3 {
    (t[1] - t[0]).cross(&(t[2] - t[0]))
}

/// True iff the open interiors of the two triangles share a point.
///
/// Degenerate (zero-area) triangles have empty interiors and never intersect.
pub fn triangle_interiors_intersect(t1: [&ExactVec3; 3], t2: [&ExactVec3; 3]) -> bool {
    let n1 = normal(t1);
    let n2 = normal(t2);
    if n1.is_zero() || n2.is_zero() {
        return false;
    }

    let d1: [GoldenRational; 3] = core::array::from_fn(|k| orient3d_det(t2[0], t2[1], t2[2], t1[k]));
    if d1.iter().all(GoldenRational::is_zero) {
        return coplanar_interiors_intersect(t1, t2, dominant_axis(&n1));
    }
    if !straddles(&d1) {
        return false;
    }
    let d2: [GoldenRational; 3] = core::array::from_fn(|k| orient3d_det(t1[0], t1[1], t1[2], t2[k]));
    if !straddles(&d2) {
        return false;
    }

    // Both triangles cut the common line of their planes through their
    // interiors; compare the two open parameter intervals along it.
    let dir = n1.cross(&n2);
    let (lo1, hi1) = line_interval(t1, &d1, &dir);
    let (lo2, hi2) = line_interval(t2, &d2, &dir);
    let lo = if lo1 > lo2 { lo1 } else { lo2 };
    let hi = if hi1 < hi2 { hi1 } else { hi2 };
    lo < hi
}

/// Vertices lie strictly on both sides of the other plane.
fn straddles(d: &[GoldenRational; 3]) -> bool {
    d.iter().any(GoldenRational::is_positive) && d.iter().any(GoldenRational::is_negative)
}

/// Parameter interval (along `dir`) of the chord where a triangle meets the
/// other triangle's plane, given the vertices' plane determinants.
fn line_interval(
    t: [&ExactVec3; 3],
    d: &[GoldenRational; 3],
    dir: &ExactVec3,
) -> (GoldenRational, GoldenRational) {
    let mut params = alloc::vec::Vec::with_capacity(3);
    for i in 0..3 {
        if d[i].is_zero() {
            params.push(dir.dot(t[i]));
        }
        let j = (i + 1) % 3;
        if d[i].sign().as_i8() * d[j].sign().as_i8() < 0 {
            // crossing point p_i + (p_j − p_i)·d_i/(d_i − d_j)
            let w = &d[i] / &(&d[i] - &d[j]);
            let p = t[i] + &(t[j] - t[i]).scale(&w);
            params.push(dir.dot(&p));
        }
    }
    let lo = params.iter().min().cloned().expect("chord has endpoints");
    let hi = params.iter().max().cloned().expect("chord has endpoints");
    (lo, hi)
}

fn coplanar_interiors_intersect(t1: [&ExactVec3; 3], t2: [&ExactVec3; 3], drop: Axis) -> bool {
    !has_separating_edge(t1, t2, drop) && !has_separating_edge(t2, t1, drop)
}

/// Some edge line of `a` weakly separates `b` from `a`'s third vertex.
fn has_separating_edge(a: [&ExactVec3; 3], b: [&ExactVec3; 3], drop: Axis) -> bool {
    (0..3).any(|i| {
        let p = a[i];
        let q = a[(i + 1) % 3];
        let r = a[(i + 2) % 3];
        let inside = orient2d(p, q, r, drop).as_i8();
        b.iter().all(|v| orient2d(p, q, v, drop).as_i8() * inside <= 0)
    })
}
