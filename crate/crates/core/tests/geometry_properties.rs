use geowind_core::exact_geometry::{orient3d, orient3d_det, vec_dot, vec_sq_dist, ExactVec3};
use geowind_core::golden_field::{GoldenRational, Rational, Sign};
use geowind_core::icosa_model::build_icosahedron;
use proptest::prelude::*;

fn coord() -> impl Strategy<Value = GoldenRational> {
    ((-9i64..=9, 1i64..=4), (-9i64..=9, 1i64..=4)).prop_map(|((a, ad), (b, bd))| {
        GoldenRational::new(Rational::new(a.into(), ad.into()), Rational::new(b.into(), bd.into()))
    })
}

fn point() -> impl Strategy<Value = ExactVec3> {
    (coord(), coord(), coord()).prop_map(|(x, y, z)| ExactVec3::new(x, y, z))
}

fn det_f64(a: [f64; 3], b: [f64; 3], c: [f64; 3], d: [f64; 3]) -> f64 {
    let u = [b[0] - a[0], b[1] - a[1], b[2] - a[2]];
    let v = [c[0] - a[0], c[1] - a[1], c[2] - a[2]];
    let w = [d[0] - a[0], d[1] - a[1], d[2] - a[2]];
    u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) + u[2] * (v[0] * w[1] - v[1] * w[0])
}

#[test]
fn orient3d_matches_float_oracle_on_icosahedron() {
    let m = build_icosahedron(GoldenRational::from_integer(2)).unwrap();
    let pts: Vec<&ExactVec3> = m.vertices().map(|(_, v)| v).collect();
    let mut coplanar = 0;
    for a in 0..12 {
        for b in a + 1..12 {
            for c in b + 1..12 {
                for d in c + 1..12 {
                    let exact = orient3d(pts[a], pts[b], pts[c], pts[d]);
                    let f = det_f64(pts[a].to_f64(), pts[b].to_f64(), pts[c].to_f64(), pts[d].to_f64());
                    // entries are O(1); rounding error stays far below this margin
                    if f.abs() < 1e-9 {
                        assert_eq!(exact, Sign::Zero, "{a} {b} {c} {d}: {f}");
                        coplanar += 1;
                    } else {
                        let want = if f > 0.0 { Sign::Positive } else { Sign::Negative };
                        assert_eq!(exact, want);
                    }
                }
            }
        }
    }
    // both rings and several golden rectangles are coplanar quadruples
    assert!(coplanar > 0);
}

proptest! {
    #[test]
    fn sq_dist_is_dot_of_difference(u in point(), v in point()) {
        let d = &u - &v;
        prop_assert_eq!(vec_sq_dist(&u, &v), vec_dot(&d, &d));
    }

    #[test]
    fn orient3d_antisymmetry(a in point(), b in point(), c in point(), d in point()) {
        let s = orient3d(&a, &b, &c, &d);
        prop_assert_eq!(orient3d(&b, &a, &c, &d), -s);
        prop_assert_eq!(orient3d(&c, &b, &a, &d), -s);
        prop_assert_eq!(orient3d(&a, &d, &c, &b), -s);
        prop_assert_eq!(orient3d(&a, &b, &c, &d), s);
        prop_assert_eq!(orient3d_det(&a, &b, &c, &d), orient3d_det(&a, &b, &c, &d));
    }
}
