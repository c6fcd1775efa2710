//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use geowind::{export_mesh, export_report, ExportFormat, ExportOptions};
use geowind_core::exact_geometry::{triangle_interiors_intersect, vec_sq_dist};
use geowind_core::validators::{
    check_decagon, check_edge_disjoint, check_face_shapes, check_maximality, check_non_intersection,
    gnomon_candidates, max_edge_disjoint, run_all,
};
use geowind_core::{
    build_icosahedron, generate_wing_set, ExactVec3, GoldenRational, Label, Pole, RingIndex, WingFace, WingSet,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, format!("took {elapsed:?}, limit {limit:?}"))
}

fn g(n: i64) -> GoldenRational {
    GoldenRational::from_integer(n)
}

fn half() -> GoldenRational {
    GoldenRational::from_fraction(1, 2)
}

fn golden_powers_hold() -> Result<(), u32> {
    let phi = GoldenRational::phi();
    let sq = &phi * &phi;
    let succ = &phi + &g(1);
    if sq != succ || sq.rational_part() != succ.rational_part() || sq.sqrt5_part() != succ.sqrt5_part() {
        return Err(2);
    }
    let (mut f_prev, mut f) = (0i64, 1i64);
    for n in 1..=10u32 {
        if phi.pow(n) != &(&phi * &g(f)) + &g(f_prev) {
            return Err(n);
        }
        (f_prev, f) = (f, f + f_prev);
    }
    Ok(())
}

fn golden_identity() -> Outcome {
    let mut best = Duration::MAX;
    for _ in 0..5 {
        let start = Instant::now();
        let result = golden_powers_hold();
        best = best.min(start.elapsed());
        result.map_err(|n| format!("phi^{n} does not match"))?;
    }
    within(best, Duration::from_millis(1))?;
    Ok(format!("phi^2 = phi + 1, phi^n = F(n)phi + F(n-1) for n <= 10 ({best:?}, best of 5)"))
}

fn squared_distances() -> Outcome {
    let phi = GoldenRational::phi();
    let model = build_icosahedron(g(2)).map_err(|e| e.to_string())?;
    let n = ExactVec3::new(g(0), g(1), phi.clone());
    let s = -&n;
    let u = ExactVec3::new(g(1), phi.clone(), g(0));
    ensure(model.vertex(Label::N) == &n && model.vertex(Label::S) == &s, "pole coordinates differ at edge length 2")?;
    ensure(model.vertices().any(|(_, v)| v == &u), "(1, phi, 0) is not a model vertex")?;
    let d_nu = vec_sq_dist(&n, &u);
    let d_su = vec_sq_dist(&s, &u);
    ensure(d_nu == g(4), format!("|N-U|^2 = {d_nu}"))?;
    let expected = &(&g(4) * &phi) + &g(4);
    ensure(d_su == expected, format!("|S-U|^2 = {d_su}"))?;
    Ok(format!("|N-U|^2 = {d_nu}, |S-U|^2 = {d_su}"))
}

fn face_shape() -> Outcome {
    let model = build_icosahedron(g(1)).map_err(|e| e.to_string())?;
    let ws = generate_wing_set(&model);
    let check = check_face_shapes(&ws);
    let phi = GoldenRational::phi();
    let mut sides = vec![g(1), g(1), &phi * &phi];
    sides.sort();
    let c36 = &phi * &half();
    let c108 = &(&g(1) - &phi) * &half();
    let mut cosines = vec![c36.clone(), c36.clone(), c108];
    cosines.sort();
    ensure(check.per_face.len() == 10, "expected ten faces")?;
    let mut worst = 0.0f64;
    for f in &check.per_face {
        let mut got_sides = f.sq_sides.to_vec();
        got_sides.sort();
        ensure(got_sides == sides, format!("{}: squared sides {got_sides:?}", f.face))?;
        let mut got_cos = f
            .cos_angles
            .iter()
            .map(|c| c.clone().ok_or(format!("{}: cosine outside Q(sqrt5)", f.face)))
            .collect::<Result<Vec<_>, _>>()?;
        let at_pole = got_cos[0].clone();
        got_cos.sort();
        ensure(got_cos == cosines, format!("{}: cosines {got_cos:?}", f.face))?;
        ensure(at_pole == c36, format!("{}: pole angle is not 36 degrees", f.face))?;
        let mut deg = f.angles_deg_float;
        deg.sort_by(f64::total_cmp);
        for (d, want) in deg.iter().zip([36.0, 36.0, 108.0]) {
            worst = worst.max((d - want).abs());
        }
    }
    ensure(worst <= 1e-12, format!("float angle error {worst:e} deg"))?;
    ensure(check.pass, "shape check reported failure")?;
    Ok(format!("10 golden gnomons, max float angle error {worst:e} deg"))
}

fn edge_disjointness() -> Outcome {
    let model = build_icosahedron(g(1)).map_err(|e| e.to_string())?;
    let ws = generate_wing_set(&model);
    let check = check_edge_disjoint(&ws);
    ensure(check.pass && check.distinct_edges == 30 && check.edge_slots == 30, format!("{check:?}"))?;

    let mut faces = ws.into_faces();
    let pos = faces.iter().position(|f| f.pole() == Pole::North && f.index() == RingIndex::new(2)).ok_or("no N2")?;
    faces[pos] = WingFace::new(Pole::North, RingIndex::new(2), [Label::N, Label::u(2), Label::l(2)]);
    let mutated = WingSet::from_faces(&model, faces);
    let bad = check_edge_disjoint(&mutated);
    ensure(!bad.pass, "mutated set accepted")?;
    let target = geowind_core::Edge::new(Label::u(2), Label::l(2));
    ensure(bad.duplicate_pairs.iter().any(|d| d.edge == target), format!("U2L2 not reported: {:?}", bad.duplicate_pairs))?;
    let dups: Vec<String> = bad.duplicate_pairs.iter().map(|d| d.edge.to_string()).collect();
    Ok(format!("30 distinct edges; mutated set rejected with duplicates [{}]", dups.join(", ")))
}

fn decagon_closure() -> Outcome {
    let start = Instant::now();
    let mut radius_line = String::new();
    for edge in [g(1), GoldenRational::from_fraction(7, 3)] {
        let model = build_icosahedron(edge.clone()).map_err(|e| e.to_string())?;
        let ws = generate_wing_set(&model);
        let phi = GoldenRational::phi();
        let expected_sq = &(&(&phi * &phi) * &(&edge * &edge)) * &GoldenRational::from_fraction(1, 4);
        let axis = model.axis();
        let points: Vec<(String, ExactVec3)> =
            ws.faces().iter().map(|f| (f.name().to_string(), ws.representative_point(f))).collect();
        for (name, p) in &points {
            ensure(p.dot(axis).is_zero(), format!("{name} midpoint off the equatorial plane"))?;
            ensure(p.sq_norm() == expected_sq, format!("{name} squared radius {}", p.sq_norm()))?;
        }
        let check = check_decagon(&ws);
        ensure(check.pass, format!("decagon check failed: {check:?}"))?;
        let ordered: Vec<&ExactVec3> = check
            .angular_order
            .iter()
            .map(|n| &points.iter().find(|(s, _)| *s == n.to_string()).expect("named face").1)
            .collect();
        ensure(ordered.len() == 10, "angular order is not ten points")?;
        let cos36 = &phi * &half();
        for k in 0..10 {
            let (a, b) = (ordered[k], ordered[(k + 1) % 10]);
            let cos = &a.dot(b) / &expected_sq;
            ensure(cos == cos36, format!("adjacent cosine {cos} at position {k}"))?;
        }
        if edge == g(1) {
            let r = format!("{:.9}", check.radius_float);
            ensure(r == "0.809016994", format!("radius {r}"))?;
            radius_line = r;
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(1))?;
    Ok(format!("coplanar, r^2 = phi^2 l^2 / 4, spacing cos = phi/2, r(l=1) = {radius_line} ({elapsed:?})"))
}

fn maximality_oracle() -> Outcome {
    let start = Instant::now();
    let model = build_icosahedron(g(1)).map_err(|e| e.to_string())?;
    let check = check_maximality(&model);
    ensure(check.max_per_south == 5 && check.max_per_north == 5 && check.max_total == 10, format!("{check:?}"))?;
    let reduced: Vec<_> =
        gnomon_candidates(&model, Pole::South).into_iter().filter(|c| !c.uses(Label::u(3))).collect();
    let reduced_max = max_edge_disjoint(&reduced);
    ensure(reduced_max == 4, format!("without U3 the south maximum is {reduced_max}"))?;
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(5))?;
    Ok(format!("5 south, 5 north, 10 total; 4 south without U3 ({elapsed:?})"))
}

fn non_intersection() -> Outcome {
    let model = build_icosahedron(g(1)).map_err(|e| e.to_string())?;
    let ws = generate_wing_set(&model);
    let check = check_non_intersection(&ws);
    ensure(check.pass && check.pairs_tested == 45 && check.offending_pairs.is_empty(), format!("{check:?}"))?;
    let sharing: Vec<_> = check.pairs.iter().filter(|p| p.shared_vertices > 0).collect();
    ensure(sharing.len() == check.vertex_sharing_pairs, "vertex-sharing count mismatch")?;
    ensure(sharing.iter().all(|p| !p.interiors_intersect), "a vertex-sharing pair was classified as intersecting")?;

    let mut faces = ws.into_faces();
    let dup = faces[0].clone();
    faces.push(dup);
    let doubled = WingSet::from_faces(&model, faces);
    let bad = check_non_intersection(&doubled);
    ensure(!bad.pass, "duplicated face accepted")?;
    let f = &doubled.faces()[0];
    ensure(
        triangle_interiors_intersect(doubled.face_coordinates(f), doubled.face_coordinates(f)),
        "face does not overlap itself",
    )?;
    Ok(format!("45 pairs clear, {} vertex-sharing pairs non-intersecting; duplicated face rejected", sharing.len()))
}

fn scale_invariance() -> Outcome {
    let edges = [g(1), g(2), GoldenRational::from_fraction(7, 3), g(1_000_000)];
    let mut baseline: Option<(GoldenRational, Vec<String>)> = None;
    for edge in edges {
        let model = build_icosahedron(edge.clone()).map_err(|e| e.to_string())?;
        let ws = generate_wing_set(&model);
        let r = run_all(&model, &ws);
        let flags = [
            r.edge_check.pass,
            r.shape_check.pass,
            r.decagon_check.pass,
            r.maximality_check.pass,
            r.intersection_check.pass,
            r.overall,
        ];
        ensure(flags.iter().all(|b| *b), format!("l = {edge}: {flags:?}"))?;
        let order: Vec<String> = r.decagon_check.angular_order.iter().map(ToString::to_string).collect();
        match &baseline {
            None => baseline = Some((r.decagon_check.adjacent_cos.clone(), order)),
            Some((cos, o)) => {
                ensure(*cos == r.decagon_check.adjacent_cos, format!("l = {edge}: spacing cosine changed"))?;
                ensure(*o == order, format!("l = {edge}: angular order changed"))?;
            }
        }
    }
    Ok("all checks pass identically for l in {1, 2, 7/3, 1000000}".to_string())
}

fn determinism() -> Outcome {
    let report_json = |edge: GoldenRational| -> Result<Vec<u8>, String> {
        let model = build_icosahedron(edge).map_err(|e| e.to_string())?;
        let ws = generate_wing_set(&model);
        let r = run_all(&model, &ws);
        let mut out = Vec::new();
        export_report(&r, &ws, &mut out).map_err(|e| e.to_string())?;
        Ok(out)
    };
    let a = report_json(GoldenRational::from_fraction(7, 3))?;
    let b = report_json(GoldenRational::from_fraction(7, 3))?;
    ensure(!a.is_empty() && a == b, "report JSON differs between runs")?;

    let mut worst = 0.0f64;
    for edge in [g(1), g(2), GoldenRational::from_fraction(7, 3), g(1_000_000)] {
        let model = build_icosahedron(edge).map_err(|e| e.to_string())?;
        let ws = generate_wing_set(&model);
        let mut obj = Vec::new();
        export_mesh(&ws, &ExportOptions::new(ExportFormat::Obj), &mut obj).map_err(|e| e.to_string())?;
        let text = String::from_utf8(obj).map_err(|e| e.to_string())?;
        let parsed: Vec<[f64; 3]> = text
            .lines()
            .filter_map(|l| l.strip_prefix("v "))
            .map(|l| {
                let v: Vec<f64> = l.split_whitespace().map(|t| t.parse().expect("float")).collect();
                [v[0], v[1], v[2]]
            })
            .collect();
        ensure(parsed.len() == 12, format!("{} vertex records", parsed.len()))?;
        for ((label, exact), got) in model.vertices().zip(&parsed) {
            for (want, have) in exact.to_f64().iter().zip(got) {
                let err = if *want == 0.0 { have.abs() } else { ((have - want) / want).abs() };
                ensure(err <= 1e-15, format!("{label}: {have} vs {want}"))?;
                worst = worst.max(err);
            }
        }
    }
    Ok(format!("byte-identical report JSON ({} bytes); OBJ round-trip max relative error {worst:e}", a.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("golden identity", golden_identity),
        ("squared distances", squared_distances),
        ("face shape", face_shape),
        ("edge disjointness", edge_disjointness),
        ("decagon closure", decagon_closure),
        ("maximality oracle", maximality_oracle),
        ("non-intersection", non_intersection),
        ("scale invariance", scale_invariance),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("acceptance {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("acceptance {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
