use std::io::Write;

use geowind_core::exact_geometry::orient3d_det;
use geowind_core::{Label, Sign, WingFace, WingSet};

use super::{edge_length_text, format_float, ExportError, ExportFormat, ExportOptions, TOOL_NAME, TOOL_VERSION};

/// Writes the twelve model vertices and ten faces as OBJ, or the ten faces
/// as ASCII STL facets.
pub fn export_mesh<W: Write + ?Sized>(ws: &WingSet<'_>, opts: &ExportOptions, out: &mut W) -> Result<(), ExportError> {
    opts.validate()?;
    match opts.format {
        ExportFormat::Obj => write_obj(ws, opts, out),
        ExportFormat::StlAscii => write_stl(ws, opts, out),
        other => Err(ExportError::UnsupportedFormat(other)),
    }
}

/// Face vertices wound so the geometric normal points away from `O`.
/// Faces whose plane contains `O` keep their stored order.
fn outward(ws: &WingSet<'_>, face: &WingFace) -> [Label; 3] {
    let [a, b, c] = face.vertices();
    let o = ws.model().center();
    let m = ws.model();
    match orient3d_det(&o, m.vertex(a), m.vertex(b), m.vertex(c)).sign() {
        Sign::Negative => [a, c, b],
        _ => [a, b, c],
    }
}

fn point(ws: &WingSet<'_>, opts: &ExportOptions, l: Label) -> [f64; 3] {
    opts.frame().apply(ws.model().vertex(l).to_f64())
}

fn coords(p: [f64; 3], digits: usize) -> String {
    p.iter().map(|v| format_float(*v, digits)).collect::<Vec<_>>().join(" ")
}

fn write_obj<W: Write + ?Sized>(ws: &WingSet<'_>, opts: &ExportOptions, out: &mut W) -> Result<(), ExportError> {
    let model = ws.model();
    writeln!(out, "# {TOOL_NAME} {TOOL_VERSION}")?;
    writeln!(out, "# edge_length {}", edge_length_text(model.edge_length()))?;
    writeln!(out, "# frame: {}", opts.frame().describe())?;
    writeln!(out, "# vertices: N S U1..U5 L1..L5; faces: S1..S5 N1..N5")?;
    for (label, _) in model.vertices() {
        writeln!(out, "v {}", coords(point(ws, opts, label), opts.float_digits))?;
    }
    for face in ws.faces() {
        let idx = outward(ws, face).map(|l| l.slot() + 1);
        writeln!(out, "f {} {} {}", idx[0], idx[1], idx[2])?;
    }
    Ok(())
}

fn write_stl<W: Write + ?Sized>(ws: &WingSet<'_>, opts: &ExportOptions, out: &mut W) -> Result<(), ExportError> {
    let name = format!("{TOOL_NAME}_wing_set");
    writeln!(out, "solid {name}")?;
    for face in ws.faces() {
        let p = outward(ws, face).map(|l| point(ws, opts, l));
        let n = unit_normal(p);
        writeln!(out, "  facet normal {}", coords(n, opts.float_digits))?;
        writeln!(out, "    outer loop")?;
        for v in p {
            writeln!(out, "      vertex {}", coords(v, opts.float_digits))?;
        }
        writeln!(out, "    endloop")?;
        writeln!(out, "  endfacet")?;
    }
    writeln!(out, "endsolid {name}")?;
    Ok(())
}

fn unit_normal(p: [[f64; 3]; 3]) -> [f64; 3] {
    let u = [p[1][0] - p[0][0], p[1][1] - p[0][1], p[1][2] - p[0][2]];
    let v = [p[2][0] - p[0][0], p[2][1] - p[0][1], p[2][2] - p[0][2]];
    let n = [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]];
    let len = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
    if len == 0.0 {
        return [0.0; 3];
    }
    n.map(|c| c / len)
}
