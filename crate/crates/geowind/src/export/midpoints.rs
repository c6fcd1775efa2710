use std::io::{self, Write};

use geowind_core::WingSet;

use super::{format_float, ExportError, ExportFormat, ExportOptions};

const HEADER: [&str; 8] = ["face", "pole", "index", "mx", "my", "mz", "sq_radius_exact", "radius_float"];

/// One row per face: the cross-edge midpoint and its exact squared distance
/// from the center.
pub fn export_midpoints<W: Write + ?Sized>(ws: &WingSet<'_>, opts: &ExportOptions, out: &mut W) -> Result<(), ExportError> {
    opts.validate()?;
    if opts.format != ExportFormat::CsvMidpoints {
        return Err(ExportError::UnsupportedFormat(opts.format));
    }
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(HEADER).map_err(io::Error::from)?;
    let center = ws.model().center();
    for face in ws.faces() {
        let p = ws.representative_point(face);
        let sq_radius = (&p - &center).sq_norm();
        let radius = match sq_radius.sqrt_exact() {
            Some(r) => r.to_f64(),
            None => sq_radius.to_f64().sqrt(),
        };
        let [mx, my, mz] = opts.frame().apply(p.to_f64());
        let digits = opts.float_digits;
        writer
            .write_record([
                face.name().to_string(),
                face.pole().name().to_string(),
                face.index().to_string(),
                format_float(mx, digits),
                format_float(my, digits),
                format_float(mz, digits),
                sq_radius.to_string(),
                format_float(radius, digits),
            ])
            .map_err(io::Error::from)?;
    }
    writer.flush()?;
    Ok(())
}
