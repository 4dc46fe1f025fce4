//! Plain-text formats: point files in, result and sweep tables out.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use super::pipeline::ClusterResult;
use super::sweep::SweepRow;
use crate::error::{Error, Result};
use crate::geometry::Point2;

/// Exact header of the result table.
pub const RESULT_HEADER: &str = "index,x,y,potential,parent,root,cluster";
pub const SWEEP_HEADER: &str = "sigma,clusters,ari,nmi";

/// 17 significant digits, enough to round-trip any `f64`.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// Points read from a coordinate file, with the optional third column.
#[derive(Debug, Clone, PartialEq)]
pub struct PointTable {
    pub points: Vec<Point2>,
    pub labels: Option<Vec<i64>>,
}

fn parse_error(path: &Path, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

fn parse_label(field: &str) -> Option<i64> {
    field.parse::<i64>().ok().or_else(|| {
        let v = field.parse::<f64>().ok()?;
        (v.fract() == 0.0 && v.abs() < 9.0e15).then_some(v as i64)
    })
}

/// Parses `x y [label]` rows separated by commas and/or whitespace. Blank
/// lines and lines starting with `#` are skipped. `path` is only used in
/// error messages.
pub fn parse_points(text: &str, path: &Path) -> Result<PointTable> {
    let mut points = Vec::new();
    let mut labels: Vec<i64> = Vec::new();
    let mut width = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(parse_error(
                path,
                line_no,
                format!("expected `x y [label]`, found {} fields", fields.len()),
            ));
        }
        if *width.get_or_insert(fields.len()) != fields.len() {
            return Err(parse_error(path, line_no, "inconsistent number of columns"));
        }
        let coord = |s: &str| -> Result<f64> {
            let v: f64 = s
                .parse()
                .map_err(|_| parse_error(path, line_no, format!("not a number: {s:?}")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(parse_error(
                    path,
                    line_no,
                    format!("non-finite value: {s:?}"),
                ))
            }
        };
        points.push(Point2::new(coord(fields[0])?, coord(fields[1])?));
        if let Some(l) = fields.get(2) {
            let label = parse_label(l).ok_or_else(|| {
                parse_error(path, line_no, format!("label is not an integer: {l:?}"))
            })?;
            labels.push(label);
        }
    }
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let labels = (width == Some(3)).then_some(labels);
    Ok(PointTable { points, labels })
}

pub fn load_points_csv(path: impl AsRef<Path>) -> Result<PointTable> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_points(&text, path)
}

/// Writes `bytes` to a temporary file next to `path`, then renames it into
/// place, so a failed run never leaves a partial file behind.
pub fn write_atomic(path: impl AsRef<Path>, bytes: &[u8]) -> Result<()> {
    let path = path.as_ref();
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| Error::io(path, e))?;
    tmp.write_all(bytes).map_err(|e| Error::io(path, e))?;
    // Temporary files are private; give the result the usual mode instead.
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        let perms = match fs::metadata(path) {
            Ok(m) => m.permissions(),
            Err(_) => fs::Permissions::from_mode(0o644),
        };
        tmp.as_file()
            .set_permissions(perms)
            .map_err(|e| Error::io(path, e))?;
    }
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

/// The rows of the result table, without going through text.
pub fn result_rows(result: &ClusterResult) -> Vec<ResultRow> {
    let root_of = result.labeling.root_of();
    let labels = result.labeling.labels();
    result
        .points
        .iter()
        .enumerate()
        .map(|(i, &point)| ResultRow {
            index: i,
            point,
            potential: result.field.get(i),
            parent: result.forest.parent(i),
            root: root_of[i],
            cluster: labels[i],
        })
        .collect()
}

pub fn result_csv(result: &ClusterResult) -> String {
    let mut out = String::new();
    out.push_str(RESULT_HEADER);
    out.push('\n');
    for r in result_rows(result) {
        let parent = r.parent.map(|q| q.to_string()).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{parent},{},{}",
            r.index,
            fmt_f64(r.point.x),
            fmt_f64(r.point.y),
            fmt_f64(r.potential),
            r.root,
            r.cluster
        )
        .unwrap();
    }
    out
}

pub fn write_result_csv(path: impl AsRef<Path>, result: &ClusterResult) -> Result<()> {
    write_atomic(path, result_csv(result).as_bytes())
}

/// One row of a result table read back from disk.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow {
    pub index: usize,
    pub point: Point2,
    pub potential: f64,
    pub parent: Option<usize>,
    pub root: usize,
    pub cluster: usize,
}

pub fn parse_result_csv(text: &str, path: &Path) -> Result<Vec<ResultRow>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h.trim() == RESULT_HEADER => {}
        _ => {
            return Err(parse_error(
                path,
                1,
                format!("expected header `{RESULT_HEADER}`"),
            ))
        }
    }
    let mut rows = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 7 {
            return Err(parse_error(
                path,
                line_no,
                format!("expected 7 fields, found {}", f.len()),
            ));
        }
        let bad = |what: &str| parse_error(path, line_no, format!("bad {what}"));
        let int = |s: &str, what: &str| s.parse::<usize>().map_err(|_| bad(what));
        let float = |s: &str, what: &str| {
            s.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| bad(what))
        };
        rows.push(ResultRow {
            index: int(f[0], "index")?,
            point: Point2::new(float(f[1], "x")?, float(f[2], "y")?),
            potential: float(f[3], "potential")?,
            parent: if f[4].is_empty() {
                None
            } else {
                Some(int(f[4], "parent")?)
            },
            root: int(f[5], "root")?,
            cluster: int(f[6], "cluster")?,
        });
    }
    for (i, r) in rows.iter().enumerate() {
        if r.index != i {
            return Err(parse_error(
                path,
                i + 2,
                format!("index {} out of sequence", r.index),
            ));
        }
    }
    Ok(rows)
}

pub fn read_result_csv(path: impl AsRef<Path>) -> Result<Vec<ResultRow>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_result_csv(&text, path)
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::new();
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    let opt = |v: Option<f64>| v.map(fmt_f64).unwrap_or_default();
    for r in rows {
        writeln!(
            out,
            "{},{},{},{}",
            fmt_f64(r.sigma),
            r.cluster_count,
            opt(r.ari),
            opt(r.nmi)
        )
        .unwrap();
    }
    out
}

/// Dataset file as written by the generator: a comment header, then
/// `x,y,label` rows.
pub fn points_csv(points: &[Point2], labels: Option<&[usize]>) -> String {
    let mut out = String::from(if labels.is_some() {
        "# x,y,label\n"
    } else {
        "# x,y\n"
    });
    for (i, p) in points.iter().enumerate() {
        match labels {
            Some(l) => writeln!(out, "{},{},{}", fmt_f64(p.x), fmt_f64(p.y), l[i]).unwrap(),
            None => writeln!(out, "{},{}", fmt_f64(p.x), fmt_f64(p.y)).unwrap(),
        }
    }
    out
}
