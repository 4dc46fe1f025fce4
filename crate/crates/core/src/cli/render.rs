//! Standalone SVG figures: points colored by potential or by cluster, the
//! in-tree links as arrows and, optionally, the underlying graph as thin
//! segments. Output bytes depend only on the inputs.

use std::fmt::Write as _;

use crate::eval::ResultRow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum ColorBy {
    Potential,
    #[default]
    Cluster,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum EdgeStyle {
    /// Thin grey segments.
    #[default]
    Thin,
    Dashed,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    pub size: f64,
    pub margin: f64,
    pub radius: f64,
    pub color_by: ColorBy,
    pub edge_style: EdgeStyle,
    pub draw_forest: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            size: 800.0,
            margin: 24.0,
            radius: 4.0,
            color_by: ColorBy::Cluster,
            edge_style: EdgeStyle::Thin,
            draw_forest: true,
        }
    }
}

fn hex(r: f64, g: f64, b: f64) -> String {
    let c = |v: f64| (v.clamp(0.0, 1.0) * 255.0).round() as u8;
    format!("#{:02x}{:02x}{:02x}", c(r), c(g), c(b))
}

/// Well-spread hues: successive clusters step by the golden angle.
pub fn cluster_color(label: usize) -> String {
    let hue = (label as f64 * 137.507_764_050_037_85) % 360.0;
    let (s, l) = (0.65, 0.5);
    let c = (1.0 - (2.0 * l - 1.0f64).abs()) * s;
    let h = hue / 60.0;
    let x = c * (1.0 - (h % 2.0 - 1.0).abs());
    let (r, g, b) = match h as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = l - c / 2.0;
    hex(r + m, g + m, b + m)
}

/// Viridis-like ramp, `t` in `[0, 1]` from low (dark) to high potential.
pub fn potential_color(t: f64) -> String {
    const STOPS: [(f64, f64, f64); 5] = [
        (0.267, 0.005, 0.329),
        (0.231, 0.322, 0.545),
        (0.129, 0.569, 0.549),
        (0.369, 0.788, 0.384),
        (0.993, 0.906, 0.144),
    ];
    let t = t.clamp(0.0, 1.0) * (STOPS.len() - 1) as f64;
    let i = (t.floor() as usize).min(STOPS.len() - 2);
    let f = t - i as f64;
    let (a, b) = (STOPS[i], STOPS[i + 1]);
    hex(
        a.0 + (b.0 - a.0) * f,
        a.1 + (b.1 - a.1) * f,
        a.2 + (b.2 - a.2) * f,
    )
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    off_x: f64,
    off_y: f64,
}

impl Frame {
    fn fit(rows: &[ResultRow], size: f64, margin: f64) -> Self {
        let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
        for r in rows {
            min_x = min_x.min(r.point.x);
            max_x = max_x.max(r.point.x);
            min_y = min_y.min(r.point.y);
            max_y = max_y.max(r.point.y);
        }
        let inner = size - 2.0 * margin;
        let extent = (max_x - min_x).max(max_y - min_y);
        let scale = if extent > 0.0 { inner / extent } else { 1.0 };
        Self {
            min_x,
            max_y,
            scale,
            off_x: margin + (inner - (max_x - min_x) * scale) / 2.0,
            off_y: margin + (inner - (max_y - min_y) * scale) / 2.0,
        }
    }

    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (
            self.off_x + (x - self.min_x) * self.scale,
            self.off_y + (self.max_y - y) * self.scale,
        )
    }
}

pub fn render_svg(
    rows: &[ResultRow],
    graph_edges: Option<&[(usize, usize)]>,
    opts: &RenderOptions,
) -> String {
    let size = opts.size;
    let frame = Frame::fit(rows, size, opts.margin);
    let pos: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| frame.map(r.point.x, r.point.y))
        .collect();

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    svg.push_str(concat!(
        r#"<defs><marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" "#,
        r##"markerWidth="6" markerHeight="6" orient="auto"><path d="M 0 0 L 10 5 L 0 10 z" fill="#333333"/></marker></defs>"##,
        "\n",
        r##"<rect width="100%" height="100%" fill="#ffffff"/>"##,
        "\n"
    ));

    if let Some(edges) = graph_edges {
        let dash = match opts.edge_style {
            EdgeStyle::None => None,
            EdgeStyle::Thin => Some(""),
            EdgeStyle::Dashed => Some(r#" stroke-dasharray="3 3""#),
        };
        if let Some(dash) = dash {
            writeln!(
                svg,
                r##"<g class="graph" stroke="#b0b0b0" stroke-width="0.6"{dash}>"##
            )
            .unwrap();
            for &(i, j) in edges {
                let ((x1, y1), (x2, y2)) = (pos[i], pos[j]);
                writeln!(
                    svg,
                    r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#
                )
                .unwrap();
            }
            svg.push_str("</g>\n");
        }
    }

    if opts.draw_forest {
        svg.push_str(r##"<g class="forest" stroke="#333333" stroke-width="1.2">"##);
        svg.push('\n');
        for (i, r) in rows.iter().enumerate() {
            let Some(p) = r.parent else { continue };
            let ((x1, y1), (tx, ty)) = (pos[i], pos[p]);
            // Stop the arrow head at the parent's circle.
            let (dx, dy) = (tx - x1, ty - y1);
            let len = dx.hypot(dy);
            let (x2, y2) = if len > opts.radius {
                (tx - dx / len * opts.radius, ty - dy / len * opts.radius)
            } else {
                (tx, ty)
            };
            writeln!(
                svg,
                r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" marker-end="url(#arrow)"/>"#
            )
            .unwrap();
        }
        svg.push_str("</g>\n");
    }

    let (lo, hi) = rows
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
            (lo.min(r.potential), hi.max(r.potential))
        });
    svg.push_str(r##"<g class="points" stroke="#000000" stroke-width="0.3">"##);
    svg.push('\n');
    for (i, r) in rows.iter().enumerate() {
        let fill = match opts.color_by {
            ColorBy::Cluster => cluster_color(r.cluster),
            ColorBy::Potential => {
                let t = if hi > lo {
                    (r.potential - lo) / (hi - lo)
                } else {
                    0.5
                };
                potential_color(t)
            }
        };
        let (cx, cy) = pos[i];
        writeln!(
            svg,
            r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="{}" fill="{fill}"/>"#,
            opts.radius
        )
        .unwrap();
    }
    svg.push_str("</g>\n</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point2;
    use std::collections::BTreeSet;

    fn row(i: usize, x: f64, y: f64, parent: Option<usize>, cluster: usize) -> ResultRow {
        ResultRow {
            index: i,
            point: Point2::new(x, y),
            potential: -1.0 - i as f64,
            parent,
            root: 0,
            cluster,
        }
    }

    #[test]
    fn single_point() {
        let svg = render_svg(
            &[row(0, 1.0, 1.0, None, 0)],
            None,
            &RenderOptions::default(),
        );
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<circle").count(), 1);
        assert_eq!(svg.matches("marker-end").count(), 0);
    }

    #[test]
    fn two_clusters_two_colors() {
        let rows = [
            row(0, 0.0, 0.0, None, 0),
            row(1, 1.0, 0.0, Some(0), 0),
            row(2, 9.0, 9.0, None, 1),
            row(3, 9.0, 8.0, Some(2), 1),
        ];
        let svg = render_svg(
            &rows,
            Some(&[(0, 1), (1, 2), (2, 3)]),
            &RenderOptions::default(),
        );
        let fills: BTreeSet<&str> = svg
            .lines()
            .filter(|l| l.starts_with("<circle"))
            .map(|l| {
                l.split("fill=\"")
                    .nth(1)
                    .unwrap()
                    .split('"')
                    .next()
                    .unwrap()
            })
            .collect();
        assert_eq!(fills.len(), 2);
        assert_eq!(svg.matches("marker-end").count(), 2);
        assert_eq!(svg.matches("<line").count(), 5);
    }

    #[test]
    fn colors_are_distinct_and_stable() {
        let colors: BTreeSet<String> = (0..12).map(cluster_color).collect();
        assert_eq!(colors.len(), 12);
        assert_eq!(potential_color(0.0), "#440154");
        assert_eq!(potential_color(1.0), "#fde725");
    }
}
