//! Deterministic SVG figures: the integer grid, the polygon path, and one
//! dot per lattice point colored by its classification.
//!
//! The document is assembled as plain text in one fixed order with no
//! timestamps, no environment lookups, and no hash-order iteration, so a
//! given polygon and spec always produce byte-identical output. Lattice y
//! points upward as on paper; the screen flip happens in one explicit
//! `scale(1,-1)` transform, never in the coordinates themselves.

use welp_core::{Classifier, LatticeVec, PointKind, Polygon, Rat, Result};

const BACKGROUND: &str = "#ffffff";
const GRID_COLOR: &str = "#e4e4e4";
const AXIS_COLOR: &str = "#c2c2c2";
const PATH_COLOR: &str = "#202124";

/// Fill colors for the four point classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Palette {
    pub exterior: &'static str,
    pub interior: &'static str,
    pub edge: &'static str,
    pub vertex: &'static str,
}

/// Gray exterior, blue interior, orange edge, red vertex.
pub const DEFAULT_PALETTE: Palette =
    Palette { exterior: "#9aa0a6", interior: "#1a73e8", edge: "#e8710a", vertex: "#d93025" };

impl Palette {
    /// True iff the four colors are pairwise different, so no two point
    /// classes are indistinguishable in the figure.
    pub fn is_distinct(&self) -> bool {
        let e = [self.exterior, self.interior, self.edge, self.vertex];
        (0..e.len()).all(|i| (i + 1..e.len()).all(|j| e[i] != e[j]))
    }
}

/// Geometry and styling of one figure.
#[derive(Clone, Debug)]
pub struct RenderSpec {
    cell: i64,
    margin: i64,
    show_grid: bool,
    palette: Palette,
    stroke_width: i64,
}

impl RenderSpec {
    /// Validates the invariants: positive cell size and stroke width,
    /// nonnegative margin, pairwise distinct palette.
    pub fn new(
        cell: i64,
        margin: i64,
        show_grid: bool,
        palette: Palette,
        stroke_width: i64,
    ) -> std::result::Result<RenderSpec, String> {
        if cell < 1 {
            return Err(format!("cell size must be positive, got {cell}"));
        }
        if margin < 0 {
            return Err(format!("margin must be nonnegative, got {margin}"));
        }
        if stroke_width < 1 {
            return Err(format!("stroke width must be positive, got {stroke_width}"));
        }
        if !palette.is_distinct() {
            return Err("palette colors must be pairwise distinct".to_string());
        }
        Ok(RenderSpec { cell, margin, show_grid, palette, stroke_width })
    }
}

/// Renders the polygon over the integer grid as a standalone SVG document.
///
/// Every lattice point of the margin-padded bounding box gets a dot. When
/// the polygon is a simple positively oriented lattice polygon the dots are
/// colored by classification; otherwise classification is undefined and
/// every dot uses the exterior color.
pub fn render_svg(p: &Polygon, spec: &RenderSpec) -> Result<String> {
    let cell = spec.cell;

    let mut xmin = i64::MAX;
    let mut xmax = i64::MIN;
    let mut ymin = i64::MAX;
    let mut ymax = i64::MIN;
    for v in p.vertices() {
        xmin = xmin.min(floor_i64(&v.x));
        xmax = xmax.max(ceil_i64(&v.x));
        ymin = ymin.min(floor_i64(&v.y));
        ymax = ymax.max(ceil_i64(&v.y));
    }
    xmin -= spec.margin;
    xmax += spec.margin;
    ymin -= spec.margin;
    ymax += spec.margin;

    let width = (xmax - xmin) * cell;
    let height = (ymax - ymin) * cell;
    // Map lattice (x, y) to pixel (x*cell + tx, ty - y*cell): y grows upward.
    let tx = -xmin * cell;
    let ty = ymax * cell;

    let lattice = p.to_integer().ok();
    let classifier = lattice.as_ref().and_then(|ip| Classifier::new(ip).ok());

    let mut out: Vec<String> = Vec::new();
    out.push(format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    ));
    out.push(format!(r#"<rect width="{width}" height="{height}" fill="{BACKGROUND}"/>"#));
    out.push(format!(r#"<g transform="translate({tx},{ty}) scale(1,-1)">"#));

    if spec.show_grid {
        out.push(format!(r#"<g stroke="{GRID_COLOR}" stroke-width="1">"#));
        for gx in xmin..=xmax {
            out.push(line(gx * cell, ymin * cell, gx * cell, ymax * cell));
        }
        for gy in ymin..=ymax {
            out.push(line(xmin * cell, gy * cell, xmax * cell, gy * cell));
        }
        out.push("</g>".to_string());

        let x_axis_visible = ymin <= 0 && 0 <= ymax;
        let y_axis_visible = xmin <= 0 && 0 <= xmax;
        if x_axis_visible || y_axis_visible {
            out.push(format!(r#"<g stroke="{AXIS_COLOR}" stroke-width="1">"#));
            if y_axis_visible {
                out.push(line(0, ymin * cell, 0, ymax * cell));
            }
            if x_axis_visible {
                out.push(line(xmin * cell, 0, xmax * cell, 0));
            }
            out.push("</g>".to_string());
        }
    }

    let verts = if p.is_closed() { p.distinct_vertices() } else { p.vertices() };
    let mut d = String::new();
    for (i, v) in verts.iter().enumerate() {
        let cmd = if i == 0 { "M" } else { " L" };
        d.push_str(&format!("{cmd} {} {}", px(&v.x, cell), px(&v.y, cell)));
    }
    if p.is_closed() {
        d.push_str(" Z");
    }
    out.push(format!(
        r#"<path d="{d}" fill="none" stroke="{PATH_COLOR}" stroke-width="{}"/>"#,
        spec.stroke_width
    ));

    let r_plain = (cell / 8).max(2);
    let r_class = (cell / 5).max(3);
    for y in ymin..=ymax {
        for x in xmin..=xmax {
            let (color, radius) = match &classifier {
                Some(c) => {
                    let class = c.classify(LatticeVec::new(x, y))?;
                    match class.kind {
                        PointKind::Exterior => (spec.palette.exterior, r_plain),
                        PointKind::Interior => (spec.palette.interior, r_class),
                        PointKind::OnEdge(_) => (spec.palette.edge, r_class),
                        PointKind::AtVertex(_) => (spec.palette.vertex, r_class),
                    }
                }
                None => (spec.palette.exterior, r_plain),
            };
            out.push(format!(
                r#"<circle cx="{}" cy="{}" r="{radius}" fill="{color}"/>"#,
                x * cell,
                y * cell
            ));
        }
    }

    out.push("</g>".to_string());
    out.push("</svg>".to_string());
    Ok(out.join("\n") + "\n")
}

fn line(x1: i64, y1: i64, x2: i64, y2: i64) -> String {
    format!(r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#)
}

/// Pixel coordinate of a rational lattice coordinate: an exact integer
/// whenever `r * cell` is one, a fixed four-decimal approximation otherwise
/// (both render identically across runs).
fn px(r: &Rat, cell: i64) -> String {
    let scaled = r.clone() * Rat::int(cell);
    match scaled.to_i64() {
        Some(n) => n.to_string(),
        None => format!("{:.4}", scaled.to_f64()),
    }
}

fn floor_i64(r: &Rat) -> i64 {
    r.floor().to_i64().expect("coordinate exceeds i64")
}

fn ceil_i64(r: &Rat) -> i64 {
    r.ceil().to_i64().expect("coordinate exceeds i64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use welp_core::{figure_eight, oblique_square, rectangle, Vec2};

    fn spec() -> RenderSpec {
        RenderSpec::new(32, 1, true, DEFAULT_PALETTE, 2).unwrap()
    }

    fn count_fill(svg: &str, color: &str) -> usize {
        svg.matches(&format!(r#"fill="{color}""#)).count()
    }

    #[test]
    fn default_palette_is_distinct() {
        assert!(DEFAULT_PALETTE.is_distinct());
    }

    #[test]
    fn spec_rejects_bad_parameters() {
        assert!(RenderSpec::new(0, 1, true, DEFAULT_PALETTE, 2).is_err());
        assert!(RenderSpec::new(32, -1, true, DEFAULT_PALETTE, 2).is_err());
        assert!(RenderSpec::new(32, 1, true, DEFAULT_PALETTE, 0).is_err());
        let clash = Palette { interior: DEFAULT_PALETTE.edge, ..DEFAULT_PALETTE };
        assert!(RenderSpec::new(32, 1, true, clash, 2).is_err());
    }

    #[test]
    fn oblique_square_dot_counts_match_its_lattice_counts() {
        let p = oblique_square().to_polygon();
        let svg = render_svg(&p, &spec()).unwrap();
        assert_eq!(count_fill(&svg, DEFAULT_PALETTE.interior), 13);
        assert_eq!(count_fill(&svg, DEFAULT_PALETTE.edge), 8);
        assert_eq!(count_fill(&svg, DEFAULT_PALETTE.vertex), 4);
    }

    #[test]
    fn unit_square_has_four_vertex_dots_and_no_interior() {
        let p = rectangle(1, 1).unwrap().to_polygon();
        let svg = render_svg(&p, &spec()).unwrap();
        assert_eq!(count_fill(&svg, DEFAULT_PALETTE.vertex), 4);
        assert_eq!(count_fill(&svg, DEFAULT_PALETTE.interior), 0);
        assert_eq!(count_fill(&svg, DEFAULT_PALETTE.edge), 0);
    }

    #[test]
    fn non_simple_polygon_renders_with_unclassified_dots() {
        let p = figure_eight().to_polygon();
        let svg = render_svg(&p, &spec()).unwrap();
        assert_eq!(count_fill(&svg, DEFAULT_PALETTE.interior), 0);
        assert_eq!(count_fill(&svg, DEFAULT_PALETTE.vertex), 0);
        assert!(count_fill(&svg, DEFAULT_PALETTE.exterior) > 0);
    }

    #[test]
    fn output_is_deterministic_and_y_up() {
        let p = oblique_square().to_polygon();
        let a = render_svg(&p, &spec()).unwrap();
        let b = render_svg(&p, &spec()).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("scale(1,-1)"));
    }

    #[test]
    fn closed_paths_end_with_z_and_open_paths_do_not() {
        let closed = rectangle(2, 1).unwrap().to_polygon();
        let svg = render_svg(&closed, &spec()).unwrap();
        assert!(svg.contains(" Z\""));

        let open =
            Polygon::new(vec![Vec2::from_ints(0, 0), Vec2::from_ints(2, 0), Vec2::from_ints(2, 2)])
                .unwrap();
        let svg = render_svg(&open, &spec()).unwrap();
        assert!(!svg.contains(" Z\""));
    }

    #[test]
    fn pixel_coordinates_prefer_exact_integers() {
        assert_eq!(px(&Rat::new(1, 3), 30), "10");
        assert_eq!(px(&Rat::int(-4), 32), "-128");
        assert_eq!(px(&Rat::new(1, 7), 30), "4.2857");
    }

    #[test]
    fn rational_vertices_render_without_classification() {
        let p = Polygon::closed_from_ints(&[(0, 0), (1, 0), (1, 1)]).unwrap();
        let shifted = p.translated(&Vec2::new(Rat::new(1, 2), Rat::zero()));
        let svg = render_svg(&shifted, &spec()).unwrap();
        assert_eq!(count_fill(&svg, DEFAULT_PALETTE.interior), 0);
        assert!(svg.contains("scale(1,-1)"));
    }
}
