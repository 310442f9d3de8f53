//! Orthographic figures of the shape sphere. The visible hemisphere is
//! projected onto the plane orthogonal to the view axis; back-facing arc
//! segments are omitted. Output is deterministic for fixed inputs: fixed
//! draw order, fixed six-decimal coordinates.

use std::f64::consts::PI;

use trishape::flow::{assemble_max_angle_contour, separatrix, MaxAngleContour};
use trishape::shape::{embed, global_embed, special_catalog, ShapeVector};
use trishape::Result;

pub struct SvgOptions {
    pub size: u32,
    pub view: [f64; 3],
    pub resolution: usize,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            size: 600,
            view: [0.0, 1.0, 0.0],
            resolution: 512,
        }
    }
}

struct Projection {
    w: ShapeVector,
    right: ShapeVector,
    up: ShapeVector,
}

impl Projection {
    fn new(view: [f64; 3]) -> Self {
        let w = ShapeVector::new(view[0], view[1], view[2]).normalized();
        let hint = if w.y.abs() < 0.9 {
            ShapeVector::new(0.0, 1.0, 0.0)
        } else {
            ShapeVector::new(0.0, 0.0, 1.0)
        };
        let right = hint.cross(w).normalized();
        let up = w.cross(right);
        Projection { w, right, up }
    }

    fn visible(&self, p: ShapeVector) -> bool {
        p.dot(self.w) >= 0.0
    }

    /// SVG coordinates: x right, y down.
    fn project(&self, p: ShapeVector) -> (f64, f64) {
        (p.dot(self.right), -p.dot(self.up))
    }
}

fn fmt(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.6}")
}

struct Svg {
    body: String,
}

impl Svg {
    fn new(size: u32) -> Self {
        let mut body = String::new();
        body.push_str(&format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n"
        ));
        Svg { body }
    }

    fn circle_outline(&mut self) {
        self.body.push_str(
            "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#555555\" stroke-width=\"0.006\"/>\n",
        );
    }

    /// Strokes the visible runs of a projected polyline.
    fn polyline(&mut self, proj: &Projection, pts: &[ShapeVector], style: &str) {
        let mut path = String::new();
        let mut pen_down = false;
        for &p in pts {
            if proj.visible(p) {
                let (x, y) = proj.project(p);
                if pen_down {
                    path.push_str(&format!(" L {} {}", fmt(x), fmt(y)));
                } else {
                    path.push_str(&format!("M {} {}", fmt(x), fmt(y)));
                    pen_down = true;
                }
            } else {
                pen_down = false;
            }
        }
        if !path.is_empty() {
            self.body
                .push_str(&format!("<path d=\"{path}\" fill=\"none\" {style}/>\n"));
        }
    }

    fn dot(&mut self, proj: &Projection, p: ShapeVector, label: &str) {
        if !proj.visible(p) {
            return;
        }
        let (x, y) = proj.project(p);
        self.body.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"0.014\" fill=\"#111111\"/>\n",
            fmt(x),
            fmt(y)
        ));
        self.body.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"0.07\" font-family=\"sans-serif\" fill=\"#111111\">{label}</text>\n",
            fmt(x + 0.02),
            fmt(y - 0.02)
        ));
    }

    fn finish(mut self) -> String {
        self.body.push_str("</svg>\n");
        self.body
    }
}

fn contour_clouds(contour: &MaxAngleContour) -> Vec<Vec<ShapeVector>> {
    contour
        .arcs
        .iter()
        .map(|arc| arc.samples.iter().map(global_embed).collect())
        .collect()
}

/// Great circle through the E-Ebar axis and the direction `b` (unit, in the
/// collinear plane): the isosceles bimeridian hosting the cusp and
/// stationary-point alignments.
fn isosceles_meridian(b: ShapeVector, n: usize) -> Vec<ShapeVector> {
    let e = ShapeVector::new(0.0, 1.0, 0.0);
    (0..=n)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / n as f64;
            e.scale(t.cos()).add(b.scale(t.sin()))
        })
        .collect()
}

fn equator(n: usize) -> Vec<ShapeVector> {
    (0..=n)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / n as f64;
            ShapeVector::new(t.sin(), 0.0, t.cos())
        })
        .collect()
}

const PALETTE: [&str; 6] = [
    "#d97706", "#b91c1c", "#0e7490", "#15803d", "#a21caf", "#4d7c0f",
];

/// Renders the maximal-angle flow figure: the sphere outline, the
/// collinearity equator, dashed cusp/stationary alignment meridians, the
/// requested contours, the separatrix stroked distinctly, and the special
/// points.
pub fn render_flow(alphas: &[f64], opts: &SvgOptions) -> Result<String> {
    let proj = Projection::new(opts.view);
    let mut svg = Svg::new(opts.size);
    svg.circle_outline();

    svg.polyline(
        &proj,
        &equator(720),
        "stroke=\"#9ca3af\" stroke-width=\"0.004\"",
    );

    // Cusp and stationary-point alignments: the three isosceles bimeridians.
    for (_, point) in special_catalog()
        .into_iter()
        .filter(|(tag, _)| matches!(tag, trishape::shape::SpecialShape::B(_)))
    {
        let b = embed(&point);
        svg.polyline(
            &proj,
            &isosceles_meridian(b, 720),
            "stroke=\"#9ca3af\" stroke-width=\"0.004\" stroke-dasharray=\"0.03 0.02\"",
        );
    }

    for (i, &alpha) in alphas.iter().enumerate() {
        if (alpha - std::f64::consts::FRAC_PI_2).abs() <= 1e-12 {
            continue; // drawn below as the separatrix
        }
        let contour = assemble_max_angle_contour(alpha, opts.resolution)?;
        let color = PALETTE[i % PALETTE.len()];
        let style = format!("stroke=\"{color}\" stroke-width=\"0.008\"");
        for cloud in contour_clouds(&contour) {
            svg.polyline(&proj, &cloud, &style);
        }
    }

    let sep = separatrix();
    for cloud in contour_clouds(&sep) {
        svg.polyline(
            &proj,
            &cloud,
            "stroke=\"#6d28d9\" stroke-width=\"0.012\"",
        );
    }

    for (tag, point) in special_catalog() {
        svg.dot(&proj, embed(&point), &tag.to_string());
    }

    Ok(svg.finish())
}

/// Renders a single contour without the full flow dressing.
pub fn render_contour(contour: &MaxAngleContour, opts: &SvgOptions) -> String {
    let proj = Projection::new(opts.view);
    let mut svg = Svg::new(opts.size);
    svg.circle_outline();
    svg.polyline(
        &proj,
        &equator(720),
        "stroke=\"#9ca3af\" stroke-width=\"0.004\"",
    );
    for cloud in contour_clouds(contour) {
        svg.polyline(
            &proj,
            &cloud,
            "stroke=\"#b91c1c\" stroke-width=\"0.008\"",
        );
    }
    for cusp in &contour.cusps {
        let p = global_embed(cusp);
        if proj.visible(p) {
            let (x, y) = proj.project(p);
            svg.body.push_str(&format!(
                "<circle cx=\"{}\" cy=\"{}\" r=\"0.012\" fill=\"#b91c1c\"/>\n",
                fmt(x),
                fmt(y)
            ));
        }
    }
    for (tag, point) in special_catalog() {
        svg.dot(&proj, embed(&point), &tag.to_string());
    }
    svg.finish()
}
