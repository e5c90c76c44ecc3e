//! SVG rendering of instances.
//!
//! Planar instances are drawn in one panel with optional hole regions and a
//! realization on top. Spatial instances get two orthographic panels, a top
//! view `(x, y)` and a front view `(x, z)`.

use std::fmt::Write;

use num_traits::ToPrimitive;

use super::instance::{Instance, Sets};
use crate::caps::Realization2;
use crate::poly2::{hole_region, hull2};
use crate::{Point2, Scalar};

const PANEL: f64 = 480.0;
const MARGIN: f64 = 24.0;
const COLORS: [&str; 8] = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf"];

#[derive(Clone, Debug, Default)]
pub struct SvgOptions {
    /// Shade the hole of every triple (planar instances with at most this many sets).
    pub holes_up_to: usize,
    pub realization: Option<Realization2<Scalar>>,
}

fn f(v: &Scalar) -> f64 {
    v.to_f64().unwrap_or(0.0)
}

/// Maps data coordinates into a panel placed at horizontal offset `ox`.
struct View {
    ox: f64,
    x0: f64,
    y0: f64,
    scale: f64,
}

impl View {
    fn fit(ox: f64, pts: &[(f64, f64)]) -> Self {
        let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(x, y) in pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        if pts.is_empty() {
            (x0, x1, y0, y1) = (-1.0, 1.0, -1.0, 1.0);
        }
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        let scale = (PANEL - 2.0 * MARGIN) / span;
        View { ox, x0, y0: y0 + span, scale }
    }

    fn at(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (self.ox + MARGIN + (x - self.x0) * self.scale, MARGIN + (self.y0 - y) * self.scale)
    }

    fn y_range(&self) -> (f64, f64) {
        (self.y0 - (PANEL - MARGIN) / self.scale, self.y0 + MARGIN / self.scale)
    }

    /// Data-space x-range visible in the panel.
    fn x_range(&self) -> (f64, f64) {
        (self.x0 - MARGIN / self.scale, self.x0 + (PANEL - MARGIN) / self.scale)
    }
}

fn polygon(out: &mut String, v: &View, pts: &[(f64, f64)], fill: &str, opacity: f64) {
    let coords: Vec<String> = pts
        .iter()
        .map(|&p| {
            let (x, y) = v.at(p);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        out,
        r#"<polygon points="{}" fill="{fill}" fill-opacity="{opacity}" stroke="{fill}" stroke-width="1"/>"#,
        coords.join(" ")
    );
}

fn segment(out: &mut String, v: &View, a: (f64, f64), b: (f64, f64), color: &str, width: f64) {
    let ((x1, y1), (x2, y2)) = (v.at(a), v.at(b));
    let _ = writeln!(
        out,
        r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{color}" stroke-width="{width}"/>"#
    );
}

fn label(out: &mut String, v: &View, p: (f64, f64), text: &str) {
    let (x, y) = v.at(p);
    let _ = writeln!(out, r#"<text x="{x:.2}" y="{y:.2}" font-size="11" text-anchor="middle">{text}</text>"#);
}

fn panel_frame(out: &mut String, ox: f64, title: &str, clip: &str) {
    let _ = writeln!(
        out,
        r##"<clipPath id="{clip}"><rect x="{ox}" y="0" width="{PANEL}" height="{PANEL}"/></clipPath>
<rect x="{ox}" y="0" width="{PANEL}" height="{PANEL}" fill="white" stroke="#999"/>
<text x="{}" y="16" font-size="13" font-family="sans-serif">{title}</text>"##,
        ox + 8.0
    );
}

fn centroid(pts: &[(f64, f64)]) -> (f64, f64) {
    let n = pts.len().max(1) as f64;
    (pts.iter().map(|p| p.0).sum::<f64>() / n, pts.iter().map(|p| p.1).sum::<f64>() / n)
}

fn pt2(p: &Point2) -> (f64, f64) {
    (f(&p.x), f(&p.y))
}

fn render_planar(out: &mut String, inst: &Instance, opts: &SvgOptions) {
    let sets = inst.polygons();
    let shapes: Vec<Vec<(f64, f64)>> = sets.iter().map(|k| k.vertices().iter().map(pt2).collect()).collect();
    let all: Vec<(f64, f64)> = shapes.iter().flatten().copied().collect();
    let v = View::fit(0.0, &all);
    panel_frame(out, 0.0, "plane", "c0");
    let _ = writeln!(out, r#"<g clip-path="url(#c0)">"#);
    for (i, s) in shapes.iter().enumerate() {
        polygon(out, &v, s, COLORS[i % COLORS.len()], 0.25);
    }
    if sets.len() <= opts.holes_up_to {
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                for k in j + 1..sets.len() {
                    if let Ok(h) = hole_region(&sets[i], &sets[j], &sets[k]) {
                        let b: Vec<(f64, f64)> = h.boundary.iter().map(pt2).collect();
                        polygon(out, &v, &b, "#000000", 0.35);
                    }
                }
            }
        }
    }
    if let Some(r) = &opts.realization {
        let (lo, hi) = v.x_range();
        for (l, seg) in r.lines.iter().zip(&r.segments) {
            let (m, q) = (f(&l.slope), f(&l.intercept));
            segment(out, &v, (lo, m * lo + q), (hi, m * hi + q), "#555", 0.6);
            let vs = seg.vertices();
            segment(out, &v, pt2(&vs[0]), pt2(&vs[vs.len() - 1]), "#000", 2.0);
        }
    }
    for (s, id) in shapes.iter().zip(&inst.ids) {
        label(out, &v, centroid(s), id);
    }
    out.push_str("</g>\n");
}

fn render_spatial(out: &mut String, inst: &Instance) {
    let polys = inst.polytopes();
    for (p, (title, axis)) in [("top (x, y)", 1usize), ("front (x, z)", 2)].into_iter().enumerate() {
        let ox = p as f64 * (PANEL + 10.0);
        let proj = |c: [Scalar; 3]| (f(&c[0]), f(&c[axis]));
        let shapes: Vec<Vec<(f64, f64)>> = polys
            .iter()
            .map(|k| {
                let pts: Vec<Point2> =
                    k.vertices().iter().map(|q| Point2::new(q.x.clone(), q.coords()[axis].clone())).collect();
                hull2(&pts).iter().map(pt2).collect()
            })
            .collect();
        let mut all: Vec<(f64, f64)> = shapes.iter().flatten().copied().collect();
        for l in &inst.lines {
            all.push(proj(l.base.coords()));
            all.push(proj(l.point_at(&Scalar::from_integer(1.into())).coords()));
        }
        let v = View::fit(ox, &all);
        let clip = format!("c{p}");
        panel_frame(out, ox, title, &clip);
        let _ = writeln!(out, r#"<g clip-path="url(#{clip})">"#);
        for (i, s) in shapes.iter().enumerate() {
            polygon(out, &v, s, COLORS[i % COLORS.len()], 0.2);
        }
        let (lo, hi) = v.x_range();
        for (i, l) in inst.lines.iter().enumerate() {
            let c = l.base.coords();
            let (dx, da) = (f(&l.dir[0]), f(&l.dir[axis]));
            let color = COLORS[inst.line_groups.get(i).copied().unwrap_or(0) % COLORS.len()];
            if dx != 0.0 {
                let at = |x: f64| (x, f(&c[axis]) + (x - f(&c[0])) / dx * da);
                segment(out, &v, at(lo), at(hi), color, 1.0);
            } else if da != 0.0 {
                // seen edge-on in this view: a vertical stroke
                let (bottom, top) = v.y_range();
                segment(out, &v, (f(&c[0]), bottom), (f(&c[0]), top), color, 1.0);
            }
        }
        for (s, id) in shapes.iter().zip(&inst.ids) {
            label(out, &v, centroid(s), id);
        }
        out.push_str("</g>\n");
    }
}

pub fn render_svg(inst: &Instance, opts: &SvgOptions) -> String {
    let panels = if inst.dim() == 2 { 1.0 } else { 2.0 };
    let width = panels * PANEL + (panels - 1.0) * 10.0;
    let mut out = format!(
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{PANEL}" viewBox="0 0 {width} {PANEL}">
"#
    );
    match inst.sets {
        Sets::Planar(_) => render_planar(&mut out, inst, opts),
        Sets::Spatial(_) => render_spatial(&mut out, inst),
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{gen_cap_family2, gen_paraboloid};
    use crate::kernel::Field;

    #[test]
    fn planar_has_one_polygon_per_set() {
        let inst = gen_cap_family2(3, &Scalar::frac(1, 10), 1).unwrap();
        let svg = render_svg(&inst, &SvgOptions { holes_up_to: 3, realization: None });
        assert_eq!(svg.matches("<polygon").count(), 4);
        assert!(svg.contains(">K2<"));
    }

    #[test]
    fn spatial_has_two_panels() {
        let inst = gen_paraboloid(2, &Scalar::int(0), 0).unwrap();
        let svg = render_svg(&inst, &SvgOptions::default());
        assert!(svg.contains("top (x, y)") && svg.contains("front (x, z)"));
        assert_eq!(svg.matches("<polygon").count(), 8);
    }
}
