//! Schematic SVG sketches: polygon outline, efficient chain, cone
//! generators, vertex labels. Output is a pure function of the inputs, so
//! identical inputs give byte-identical files.

use std::fmt::Write as _;

use molp_core::cone::GradientCone;
use molp_core::polytope::{Chain, Polygon};
use molp_core::Vec2;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 48.0;

struct Frame {
    min: Vec2,
    scale: f64,
}

impl Frame {
    fn new(polygon: &Polygon) -> Frame {
        let (mut min, mut max) = (polygon.vertex(1), polygon.vertex(1));
        for &v in polygon.vertices() {
            min = Vec2::new(min.x.min(v.x), min.y.min(v.y));
            max = Vec2::new(max.x.max(v.x), max.y.max(v.y));
        }
        let extent = (max.x - min.x).max(max.y - min.y).max(1e-9);
        let scale = (WIDTH - 2.0 * MARGIN).min(HEIGHT - 2.0 * MARGIN) / extent;
        Frame { min, scale }
    }

    fn map(&self, p: Vec2) -> (f64, f64) {
        (
            MARGIN + (p.x - self.min.x) * self.scale,
            HEIGHT - MARGIN - (p.y - self.min.y) * self.scale,
        )
    }

    fn pt(&self, p: Vec2) -> String {
        let (x, y) = self.map(p);
        format!("{x:.2},{y:.2}")
    }
}

/// Render the polygon with the chain highlighted and the two cone
/// generators drawn as arrows from the centroid.
pub fn render(polygon: &Polygon, cone: &GradientCone, chain: Chain) -> String {
    let frame = Frame::new(polygon);
    let mut out = String::new();
    out.push_str(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg version=\"1.1\" xmlns=\"http://www.w3.org/2000/svg\" \
         width=\"640\" height=\"480\" viewBox=\"0 0 640 480\">\n",
    );
    out.push_str(
        "  <defs><marker id=\"tip\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" \
         markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">\
         <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#1f6f43\"/></marker></defs>\n",
    );

    let ring: Vec<String> = polygon.vertices().iter().map(|&v| frame.pt(v)).collect();
    let _ = writeln!(
        out,
        "  <polygon points=\"{}\" fill=\"#eef2fa\" stroke=\"#39517b\" stroke-width=\"1.5\"/>",
        ring.join(" ")
    );

    let ids = polygon.chain_vertices(chain).expect("chain validated by caller");
    if ids.len() == 1 {
        let (x, y) = frame.map(polygon.vertex(ids[0]));
        let _ = writeln!(
            out,
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"7\" fill=\"none\" stroke=\"#b3362b\" stroke-width=\"3\"/>"
        );
    } else {
        let pts: Vec<String> = ids.iter().map(|&j| frame.pt(polygon.vertex(j))).collect();
        let _ = writeln!(
            out,
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"#b3362b\" stroke-width=\"4\" stroke-linecap=\"round\"/>",
            pts.join(" ")
        );
    }

    let centroid = polygon.centroid();
    let reach = 0.30
        * polygon
            .vertices()
            .iter()
            .map(|v| v.dist(centroid))
            .fold(f64::NEG_INFINITY, f64::max);
    for phi in [cone.phi1, cone.phi2] {
        let tip = centroid + Vec2::from_angle(phi) * reach;
        let (x1, y1) = frame.map(centroid);
        let (x2, y2) = frame.map(tip);
        let _ = writeln!(
            out,
            "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" \
             stroke=\"#1f6f43\" stroke-width=\"2\" marker-end=\"url(#tip)\"/>"
        );
    }

    for (i, &v) in polygon.vertices().iter().enumerate() {
        let (cx, cy) = frame.map(v);
        let _ = writeln!(
            out,
            "  <circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"3\" fill=\"#39517b\"/>"
        );
        let dir = v - centroid;
        let dir = if dir.is_zero() { Vec2::new(1.0, 0.0) } else { dir.unit() };
        let (tx, ty) = frame.map(v + dir * (14.0 / frame.scale));
        let _ = writeln!(
            out,
            "  <text x=\"{tx:.2}\" y=\"{ty:.2}\" font-family=\"sans-serif\" font-size=\"13\" \
             fill=\"#222\" text-anchor=\"middle\" dominant-baseline=\"middle\">v{}</text>",
            i + 1
        );
    }

    out.push_str("</svg>\n");
    out
}
