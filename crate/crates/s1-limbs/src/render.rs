//! Deterministic SVG chord diagrams of mating laminations.
//!
//! Side-A classes are drawn inside the unit circle (straight chords or
//! hyperbolic geodesics), side-B classes at the negated angles with arcs
//! bulging outward, so the identification `t <-> -t` makes ray-class loops
//! close up visually. Singleton classes become dots on the circle. Output is
//! a pure function of the spec: rendering the same spec twice gives
//! byte-identical text.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::angle::Angle;
use crate::mating::{RayClassGraph, Side};

const VIEW: f64 = 1.75;
const COLOR_A: &str = "#1f77b4";
const COLOR_B: &str = "#2ca02c";
const COLOR_HL: &str = "#d62728";

/// Interior chord geometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChordStyle {
    /// Straight segments between landing points.
    Straight,
    /// Arcs of circles orthogonal to the unit circle (hyperbolic geodesics).
    #[default]
    GeodesicArc,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RenderError {
    InvalidSize,
    UnknownComponent { component: usize },
}

impl core::fmt::Display for RenderError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            RenderError::InvalidSize => write!(f, "width and height must be positive"),
            RenderError::UnknownComponent { component } => {
                write!(f, "no component with index {component}")
            }
        }
    }
}
impl core::error::Error for RenderError {}

/// What to draw: a graph, a canvas size, and the optional trimmings.
#[derive(Debug, Clone)]
pub struct RenderSpec<'g> {
    graph: &'g RayClassGraph,
    width: u32,
    height: u32,
    label_angles: bool,
    highlight: Vec<usize>,
    style: ChordStyle,
}

impl<'g> RenderSpec<'g> {
    pub fn new(graph: &'g RayClassGraph, width: u32, height: u32) -> Result<Self, RenderError> {
        if width == 0 || height == 0 {
            return Err(RenderError::InvalidSize);
        }
        Ok(Self {
            graph,
            width,
            height,
            label_angles: false,
            highlight: Vec::new(),
            style: ChordStyle::default(),
        })
    }

    pub fn with_labels(mut self, on: bool) -> Self {
        self.label_angles = on;
        self
    }

    pub fn with_style(mut self, style: ChordStyle) -> Self {
        self.style = style;
        self
    }

    /// Highlights the listed components with a distinct stroke.
    pub fn highlight_components(mut self, components: &[usize]) -> Result<Self, RenderError> {
        for &c in components {
            if c >= self.graph.components().len() {
                return Err(RenderError::UnknownComponent { component: c });
            }
        }
        self.highlight = components.to_vec();
        self.highlight.sort_unstable();
        self.highlight.dedup();
        Ok(self)
    }

    /// Highlights every component containing a loop.
    pub fn highlight_loops(self) -> Self {
        let loops = self.graph.loop_components();
        self.highlight_components(&loops)
            .expect("loop components exist in their own graph")
    }

    pub fn render(&self) -> String {
        render(self)
    }
}

fn fmt_f(v: f64) -> String {
    let v = if v.abs() < 1e-9 { 0.0 } else { v };
    alloc::format!("{v:.5}")
}

/// The point of the unit circle at `t` turns, counterclockwise on screen.
fn point(t: &Angle) -> (f64, f64) {
    let tau = core::f64::consts::TAU * t.to_f64();
    (libm::cos(tau), -libm::sin(tau))
}

/// Center and radius of the circle through `p` and `q` orthogonal to the unit
/// circle; `None` when the points are (nearly) antipodal.
fn orthogonal_circle(p: (f64, f64), q: (f64, f64)) -> Option<((f64, f64), f64)> {
    let det = p.0 * q.1 - p.1 * q.0;
    if det.abs() < 1e-9 {
        return None;
    }
    let c = ((q.1 - p.1) / det, (p.0 - q.0) / det);
    let r = libm::sqrt(c.0 * c.0 + c.1 * c.1 - 1.0);
    Some((c, r))
}

/// SVG arc path from `p` to `q` around center `c` (minor arc).
fn arc_path(p: (f64, f64), q: (f64, f64), c: (f64, f64), r: f64) -> String {
    let cross = (p.0 - c.0) * (q.1 - c.1) - (p.1 - c.1) * (q.0 - c.0);
    let sweep = if cross > 0.0 { 1 } else { 0 };
    alloc::format!(
        "M {} {} A {} {} 0 0 {} {} {}",
        fmt_f(p.0),
        fmt_f(p.1),
        fmt_f(r),
        fmt_f(r),
        sweep,
        fmt_f(q.0),
        fmt_f(q.1)
    )
}

/// Path for an interior connection in the requested style.
fn interior_path(p: (f64, f64), q: (f64, f64), style: ChordStyle) -> String {
    if style == ChordStyle::GeodesicArc {
        if let Some((c, r)) = orthogonal_circle(p, q) {
            return arc_path(p, q, c, r);
        }
    }
    alloc::format!(
        "M {} {} L {} {}",
        fmt_f(p.0),
        fmt_f(p.1),
        fmt_f(q.0),
        fmt_f(q.1)
    )
}

/// Path for an exterior connection: a mild outward bulge.
fn exterior_path(p: (f64, f64), q: (f64, f64)) -> String {
    let dx = q.0 - p.0;
    let dy = q.1 - p.1;
    let d = libm::sqrt(dx * dx + dy * dy);
    let r = 0.56 * d;
    let m = ((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0);
    let offset = libm::sqrt((r * r - d * d / 4.0).max(0.0));
    let m_len = libm::sqrt(m.0 * m.0 + m.1 * m.1);
    // Center sits on the origin side of the chord, so the arc bows outward.
    let n = if m_len > 1e-9 {
        (-m.0 / m_len, -m.1 / m_len)
    } else {
        // Antipodal landing points: pick a fixed perpendicular.
        (-dy / d, dx / d)
    };
    let c = (m.0 + n.0 * offset, m.1 + n.1 * offset);
    arc_path(p, q, c, r)
}

/// Renders the spec to SVG text.
pub fn render(spec: &RenderSpec) -> String {
    let graph = spec.graph;
    let mut component_of = alloc::vec![0usize; graph.vertices().len()];
    for (i, comp) in graph.components().iter().enumerate() {
        for &v in &comp.vertices {
            component_of[v] = i;
        }
    }

    let mut out = String::new();
    let v2 = fmt_f(2.0 * VIEW);
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"-{v} -{v} {v2} {v2}\">",
        spec.width,
        spec.height,
        v = fmt_f(VIEW),
    );
    let _ = writeln!(
        out,
        "<rect x=\"-{v}\" y=\"-{v}\" width=\"{v2}\" height=\"{v2}\" fill=\"#ffffff\"/>",
        v = fmt_f(VIEW),
    );
    out.push_str(
        "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#444444\" stroke-width=\"0.008\"/>\n",
    );

    let mut labels = String::new();
    for (vid, vertex) in graph.vertices().iter().enumerate() {
        let highlighted = spec.highlight.contains(&component_of[vid]);
        let (side_tag, base_color, label_radius) = match vertex.side {
            Side::A => ("a", COLOR_A, 1.08),
            Side::B => ("b", COLOR_B, 1.16),
        };
        let color = if highlighted { COLOR_HL } else { base_color };
        let width = if highlighted { 0.022 } else { 0.014 };
        let hl_tag = if highlighted { " hl" } else { "" };
        // Side B is drawn at the negated angles to realise the gluing.
        let positions: Vec<(f64, f64)> = vertex
            .angles
            .iter()
            .map(|t| match vertex.side {
                Side::A => point(t),
                Side::B => point(&t.neg_mod1()),
            })
            .collect();
        if positions.len() == 1 {
            let (x, y) = positions[0];
            let _ = writeln!(
                out,
                "<circle class=\"dot {side_tag}{hl_tag}\" cx=\"{}\" cy=\"{}\" r=\"0.02\" fill=\"{color}\"/>",
                fmt_f(x),
                fmt_f(y),
            );
        } else {
            // Fan from the cyclically first member to each other member.
            for target in &positions[1..] {
                let path = match vertex.side {
                    Side::A => interior_path(positions[0], *target, spec.style),
                    Side::B => exterior_path(positions[0], *target),
                };
                let _ = writeln!(
                    out,
                    "<path class=\"chord {side_tag}{hl_tag}\" d=\"{path}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{}\"/>",
                    fmt_f(width),
                );
            }
        }
        if spec.label_angles {
            for (t, (x, y)) in vertex.angles.iter().zip(&positions) {
                let norm = libm::sqrt(x * x + y * y).max(1e-9);
                let (lx, ly) = (x / norm * label_radius, y / norm * label_radius);
                let _ = writeln!(
                    labels,
                    "<text class=\"label {side_tag}\" x=\"{}\" y=\"{}\" font-size=\"0.08\" fill=\"{color}\" text-anchor=\"middle\" dominant-baseline=\"middle\">{t}</text>",
                    fmt_f(lx),
                    fmt_f(ly),
                );
            }
        }
    }
    out.push_str(&labels);
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mating::{build_graph, ChordSystem};
    use alloc::vec;

    fn graph_of(a_id: &str, b_id: &str) -> RayClassGraph {
        let la: crate::limb::LimbId = a_id.parse().unwrap();
        let lb: crate::limb::LimbId = b_id.parse().unwrap();
        build_graph(
            &ChordSystem::from_alpha(&la.theta().unwrap(), Side::A).unwrap(),
            &ChordSystem::from_alpha(&lb.theta().unwrap(), Side::B).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn deterministic_output() {
        let graph = graph_of("4/7+", "6/7-");
        let spec = RenderSpec::new(&graph, 640, 640)
            .unwrap()
            .with_labels(true)
            .highlight_loops();
        assert_eq!(spec.render(), spec.render());
    }

    #[test]
    fn element_count_matches_class_sizes() {
        let graph = graph_of("2/3+", "2/3+");
        let svg = RenderSpec::new(&graph, 400, 400).unwrap().render();
        let expected: usize = graph
            .vertices()
            .iter()
            .map(|v| v.angles.len().saturating_sub(1).max(1))
            .sum();
        let drawn = svg.matches("class=\"chord").count() + svg.matches("class=\"dot").count();
        assert_eq!(drawn, expected);
    }

    #[test]
    fn highlight_marks_loop_segments() {
        let graph = graph_of("4/7+", "6/7-");
        let svg = RenderSpec::new(&graph, 400, 400)
            .unwrap()
            .highlight_loops()
            .render();
        assert_eq!(svg.matches(" hl\"").count(), 6);
        assert_eq!(svg.matches(COLOR_HL).count(), 6);
    }

    #[test]
    fn empty_graph_renders_circle_only() {
        let empty_a = ChordSystem::new(Side::A, vec![]).unwrap();
        let empty_b = ChordSystem::new(Side::B, vec![]).unwrap();
        let graph = build_graph(&empty_a, &empty_b).unwrap();
        let svg = RenderSpec::new(&graph, 100, 100).unwrap().render();
        assert!(svg.contains("<circle cx=\"0\" cy=\"0\" r=\"1\""));
        assert_eq!(svg.matches("class=\"chord").count(), 0);
        assert_eq!(svg.matches("class=\"dot").count(), 0);
    }

    #[test]
    fn size_validation() {
        let empty_a = ChordSystem::new(Side::A, vec![]).unwrap();
        let empty_b = ChordSystem::new(Side::B, vec![]).unwrap();
        let graph = build_graph(&empty_a, &empty_b).unwrap();
        assert!(matches!(
            RenderSpec::new(&graph, 0, 100),
            Err(RenderError::InvalidSize)
        ));
        assert!(matches!(
            RenderSpec::new(&graph, 100, 100)
                .unwrap()
                .highlight_components(&[5]),
            Err(RenderError::UnknownComponent { component: 5 })
        ));
    }
}
