//! Deterministic SVG figures of a scene.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::centers::{self, BrocardKind};
use crate::error::{Error, Result};
use crate::kernel::{circumcircle, line_circle_intersections, Circle, Line, Point};
use crate::miquel::{self, Pedal, Triad};
use crate::scene::Scene;
use crate::triangle::Vertex;

const SIZE_PX: u32 = 800;
const MARGIN: f64 = 1.2;

/// What to draw. The triangle itself is always drawn when anything is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Element {
    Triangle,
    Circumcircle,
    MiquelCircles,
    Centers,
    Pedal,
    Simson,
    /// Median, symmedian, `E`, `F`, `S_v` and `M_v` at one vertex.
    MConstruction(Vertex),
}

impl Element {
    /// Parses a kebab-case name; `m-construction` uses `vertex`.
    pub fn parse(name: &str, vertex: Vertex) -> Option<Element> {
        Some(match name {
            "triangle" => Element::Triangle,
            "circumcircle" => Element::Circumcircle,
            "miquel-circles" => Element::MiquelCircles,
            "centers" => Element::Centers,
            "pedal" => Element::Pedal,
            "simson" => Element::Simson,
            "m-construction" => Element::MConstruction(vertex),
            _ => return None,
        })
    }
}

enum Shape {
    Polygon([Point; 3], &'static str),
    Circle(Circle, &'static str),
    Line(Line, &'static str),
    Segment(Point, Point, &'static str),
    Dot(Point, String),
}

struct Canvas {
    shapes: Vec<(&'static str, Shape)>,
}

impl Canvas {
    fn add(&mut self, group: &'static str, shape: Shape) {
        self.shapes.push((group, shape));
    }

    /// Circle around the circumcenter enclosing every finite shape.
    fn bounds(&self, center: Point, min_radius: f64) -> Circle {
        let mut r = min_radius;
        for (_, s) in &self.shapes {
            r = r.max(match s {
                Shape::Polygon(pts, _) => pts.iter().map(|p| p.distance(center)).fold(0.0, f64::max),
                Shape::Circle(c, _) => c.center.distance(center) + c.radius,
                Shape::Line(..) => 0.0,
                Shape::Segment(a, b, _) => a.distance(center).max(b.distance(center)),
                Shape::Dot(p, _) => p.distance(center),
            });
        }
        Circle::new(center, r * MARGIN)
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.000000".to_string()
    } else {
        s
    }
}

fn xy(p: Point) -> (String, String) {
    (num(p.x), num(-p.y))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn triad_for(scene: &Scene) -> Result<Triad> {
    let t = scene.triangle;
    match (scene.triad, scene.point) {
        (Some([u, v, w]), _) => Triad::new(t, u, v, w),
        (None, Some(p)) => miquel::family_member(&t, p, scene.theta.unwrap_or_default()),
        (None, None) => Err(Error::InvalidScene("Miquel circles need a triad or a point P".into())),
    }
}

fn need_point(scene: &Scene, what: &str) -> Result<Point> {
    scene.point.ok_or_else(|| Error::InvalidScene(format!("{what} needs a point P")))
}

/// Renders the selected elements of `scene` as a standalone SVG document.
pub fn render_figure(scene: &Scene, elements: &[Element]) -> Result<String> {
    if elements.is_empty() {
        return Err(Error::EmptySelection);
    }
    let t = scene.triangle;
    let o = centers::circumcenter(&t);
    let mut canvas = Canvas { shapes: Vec::new() };
    canvas.add("triangle", Shape::Polygon(t.vertices(), "#000000"));
    for v in Vertex::ALL {
        canvas.add("triangle", Shape::Dot(t.vertex(v), v.host_letter().to_string()));
    }
    let mut seen = Vec::new();
    for &el in elements {
        if seen.contains(&el) {
            continue;
        }
        seen.push(el);
        match el {
            Element::Triangle => {}
            Element::Circumcircle => canvas.add("circumcircle", Shape::Circle(t.circumcircle(), "#555555")),
            Element::MiquelCircles => {
                let triad = triad_for(scene)?;
                let m = miquel::miquel_point(&triad)?;
                for c in m.circles {
                    canvas.add("miquel-circles", Shape::Circle(c, "#1f77b4"));
                }
                for v in Vertex::ALL {
                    canvas.add("miquel-circles", Shape::Dot(triad.point(v), v.miquel_letter().to_string()));
                }
                canvas.add("miquel-circles", Shape::Dot(m.point, "P".into()));
            }
            Element::Centers => {
                let mut named = vec![
                    ("O", o),
                    ("H", centers::orthocenter(&t)),
                    ("L", centers::incenter(&t)),
                    ("G", t.centroid()),
                ];
                for (label, kind) in [("Ω₁", BrocardKind::First), ("Ω₂", BrocardKind::Second)] {
                    if let Ok(p) = centers::brocard_point(&t, kind) {
                        named.push((label, p));
                    }
                }
                for (label, p) in named {
                    canvas.add("centers", Shape::Dot(p, label.to_string()));
                }
            }
            Element::Pedal | Element::Simson => {
                let p = need_point(scene, "a pedal figure")?;
                match miquel::pedal_triad(&t, p)? {
                    Pedal::Triad(triad) if el == Element::Pedal => {
                        canvas.add("pedal", Shape::Polygon(triad.points(), "#2ca02c"));
                        for v in Vertex::ALL {
                            canvas.add("pedal", Shape::Segment(p, triad.point(v), "#98df8a"));
                        }
                    }
                    Pedal::Triad(_) => return Err(Error::InvalidScene("P is not on the circumcircle".into())),
                    Pedal::Simson(line) => {
                        canvas.add("simson", Shape::Line(line.line, "#d62728"));
                        for (v, f) in Vertex::ALL.into_iter().zip(line.feet) {
                            canvas.add("simson", Shape::Segment(p, f, "#ff9896"));
                            canvas.add("simson", Shape::Dot(f, v.miquel_letter().to_string()));
                        }
                    }
                }
                canvas.add("pedal", Shape::Dot(p, "P".into()));
            }
            Element::MConstruction(v) => {
                let k = centers::m_point_construction(&t, v)?;
                let s = centers::s_point(&t, v)?;
                let a = t.vertex(v);
                let letter = v.host_letter();
                canvas.add("m-construction", Shape::Line(Line::through(a, k.e)?, "#9467bd"));
                canvas.add("m-construction", Shape::Line(Line::through(a, centers::symmedian_foot(&t, v))?, "#8c564b"));
                if k.obtuse {
                    let c = circumcircle(k.f, t.vertex(v.next()), t.vertex(v.prev()), t.tolerance())?;
                    canvas.add("m-construction", Shape::Circle(c, "#c5b0d5"));
                } else {
                    canvas.add("m-construction", Shape::Circle(t.circumcircle(), "#555555"));
                }
                canvas.add("m-construction", Shape::Dot(k.e, "E".into()));
                canvas.add("m-construction", Shape::Dot(k.f, "F".into()));
                canvas.add("m-construction", Shape::Dot(s, format!("S_{letter}")));
                canvas.add("m-construction", Shape::Dot(k.m, format!("M_{letter}")));
            }
        }
    }

    let bounds = canvas.bounds(o, t.circumradius());
    let w = num(2.0 * bounds.radius);
    let stroke = num(bounds.radius * 0.004);
    let dot = num(bounds.radius * 0.008);
    let font = num(bounds.radius * 0.04);
    let mut out = String::new();
    let (x0, y0) = (num(o.x - bounds.radius), num(-o.y - bounds.radius));
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE_PX}" height="{SIZE_PX}" viewBox="{x0} {y0} {w} {w}">"#
    )
    .unwrap();
    let mut open: Option<&str> = None;
    for (group, shape) in &canvas.shapes {
        if open != Some(group) {
            if open.is_some() {
                out.push_str("</g>\n");
            }
            writeln!(out, r#"<g id="{group}">"#).unwrap();
            open = Some(group);
        }
        match shape {
            Shape::Polygon(pts, color) => {
                let list: Vec<String> = pts.iter().map(|&p| xy(p)).map(|(x, y)| format!("{x},{y}")).collect();
                writeln!(
                    out,
                    r#"<polygon points="{}" fill="none" stroke="{color}" stroke-width="{stroke}"/>"#,
                    list.join(" ")
                )
                .unwrap();
            }
            Shape::Circle(c, color) => {
                let (cx, cy) = xy(c.center);
                writeln!(
                    out,
                    r#"<circle cx="{cx}" cy="{cy}" r="{}" fill="none" stroke="{color}" stroke-width="{stroke}"/>"#,
                    num(c.radius)
                )
                .unwrap();
            }
            Shape::Line(line, color) => {
                let ends = line_circle_intersections(line, &bounds, t.tolerance());
                if let [p, q] = ends[..] {
                    segment(&mut out, p, q, color, &stroke);
                }
            }
            Shape::Segment(p, q, color) => segment(&mut out, *p, *q, color, &stroke),
            Shape::Dot(p, label) => {
                let (x, y) = xy(*p);
                writeln!(out, r##"<circle cx="{x}" cy="{y}" r="{dot}" fill="#000000"/>"##).unwrap();
                let (lx, ly) = xy(*p + Point::new(bounds.radius * 0.015, bounds.radius * 0.015));
                writeln!(out, r#"<text x="{lx}" y="{ly}" font-size="{font}">{}</text>"#, escape(label)).unwrap();
            }
        }
    }
    if open.is_some() {
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn segment(out: &mut String, p: Point, q: Point, color: &str, stroke: &str) {
    let (x1, y1) = xy(p);
    let (x2, y2) = xy(q);
    writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{color}" stroke-width="{stroke}"/>"#)
        .unwrap();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scene::parse_scene;
    use crate::Triangle;

    fn equilateral_with_o() -> Scene {
        let h = 3f64.sqrt() / 2.0;
        let t = Triangle::new(Point::new(0.0, 1.0), Point::new(-h, -0.5), Point::new(h, -0.5)).unwrap();
        Scene { point: Some(Point::ORIGIN), ..Scene::new(t) }
    }

    #[test]
    fn empty_selection() {
        assert_eq!(render_figure(&equilateral_with_o(), &[]), Err(Error::EmptySelection));
    }

    #[test]
    fn miquel_circles_of_equilateral_center() {
        let svg = render_figure(&equilateral_with_o(), &[Element::MiquelCircles]).unwrap();
        let group = svg.split(r#"<g id="miquel-circles">"#).nth(1).unwrap();
        // each circle passes through a vertex and two midpoints: radius R/2
        assert_eq!(group.matches(r#"r="0.500000" fill="none""#).count(), 3);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn view_box_is_circumcircle_with_margin() {
        let svg = render_figure(&equilateral_with_o(), &[Element::Triangle]).unwrap();
        assert!(svg.contains(r#"viewBox="-1.200000 -1.200000 2.400000 2.400000""#), "{svg}");
    }

    #[test]
    fn simson_line_for_circumcircle_point() {
        let mut s = parse_scene(r#"{"A":[0,0],"B":[4,0],"C":[1,3]}"#).unwrap();
        let c = s.triangle.circumcircle();
        s.point = Some(c.center + Point::new(0.6, -0.8) * c.radius);
        let svg = render_figure(&s, &[Element::Simson]).unwrap();
        assert!(svg.contains(r#"<g id="simson">"#));
        assert_eq!(svg.matches("stroke=\"#d62728\"").count(), 1);
        s.point = Some(Point::new(1.5, 1.0));
        assert!(render_figure(&s, &[Element::Simson]).is_err());
    }

    #[test]
    fn m_construction_labels() {
        let s = parse_scene(r#"{"A":[0,0],"B":[4,0],"C":[1.6,0.9]}"#).unwrap();
        for v in Vertex::ALL {
            let svg = render_figure(&s, &[Element::MConstruction(v)]).unwrap();
            let l = v.host_letter();
            for label in ["E", "F", &format!("S_{l}"), &format!("M_{l}")] {
                assert!(svg.contains(&format!(">{label}</text>")), "{label}");
            }
        }
    }

    #[test]
    fn byte_stable() {
        let s = equilateral_with_o();
        let all = [Element::Circumcircle, Element::Centers, Element::Pedal, Element::MiquelCircles];
        assert_eq!(render_figure(&s, &all).unwrap(), render_figure(&s, &all).unwrap());
    }
}
