//! Named points of a triangle: classical centers, Brocard points, the
//! symmedian points `S_v`, the median points `M_v`, isogonal conjugation,
//! inversion in the circumcircle, and the eleven points whose Miquel
//! triangles are similar to the host.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{
    circumcircle, directed_angle, invert_point, line_circle_intersections, reflect_over_point, second_intersection,
    Circle, DirectedAngle, Line, Point,
};
use crate::triangle::{Correspondence, Vertex, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CenterKind {
    Circumcenter,
    Orthocenter,
    Centroid,
    Incenter,
    Excenter(Vertex),
    FirstBrocard,
    SecondBrocard,
    SPoint(Vertex),
    MPoint(Vertex),
}

impl CenterKind {
    pub fn label(&self) -> String {
        match self {
            CenterKind::Circumcenter => "O".into(),
            CenterKind::Orthocenter => "H".into(),
            CenterKind::Centroid => "G".into(),
            CenterKind::Incenter => "L".into(),
            CenterKind::Excenter(v) => format!("L_{v}"),
            CenterKind::FirstBrocard => "Ω₁".into(),
            CenterKind::SecondBrocard => "Ω₂".into(),
            CenterKind::SPoint(v) => format!("S_{v}"),
            CenterKind::MPoint(v) => format!("M_{v}"),
        }
    }
}

impl fmt::Display for CenterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BrocardKind {
    First,
    Second,
}

/// Any named point. Classical kinds never fail; the others propagate the
/// errors of their constructions.
pub fn center(t: &Triangle, kind: CenterKind) -> Result<Point> {
    Ok(match kind {
        CenterKind::Circumcenter => circumcenter(t),
        CenterKind::Orthocenter => orthocenter(t),
        CenterKind::Centroid => t.centroid(),
        CenterKind::Incenter => incenter(t),
        CenterKind::Excenter(v) => excenter(t, v),
        CenterKind::FirstBrocard => brocard_point(t, BrocardKind::First)?,
        CenterKind::SecondBrocard => brocard_point(t, BrocardKind::Second)?,
        CenterKind::SPoint(v) => s_point(t, v)?,
        CenterKind::MPoint(v) => m_point(t, v)?,
    })
}

pub fn circumcenter(t: &Triangle) -> Point {
    t.circumcircle().center
}

pub fn orthocenter(t: &Triangle) -> Point {
    t.a() + t.b() + t.c() - circumcenter(t) * 2.0
}

pub fn incenter(t: &Triangle) -> Point {
    let [a, b, c] = t.sides();
    (t.a() * a + t.b() * b + t.c() * c) / (a + b + c)
}

/// Center of the excircle opposite `v`.
pub fn excenter(t: &Triangle, v: Vertex) -> Point {
    let mut w = t.sides();
    w[v.index()] = -w[v.index()];
    (t.a() * w[0] + t.b() * w[1] + t.c() * w[2]) / (w[0] + w[1] + w[2])
}

/// Foot `D` of the symmedian from `v` on the opposite side line, splitting
/// it in the ratio of the squared adjacent sides.
pub fn symmedian_foot(t: &Triangle, v: Vertex) -> Point {
    let (pb, pc) = (t.vertex(v.next()), t.vertex(v.prev()));
    // |v pb|² and |v pc|²
    let near = t.side(v.prev()).powi(2);
    let far = t.side(v.next()).powi(2);
    // D = pb + near/(near+far) (pc - pb) gives |pb D| / |D pc| = near / far
    pb + (pc - pb) * (near / (near + far))
}

/// Circle tangent at `touch` to the line `touch → along`, passing through `through`.
fn tangent_circle(touch: Point, along: Point, through: Point) -> Result<Circle> {
    let n = (along - touch).perp().normalized().ok_or(Error::DegenerateTriangle)?;
    let w = through - touch;
    let denom = 2.0 * n.dot(w);
    if denom == 0.0 {
        return Err(Error::DegenerateCircle);
    }
    let t = w.norm_sq() / denom;
    Ok(Circle::new(touch + n * t, t.abs()))
}

/// Brocard points from two tangent circles.
///
/// First: circle through `A` tangent to `BC` at `B`, and circle through `B`
/// tangent to `CA` at `C`. Second: circle through `A` tangent to `CB` at `C`,
/// and circle through `B` tangent to `AC` at `A`.
pub fn brocard_point(t: &Triangle, which: BrocardKind) -> Result<Point> {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let (c1, c2, shared) = match which {
        BrocardKind::First => (tangent_circle(b, c, a)?, tangent_circle(c, a, b)?, b),
        BrocardKind::Second => (tangent_circle(c, b, a)?, tangent_circle(a, c, b)?, a),
    };
    let pts = crate::kernel::circle_circle_intersections(&c1, &c2, t.tolerance())?;
    pts.into_iter()
        .max_by(|p, q| p.distance(shared).total_cmp(&q.distance(shared)))
        .filter(|p| p.distance(shared) > t.length_eps())
        .ok_or(Error::DegenerateCircle)
}

/// Point on the symmedian from `v` that sees the opposite side at twice the
/// vertex angle: the intersection of the symmedian with the arc through the
/// other two vertices and the circumcenter.
pub fn s_point(t: &Triangle, v: Vertex) -> Result<Point> {
    if t.is_right_at(v) {
        return Err(Error::RightAngleDegenerate(v.host_letter()));
    }
    let tol = t.tolerance();
    let (a, b, c) = (t.vertex(v), t.vertex(v.next()), t.vertex(v.prev()));
    let arc = circumcircle(b, c, circumcenter(t), tol).map_err(|_| Error::RightAngleDegenerate(v.host_letter()))?;
    let symmedian = Line::through(a, symmedian_foot(t, v))?;
    let at_a = directed_angle(b, a, c, tol)?;
    // ∠CPA ≡ ∠APB ≡ π − ∠A selects the point on the arc containing O.
    let residual = |p: Point| -> f64 {
        let cpa = directed_angle(c, p, a, tol).map(|x| x.distance(-at_a));
        let apb = directed_angle(a, p, b, tol).map(|x| x.distance(-at_a));
        match (cpa, apb) {
            (Ok(x), Ok(y)) => x.max(y),
            _ => f64::INFINITY,
        }
    };
    line_circle_intersections(&symmedian, &arc, tol)
        .into_iter()
        .map(|p| (residual(p), p))
        .min_by(|x, y| x.0.total_cmp(&y.0))
        .map(|(_, p)| p)
        .ok_or(Error::RightAngleDegenerate(v.host_letter()))
}

/// Median point `M_v`, the isogonal conjugate of `S_v`.
///
/// Acute at `v`: `F` is the second intersection of the median with the
/// circumcircle and `M_v` is the reflection of `F` in the side midpoint `E`.
/// Obtuse at `v`: `F` completes the parallelogram `v, B, F, C` and `M_v` is
/// the second intersection of the median with circle `FBC`.
pub fn m_point(t: &Triangle, v: Vertex) -> Result<Point> {
    Ok(m_point_construction(t, v)?.m)
}

/// Intermediate points of the `M_v` construction, for drawing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MPointConstruction {
    pub e: Point,
    pub f: Point,
    pub m: Point,
    pub obtuse: bool,
}

pub fn m_point_construction(t: &Triangle, v: Vertex) -> Result<MPointConstruction> {
    if t.is_right_at(v) {
        return Err(Error::RightAngleDegenerate(v.host_letter()));
    }
    let tol = t.tolerance();
    let (a, b, c) = (t.vertex(v), t.vertex(v.next()), t.vertex(v.prev()));
    let e = b.midpoint(c);
    let median = Line::through(a, e)?;
    if t.is_obtuse_at(v) {
        let f = reflect_over_point(e, a);
        let circle = circumcircle(f, b, c, tol)?;
        let m = second_intersection(&median, &circle, f, tol)?.point;
        Ok(MPointConstruction { e, f, m, obtuse: true })
    } else {
        let f = second_intersection(&median, &t.circumcircle(), a, tol)?.point;
        Ok(MPointConstruction { e, f, m: reflect_over_point(e, f), obtuse: false })
    }
}

/// Normalized barycentric coordinates of `p` (signed areas).
pub fn barycentric(t: &Triangle, p: Point) -> [f64; 3] {
    let (a, b, c) = (t.a(), t.b(), t.c());
    let total = Point::orient(a, b, c);
    [Point::orient(p, b, c) / total, Point::orient(a, p, c) / total, Point::orient(a, b, p) / total]
}

/// Isogonal conjugate of `p`, from barycentrics `(u:v:w) ↦ (a²/u : b²/v : c²/w)`.
pub fn isogonal_conjugate(t: &Triangle, p: Point) -> Result<Point> {
    if t.on_side_line(p) {
        return Err(Error::OnSideLine(p));
    }
    let [u, v, w] = barycentric(t, p);
    let [a, b, c] = t.sides();
    let (wa, wb, wc) = (a * a * v * w, b * b * u * w, c * c * u * v);
    let sum = wa + wb + wc;
    // sum = R² − |OP|², the negated power of p
    let r = t.circumradius();
    if sum.abs() <= t.tolerance().length_eps_rel * r * r {
        return Err(Error::NoFiniteConjugate(p));
    }
    Ok((t.a() * wa + t.b() * wb + t.c() * wc) / sum)
}

pub fn inverse_in_circumcircle(t: &Triangle, p: Point) -> Result<Point> {
    invert_point(&t.circumcircle(), p, t.tolerance())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CatalogKind {
    Center(CenterKind),
    InverseOf(CenterKind),
}

impl CatalogKind {
    pub fn label(&self) -> String {
        match self {
            CatalogKind::Center(k) => k.label(),
            CatalogKind::InverseOf(k) => format!("{}*", k.label()),
        }
    }
}

/// One of the eleven points whose Miquel triangles are similar to the host.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub kind: CatalogKind,
    pub location: Point,
    /// Host vertex `i` matches Miquel vertex `expected_similarity.0[i]`.
    pub expected_similarity: Correspondence,
    pub inside_circumcircle: bool,
}

/// The eleven points, interior ones first: `O, Ω₁, Ω₂, S_A, S_B, S_C`, then
/// the circumcircle inverses of the last five.
pub fn eleven_point_catalog(t: &Triangle) -> Result<Vec<CatalogEntry>> {
    if !t.is_scalene() {
        return Err(Error::NotScalene);
    }
    if t.is_right() {
        return Err(Error::RightTriangle);
    }
    let interior = [
        (CenterKind::Circumcenter, Correspondence::IDENTITY),
        (CenterKind::FirstBrocard, Correspondence([Vertex::C, Vertex::A, Vertex::B])),
        (CenterKind::SecondBrocard, Correspondence([Vertex::B, Vertex::C, Vertex::A])),
        (CenterKind::SPoint(Vertex::A), Correspondence::swap_others(Vertex::A)),
        (CenterKind::SPoint(Vertex::B), Correspondence::swap_others(Vertex::B)),
        (CenterKind::SPoint(Vertex::C), Correspondence::swap_others(Vertex::C)),
    ];
    let mut out = Vec::with_capacity(11);
    for (kind, perm) in interior {
        out.push(CatalogEntry {
            kind: CatalogKind::Center(kind),
            location: center(t, kind)?,
            expected_similarity: perm,
            inside_circumcircle: true,
        });
    }
    for i in 1..6 {
        let src = out[i];
        let CatalogKind::Center(kind) = src.kind else { unreachable!() };
        out.push(CatalogEntry {
            kind: CatalogKind::InverseOf(kind),
            location: inverse_in_circumcircle(t, src.location)?,
            // inversion scales every vertex distance by the same factor, so
            // the labels carry over with the orientation reversed
            expected_similarity: src.expected_similarity,
            inside_circumcircle: false,
        });
    }
    Ok(out)
}

/// Directed-angle test of isogonal conjugacy: `∠CBQ = ∠PBA`, `∠BAP = ∠QAC`,
/// `∠ACQ = ∠PCB`. Returns the three residuals.
pub fn isogonal_residuals(t: &Triangle, p: Point, q: Point) -> Result<[f64; 3]> {
    let tol = t.tolerance();
    let (a, b, c) = (t.a(), t.b(), t.c());
    let at_b = directed_angle(c, b, q, tol)?.distance(directed_angle(p, b, a, tol)?);
    let at_a = directed_angle(b, a, p, tol)?.distance(directed_angle(q, a, c, tol)?);
    let at_c = directed_angle(a, c, q, tol)?.distance(directed_angle(p, c, b, tol)?);
    Ok([at_b, at_a, at_c])
}

/// Directed angles `(∠BPC, ∠CPA, ∠APB)`.
pub fn vertex_view_angles(t: &Triangle, p: Point) -> Result<[DirectedAngle; 3]> {
    let tol = t.tolerance();
    let (a, b, c) = (t.a(), t.b(), t.c());
    Ok([directed_angle(b, p, c, tol)?, directed_angle(c, p, a, tol)?, directed_angle(a, p, b, tol)?])
}
