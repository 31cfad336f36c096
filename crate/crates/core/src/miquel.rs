//! Miquel triads, the Miquel point, the family of Miquel triangles of a
//! fixed point, angle decompositions and role detection.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::centers::{self, BrocardKind};
use crate::error::{Error, Result};
use crate::kernel::{
    circumcircle, directed_angle, line_intersection, other_circle_intersection, ray_angle, Circle, DirectedAngle,
    Line, Point,
};
use crate::triangle::{triangle_contains, Containment, Correspondence, Triangle, Vertex};

/// Relative band around the circumcircle inside which pedal triads are
/// treated as Simson lines.
pub const SIMSON_BAND: f64 = 1e-7;

/// Relative distance within which a triad's Miquel point is accepted as a
/// given point.
pub const MIQUEL_MATCH_BAND: f64 = 1e-7;

/// Three points on the side lines of `host`, by affine parameter:
/// `X = B + u(C − B)`, `Y = C + v(A − C)`, `Z = A + w(B − A)`.
///
/// Parameters outside `[0, 1]` put the point on a side extension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triad {
    host: Triangle,
    params: [f64; 3],
}

impl Triad {
    pub fn new(host: Triangle, u: f64, v: f64, w: f64) -> Result<Triad> {
        let params = [u, v, w];
        if params.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFiniteParameter);
        }
        let eps = host.length_eps();
        for (i, &s) in params.iter().enumerate() {
            let len = host.side(Vertex::from_index(i));
            if (s * len).abs() <= eps || ((1.0 - s) * len).abs() <= eps {
                return Err(Error::TriadAtVertex);
            }
        }
        Ok(Triad { host, params })
    }

    /// Triad from points already lying on the side lines; parameters are
    /// recovered by projection.
    pub fn from_points(host: Triangle, x: Point, y: Point, z: Point) -> Result<Triad> {
        let pts = [x, y, z];
        let mut params = [0.0; 3];
        for v in Vertex::ALL {
            let start = host.vertex(v.next());
            let dir = host.vertex(v.prev()) - start;
            params[v.index()] = (pts[v.index()] - start).dot(dir) / dir.norm_sq();
        }
        Triad::new(host, params[0], params[1], params[2])
    }

    pub fn host(&self) -> &Triangle {
        &self.host
    }

    pub fn params(&self) -> [f64; 3] {
        self.params
    }

    pub fn point(&self, v: Vertex) -> Point {
        let start = self.host.vertex(v.next());
        start + (self.host.vertex(v.prev()) - start) * self.params[v.index()]
    }

    pub fn points(&self) -> [Point; 3] {
        Vertex::ALL.map(|v| self.point(v))
    }

    /// Triangle `XYZ`, failing when the triad is collinear.
    pub fn triangle(&self) -> Result<Triangle> {
        let [x, y, z] = self.points();
        Triangle::with_tolerance(x, y, z, self.host.tolerance())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MiquelResult {
    pub point: Point,
    /// Circles through `A, Y, Z`, `B, Z, X` and `C, X, Y`.
    pub circles: [Circle; 3],
    /// Largest distance from `point` to any of the three circles.
    pub residual: f64,
    /// The first two circles touch at `Z`, which is then the Miquel point.
    pub tangent: bool,
}

/// Miquel point of a triad: second intersection of circles `AYZ` and `BZX`,
/// checked against circle `CXY`.
pub fn miquel_point(triad: &Triad) -> Result<MiquelResult> {
    let t = triad.host();
    let tol = t.tolerance();
    let [x, y, z] = triad.points();
    let circ = |p, q, r| circumcircle(p, q, r, tol).map_err(|_| Error::DegenerateCircle);
    let circles = [circ(t.a(), y, z)?, circ(t.b(), z, x)?, circ(t.c(), x, y)?];
    let point = other_circle_intersection(&circles[0], &circles[1], z).map_err(|_| Error::DegenerateCircle)?;
    let residual = circles.iter().map(|c| c.offset(point).abs()).fold(0.0, f64::max);
    let tangent = point.distance(z) <= t.length_eps();
    Ok(MiquelResult { point, circles, residual, tangent })
}

/// Feet of the perpendiculars from `p` to the side lines, in `X, Y, Z` order.
pub fn pedal_feet(t: &Triangle, p: Point) -> [Point; 3] {
    Vertex::ALL.map(|v| t.side_line(v).project(p))
}

/// Collinear pedal feet of a point on the circumcircle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimsonLine {
    pub line: Line,
    pub feet: [Point; 3],
}

impl SimsonLine {
    fn fit(feet: [Point; 3]) -> SimsonLine {
        let pairs = [(0, 1), (1, 2), (2, 0)];
        let (i, j) = pairs
            .into_iter()
            .max_by(|a, b| feet[a.0].distance(feet[a.1]).total_cmp(&feet[b.0].distance(feet[b.1])))
            .unwrap();
        let line = Line::through(feet[i], feet[j]).unwrap_or_else(|_| Line::new(feet[i], Point::new(1.0, 0.0)).unwrap());
        SimsonLine { line, feet }
    }

    /// Largest distance of a foot from the fitted line.
    pub fn deviation(&self) -> f64 {
        self.feet.iter().map(|&f| self.line.distance(f)).fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Pedal {
    Triad(Triad),
    Simson(SimsonLine),
}

impl Pedal {
    pub fn triad(self) -> Option<Triad> {
        match self {
            Pedal::Triad(t) => Some(t),
            Pedal::Simson(_) => None,
        }
    }
}

/// Pedal triad of `p`; a [`SimsonLine`] when `p` is on the circumcircle.
pub fn pedal_triad(t: &Triangle, p: Point) -> Result<Pedal> {
    if t.on_side_line(p) {
        return Err(Error::OnSideLine(p));
    }
    let feet = pedal_feet(t, p);
    if t.on_circumcircle(p, SIMSON_BAND) {
        return Ok(Pedal::Simson(SimsonLine::fit(feet)));
    }
    Triad::from_points(*t, feet[0], feet[1], feet[2]).map(Pedal::Triad)
}

/// Pedal triangle of `p`, for points off the side lines and the circumcircle.
pub fn pedal_triangle(t: &Triangle, p: Point) -> Result<Triangle> {
    match pedal_triad(t, p)? {
        Pedal::Triad(triad) => triad.triangle(),
        Pedal::Simson(_) => Err(Error::OnCircumcircle(p)),
    }
}

/// Triangle of the three pedal feet. Unlike [`pedal_triangle`] this accepts
/// points on a side line, where one foot is the point itself.
pub fn feet_triangle(t: &Triangle, p: Point) -> Result<Triangle> {
    let [x, y, z] = pedal_feet(t, p);
    Triangle::with_tolerance(x, y, z, t.tolerance())
}

/// Member of the Miquel family of `p`: each line `p → foot` is turned about
/// `p` by `theta` and cut with its side line. `theta = 0` gives the pedal
/// triad; the resulting triangle is the pedal triangle turned by `theta`
/// about `p` and scaled by `1 / cos theta`.
pub fn family_member(t: &Triangle, p: Point, theta: DirectedAngle) -> Result<Triad> {
    if t.on_side_line(p) {
        return Err(Error::OnSideLine(p));
    }
    let th = theta.radians();
    if th.abs() >= FRAC_PI_2 - t.tolerance().angle_eps {
        return Err(Error::ThetaOutOfRange(th));
    }
    let mut pts = [Point::ORIGIN; 3];
    for v in Vertex::ALL {
        let side = t.side_line(v);
        let foot = side.project(p);
        let ray = Line::new(p, (foot - p).rotate(th))?;
        pts[v.index()] = line_intersection(&ray, &side).ok_or(Error::ThetaOutOfRange(th))?;
    }
    Triad::from_points(*t, pts[0], pts[1], pts[2])
}

/// The six directed angles `α₁ = ∠PAC`, `α₂ = ∠BAP`, `β₁ = ∠PBA`,
/// `β₂ = ∠CBP`, `γ₁ = ∠PCB`, `γ₂ = ∠ACP`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngleSextet {
    pub alpha1: DirectedAngle,
    pub alpha2: DirectedAngle,
    pub beta1: DirectedAngle,
    pub beta2: DirectedAngle,
    pub gamma1: DirectedAngle,
    pub gamma2: DirectedAngle,
}

impl AngleSextet {
    /// `(α₁ + α₂, β₁ + β₂, γ₁ + γ₂)`, which equal the directed vertex angles.
    pub fn sums(&self) -> [DirectedAngle; 3] {
        [self.alpha1 + self.alpha2, self.beta1 + self.beta2, self.gamma1 + self.gamma2]
    }

    /// The sextet of the isogonal conjugate: each pair swaps.
    pub fn swapped(&self) -> AngleSextet {
        AngleSextet {
            alpha1: self.alpha2,
            alpha2: self.alpha1,
            beta1: self.beta2,
            beta2: self.beta1,
            gamma1: self.gamma2,
            gamma2: self.gamma1,
        }
    }
}

pub fn angle_sextet(t: &Triangle, p: Point) -> Result<AngleSextet> {
    if Vertex::ALL.iter().any(|&v| t.vertex(v).distance(p) <= t.length_eps()) {
        return Err(Error::AtVertex);
    }
    let tol = t.tolerance();
    let (a, b, c) = (t.a(), t.b(), t.c());
    Ok(AngleSextet {
        alpha1: directed_angle(p, a, c, tol)?,
        alpha2: directed_angle(b, a, p, tol)?,
        beta1: directed_angle(p, b, a, tol)?,
        beta2: directed_angle(c, b, p, tol)?,
        gamma1: directed_angle(p, c, b, tol)?,
        gamma2: directed_angle(a, c, p, tol)?,
    })
}

/// Predicted angles of the Miquel triangle of `p`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MiquelAngles {
    pub x: DirectedAngle,
    pub y: DirectedAngle,
    pub z: DirectedAngle,
    /// `p` is not strictly inside the circumcircle, outside the hypothesis
    /// under which the formulas are usually stated.
    pub extrapolated: bool,
}

impl MiquelAngles {
    pub fn as_array(&self) -> [DirectedAngle; 3] {
        [self.x, self.y, self.z]
    }
}

/// `∠X = β₁ + γ₂`, `∠Y = γ₁ + α₂`, `∠Z = α₁ + β₂`.
pub fn miquel_triangle_angles(t: &Triangle, p: Point) -> Result<MiquelAngles> {
    let s = angle_sextet(t, p)?;
    Ok(MiquelAngles {
        x: s.beta1 + s.gamma2,
        y: s.gamma1 + s.alpha2,
        z: s.alpha1 + s.beta2,
        extrapolated: !t.circumcircle().contains_strictly(p),
    })
}

/// Directed angles `∠YXZ`, `∠ZYX`, `∠XZY` of a triangle's vertex positions.
pub fn measured_angles(xyz: &Triangle) -> [DirectedAngle; 3] {
    Vertex::ALL.map(|v| xyz.directed_angle_at(v))
}

/// Residuals of `∠A + ∠X = ∠BPC`, `∠B + ∠Y = ∠CPA`, `∠C + ∠Z = ∠APB`.
pub fn verify_miquel_equations(t: &Triangle, p: Point, triad: &Triad) -> Result<[f64; 3]> {
    let m = miquel_point(triad)?;
    let off = m.point.distance(p);
    if off > MIQUEL_MATCH_BAND * t.circumradius() {
        return Err(Error::NotAMiquelTriad(off / t.circumradius()));
    }
    let xyz = triad.triangle()?;
    let host = Vertex::ALL.map(|v| t.directed_angle_at(v));
    let miquel = measured_angles(&xyz);
    let views = centers::vertex_view_angles(t, p)?;
    Ok([0, 1, 2].map(|i| (host[i] + miquel[i]).distance(views[i])))
}

/// Residual of the third equation as it is sometimes printed,
/// `∠A + ∠Z = ∠APB`.
pub fn printed_third_equation_residual(t: &Triangle, p: Point, triad: &Triad) -> Result<f64> {
    let xyz = triad.triangle()?;
    let views = centers::vertex_view_angles(t, p)?;
    Ok((t.directed_angle_at(Vertex::A) + xyz.directed_angle_at(Vertex::C)).distance(views[2]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    Direct,
    Inverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimilarityClass {
    /// Vertex `i` of the first triangle matches `permutation.0[i]` of the second.
    pub permutation: Correspondence,
    pub orientation: Orientation,
    /// Side length of the second triangle over the first.
    pub ratio: f64,
    /// Largest interior-angle mismatch, radians.
    pub residual: f64,
}

/// Largest interior-angle mismatch under `perm`.
pub fn angle_mismatch(t1: &Triangle, t2: &Triangle, perm: Correspondence) -> f64 {
    Vertex::ALL
        .iter()
        .map(|&v| (t1.angle(v) - t2.angle(perm.image(v))).abs())
        .fold(0.0, f64::max)
}

/// All vertex correspondences under which the interior angles agree within
/// `angle_tol`, best first. Empty when the triangles are not similar.
pub fn classify_similarity(t1: &Triangle, t2: &Triangle, angle_tol: f64) -> Vec<SimilarityClass> {
    let mut out: Vec<SimilarityClass> = Correspondence::ALL
        .iter()
        .filter_map(|&perm| {
            let residual = angle_mismatch(t1, t2, perm);
            if residual >= angle_tol {
                return None;
            }
            let ratio = Vertex::ALL.iter().map(|&v| t2.side(perm.image(v)) / t1.side(v)).sum::<f64>() / 3.0;
            let parity = if perm.is_even() { 1.0 } else { -1.0 };
            let orientation = if t1.orientation() == t2.orientation() * parity {
                Orientation::Direct
            } else {
                Orientation::Inverse
            };
            Some(SimilarityClass { permutation: perm, orientation, ratio, residual })
        })
        .collect();
    out.sort_by(|a, b| a.residual.total_cmp(&b.residual));
    out
}

/// Smallest angle mismatch over all six correspondences.
pub fn similarity_residual(t1: &Triangle, t2: &Triangle) -> f64 {
    Correspondence::ALL.iter().map(|&p| angle_mismatch(t1, t2, p)).fold(f64::INFINITY, f64::min)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialRole {
    Circumcenter,
    Orthocenter,
    Incenter,
    Excenter(Vertex),
    FirstBrocard,
    SecondBrocard,
    SRole(Vertex),
    MRole(Vertex),
    QRole(Vertex),
    None,
}

impl SpecialRole {
    pub fn is_in_or_excenter(&self) -> bool {
        matches!(self, SpecialRole::Incenter | SpecialRole::Excenter(_))
    }
}

impl fmt::Display for SpecialRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialRole::Circumcenter => f.write_str("circumcenter"),
            SpecialRole::Orthocenter => f.write_str("orthocenter"),
            SpecialRole::Incenter => f.write_str("incenter"),
            SpecialRole::Excenter(v) => write!(f, "excenter({v})"),
            SpecialRole::FirstBrocard => f.write_str("first-brocard"),
            SpecialRole::SecondBrocard => f.write_str("second-brocard"),
            SpecialRole::SRole(v) => write!(f, "s-role({v})"),
            SpecialRole::MRole(v) => write!(f, "m-role({v})"),
            SpecialRole::QRole(v) => write!(f, "q-role({v})"),
            SpecialRole::None => f.write_str("none"),
        }
    }
}

/// Circle through the two vertices other than `v` and the incenter.
pub fn base_incircle_arc(t: &Triangle, v: Vertex) -> Result<Circle> {
    circumcircle(t.vertex(v.next()), t.vertex(v.prev()), centers::incenter(t), t.tolerance())
}

/// First named role `p` plays in `t`, matching positions within
/// `rel_tol · R`. Candidates are tried in the order of [`SpecialRole`].
pub fn detect_special_role(t: &Triangle, p: Point, rel_tol: f64) -> SpecialRole {
    let eps = rel_tol * t.circumradius();
    let hit = |q: Result<Point>| q.map(|q| q.distance(p) <= eps).unwrap_or(false);
    if hit(Ok(centers::circumcenter(t))) {
        return SpecialRole::Circumcenter;
    }
    if hit(Ok(centers::orthocenter(t))) {
        return SpecialRole::Orthocenter;
    }
    if hit(Ok(centers::incenter(t))) {
        return SpecialRole::Incenter;
    }
    if let Some(v) = Vertex::ALL.into_iter().find(|&v| hit(Ok(centers::excenter(t, v)))) {
        return SpecialRole::Excenter(v);
    }
    if hit(centers::brocard_point(t, BrocardKind::First)) {
        return SpecialRole::FirstBrocard;
    }
    if hit(centers::brocard_point(t, BrocardKind::Second)) {
        return SpecialRole::SecondBrocard;
    }
    if let Some(v) = Vertex::ALL.into_iter().find(|&v| hit(centers::s_point(t, v))) {
        return SpecialRole::SRole(v);
    }
    if let Some(v) = Vertex::ALL.into_iter().find(|&v| hit(centers::m_point(t, v))) {
        return SpecialRole::MRole(v);
    }
    for v in Vertex::ALL {
        let isosceles = (t.side(v.next()) - t.side(v.prev())).abs() <= eps;
        if isosceles && base_incircle_arc(t, v).map(|c| c.offset(p).abs() <= eps).unwrap_or(false) {
            return SpecialRole::QRole(v);
        }
    }
    SpecialRole::None
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParityReport {
    pub host: Containment,
    pub miquel: Containment,
    pub agree: bool,
    /// `|∠XPY + ∠YPZ + ∠ZPX|` over signed ray angles: `2π` inside `XYZ`, `0` outside.
    pub ray_angle_sum: f64,
}

/// Whether `p` is inside the host and inside its pedal triangle.
pub fn containment_parity(t: &Triangle, p: Point) -> Result<ParityReport> {
    if t.on_side_line(p) {
        return Err(Error::OnSideLine(p));
    }
    if t.on_circumcircle(p, SIMSON_BAND) {
        return Err(Error::OnCircumcircle(p));
    }
    let xyz = pedal_triangle(t, p)?;
    let host = triangle_contains(t, p);
    let miquel = triangle_contains(&xyz, p);
    let [x, y, z] = xyz.vertices();
    let ray_angle_sum = (ray_angle(x, p, y) + ray_angle(y, p, z) + ray_angle(z, p, x)).abs();
    Ok(ParityReport { host, miquel, agree: host == miquel, ray_angle_sum })
}
