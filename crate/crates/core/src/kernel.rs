//! Plane primitives: points, directed angles, lines and circles.
//!
//! Length tolerances are relative. Every operation that needs one scales
//! [`Tolerance::length_eps_rel`] by a length natural to its inputs (a radius,
//! the longest pairwise distance) so results do not depend on the units of
//! the caller.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub fn new(x: f64, y: f64) -> Point {
        debug_assert!(x.is_finite() && y.is_finite(), "non-finite point ({x}, {y})");
        Point { x, y }
    }

    #[inline]
    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3-D cross product.
    #[inline]
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    #[inline]
    pub fn distance(self, other: Point) -> f64 {
        (self - other).norm()
    }

    #[inline]
    pub fn midpoint(self, other: Point) -> Point {
        (self + other) * 0.5
    }

    /// Counter-clockwise quarter turn.
    #[inline]
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    pub fn rotate(self, radians: f64) -> Point {
        let (s, c) = radians.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn normalized(self) -> Option<Point> {
        let n = self.norm();
        (n > 0.0 && n.is_finite()).then(|| self / n)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Twice the signed area of `a, b, c`; positive for counter-clockwise.
    #[inline]
    pub fn orient(a: Point, b: Point, c: Point) -> f64 {
        (b - a).cross(c - a)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "({:.*}, {:.*})", p, self.x, p, self.y),
            None => write!(f, "({}, {})", self.x, self.y),
        }
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl AddAssign for Point {
    fn add_assign(&mut self, o: Point) {
        self.x += o.x;
        self.y += o.y;
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

impl Div<f64> for Point {
    type Output = Point;
    fn div(self, s: f64) -> Point {
        Point::new(self.x / s, self.y / s)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

/// Angle between two lines, taken modulo a half turn.
///
/// The stored representative lies in `(-π/2, π/2]`. Sums and differences
/// stay in that range, so angle-chasing identities can be written without
/// case analysis on configuration.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DirectedAngle(f64);

impl DirectedAngle {
    pub const ZERO: DirectedAngle = DirectedAngle(0.0);
    pub const RIGHT: DirectedAngle = DirectedAngle(FRAC_PI_2);

    pub fn new(radians: f64) -> DirectedAngle {
        DirectedAngle(reduce_half_turn(radians))
    }

    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn degrees(self) -> f64 {
        self.0.to_degrees()
    }

    /// Circular distance to `other` on the half-turn circle, in `[0, π/2]`.
    pub fn distance(self, other: DirectedAngle) -> f64 {
        (self - other).0.abs()
    }

    pub fn approx_eq(self, other: DirectedAngle, eps: f64) -> bool {
        self.distance(other) < eps
    }
}

fn reduce_half_turn(x: f64) -> f64 {
    let r = x - PI * (x / PI).round();
    if r <= -FRAC_PI_2 {
        r + PI
    } else if r > FRAC_PI_2 {
        r - PI
    } else {
        r
    }
}

impl Add for DirectedAngle {
    type Output = DirectedAngle;
    fn add(self, o: DirectedAngle) -> DirectedAngle {
        DirectedAngle::new(self.0 + o.0)
    }
}

impl Sub for DirectedAngle {
    type Output = DirectedAngle;
    fn sub(self, o: DirectedAngle) -> DirectedAngle {
        DirectedAngle::new(self.0 - o.0)
    }
}

impl Neg for DirectedAngle {
    type Output = DirectedAngle;
    fn neg(self) -> DirectedAngle {
        DirectedAngle::new(-self.0)
    }
}

impl Mul<f64> for DirectedAngle {
    type Output = DirectedAngle;
    fn mul(self, s: f64) -> DirectedAngle {
        DirectedAngle::new(self.0 * s)
    }
}

impl fmt::Display for DirectedAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.6}°", self.degrees())
    }
}

/// Angle and length tolerances.
///
/// `length_eps_rel` is dimensionless; multiply by a characteristic length
/// (usually a circumradius) via [`Tolerance::length`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub angle_eps: f64,
    pub length_eps_rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { angle_eps: 1e-9, length_eps_rel: 1e-9 }
    }
}

impl Tolerance {
    pub fn new(angle_eps: f64, length_eps_rel: f64) -> Tolerance {
        assert!(angle_eps > 0.0 && length_eps_rel > 0.0, "tolerances must be positive");
        Tolerance { angle_eps, length_eps_rel }
    }

    pub fn length(&self, scale: f64) -> f64 {
        self.length_eps_rel * scale
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Circle {
        debug_assert!(radius > 0.0, "circle radius must be positive");
        Circle { center, radius }
    }

    /// Signed distance from `p` to the circle; negative inside.
    pub fn offset(&self, p: Point) -> f64 {
        p.distance(self.center) - self.radius
    }

    pub fn contains_strictly(&self, p: Point) -> bool {
        self.offset(p) < 0.0
    }

    /// Power of `p` with respect to the circle.
    pub fn power(&self, p: Point) -> f64 {
        (p - self.center).norm_sq() - self.radius * self.radius
    }
}

/// Infinite line through `anchor` with unit `direction`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Line {
    anchor: Point,
    direction: Point,
}

impl Line {
    pub fn new(anchor: Point, direction: Point) -> Result<Line> {
        let direction = direction.normalized().ok_or(Error::CoincidentPoints)?;
        Ok(Line { anchor, direction })
    }

    pub fn through(p: Point, q: Point) -> Result<Line> {
        Line::new(p, q - p)
    }

    pub fn anchor(&self) -> Point {
        self.anchor
    }

    pub fn direction(&self) -> Point {
        self.direction
    }

    /// Signed distance; positive on the left of the direction.
    pub fn signed_distance(&self, p: Point) -> f64 {
        self.direction.cross(p - self.anchor)
    }

    pub fn distance(&self, p: Point) -> f64 {
        self.signed_distance(p).abs()
    }

    pub fn project(&self, p: Point) -> Point {
        self.anchor + self.direction * self.direction.dot(p - self.anchor)
    }

    /// Parameter `t` with `project(p) = anchor + t * direction`.
    pub fn parameter(&self, p: Point) -> f64 {
        self.direction.dot(p - self.anchor)
    }

    pub fn point_at(&self, t: f64) -> Point {
        self.anchor + self.direction * t
    }

    /// Same line, direction rotated about `pivot` by `radians`.
    pub fn rotated_about(&self, pivot: Point, radians: f64) -> Line {
        Line {
            anchor: pivot + (self.anchor - pivot).rotate(radians),
            direction: self.direction.rotate(radians),
        }
    }

    /// Angle from this line to `other`, modulo a half turn.
    pub fn angle_to(&self, other: &Line) -> DirectedAngle {
        DirectedAngle::new(self.direction.cross(other.direction).atan2(self.direction.dot(other.direction)))
    }
}

/// Circle through three points.
pub fn circumcircle(p1: Point, p2: Point, p3: Point, tol: Tolerance) -> Result<Circle> {
    let b = p2 - p1;
    let c = p3 - p1;
    let scale = b.norm().max(c.norm()).max((p3 - p2).norm());
    let d = 2.0 * b.cross(c);
    if scale == 0.0 || d.abs() <= 2.0 * tol.length_eps_rel * scale * scale {
        return Err(Error::Collinear);
    }
    let (b2, c2) = (b.norm_sq(), c.norm_sq());
    let offset = Point::new((c.y * b2 - b.y * c2) / d, (b.x * c2 - c.x * b2) / d);
    Ok(Circle::new(p1 + offset, offset.norm()))
}

/// Intersections of two circles by the radical-line method.
///
/// Candidates closer together than the length tolerance collapse to a
/// single tangency point.
pub fn circle_circle_intersections(c1: &Circle, c2: &Circle, tol: Tolerance) -> Result<Vec<Point>> {
    let scale = c1.radius.max(c2.radius);
    let eps = tol.length(scale);
    let delta = c2.center - c1.center;
    let d = delta.norm();
    if d <= eps {
        if (c1.radius - c2.radius).abs() <= eps {
            return Err(Error::IdenticalCircles);
        }
        return Ok(Vec::new());
    }
    let u = delta / d;
    // Signed distance from c1's center to the radical line, along u.
    let a = (c1.radius * c1.radius - c2.radius * c2.radius + d * d) / (2.0 * d);
    let foot = c1.center + u * a;
    let h_sq = c1.radius * c1.radius - a * a;
    let tangent = (d - (c1.radius + c2.radius)).abs() <= eps || (d - (c1.radius - c2.radius).abs()).abs() <= eps;
    if h_sq <= 0.0 {
        return Ok(if tangent { vec![foot] } else { Vec::new() });
    }
    let h = h_sq.sqrt();
    if 2.0 * h <= eps {
        return Ok(vec![foot]);
    }
    let n = u.perp() * h;
    Ok(vec![foot + n, foot - n])
}

/// The intersection of two circles other than `known`, which lies on both.
///
/// Reflecting `known` across the line of centers is exact for this case and
/// returns `known` itself when the circles touch there.
pub fn other_circle_intersection(c1: &Circle, c2: &Circle, known: Point) -> Result<Point> {
    let axis = Line::through(c1.center, c2.center).map_err(|_| Error::IdenticalCircles)?;
    Ok(reflect_over_line(&axis, known))
}

/// Directed angle from line `q→p` to line `q→r`, modulo a half turn.
pub fn directed_angle(p: Point, q: Point, r: Point, tol: Tolerance) -> Result<DirectedAngle> {
    let u = p - q;
    let v = r - q;
    let (nu, nv) = (u.norm(), v.norm());
    if nu == 0.0 || nv == 0.0 || nu.min(nv) <= tol.length(nu.max(nv)) {
        return Err(Error::DegenerateRay);
    }
    Ok(DirectedAngle::new(u.cross(v).atan2(u.dot(v))))
}

/// Signed angle from ray `q→p` to ray `q→r` in `(-π, π]`.
pub fn ray_angle(p: Point, q: Point, r: Point) -> f64 {
    let u = p - q;
    let v = r - q;
    u.cross(v).atan2(u.dot(v))
}

/// Inversion of `p` in circle `c`.
pub fn invert_point(c: &Circle, p: Point, tol: Tolerance) -> Result<Point> {
    let v = p - c.center;
    let d2 = v.norm_sq();
    if d2.sqrt() <= tol.length(c.radius) {
        return Err(Error::CenterInversion);
    }
    Ok(c.center + v * (c.radius * c.radius / d2))
}

pub fn reflect_over_line(l: &Line, p: Point) -> Point {
    l.project(p) * 2.0 - p
}

pub fn reflect_over_point(center: Point, p: Point) -> Point {
    center * 2.0 - p
}

/// Result of [`second_intersection`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondIntersection {
    pub point: Point,
    /// The line touches the circle at the known point.
    pub tangent: bool,
}

/// The other point where `l` meets `c`, given one common point `known`.
pub fn second_intersection(l: &Line, c: &Circle, known: Point, tol: Tolerance) -> Result<SecondIntersection> {
    let eps = tol.length(c.radius);
    // Accept a slightly wider band for membership; constructed inputs carry
    // round-off from upstream.
    let band = eps.max(1e3 * f64::EPSILON * c.radius.max(known.norm()));
    if l.distance(known) > band || c.offset(known).abs() > band {
        return Err(Error::NotOnBoth);
    }
    let chord = -2.0 * l.direction().dot(known - c.center);
    if chord.abs() <= eps {
        return Ok(SecondIntersection { point: known, tangent: true });
    }
    Ok(SecondIntersection { point: known + l.direction() * chord, tangent: false })
}

/// Points where `l` meets `c`, ordered along the line direction.
pub fn line_circle_intersections(l: &Line, c: &Circle, tol: Tolerance) -> Vec<Point> {
    let foot = l.project(c.center);
    let d = l.distance(c.center);
    let h_sq = c.radius * c.radius - d * d;
    let eps = tol.length(c.radius);
    if h_sq < 0.0 {
        return if c.radius - d >= -eps { vec![foot] } else { Vec::new() };
    }
    let h = h_sq.sqrt();
    if 2.0 * h <= eps {
        return vec![foot];
    }
    vec![foot - l.direction() * h, foot + l.direction() * h]
}

/// Intersection of two lines, `None` when parallel.
pub fn line_intersection(l1: &Line, l2: &Line) -> Option<Point> {
    let denom = l1.direction().cross(l2.direction());
    if denom.abs() <= 1e-14 {
        return None;
    }
    let t = (l2.anchor() - l1.anchor()).cross(l2.direction()) / denom;
    Some(l1.point_at(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, SQRT_2};

    const TOL: Tolerance = Tolerance { angle_eps: 1e-9, length_eps_rel: 1e-9 };

    fn close(p: Point, q: Point) -> bool {
        p.distance(q) < 1e-12
    }

    #[test]
    fn circumcircle_examples() {
        let c = circumcircle(Point::new(0.0, 0.0), Point::new(4.0, 0.0), Point::new(0.0, 3.0), TOL).unwrap();
        assert!(close(c.center, Point::new(2.0, 1.5)));
        assert!((c.radius - 2.5).abs() < 1e-12);

        let h = 3f64.sqrt() / 2.0;
        let c = circumcircle(Point::new(0.0, 1.0), Point::new(-h, -0.5), Point::new(h, -0.5), TOL).unwrap();
        assert!(c.center.norm() < 1e-12);
        assert!((c.radius - 1.0).abs() < 1e-12);

        let err = circumcircle(Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(2.0, 0.0), TOL);
        assert_eq!(err, Err(Error::Collinear));
    }

    #[test]
    fn circle_intersection_examples() {
        let unit = Circle::new(Point::ORIGIN, 1.0);
        let pts = circle_circle_intersections(&unit, &Circle::new(Point::new(1.0, 0.0), 1.0), TOL).unwrap();
        assert_eq!(pts.len(), 2);
        let h = 3f64.sqrt() / 2.0;
        assert!(pts.iter().any(|&p| close(p, Point::new(0.5, h))));
        assert!(pts.iter().any(|&p| close(p, Point::new(0.5, -h))));

        let pts = circle_circle_intersections(&unit, &Circle::new(Point::new(2.0, 0.0), 1.0), TOL).unwrap();
        assert_eq!(pts, vec![Point::new(1.0, 0.0)]);

        let pts = circle_circle_intersections(&unit, &Circle::new(Point::new(5.0, 0.0), 1.0), TOL).unwrap();
        assert!(pts.is_empty());

        assert_eq!(circle_circle_intersections(&unit, &unit, TOL), Err(Error::IdenticalCircles));
    }

    #[test]
    fn internal_tangency_and_near_tangency_collapse() {
        let big = Circle::new(Point::ORIGIN, 2.0);
        let small = Circle::new(Point::new(1.0, 0.0), 1.0);
        let pts = circle_circle_intersections(&big, &small, TOL).unwrap();
        assert_eq!(pts.len(), 1);
        assert!(close(pts[0], Point::new(2.0, 0.0)));

        // the two candidates are ~2e-7 apart: distinct at 1e-9, merged at 1e-6
        let unit = Circle::new(Point::ORIGIN, 1.0);
        let almost = Circle::new(Point::new(2.0 - 1e-14, 0.0), 1.0);
        assert_eq!(circle_circle_intersections(&unit, &almost, TOL).unwrap().len(), 2);
        let loose = Tolerance::new(1e-9, 1e-6);
        assert_eq!(circle_circle_intersections(&unit, &almost, loose).unwrap().len(), 1);
    }

    #[test]
    fn directed_angle_examples() {
        let o = Point::ORIGIN;
        let a = directed_angle(Point::new(1.0, 0.0), o, Point::new(0.0, 1.0), TOL).unwrap();
        assert!((a.radians() - FRAC_PI_2).abs() < 1e-15);
        let a = directed_angle(Point::new(1.0, 0.0), o, Point::new(2.0, 0.0), TOL).unwrap();
        assert_eq!(a.radians(), 0.0);
        let a = directed_angle(Point::new(1.0, 0.0), o, Point::new(1.0, 1.0), TOL).unwrap();
        assert!((a.radians() - FRAC_PI_4).abs() < 1e-15);
        assert_eq!(directed_angle(o, o, Point::new(1.0, 0.0), TOL), Err(Error::DegenerateRay));
    }

    #[test]
    fn directed_angle_canonical_range() {
        assert_eq!(DirectedAngle::new(-FRAC_PI_2).radians(), FRAC_PI_2);
        assert!((DirectedAngle::new(3.0 * PI / 4.0).radians() + FRAC_PI_4).abs() < 1e-15);
        assert!(DirectedAngle::new(PI).radians().abs() < 1e-15);
        // ±π/2 are the same line angle
        assert!(DirectedAngle::new(FRAC_PI_2 - 1e-13).approx_eq(DirectedAngle::new(-FRAC_PI_2 + 1e-13), 1e-12));
    }

    #[test]
    fn inversion_examples() {
        let unit = Circle::new(Point::ORIGIN, 1.0);
        assert!(close(invert_point(&unit, Point::new(2.0, 0.0), TOL).unwrap(), Point::new(0.5, 0.0)));
        assert!(close(invert_point(&unit, Point::new(0.0, 1.0), TOL).unwrap(), Point::new(0.0, 1.0)));
        assert_eq!(invert_point(&unit, Point::ORIGIN, TOL), Err(Error::CenterInversion));
    }

    #[test]
    fn reflection_examples() {
        let y_axis = Line::through(Point::ORIGIN, Point::new(0.0, 1.0)).unwrap();
        assert!(close(reflect_over_line(&y_axis, Point::new(1.0, 0.0)), Point::new(-1.0, 0.0)));
        assert!(close(reflect_over_line(&y_axis, Point::new(0.0, 5.0)), Point::new(0.0, 5.0)));
        let diag = Line::through(Point::ORIGIN, Point::new(1.0, 1.0)).unwrap();
        assert!(close(reflect_over_line(&diag, Point::new(2.0, 0.0)), Point::new(0.0, 2.0)));
    }

    #[test]
    fn second_intersection_examples() {
        let unit = Circle::new(Point::ORIGIN, 1.0);
        let x0 = Line::through(Point::ORIGIN, Point::new(0.0, 1.0)).unwrap();
        let s = second_intersection(&x0, &unit, Point::new(0.0, 1.0), TOL).unwrap();
        assert!(close(s.point, Point::new(0.0, -1.0)) && !s.tangent);

        let y1 = Line::through(Point::new(0.0, 1.0), Point::new(1.0, 1.0)).unwrap();
        let s = second_intersection(&y1, &unit, Point::new(0.0, 1.0), TOL).unwrap();
        assert!(close(s.point, Point::new(0.0, 1.0)) && s.tangent);

        let diag = Line::through(Point::ORIGIN, Point::new(1.0, 1.0)).unwrap();
        let k = SQRT_2 / 2.0;
        let s = second_intersection(&diag, &unit, Point::new(k, k), TOL).unwrap();
        assert!(close(s.point, Point::new(-k, -k)));

        assert_eq!(second_intersection(&diag, &unit, Point::new(0.5, 0.5), TOL), Err(Error::NotOnBoth));
    }

    #[test]
    fn other_intersection_matches_radical_line() {
        let c1 = Circle::new(Point::new(0.3, -0.2), 1.7);
        let c2 = Circle::new(Point::new(1.9, 0.8), 1.2);
        let pts = circle_circle_intersections(&c1, &c2, TOL).unwrap();
        assert_eq!(pts.len(), 2);
        let other = other_circle_intersection(&c1, &c2, pts[0]).unwrap();
        assert!(other.distance(pts[1]) < 1e-12);
    }

    #[test]
    fn line_intersection_basic() {
        let l1 = Line::through(Point::ORIGIN, Point::new(1.0, 1.0)).unwrap();
        let l2 = Line::through(Point::new(2.0, 0.0), Point::new(2.0, 1.0)).unwrap();
        assert!(close(line_intersection(&l1, &l2).unwrap(), Point::new(2.0, 2.0)));
        let l3 = Line::through(Point::new(0.0, 1.0), Point::new(1.0, 2.0)).unwrap();
        assert!(line_intersection(&l1, &l3).is_none());
    }
}
