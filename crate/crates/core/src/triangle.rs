//! Labelled triangles and their elementary measurements.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{circumcircle, directed_angle, Circle, DirectedAngle, Line, Point, Tolerance};

/// Vertex label. `A`, `B`, `C` on a host triangle; the same positions are
/// printed `X`, `Y`, `Z` on a Miquel triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Vertex {
    A,
    B,
    C,
}

impl Vertex {
    pub const ALL: [Vertex; 3] = [Vertex::A, Vertex::B, Vertex::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Vertex {
        Vertex::ALL[i % 3]
    }

    /// The next vertex in the cyclic order A → B → C → A.
    pub fn next(self) -> Vertex {
        Vertex::from_index(self.index() + 1)
    }

    pub fn prev(self) -> Vertex {
        Vertex::from_index(self.index() + 2)
    }

    pub fn host_letter(self) -> char {
        ['A', 'B', 'C'][self.index()]
    }

    pub fn miquel_letter(self) -> char {
        ['X', 'Y', 'Z'][self.index()]
    }

    pub fn parse(s: &str) -> Option<Vertex> {
        match s.trim() {
            "A" | "a" | "X" | "x" => Some(Vertex::A),
            "B" | "b" | "Y" | "y" => Some(Vertex::B),
            "C" | "c" | "Z" | "z" => Some(Vertex::C),
            _ => None,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.host_letter())
    }
}

/// Vertex correspondence between two triangles: vertex `i` of the first
/// matches vertex `self.0[i]` of the second.
///
/// Written with Miquel letters in host order, so `ZXY` means
/// `A ↔ Z, B ↔ X, C ↔ Y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Correspondence(pub [Vertex; 3]);

impl Correspondence {
    pub const IDENTITY: Correspondence = Correspondence([Vertex::A, Vertex::B, Vertex::C]);

    /// All six bijections, identity first.
    pub const ALL: [Correspondence; 6] = [
        Correspondence([Vertex::A, Vertex::B, Vertex::C]),
        Correspondence([Vertex::C, Vertex::A, Vertex::B]),
        Correspondence([Vertex::B, Vertex::C, Vertex::A]),
        Correspondence([Vertex::A, Vertex::C, Vertex::B]),
        Correspondence([Vertex::C, Vertex::B, Vertex::A]),
        Correspondence([Vertex::B, Vertex::A, Vertex::C]),
    ];

    pub fn image(&self, v: Vertex) -> Vertex {
        self.0[v.index()]
    }

    /// The transposition fixing `v`.
    pub fn swap_others(v: Vertex) -> Correspondence {
        let mut m = Correspondence::IDENTITY.0;
        m.swap(v.next().index(), v.prev().index());
        Correspondence(m)
    }

    pub fn is_even(&self) -> bool {
        Correspondence::ALL[..3].contains(self)
    }

    pub fn parse(s: &str) -> Option<Correspondence> {
        let letters: Vec<Vertex> = s.chars().map(|c| Vertex::parse(&c.to_string())).collect::<Option<_>>()?;
        let m: [Vertex; 3] = letters.try_into().ok()?;
        Correspondence::ALL.iter().copied().find(|c| c.0 == m)
    }
}

impl fmt::Display for Correspondence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.0 {
            write!(f, "{}", v.miquel_letter())?;
        }
        Ok(())
    }
}

/// Strict interior, exterior or boundary of a triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Containment {
    Inside,
    Outside,
    OnBoundary,
}

impl Containment {
    pub fn is_inside(self) -> bool {
        self == Containment::Inside
    }
}

/// A non-degenerate triangle with labelled vertices.
///
/// The circumcircle and side lengths are computed once at construction; the
/// value is immutable afterwards.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    vertices: [Point; 3],
    sides: [f64; 3],
    circumcircle: Circle,
    tol: Tolerance,
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Triangle> {
        Triangle::with_tolerance(a, b, c, Tolerance::default())
    }

    /// Rejects inputs with `|signed area| <= eps * R²`.
    pub fn with_tolerance(a: Point, b: Point, c: Point, tol: Tolerance) -> Result<Triangle> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::DegenerateTriangle);
        }
        let sides = [b.distance(c), c.distance(a), a.distance(b)];
        let area = (Point::orient(a, b, c) / 2.0).abs();
        // R = abc / (4 area), so area > eps R² is 16 area³ > eps (abc)².
        let abc = sides[0] * sides[1] * sides[2];
        if 16.0 * area.powi(3) <= tol.length_eps_rel * abc * abc {
            return Err(Error::DegenerateTriangle);
        }
        let circumcircle = circumcircle(a, b, c, tol).map_err(|_| Error::DegenerateTriangle)?;
        Ok(Triangle { vertices: [a, b, c], sides, circumcircle, tol })
    }

    pub fn from_array(v: [Point; 3]) -> Result<Triangle> {
        Triangle::new(v[0], v[1], v[2])
    }

    pub fn a(&self) -> Point {
        self.vertices[0]
    }

    pub fn b(&self) -> Point {
        self.vertices[1]
    }

    pub fn c(&self) -> Point {
        self.vertices[2]
    }

    pub fn vertex(&self, v: Vertex) -> Point {
        self.vertices[v.index()]
    }

    pub fn vertices(&self) -> [Point; 3] {
        self.vertices
    }

    pub fn tolerance(&self) -> Tolerance {
        self.tol
    }

    /// Same triangle with a different tolerance record.
    pub fn retolerance(&self, tol: Tolerance) -> Triangle {
        Triangle { tol, ..*self }
    }

    /// Length of the side opposite `v`.
    pub fn side(&self, v: Vertex) -> f64 {
        self.sides[v.index()]
    }

    pub fn sides(&self) -> [f64; 3] {
        self.sides
    }

    /// Line through the two vertices other than `v`, directed `next → prev`.
    pub fn side_line(&self, v: Vertex) -> Line {
        Line::through(self.vertex(v.next()), self.vertex(v.prev())).expect("non-degenerate triangle")
    }

    pub fn signed_area(&self) -> f64 {
        Point::orient(self.a(), self.b(), self.c()) / 2.0
    }

    /// `+1` for counter-clockwise, `-1` for clockwise.
    pub fn orientation(&self) -> f64 {
        self.signed_area().signum()
    }

    pub fn circumcircle(&self) -> Circle {
        self.circumcircle
    }

    pub fn circumradius(&self) -> f64 {
        self.circumcircle.radius
    }

    /// Absolute length tolerance for this triangle.
    pub fn length_eps(&self) -> f64 {
        self.tol.length(self.circumradius())
    }

    /// Interior angle at `v`, in `(0, π)`.
    pub fn angle(&self, v: Vertex) -> f64 {
        let p = self.vertex(v);
        let u = self.vertex(v.next()) - p;
        let w = self.vertex(v.prev()) - p;
        u.cross(w).abs().atan2(u.dot(w))
    }

    pub fn angles(&self) -> [f64; 3] {
        Vertex::ALL.map(|v| self.angle(v))
    }

    /// Directed angle at `v` in cyclic order: `∠BAC`, `∠CBA`, `∠ACB`.
    pub fn directed_angle_at(&self, v: Vertex) -> DirectedAngle {
        directed_angle(self.vertex(v.next()), self.vertex(v), self.vertex(v.prev()), self.tol)
            .expect("non-degenerate triangle")
    }

    pub fn is_scalene(&self) -> bool {
        let eps = self.length_eps();
        let [a, b, c] = self.sides;
        (a - b).abs() > eps && (b - c).abs() > eps && (c - a).abs() > eps
    }

    /// The two sides meeting at `v` are equal.
    pub fn is_isosceles_at(&self, v: Vertex) -> bool {
        (self.side(v.next()) - self.side(v.prev())).abs() <= self.length_eps()
    }

    pub fn is_right_at(&self, v: Vertex) -> bool {
        (self.angle(v) - FRAC_PI_2).abs() <= self.tol.angle_eps
    }

    pub fn is_right(&self) -> bool {
        Vertex::ALL.iter().any(|&v| self.is_right_at(v))
    }

    pub fn is_obtuse_at(&self, v: Vertex) -> bool {
        self.angle(v) > FRAC_PI_2
    }

    pub fn is_acute(&self) -> bool {
        self.angles().iter().all(|&a| a < FRAC_PI_2)
    }

    /// Distance from `p` to the nearest side line.
    pub fn side_line_distance(&self, p: Point) -> f64 {
        Vertex::ALL.iter().map(|&v| self.side_line(v).distance(p)).fold(f64::INFINITY, f64::min)
    }

    pub fn on_side_line(&self, p: Point) -> bool {
        self.side_line_distance(p) <= self.length_eps()
    }

    pub fn on_circumcircle(&self, p: Point, rel_band: f64) -> bool {
        self.circumcircle.offset(p).abs() <= rel_band * self.circumradius()
    }

    /// Vertex coordinates reordered so that position `i` holds `perm[i]`.
    pub fn relabel(&self, perm: [Vertex; 3]) -> Result<Triangle> {
        Triangle::with_tolerance(self.vertex(perm[0]), self.vertex(perm[1]), self.vertex(perm[2]), self.tol)
    }

    pub fn centroid(&self) -> Point {
        (self.a() + self.b() + self.c()) / 3.0
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={} B={} C={}", self.a(), self.b(), self.c())
    }
}

/// Locates `p` relative to `t` using the signs of the three sub-areas.
pub fn triangle_contains(t: &Triangle, p: Point) -> Containment {
    let eps = t.length_eps();
    let sign = t.orientation();
    let mut on_boundary = false;
    for v in Vertex::ALL {
        let d = t.side_line(v).signed_distance(p) * sign;
        if d < -eps {
            return Containment::Outside;
        }
        if d <= eps {
            on_boundary = true;
        }
    }
    if on_boundary {
        Containment::OnBoundary
    } else {
        Containment::Inside
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t345() -> Triangle {
        Triangle::new(Point::new(0.0, 0.0), Point::new(4.0, 0.0), Point::new(0.0, 3.0)).unwrap()
    }

    #[test]
    fn containment_examples() {
        let t = t345();
        assert_eq!(triangle_contains(&t, Point::new(1.0, 1.0)), Containment::Inside);
        assert_eq!(triangle_contains(&t, Point::new(10.0, 10.0)), Containment::Outside);
        assert_eq!(triangle_contains(&t, Point::new(2.0, 0.0)), Containment::OnBoundary);
        // on the extension of a side line but outside the triangle
        assert_eq!(triangle_contains(&t, Point::new(6.0, 0.0)), Containment::Outside);
    }

    #[test]
    fn containment_ignores_orientation() {
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(0.0, 3.0), Point::new(4.0, 0.0)).unwrap();
        assert_eq!(triangle_contains(&t, Point::new(1.0, 1.0)), Containment::Inside);
    }

    #[test]
    fn rejects_degenerate() {
        let e = Triangle::new(Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(2.0, 0.0));
        assert_eq!(e, Err(Error::DegenerateTriangle));
        let e = Triangle::new(Point::new(0.0, 0.0), Point::new(0.0, 0.0), Point::new(2.0, 1.0));
        assert_eq!(e, Err(Error::DegenerateTriangle));
    }

    #[test]
    fn predicates() {
        let t = t345();
        assert!(t.is_scalene());
        assert!(t.is_right_at(Vertex::A));
        assert!(t.is_right());
        let iso = Triangle::new(Point::new(0.0, 2.0), Point::new(-1.0, 0.0), Point::new(1.0, 0.0)).unwrap();
        assert!(iso.is_isosceles_at(Vertex::A));
        assert!(!iso.is_isosceles_at(Vertex::B));
        assert!(!iso.is_scalene());
        assert!(iso.is_acute());
    }

    #[test]
    fn directed_angles_follow_orientation() {
        let t = Triangle::new(Point::new(0.0, 0.0), Point::new(4.0, 0.0), Point::new(1.0, 3.0)).unwrap();
        let sum: f64 = Vertex::ALL.iter().map(|&v| t.directed_angle_at(v).radians()).sum();
        assert!(DirectedAngle::new(sum).approx_eq(DirectedAngle::ZERO, 1e-12));
        for v in Vertex::ALL {
            assert!(t.directed_angle_at(v).approx_eq(DirectedAngle::new(t.angle(v)), 1e-12));
        }
        let mirrored = Triangle::new(Point::new(0.0, 0.0), Point::new(-4.0, 0.0), Point::new(-1.0, 3.0)).unwrap();
        for v in Vertex::ALL {
            assert!(mirrored.directed_angle_at(v).approx_eq(DirectedAngle::new(-t.angle(v)), 1e-12));
        }
    }
}
