//! Random triangles and points for the verification suites.

use std::f64::consts::{PI, TAU};

use rand::Rng;

use crate::kernel::Point;
use crate::triangle::{triangle_contains, Containment, Triangle};

/// Constraints on the interior angles of a sampled triangle, in degrees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Shape {
    pub min_angle: f64,
    /// Smallest allowed difference between any two angles.
    pub min_gap: f64,
    /// Smallest allowed distance of any angle from 90°.
    pub right_margin: f64,
    /// Probability that the triangle has an obtuse angle.
    pub obtuse_share: f64,
}

impl Shape {
    pub const GENERIC: Shape = Shape { min_angle: 10.0, min_gap: 2.0, right_margin: 5.0, obtuse_share: 0.4 };
    /// Well separated angles, far from right.
    pub const SEPARATED: Shape = Shape { min_angle: 10.0, min_gap: 5.0, right_margin: 20.0, obtuse_share: 0.4 };
    /// Seeds for long chains, whose error grows with every step on thin
    /// triangles.
    pub const CHAIN: Shape = Shape { min_angle: 15.0, min_gap: 5.0, right_margin: 20.0, obtuse_share: 0.4 };

    fn admits(&self, angles: [f64; 3]) -> bool {
        let ok_single = angles.iter().all(|&a| a >= self.min_angle && (a - 90.0).abs() >= self.right_margin);
        let ok_gaps = (0..3).all(|i| (angles[i] - angles[(i + 1) % 3]).abs() >= self.min_gap);
        ok_single && ok_gaps
    }
}

fn sample_angles<R: Rng>(rng: &mut R, shape: &Shape) -> [f64; 3] {
    let obtuse = rng.gen_bool(shape.obtuse_share);
    loop {
        let mut angles = if obtuse {
            let hi = 180.0 - 2.0 * shape.min_angle;
            let lo = 90.0 + shape.right_margin;
            let a = rng.gen_range(lo..hi);
            let b = rng.gen_range(shape.min_angle..180.0 - a - shape.min_angle);
            [a, b, 180.0 - a - b]
        } else {
            let hi = 90.0 - shape.right_margin;
            let a = rng.gen_range(shape.min_angle..hi);
            let b = rng.gen_range(shape.min_angle..hi);
            [a, b, 180.0 - a - b]
        };
        let has_obtuse = angles.iter().any(|&a| a > 90.0);
        if has_obtuse == obtuse && shape.admits(angles) {
            let k = rng.gen_range(0..3);
            angles.rotate_left(k);
            if rng.gen_bool(0.5) {
                angles.swap(1, 2);
            }
            return angles;
        }
    }
}

/// Triangle with the given interior angles (degrees), inscribed in a random
/// circle, with random rotation and orientation.
pub fn place<R: Rng>(rng: &mut R, angles: [f64; 3]) -> Triangle {
    let center = Point::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
    let radius = rng.gen_range(0.2f64.ln()..5f64.ln()).exp();
    let phase = rng.gen_range(0.0..TAU);
    let [a, _, c] = angles.map(f64::to_radians);
    // the arc opposite each vertex subtends twice its angle
    let phis = [phase, phase + 2.0 * c, phase + 2.0 * c + 2.0 * a];
    let mirror = if rng.gen_bool(0.5) { -1.0 } else { 1.0 };
    let pts = phis.map(|phi| Point::new(mirror * phi.cos(), phi.sin()) * radius + center);
    Triangle::from_array(pts).expect("sampled angles keep the triangle well away from degenerate")
}

pub fn triangle<R: Rng>(rng: &mut R, shape: &Shape) -> Triangle {
    let angles = sample_angles(rng, shape);
    place(rng, angles)
}

/// Triangle isosceles at `A`, apex angle away from 60° and 90°.
pub fn isosceles<R: Rng>(rng: &mut R) -> Triangle {
    let apex = loop {
        let apex: f64 = rng.gen_range(25.0..150.0);
        if (apex - 60.0).abs() > 3.0 && (apex - 90.0).abs() > 3.0 {
            break apex;
        }
    };
    let base = (180.0 - apex) / 2.0;
    place(rng, [apex, base, base])
}

/// Point with all barycentric coordinates at least `margin`.
pub fn interior_point<R: Rng>(rng: &mut R, t: &Triangle, margin: f64) -> Point {
    loop {
        let w: [f64; 3] = [(); 3].map(|_| -(1.0 - rng.gen::<f64>()).ln());
        let s = w[0] + w[1] + w[2];
        let w = w.map(|x| x / s);
        if w.iter().all(|&x| x >= margin) {
            return t.a() * w[0] + t.b() * w[1] + t.c() * w[2];
        }
    }
}

/// Uniform point in the annulus `inner ≤ |p − center| ≤ outer`.
pub fn annulus_point<R: Rng>(rng: &mut R, center: Point, inner: f64, outer: f64) -> Point {
    let r = rng.gen_range(inner * inner..outer * outer).sqrt();
    let phi = rng.gen_range(0.0..TAU);
    center + Point::new(phi.cos(), phi.sin()) * r
}

/// Point inside the circumcircle (scaled by `reach`), at least
/// `margin · R` from every side line and from the circumcircle.
pub fn circumdisk_point<R: Rng>(rng: &mut R, t: &Triangle, reach: f64, margin: f64) -> Point {
    let circle = t.circumcircle();
    loop {
        let p = annulus_point(rng, circle.center, 0.0, circle.radius * reach);
        if t.side_line_distance(p) >= margin * circle.radius && circle.offset(p).abs() >= margin * circle.radius {
            return p;
        }
    }
}

/// Point outside the triangle. With `beyond` it lies outside the
/// circumcircle (up to `3R`), otherwise inside it.
pub fn exterior_point<R: Rng>(rng: &mut R, t: &Triangle, beyond: bool, margin: f64) -> Point {
    let circle = t.circumcircle();
    let r = circle.radius;
    loop {
        let p = if beyond {
            annulus_point(rng, circle.center, r * (1.0 + margin), 3.0 * r)
        } else {
            annulus_point(rng, circle.center, 0.0, r * (1.0 - margin))
        };
        if triangle_contains(t, p) == Containment::Outside && t.side_line_distance(p) >= margin * r {
            return p;
        }
    }
}

/// Point on the circumcircle at a uniformly random angle.
pub fn circumcircle_point<R: Rng>(rng: &mut R, t: &Triangle) -> Point {
    let c = t.circumcircle();
    let phi = rng.gen_range(0.0..TAU);
    c.center + Point::new(phi.cos(), phi.sin()) * c.radius
}

/// Uniform angle in `[-limit, limit]`.
pub fn theta<R: Rng>(rng: &mut R, limit: f64) -> f64 {
    debug_assert!(limit < PI / 2.0);
    rng.gen_range(-limit..=limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::Vertex;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sampled_triangles_respect_shape() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut obtuse = 0;
        for _ in 0..500 {
            let t = triangle(&mut rng, &Shape::SEPARATED);
            let deg = t.angles().map(f64::to_degrees);
            assert!(Shape::SEPARATED.admits(deg), "{deg:?}");
            obtuse += usize::from(!t.is_acute());
        }
        assert!((100..300).contains(&obtuse), "{obtuse}");
    }

    #[test]
    fn isosceles_at_a() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let t = isosceles(&mut rng);
            assert!((t.side(Vertex::B) - t.side(Vertex::C)).abs() < 1e-12 * t.circumradius());
        }
    }

    #[test]
    fn point_samplers_land_where_asked() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let t = triangle(&mut rng, &Shape::GENERIC);
        let c = t.circumcircle();
        for _ in 0..100 {
            assert!(triangle_contains(&t, interior_point(&mut rng, &t, 0.05)).is_inside());
            let p = exterior_point(&mut rng, &t, false, 0.01);
            assert!(c.contains_strictly(p) && !triangle_contains(&t, p).is_inside());
            assert!(!c.contains_strictly(exterior_point(&mut rng, &t, true, 0.01)));
            assert!(c.offset(circumcircle_point(&mut rng, &t)).abs() < 1e-12 * c.radius);
        }
    }
}
