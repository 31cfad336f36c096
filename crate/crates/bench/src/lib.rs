//! Fixed inputs shared by the benchmarks.

use miquel_core::{Point, Triangle};

/// An acute scalene triangle with well separated angles.
pub fn scalene() -> Triangle {
    Triangle::new(Point::new(0.0, 0.0), Point::new(5.0, 0.0), Point::new(1.7, 3.9)).expect("non-degenerate")
}

/// A point strictly inside [`scalene`].
pub fn inner_point() -> Point {
    Point::new(2.1, 1.3)
}
