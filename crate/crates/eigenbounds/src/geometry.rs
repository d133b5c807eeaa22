//! Small planar-geometry helpers shared by the mesh and element code.

use nalgebra::Vector2;

pub type Point = Vector2<f64>;

/// Twice the signed area of the triangle (a, b, c); positive when
/// counterclockwise.
pub fn cross2(u: Point, v: Point) -> f64 {
    u.x * v.y - u.y * v.x
}

/// Signed area of the triangle (a, b, c).
pub fn signed_area(a: Point, b: Point, c: Point) -> f64 {
    0.5 * cross2(b - a, c - a)
}

/// Diameter h_K of a triangle: its longest edge.
pub fn diameter(a: Point, b: Point, c: Point) -> f64 {
    let e0 = (c - b).norm();
    let e1 = (a - c).norm();
    let e2 = (b - a).norm();
    e0.max(e1).max(e2)
}

/// Diameter rho_K of the inscribed circle: 4|K| / perimeter.
pub fn incircle_diameter(a: Point, b: Point, c: Point) -> f64 {
    let perimeter = (c - b).norm() + (a - c).norm() + (b - a).norm();
    4.0 * signed_area(a, b, c).abs() / perimeter
}

/// Counterclockwise 90-degree rotation.
pub fn rot90(v: Point) -> Point {
    Point::new(-v.y, v.x)
}
