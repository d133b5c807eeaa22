//! Structured mesh builders used by the built-in domains, tests, and examples.

use super::{BoundaryLabel, Mesh};
use crate::geometry::Point;

/// Tensor grid of `nx` by `ny` cells on the rectangle spanned by `p0` and
/// `p1`, each cell split along its lower-left to upper-right diagonal.
/// `label` maps the two endpoints of a boundary edge to its part.
pub fn rectangle_mesh(
    nx: usize,
    ny: usize,
    p0: Point,
    p1: Point,
    label: impl Fn(Point, Point) -> BoundaryLabel,
) -> Mesh {
    assert!(nx > 0 && ny > 0);
    let mut vertices = Vec::with_capacity((nx + 1) * (ny + 1));
    for j in 0..=ny {
        for i in 0..=nx {
            let x = p0.x + (p1.x - p0.x) * i as f64 / nx as f64;
            let y = p0.y + (p1.y - p0.y) * j as f64 / ny as f64;
            vertices.push(Point::new(x, y));
        }
    }
    let idx = |i: usize, j: usize| j * (nx + 1) + i;
    let mut triangles = Vec::with_capacity(2 * nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            let (ll, lr, ur, ul) = (idx(i, j), idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1));
            triangles.push([ll, lr, ur]);
            triangles.push([ll, ur, ul]);
        }
    }
    let boundary = boundary_of(&vertices, &triangles, label);
    Mesh::from_parts(vertices, triangles, &boundary, None, None)
        .expect("structured rectangle mesh is valid")
}

/// Derive the boundary edges of a raw triangle soup and label them.
pub fn boundary_of(
    vertices: &[Point],
    triangles: &[[usize; 3]],
    label: impl Fn(Point, Point) -> BoundaryLabel,
) -> Vec<([usize; 2], BoundaryLabel)> {
    use std::collections::BTreeMap;
    let mut count: BTreeMap<[usize; 2], usize> = BTreeMap::new();
    for tri in triangles {
        for local in 0..3 {
            let a = tri[(local + 1) % 3];
            let b = tri[(local + 2) % 3];
            *count.entry([a.min(b), a.max(b)]).or_insert(0) += 1;
        }
    }
    count
        .into_iter()
        .filter(|&(_, c)| c == 1)
        .map(|(pair, _)| (pair, label(vertices[pair[0]], vertices[pair[1]])))
        .collect()
}
