//! Conforming triangulations of polygonal domains with labeled boundary
//! parts, vertex patches, and newest-vertex bisection.
//!
//! Local edge `i` of a triangle is the edge opposite local vertex `i`. Every
//! derived edge is stored with a fixed global orientation, from the smaller to
//! the larger vertex index; its unit normal is the counterclockwise 90-degree
//! rotation of the oriented tangent. All jump signs and Raviart–Thomas degrees
//! of freedom in the crate are pinned to this convention.

pub mod builders;
pub mod io;
mod refine;

use crate::geometry::{diameter, incircle_diameter, rot90, signed_area, Point};
use std::collections::BTreeMap;
use thiserror::Error;

/// Boundary-part tag of a boundary edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryLabel {
    Dirichlet,
    Neumann,
}

/// A mesh edge with derived adjacency.
#[derive(Debug, Clone)]
pub struct Edge {
    /// Endpoints, ordered `vertices[0] < vertices[1]` (global orientation).
    pub vertices: [usize; 2],
    /// Incident triangles: one for boundary edges, two for interior edges.
    pub triangles: [Option<usize>; 2],
    /// `Some` exactly on boundary edges.
    pub label: Option<BoundaryLabel>,
}

impl Edge {
    pub fn is_boundary(&self) -> bool {
        self.triangles[1].is_none()
    }
}

#[derive(Debug, Error)]
pub enum MeshError {
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("triangle {0} is degenerate (area {1:.3e})")]
    DegenerateTriangle(usize, f64),
    #[error("edge ({0}, {1}) is shared by more than two triangles")]
    NonConforming(usize, usize),
    #[error("boundary edge ({0}, {1}) carries no label")]
    UnlabeledBoundaryEdge(usize, usize),
    #[error("label given for interior edge ({0}, {1})")]
    LabelOnInteriorEdge(usize, usize),
    #[error("label given for nonexistent edge ({0}, {1})")]
    LabelOnUnknownEdge(usize, usize),
    #[error("region label list has length {0}, expected {1}")]
    RegionCountMismatch(usize, usize),
    #[error("mesh document: {0}")]
    Document(String),
}

/// Classification of a vertex patch by the position of its center vertex.
///
/// A vertex on the closure of the Dirichlet boundary is `DirichletBoundary`
/// even when it also touches the Neumann part.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatchClass {
    Interior,
    NeumannBoundary,
    DirichletBoundary,
}

/// The star of elements around one vertex, with its edges split into the four
/// groups the local flux problems distinguish.
#[derive(Debug, Clone)]
pub struct VertexPatch {
    pub center_vertex: usize,
    /// Patch elements, sorted by triangle index.
    pub elements: Vec<usize>,
    pub patch_class: PatchClass,
    /// Edges interior to the patch (all contain the center vertex).
    pub interior_edges: Vec<usize>,
    /// Edges of the patch boundary not containing the center vertex.
    pub outer_edges: Vec<usize>,
    /// Boundary edges through the center vertex on the Dirichlet part.
    pub dirichlet_spoke_edges: Vec<usize>,
    /// Boundary edges through the center vertex on the Neumann part.
    pub neumann_spoke_edges: Vec<usize>,
}

/// A conforming triangulation with boundary labels, region labels, and
/// newest-vertex-bisection bookkeeping.
#[derive(Debug, Clone)]
pub struct Mesh {
    vertices: Vec<Point>,
    /// Vertex index triples, counterclockwise.
    triangles: Vec<[usize; 3]>,
    /// Per-triangle local index (0..3) of the edge bisected next.
    refinement_edge: Vec<u8>,
    /// Per-triangle region tag keying piecewise-constant coefficients.
    region_labels: Vec<i32>,
    edges: Vec<Edge>,
    /// Global edge index of each local edge (edge i opposite vertex i).
    triangle_edges: Vec<[usize; 3]>,
    /// Triangles around each vertex, sorted.
    vertex_triangles: Vec<Vec<usize>>,
    /// Whether each vertex lies on the closure of the Dirichlet part / on the
    /// boundary at all.
    vertex_on_dirichlet: Vec<bool>,
    vertex_on_boundary: Vec<bool>,
}

impl Mesh {
    /// Build and validate a mesh from raw parts. Boundary labels are given per
    /// labeled edge as vertex pairs (any order). `refinement_edges`, when
    /// absent, are initialized to the longest edge of each triangle, ties
    /// broken by the smallest opposite-vertex index.
    pub fn from_parts(
        vertices: Vec<Point>,
        triangles: Vec<[usize; 3]>,
        boundary: &[([usize; 2], BoundaryLabel)],
        region_labels: Option<Vec<i32>>,
        refinement_edges: Option<Vec<u8>>,
    ) -> Result<Self, MeshError> {
        let n_vertices = vertices.len();
        for tri in &triangles {
            for &v in tri {
                if v >= n_vertices {
                    return Err(MeshError::VertexOutOfRange(v));
                }
            }
        }
        for (t, tri) in triangles.iter().enumerate() {
            let area = signed_area(vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]);
            if area <= 0.0 {
                return Err(MeshError::DegenerateTriangle(t, area));
            }
        }
        let region_labels = match region_labels {
            Some(r) if r.len() != triangles.len() => {
                return Err(MeshError::RegionCountMismatch(r.len(), triangles.len()))
            }
            Some(r) => r,
            None => vec![0; triangles.len()],
        };

        // Derive the unique edge list with adjacency.
        let mut edge_index: BTreeMap<[usize; 2], usize> = BTreeMap::new();
        let mut edges: Vec<Edge> = Vec::new();
        let mut triangle_edges = vec![[usize::MAX; 3]; triangles.len()];
        for (t, tri) in triangles.iter().enumerate() {
            for local in 0..3 {
                let a = tri[(local + 1) % 3];
                let b = tri[(local + 2) % 3];
                let key = [a.min(b), a.max(b)];
                let e = *edge_index.entry(key).or_insert_with(|| {
                    edges.push(Edge {
                        vertices: key,
                        triangles: [None, None],
                        label: None,
                    });
                    edges.len() - 1
                });
                let slots = &mut edges[e].triangles;
                if slots[0].is_none() {
                    slots[0] = Some(t);
                } else if slots[1].is_none() {
                    slots[1] = Some(t);
                } else {
                    return Err(MeshError::NonConforming(key[0], key[1]));
                }
                triangle_edges[t][local] = e;
            }
        }

        for &(pair, label) in boundary {
            let key = [pair[0].min(pair[1]), pair[0].max(pair[1])];
            let e = *edge_index
                .get(&key)
                .ok_or(MeshError::LabelOnUnknownEdge(key[0], key[1]))?;
            if !edges[e].is_boundary() {
                return Err(MeshError::LabelOnInteriorEdge(key[0], key[1]));
            }
            edges[e].label = Some(label);
        }
        for edge in &edges {
            if edge.is_boundary() && edge.label.is_none() {
                return Err(MeshError::UnlabeledBoundaryEdge(
                    edge.vertices[0],
                    edge.vertices[1],
                ));
            }
        }

        let mut vertex_triangles = vec![Vec::new(); n_vertices];
        for (t, tri) in triangles.iter().enumerate() {
            for &v in tri {
                vertex_triangles[v].push(t);
            }
        }
        let mut vertex_on_dirichlet = vec![false; n_vertices];
        let mut vertex_on_boundary = vec![false; n_vertices];
        for edge in &edges {
            if let Some(label) = edge.label {
                for &v in &edge.vertices {
                    vertex_on_boundary[v] = true;
                    if label == BoundaryLabel::Dirichlet {
                        vertex_on_dirichlet[v] = true;
                    }
                }
            }
        }

        let refinement_edge = match refinement_edges {
            Some(r) => r,
            None => triangles
                .iter()
                .map(|tri| initial_refinement_edge(&vertices, tri))
                .collect(),
        };

        Ok(Mesh {
            vertices,
            triangles,
            refinement_edge,
            region_labels,
            edges,
            triangle_edges,
            vertex_triangles,
            vertex_on_dirichlet,
            vertex_on_boundary,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex(&self, v: usize) -> Point {
        self.vertices[v]
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn triangle(&self, t: usize) -> [usize; 3] {
        self.triangles[t]
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn triangle_points(&self, t: usize) -> [Point; 3] {
        let tri = self.triangles[t];
        [
            self.vertices[tri[0]],
            self.vertices[tri[1]],
            self.vertices[tri[2]],
        ]
    }

    pub fn region_label(&self, t: usize) -> i32 {
        self.region_labels[t]
    }

    pub fn region_labels(&self) -> &[i32] {
        &self.region_labels
    }

    pub fn refinement_edge(&self, t: usize) -> u8 {
        self.refinement_edge[t]
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Global edge indices of triangle `t`, local edge `i` opposite vertex `i`.
    pub fn triangle_edge_indices(&self, t: usize) -> [usize; 3] {
        self.triangle_edges[t]
    }

    pub fn triangles_at_vertex(&self, v: usize) -> &[usize] {
        &self.vertex_triangles[v]
    }

    pub fn vertex_on_dirichlet(&self, v: usize) -> bool {
        self.vertex_on_dirichlet[v]
    }

    pub fn vertex_on_boundary(&self, v: usize) -> bool {
        self.vertex_on_boundary[v]
    }

    pub fn triangle_area(&self, t: usize) -> f64 {
        let [a, b, c] = self.triangle_points(t);
        signed_area(a, b, c)
    }

    pub fn total_area(&self) -> f64 {
        (0..self.n_triangles()).map(|t| self.triangle_area(t)).sum()
    }

    pub fn triangle_diameter(&self, t: usize) -> f64 {
        let [a, b, c] = self.triangle_points(t);
        diameter(a, b, c)
    }

    pub fn edge_length(&self, e: usize) -> f64 {
        let [a, b] = self.edges[e].vertices;
        (self.vertices[b] - self.vertices[a]).norm()
    }

    /// Midpoint of the globally oriented edge.
    pub fn edge_midpoint(&self, e: usize) -> Point {
        let [a, b] = self.edges[e].vertices;
        0.5 * (self.vertices[a] + self.vertices[b])
    }

    /// Unit tangent of the global orientation (smaller to larger vertex index).
    pub fn edge_tangent(&self, e: usize) -> Point {
        let [a, b] = self.edges[e].vertices;
        (self.vertices[b] - self.vertices[a]).normalize()
    }

    /// Fixed unit normal of edge `e`: the oriented tangent rotated 90 degrees
    /// counterclockwise. On boundary edges this may point inward; see
    /// [`Mesh::edge_normal_sign`].
    pub fn edge_normal(&self, e: usize) -> Point {
        rot90(self.edge_tangent(e))
    }

    /// +1 if the fixed normal of edge `e` points out of triangle `t`, -1
    /// otherwise. `t` must be incident to `e`.
    pub fn edge_normal_sign(&self, e: usize, t: usize) -> f64 {
        let [a, b] = self.edges[e].vertices;
        let tri = self.triangles[t];
        let opposite = tri
            .iter()
            .copied()
            .find(|&v| v != a && v != b)
            .expect("triangle not incident to edge");
        let n = self.edge_normal(e);
        let to_opposite = self.vertices[opposite] - self.edge_midpoint(e);
        if n.dot(&to_opposite) < 0.0 {
            1.0
        } else {
            -1.0
        }
    }

    /// Shape-regularity diagnostic: max over elements of h_K / rho_K.
    pub fn max_aspect_ratio(&self) -> f64 {
        (0..self.n_triangles())
            .map(|t| {
                let [a, b, c] = self.triangle_points(t);
                diameter(a, b, c) / incircle_diameter(a, b, c)
            })
            .fold(0.0, f64::max)
    }

    /// The vertex patch around `center`: its elements and the four edge groups
    /// used by the local flux problems.
    pub fn patch(&self, center: usize) -> VertexPatch {
        let elements = self.vertex_triangles[center].clone();
        let mut interior_edges = Vec::new();
        let mut outer_edges = Vec::new();
        let mut dirichlet_spoke_edges = Vec::new();
        let mut neumann_spoke_edges = Vec::new();
        let mut seen: Vec<usize> = Vec::with_capacity(elements.len() * 3);
        for &t in &elements {
            for &e in &self.triangle_edges[t] {
                if seen.contains(&e) {
                    continue;
                }
                seen.push(e);
                let edge = &self.edges[e];
                if edge.vertices.contains(&center) {
                    match edge.label {
                        None => interior_edges.push(e),
                        Some(BoundaryLabel::Dirichlet) => dirichlet_spoke_edges.push(e),
                        Some(BoundaryLabel::Neumann) => neumann_spoke_edges.push(e),
                    }
                } else {
                    outer_edges.push(e);
                }
            }
        }
        interior_edges.sort_unstable();
        outer_edges.sort_unstable();
        dirichlet_spoke_edges.sort_unstable();
        neumann_spoke_edges.sort_unstable();
        let patch_class = if self.vertex_on_dirichlet[center] {
            PatchClass::DirichletBoundary
        } else if self.vertex_on_boundary[center] {
            PatchClass::NeumannBoundary
        } else {
            PatchClass::Interior
        };
        VertexPatch {
            center_vertex: center,
            elements,
            patch_class,
            interior_edges,
            outer_edges,
            dirichlet_spoke_edges,
            neumann_spoke_edges,
        }
    }
}

/// Longest edge, ties broken by the smallest opposite-vertex global index.
fn initial_refinement_edge(vertices: &[Point], tri: &[usize; 3]) -> u8 {
    let mut best = 0u8;
    let mut best_len = -1.0;
    for local in 0..3u8 {
        let a = tri[(local as usize + 1) % 3];
        let b = tri[(local as usize + 2) % 3];
        let len = (vertices[b] - vertices[a]).norm();
        let better = len > best_len + 1e-14 * len.max(1.0)
            || ((len - best_len).abs() <= 1e-14 * len.max(1.0)
                && tri[local as usize] < tri[best as usize]);
        if better {
            best = local;
            best_len = len;
        }
    }
    best
}

pub use refine::BisectionOutcome;

#[cfg(test)]
mod tests;
