use super::builders::rectangle_mesh;
use super::*;
use crate::mesh::io::{parse_mesh, write_mesh};

fn unit_right_triangle(label: BoundaryLabel) -> Mesh {
    Mesh::from_parts(
        vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ],
        vec![[0, 1, 2]],
        &[([0, 1], label), ([1, 2], label), ([2, 0], label)],
        None,
        None,
    )
    .unwrap()
}

fn unit_square_two_triangles() -> Mesh {
    // Diagonal (0, 2) shared by both triangles.
    Mesh::from_parts(
        vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ],
        vec![[0, 1, 2], [0, 2, 3]],
        &[
            ([0, 1], BoundaryLabel::Dirichlet),
            ([1, 2], BoundaryLabel::Dirichlet),
            ([2, 3], BoundaryLabel::Dirichlet),
            ([3, 0], BoundaryLabel::Dirichlet),
        ],
        None,
        None,
    )
    .unwrap()
}

/// 2x2-cell structured grid on the unit square; the center vertex (index 4)
/// is interior with six incident triangles.
fn grid_3x3(label: impl Fn(Point, Point) -> BoundaryLabel) -> Mesh {
    rectangle_mesh(2, 2, Point::new(0.0, 0.0), Point::new(1.0, 1.0), label)
}

#[test]
fn smallest_valid_mesh() {
    let mesh = unit_right_triangle(BoundaryLabel::Dirichlet);
    assert_eq!(mesh.n_triangles(), 1);
    assert_eq!(mesh.n_edges(), 3);
    // Refinement edge: the hypotenuse, opposite vertex 0.
    assert_eq!(mesh.refinement_edge(0), 0);
    let expected = 2f64.sqrt() / (2.0 - 2f64.sqrt());
    assert!((mesh.max_aspect_ratio() - expected).abs() < 1e-13);
}

#[test]
fn shared_diagonal_has_two_incident_triangles() {
    let mesh = unit_square_two_triangles();
    assert_eq!(mesh.n_edges(), 5);
    let diagonal = (0..mesh.n_edges())
        .find(|&e| mesh.edge(e).vertices == [0, 2])
        .unwrap();
    assert!(mesh.edge(diagonal).triangles.iter().all(Option::is_some));
    assert!(!mesh.edge(diagonal).is_boundary());
    assert_eq!(
        mesh.edges().iter().filter(|e| e.is_boundary()).count(),
        4
    );
}

#[test]
fn rejects_degenerate_triangle() {
    let err = Mesh::from_parts(
        vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
        ],
        vec![[0, 1, 2]],
        &[],
        None,
        None,
    )
    .unwrap_err();
    assert!(matches!(err, MeshError::DegenerateTriangle(0, _)));
}

#[test]
fn rejects_unlabeled_boundary_edge() {
    let err = Mesh::from_parts(
        vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
        ],
        vec![[0, 1, 2]],
        &[([0, 1], BoundaryLabel::Dirichlet)],
        None,
        None,
    )
    .unwrap_err();
    assert!(matches!(err, MeshError::UnlabeledBoundaryEdge(..)));
}

#[test]
fn rejects_label_on_interior_edge() {
    let err = Mesh::from_parts(
        vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ],
        vec![[0, 1, 2], [0, 2, 3]],
        &[
            ([0, 1], BoundaryLabel::Dirichlet),
            ([1, 2], BoundaryLabel::Dirichlet),
            ([2, 3], BoundaryLabel::Dirichlet),
            ([3, 0], BoundaryLabel::Dirichlet),
            ([0, 2], BoundaryLabel::Dirichlet),
        ],
        None,
        None,
    )
    .unwrap_err();
    assert!(matches!(err, MeshError::LabelOnInteriorEdge(0, 2)));
}

#[test]
fn rejects_nonconforming_connectivity() {
    // Three triangles stacked on the same edge (0, 1).
    let err = Mesh::from_parts(
        vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.5, 1.0),
            Point::new(0.5, -1.0),
            Point::new(1.5, 1.0),
        ],
        vec![[0, 1, 2], [0, 3, 1], [0, 1, 4]],
        &[],
        None,
        None,
    )
    .unwrap_err();
    assert!(matches!(err, MeshError::NonConforming(0, 1)));
}

#[test]
fn interior_vertex_patch_is_a_closed_star() {
    let mesh = grid_3x3(|_, _| BoundaryLabel::Dirichlet);
    let patch = mesh.patch(4);
    assert_eq!(patch.patch_class, PatchClass::Interior);
    assert_eq!(patch.elements.len(), 6);
    assert_eq!(patch.interior_edges.len(), 6);
    assert_eq!(patch.outer_edges.len(), 6);
    assert!(patch.dirichlet_spoke_edges.is_empty());
    assert!(patch.neumann_spoke_edges.is_empty());
    // Every edge of every patch element lands in exactly one group.
    let total: usize = patch.elements.iter().fold(0, |acc, &t| {
        acc + mesh
            .triangle_edge_indices(t)
            .iter()
            .filter(|&&e| {
                patch.interior_edges.contains(&e)
                    || patch.outer_edges.contains(&e)
                    || patch.dirichlet_spoke_edges.contains(&e)
                    || patch.neumann_spoke_edges.contains(&e)
            })
            .count()
    });
    assert_eq!(total, 18);
}

#[test]
fn dirichlet_neumann_interface_vertex_is_dirichlet_class() {
    // Bottom side Dirichlet, everything else Neumann: the corner (0, 0) sits
    // on the interface and must classify as Dirichlet.
    let mesh = grid_3x3(|a, b| {
        if a.y == 0.0 && b.y == 0.0 {
            BoundaryLabel::Dirichlet
        } else {
            BoundaryLabel::Neumann
        }
    });
    let patch = mesh.patch(0);
    assert_eq!(patch.patch_class, PatchClass::DirichletBoundary);
    assert_eq!(patch.dirichlet_spoke_edges.len(), 1);
    assert_eq!(patch.neumann_spoke_edges.len(), 1);
}

#[test]
fn neumann_fan_vertex_patch() {
    // Bottom-middle vertex of the structured grid: three incident triangles,
    // two Neumann spokes along the bottom, two interior spokes, three outer
    // edges.
    let mesh = grid_3x3(|_, _| BoundaryLabel::Neumann);
    let patch = mesh.patch(1);
    assert_eq!(patch.patch_class, PatchClass::NeumannBoundary);
    assert_eq!(patch.elements.len(), 3);
    assert_eq!(patch.neumann_spoke_edges.len(), 2);
    assert_eq!(patch.interior_edges.len(), 2);
    assert_eq!(patch.outer_edges.len(), 3);
    assert!(patch.dirichlet_spoke_edges.is_empty());
}

#[test]
fn bisect_single_triangle() {
    let mesh = unit_right_triangle(BoundaryLabel::Dirichlet);
    let out = mesh.bisect_with_parents(&[0]);
    let fine = &out.mesh;
    assert_eq!(fine.n_triangles(), 2);
    assert_eq!(fine.n_vertices(), 4);
    assert_eq!(out.parent, vec![0, 0]);
    for t in 0..2 {
        assert!((fine.triangle_area(t) - 0.25).abs() < 1e-15);
    }
    assert!((fine.total_area() - mesh.total_area()).abs() < 1e-15);
}

#[test]
fn closure_forces_neighbor_split() {
    // Both triangles have the shared diagonal as refinement edge; marking one
    // splits the other through the closure, giving four triangles.
    let mesh = unit_square_two_triangles();
    let fine = mesh.bisect(&[0]);
    assert_eq!(fine.n_triangles(), 4);
    assert_eq!(fine.n_vertices(), 5);
    fine.validate().unwrap();
}

#[test]
fn empty_marking_returns_mesh_unchanged() {
    let mesh = unit_square_two_triangles();
    let fine = mesh.bisect(&[]);
    assert_eq!(fine.n_triangles(), mesh.n_triangles());
    assert_eq!(fine.n_vertices(), mesh.n_vertices());
}

#[test]
fn refinement_preserves_conformity_area_and_labels() {
    // Pseudo-random marking, fixed seed; checks the bisection invariants over
    // a longer run than any single hand-written case.
    let mut mesh = grid_3x3(|a, b| {
        if a.y == 0.0 && b.y == 0.0 {
            BoundaryLabel::Dirichlet
        } else {
            BoundaryLabel::Neumann
        }
    });
    let area0 = mesh.total_area();
    let mut state = 0x2545F4914F6CDD1Du64;
    for _ in 0..12 {
        let mut marked = Vec::new();
        for t in 0..mesh.n_triangles() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if (state >> 33) % 3 == 0 {
                marked.push(t);
            }
        }
        mesh = mesh.bisect(&marked);
        mesh.validate().unwrap();
        assert!((mesh.total_area() - area0).abs() < 1e-12 * area0);
        for edge in mesh.edges() {
            if edge.is_boundary() {
                let label = edge.label.unwrap();
                let [a, b] = edge.vertices;
                let (pa, pb) = (mesh.vertex(a), mesh.vertex(b));
                // The Dirichlet polyline is exactly the bottom side.
                if label == BoundaryLabel::Dirichlet {
                    assert_eq!(pa.y, 0.0);
                    assert_eq!(pb.y, 0.0);
                } else {
                    assert!(pa.y > 0.0 || pb.y > 0.0);
                }
            }
        }
    }
    assert!(mesh.n_triangles() > 100, "marking actually refined");
}

#[test]
fn shape_regularity_is_stable_over_twenty_refinements() {
    let mut mesh = grid_3x3(|_, _| BoundaryLabel::Dirichlet);
    let initial = mesh.max_aspect_ratio();
    let mut state = 7u64;
    for round in 0..20 {
        let mut marked = Vec::new();
        for t in 0..mesh.n_triangles() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(round);
            if (state >> 33) % 4 == 0 {
                marked.push(t);
            }
        }
        if marked.is_empty() {
            marked.push(0);
        }
        mesh = mesh.bisect(&marked);
        assert!(
            mesh.max_aspect_ratio() <= 2.0 * initial,
            "aspect ratio {} exceeded twice the initial {}",
            mesh.max_aspect_ratio(),
            initial
        );
    }
}

#[test]
fn mesh_document_round_trip() {
    let mesh = grid_3x3(|a, b| {
        if a.y == 0.0 && b.y == 0.0 {
            BoundaryLabel::Dirichlet
        } else {
            BoundaryLabel::Neumann
        }
    });
    let text = write_mesh(&mesh);
    let back = parse_mesh(&text).unwrap();
    assert_eq!(back.n_vertices(), mesh.n_vertices());
    assert_eq!(back.n_triangles(), mesh.n_triangles());
    assert_eq!(back.n_edges(), mesh.n_edges());
    for e in 0..mesh.n_edges() {
        assert_eq!(back.edge(e).label.is_some(), mesh.edge(e).label.is_some());
    }
}

#[test]
fn mesh_document_parse_errors() {
    assert!(parse_mesh("vertices = [[0.0, 0.0]]").is_err());
    let bad_label = r#"
vertices = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]
triangles = [[0, 1, 2]]
boundary = [
  { edge = [0, 1], label = "robin" },
  { edge = [1, 2], label = "dirichlet" },
  { edge = [2, 0], label = "dirichlet" },
]
"#;
    assert!(matches!(parse_mesh(bad_label), Err(MeshError::Document(_))));
}
