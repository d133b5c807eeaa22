//! The mesh document: a TOML file with `vertices`, `triangles`, `boundary`,
//! and an optional per-triangle `regions` array (default region 0).
//!
//! ```toml
//! vertices = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]
//! triangles = [[0, 1, 2]]
//! boundary = [
//!   { edge = [0, 1], label = "dirichlet" },
//!   { edge = [1, 2], label = "dirichlet" },
//!   { edge = [2, 0], label = "neumann" },
//! ]
//! ```

use super::{BoundaryLabel, Mesh, MeshError};
use crate::geometry::Point;
use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug, Serialize, Deserialize)]
struct MeshDocument {
    vertices: Vec<[f64; 2]>,
    triangles: Vec<[usize; 3]>,
    #[serde(default)]
    boundary: Vec<BoundaryEntry>,
    #[serde(default)]
    regions: Option<Vec<i32>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct BoundaryEntry {
    edge: [usize; 2],
    label: String,
}

fn parse_label(text: &str) -> Result<BoundaryLabel, MeshError> {
    match text {
        "dirichlet" => Ok(BoundaryLabel::Dirichlet),
        "neumann" => Ok(BoundaryLabel::Neumann),
        other => Err(MeshError::Document(format!(
            "unknown boundary label {other:?} (expected \"dirichlet\" or \"neumann\")"
        ))),
    }
}

/// Parse a mesh document from TOML text and validate it.
pub fn parse_mesh(text: &str) -> Result<Mesh, MeshError> {
    let doc: MeshDocument =
        toml::from_str(text).map_err(|e| MeshError::Document(e.to_string()))?;
    let vertices = doc
        .vertices
        .iter()
        .map(|&[x, y]| Point::new(x, y))
        .collect();
    let mut boundary = Vec::with_capacity(doc.boundary.len());
    for entry in &doc.boundary {
        boundary.push((entry.edge, parse_label(&entry.label)?));
    }
    Mesh::from_parts(vertices, doc.triangles, &boundary, doc.regions, None)
}

/// Load and validate a mesh document from a file.
pub fn load_mesh(path: &Path) -> Result<Mesh, MeshError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| MeshError::Document(format!("{}: {e}", path.display())))?;
    parse_mesh(&text)
}

/// Serialize a mesh back into the document format (used by mesh dumps).
pub fn write_mesh(mesh: &Mesh) -> String {
    let doc = MeshDocument {
        vertices: mesh.vertices().iter().map(|p| [p.x, p.y]).collect(),
        triangles: mesh.triangles().to_vec(),
        boundary: mesh
            .edges()
            .iter()
            .filter_map(|e| {
                e.label.map(|label| BoundaryEntry {
                    edge: e.vertices,
                    label: match label {
                        BoundaryLabel::Dirichlet => "dirichlet".to_string(),
                        BoundaryLabel::Neumann => "neumann".to_string(),
                    },
                })
            })
            .collect(),
        regions: Some(mesh.region_labels().to_vec()),
    };
    toml::to_string(&doc).expect("mesh document serialization cannot fail")
}
