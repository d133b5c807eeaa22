//! Newest-vertex bisection with recursive conforming closure.
//!
//! Each triangle carries a refinement edge. Bisecting inserts the midpoint of
//! that edge; the midpoint becomes the newest vertex of both children, so each
//! child's next refinement edge is the parent edge opposite the midpoint.
//! Closure works on edges: a triangle with any split edge must split its
//! refinement edge first, which propagates until a fixed point. A triangle is
//! then subdivided into 2, 3, or 4 children depending on how many of its edges
//! are split.

use super::{BoundaryLabel, Mesh, MeshError};
use crate::geometry::Point;
use std::collections::BTreeMap;

/// Result of one bisection pass: the refined mesh plus, per new triangle, the
/// index of the triangle of the input mesh it came from.
#[derive(Debug, Clone)]
pub struct BisectionOutcome {
    pub mesh: Mesh,
    pub parent: Vec<usize>,
}

impl Mesh {
    /// Bisect every marked triangle at least once and close the mesh so that
    /// no hanging vertices remain. Children inherit region labels; halves of
    /// boundary edges inherit the boundary label.
    pub fn bisect(&self, marked: &[usize]) -> Mesh {
        self.bisect_with_parents(marked).mesh
    }

    /// [`Mesh::bisect`] plus the child-to-parent triangle map, used to carry
    /// finite element functions across one refinement exactly.
    pub fn bisect_with_parents(&self, marked: &[usize]) -> BisectionOutcome {
        if marked.is_empty() {
            return BisectionOutcome {
                mesh: self.clone(),
                parent: (0..self.n_triangles()).collect(),
            };
        }
        for &t in marked {
            assert!(t < self.n_triangles(), "marked triangle {t} out of range");
        }

        // Closure on edges: split the refinement edge of every triangle that
        // has any split edge. Each round marks at least one new edge, so the
        // loop is bounded by the edge count.
        let mut split = vec![false; self.n_edges()];
        for &t in marked {
            split[self.triangle_edges[t][self.refinement_edge[t] as usize]] = true;
        }
        loop {
            let mut changed = false;
            for t in 0..self.n_triangles() {
                let edges = self.triangle_edges[t];
                let refine = edges[self.refinement_edge[t] as usize];
                if !split[refine] && edges.iter().any(|&e| split[e]) {
                    split[refine] = true;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }

        // Midpoint vertices for split edges.
        let mut vertices: Vec<Point> = self.vertices.clone();
        let mut midpoint = vec![usize::MAX; self.n_edges()];
        for e in 0..self.n_edges() {
            if split[e] {
                midpoint[e] = vertices.len();
                vertices.push(self.edge_midpoint(e));
            }
        }

        // Boundary labels for the refined mesh, keyed by sorted vertex pair.
        let mut labels: BTreeMap<[usize; 2], BoundaryLabel> = BTreeMap::new();
        for (e, edge) in self.edges.iter().enumerate() {
            if let Some(label) = edge.label {
                let [a, b] = edge.vertices;
                if split[e] {
                    let m = midpoint[e];
                    labels.insert(sorted_pair(a, m), label);
                    labels.insert(sorted_pair(m, b), label);
                } else {
                    labels.insert([a, b], label);
                }
            }
        }

        let mut triangles: Vec<[usize; 3]> = Vec::with_capacity(self.n_triangles() * 2);
        let mut refinement_edges: Vec<u8> = Vec::with_capacity(self.n_triangles() * 2);
        let mut regions: Vec<i32> = Vec::with_capacity(self.n_triangles() * 2);
        let mut parent: Vec<usize> = Vec::with_capacity(self.n_triangles() * 2);

        // One elementary bisection: cyclic order (peak, x, y) with base (x, y)
        // and m its midpoint gives CCW children (peak, x, m) and (peak, m, y),
        // whose refinement edges are the old parent edges (peak, x) and
        // (y, peak).
        struct Sub<'a> {
            triangles: &'a mut Vec<[usize; 3]>,
            refinement_edges: &'a mut Vec<u8>,
            regions: &'a mut Vec<i32>,
            parent: &'a mut Vec<usize>,
        }
        impl Sub<'_> {
            fn emit(&mut self, tri: [usize; 3], refine: u8, region: i32, from: usize) {
                self.triangles.push(tri);
                self.refinement_edges.push(refine);
                self.regions.push(region);
                self.parent.push(from);
            }

            /// `tri` in cyclic order with the refinement edge at local index
            /// `refine`; `base_split` is the midpoint of that edge, and
            /// `other_split[i]` midpoints of the remaining edges when split.
            fn bisect_once(
                &mut self,
                tri: [usize; 3],
                refine: usize,
                region: i32,
                from: usize,
                edge_midpoints: &dyn Fn([usize; 2]) -> Option<usize>,
            ) {
                let peak = tri[refine];
                let x = tri[(refine + 1) % 3];
                let y = tri[(refine + 2) % 3];
                let m = edge_midpoints([x, y]).expect("refinement edge not split");
                // Child (peak, x, m): refinement edge (peak, x), opposite m.
                for (child, next_refine, old_edge) in [
                    ([peak, x, m], 2usize, [peak, x]),
                    ([peak, m, y], 1usize, [y, peak]),
                ] {
                    if let Some(m2) = edge_midpoints(old_edge) {
                        // The inherited refinement edge is itself split:
                        // bisect the child again. Grandchild refinement edges
                        // are new (unsplit) edges, so the recursion stops.
                        self.bisect_once_shallow(child, next_refine, region, from, m2);
                    } else {
                        self.emit(child, next_refine as u8, region, from);
                    }
                }
            }

            fn bisect_once_shallow(
                &mut self,
                tri: [usize; 3],
                refine: usize,
                region: i32,
                from: usize,
                m: usize,
            ) {
                let peak = tri[refine];
                let x = tri[(refine + 1) % 3];
                let y = tri[(refine + 2) % 3];
                self.emit([peak, x, m], 2, region, from);
                self.emit([peak, m, y], 1, region, from);
            }
        }

        let mut edge_of_pair: BTreeMap<[usize; 2], usize> = BTreeMap::new();
        for (e, edge) in self.edges.iter().enumerate() {
            edge_of_pair.insert(edge.vertices, e);
        }
        let midpoint_of = |pair: [usize; 2]| -> Option<usize> {
            let key = sorted_pair(pair[0], pair[1]);
            edge_of_pair.get(&key).and_then(|&e| {
                if split[e] {
                    Some(midpoint[e])
                } else {
                    None
                }
            })
        };

        let mut sub = Sub {
            triangles: &mut triangles,
            refinement_edges: &mut refinement_edges,
            regions: &mut regions,
            parent: &mut parent,
        };
        for t in 0..self.n_triangles() {
            let tri = self.triangles[t];
            let refine = self.refinement_edge[t] as usize;
            let region = self.region_labels[t];
            let any_split = self.triangle_edges[t].iter().any(|&e| split[e]);
            if !any_split {
                sub.emit(tri, refine as u8, region, t);
            } else {
                sub.bisect_once(tri, refine, region, t, &midpoint_of);
            }
        }

        let boundary: Vec<([usize; 2], BoundaryLabel)> =
            labels.iter().map(|(&pair, &label)| (pair, label)).collect();
        let mesh = Mesh::from_parts(
            vertices,
            triangles,
            &boundary,
            Some(regions),
            Some(refinement_edges),
        )
        .expect("bisection produced an invalid mesh");
        BisectionOutcome { mesh, parent }
    }

    /// Mark everything and bisect; two calls quarter every triangle. Returns
    /// the refined mesh and the composite child-to-ancestor map.
    pub fn uniform_refine(&self, rounds: usize) -> (Mesh, Vec<usize>) {
        let mut mesh = self.clone();
        let mut ancestor: Vec<usize> = (0..self.n_triangles()).collect();
        for _ in 0..rounds {
            let marked: Vec<usize> = (0..mesh.n_triangles()).collect();
            let outcome = mesh.bisect_with_parents(&marked);
            ancestor = outcome.parent.iter().map(|&p| ancestor[p]).collect();
            mesh = outcome.mesh;
        }
        (mesh, ancestor)
    }
}

fn sorted_pair(a: usize, b: usize) -> [usize; 2] {
    [a.min(b), a.max(b)]
}

impl Mesh {
    /// Panics if `MeshError` invariants fail; used by tests and debug checks.
    pub fn validate(&self) -> Result<(), MeshError> {
        Mesh::from_parts(
            self.vertices.clone(),
            self.triangles.clone(),
            &self
                .edges
                .iter()
                .filter_map(|e| e.label.map(|l| (e.vertices, l)))
                .collect::<Vec<_>>(),
            Some(self.region_labels.clone()),
            Some(self.refinement_edge.clone()),
        )
        .map(|_| ())
    }
}
