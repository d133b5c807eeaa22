//! Guaranteed two-sided bounds on eigenvalues of symmetric second-order
//! elliptic operators on 2-D polygonal domains with mixed Dirichlet, Neumann,
//! and Robin boundary conditions.
//!
//! Upper bounds come from a conforming Lagrange finite element discretization
//! of the generalized eigenvalue problem. Lower bounds come from a fully
//! computable a posteriori error estimator built on a locally reconstructed
//! equilibrated flux in Raviart–Thomas spaces: one small mixed saddle-point
//! problem per mesh vertex, accumulated into a global H(div) field. An
//! adaptive loop (solve, estimate, Dörfler marking, newest-vertex bisection)
//! drives both bounds together until a prescribed relative gap is reached.
//!
//! The `driver` module and the `eigenbounds` binary expose run configuration,
//! built-in domains, and CSV convergence output; the `examples/` directory
//! shows one runnable program per major capability.

pub mod adapt;
pub mod driver;
pub mod eigensolve;
pub mod estimator;
pub mod fem;
pub mod flux;
pub mod geometry;
pub mod linalg;
pub mod mesh;
pub mod quadrature;









pub use mesh::{BoundaryLabel, Mesh, PatchClass, VertexPatch};
