//! Sparse symmetric linear algebra: CSR storage, an up-looking LDL^T
//! factorization, and a coordinate-bisection nested-dissection ordering that
//! exploits the 2-D positions of finite element unknowns.

mod ldl;
mod ordering;
mod sparse;

pub use ldl::{LdlError, LdlFactor};
pub use ordering::nested_dissection;
pub use sparse::{CsrMatrix, Triplets};
