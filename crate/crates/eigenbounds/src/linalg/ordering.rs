//! Fill-reducing ordering by geometric nested dissection.
//!
//! Finite element unknowns carry 2-D positions, so good vertex separators can
//! be found by recursive coordinate bisection: split the node set at the
//! median of the longer bounding-box axis, take as separator the nodes of one
//! half with a neighbor in the other, and order the separator last.

use super::CsrMatrix;

/// Returns a permutation `perm` such that unknown `perm[k]` is eliminated
/// k-th. `positions[i]` is the coordinate of unknown `i`; adjacency comes from
/// the matrix pattern.
pub fn nested_dissection(matrix: &CsrMatrix, positions: &[[f64; 2]]) -> Vec<usize> {
    assert_eq!(matrix.n, positions.len());
    let mut perm = Vec::with_capacity(matrix.n);
    let mut nodes: Vec<usize> = (0..matrix.n).collect();
    let mut side = vec![Side::Unassigned; matrix.n];
    dissect(matrix, positions, &mut nodes, &mut side, &mut perm);
    debug_assert_eq!(perm.len(), matrix.n);
    perm
}

#[derive(Clone, Copy, PartialEq)]
enum Side {
    Unassigned,
    Left,
    Right,
}

const LEAF_SIZE: usize = 24;

fn dissect(
    matrix: &CsrMatrix,
    positions: &[[f64; 2]],
    nodes: &mut Vec<usize>,
    side: &mut [Side],
    perm: &mut Vec<usize>,
) {
    if nodes.len() <= LEAF_SIZE {
        perm.extend_from_slice(nodes);
        return;
    }

    // Split at the median along the longer bounding-box axis.
    let (mut lo, mut hi) = ([f64::MAX; 2], [f64::MIN; 2]);
    for &v in nodes.iter() {
        for d in 0..2 {
            lo[d] = lo[d].min(positions[v][d]);
            hi[d] = hi[d].max(positions[v][d]);
        }
    }
    let axis = if hi[0] - lo[0] >= hi[1] - lo[1] { 0 } else { 1 };
    let mid = nodes.len() / 2;
    nodes.select_nth_unstable_by(mid, |&a, &b| {
        positions[a][axis]
            .partial_cmp(&positions[b][axis])
            .unwrap()
            .then(a.cmp(&b))
    });
    let (left_nodes, right_nodes) = nodes.split_at(mid);
    for &v in left_nodes {
        side[v] = Side::Left;
    }
    for &v in right_nodes {
        side[v] = Side::Right;
    }

    // One-sided vertex separator: left nodes adjacent to the right half.
    let mut left: Vec<usize> = Vec::with_capacity(mid);
    let mut separator: Vec<usize> = Vec::new();
    for &v in left_nodes {
        let (cols, _) = matrix.row(v);
        if cols.iter().any(|&c| side[c] == Side::Right) {
            separator.push(v);
        } else {
            left.push(v);
        }
    }
    let mut right: Vec<usize> = right_nodes.to_vec();

    // Reset marks before recursing (slices of `side` are shared).
    for &v in nodes.iter() {
        side[v] = Side::Unassigned;
    }

    dissect(matrix, positions, &mut left, side, perm);
    dissect(matrix, positions, &mut right, side, perm);
    perm.extend_from_slice(&separator);
}
