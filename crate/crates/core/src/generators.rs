//! Graph families used throughout: chains, closed chains, complete graphs
//! and petal graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Path on `m ≥ 1` vertices, `j ~ j+1`.
pub fn chain(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "a chain needs at least one vertex".into(),
        ));
    }
    Graph::from_edges(m, (1..m).map(|j| (j - 1, j)))
}

/// Closed chain (cycle) on `m ≥ 3` vertices.
pub fn cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!(
            "a closed chain needs at least 3 vertices, got {m}"
        )));
    }
    Graph::from_edges(m, (0..m).map(|j| (j, (j + 1) % m)))
}

/// Complete graph on `n ≥ 1` vertices.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "a complete graph needs at least one vertex".into(),
        ));
    }
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `k ≥ 1` triangles sharing vertex 0. Triangle `t` uses vertices
/// `2t+1` and `2t+2`.
pub fn petal(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "a petal graph needs at least one triangle".into(),
        ));
    }
    let edges = (0..k).flat_map(|t| {
        let (a, b) = (2 * t + 1, 2 * t + 2);
        [(0, a), (0, b), (a, b)]
    });
    Graph::from_edges(2 * k + 1, edges)
}
