use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{check_function_size, ensure_eigenpair, Constructed, IdMapping, Transformed};
use crate::error::{Error, Result};
use crate::exact::verify_eigenpair_exact;
use crate::function::VertexFunction;
use crate::graph::Graph;

/// Disjoint union of `g1` and `g2` with `p2` identified into `p1`.
///
/// Vertices of `g1` keep their ids, `p2` becomes `p1`, and the remaining
/// vertices of `g2` follow in their original order.
pub fn join_graphs(g1: &Graph, p1: usize, g2: &Graph, p2: usize) -> Result<Transformed> {
    let n1 = g1.vertex_count();
    Error::check_vertex(p1, n1)?;
    Error::check_vertex(p2, g2.vertex_count())?;
    let second: Vec<usize> = (0..g2.vertex_count())
        .map(|v| match v.cmp(&p2) {
            std::cmp::Ordering::Less => n1 + v,
            std::cmp::Ordering::Equal => p1,
            std::cmp::Ordering::Greater => n1 + v - 1,
        })
        .collect();
    let edges = g1
        .edges()
        .chain(g2.edges().map(|(u, v)| (second[u], second[v])));
    let graph = Graph::from_edges(n1 + g2.vertex_count() - 1, edges.collect::<Vec<_>>())?;
    Ok(Transformed {
        graph,
        mapping: IdMapping {
            sources: vec![(0..n1).collect(), second],
            added: Vec::new(),
        },
    })
}

fn check_eigen_or_zero(
    g: &Graph,
    f: &VertexFunction,
    lambda: &BigRational,
    which: &str,
) -> Result<()> {
    check_function_size(g, f)?;
    if f.is_zero() || verify_eigenpair_exact(g, f, lambda)? {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{which} function is not an eigenfunction for {lambda}"
        )))
    }
}

/// Glues eigenfunctions of `g1` and `g2` along [`join_graphs`].
///
/// Each function must be an exact `λ`-eigenfunction of its graph or
/// identically zero. For `λ ≠ 1` both must vanish at the joined vertex; for
/// `λ = 1` equal values there suffice.
pub fn join_eigenfunctions(
    g1: &Graph,
    f1: &VertexFunction,
    p1: usize,
    g2: &Graph,
    f2: &VertexFunction,
    p2: usize,
    lambda: &BigRational,
) -> Result<Constructed> {
    let Transformed { graph, mapping } = join_graphs(g1, p1, g2, p2)?;
    check_eigen_or_zero(g1, f1, lambda, "first")?;
    check_eigen_or_zero(g2, f2, lambda, "second")?;
    if f1.is_zero() && f2.is_zero() {
        return Err(Error::Precondition("both functions are zero".into()));
    }
    let (a, b) = (f1.get(p1), f2.get(p2));
    if lambda.is_one() {
        if a != b {
            return Err(Error::Precondition(format!(
                "values at the joined vertices differ: {a} vs {b}"
            )));
        }
    } else if !a.is_zero() || !b.is_zero() {
        return Err(Error::Precondition(format!(
            "for eigenvalue {lambda} both functions must vanish at the joined vertices (got {a} and {b})"
        )));
    }

    let mut function = VertexFunction::zeros(graph.vertex_count());
    for (v, value) in f1.values().iter().enumerate() {
        function.set(v, value.clone());
    }
    for (v, value) in f2.values().iter().enumerate() {
        function.set(mapping.sources[1][v], value.clone());
    }
    ensure_eigenpair(&graph, &function, lambda, "joining")?;
    Ok(Constructed {
        graph,
        function,
        mapping,
    })
}
