//! Identifying or connecting vertex pairs while keeping a function balanced.
//!
//! Start from a function `g` whose excess vanishes away from the paired
//! vertices. Identifying `p` with `q` adds their excesses, so the result is
//! balanced when `g(p) = g(q)` and `e(p) = -e(q)`. Joining `p` and `q` by
//! an edge adds `g(q)` to `e(p)` and `g(p)` to `e(q)`, so the result is
//! balanced when `g(p) = -e(q)` and `g(q) = -e(p)`.

use num_rational::BigRational;
use num_traits::Zero;

use super::{check_function_size, ensure_balanced, Constructed, IdMapping};
use crate::error::{Error, Result};
use crate::exact::excesses;
use crate::function::VertexFunction;
use crate::graph::Graph;

/// Validates ids, marks paired vertices, and checks zero excess elsewhere.
fn prepare(g: &Graph, pairs: &[(usize, usize)], f: &VertexFunction) -> Result<Vec<BigRational>> {
    let n = g.vertex_count();
    check_function_size(g, f)?;
    if f.is_zero() {
        return Err(Error::Precondition("the given function is zero".into()));
    }
    let mut paired = vec![false; n];
    for &(p, q) in pairs {
        Error::check_vertex(p, n)?;
        Error::check_vertex(q, n)?;
        if p == q {
            return Err(Error::Precondition(format!(
                "vertex {p} is paired with itself"
            )));
        }
        for v in [p, q] {
            if std::mem::replace(&mut paired[v], true) {
                return Err(Error::Precondition(format!(
                    "vertex {v} occurs in two pairs"
                )));
            }
        }
    }
    let e = excesses(g, f)?;
    if let Some(v) = (0..n).find(|&v| !paired[v] && !e[v].is_zero()) {
        return Err(Error::Precondition(format!(
            "excess at unpaired vertex {v} is {}, not 0",
            e[v]
        )));
    }
    Ok(e)
}

/// Identifies `q_j` into `p_j` for every pair and pushes `f` down.
///
/// Requires `f(p_j) = f(q_j)`, `e(p_j) = -e(q_j)`, zero excess at every
/// unpaired vertex, `p_j ≁ q_j`, and no common neighbor of `p_j` and `q_j`.
/// More generally the identification must not create a loop or a parallel
/// edge. The `q_j` are removed and the remaining ids are compacted in
/// ascending order.
pub fn merge_pairs_with_function(
    g: &Graph,
    pairs: &[(usize, usize)],
    f: &VertexFunction,
) -> Result<Constructed> {
    let e = prepare(g, pairs, f)?;
    for &(p, q) in pairs {
        if g.has_edge(p, q) {
            return Err(Error::Precondition(format!(
                "paired vertices {p} and {q} are adjacent"
            )));
        }
    }

    let n = g.vertex_count();
    let mut target: Vec<usize> = (0..n).collect();
    for &(p, q) in pairs {
        target[q] = p;
    }
    let mut new_id = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if target[v] == v {
            new_id[v] = next;
            next += 1;
        }
    }
    let map: Vec<usize> = (0..n).map(|v| new_id[target[v]]).collect();

    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); next];
    for (u, v) in g.edges() {
        let (a, b) = (map[u], map[v]);
        if a == b {
            return Err(Error::IdentificationConflict(u));
        }
        adjacency[a].push(b);
        adjacency[b].push(a);
    }
    for (a, list) in adjacency.iter_mut().enumerate() {
        list.sort_unstable();
        if list.windows(2).any(|w| w[0] == w[1]) {
            let old = (0..n).find(|&v| map[v] == a).unwrap();
            return Err(Error::IdentificationConflict(old));
        }
    }
    let graph = Graph::from_sorted_adjacency(adjacency);

    for &(p, q) in pairs {
        if f.get(p) != f.get(q) {
            return Err(Error::Precondition(format!(
                "values differ on the pair ({p}, {q}): {} vs {}",
                f.get(p),
                f.get(q)
            )));
        }
        if e[p] != -&e[q] {
            return Err(Error::Precondition(format!(
                "excesses on the pair ({p}, {q}) do not cancel: {} and {}",
                e[p], e[q]
            )));
        }
    }

    let mut function = VertexFunction::zeros(next);
    for (v, &target) in map.iter().enumerate() {
        function.set(target, f.get(v).clone());
    }
    ensure_balanced(&graph, &function, "pair identification")?;
    Ok(Constructed {
        graph,
        function,
        mapping: IdMapping {
            sources: vec![map],
            added: Vec::new(),
        },
    })
}

/// Adds the edge `p_j q_j` for every pair.
///
/// Requires `f(p_j) = -e(q_j)`, `f(q_j) = -e(p_j)`, zero excess at every
/// unpaired vertex, and `p_j ≁ q_j`. Ids are unchanged.
pub fn connect_pairs_with_function(
    g: &Graph,
    pairs: &[(usize, usize)],
    f: &VertexFunction,
) -> Result<Constructed> {
    let e = prepare(g, pairs, f)?;
    for &(p, q) in pairs {
        if g.has_edge(p, q) {
            return Err(Error::EdgeExists(p, q));
        }
        if *f.get(p) != -&e[q] || *f.get(q) != -&e[p] {
            return Err(Error::Precondition(format!(
                "pair ({p}, {q}) needs f({p}) = -e({q}) and f({q}) = -e({p}); have f = ({}, {}), e = ({}, {})",
                f.get(p),
                f.get(q),
                e[p],
                e[q]
            )));
        }
    }
    let edges = g.edges().chain(pairs.iter().copied());
    let graph = Graph::from_edges(g.vertex_count(), edges.collect::<Vec<_>>())?;
    let function = f.clone();
    ensure_balanced(&graph, &function, "pair connection")?;
    Ok(Constructed {
        graph,
        function,
        mapping: IdMapping::identity(g.vertex_count()),
    })
}
