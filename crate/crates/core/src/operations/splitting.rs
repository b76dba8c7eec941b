use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::{
    check_function_size, ensure_balanced, require_balanced, AddedVertex, Constructed, IdMapping,
    Origin,
};
use crate::error::{Error, Result};
use crate::function::VertexFunction;
use crate::graph::Graph;

/// Which half of a split receives an edge inside the shared set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    First,
    Second,
}

/// Arguments of [`split_graph`].
///
/// `shared`, `first` and `second` partition the vertices, with no edge
/// between `first` and `second`. `edge_side` assigns every edge with both
/// ends in `shared` (keyed as `(min, max)`) to one half.
#[derive(Debug, Clone, Default)]
pub struct SplitParts {
    pub shared: Vec<usize>,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub edge_side: BTreeMap<(usize, usize), Side>,
}

#[derive(Clone, Copy, PartialEq)]
enum Part {
    Unassigned,
    Shared,
    First,
    Second,
}

/// Splits `g` along the shared set and reconnects the halves through
/// bridge vertices, carrying a balanced function along.
///
/// The first half keeps the original ids of `first ∪ shared`. The second
/// half keeps the ids of `second`, and the copies of `shared` vertices are
/// appended in ascending order, followed by one bridge vertex `w_q` per
/// shared vertex `q` (also ascending), adjacent to both copies of `q`.
///
/// The function is `f1` on the first half, `-f1` on the second half, and
/// `-Σ_{s in first half, s~q} f1(s)` at `w_q`. Either `first` or `second`
/// may be empty.
pub fn split_graph(g: &Graph, parts: &SplitParts, f1: &VertexFunction) -> Result<Constructed> {
    let n = g.vertex_count();
    check_function_size(g, f1)?;

    let mut part = vec![Part::Unassigned; n];
    for (list, tag) in [
        (&parts.shared, Part::Shared),
        (&parts.first, Part::First),
        (&parts.second, Part::Second),
    ] {
        for &v in list {
            Error::check_vertex(v, n)?;
            if part[v] != Part::Unassigned {
                return Err(Error::Precondition(format!(
                    "vertex {v} appears in two parts"
                )));
            }
            part[v] = tag;
        }
    }
    if let Some(v) = part.iter().position(|&p| p == Part::Unassigned) {
        return Err(Error::Precondition(format!("vertex {v} is in no part")));
    }

    let mut sides_used = 0;
    for (u, v) in g.edges() {
        match (part[u], part[v]) {
            (Part::First, Part::Second) | (Part::Second, Part::First) => {
                return Err(Error::Precondition(format!(
                    "edge {u}-{v} joins the two exclusive parts"
                )))
            }
            (Part::Shared, Part::Shared) => {
                if !parts.edge_side.contains_key(&(u, v)) {
                    return Err(Error::Precondition(format!(
                        "shared edge {u}-{v} is not assigned to a side"
                    )));
                }
                sides_used += 1;
            }
            _ => {}
        }
    }
    if sides_used != parts.edge_side.len() {
        return Err(Error::Precondition(
            "edge sides were given for pairs that are not shared edges".into(),
        ));
    }
    require_balanced(g, f1)?;

    let mut shared = parts.shared.clone();
    shared.sort_unstable();
    let k = shared.len();
    let mut second_copy = vec![usize::MAX; n];
    for (t, &q) in shared.iter().enumerate() {
        second_copy[q] = n + t;
    }
    let bridge = |t: usize| n + k + t;
    // id of v inside the second half
    let in_second = |v: usize| {
        if part[v] == Part::Shared {
            second_copy[v]
        } else {
            v
        }
    };

    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        let side = match (part[u], part[v]) {
            (Part::Shared, Part::Shared) => parts.edge_side[&(u, v)],
            (Part::Second, _) | (_, Part::Second) => Side::Second,
            _ => Side::First,
        };
        match side {
            Side::First => edges.push((u, v)),
            Side::Second => edges.push((in_second(u), in_second(v))),
        }
    }
    for (t, &q) in shared.iter().enumerate() {
        edges.push((bridge(t), q));
        edges.push((bridge(t), second_copy[q]));
    }
    let graph = Graph::from_edges(n + 2 * k, edges)?;

    let mut function = VertexFunction::zeros(n + 2 * k);
    for v in 0..n {
        let value = f1.get(v).clone();
        match part[v] {
            Part::Second => function.set(v, -value),
            Part::Shared => {
                function.set(second_copy[v], -&value);
                function.set(v, value);
            }
            _ => function.set(v, value),
        }
    }
    for (t, &q) in shared.iter().enumerate() {
        // neighbors of q in the new graph other than its bridge lie in the first half
        let first_sum = graph
            .neighbors(q)
            .iter()
            .filter(|&&s| s != bridge(t))
            .fold(BigRational::zero(), |acc, &s| acc + function.get(s));
        function.set(bridge(t), -first_sum);
    }
    ensure_balanced(&graph, &function, "graph splitting")?;

    let mut added: Vec<AddedVertex> = shared
        .iter()
        .enumerate()
        .map(|(t, &q)| AddedVertex {
            id: n + t,
            origin: Origin::Copy { of: q },
        })
        .collect();
    added.extend(shared.iter().enumerate().map(|(t, &q)| AddedVertex {
        id: bridge(t),
        origin: Origin::Bridge { of: q },
    }));
    Ok(Constructed {
        graph,
        function,
        mapping: IdMapping {
            sources: vec![(0..n).collect()],
            added,
        },
    })
}

/// Hangs a two-vertex chain `p ~ p₁ ~ p₂` off `p` and extends a balanced
/// `f1` by `0` at `p₁` and `-f1(p)` at `p₂`.
pub fn attach_chain2(g: &Graph, f1: &VertexFunction, p: usize) -> Result<Constructed> {
    let n = g.vertex_count();
    Error::check_vertex(p, n)?;
    check_function_size(g, f1)?;
    require_balanced(g, f1)?;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.push((p, n));
    edges.push((n, n + 1));
    let graph = Graph::from_edges(n + 2, edges)?;
    let mut function = f1.clone();
    function.push(BigRational::zero());
    function.push(-f1.get(p));
    ensure_balanced(&graph, &function, "chain attachment")?;
    let mut mapping = IdMapping::identity(n);
    mapping.added = (1..=2)
        .map(|depth| AddedVertex {
            id: n + depth - 1,
            origin: Origin::Chain { anchor: p, depth },
        })
        .collect();
    Ok(Constructed {
        graph,
        function,
        mapping,
    })
}
