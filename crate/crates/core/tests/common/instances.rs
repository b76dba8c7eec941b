//! Random inputs for the splitting, chain, merge and connect constructions.

use std::collections::BTreeMap;

use lapmotif::operations::{
    attach_chain2, connect_pairs_with_function, merge_pairs_with_function, split_graph,
    Constructed, Side, SplitParts,
};
use lapmotif::synthesis::realize_pair;
use lapmotif::{Graph, Result, VertexFunction};
use num_traits::Zero;
use rand::Rng;

use super::graph_with_kernel;

fn concat(f: &VertexFunction, g: &VertexFunction) -> VertexFunction {
    VertexFunction::new(f.values().iter().chain(g.values()).cloned().collect())
}

/// Random nonzero pair with an even product.
fn even_pair(rng: &mut impl Rng) -> (i64, i64) {
    loop {
        let n = rng.gen_range(-4i64..=4);
        let m = rng.gen_range(-4i64..=4);
        if n * m % 2 == 0 && n != 0 {
            return (n, m);
        }
    }
}

/// A random shared set; each component of the rest goes wholly to one side.
pub fn split(rng: &mut impl Rng) -> Result<Constructed> {
    let (g, f) = graph_with_kernel(rng, 3, 10);
    let n = g.vertex_count();
    let shared: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut parts = SplitParts {
        shared: shared.clone(),
        ..Default::default()
    };
    for start in 0..n {
        if shared.contains(&start) || side[start].is_some() {
            continue;
        }
        let first = rng.gen_bool(0.5);
        let mut stack = vec![start];
        side[start] = Some(first);
        while let Some(v) = stack.pop() {
            if first {
                parts.first.push(v);
            } else {
                parts.second.push(v);
            }
            for &w in g.neighbors(v) {
                if !shared.contains(&w) && side[w].is_none() {
                    side[w] = Some(first);
                    stack.push(w);
                }
            }
        }
    }
    let mut edge_side = BTreeMap::new();
    for (u, v) in g.edges() {
        if shared.contains(&u) && shared.contains(&v) {
            let s = if rng.gen_bool(0.5) {
                Side::First
            } else {
                Side::Second
            };
            edge_side.insert((u, v), s);
        }
    }
    parts.edge_side = edge_side;
    split_graph(&g, &parts, &f)
}

pub fn chain2(rng: &mut impl Rng) -> Result<Constructed> {
    let (g, f) = graph_with_kernel(rng, 2, 12);
    let p = rng.gen_range(0..g.vertex_count());
    attach_chain2(&g, &f, p)
}

/// Either two blocks with opposite excesses merged at their special
/// vertices, or two copies of a balanced function merged along an
/// independent set.
pub fn merge(rng: &mut impl Rng) -> Result<Constructed> {
    if rng.gen_bool(0.5) {
        let (n, m) = even_pair(rng);
        let a = realize_pair(n, m)?;
        let b = realize_pair(n, -m)?;
        let g = a.graph.disjoint_union(&b.graph);
        let offset = a.graph.vertex_count();
        merge_pairs_with_function(&g, &[(a.p0, offset + b.p0)], &concat(&a.f, &b.f))
    } else {
        let (g, f) = graph_with_kernel(rng, 2, 10);
        let n = g.vertex_count();
        let mut chosen: Vec<usize> = Vec::new();
        for v in 0..n {
            if rng.gen_bool(0.5) && chosen.iter().all(|&u| !g.has_edge(u, v)) {
                chosen.push(v);
            }
        }
        if chosen.is_empty() {
            chosen.push(rng.gen_range(0..n));
        }
        let pairs: Vec<(usize, usize)> = chosen.iter().map(|&v| (v, n + v)).collect();
        merge_pairs_with_function(&g.disjoint_union(&g), &pairs, &concat(&f, &f))
    }
}

/// Either blocks `(a, -c)` and `(c, -a)` joined by an edge at their special
/// vertices, or a new edge between two non-adjacent zeros of a balanced
/// function.
pub fn connect(rng: &mut impl Rng) -> Result<Constructed> {
    if rng.gen_bool(0.5) {
        let (g, f) = graph_with_kernel(rng, 3, 10);
        let zeros: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| f.get(v).is_zero())
            .collect();
        let candidates: Vec<(usize, usize)> = zeros
            .iter()
            .flat_map(|&p| zeros.iter().map(move |&q| (p, q)))
            .filter(|&(p, q)| p < q && !g.has_edge(p, q))
            .collect();
        if !candidates.is_empty() {
            let pair = candidates[rng.gen_range(0..candidates.len())];
            return connect_pairs_with_function(&g, &[pair], &f);
        }
    }
    let (a, c) = even_pair(rng);
    let x = realize_pair(a, -c)?;
    let y = realize_pair(c, -a)?;
    let g: Graph = x.graph.disjoint_union(&y.graph);
    let offset = x.graph.vertex_count();
    connect_pairs_with_function(&g, &[(x.p0, offset + y.p0)], &concat(&x.f, &y.f))
}
