//! Brute-force subgraph counting for small patterns.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_PATTERN_VERTICES: usize = 8;

/// Copies of a pattern inside a host graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbeddingCount {
    /// Distinct subgraphs (vertex set plus the pattern's edge set) isomorphic
    /// to the pattern; extra host edges among the vertices are allowed.
    pub non_induced: u64,
    /// Vertex subsets whose induced subgraph is isomorphic to the pattern.
    pub induced: u64,
    /// Automorphisms of the pattern.
    pub automorphisms: u64,
}

/// Counts copies of `pattern` in `g`.
///
/// Injective edge-preserving maps are enumerated by backtracking; each
/// image is reached exactly `|Aut(pattern)|` times.
pub fn count_subgraph_embeddings(g: &Graph, pattern: &Graph) -> Result<EmbeddingCount> {
    let k = pattern.vertex_count();
    if k > MAX_PATTERN_VERTICES {
        return Err(Error::PatternTooLarge(k));
    }
    let automorphisms = count_maps(pattern, pattern).0;
    let (maps, induced_maps) = count_maps(pattern, g);
    Ok(EmbeddingCount {
        non_induced: maps / automorphisms,
        induced: induced_maps / automorphisms,
        automorphisms,
    })
}

/// Pattern vertices in an order where each one (after the first of its
/// component) has an earlier neighbor, so edge checks prune early.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let k = pattern.vertex_count();
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let back = pattern.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (back, pattern.neighbors(v).len(), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

/// Returns (injective homomorphisms, induced injective homomorphisms).
fn count_maps(pattern: &Graph, host: &Graph) -> (u64, u64) {
    let order = search_order(pattern);
    let mut image = vec![usize::MAX; pattern.vertex_count()];
    let mut used = vec![false; host.vertex_count()];
    let mut counts = (0, 0);
    extend(pattern, host, &order, 0, &mut image, &mut used, &mut counts);
    counts
}

fn extend(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
    counts: &mut (u64, u64),
) {
    if depth == order.len() {
        counts.0 += 1;
        let induced = order.iter().enumerate().all(|(i, &a)| {
            order[..i]
                .iter()
                .all(|&b| pattern.has_edge(a, b) == host.has_edge(image[a], image[b]))
        });
        if induced {
            counts.1 += 1;
        }
        return;
    }
    let v = order[depth];
    for x in 0..host.vertex_count() {
        if used[x] {
            continue;
        }
        let fits = pattern
            .neighbors(v)
            .iter()
            .filter(|&&w| image[w] != usize::MAX)
            .all(|&w| host.has_edge(x, image[w]));
        if !fits {
            continue;
        }
        image[v] = x;
        used[x] = true;
        extend(pattern, host, order, depth + 1, image, used, counts);
        used[x] = false;
        image[v] = usize::MAX;
    }
}

/// Patterns made of two twins of `v` (copies sharing `v`'s neighborhood)
/// together with a nonempty set `S` of `v`'s neighbors, both twins joined
/// to all of `S`.
///
/// For every `S` with `|S| ≤ 6` this yields the pattern with no edges inside
/// `S` and, when `g` has edges inside `S`, also the one with those edges.
/// Twin vertices are `0` and `1`; `S` follows in ascending order.
pub fn twin_motif_patterns(g: &Graph, v: usize) -> Result<Vec<Graph>> {
    Error::check_vertex(v, g.vertex_count())?;
    let nbrs = g.neighbors(v);
    let limit = MAX_PATTERN_VERTICES - 2;
    let mut out = Vec::new();
    for mask in 1u32..(1 << nbrs.len().min(20)) {
        if mask.count_ones() as usize > limit {
            continue;
        }
        let set: Vec<usize> = (0..nbrs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| nbrs[i])
            .collect();
        let size = set.len() + 2;
        let mut edges: Vec<(usize, usize)> = (0..set.len())
            .flat_map(|i| [(0, i + 2), (1, i + 2)])
            .collect();
        out.push(Graph::from_edges(size, edges.clone())?);
        let inner: Vec<(usize, usize)> = (0..set.len())
            .flat_map(|i| (i + 1..set.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| g.has_edge(set[i], set[j]))
            .map(|(i, j)| (i + 2, j + 2))
            .collect();
        if !inner.is_empty() {
            edges.extend(inner);
            out.push(Graph::from_edges(size, edges)?);
        }
    }
    Ok(out)
}
