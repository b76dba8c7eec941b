//! Finite simple undirected graphs with dense vertex ids.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..vertex_count`.
///
/// Adjacency lists are sorted, symmetric, free of duplicates and self-loops.
/// Connectivity is not required; operations that need it check for it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges (in either
    /// orientation) collapse to one; self-loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            Error::check_vertex(u, n)?;
            Error::check_vertex(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbors of `i`. Panics if `i` is out of range.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> Result<usize> {
        Error::check_vertex(i, self.vertex_count())?;
        Ok(self.adjacency[i].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// First isolated vertex, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        self.adjacency.iter().position(Vec::is_empty)
    }

    /// Component label per vertex, labels assigned in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    if label[v] == usize::MAX {
                        label[v] = next;
                        queue.push_back(v);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// True iff the graph has at most one component. The graph on zero
    /// vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// Two-colors each component by BFS.
    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adjacency[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Returns a new graph with one extra vertex, id `vertex_count()`,
    /// adjacent only to `v`.
    pub fn add_pending_vertex(&self, v: usize) -> Result<Graph> {
        Error::check_vertex(v, self.vertex_count())?;
        let mut out = self.clone();
        let q = out.adjacency.len();
        out.adjacency.push(vec![v]);
        out.adjacency[v].push(q);
        Ok(out)
    }

    /// Subgraph induced on `vertices`; vertex `vertices[k]` becomes `k`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut local = vec![usize::MAX; n];
        for (k, &v) in vertices.iter().enumerate() {
            Error::check_vertex(v, n)?;
            if local[v] != usize::MAX {
                return Err(Error::InvalidParameter(format!("vertex {v} listed twice")));
            }
            local[v] = k;
        }
        let edges = vertices.iter().enumerate().flat_map(|(k, &v)| {
            let local = &local;
            self.adjacency[v].iter().filter_map(move |&w| {
                (local[w] != usize::MAX && local[w] > k).then_some((k, local[w]))
            })
        });
        Graph::from_edges(vertices.len(), edges.collect::<Vec<_>>())
    }

    /// `self` followed by `other`, with `other`'s ids shifted by
    /// `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|list| list.iter().map(|&v| v + shift).collect()),
        );
        Graph { adjacency }
    }

    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        debug_assert!(adjacency
            .iter()
            .enumerate()
            .all(|(u, l)| l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&u)));
        Graph { adjacency }
    }
}

/// A connected vertex subset of a host graph, taken with all induced edges.
///
/// The order of `vertices` is significant: constructions that copy a motif
/// append copies in this order.
#[derive(Debug, Clone)]
pub struct Motif<'g> {
    host: &'g Graph,
    vertices: Vec<usize>,
}

impl<'g> Motif<'g> {
    pub fn new(host: &'g Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidMotif("motif has no vertices".into()));
        }
        let sub = host
            .induced_subgraph(&vertices)
            .map_err(|e| Error::InvalidMotif(e.to_string()))?;
        if !sub.is_connected() {
            return Err(Error::InvalidMotif(
                "induced subgraph on the motif vertices is disconnected".into(),
            ));
        }
        Ok(Motif { host, vertices })
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Position of a host vertex inside the motif.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    /// The motif as a standalone graph, local id `k` for `vertices()[k]`.
    pub fn standalone(&self) -> Graph {
        self.host
            .induced_subgraph(&self.vertices)
            .expect("validated on construction")
    }
}
