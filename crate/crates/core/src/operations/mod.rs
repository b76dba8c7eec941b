//! Graph constructions that carry a known eigenfunction along.
//!
//! Every operation that returns a [`VertexFunction`] has already checked it
//! exactly on the constructed graph. A failed check is reported as
//! [`Error::VerificationFailed`] and always indicates a bug.
//!
//! New vertices are appended after the existing ids. Each result carries an
//! [`IdMapping`] naming where old vertices went and what each new vertex is.

mod calculus;
mod doubling;
mod embeddings;
mod joining;
mod splitting;

pub use calculus::{connect_pairs_with_function, merge_pairs_with_function};
pub use doubling::{
    double_edge, double_graph, double_motif, double_motif_general, double_vertex,
    doubled_graph_kernel_basis, localized_eigenfunction_for_doubling, EdgeDoubling, EdgeMode,
};
pub use embeddings::{
    count_subgraph_embeddings, twin_motif_patterns, EmbeddingCount, MAX_PATTERN_VERTICES,
};
pub use joining::{join_eigenfunctions, join_graphs};
pub use splitting::{attach_chain2, split_graph, Side, SplitParts};

use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{is_balanced, verify_eigenpair_exact};
use crate::function::VertexFunction;
use crate::graph::Graph;

/// What a vertex added by an operation stands for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum Origin {
    /// Copy of vertex `of` of the first input.
    Copy { of: usize },
    /// Bridge vertex joining the two copies of `of` after a split.
    Bridge { of: usize },
    /// Vertex `depth` steps away from `anchor` on an attached chain.
    Chain { anchor: usize, depth: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AddedVertex {
    pub id: usize,
    #[serde(flatten)]
    pub origin: Origin,
}

/// Where the vertices of each input ended up.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdMapping {
    /// `sources[k][v]` is the new id of vertex `v` of input graph `k`.
    pub sources: Vec<Vec<usize>>,
    /// Vertices with no preimage in any input, ascending by id.
    pub added: Vec<AddedVertex>,
}

impl IdMapping {
    pub(crate) fn identity(n: usize) -> Self {
        IdMapping {
            sources: vec![(0..n).collect()],
            added: Vec::new(),
        }
    }
}

/// A constructed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transformed {
    pub graph: Graph,
    pub mapping: IdMapping,
}

/// A constructed graph together with a verified eigenfunction on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constructed {
    pub graph: Graph,
    pub function: VertexFunction,
    pub mapping: IdMapping,
}

fn ensure_balanced(g: &Graph, f: &VertexFunction, what: &str) -> Result<()> {
    if f.is_zero() {
        return Err(Error::VerificationFailed(format!(
            "{what}: constructed function is zero"
        )));
    }
    if is_balanced(g, f)? {
        Ok(())
    } else {
        Err(Error::VerificationFailed(format!(
            "{what}: constructed function is not balanced"
        )))
    }
}

fn ensure_eigenpair(g: &Graph, f: &VertexFunction, lambda: &BigRational, what: &str) -> Result<()> {
    match verify_eigenpair_exact(g, f, lambda) {
        Ok(true) => Ok(()),
        Ok(false) => Err(Error::VerificationFailed(format!(
            "{what}: constructed function fails the eigenvalue equation for {lambda}"
        ))),
        Err(Error::ZeroFunction) => Err(Error::VerificationFailed(format!(
            "{what}: constructed function is zero"
        ))),
        Err(e) => Err(e),
    }
}

fn check_function_size(g: &Graph, f: &VertexFunction) -> Result<()> {
    if f.len() != g.vertex_count() {
        return Err(Error::SizeMismatch {
            expected: g.vertex_count(),
            found: f.len(),
        });
    }
    Ok(())
}

fn require_balanced(g: &Graph, f: &VertexFunction) -> Result<()> {
    if f.is_zero() {
        return Err(Error::Precondition("the given function is zero".into()));
    }
    if is_balanced(g, f)? {
        Ok(())
    } else {
        Err(Error::Precondition(
            "the given function is not balanced".into(),
        ))
    }
}
