use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex id {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("function has {found} values but the graph has {expected} vertices")]
    SizeMismatch { expected: usize, found: usize },

    #[error("the zero function is not an eigenfunction")]
    ZeroFunction,

    #[error("vertex {0} is isolated; the normalized Laplacian is undefined there")]
    IsolatedVertex(usize),

    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("invalid motif: {0}")]
    InvalidMotif(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("edge {0}-{1} already present")]
    EdgeExists(usize, usize),

    #[error("identifying the given pairs would create a loop or a parallel edge at vertex {0}")]
    IdentificationConflict(usize),

    #[error("pattern has {0} vertices; at most 8 are supported")]
    PatternTooLarge(usize),

    /// No block with a single excess vertex can carry an odd `n·m`, because
    /// `Σ_p f(p)·e(p) = 2·Σ_{edges qr} f(q)·f(r)`.
    #[error(
        "parity obstruction: the pair ({n}, {m}) has odd product, but n·m = 2·Σ_(edges qr) f(q)f(r) is always even"
    )]
    ParityObstruction { n: i64, m: i64 },

    /// A construction produced a function that fails its own exact check.
    /// This is always a bug.
    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
}

impl Error {
    pub(crate) fn check_vertex(vertex: usize, vertex_count: usize) -> Result<()> {
        if vertex < vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex,
                vertex_count,
            })
        }
    }
}
