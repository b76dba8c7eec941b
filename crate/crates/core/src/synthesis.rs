//! Building blocks with controlled excess and the embedding construction.
//!
//! A block is a graph with a distinguished vertex `p0` and an integer
//! function whose excess `e(p) = Σ_{q~p} f(q)` vanishes everywhere except
//! possibly at `p0`. Its pair is `(f(p0), e(p0))`. Gluing a block with pair
//! `(n, -m)` onto a vertex with value `n` and excess `m` cancels that excess
//! without disturbing anything else, which is how
//! [`embed_with_eigenfunction`] turns an arbitrary integer function on a
//! graph into a balanced one on a larger graph.
//!
//! Summing `f(p)·e(p)` over all vertices counts every edge twice:
//!
//! `Σ_p f(p)·e(p) = 2·Σ_{edges qr} f(q)·f(r)`
//!
//! so a block always has `n·m` even. [`realize_pair`] covers exactly those
//! pairs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{excess, excesses, is_balanced};
use crate::function::VertexFunction;
use crate::generators::{chain, cycle, petal};
use crate::graph::Graph;
use crate::operations::join_graphs;

/// A graph whose integer function has zero excess off `p0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub graph: Graph,
    pub p0: usize,
    pub f: VertexFunction,
    /// `(f(p0), e(p0))`.
    pub pair: (i64, i64),
}

/// The side-car JSON stored next to a block's graph and function files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockMeta {
    pub p0: usize,
    pub n: i64,
    pub m: i64,
}

impl Block {
    pub fn meta(&self) -> BlockMeta {
        BlockMeta {
            p0: self.p0,
            n: self.pair.0,
            m: self.pair.1,
        }
    }

    /// Reassembles a block from its parts, recomputing the pair.
    ///
    /// Fails with [`Error::Precondition`] when the parts are not a valid
    /// block.
    pub fn from_parts(graph: Graph, p0: usize, f: VertexFunction) -> Result<Block> {
        Error::check_vertex(p0, graph.vertex_count())?;
        if f.len() != graph.vertex_count() {
            return Err(Error::SizeMismatch {
                expected: graph.vertex_count(),
                found: f.len(),
            });
        }
        let n = small_integer(f.get(p0)).ok_or_else(|| {
            Error::Precondition(format!("f(p0) = {} is not a small integer", f.get(p0)))
        })?;
        let m = small_integer(&excess(&graph, &f, p0)?)
            .ok_or_else(|| Error::Precondition("excess at p0 is not a small integer".into()))?;
        let block = Block {
            graph,
            p0,
            f,
            pair: (n, m),
        };
        if verify_block(&block) {
            Ok(block)
        } else {
            Err(Error::Precondition(
                "function is not integral or has excess away from p0".into(),
            ))
        }
    }
}

fn small_integer(x: &BigRational) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

fn rational(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn checked(block: Block, what: &str) -> Result<Block> {
    if verify_block(&block) {
        Ok(block)
    } else {
        Err(Error::VerificationFailed(format!(
            "{what}: block with pair {:?} does not verify",
            block.pair
        )))
    }
}

/// Exact check of every block invariant.
pub fn verify_block(b: &Block) -> bool {
    let n = b.graph.vertex_count();
    if b.p0 >= n || b.f.len() != n || !b.f.is_integral() {
        return false;
    }
    let Ok(e) = excesses(&b.graph, &b.f) else {
        return false;
    };
    let off_p0_zero = e.iter().enumerate().all(|(p, x)| p == b.p0 || x.is_zero());
    off_p0_zero
        && *b.f.get(b.p0) == rational(b.pair.0)
        && e[b.p0] == rational(b.pair.1)
        && (b.pair.0 * b.pair.1).is_even()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// Triangles sharing `p0`; `f = 1` at `p0` and `-1` elsewhere.
    Triangle,
    /// Pentagons sharing `p0`, each carrying `(-1, -1, 1, 1, 1)` around the
    /// cycle with `p0` at the fourth position.
    Pentagon,
}

/// `count` triangles give `(1, -2·count)`, `count` pentagons `(1, 2·count)`.
pub fn basic_block(kind: BlockKind, count: usize) -> Result<Block> {
    if count == 0 {
        return Err(Error::InvalidParameter(
            "a basic block needs at least one triangle or pentagon".into(),
        ));
    }
    let l = count as i64;
    let block = match kind {
        BlockKind::Triangle => {
            let graph = petal(count)?;
            let mut values = vec![-1; graph.vertex_count()];
            values[0] = 1;
            Block {
                graph,
                p0: 0,
                f: VertexFunction::from_integers(&values),
                pair: (1, -2 * l),
            }
        }
        BlockKind::Pentagon => {
            let one = Block {
                graph: cycle(5)?,
                p0: 3,
                f: VertexFunction::from_integers(&[-1, -1, 1, 1, 1]),
                pair: (1, 2),
            };
            return join_blocks(&vec![one; count]);
        }
    };
    checked(block, "basic block")
}

/// Hangs a pending vertex with value `-m` on `p0` and makes it the new
/// `p0`: `(n, m)` becomes `(-m, n)`.
pub fn rotate_block(b: &Block) -> Result<Block> {
    let (n, m) = b.pair;
    let graph = b.graph.add_pending_vertex(b.p0)?;
    let mut f = b.f.clone();
    f.push(rational(-m));
    let block = Block {
        p0: graph.vertex_count() - 1,
        graph,
        f,
        pair: (-m, n),
    };
    checked(block, "rotation")
}

/// `(n, m)` becomes `(-n, -m)`.
pub fn negate_block(b: &Block) -> Result<Block> {
    let block = Block {
        graph: b.graph.clone(),
        p0: b.p0,
        f: b.f.negated(),
        pair: (-b.pair.0, -b.pair.1),
    };
    checked(block, "negation")
}

/// Glues blocks with a common value `n` at their `p0`s into one vertex; the
/// excesses add up. The result's `p0` is the first block's.
pub fn join_blocks(blocks: &[Block]) -> Result<Block> {
    let (first, rest) = blocks
        .split_first()
        .ok_or_else(|| Error::InvalidParameter("no blocks to join".into()))?;
    let n = first.pair.0;
    if let Some(b) = rest.iter().find(|b| b.pair.0 != n) {
        return Err(Error::Precondition(format!(
            "blocks disagree at p0: {n} vs {}",
            b.pair.0
        )));
    }
    let mut acc = first.clone();
    for b in rest {
        let joined = join_graphs(&acc.graph, acc.p0, &b.graph, b.p0)?;
        let mut f = acc.f.clone();
        for (v, value) in b.f.values().iter().enumerate() {
            if v != b.p0 {
                f.push(value.clone());
            }
        }
        debug_assert_eq!(f.len(), joined.graph.vertex_count());
        acc = Block {
            graph: joined.graph,
            p0: acc.p0,
            f,
            pair: (n, acc.pair.1 + b.pair.1),
        };
    }
    checked(acc, "join")
}

fn repeat_join(unit: Block, copies: usize) -> Result<Block> {
    join_blocks(&vec![unit; copies])
}

/// A block with pair `(n, m)`, for every `n·m` even.
///
/// The construction is a fixed composition of triangles, pentagons,
/// rotations, negations and joins, so equal inputs give identical blocks.
pub fn realize_pair(n: i64, m: i64) -> Result<Block> {
    if n.is_odd() && m.is_odd() {
        return Err(Error::ParityObstruction { n, m });
    }
    match (n, m) {
        (0, 0) => checked(
            Block {
                graph: chain(3)?,
                p0: 1,
                f: VertexFunction::from_integers(&[1, 0, -1]),
                pair: (0, 0),
            },
            "zero pair",
        ),
        (1, m) if m < 0 => basic_block(BlockKind::Triangle, (-m / 2) as usize),
        (1, m) if m > 0 => basic_block(BlockKind::Pentagon, (m / 2) as usize),
        (-1, m) if m != 0 => negate_block(&realize_pair(1, -m)?),
        (2, k) => {
            let plus = || rotate_block(&basic_block(BlockKind::Triangle, 1)?);
            let minus = || negate_block(&rotate_block(&basic_block(BlockKind::Pentagon, 1)?)?);
            match k {
                0 => join_blocks(&[plus()?, minus()?]),
                k if k > 0 => repeat_join(plus()?, k as usize),
                k => repeat_join(minus()?, k.unsigned_abs() as usize),
            }
        }
        (a, 2) => rotate_block(&realize_pair(2, -a)?),
        (a, -2) => negate_block(&rotate_block(&realize_pair(2, a)?)?),
        (a, 0) => join_blocks(&[realize_pair(a, 2)?, realize_pair(a, -2)?]),
        (a, m) if m.is_even() => {
            let unit = realize_pair(a, 2 * m.signum())?;
            repeat_join(unit, (m.unsigned_abs() / 2) as usize)
        }
        // n even, m odd
        (n, m) => rotate_block(&realize_pair(m, -n)?),
    }
}

/// Where [`embed_with_eigenfunction`] attached a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Attachment {
    pub anchor: usize,
    pub n: i64,
    pub m: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub graph: Graph,
    pub function: VertexFunction,
    /// The extra vertex adjacent to every vertex whose `f(p)·e(p)` is odd.
    pub gadget: Option<usize>,
    pub attachments: Vec<Attachment>,
}

/// A graph containing `sigma` (same ids, same edges among them) with a
/// balanced function that agrees with `f` on `sigma`.
///
/// Vertices where `f(p)·e(p)` is odd come in an even number; when there are
/// any, one extra vertex with value 1 is joined to all of them, which makes
/// every product even. Then each vertex with nonzero excess, and each vertex
/// isolated in `sigma`, receives a block that cancels its excess.
pub fn embed_with_eigenfunction(sigma: &Graph, f: &VertexFunction) -> Result<Embedding> {
    let n = sigma.vertex_count();
    if f.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: f.len(),
        });
    }
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let mut values = f.to_i64().ok_or_else(|| {
        Error::Precondition("the prescribed function must be integer-valued".into())
    })?;
    let mut excess: Vec<i64> = (0..n)
        .map(|p| sigma.neighbors(p).iter().map(|&q| values[q]).sum())
        .collect();

    let odd: Vec<usize> = (0..n)
        .filter(|&p| (values[p] * excess[p]).is_odd())
        .collect();
    let mut graph = sigma.clone();
    let mut gadget = None;
    if !odd.is_empty() {
        let w = n;
        let mut edges: Vec<(usize, usize)> = sigma.edges().collect();
        edges.extend(odd.iter().map(|&p| (p, w)));
        graph = Graph::from_edges(n + 1, edges)?;
        values.push(1);
        excess.push(odd.iter().map(|&p| values[p]).sum());
        for &p in &odd {
            excess[p] += 1;
        }
        gadget = Some(w);
    }

    let mut function = VertexFunction::from_integers(&values);
    let mut attachments = Vec::new();
    for p in 0..values.len() {
        if excess[p] == 0 && !graph.neighbors(p).is_empty() {
            continue;
        }
        let block = realize_pair(values[p], -excess[p]).map_err(|e| match e {
            Error::ParityObstruction { n, m } => Error::VerificationFailed(format!(
                "embedding needed the odd pair ({n}, {m}) at vertex {p}"
            )),
            other => other,
        })?;
        let joined = join_graphs(&graph, p, &block.graph, block.p0)?;
        for (v, value) in block.f.values().iter().enumerate() {
            if v != block.p0 {
                function.push(value.clone());
            }
        }
        graph = joined.graph;
        attachments.push(Attachment {
            anchor: p,
            n: block.pair.0,
            m: block.pair.1,
        });
    }

    if !is_balanced(&graph, &function)? {
        return Err(Error::VerificationFailed(
            "embedded function is not balanced".into(),
        ));
    }
    Ok(Embedding {
        graph,
        function,
        gadget,
        attachments,
    })
}
