use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{
    ensure_balanced, ensure_eigenpair, AddedVertex, Constructed, IdMapping, Origin, Transformed,
};
use crate::error::{Error, Result};
use crate::exact::{is_balanced, rank};
use crate::function::VertexFunction;
use crate::graph::{Graph, Motif};
use crate::spectral::residual;

/// Adds a copy `q_α` of every motif vertex `p_α`.
///
/// `q_α ~ q_β` iff `p_α ~ p_β`, and `q_α` is joined to every neighbor of
/// `p_α` outside the motif. Copies get ids `n, n+1, ...` in motif order.
pub fn double_motif(motif: &Motif<'_>) -> Transformed {
    let g = motif.host();
    let n = g.vertex_count();
    let copy_of = |v: usize| motif.position(v).map(|a| n + a);

    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for (a, &p) in motif.vertices().iter().enumerate() {
        for &w in g.neighbors(p) {
            match copy_of(w) {
                Some(cw) => {
                    if cw > n + a {
                        edges.push((n + a, cw));
                    }
                }
                None => edges.push((n + a, w)),
            }
        }
    }
    let graph = Graph::from_edges(n + motif.len(), edges).expect("ids are in range and distinct");
    let mut mapping = IdMapping::identity(n);
    mapping.added = motif
        .vertices()
        .iter()
        .enumerate()
        .map(|(a, &p)| AddedVertex {
            id: n + a,
            origin: Origin::Copy { of: p },
        })
        .collect();
    Transformed { graph, mapping }
}

fn antisymmetric_extension(motif: &Motif<'_>, values: &VertexFunction) -> VertexFunction {
    let n = motif.host().vertex_count();
    let mut f = VertexFunction::zeros(n + motif.len());
    for (a, &p) in motif.vertices().iter().enumerate() {
        f.set(p, values.get(a).clone());
        f.set(n + a, -values.get(a));
    }
    f
}

fn check_motif_function(motif: &Motif<'_>, f_sigma: &VertexFunction) -> Result<()> {
    if f_sigma.len() != motif.len() {
        return Err(Error::SizeMismatch {
            expected: motif.len(),
            found: f_sigma.len(),
        });
    }
    if f_sigma.is_zero() {
        return Err(Error::Precondition("the motif function is zero".into()));
    }
    Ok(())
}

/// Doubles `motif` and returns the localized eigenvalue-1 eigenfunction:
/// `f_sigma` on the motif, `-f_sigma` on its copy, 0 elsewhere.
///
/// `f_sigma` is indexed by motif position and must be balanced on the
/// motif taken as a standalone graph. A single vertex is balanced for any
/// value, so every vertex can be doubled this way.
pub fn localized_eigenfunction_for_doubling(
    motif: &Motif<'_>,
    f_sigma: &VertexFunction,
) -> Result<Constructed> {
    check_motif_function(motif, f_sigma)?;
    if !is_balanced(&motif.standalone(), f_sigma)? {
        return Err(Error::Precondition(
            "the motif function is not balanced on the motif itself".into(),
        ));
    }
    let Transformed { graph, mapping } = double_motif(motif);
    let function = antisymmetric_extension(motif, f_sigma);
    ensure_balanced(&graph, &function, "motif doubling")?;
    Ok(Constructed {
        graph,
        function,
        mapping,
    })
}

/// Doubles vertex `v`: the copy (id `n`) shares all of `v`'s neighbors.
/// The function is `+1` at `v`, `-1` at the copy.
pub fn double_vertex(g: &Graph, v: usize) -> Result<Constructed> {
    Error::check_vertex(v, g.vertex_count())?;
    let motif = Motif::new(g, vec![v])?;
    localized_eigenfunction_for_doubling(&motif, &VertexFunction::from_integers(&[1]))
}

/// Doubling for an arbitrary eigenvalue.
///
/// Requires `Σ_{j∈Σ, j~i} f(j) = nᵢ·(1-λ)·f(i)` for every motif vertex `i`,
/// where `nᵢ` is the degree of `i` in the host. Doubling keeps those degrees,
/// so `f` on the motif and `-f` on the copy is a `λ`-eigenfunction.
pub fn double_motif_general(
    motif: &Motif<'_>,
    f: &VertexFunction,
    lambda: &BigRational,
) -> Result<Constructed> {
    check_motif_function(motif, f)?;
    let g = motif.host();
    let shift = BigRational::one() - lambda;
    for (a, &p) in motif.vertices().iter().enumerate() {
        let inside: BigRational = g
            .neighbors(p)
            .iter()
            .filter_map(|&w| motif.position(w))
            .fold(BigRational::zero(), |acc, b| acc + f.get(b));
        let degree = BigRational::from_integer(g.neighbors(p).len().into());
        if inside != degree * &shift * f.get(a) {
            return Err(Error::Precondition(format!(
                "the motif equation fails at vertex {p} for eigenvalue {lambda}"
            )));
        }
    }
    let Transformed { graph, mapping } = double_motif(motif);
    let function = antisymmetric_extension(motif, f);
    ensure_eigenpair(&graph, &function, lambda, "general motif doubling")?;
    Ok(Constructed {
        graph,
        function,
        mapping,
    })
}

/// One of the two eigenpairs produced by doubling an edge.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeMode {
    /// `-1` for `1 - 1/√(n₁n₂)`, `+1` for `1 + 1/√(n₁n₂)`.
    pub sign: i8,
    pub lambda: f64,
    /// Present when `n₁n₂` is a perfect square.
    pub exact_lambda: Option<BigRational>,
    /// Eigenfunction on the doubled graph.
    pub function: Vec<f64>,
    /// Present, and exactly verified, when `n₁n₂` is a perfect square.
    pub exact_function: Option<VertexFunction>,
    /// `‖Δu - λu‖∞ / ‖u‖∞` of `function`.
    pub residual: f64,
}

impl EdgeMode {
    /// `1 ∓ 1/√(n₁n₂)` written out.
    pub fn symbolic(&self, n1: usize, n2: usize) -> String {
        let op = if self.sign < 0 { '-' } else { '+' };
        format!("1 {op} 1/sqrt({})", n1 * n2)
    }
}

/// Result of [`double_edge`].
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeDoubling {
    pub graph: Graph,
    pub mapping: IdMapping,
    /// Host degrees of the two endpoints.
    pub degrees: (usize, usize),
    /// Modes for `1 - 1/√(n₁n₂)` and `1 + 1/√(n₁n₂)`, in that order.
    pub modes: [EdgeMode; 2],
}

/// Residual bound for the float path of [`double_edge`].
pub const EDGE_RESIDUAL_TOLERANCE: f64 = 1e-9;

/// Doubles the edge `p1 p2`.
///
/// On the edge the eigenvalue equation reads `f(p₂) = n₁(1-λ)f(p₁)` and
/// `f(p₁) = n₂(1-λ)f(p₂)`, so `λ = 1 ∓ 1/√(n₁n₂)` with
/// `f(p₁) = 1, f(p₂) = ±√(n₁/n₂)`. When `n₁n₂` is a perfect square both
/// modes are built and verified exactly; otherwise they are built in
/// floating point and must have residual below [`EDGE_RESIDUAL_TOLERANCE`].
pub fn double_edge(g: &Graph, p1: usize, p2: usize) -> Result<EdgeDoubling> {
    Error::check_vertex(p1, g.vertex_count())?;
    Error::check_vertex(p2, g.vertex_count())?;
    if !g.has_edge(p1, p2) {
        return Err(Error::NotAdjacent(p1, p2));
    }
    let motif = Motif::new(g, vec![p1, p2])?;
    let (n1, n2) = (g.neighbors(p1).len(), g.neighbors(p2).len());
    let product = n1 * n2;
    let root = product.sqrt();
    let perfect = root * root == product;

    let Transformed { graph, mapping } = double_motif(&motif);
    let mut modes = Vec::with_capacity(2);
    for sign in [-1i8, 1] {
        let (exact_lambda, exact_function, values) = if perfect {
            // 1 - λ = -sign/root, f(p2) = n1·(1 - λ)
            let one_minus = BigRational::new((-sign as i64).into(), (root as i64).into());
            let lambda = BigRational::one() - &one_minus;
            let f = VertexFunction::new(vec![
                BigRational::one(),
                BigRational::from_integer((n1 as i64).into()) * &one_minus,
            ]);
            let built = double_motif_general(&motif, &f, &lambda)?;
            let values = built.function.to_f64();
            (Some(lambda), Some(built.function), values)
        } else {
            let ratio = -(sign as f64) * (n1 as f64 / n2 as f64).sqrt();
            let f = VertexFunction::new(vec![BigRational::one(), BigRational::zero()]);
            let mut values = antisymmetric_extension(&motif, &f).to_f64();
            let n = g.vertex_count();
            values[p2] = ratio;
            values[n + 1] = -ratio;
            (None, None, values)
        };
        let lambda = match &exact_lambda {
            Some(l) => l.to_f64().unwrap(),
            None => 1.0 + sign as f64 / (product as f64).sqrt(),
        };
        let r = residual(&graph, &values, lambda)?;
        if r >= EDGE_RESIDUAL_TOLERANCE {
            return Err(Error::VerificationFailed(format!(
                "edge doubling: residual {r:e} for eigenvalue {lambda}"
            )));
        }
        modes.push(EdgeMode {
            sign,
            lambda,
            exact_lambda,
            function: values,
            exact_function,
            residual: r,
        });
    }
    let modes: [EdgeMode; 2] = modes.try_into().expect("two modes");
    Ok(EdgeDoubling {
        graph,
        mapping,
        degrees: (n1, n2),
        modes,
    })
}

/// Two copies of `g` with cross edges `pᵢ ~ q_j` for every edge `pᵢ ~ p_j`.
///
/// Copy `q_i` gets id `n + i`. Every degree doubles, so each eigenfunction
/// of `g` extended identically to both copies survives, and eigenvalue 1
/// gains multiplicity `n`.
pub fn double_graph(g: &Graph) -> Result<Transformed> {
    let n = g.vertex_count();
    let edges = g
        .edges()
        .flat_map(|(i, j)| [(i, j), (n + i, n + j), (i, n + j), (j, n + i)]);
    let graph = Graph::from_edges(2 * n, edges.collect::<Vec<_>>())?;
    for i in 0..n {
        let d = g.neighbors(i).len();
        if graph.neighbors(i).len() != 2 * d || graph.neighbors(n + i).len() != 2 * d {
            return Err(Error::VerificationFailed(format!(
                "graph doubling: degree of vertex {i} did not double"
            )));
        }
    }
    let mut mapping = IdMapping::identity(n);
    mapping.added = (0..n)
        .map(|i| AddedVertex {
            id: n + i,
            origin: Origin::Copy { of: i },
        })
        .collect();
    Ok(Transformed { graph, mapping })
}

/// The `n` balanced functions on [`double_graph`]`(g)` that are `+1` at
/// `pᵢ`, `-1` at `qᵢ` and 0 elsewhere. Each is checked, and so is their
/// linear independence.
pub fn doubled_graph_kernel_basis(g: &Graph) -> Result<(Transformed, Vec<VertexFunction>)> {
    let doubled = double_graph(g)?;
    let n = g.vertex_count();
    let mut basis = Vec::with_capacity(n);
    for i in 0..n {
        let mut f = VertexFunction::zeros(2 * n);
        f.set(i, BigRational::one());
        f.set(n + i, -BigRational::one());
        ensure_balanced(&doubled.graph, &f, "graph doubling kernel")?;
        basis.push(f);
    }
    if rank(&basis)? != n {
        return Err(Error::VerificationFailed(
            "graph doubling kernel: functions are linearly dependent".into(),
        ));
    }
    Ok((doubled, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{eigenvalue_one_multiplicity, verify_eigenpair_exact};
    use crate::generators::{chain, complete, cycle};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn vertex_doubling_of_triangle_is_diamond() {
        let tri = complete(3).unwrap();
        let motif = Motif::new(&tri, vec![2]).unwrap();
        let d = double_motif(&motif);
        let diamond = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        assert_eq!(d.graph, diamond);
        assert_eq!(
            d.mapping.added,
            vec![AddedVertex {
                id: 3,
                origin: Origin::Copy { of: 2 }
            }]
        );

        let c = double_vertex(&tri, 0).unwrap();
        assert_eq!(eigenvalue_one_multiplicity(&tri), 0);
        assert_eq!(eigenvalue_one_multiplicity(&c.graph), 1);
        assert_eq!(c.function, VertexFunction::from_integers(&[1, 0, 0, -1]));
    }

    #[test]
    fn edge_motif_in_chain() {
        let p3 = chain(3).unwrap();
        let motif = Motif::new(&p3, vec![0, 1]).unwrap();
        let d = double_motif(&motif);
        assert_eq!(d.graph.vertex_count(), 5);
        assert!(d.graph.has_edge(3, 4));
        assert!(d.graph.has_edge(4, 2));
        assert!(!d.graph.has_edge(3, 1));
        assert!(!d.graph.has_edge(4, 0));
        assert_eq!(d.graph.edge_count(), 4);
    }

    #[test]
    fn k2_vertex_doubling_is_a_path() {
        let k2 = complete(2).unwrap();
        let c = double_vertex(&k2, 0).unwrap();
        assert_eq!(c.graph, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn chain_and_cycle_vertex_doubling() {
        let c = double_vertex(&chain(3).unwrap(), 1).unwrap();
        assert_eq!(c.graph, cycle(4).unwrap());
        assert!(eigenvalue_one_multiplicity(&c.graph) >= 1);

        let c = double_vertex(&cycle(4).unwrap(), 0).unwrap();
        assert_eq!(c.function, VertexFunction::from_integers(&[1, 0, 0, 0, -1]));
        assert!(double_vertex(&cycle(4).unwrap(), 4).is_err());
    }

    #[test]
    fn localized_function_on_embedded_chain() {
        // chain(3) as a motif inside chain(5)
        let host = chain(5).unwrap();
        let motif = Motif::new(&host, vec![1, 2, 3]).unwrap();
        let c = localized_eigenfunction_for_doubling(
            &motif,
            &VertexFunction::from_integers(&[1, 0, -1]),
        )
        .unwrap();
        assert_eq!(
            c.function,
            VertexFunction::from_integers(&[0, 1, 0, -1, 0, -1, 0, 1])
        );
        assert_eq!(is_balanced(&c.graph, &c.function), Ok(true));
    }

    #[test]
    fn unbalanced_motif_function_is_rejected() {
        let tri = complete(3).unwrap();
        let motif = Motif::new(&tri, vec![0, 1, 2]).unwrap();
        let err = localized_eigenfunction_for_doubling(
            &motif,
            &VertexFunction::from_integers(&[0, 1, -1]),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
        let err =
            localized_eigenfunction_for_doubling(&motif, &VertexFunction::zeros(3)).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn general_doubling_on_cycle_edge() {
        let c4 = cycle(4).unwrap();
        let motif = Motif::new(&c4, vec![0, 1]).unwrap();
        let low = double_motif_general(&motif, &VertexFunction::from_integers(&[1, 1]), &q(1, 2))
            .unwrap();
        assert_eq!(
            verify_eigenpair_exact(&low.graph, &low.function, &q(1, 2)),
            Ok(true)
        );
        let high = double_motif_general(&motif, &VertexFunction::from_integers(&[1, -1]), &q(3, 2))
            .unwrap();
        assert_eq!(
            verify_eigenpair_exact(&high.graph, &high.function, &q(3, 2)),
            Ok(true)
        );
        assert!(
            double_motif_general(&motif, &VertexFunction::from_integers(&[1, 1]), &q(3, 2))
                .is_err()
        );

        let single = Motif::new(&c4, vec![2]).unwrap();
        let via_general =
            double_motif_general(&single, &VertexFunction::from_integers(&[1]), &q(1, 1)).unwrap();
        assert_eq!(via_general, double_vertex(&c4, 2).unwrap());
    }

    #[test]
    fn edge_doubling_square_degrees() {
        let d = double_edge(&cycle(4).unwrap(), 0, 1).unwrap();
        assert_eq!(d.modes[0].exact_lambda, Some(q(1, 2)));
        assert_eq!(d.modes[1].exact_lambda, Some(q(3, 2)));
        assert_eq!(d.modes[0].residual, 0.0);

        let d = double_edge(&complete(2).unwrap(), 0, 1).unwrap();
        assert_eq!(d.modes[0].exact_lambda, Some(q(0, 1)));
        assert_eq!(d.modes[1].exact_lambda, Some(q(2, 1)));

        // hub of degree 8 on a vertex of degree 2
        let mut edges = vec![(0, 1), (1, 2), (2, 0)];
        edges.extend((3..9).map(|v| (0, v)));
        let g = Graph::from_edges(9, edges).unwrap();
        assert_eq!((g.neighbors(0).len(), g.neighbors(1).len()), (8, 2));
        let d = double_edge(&g, 0, 1).unwrap();
        assert_eq!(d.modes[0].exact_lambda, Some(q(3, 4)));
        assert_eq!(d.modes[1].exact_lambda, Some(q(5, 4)));
        let f = d.modes[0].exact_function.as_ref().unwrap();
        assert_eq!(f.get(1), &q(2, 1)); // n1·(1-λ) = 8/4
    }

    #[test]
    fn edge_doubling_irrational() {
        let g = chain(3).unwrap(); // degrees 1 and 2
        let d = double_edge(&g, 0, 1).unwrap();
        assert!(d
            .modes
            .iter()
            .all(|m| m.exact_lambda.is_none() && m.residual < 1e-9));
        assert!((d.modes[0].lambda - (1.0 - 0.5f64.sqrt())).abs() < 1e-15);
        assert_eq!(d.modes[0].symbolic(1, 2), "1 - 1/sqrt(2)");
        assert_eq!(double_edge(&g, 0, 2).unwrap_err(), Error::NotAdjacent(0, 2));
    }

    #[test]
    fn graph_doubling() {
        let k2 = complete(2).unwrap();
        let d = double_graph(&k2).unwrap();
        // 0-1, 2-3, 0-3, 1-2 is the 4-cycle 0-1-2-3
        assert_eq!(d.graph, cycle(4).unwrap());
        let (_, basis) = doubled_graph_kernel_basis(&k2).unwrap();
        assert_eq!(
            basis,
            vec![
                VertexFunction::from_integers(&[1, 0, -1, 0]),
                VertexFunction::from_integers(&[0, 1, 0, -1]),
            ]
        );
        let tri = double_graph(&complete(3).unwrap()).unwrap();
        assert_eq!(tri.graph.degrees(), vec![4; 6]);
        let (_, basis) = doubled_graph_kernel_basis(&complete(3).unwrap()).unwrap();
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn single_vertex_graph_doubling_is_degenerate() {
        let (d, basis) = doubled_graph_kernel_basis(&Graph::empty(1)).unwrap();
        assert_eq!(d.graph.isolated_vertex(), Some(0));
        assert_eq!(basis.len(), 1);
        assert!(crate::spectral::full_spectrum(&d.graph, 1e-8).is_err());
    }
}
