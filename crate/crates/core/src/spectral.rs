//! Floating-point spectrum of the normalized Laplacian
//! `Δv(i) = v(i) - (1/nᵢ)·Σ_{j~i} v(j)`.
//!
//! `Δ` is self-adjoint for the degree-weighted product `(u, v) = Σ nᵢ u(i) v(i)`.
//! Conjugating by `D^{1/2}` gives the symmetric matrix
//! `M = I - D^{-1/2} A D^{-1/2}` with the same spectrum, which is what the
//! Jacobi solver diagonalizes. An eigenvector `w` of `M` maps back to the
//! eigenfunction `u(i) = w(i)/√nᵢ` of `Δ`.
//!
//! All eigenvalues lie in `[0, 2]`. On a connected graph `0` is simple, and
//! `2` is an eigenvalue iff the graph is bipartite, in which case the
//! spectrum is symmetric about 1.

use log::warn;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::jacobi::{eigen_symmetric, SymmetricMatrix};

/// Default absolute gap below which neighboring eigenvalues are grouped.
pub const DEFAULT_GROUPING_TOLERANCE: f64 = 1e-8;

/// Eigenvalues within this distance outside `[0, 2]` are clamped.
pub const CLAMP_TOLERANCE: f64 = 1e-9;

fn check_no_isolated(g: &Graph) -> Result<()> {
    match g.isolated_vertex() {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// `Δv`.
pub fn laplacian_apply(g: &Graph, v: &[f64]) -> Result<Vec<f64>> {
    if v.len() != g.vertex_count() {
        return Err(Error::SizeMismatch {
            expected: g.vertex_count(),
            found: v.len(),
        });
    }
    check_no_isolated(g)?;
    Ok((0..g.vertex_count())
        .map(|i| {
            let nbrs = g.neighbors(i);
            let mean = nbrs.iter().map(|&j| v[j]).sum::<f64>() / nbrs.len() as f64;
            v[i] - mean
        })
        .collect())
}

/// `M = I - D^{-1/2} A D^{-1/2}`.
pub fn symmetrized_matrix(g: &Graph) -> Result<SymmetricMatrix> {
    check_no_isolated(g)?;
    let n = g.vertex_count();
    let degrees: Vec<f64> = g.degrees().into_iter().map(|d| d as f64).collect();
    let mut m = SymmetricMatrix::zeros(n);
    for i in 0..n {
        m.set(i, i, 1.0);
    }
    for (i, j) in g.edges() {
        m.set(i, j, -1.0 / (degrees[i] * degrees[j]).sqrt());
    }
    Ok(m)
}

/// `Σ nᵢ u(i) v(i)`.
pub fn weighted_inner_product(g: &Graph, u: &[f64], v: &[f64]) -> Result<f64> {
    let n = g.vertex_count();
    for len in [u.len(), v.len()] {
        if len != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: len,
            });
        }
    }
    Ok((0..n)
        .map(|i| g.neighbors(i).len() as f64 * u[i] * v[i])
        .sum())
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// `‖Δu - λu‖∞ / ‖u‖∞`.
pub fn residual(g: &Graph, u: &[f64], lambda: f64) -> Result<f64> {
    let scale = max_abs(u);
    if u.len() == g.vertex_count() && scale == 0.0 {
        return Err(Error::ZeroFunction);
    }
    let du = laplacian_apply(g, u)?;
    let r = du.iter().zip(u).map(|(d, x)| (d - lambda * x).abs());
    Ok(r.fold(0.0, f64::max) / scale)
}

/// The full spectrum of `Δ`, eigenvalues grouped into multiplicities.
#[derive(Debug, Clone)]
pub struct Spectrum {
    /// All `N` eigenvalues, ascending, after clamping.
    values: Vec<f64>,
    /// `vectors[k]` is a unit eigenvector of `M` for `values[k]`.
    vectors: Vec<Vec<f64>>,
    /// Group representatives (mean of the group), strictly ascending.
    eigenvalues: Vec<f64>,
    multiplicities: Vec<usize>,
    grouping_tolerance: f64,
    degrees: Vec<usize>,
}

impl Spectrum {
    /// Distinct eigenvalues after grouping.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// Every eigenvalue with repetition, ascending.
    pub fn all_values(&self) -> &[f64] {
        &self.values
    }

    pub fn grouping_tolerance(&self) -> f64 {
        self.grouping_tolerance
    }

    pub fn vertex_count(&self) -> usize {
        self.values.len()
    }

    /// Orthonormal eigenvectors of the symmetrized matrix, aligned with
    /// [`Spectrum::all_values`].
    pub fn symmetric_eigenvectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    /// Eigenfunctions of `Δ`, `u(i) = w(i)/√nᵢ`, aligned with
    /// [`Spectrum::all_values`]. They are orthonormal for the weighted
    /// product.
    pub fn eigenfunctions(&self) -> Vec<Vec<f64>> {
        let scale: Vec<f64> = self
            .degrees
            .iter()
            .map(|&d| 1.0 / (d as f64).sqrt())
            .collect();
        self.vectors
            .iter()
            .map(|w| w.iter().zip(&scale).map(|(x, s)| x * s).collect())
            .collect()
    }

    /// Index ranges into [`Spectrum::all_values`], one per group.
    pub fn groups(&self) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        self.multiplicities.iter().scan(0, |start, &m| {
            let r = *start..*start + m;
            *start += m;
            Some(r)
        })
    }

    /// Total multiplicity of the groups lying within `tol` of `lambda`.
    pub fn multiplicity_of(&self, lambda: f64, tol: f64) -> usize {
        self.eigenvalues
            .iter()
            .zip(&self.multiplicities)
            .filter(|(v, _)| (*v - lambda).abs() <= tol)
            .map(|(_, m)| m)
            .sum()
    }

    /// Bipartiteness as read from the spectrum.
    pub fn bipartite_test(&self, tol: f64) -> BipartiteReport {
        let top = self.values.last().copied().unwrap_or(0.0);
        let n = self.values.len();
        let mirror_symmetric =
            (0..n).all(|k| (self.values[k] + self.values[n - 1 - k] - 2.0).abs() <= tol);
        BipartiteReport {
            bipartite: top >= 2.0 - tol,
            mirror_symmetric,
        }
    }

    pub fn to_json(&self, with_eigenvectors: bool) -> SpectrumJson {
        SpectrumJson {
            eigenvalues: self.eigenvalues.clone(),
            multiplicities: self.multiplicities.clone(),
            tol: self.grouping_tolerance,
            eigenvectors: with_eigenvectors.then(|| self.eigenfunctions()),
        }
    }
}

/// Result of [`Spectrum::bipartite_test`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteReport {
    /// `λ_max ≥ 2 - tol`.
    pub bipartite: bool,
    /// `λ_k + λ_{N-1-k} = 2` within `tol` for every `k`.
    pub mirror_symmetric: bool,
}

/// Serialized form of a spectrum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub eigenvalues: Vec<f64>,
    pub multiplicities: Vec<usize>,
    pub tol: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eigenvectors: Option<Vec<Vec<f64>>>,
}

/// All eigenpairs of `Δ`, grouped by gaps smaller than `grouping_tol`.
pub fn full_spectrum(g: &Graph, grouping_tol: f64) -> Result<Spectrum> {
    if grouping_tol.is_nan() || grouping_tol < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "grouping tolerance must be nonnegative, got {grouping_tol}"
        )));
    }
    let m = symmetrized_matrix(g)?;
    if !g.is_connected() {
        warn!("spectrum of a disconnected graph: eigenvalue 0 has one copy per component");
    }
    let decomposition = eigen_symmetric(&m)?;

    let mut pairs: Vec<(f64, Vec<f64>)> = decomposition
        .values
        .into_iter()
        .map(clamp)
        .zip(decomposition.vectors)
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (values, vectors): (Vec<f64>, Vec<Vec<f64>>) = pairs.into_iter().unzip();

    let mut eigenvalues = Vec::new();
    let mut multiplicities = Vec::new();
    let mut start = 0;
    for k in 1..=values.len() {
        if k == values.len() || values[k] - values[k - 1] >= grouping_tol {
            let group = &values[start..k];
            eigenvalues.push(group.iter().sum::<f64>() / group.len() as f64);
            multiplicities.push(group.len());
            start = k;
        }
    }

    Ok(Spectrum {
        values,
        vectors,
        eigenvalues,
        multiplicities,
        grouping_tolerance: grouping_tol,
        degrees: g.degrees(),
    })
}

fn clamp(x: f64) -> f64 {
    if (-CLAMP_TOLERANCE..0.0).contains(&x) {
        0.0
    } else if x > 2.0 && x <= 2.0 + CLAMP_TOLERANCE {
        2.0
    } else {
        x
    }
}
