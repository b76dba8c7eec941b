//! Exact eigenvalue-1 machinery.
//!
//! A function `u` is *balanced* when `Σ_{j~i} u(j) = 0` at every vertex `i`.
//! Balanced functions are exactly the eigenfunctions of the normalized
//! Laplacian for eigenvalue 1 and exactly the kernel of the adjacency
//! matrix `A`, so the multiplicity `m₁` of eigenvalue 1 is `dim ker A`.
//! Everything here is computed over arbitrary-precision rationals: `m₁`
//! is an integer invariant and a floating-point rank decision is the
//! wrong tool for it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::function::VertexFunction;
use crate::graph::Graph;

/// A basis of `ker A`.
///
/// Basis vectors are integral with content 1 and a positive first nonzero
/// entry; vector `k` corresponds to the `k`-th free column (ascending vertex
/// id) of the reduced row echelon form of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelBasis {
    pub basis: Vec<VertexFunction>,
}

impl KernelBasis {
    pub fn multiplicity(&self) -> usize {
        self.basis.len()
    }
}

/// Computes a normalized basis of the adjacency kernel.
pub fn adjacency_kernel(g: &Graph) -> KernelBasis {
    let n = g.vertex_count();
    let rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row = vec![BigInt::zero(); n];
            for &j in g.neighbors(i) {
                row[j] = BigInt::one();
            }
            row
        })
        .collect();
    let (rows, pivots) = reduce(rows, n);
    KernelBasis {
        basis: nullspace_from_reduced(&rows, &pivots, n),
    }
}

/// Multiplicity of eigenvalue 1 of the normalized Laplacian, `dim ker A`.
pub fn eigenvalue_one_multiplicity(g: &Graph) -> usize {
    adjacency_kernel(g).multiplicity()
}

/// Exact rank of a list of functions of equal length.
pub fn rank(functions: &[VertexFunction]) -> Result<usize> {
    let Some(first) = functions.first() else {
        return Ok(0);
    };
    let width = first.len();
    let mut rows = Vec::with_capacity(functions.len());
    for f in functions {
        if f.len() != width {
            return Err(Error::SizeMismatch {
                expected: width,
                found: f.len(),
            });
        }
        rows.push(clear_denominators(f.values()));
    }
    Ok(reduce(rows, width).1.len())
}

fn check_size(g: &Graph, f: &VertexFunction) -> Result<()> {
    if f.len() != g.vertex_count() {
        return Err(Error::SizeMismatch {
            expected: g.vertex_count(),
            found: f.len(),
        });
    }
    Ok(())
}

fn neighbor_sum(g: &Graph, f: &VertexFunction, p: usize) -> BigRational {
    g.neighbors(p)
        .iter()
        .fold(BigRational::zero(), |acc, &q| acc + f.get(q))
}

/// The excess `e(p) = Σ_{q~p} f(q)`.
pub fn excess(g: &Graph, f: &VertexFunction, p: usize) -> Result<BigRational> {
    check_size(g, f)?;
    Error::check_vertex(p, g.vertex_count())?;
    Ok(neighbor_sum(g, f, p))
}

/// Excess at every vertex, i.e. `A·f`.
pub fn excesses(g: &Graph, f: &VertexFunction) -> Result<Vec<BigRational>> {
    check_size(g, f)?;
    Ok((0..g.vertex_count())
        .map(|p| neighbor_sum(g, f, p))
        .collect())
}

/// True iff the excess vanishes everywhere. Empty neighbor sums count as 0.
pub fn is_balanced(g: &Graph, f: &VertexFunction) -> Result<bool> {
    check_size(g, f)?;
    Ok((0..g.vertex_count()).all(|p| neighbor_sum(g, f, p).is_zero()))
}

/// Exact check of `(1/nᵢ)·Σ_{j~i} f(j) = (1-λ)·f(i)` at every vertex.
///
/// At a degree-0 vertex the equation is read as `(1-λ)·f(i) = 0`.
pub fn verify_eigenpair_exact(g: &Graph, f: &VertexFunction, lambda: &BigRational) -> Result<bool> {
    check_size(g, f)?;
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let shift = BigRational::one() - lambda;
    Ok((0..g.vertex_count()).all(|i| {
        let degree = g.neighbors(i).len();
        let rhs = &shift * f.get(i);
        if degree == 0 {
            rhs.is_zero()
        } else {
            neighbor_sum(g, f, i) == rhs * BigRational::from_integer(degree.into())
        }
    }))
}

/// Scales a rational row to an integral row with the same direction.
fn clear_denominators(values: &[BigRational]) -> Vec<BigInt> {
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect()
}

fn content(row: &[BigInt]) -> BigInt {
    row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

fn divide_content(row: &mut [BigInt]) {
    let g = content(row);
    if !g.is_zero() && !g.is_one() {
        for v in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// Fraction-free Gauss-Jordan elimination over the integers.
///
/// Returns the nonzero reduced rows and their pivot columns. Each pivot
/// column is zero in every other row; rows are kept primitive (content 1),
/// which bounds intermediate growth.
fn reduce(mut rows: Vec<Vec<BigInt>>, width: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        divide_content(&mut rows[r]);
        let (before, rest) = rows.split_at_mut(r);
        let (pivot_row, after) = rest.split_first_mut().unwrap();
        let pivot = pivot_row[c].clone();
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let g = pivot.gcd(&row[c]);
            let keep = &pivot / &g;
            let take = &row[c] / &g;
            for (x, p) in row.iter_mut().zip(pivot_row.iter()) {
                *x = &*x * &keep - p * &take;
            }
            divide_content(row);
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

fn nullspace_from_reduced(
    rows: &[Vec<BigInt>],
    pivots: &[usize],
    width: usize,
) -> Vec<VertexFunction> {
    let mut is_pivot = vec![false; width];
    for &c in pivots {
        is_pivot[c] = true;
    }
    (0..width)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![BigRational::zero(); width];
            x[free] = BigRational::one();
            for (row, &pc) in rows.iter().zip(pivots) {
                x[pc] = -BigRational::new(row[free].clone(), row[pc].clone());
            }
            let mut ints = clear_denominators(&x);
            divide_content(&mut ints);
            if ints
                .iter()
                .find(|v| !v.is_zero())
                .is_some_and(|v| v.is_negative())
            {
                for v in ints.iter_mut() {
                    *v = -&*v;
                }
            }
            VertexFunction::from_big_integers(ints)
        })
        .collect()
}
