//! Random instances and independent reference computations for tests.
#![allow(dead_code)]

pub mod instances;

use lapmotif::exact::adjacency_kernel;
use lapmotif::operations::double_vertex;
use lapmotif::{Graph, VertexFunction};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for k in 1..n {
        let parent = order[rng.gen_range(0..k)];
        edges.push((parent, order[k]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random connected graph on `lo..=hi` vertices with a random density.
pub fn random_connected_in(rng: &mut impl Rng, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let p = rng.gen_range(0.0..0.5);
    random_connected(rng, n, p)
}

/// Erdős–Rényi graph; may have isolated vertices.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_integers(rng: &mut impl Rng, n: usize, bound: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()
}

/// A nonzero random integer combination of the kernel basis, if any.
pub fn random_balanced(rng: &mut impl Rng, g: &Graph) -> Option<VertexFunction> {
    let basis = adjacency_kernel(g).basis;
    if basis.is_empty() {
        return None;
    }
    loop {
        let mut acc = vec![BigInt::from(0); g.vertex_count()];
        for b in &basis {
            let c = BigInt::from(rng.gen_range(-2i64..=2));
            for (a, x) in acc.iter_mut().zip(b.values()) {
                *a += &c * x.to_integer();
            }
        }
        let f = VertexFunction::from_big_integers(acc);
        if !f.is_zero() {
            return Some(f);
        }
    }
}

/// Random connected graph with one vertex doubled, so eigenvalue 1 is
/// present, together with a random balanced function on it.
pub fn graph_with_kernel(rng: &mut impl Rng, lo: usize, hi: usize) -> (Graph, VertexFunction) {
    let g = random_connected_in(rng, lo, hi);
    let v = rng.gen_range(0..g.vertex_count());
    let doubled = double_vertex(&g, v).unwrap().graph;
    let f = random_balanced(rng, &doubled).expect("doubling creates a kernel");
    (doubled, f)
}

/// Rank of the adjacency matrix modulo the prime `p`.
pub fn adjacency_rank_mod(g: &Graph, p: u64) -> usize {
    let n = g.vertex_count();
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| g.has_edge(i, j) as u64).collect())
        .collect();
    let inv = |x: u64| {
        let (mut base, mut e, mut r) = (x % p, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                r = r * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let s = inv(a[rank][col]);
        for x in a[rank].iter_mut() {
            *x = *x * s % p;
        }
        for r in 0..n {
            if r != rank && a[r][col] != 0 {
                let factor = a[r][col];
                let pivot = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x = (*x + p - factor * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim ker A` from ranks modulo two large primes. Rank over the rationals
/// is at least the rank modulo any prime, and equals it unless the prime
/// divides every nonzero maximal minor.
pub fn kernel_dim_mod_primes(g: &Graph) -> usize {
    let r = adjacency_rank_mod(g, 1_000_000_007).max(adjacency_rank_mod(g, 998_244_353));
    g.vertex_count() - r
}

/// Eigenvalues of `I - D^{-1/2} A D^{-1/2}` from nalgebra, ascending.
pub fn reference_spectrum(g: &Graph) -> Vec<f64> {
    let n = g.vertex_count();
    let d: Vec<f64> = (0..n).map(|i| g.neighbors(i).len() as f64).collect();
    let m = nalgebra::DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            1.0
        } else if g.has_edge(i, j) {
            -1.0 / (d[i] * d[j]).sqrt()
        } else {
            0.0
        }
    });
    let mut values: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values
}

/// `Σ_p f(p)·e(p)` and `2·Σ_{edges qr} f(q)·f(r)` in plain integers.
pub fn parity_sides(g: &Graph, f: &[i64]) -> (i64, i64) {
    let lhs = (0..g.vertex_count())
        .map(|p| f[p] * g.neighbors(p).iter().map(|&q| f[q]).sum::<i64>())
        .sum();
    let rhs = 2 * g.edges().map(|(q, r)| f[q] * f[r]).sum::<i64>();
    (lhs, rhs)
}

pub fn binomial2(n: u64) -> u64 {
    n * (n.saturating_sub(1)) / 2
}

type Q = num_rational::BigRational;

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Coefficients (constant term first) of `det(xI - L)` for the random-walk
/// Laplacian `L = I - D^{-1}A`, by Faddeev–LeVerrier over the rationals.
pub fn characteristic_polynomial(g: &Graph) -> Vec<Q> {
    use num_traits::{One, Zero};
    let n = g.vertex_count();
    let l: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let d = g.neighbors(i).len() as i64;
            (0..n)
                .map(|j| {
                    if i == j {
                        Q::one()
                    } else if g.has_edge(i, j) {
                        q(-1, d)
                    } else {
                        Q::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mul = |a: &Vec<Vec<Q>>, b: &Vec<Vec<Q>>| -> Vec<Vec<Q>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(Q::zero(), |s, k| s + &a[i][k] * &b[k][j]))
                    .collect()
            })
            .collect()
    };
    let mut c = vec![Q::zero(); n + 1];
    c[n] = Q::one();
    let mut m = vec![vec![Q::zero(); n]; n];
    for k in 1..=n {
        let mut next = mul(&l, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        m = next;
        let lm = mul(&l, &m);
        let trace = (0..n).fold(Q::zero(), |s, i| s + &lm[i][i]);
        c[n - k] = -trace / Q::from_integer((k as i64).into());
    }
    c
}

/// Coefficients of `Π (x - r)` over the given rational roots.
pub fn polynomial_from_roots(roots: &[(i64, i64)]) -> Vec<Q> {
    use num_traits::{One, Zero};
    let mut p = vec![Q::one()];
    for &(a, b) in roots {
        let r = q(a, b);
        let mut next = vec![Q::zero(); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= &r * c;
        }
        p = next;
    }
    p
}

pub type Rng8 = ChaCha8Rng;
