mod common;

use common::{
    kernel_dim_mod_primes, parity_sides, random_balanced, random_connected, random_graph,
    reference_spectrum, rng,
};
use lapmotif::exact::{adjacency_kernel, eigenvalue_one_multiplicity, excesses, is_balanced, rank};
use lapmotif::io::{
    graph_from_json, graph_to_json, parse_function, parse_graph, serialize_function,
    serialize_graph,
};
use lapmotif::operations::{count_subgraph_embeddings, double_graph, double_motif};
use lapmotif::spectral::{full_spectrum, residual, weighted_inner_product};
use lapmotif::synthesis::{
    embed_with_eigenfunction, join_blocks, negate_block, realize_pair, rotate_block, verify_block,
};
use lapmotif::{Graph, Motif, VertexFunction};
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

const TOL: f64 = 1e-8;

fn connected() -> impl Strategy<Value = Graph> {
    (2usize..=14, 0.0f64..0.6, any::<u64>())
        .prop_map(|(n, p, seed)| random_connected(&mut rng(seed), n, p))
}

fn any_graph() -> impl Strategy<Value = Graph> {
    (0usize..=10, 0.0f64..0.7, any::<u64>())
        .prop_map(|(n, p, seed)| random_graph(&mut rng(seed), n, p))
}

fn graph_and_integers(bound: i64) -> impl Strategy<Value = (Graph, Vec<i64>)> {
    any_graph().prop_flat_map(move |g| {
        let n = g.vertex_count();
        (Just(g), proptest::collection::vec(-bound..=bound, n))
    })
}

/// All injective maps, checked edge by edge; a second opinion on the
/// backtracking counter.
fn brute_force_count(g: &Graph, pattern: &Graph) -> (u64, u64) {
    fn go(g: &Graph, pattern: &Graph, image: &mut Vec<usize>, counts: &mut (u64, u64)) {
        let k = image.len();
        if k == pattern.vertex_count() {
            let mut hom = true;
            let mut induced = true;
            for a in 0..k {
                for b in a + 1..k {
                    let pe = pattern.has_edge(a, b);
                    let ge = g.has_edge(image[a], image[b]);
                    hom &= !pe || ge;
                    induced &= pe == ge;
                }
            }
            counts.0 += hom as u64;
            counts.1 += induced as u64;
            return;
        }
        for x in 0..g.vertex_count() {
            if !image.contains(&x) {
                image.push(x);
                go(g, pattern, image, counts);
                image.pop();
            }
        }
    }
    let mut aut = (0, 0);
    go(pattern, pattern, &mut Vec::new(), &mut aut);
    let mut maps = (0, 0);
    go(g, pattern, &mut Vec::new(), &mut maps);
    (maps.0 / aut.0, maps.1 / aut.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn handshake(g in any_graph()) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        for (u, v) in g.edges() {
            prop_assert!(u < v && g.has_edge(v, u));
        }
    }

    #[test]
    fn function_round_trip((g, f) in graph_and_integers(50), den in 1i64..7) {
        let f = VertexFunction::new(
            f.iter()
                .map(|&x| num_rational::BigRational::new(x.into(), den.into()))
                .collect(),
        );
        let text = serialize_function(&f);
        prop_assert_eq!(parse_function(&text, g.vertex_count()).unwrap(), f);
    }

    #[test]
    fn kernel_matches_modular_rank(g in any_graph()) {
        let k = adjacency_kernel(&g);
        prop_assert_eq!(k.multiplicity(), kernel_dim_mod_primes(&g));
        prop_assert_eq!(rank(&k.basis).unwrap(), k.multiplicity());
        for b in &k.basis {
            prop_assert!(b.is_integral());
            prop_assert_eq!(is_balanced(&g, b), Ok(true));
            let first = b.values().iter().find(|x| !x.is_zero()).unwrap();
            prop_assert!(*first > num_rational::BigRational::zero());
        }
    }

    /// The multiplicity of eigenvalue 1 is the dimension of the adjacency
    /// kernel.
    #[test]
    fn float_and_exact_multiplicity_agree(g in connected()) {
        let s = full_spectrum(&g, TOL).unwrap();
        prop_assert_eq!(s.multiplicity_of(1.0, 1e-7), eigenvalue_one_multiplicity(&g));
    }

    #[test]
    fn spectrum_matches_reference(g in connected()) {
        let s = full_spectrum(&g, TOL).unwrap();
        let reference = reference_spectrum(&g);
        for (a, b) in s.all_values().iter().zip(&reference) {
            prop_assert!((a - b).abs() < 1e-9, "{} vs {}", a, b);
        }
    }

    /// Every eigenpair satisfies the eigenvalue equation and the
    /// eigenfunctions are orthonormal for the degree-weighted product.
    #[test]
    fn eigensolver_certificate(g in connected()) {
        let s = full_spectrum(&g, TOL).unwrap();
        let u = s.eigenfunctions();
        for (l, v) in s.all_values().iter().zip(&u) {
            prop_assert!(residual(&g, v, *l).unwrap() < 1e-9);
            prop_assert!((-1e-12..=2.0 + 1e-12).contains(l));
        }
        for i in 0..u.len() {
            for j in i..u.len() {
                let ip = weighted_inner_product(&g, &u[i], &u[j]).unwrap();
                let expect = if i == j { 1.0 } else { 0.0 };
                prop_assert!((ip - expect).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn bipartite_iff_two(g in connected()) {
        let r = full_spectrum(&g, TOL).unwrap().bipartite_test(1e-7);
        prop_assert_eq!(r.bipartite, g.is_bipartite());
        prop_assert_eq!(r.mirror_symmetric, g.is_bipartite());
    }

    #[test]
    fn parity_identity((g, f) in graph_and_integers(5)) {
        let (lhs, rhs) = parity_sides(&g, &f);
        prop_assert_eq!(lhs, rhs);
        let e = excesses(&g, &VertexFunction::from_integers(&f)).unwrap();
        for (p, x) in e.iter().enumerate() {
            let expect: i64 = g.neighbors(p).iter().map(|&q| f[q]).sum();
            prop_assert_eq!(x, &num_rational::BigRational::from_integer(expect.into()));
        }
        let odd = (0..g.vertex_count())
            .filter(|&p| {
                let ep: i64 = g.neighbors(p).iter().map(|&q| f[q]).sum();
                (f[p] * ep) % 2 != 0
            })
            .count();
        prop_assert_eq!(odd % 2, 0);
    }

    #[test]
    fn graph_doubling_adds_ones(g in connected()) {
        let d = double_graph(&g).unwrap();
        for v in 0..g.vertex_count() {
            prop_assert_eq!(d.graph.degree(v), Ok(2 * g.neighbors(v).len()));
        }
        let mut expected = full_spectrum(&g, TOL).unwrap().all_values().to_vec();
        expected.extend(std::iter::repeat_n(1.0, g.vertex_count()));
        expected.sort_by(f64::total_cmp);
        let got = full_spectrum(&d.graph, TOL).unwrap();
        for (a, b) in got.all_values().iter().zip(&expected) {
            prop_assert!((a - b).abs() < 1e-7);
        }
    }

    #[test]
    fn motif_doubling_degrees(g in connected(), seed in any::<u64>()) {
        let mut r = rng(seed);
        let start = r.gen_range(0..g.vertex_count());
        let mut vertices = vec![start];
        let size = r.gen_range(1..=g.vertex_count().min(5));
        while vertices.len() < size {
            let frontier: Vec<usize> = vertices
                .iter()
                .flat_map(|&v| g.neighbors(v).iter().copied())
                .filter(|w| !vertices.contains(w))
                .collect();
            if frontier.is_empty() {
                break;
            }
            vertices.push(frontier[r.gen_range(0..frontier.len())]);
        }
        let m = Motif::new(&g, vertices.clone()).unwrap();
        let t = double_motif(&m);
        let n = g.vertex_count();
        for (a, &p) in vertices.iter().enumerate() {
            prop_assert_eq!(t.graph.degree(p), g.degree(p));
            prop_assert_eq!(t.graph.degree(n + a), g.degree(p));
        }
        for w in (0..n).filter(|w| !vertices.contains(w)) {
            let gain = g.neighbors(w).iter().filter(|x| vertices.contains(x)).count();
            prop_assert_eq!(t.graph.degree(w), Ok(g.neighbors(w).len() + gain));
        }
        if let Some(f) = random_balanced(&mut r, &m.standalone()) {
            let c = lapmotif::operations::localized_eigenfunction_for_doubling(&m, &f).unwrap();
            prop_assert_eq!(is_balanced(&c.graph, &c.function), Ok(true));
        }
    }

    #[test]
    fn counter_matches_brute_force(g in (1usize..=7, 0.0f64..0.8, any::<u64>())
        .prop_map(|(n, p, s)| random_graph(&mut rng(s), n, p)),
        pat in (1usize..=4, 0.0f64..1.0, any::<u64>())
        .prop_map(|(n, p, s)| random_graph(&mut rng(s), n, p)))
    {
        let c = count_subgraph_embeddings(&g, &pat).unwrap();
        prop_assert_eq!((c.non_induced, c.induced), brute_force_count(&g, &pat));
    }

    #[test]
    fn block_algebra(n in -6i64..=6, m in -6i64..=6) {
        prop_assume!((n * m) % 2 == 0);
        let b = realize_pair(n, m).unwrap();
        prop_assert!(verify_block(&b));
        let (lhs, rhs) = parity_sides(&b.graph, &b.f.to_i64().unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(lhs, n * m);
        let mut r = b.clone();
        for _ in 0..4 {
            r = rotate_block(&r).unwrap();
        }
        prop_assert_eq!(r.pair, b.pair);
        prop_assert_eq!(negate_block(&negate_block(&b).unwrap()).unwrap(), b.clone());
        let c = realize_pair(n, 2).unwrap();
        let d = realize_pair(n, -4).unwrap();
        let left = join_blocks(&[join_blocks(&[b.clone(), c.clone()]).unwrap(), d.clone()]).unwrap();
        let right = join_blocks(&[b.clone(), join_blocks(&[c, d]).unwrap()]).unwrap();
        prop_assert_eq!(left.pair, right.pair);
        prop_assert_eq!(left.pair, (n, m - 2));
    }

    #[test]
    fn embedding_extends_the_function((g, f) in graph_and_integers(3)) {
        prop_assume!(f.iter().any(|&x| x != 0));
        let f = VertexFunction::from_integers(&f);
        let e = embed_with_eigenfunction(&g, &f).unwrap();
        prop_assert_eq!(&e.function.values()[..g.vertex_count()], f.values());
        prop_assert_eq!(is_balanced(&e.graph, &e.function), Ok(true));
        prop_assert!(e.graph.isolated_vertex().is_none());
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                prop_assert_eq!(g.has_edge(u, v), e.graph.has_edge(u, v));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_and_json_round_trip(
        g in (0usize..=30, 0.0f64..0.5, any::<u64>())
            .prop_map(|(n, p, seed)| random_graph(&mut rng(seed), n, p))
    ) {
        prop_assert_eq!(&parse_graph(&serialize_graph(&g)).unwrap(), &g);
        prop_assert_eq!(&graph_from_json(&graph_to_json(&g)).unwrap(), &g);
    }
}
