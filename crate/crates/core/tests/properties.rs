mod common;

use std::cmp::Ordering;

use dcc_spectral::cycles::{find_chorded_cycle, find_dcc, find_dcc1, Target};
use dcc_spectral::search::{canonical_form, canonical_graph};
use dcc_spectral::spectral::{
    char_poly, coarsest_equitable_partition, compare_largest_roots, compare_radii, kelmans_rotation, largest_real_root,
    quotient_matrix, spectral_radius, two_walk_tolerance, verify_two_walk_identity, IntPolynomial, Separation,
};
use dcc_spectral::{graph6_decode, graph6_encode, Graph, VertexSet};
use num_bigint::BigInt;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", Graph::is_connected)
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trips(g in graph(20)) {
        prop_assert_eq!(graph6_decode(graph6_encode(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, p) in with_permutation(10)) {
        let h = g.relabel(&p).unwrap();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let (c, perm) = canonical_graph(&g);
        prop_assert_eq!(g.relabel(&perm).unwrap(), c);
    }

    #[test]
    fn detection_ignores_labels((g, p) in with_permutation(8)) {
        let h = g.relabel(&p).unwrap();
        for t in Target::ALL {
            prop_assert_eq!(t.occurs_in(&g), t.occurs_in(&h));
        }
    }

    #[test]
    fn witnesses_validate(g in graph(9)) {
        for w in [find_chorded_cycle(&g), find_dcc(&g), find_dcc1(&g)].into_iter().flatten() {
            prop_assert!(w.validate(&g).is_ok());
        }
        prop_assert!(find_dcc1(&g).is_none_or(|w| w.is_dcc1()));
        prop_assert!(find_dcc(&g).is_none_or(|w| w.is_dcc()));
    }

    #[test]
    fn radius_matches_dense_solver(g in graph(12)) {
        let r = spectral_radius(&g, 1e-12).unwrap();
        prop_assert!((r.rho - common::dense_radius(&g)).abs() < 1e-8);
    }

    #[test]
    fn perron_vector_is_positive_unit(g in connected(12)) {
        let r = spectral_radius(&g, 1e-12).unwrap();
        let x = r.perron.unwrap();
        prop_assert!(x.iter().all(|&v| v > 0.0));
        prop_assert!((x.iter().map(|v| v * v).sum::<f64>() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn adding_an_edge_raises_the_radius(g in connected(11), pick in any::<prop::sample::Index>()) {
        let missing: Vec<_> = g.non_edges().collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[pick.index(missing.len())];
        let a = spectral_radius(&g, 1e-12).unwrap();
        let b = spectral_radius(&g.with_edge(u, v).unwrap(), 1e-12).unwrap();
        prop_assert_ne!(compare_radii(&b, &a), Separation::Less);
        prop_assert!(b.rho > a.rho);
    }

    #[test]
    fn rotation_towards_larger_entry_raises_the_radius(g in connected(11), a in 0usize..11, b in 0usize..11) {
        let n = g.n();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let r = spectral_radius(&g, 1e-12).unwrap();
        let x = r.perron.as_ref().unwrap();
        let (u, v) = if x[a] >= x[b] { (a, b) } else { (b, a) };
        let moved = g.neighbors(v).difference(g.neighbors(u)).difference(VertexSet::singleton(u));
        prop_assume!(!moved.is_empty());
        let h = kelmans_rotation(&g, u, v, moved).unwrap();
        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert_ne!(compare_radii(&spectral_radius(&h, 1e-12).unwrap(), &r), Separation::Less);
    }

    #[test]
    fn two_walk_identity_holds(g in connected(12)) {
        let r = spectral_radius(&g, 1e-12).unwrap();
        let tol = two_walk_tolerance(&g, &r);
        for u in 0..g.n() {
            prop_assert!(verify_two_walk_identity(&g, &r, u).unwrap() <= tol);
        }
    }

    #[test]
    fn bipartite_radius_at_most_root_edges(g in graph(12)) {
        prop_assume!(g.is_bipartite());
        let r = spectral_radius(&g, 1e-12).unwrap();
        prop_assert!(r.rho <= (g.edge_count() as f64).sqrt() + 1e-9);
    }

    #[test]
    fn equitable_quotient_gives_the_radius(g in connected(10)) {
        let parts = coarsest_equitable_partition(&g);
        let q = quotient_matrix(&g, &parts).unwrap();
        prop_assert!(q.equitable);
        let p = char_poly(&q).unwrap();
        prop_assert_eq!(p.degree(), Some(parts.len()));
        let root = largest_real_root(&p, 1e-12).unwrap();
        prop_assert!((root - spectral_radius(&g, 1e-12).unwrap().rho).abs() < 1e-8);
    }

    #[test]
    fn discrete_quotient_is_the_characteristic_polynomial(g in graph(7)) {
        let parts: Vec<VertexSet> = (0..g.n()).map(VertexSet::singleton).collect();
        let p = char_poly(&quotient_matrix(&g, &parts).unwrap()).unwrap();
        // trace identities: a_{n-1} = 0, a_{n-2} = -e
        let d = p.descending();
        prop_assert_eq!(&d[0], &BigInt::from(1));
        if g.n() >= 2 {
            prop_assert_eq!(&d[1], &BigInt::from(0));
            prop_assert_eq!(&d[2], &BigInt::from(-(g.edge_count() as i64)));
        }
    }

    #[test]
    fn largest_root_of_linear_factors(roots in proptest::collection::vec(-20i64..20, 1..6)) {
        let mut coeffs = vec![BigInt::from(1)];
        for r in &roots {
            // multiply by (x - r), ascending coefficients
            let mut next = vec![BigInt::from(0); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            coeffs = next;
        }
        let p = IntPolynomial::from_ascending(coeffs);
        let top = *roots.iter().max().unwrap() as f64;
        prop_assert!((largest_real_root(&p, 1e-12).unwrap() - top).abs() <= 1e-12);
    }

    #[test]
    fn exact_comparison_agrees_with_floats(g in connected(8), h in connected(8)) {
        let poly = |g: &Graph| char_poly(&quotient_matrix(g, &coarsest_equitable_partition(g)).unwrap()).unwrap();
        let (a, b) = (spectral_radius(&g, 1e-12).unwrap(), spectral_radius(&h, 1e-12).unwrap());
        let exact = compare_largest_roots(&poly(&g), &poly(&h)).unwrap();
        match compare_radii(&a, &b) {
            Separation::Greater => prop_assert_eq!(exact, Ordering::Greater),
            Separation::Less => prop_assert_eq!(exact, Ordering::Less),
            Separation::Indistinguishable => prop_assert!((a.rho - b.rho).abs() < 1e-9),
        }
        if canonical_form(&g) == canonical_form(&h) {
            prop_assert_eq!(exact, Ordering::Equal);
        }
    }
}

#[test]
fn random_sample_is_reproducible() {
    assert_eq!(common::random_sample(5, 7), common::random_sample(5, 7));
}
