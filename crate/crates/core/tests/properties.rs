mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use specmin::canonical::{blowup, is_canonical, quotient, BlowupSpec};
use specmin::classify::{certificate_check, classify_minus_one, Classification};
use specmin::constructors::path;
use specmin::graph::{
    are_isomorphic, canonical_form, diameter, find_isomorphism, parse_graph6, write_graph6,
};
use specmin::spectra::{interlacing_check, multiplicity, rank_monotonicity_check};
use specmin::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn canonical_form_ignores_labelling((g, perm) in with_permutation(9)) {
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(are_isomorphic(&g, &h));
        let phi = find_isomorphism(&g, &h).unwrap();
        for (u, v) in g.edges() {
            prop_assert!(h.has_edge(phi[u], phi[v]));
        }
        prop_assert_eq!(g.edge_count(), h.edge_count());
    }

    #[test]
    fn canonical_form_is_least_over_transpositions(g in graph(8)) {
        let canon = parse_graph6(&canonical_form(&g).unwrap()).unwrap();
        let text = write_graph6(&canon);
        let n = g.order();
        for a in 0..n {
            for b in a + 1..n {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(a, b);
                prop_assert!(write_graph6(&canon.permute(&perm).unwrap()) >= text);
            }
        }
    }

    #[test]
    fn graph6_matches_reference_encoder(g in graph(64)) {
        let text = write_graph6(&g);
        prop_assert_eq!(&text, &graph6(&g));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn diameter_matches_floyd(g in graph(14)) {
        prop_assert_eq!(diameter(&g).finite(), diam(&g));
    }

    #[test]
    fn multiplicity_matches_reference(g in graph(9), p in -6i64..=6, q in 1i64..=3) {
        let mu = frac(p, q);
        prop_assert_eq!(multiplicity(&g, &mu), mult(&g, &mu));
    }

    #[test]
    fn interlacing_holds(g in graph(9), v in 0usize..9, mu in -2i64..=2) {
        prop_assume!(g.order() >= 2);
        let v = v % g.order();
        prop_assert!(interlacing_check(&g, v, &int(mu)).unwrap());
    }

    #[test]
    fn quotient_inverts_blowup(g in graph(7), sizes in proptest::collection::vec(1usize..=3, 7)) {
        let (gc, part) = quotient(&g);
        prop_assert!(is_canonical(&gc));
        let back = blowup(&BlowupSpec::new(gc.clone(), part.sizes()).unwrap()).unwrap();
        prop_assert!(are_isomorphic(&back, &g));
        let sizes = sizes[..gc.order()].to_vec();
        let big = blowup(&BlowupSpec::new(gc.clone(), sizes).unwrap()).unwrap();
        prop_assert!(are_isomorphic(&quotient(&big).0, &gc));
    }

    #[test]
    fn blowups_of_p5_are_extremal(sizes in proptest::collection::vec(1usize..=4, 5)) {
        let g = blowup(&BlowupSpec::new(path(5).unwrap(), sizes).unwrap()).unwrap();
        let class = classify_minus_one(&g).unwrap();
        prop_assert!(matches!(class, Classification::QuotientP5 { .. }), "{:?}", class);
        prop_assert!(certificate_check(&g, &class).unwrap());
        prop_assert_eq!(mult(&g, &int(-1)) + 4, g.order());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rank_is_monotone_on_induced_subgraphs(g in graph(9), mask in any::<u64>(), mu in -2i64..=2) {
        let keep: Vec<usize> = (0..g.order()).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assume!(!keep.is_empty());
        prop_assert!(rank_monotonicity_check(&g, &keep, &int(mu)).unwrap());
    }
}

#[test]
fn random_connected_graphs_classify_consistently() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = 2 + (rand::Rng::gen_range(&mut rng, 0..10));
        let g = random_connected(&mut rng, n, 0.35);
        let class = classify_minus_one(&g).unwrap();
        let d = diam(&g).unwrap();
        assert_eq!(
            class.is_extremal(),
            mult(&g, &int(-1)) + d == n,
            "{}",
            write_graph6(&g)
        );
    }
}
