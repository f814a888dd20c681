//! Randomized structural properties over arbitrary graphs and circulants.

use deza_core::codec::{from_edge_list_text, from_graph6, to_edge_list_text, to_graph6};
use deza_core::enumeration::{enumerate_circulants, enumerate_circulants_jobs};
use deza_core::graph::cayley_graph;
use deza_core::iso::verify_isomorphism;
use deza_core::spectra::spectrum;
use deza_core::{classify, Graph, VertexPermutation};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        g.add_edge(u, v).unwrap();
                    }
                    idx += 1;
                }
            }
            g
        })
    })
}

fn half_set_connection(n: usize, mask: u32) -> Vec<usize> {
    let mut conn = Vec::new();
    for i in 0..n / 2 {
        if mask >> i & 1 == 1 {
            conn.push(i + 1);
            if i + 1 != n - i - 1 {
                conn.push(n - i - 1);
            }
        }
    }
    conn
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(40)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(25)) {
        let text = to_edge_list_text(&g);
        prop_assert_eq!(from_edge_list_text(&text).unwrap(), g);
    }

    #[test]
    fn complement_is_involutive(g in arb_graph(30)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn spectrum_trace_identities(g in arb_graph(20)) {
        let s = spectrum(&g).unwrap();
        let n = g.n() as f64;
        let trace: f64 = s.lines.iter().map(|l| l.value * l.multiplicity as f64).sum();
        let square_trace: f64 =
            s.lines.iter().map(|l| l.value * l.value * l.multiplicity as f64).sum();
        prop_assert_eq!(s.total_multiplicity(), g.n());
        prop_assert!(trace.abs() < 1e-6 * n.max(1.0));
        prop_assert!((square_trace - 2.0 * g.edge_count() as f64).abs() < 1e-5 * n.max(1.0));
    }

    #[test]
    fn classification_ignores_labels(g in arb_graph(12), seed in any::<u64>()) {
        prop_assume!(g.n() >= 2);
        let mut image: Vec<usize> = (0..g.n()).collect();
        image.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
        let phi = VertexPermutation::new(image).unwrap();
        let before = classify(&g).unwrap();
        let after = classify(&g.relabelled(&phi).unwrap()).unwrap();
        prop_assert_eq!(before.kind, after.kind);
        prop_assert_eq!(before.k, after.k);
        prop_assert_eq!((before.b, before.a), (after.b, after.a));
        prop_assert_eq!(before.strictly_deza, after.strictly_deza);
        prop_assert_eq!(before.diameter, after.diameter);
    }

    #[test]
    fn multiplier_maps_are_isomorphisms(n in 3usize..=24, mask in any::<u32>(), u_raw in 2usize..1000) {
        let conn = half_set_connection(n, mask & ((1 << (n / 2)) - 1));
        prop_assume!(!conn.is_empty());
        let u = u_raw % n;
        prop_assume!(u > 1 && gcd(u, n) == 1);
        let mut mapped: Vec<usize> = conn.iter().map(|&s| s * u % n).collect();
        mapped.sort_unstable();
        mapped.dedup();
        let g = cayley_graph(&[n], &conn).unwrap();
        let h = cayley_graph(&[n], &mapped).unwrap();
        let phi = VertexPermutation::new((0..n).map(|x| x * u % n).collect()).unwrap();
        verify_isomorphism(&g, &h, &phi).unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn census_agrees_across_thread_counts(n in 4usize..=14) {
        let sequentialish = enumerate_circulants_jobs(n, false, 1).unwrap();
        let parallel = enumerate_circulants_jobs(n, false, 4).unwrap();
        let default = enumerate_circulants(n, false).unwrap();
        prop_assert_eq!(&sequentialish, &parallel);
        prop_assert_eq!(&sequentialish, &default);
    }
}
