use amplify_core::bits::BoolMatrix;
use amplify_core::{build_reachability, VertexId};
use amplify_testkit::{all_graphs, bfs_reachable, is_acyclic, random_graph, walk_exists};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn exact_reach_matches_walk_expansion_on_all_graphs_up_to_three_vertices() {
    for n in 1..=3 {
        for g in all_graphs(n) {
            let t = build_reachability(&g).unwrap();
            for v in 0..n {
                for w in 0..n {
                    for k in -2..=(2 * n as i64 + 3) {
                        assert_eq!(
                            t.exact_reach(VertexId(v), VertexId(w), k),
                            walk_exists(&g, v, w, k),
                            "{g:?} {v}->{w} k={k}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn acyclic_graphs_are_nilpotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let n = 1 + (rand::Rng::gen_range(&mut rng, 0..7));
        let g = random_graph(&mut rng, n, 0.35);
        if !is_acyclic(&g) {
            continue;
        }
        let t = build_reachability(&g).unwrap();
        assert_eq!(t.period(), 1);
        assert!(t.preperiod() <= n);
        for k in n as u64..n as u64 + 4 {
            assert!(t.power(k).is_zero());
        }
    }
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = amplify_core::AmplifiedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.3), n * n).prop_map(move |bits| {
            amplify_testkit::graph_from_edges(
                n,
                (0..n * n).filter(|&i| bits[i]).map(|i| (i / n, i % n)),
            )
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn exact_reach_matches_walk_expansion(g in graph_strategy(6)) {
        let n = g.vertex_count();
        let t = build_reachability(&g).unwrap();
        for v in 0..n {
            for w in 0..n {
                for k in 0..=(2 * n as i64 + 3) {
                    prop_assert_eq!(
                        t.exact_reach(VertexId(v), VertexId(w), k),
                        walk_exists(&g, v, w, k)
                    );
                }
            }
        }
    }

    #[test]
    fn periodic_lookup_matches_direct_powers(g in graph_strategy(6)) {
        let t = build_reachability(&g).unwrap();
        let (p, q) = (t.preperiod(), t.period());
        let a = g.adjacency();
        let mut direct = BoolMatrix::identity(g.vertex_count());
        for k in 0..=(p + 3 * q) {
            if k >= p {
                prop_assert_eq!(t.power(k as u64), &direct);
            }
            direct = direct.mul(a);
        }
        // least repeat: the stored powers are pairwise distinct
        let powers = t.powers();
        for i in 0..powers.len() {
            for j in i + 1..powers.len() {
                prop_assert_ne!(&powers[i], &powers[j]);
            }
        }
    }

    #[test]
    fn reaches_is_bfs_closure(g in graph_strategy(6)) {
        let t = build_reachability(&g).unwrap();
        for v in g.vertices() {
            let seen = bfs_reachable(&g, v.0);
            for w in g.vertices() {
                prop_assert_eq!(t.reaches(v, w), seen[w.0]);
            }
        }
    }
}
