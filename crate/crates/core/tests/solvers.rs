mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use subiso::graph::io::{parse_embedding, parse_graph, write_embedding, write_graph};
use subiso::graph::{canonical_form, is_p4_free, verify_embedding};
use subiso::harness::{enumerate_small_graphs, generate, ClassSpec};
use subiso::recognize::{p4_hitting_number, twin_partition, vertex_integrity};
use subiso::solver::{solve_backtracking, solve_hitting, solve_nd, solve_p4_union_kp3, solve_p4free, solve_vi};
use subiso::{Budget, Embedding, Error, Graph};

use common::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
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

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

#[test]
fn oracle_matches_naive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..400 {
        let g = random_graph(rng.gen_range(0..=7), 0.5, &mut rng);
        let q = random_graph(rng.gen_range(0..=5), 0.4, &mut rng);
        let got = solve_backtracking(&g, &q, &Budget::unlimited()).unwrap();
        assert_eq!(got.is_some(), naive_si(&g, &q));
        if let Some(e) = got {
            assert!(verify_embedding(&q, &g, &e));
        }
    }
}

#[test]
fn oracle_reports_budget_exhaustion() {
    let g = Graph::from_edges(12, &(0..12).flat_map(|u| (u + 1..12).map(move |v| (u, v))).collect::<Vec<_>>()).unwrap();
    let q = Graph::empty(13);
    assert!(solve_backtracking(&g, &q, &Budget::new(5)).unwrap().is_none());
    let path: Vec<(usize, usize)> = (0..11).map(|i| (i, i + 1)).collect();
    let tiny = Budget::new(3);
    let r = solve_backtracking(&g, &Graph::from_edges(12, &path).unwrap(), &tiny);
    assert!(matches!(r, Err(Error::BudgetExceeded(_)) | Ok(Some(_))));
}

#[test]
fn small_graph_counts() {
    let counts: Vec<usize> = (0..=5).map(|n| enumerate_small_graphs(n).iter().filter(|g| g.n() == n).count()).collect();
    assert_eq!(counts, [1, 1, 2, 4, 11, 34]);
}

#[test]
fn specialized_solvers_agree_on_six_vertex_hosts() {
    let hosts: Vec<Graph> = enumerate_small_graphs(6).into_iter().filter(|g| g.n() == 6).collect();
    let patterns = enumerate_small_graphs(4);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for g in hosts.iter().filter(|_| rng.gen_bool(0.15)) {
        let hit = p4_hitting_number(g, 6).unwrap();
        let gvi = vertex_integrity(g, 6).unwrap();
        for q in &patterns {
            let truth = naive_si(g, q);
            let b = Budget::unlimited();
            assert_eq!(solve_nd(g, q, &b).unwrap().is_some(), truth, "nd");
            assert_eq!(solve_hitting(g, q, hit, 3, 10, &b).unwrap().is_some(), truth, "hitting");
            let k = gvi.max(vertex_integrity(q, 6).unwrap());
            assert_eq!(solve_vi(g, q, k, &b).unwrap().is_some(), truth, "vi");
            assert_eq!(solve_p4_union_kp3(g, q, 2, &b).unwrap().is_some(), truth, "p4kp3");
            if is_p4_free(g) && is_p4_free(q) {
                assert_eq!(solve_p4free(g, q).unwrap().is_some(), truth, "p4free");
            }
        }
    }
}

#[test]
fn class_violations_are_reported() {
    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
    assert!(matches!(solve_p4free(&p4, &k2), Err(Error::ClassViolation(_))));
    assert!(matches!(solve_hitting(&p4, &k2, 0, 0, 1, &Budget::unlimited()), Err(Error::ClassViolation(_))));
    assert!(matches!(solve_vi(&k2, &p4, 2, &Budget::unlimited()), Err(Error::ClassViolation(_))));
}

#[test]
fn planted_instances_are_found() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let x = generate(ClassSpec::P4Free, 40, &mut rng, true);
        assert!(solve_p4free(&x.host, &x.pattern).unwrap().is_some());
        let x = generate(ClassSpec::Nd(3), 14, &mut rng, true);
        assert!(solve_nd(&x.host, &x.pattern, &Budget::unlimited()).unwrap().is_some());
        let x = generate(ClassSpec::Vi(3), 12, &mut rng, true);
        assert!(solve_vi(&x.host, &x.pattern, 3, &Budget::unlimited()).unwrap().is_some());
    }
}

#[test]
fn twin_partition_classes_are_twins() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..200 {
        let g = random_graph(rng.gen_range(1..=9), 0.5, &mut rng);
        let tp = twin_partition(&g);
        let mut class_of = vec![usize::MAX; g.n()];
        for (c, class) in tp.classes.iter().enumerate() {
            for &v in class {
                class_of[v] = c;
            }
        }
        assert!(class_of.iter().all(|&c| c != usize::MAX));
        for u in 0..g.n() {
            for v in 0..g.n() {
                if u == v {
                    continue;
                }
                let twins = (0..g.n()).filter(|&w| w != u && w != v).all(|w| g.has_edge(u, w) == g.has_edge(v, w));
                assert_eq!(class_of[u] == class_of[v], twins, "{u} {v}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_is_invariant_under_relabelling(g in arb_graph(7), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        let h = g.permute(&perm);
        let colors = vec![0; g.n()];
        prop_assert_eq!(canonical_form(&g, &colors).0, canonical_form(&h, &colors).0);
    }

    #[test]
    fn canonical_form_separates_non_isomorphic(a in arb_graph(6), b in arb_graph(6)) {
        let same = canonical_form(&a, &vec![0; a.n()]).0 == canonical_form(&b, &vec![0; b.n()]).0;
        prop_assert_eq!(same, isomorphic(&a, &b));
    }

    #[test]
    fn canonical_labelling_reproduces_form(g in arb_graph(7)) {
        let (form, _) = canonical_form(&g, &vec![0; g.n()]);
        let (back, _) = form.to_graph();
        prop_assert!(isomorphic(&g, &back));
    }

    #[test]
    fn graph_text_round_trips(g in arb_graph(9)) {
        let back = parse_graph(&write_graph(&g)).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn embedding_text_round_trips(perm in (0usize..8).prop_flat_map(arb_perm)) {
        let e = Embedding(perm);
        prop_assert_eq!(parse_embedding(&write_embedding(&e)).unwrap(), e);
    }

    #[test]
    fn yes_answers_verify(g in arb_graph(7), q in arb_graph(5)) {
        let b = Budget::unlimited();
        let truth = naive_si(&g, &q);
        let answers = [
            solve_backtracking(&g, &q, &b).unwrap(),
            solve_nd(&g, &q, &b).unwrap(),
            solve_hitting(&g, &q, p4_hitting_number(&g, g.n()).unwrap(), 9, 10, &b).unwrap(),
        ];
        for a in answers {
            prop_assert_eq!(a.is_some(), truth);
            if let Some(e) = a {
                prop_assert!(verify_embedding(&q, &g, &e));
            }
        }
    }

    #[test]
    fn subgraph_of_itself_after_deletions(g in arb_graph(8), drop in proptest::collection::vec(any::<bool>(), 28)) {
        let edges: Vec<(usize, usize)> = g.edges().enumerate().filter(|(i, _)| !drop[*i % drop.len()]).map(|(_, e)| e).collect();
        let q = Graph::from_edges(g.n(), &edges).unwrap();
        let e = solve_backtracking(&g, &q, &Budget::unlimited()).unwrap();
        prop_assert!(e.is_some());
        prop_assert!(solve_nd(&g, &q, &Budget::unlimited()).unwrap().is_some());
    }
}
