mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use subiso::graph::{components, contains_path_subgraph, verify_embedding};
use subiso::reduce::*;
use subiso::solver::solve_backtracking;
use subiso::{Budget, Error};

use common::*;

#[test]
fn three_partition_round_trip_small() {
    let mut checked = 0;
    for b in 3..=13 {
        for inst in all_3partition(1, b) {
            let answer = solve_3partition(&inst).unwrap();
            for mode in [PartitionMode::LinearForest, PartitionMode::Cluster] {
                let (g, q) = reduce_3partition(&inst, mode).unwrap();
                assert_eq!(g.n(), q.n());
                let si = solve_backtracking(&g, &q, &Budget::unlimited()).unwrap();
                assert_eq!(si.is_some(), answer.is_some());
                if let Some(t) = &answer {
                    assert!(verify_embedding(&q, &g, &build_3partition_witness(&inst, t).unwrap()));
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn three_partition_host_shapes() {
    let inst = ThreePartitionInstance::new(vec![4, 5, 6, 4, 5, 6], 15).unwrap();
    let (g, q) = reduce_3partition(&inst, PartitionMode::LinearForest).unwrap();
    assert_eq!(components(&g).len(), 2);
    assert_eq!(components(&q).len(), 6);
    assert!(!contains_path_subgraph(&q, 7));
    let (g, q) = reduce_3partition(&inst, PartitionMode::Cluster).unwrap();
    assert!(components(&g).iter().all(|c| c.len() == 15));
    assert_eq!(g.m(), 2 * 15 * 14 / 2);
    assert_eq!(q.m(), inst.values.iter().map(|&a| (a * (a - 1) / 2) as usize).sum::<usize>());
}

#[test]
fn three_partition_validation() {
    assert!(matches!(ThreePartitionInstance::new(vec![1, 2], 3), Err(Error::InvalidInput(_))));
    // 4 is not strictly above B/4 = 4
    assert!(ThreePartitionInstance::new(vec![4, 6, 6], 16).is_err());
    assert!(parse_3partition("# one triple\n15\n4 5 6\n").is_ok());
    assert!(matches!(parse_3partition("x\n"), Err(Error::Parse { .. })));
}

#[test]
fn x3c_structure_and_witnesses() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..30 {
        let n = 3 * rng.gen_range(1..=3);
        let inst = random_x3c(n, rng.gen_range(0..=3), &mut rng);
        let (g, q) = reduce_x3c(&inst).unwrap();
        assert!(components(&g).iter().all(|c| c.len() == 16 * n + 7));
        assert!(!contains_path_subgraph(&g, 6));
        assert!(q.n() <= g.n());
        if let Some(cover) = solve_x3c(&inst).unwrap() {
            assert!(inst.is_cover(&cover));
            assert!(verify_embedding(&q, &g, &build_x3c_witness(&inst, &cover).unwrap()));
        }
    }
}

#[test]
fn x3c_parse() {
    let inst = parse_x3c("6\n0 1 2\n3 4 5\n1 2 3\n").unwrap();
    assert_eq!(inst.sets.len(), 3);
    assert_eq!(solve_x3c(&inst).unwrap(), Some(vec![0, 1]));
    assert!(parse_x3c("6\n0 1 9\n").is_err());
}

#[test]
fn sat21_structure_and_witnesses() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..20 {
        let n = rng.gen_range(4..=8);
        let f = random_sat21(n, &mut rng);
        let (g, q, lay) = reduce_sat21_with_layout(&f).unwrap();
        assert!(is_double_star_forest_after(&g, &[lay.c, lay.c_prime]));
        assert!(is_double_star_forest_after(&q, &[lay.d, lay.d_prime]));
        assert_eq!(lay.c_pendants.len(), pendant_count(n));
        if let Some(a) = solve_sat21(&f).unwrap() {
            assert!(f.is_satisfied_by(&a));
            assert!(verify_embedding(&q, &g, &build_sat21_witness(&f, &a).unwrap()));
        }
    }
}

#[test]
fn sat21_validation() {
    assert_eq!(pendant_count(3), 116);
    // x1 occurs positively only once
    assert!(parse_sat21("p cnf 4 2\n1 2 0\n-1 3 4 0\n").is_err());
    let f = Sat21Formula { variables: 3, clauses: vec![] };
    assert!(reduce_sat21(&f).is_err());
}
