mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use subiso::ilp::{feasible, IlpInstance, Relation};
use subiso::matching::{
    achievable_weights, exact_weight_perfect_matching, has_perfect_matching, histogram_add, max_bipartite_matching,
    ColorHistogram, WeightedBipartiteMultigraph,
};

use common::*;

#[test]
fn ilp_agrees_with_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let p = random_ilp(&mut rng, 20_000);
        let truth = ilp_brute_force(&p);
        match feasible(&p).unwrap() {
            Some(x) => assert!(truth && p.is_satisfied_by(&x)),
            None => assert!(!truth),
        }
    }
}

#[test]
fn ilp_with_unbounded_variables() {
    // x + y = 7, x - y >= 3, x,y >= 0 has x in {5,6,7}
    let mut p = IlpInstance::new();
    let x = p.add_var(0, None);
    let y = p.add_var(0, None);
    p.add_constraint(&[(x, 1), (y, 1)], Relation::Eq, 7);
    p.add_constraint(&[(x, 1), (y, -1)], Relation::Ge, 3);
    let sol = feasible(&p).unwrap().unwrap();
    assert!(p.is_satisfied_by(&sol));

    // 2x = 5 has no integer solution
    let mut p = IlpInstance::new();
    let x = p.add_var(0, None);
    p.add_constraint(&[(x, 2)], Relation::Eq, 5);
    assert!(feasible(&p).unwrap().is_none());
}

#[test]
fn matching_weights_agree_with_subset_dp() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let q = rng.gen_range(1..=2);
        let n = rng.gen_range(1..=4);
        let b = random_multigraph(&mut rng, n, q);
        let dp = matching_weights_dp(&b);
        assert_eq!(has_perfect_matching(&b), !dp.is_empty());
        assert_eq!(achievable_weights(&b, &mut rng, 1).unwrap(), dp);
        for t in &dp {
            let m = exact_weight_perfect_matching(&b, t, &mut rng, 3).unwrap().expect("achievable target");
            let mut sum = ColorHistogram::zero(q);
            m.iter().for_each(|&e| sum.add_assign(&b.edges[e].weight));
            assert_eq!(&sum, t);
        }
    }
}

#[test]
fn unreachable_target_is_rejected() {
    let mut b = WeightedBipartiteMultigraph::new(2, 2, 0, 1, 6);
    let w = |c: Vec<u64>| ColorHistogram::from_counts(1, c).unwrap();
    b.add_edge(0, 0, w(vec![1, 0]), 0);
    b.add_edge(1, 1, w(vec![0, 1]), 1);
    b.add_edge(0, 1, w(vec![1, 1]), 2);
    b.add_edge(1, 0, w(vec![0, 0]), 3);
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    assert!(exact_weight_perfect_matching(&b, &w(vec![1, 1]), &mut rng, 5).unwrap().is_some());
    assert!(exact_weight_perfect_matching(&b, &w(vec![2, 0]), &mut rng, 5).unwrap().is_none());
}

#[test]
fn bipartite_matching_size() {
    let adj = vec![vec![0, 1], vec![0], vec![0]];
    let m = max_bipartite_matching(&adj, 2);
    assert_eq!(m.size(), 2);
    assert!(!m.saturates_left());
}

#[test]
fn histogram_colour_width_mismatch() {
    assert!(histogram_add(&ColorHistogram::zero(1), &ColorHistogram::zero(2)).is_err());
    assert!(ColorHistogram::from_counts(2, vec![1, 2]).is_err());
}

proptest! {
    #[test]
    fn histogram_split_sums(q in 0usize..4, colors in proptest::collection::vec(0usize..8, 0..40), mask in any::<u64>()) {
        let colors: Vec<usize> = colors.into_iter().map(|c| c % (1 << q)).collect();
        let (a, b): (Vec<(usize, usize)>, Vec<(usize, usize)>) = colors.iter().copied().enumerate().partition(|(i, _)| mask >> (i % 64) & 1 == 1);
        let ha = ColorHistogram::from_colors(q, a.into_iter().map(|p| p.1));
        let hb = ColorHistogram::from_colors(q, b.into_iter().map(|p| p.1));
        let whole = ColorHistogram::from_colors(q, colors.iter().copied());
        let sum = histogram_add(&ha, &hb).unwrap();
        prop_assert_eq!(&sum, &whole);
        prop_assert_eq!(whole.checked_sub(&ha), Some(hb.clone()));
        prop_assert!(ha.fits_within(&whole));
        prop_assert_eq!(whole.total() as usize, colors.len());
    }
}
