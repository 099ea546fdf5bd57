use proptest::prelude::*;
use rand::Rng;

use splitkit::model::{degree_sequence, edit_set, repair, verify_split_partition, Digraph};
use splitkit::oracle::invariants;
use splitkit::oracle::{Oracle, Sampler};
use splitkit::seq::{compare_neg, compare_pos, proper_order, DegreePair, IntegerPairSequence};
use splitkit::splittance::{
    digraph_splittance, fulkerson_slack, induced_partition, is_digraphic, is_split_sequence, partition_measure,
    split_partitions, splittance_matrix, splittance_matrix_by_cells, Block, QuadPartition,
};

fn pairs_strategy(max_n: usize) -> impl Strategy<Value = IntegerPairSequence> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), n)
            .prop_map(|v| IntegerPairSequence::from_pairs(&v).expect("generated within bound"))
    })
}

fn balanced_strategy(max_n: usize) -> impl Strategy<Value = IntegerPairSequence> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| Sampler::new(seed).balanced_sequence(n))
}

fn digraph_strategy(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| Sampler::new(seed).digraph(n))
}

fn partition_for(n: usize) -> impl Strategy<Value = QuadPartition> {
    proptest::collection::vec(0..4usize, n)
        .prop_map(|v| QuadPartition::new(v.into_iter().map(|i| Block::ALL[i]).collect()))
}

/// Selection sort with the two comparators and an index tie-break; shares
/// nothing with the library's sort.
fn sort_oracle(d: &[DegreePair], cmp: fn(DegreePair, DegreePair) -> std::cmp::Ordering) -> Vec<usize> {
    let mut left: Vec<usize> = (0..d.len()).collect();
    let mut out = vec![];
    while !left.is_empty() {
        let mut best = 0;
        for i in 1..left.len() {
            let (a, b) = (left[i], left[best]);
            if cmp(d[a], d[b]).is_gt() || (d[a] == d[b] && a < b) {
                best = i;
            }
        }
        out.push(left.remove(best));
    }
    out
}

#[test]
fn proper_order_matches_sort_oracle() {
    let mut sampler = Sampler::new(50);
    for _ in 0..50 {
        let n = sampler.rng().gen_range(0..=10);
        let d = sampler.sequence(n);
        let ord = proper_order(&d);
        assert_eq!(ord.pos_perm(), sort_oracle(d.pairs(), compare_pos).as_slice());
        assert_eq!(ord.neg_perm(), sort_oracle(d.pairs(), compare_neg).as_slice());
        assert!(invariants::proper_ordering_holds(&d, &ord).is_empty());
    }
}

#[test]
fn split_partitions_are_empty_exactly_when_not_split() {
    let oracle = Oracle::default();
    for n in 1..=4 {
        for g in oracle.enumerate_digraphs(n).unwrap() {
            let d = degree_sequence(&g);
            let splits = split_partitions(&d).unwrap();
            assert_eq!(splits.is_empty(), !is_split_sequence(&d).unwrap(), "{d}");
            for s in &splits {
                assert!(s.partition.is_nontrivial());
                assert_eq!(partition_measure(&d, &s.partition), 0);
            }
        }
    }
}

#[test]
fn a_non_split_digraphic_sequence_has_no_partitions() {
    // The directed 4-cycle: every vertex (1,1).
    let d = IntegerPairSequence::from_pairs(&[(1, 1); 4]).unwrap();
    let oracle = Oracle::default();
    assert!(oracle.brute_min_partition_measure(&d).unwrap() > 0);
    assert_eq!(is_split_sequence(&d), Ok(false));
    assert!(split_partitions(&d).unwrap().is_empty());
    assert!(fulkerson_slack(&d).interior_min().unwrap() > 0);
}

#[test]
fn zero_at_full_cell_coexists_with_a_nontrivial_zero() {
    for n in 1..=6 {
        let complete = IntegerPairSequence::new(vec![DegreePair::new(n - 1, n - 1); n]).unwrap();
        let sigma = splittance_matrix(&complete);
        assert_eq!(sigma.get(n, n), 0);
        if n >= 2 {
            assert_eq!(sigma.get(n - 1, n - 1), 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn fast_matrix_matches_cellwise_matrix(d in pairs_strategy(9)) {
        prop_assert_eq!(splittance_matrix(&d), splittance_matrix_by_cells(&d));
    }

    #[test]
    fn proper_ordering_invariants(d in pairs_strategy(10)) {
        let ord = proper_order(&d);
        prop_assert!(invariants::proper_ordering_holds(&d, &ord).is_empty());
        prop_assert_eq!(proper_order(&d), ord);
    }

    #[test]
    fn measures_agree_on_balanced_sequences(
        (d, p) in balanced_strategy(8).prop_flat_map(|d| { let n = d.len(); (Just(d), partition_for(n)) })
    ) {
        prop_assert!(invariants::measures_agree(&d, &p).is_empty());
        prop_assert!(invariants::kl_form_agrees(&d, &p).is_empty());
    }

    #[test]
    fn kl_form_agrees_on_any_sequence(
        (d, p) in pairs_strategy(8).prop_flat_map(|d| { let n = d.len(); (Just(d), partition_for(n)) })
    ) {
        prop_assert!(invariants::kl_form_agrees(&d, &p).is_empty());
    }

    #[test]
    fn induced_partition_inequalities(d in pairs_strategy(10), a in 0.0f64..1.0, b in 0.0f64..1.0) {
        let n = d.len();
        let (k, l) = ((a * (n + 1) as f64) as usize, (b * (n + 1) as f64) as usize);
        let ord = proper_order(&d);
        prop_assert!(invariants::induced_dominance(&d, &ord, k, l).is_empty());
        let v = invariants::strict_inequalities(&d, &ord, k, l);
        prop_assert!(v.is_empty(), "{:?}", v);
    }

    #[test]
    fn monotonicity_and_slack_embedding(d in balanced_strategy(10)) {
        let v = invariants::row_column_monotonicity(&d);
        prop_assert!(v.is_empty(), "{:?}", v);
        let v = invariants::slack_embedding(&d);
        prop_assert!(v.is_empty(), "{:?}", v);
        let v = invariants::interior_slack_minimum(&d);
        prop_assert!(v.is_empty(), "{:?}", v);
    }

    #[test]
    fn splittance_equals_partition_minimum(g in digraph_strategy(7)) {
        let d = degree_sequence(&g);
        let oracle = Oracle::default();
        prop_assert_eq!(digraph_splittance(&d).unwrap() as i64, oracle.brute_min_partition_measure(&d).unwrap());
    }

    #[test]
    fn symmetric_extension_halves_the_diagonal(g in (1..=6usize, any::<u64>()).prop_map(|(n, s)| Sampler::new(s).digraph(n))) {
        // Symmetrise: undirected degree d_i becomes (d_i, d_i).
        let n = g.vertex_count();
        let mut deg = vec![0usize; n];
        let mut seen = std::collections::BTreeSet::new();
        for (u, v) in g.arcs() {
            if seen.insert((u.min(v), u.max(v))) {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        let d = IntegerPairSequence::new(deg.iter().map(|&x| DegreePair::new(x, x)).collect()).unwrap();
        let sigma = splittance_matrix(&d);
        prop_assert!(sigma.is_symmetric());
        let und = splitkit::undirected::splittance_sequence(&splitkit::undirected::IntegerSequence::new(deg));
        let diag: Vec<i64> = sigma.diagonal();
        let doubled: Vec<i64> = und.iter().map(|h| h.doubled()).collect();
        prop_assert_eq!(diag, doubled);
    }

    #[test]
    fn edit_sets_realise_the_measure(
        (g, p) in digraph_strategy(6).prop_flat_map(|g| { let n = g.vertex_count(); (Just(g), partition_for(n)) })
    ) {
        let d = degree_sequence(&g);
        let edits = edit_set(&g, &p);
        prop_assert_eq!(edits.len() as i64, partition_measure(&d, &p));
        let fixed = edits.apply(&g);
        prop_assert_eq!(verify_split_partition(&fixed, &p), p.is_nontrivial());
        prop_assert_eq!(
            verify_split_partition(&g, &p),
            p.is_nontrivial() && partition_measure(&d, &p) == 0
        );
    }

    #[test]
    fn repair_is_realisation_independent(g in digraph_strategy(6)) {
        let d = degree_sequence(&g);
        let other = Oracle::default().brute_realize(&d).unwrap().expect("d has a realization");
        let (a, b) = (repair(&g).unwrap(), repair(&other).unwrap());
        prop_assert_eq!(a.edits.len(), b.edits.len());
        prop_assert_eq!(a.edits.len() as u64, digraph_splittance(&d).unwrap());
        prop_assert!(verify_split_partition(&a.edits.apply(&g), &a.partition));
    }

    #[test]
    fn digraphic_sequences_have_realisations(d in pairs_strategy(6)) {
        let found = Oracle::default().brute_realize(&d).unwrap();
        prop_assert_eq!(found.is_some(), is_digraphic(&d));
        if let Some(g) = found {
            prop_assert_eq!(degree_sequence(&g), d);
        }
    }

    #[test]
    fn induced_partition_has_requested_sizes(d in pairs_strategy(10), a in 0.0f64..1.0, b in 0.0f64..1.0) {
        let n = d.len();
        let (k, l) = ((a * (n + 1) as f64) as usize, (b * (n + 1) as f64) as usize);
        let p = induced_partition(&d, &proper_order(&d), k, l).unwrap();
        prop_assert_eq!((p.k(), p.l()), (k, l));
    }
}
