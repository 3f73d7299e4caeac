mod common;

use std::collections::HashSet;

use common::*;
use k7lab::cliques::{clique_number, independence_number};
use k7lab::enumeration::{enumerate_all, enumerate_graphs, EnumerationTask, Filter};
use k7lab::minors::{has_clique_minor, verify_certificate};
use k7lab::{canonical_key, named, Exec, SmallGraph};

fn generated(task: EnumerationTask) -> Vec<SmallGraph> {
    enumerate_graphs(&task).unwrap().collect()
}

#[test]
fn class_counts_match_permutation_dedup_up_to_five() {
    for n in 0..=5 {
        let brute: HashSet<u64> = all_labeled(n).map(|g| brute_key(&g)).collect();
        let gen = generated(EnumerationTask::order(n));
        assert_eq!(gen.len(), brute.len(), "n = {n}");
        let keys: HashSet<u64> = gen.iter().map(brute_key).collect();
        assert_eq!(keys, brute);
    }
}

#[test]
fn refined_key_agrees_with_full_permutation_key() {
    for g in all_labeled(5).step_by(7) {
        for h in all_labeled(5).step_by(131) {
            assert_eq!(refined_key(&g) == refined_key(&h), brute_key(&g) == brute_key(&h));
        }
    }
}

#[test]
fn min_degree_five_on_nine_is_the_complement_of_max_degree_three() {
    let dense: HashSet<_> = generated(EnumerationTask::order(9).min_degree(5))
        .iter()
        .map(canonical_key)
        .collect();
    let sparse: HashSet<_> = generated(EnumerationTask::order(9).max_degree(3))
        .iter()
        .map(|g| canonical_key(&g.complement()))
        .collect();
    assert_eq!(dense, sparse);
    let oracle = extension_classes(9, &|g| g.max_degree() <= 3);
    assert_eq!(sparse.len(), oracle.len());
}

#[test]
fn complement_duality_for_other_degrees() {
    for d in [2, 3, 4] {
        let lo: Vec<_> = generated(EnumerationTask::order(7).min_degree(d))
            .iter()
            .map(canonical_key)
            .collect();
        let mut hi: Vec<_> = generated(EnumerationTask::order(7).max_degree(6 - d))
            .iter()
            .map(|g| canonical_key(&g.complement()))
            .collect();
        let mut lo_sorted = lo.clone();
        lo_sorted.sort();
        hi.sort();
        assert_eq!(lo_sorted, hi, "d = {d}");
    }
}

#[test]
fn alpha_at_most_two_on_eight_matches_extension_oracle() {
    let gen = generated(EnumerationTask::order(8).filter(Filter::AlphaLe(2)));
    let oracle = extension_classes(8, &|g| brute_alpha(g) <= 2);
    assert_eq!(gen.len(), oracle.len());
    assert_eq!(gen.len(), 410);
    let keys: HashSet<_> = gen.iter().map(canonical_key).collect();
    assert!(keys.contains(&canonical_key(&named::h8())));
    assert!(keys.contains(&canonical_key(&named::complete(8).unwrap())));
    // the two spellings of the filter agree
    let other = generated(EnumerationTask::order(8).filter(Filter::TriangleFreeComplement));
    assert_eq!(other, gen);
}

#[test]
fn k4_free_min_degree_five_on_nine_matches_extension_oracle() {
    let gen = enumerate_all(
        &EnumerationTask::order(9).min_degree(5).filter(Filter::K4Free),
        Exec::Sequential,
    )
    .unwrap();
    // complements: max degree 3 and no independent 4-set
    let oracle = extension_classes(9, &|g| g.max_degree() <= 3 && brute_alpha(g) <= 3);
    assert_eq!(gen.len(), oracle.len());
    assert_eq!(gen.len(), 20);
}

#[test]
fn clique_and_independence_numbers_match_subset_enumeration() {
    for n in 0..=7 {
        for g in generated(EnumerationTask::order(n)) {
            assert_eq!(clique_number(&g), brute_omega(&g));
            assert_eq!(independence_number(&g), brute_alpha(&g));
        }
    }
}

#[test]
fn clique_minor_matches_partition_oracle_up_to_six() {
    for n in 0..=6 {
        for g in generated(EnumerationTask::order(n)) {
            for p in 1..=6 {
                let found = has_clique_minor(&g, p);
                assert_eq!(
                    found.is_some(),
                    partition_clique_minor(&g, p),
                    "{:?} p={p}",
                    g.edges()
                );
                if let Some(cert) = found {
                    assert!(verify_certificate(&g, &cert));
                }
            }
        }
    }
}
