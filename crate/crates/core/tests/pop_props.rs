mod common;

use common::*;
use popav::perm::Permutations;
use popav::pop::{contains_pop, count_pop_occurrences};
use popav::Pop;
use proptest::prelude::*;

fn named() -> Vec<Pop> {
    let mut v = vec![Pop::lambda()];
    for k in 2..=5 {
        v.push(Pop::q(k).unwrap());
        v.push(Pop::r(k).unwrap());
        for j in 1..=k {
            v.push(Pop::qj(k, j).unwrap());
        }
    }
    for k in 3..=5 {
        v.push(Pop::p(k).unwrap());
    }
    v
}

#[test]
fn containment_is_or_over_expansions() {
    let pops = named();
    for n in 1..=7 {
        for p in Permutations::new(n) {
            for pop in &pops {
                let by_patterns = pop.expand_patterns().iter().any(|q| p.contains_pattern(q));
                assert_eq!(contains_pop(&p, pop), by_patterns, "{p} vs {pop}");
            }
        }
    }
}

#[test]
fn containment_matches_direct_relation_check() {
    let pops = named();
    for n in 1..=6 {
        for v in all_perms(n) {
            let p = popav::Permutation::new(v.clone()).unwrap();
            for pop in &pops {
                assert_eq!(contains_pop(&p, pop), naive_pop_contains(&v, pop.size(), pop.relations()), "{p} vs {pop}");
            }
        }
    }
}

#[test]
fn expansion_size_is_linear_extension_count() {
    for pop in named() {
        let want = naive_linear_extensions(pop.size(), pop.relations());
        assert_eq!(pop.expand_patterns().len() as u64, want, "{pop}");
        assert_eq!(pop.linear_extension_count(), want as u128, "{pop}");
    }
}

#[test]
fn qk_avoidance_is_a_position_bound() {
    for k in 3..=5 {
        let q = Pop::q(k).unwrap();
        for n in 1..=8 {
            for p in Permutations::new(n) {
                let bound = (1..=n).all(|v| p.position_of(v).unwrap() + k >= v + 2);
                assert_eq!(!contains_pop(&p, &q), bound, "{p}, k = {k}");
            }
        }
    }
}

#[test]
fn text_forms_round_trip() {
    for pop in named() {
        let back: Pop = pop.to_string().parse().unwrap();
        assert_eq!(back.expand_patterns(), pop.expand_patterns(), "{pop}");
    }
    let a: Pop = "size=4; 1>2; 1>4".parse().unwrap();
    assert_eq!(a.expand_patterns(), Pop::lambda().expand_patterns());
    let b: Pop = "Qkj:5,3".parse().unwrap();
    assert_eq!(b.expand_patterns(), Pop::qj(5, 3).unwrap().expand_patterns());
}

fn arb_pop() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (2usize..=5).prop_flat_map(|k| {
        let pairs: Vec<(usize, usize)> = (1..=k).flat_map(|a| (a + 1..=k).map(move |b| (a, b))).collect();
        (Just(k), proptest::sample::subsequence(pairs.clone(), 0..=pairs.len()), proptest::collection::vec(any::<bool>(), pairs.len()))
            .prop_map(|(k, rel, flips)| {
                let rel = rel.into_iter().zip(flips).map(|((a, b), f)| if f { (a, b) } else { (b, a) }).collect::<Vec<_>>();
                (k, rel)
            })
    })
}

proptest! {
    #[test]
    fn random_pops_count_occurrences((k, rel) in arb_pop(), v in Just((1..=7u8).collect::<Vec<u8>>()).prop_shuffle()) {
        // Random orientations can close a cycle; those are rejected.
        if let Ok(pop) = Pop::new(k, &rel) {
            let p = popav::Permutation::new(v.clone()).unwrap();
            prop_assert_eq!(count_pop_occurrences(&p, &pop), naive_pop_occurrences(&v, k, &rel));
            prop_assert_eq!(pop.linear_extension_count() as u64, naive_linear_extensions(k, &rel));
        }
    }
}
