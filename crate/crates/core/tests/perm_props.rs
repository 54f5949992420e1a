mod common;

use common::*;
use popav::perm::{inflate, reduce, Permutations};
use popav::{perm, Permutation};
use proptest::prelude::*;

fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
    (0..=max).prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle()).prop_map(|v| Permutation::new(v).unwrap())
}

fn arb_distinct(max: usize) -> impl Strategy<Value = Vec<u16>> {
    proptest::collection::hash_set(0u16..1000, 0..=max).prop_map(|s| s.into_iter().collect::<Vec<_>>()).prop_shuffle()
}

#[test]
fn lexicographic_iterator_matches_recursive_listing() {
    for n in 0..=7 {
        let got: Vec<Vec<u8>> = Permutations::new(n).map(Permutation::into_vec).collect();
        assert_eq!(got, all_perms(n), "n = {n}");
    }
}

#[test]
fn simplicity_matches_interval_scan() {
    for n in 1..=8 {
        for v in all_perms(n) {
            let p = Permutation::new(v.clone()).unwrap();
            assert_eq!(p.is_simple(), naive_is_simple(&v), "{p}");
        }
    }
}

#[test]
fn simples_contain_the_four_small_patterns() {
    let small = [perm("132"), perm("213"), perm("231"), perm("312")];
    for n in 4..=8 {
        for p in Permutations::new(n).filter(Permutation::is_simple) {
            for s in &small {
                assert!(p.contains_pattern(s), "{p} avoids {s}");
            }
        }
    }
}

#[test]
fn decompose_round_trips_and_quotient_is_simple() {
    for n in 1..=8 {
        for p in Permutations::new(n) {
            let d = p.decompose().unwrap();
            assert!(d.quotient.is_simple(), "{p}");
            assert_eq!(d.inflate().unwrap(), p);
            assert_eq!(inflate(&d.quotient, &d.blocks).unwrap(), p);
        }
    }
}

#[test]
fn canonical_first_block_for_sums() {
    for p in Permutations::new(6) {
        let d = p.decompose().unwrap();
        if d.quotient == perm("12") {
            assert!(naive_sum_indecomposable(d.blocks[0].as_slice()), "{p}");
        }
        if d.quotient == perm("21") {
            let rev: Vec<u8> = d.blocks[0].as_slice().iter().map(|&x| d.blocks[0].len() as u8 + 1 - x).collect();
            assert!(naive_sum_indecomposable(&rev), "{p}");
        }
    }
}

#[test]
fn sum_components_reassemble() {
    for p in Permutations::new(7) {
        let comps = p.sum_components();
        assert!(comps.iter().all(|c| naive_sum_indecomposable(c.as_slice())));
        let back = comps.iter().fold(Permutation::empty(), |acc, c| acc.direct_sum(c));
        assert_eq!(back, p);
        let skew = p.skew_components().iter().fold(Permutation::empty(), |acc, c| acc.skew_sum(c));
        assert_eq!(skew, p);
    }
}

proptest! {
    #[test]
    fn reduce_is_idempotent_and_rank_based(s in arb_distinct(12)) {
        let r = reduce(&s).unwrap();
        prop_assert_eq!(r.as_slice(), &naive_reduce(&s)[..]);
        prop_assert_eq!(reduce(r.as_slice()).unwrap(), r);
    }

    #[test]
    fn sums_are_associative(a in arb_perm(5), b in arb_perm(5), c in arb_perm(5)) {
        prop_assert_eq!(a.direct_sum(&b).direct_sum(&c), a.direct_sum(&b.direct_sum(&c)));
        prop_assert_eq!(a.skew_sum(&b).skew_sum(&c), a.skew_sum(&b.skew_sum(&c)));
        prop_assert_eq!(a.direct_sum(&b).len(), a.len() + b.len());
        prop_assert_eq!(a.skew_sum(&b).len(), a.len() + b.len());
    }

    #[test]
    fn containment_matches_subset_search(p in arb_perm(8), q in arb_perm(4)) {
        prop_assert_eq!(p.contains_pattern(&q), naive_contains(p.as_slice(), q.as_slice()));
    }

    #[test]
    fn avoidance_is_inherited_by_deletions(p in arb_perm(8), q in arb_perm(3), i in 1usize..9) {
        prop_assume!(!p.is_empty() && !q.is_empty());
        let i = (i - 1) % p.len() + 1;
        if !p.contains_pattern(&q) {
            prop_assert!(!p.delete_position(i).contains_pattern(&q));
        }
    }

    #[test]
    fn inverse_is_an_involution(p in arb_perm(10)) {
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        for v in 1..=p.len() {
            prop_assert_eq!(p.get(p.inverse().get(v).unwrap()), Some(v));
        }
    }

    #[test]
    fn text_round_trips(p in arb_perm(14)) {
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn intervals_match_definition((p, i, j) in arb_perm(9).prop_filter("non-empty", |p| !p.is_empty()).prop_flat_map(|p| {
        let n = p.len();
        (Just(p), 1..=n).prop_flat_map(move |(p, i)| (Just(p), Just(i), i..=n))
    })) {
        prop_assert_eq!(p.is_interval(i, j).unwrap(), naive_is_interval(p.as_slice(), i - 1, j - 1));
    }
}
