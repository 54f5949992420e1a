mod common;

use std::collections::BTreeSet;

use common::*;
use popav::fib_simples::*;
use popav::{perm, Permutation};

fn sorted(xs: &[&str]) -> Vec<Permutation> {
    let mut v: Vec<Permutation> = xs.iter().map(|s| perm(s)).collect();
    v.sort();
    v
}

#[test]
fn generated_families_equal_definitional_filter() {
    let forbidden: Vec<Vec<u8>> = ["2413", "3412", "3421"].iter().map(|s| perm(s).into_vec()).collect();
    for n in 4..=8 {
        let want: Vec<Permutation> = all_perms(n)
            .into_iter()
            .filter(|v| naive_is_simple(v) && forbidden.iter().all(|q| !naive_contains(v, q)))
            .map(|v| Permutation::new(v).unwrap())
            .collect();
        assert_eq!(gen_simple_family(n).unwrap().all(), want, "n = {n}");
    }
    for n in 4..=9 {
        assert_eq!(gen_simple_family(n).unwrap().all(), brute_simple_avoiders(n).unwrap(), "n = {n}");
    }
}

#[test]
fn tabulated_members() {
    type Row<'a> = (usize, &'a [&'a str], &'a [&'a str], &'a [&'a str]);
    let table: [Row; 5] = [
        (4, &[], &["3142"], &[]),
        (5, &["41352"], &[], &[]),
        (6, &["514263"], &["531462"], &[]),
        (7, &["6152473"], &["6413572"], &["6142573"]),
        (8, &["71625384", "71642583"], &["75142683", "75314682"], &["71524683"]),
    ];
    for (n, a, b, c) in table {
        let f = gen_simple_family(n).unwrap();
        assert_eq!((f.a, f.b, f.c), (sorted(a), sorted(b), sorted(c)), "n = {n}");
    }
}

#[test]
fn class_sizes_are_fibonacci() {
    for n in 6..=16 {
        let f = gen_simple_family(n).unwrap();
        assert_eq!(f.total() as u64, fib(n - 3), "n = {n}");
        assert_eq!(f.a.len() as u64, fib(n - 5));
        assert_eq!(f.b.len() as u64, fib(n - 5));
        assert_eq!(f.c.len() as u64, fib(n - 6));
    }
}

#[test]
fn prefix_and_position_facts() {
    for n in 4..=14 {
        let f = gen_simple_family(n).unwrap();
        for s in f.all() {
            let v = |i: usize| s.get(i).unwrap();
            assert_eq!(v(1), n - 1, "{s}");
            assert_eq!(v(n - 1), n, "{s}");
            if n >= 5 {
                let cases = [
                    v(2) == 1 && v(3) == n - 2,
                    v(2) == n - 3 && v(n - 2) == n - 2,
                    v(2) == 1 && v(3) == n - 3 && v(n - 2) == n - 2,
                ];
                assert_eq!(cases.iter().filter(|&&x| x).count(), 1, "{s}");
            }
        }
    }
}

#[test]
fn maps_invert_on_each_class() {
    for n in 6..=14 {
        let two = gen_simple_family(n - 2).unwrap();
        let one = gen_simple_family(n - 1).unwrap();
        let cur = gen_simple_family(n).unwrap();
        for (class, src) in [(SimpleClass::A, two.all()), (SimpleClass::B, two.all()), (SimpleClass::C, one.b.clone())] {
            let img: Vec<Permutation> = src.iter().map(|p| f(class, p).unwrap()).collect();
            let set: BTreeSet<&Permutation> = img.iter().collect();
            assert_eq!(set.len(), img.len());
            assert_eq!(set.into_iter().cloned().collect::<Vec<_>>(), cur.get(class).to_vec(), "{class:?}, n = {n}");
            for (p, q) in src.iter().zip(&img) {
                assert_eq!(&g(class, q).unwrap(), p);
            }
        }
    }
}

#[test]
fn members_avoid_2431() {
    let q = perm("2431");
    for n in 4..=14 {
        assert!(gen_simple_family(n).unwrap().all().iter().all(|p| !p.contains_pattern(&q)), "n = {n}");
    }
}
