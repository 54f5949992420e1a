//! Definitional oracles, written without the library's algorithms.
#![allow(dead_code)]

/// All permutations of `1..=n` in lexicographic order, by recursive choice.
pub fn all_perms(n: usize) -> Vec<Vec<u8>> {
    fn go(n: usize, used: &mut Vec<bool>, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                cur.push(v as u8);
                go(n, used, cur, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
    out
}

/// All `k`-subsets of `0..n` as increasing index lists.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Rank of each entry among the entries.
pub fn naive_reduce<T: Ord>(s: &[T]) -> Vec<u8> {
    s.iter().map(|x| (s.iter().filter(|y| *y < x).count() + 1) as u8).collect()
}

pub fn naive_contains(text: &[u8], pat: &[u8]) -> bool {
    combinations(text.len(), pat.len()).iter().any(|idx| {
        let sub: Vec<u8> = idx.iter().map(|&i| text[i]).collect();
        naive_reduce(&sub) == pat
    })
}

/// Occurrences of a POP given by relations `(a, b)` meaning label `a` is
/// below label `b`, by checking every position subset.
pub fn naive_pop_occurrences(text: &[u8], size: usize, relations: &[(usize, usize)]) -> u64 {
    combinations(text.len(), size)
        .iter()
        .filter(|idx| relations.iter().all(|&(a, b)| text[idx[a - 1]] < text[idx[b - 1]]))
        .count() as u64
}

pub fn naive_pop_contains(text: &[u8], size: usize, relations: &[(usize, usize)]) -> bool {
    naive_pop_occurrences(text, size, relations) > 0
}

/// Orderings of labels consistent with the relations.
pub fn naive_linear_extensions(size: usize, relations: &[(usize, usize)]) -> u64 {
    all_perms(size)
        .iter()
        .filter(|order| {
            let pos = |l: usize| order.iter().position(|&x| x as usize == l).unwrap();
            relations.iter().all(|&(a, b)| pos(a) < pos(b))
        })
        .count() as u64
}

/// Positions `i..=j` (0-based) hold a contiguous set of values.
pub fn naive_is_interval(v: &[u8], i: usize, j: usize) -> bool {
    let w = &v[i..=j];
    let lo = *w.iter().min().unwrap() as usize;
    let hi = *w.iter().max().unwrap() as usize;
    hi - lo == j - i
}

pub fn naive_is_simple(v: &[u8]) -> bool {
    let n = v.len();
    (0..n).all(|i| (i + 1..n).all(|j| (i == 0 && j == n - 1) || !naive_is_interval(v, i, j)))
}

/// No proper prefix of length `k` is a permutation of `1..=k`.
pub fn naive_sum_indecomposable(v: &[u8]) -> bool {
    let mut max = 0;
    for (k, &x) in v.iter().enumerate().take(v.len().saturating_sub(1)) {
        max = max.max(x as usize);
        if max == k + 1 {
            return false;
        }
    }
    !v.is_empty()
}

pub fn fib(n: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Laplace expansion along the first row.
pub fn naive_permanent(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .filter(|&j| m[0][j] != 0)
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
            m[0][j] as i128 * naive_permanent(&minor)
        })
        .sum()
}

/// Ground-state juggling by the landing-time characterization: the map
/// `i ↦ t_i + i − b` is a permutation of `1..=n`.
pub fn naive_is_ground_juggling(t: &[usize], b: usize) -> bool {
    let n = t.len();
    let mut seen = vec![false; n + 1];
    for (i, &ti) in t.iter().enumerate() {
        let land = ti as i64 + i as i64 + 1 - b as i64;
        if land < 1 || land > n as i64 || seen[land as usize] {
            return false;
        }
        seen[land as usize] = true;
    }
    true
}

/// Every partial sum of `π_i − i` is at most `bound`.
pub fn naive_bounded_displacement(v: &[u8], bound: i64) -> bool {
    (1..=v.len()).all(|k| v[..k].iter().enumerate().map(|(i, &x)| x as i64 - i as i64 - 1).sum::<i64>() <= bound)
}

pub fn to_text(v: &[u8]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(if v.len() > 9 { "," } else { "" })
}
