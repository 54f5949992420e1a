//! Simple permutations avoiding 2413, 3412 and 3421.
//!
//! For `n ≥ 4` there are `Fib(n−3)` of them. Each falls in one of three
//! classes read off its first entries:
//!
//! * `A`: starts `(n−1) 1 (n−2)`
//! * `B`: starts `(n−1) (n−3)`
//! * `C`: starts `(n−1) 1 (n−3)`
//!
//! `f_A` and `f_B` grow a member of length `n−2` into classes `A` and `B`;
//! `f_C` grows a class-`B` member of length `n−1` into class `C`. The `g`
//! maps undo them.

use crate::avoidance::brute_force_filter;
use crate::error::{domain, invalid, Error, Result};
use crate::perm::{perm, reduce, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleClass {
    A,
    B,
    C,
}

pub fn forbidden() -> [Permutation; 3] {
    [perm("2413"), perm("3412"), perm("3421")]
}

fn is_member(pi: &Permutation) -> bool {
    pi.is_simple() && pi.avoids_all(&forbidden())
}

/// The class of a member of length `n ≥ 4` from its prefix, checking `A`,
/// then `C`, then `B`. Length 4 has the single member 3142, which lands in
/// `B`.
pub fn classify(pi: &Permutation) -> Option<SimpleClass> {
    let n = pi.len();
    if n < 4 {
        return None;
    }
    let v = |i: usize| pi.get(i).expect("in range");
    if v(1) != n - 1 {
        return None;
    }
    if v(2) == 1 && v(3) == n - 2 {
        Some(SimpleClass::A)
    } else if v(2) == 1 && v(3) == n - 3 {
        Some(SimpleClass::C)
    } else if v(2) == n - 3 {
        Some(SimpleClass::B)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleFamily {
    pub n: usize,
    pub a: Vec<Permutation>,
    pub b: Vec<Permutation>,
    pub c: Vec<Permutation>,
}

impl SimpleFamily {
    pub fn get(&self, class: SimpleClass) -> &[Permutation] {
        match class {
            SimpleClass::A => &self.a,
            SimpleClass::B => &self.b,
            SimpleClass::C => &self.c,
        }
    }

    /// All members, sorted.
    pub fn all(&self) -> Vec<Permutation> {
        let mut v: Vec<Permutation> = self.a.iter().chain(&self.b).chain(&self.c).cloned().collect();
        v.sort();
        v
    }

    pub fn total(&self) -> usize {
        self.a.len() + self.b.len() + self.c.len()
    }

    fn sorted(mut self) -> Self {
        self.a.sort();
        self.b.sort();
        self.c.sort();
        self
    }
}

/// Sorts members of length `n` into their classes.
pub fn split(n: usize, members: &[Permutation]) -> Result<SimpleFamily> {
    let mut fam = SimpleFamily { n, ..Default::default() };
    for p in members {
        match classify(p) {
            Some(SimpleClass::A) => fam.a.push(p.clone()),
            Some(SimpleClass::B) => fam.b.push(p.clone()),
            Some(SimpleClass::C) => fam.c.push(p.clone()),
            None => return domain(format!("{p} fits none of the three classes")),
        }
    }
    Ok(fam.sorted())
}

pub const DEFAULT_SIMPLES_CAP: usize = 10;

/// Filter of `S_n`: simple and avoiding the three patterns.
pub fn brute_simple_avoiders(n: usize) -> Result<Vec<Permutation>> {
    brute_simple_avoiders_with_cap(n, DEFAULT_SIMPLES_CAP)
}

pub fn brute_simple_avoiders_with_cap(n: usize, cap: usize) -> Result<Vec<Permutation>> {
    if n > cap {
        return Err(Error::ResourceLimit { what: "simple avoiders", n, cap });
    }
    brute_force_filter(n, cap, is_member)
}

fn shifted(pi: &Permutation, k: usize) -> impl Iterator<Item = u8> + '_ {
    pi.as_slice().iter().map(move |&x| x + k as u8)
}

/// `(n−1) 1 (π_1+1) … (π_{m−1}+2) (π_m+1)` for `π` of length `m = n−2`.
pub fn f_a(pi: &Permutation) -> Result<Permutation> {
    check_source(pi, 4)?;
    let m = pi.len();
    let n = m + 2;
    let mut v = vec![(n - 1) as u8, 1];
    v.extend(shifted(pi, 1));
    v[m] += 1;
    Permutation::new(v)
}

/// `(n−1) π_1 … π_{m−1} n π_m` for `π` of length `m = n−2`.
pub fn f_b(pi: &Permutation) -> Result<Permutation> {
    check_source(pi, 4)?;
    let m = pi.len();
    let n = m + 2;
    let s = pi.as_slice();
    let mut v = vec![(n - 1) as u8];
    v.extend_from_slice(&s[..m - 1]);
    v.push(n as u8);
    v.push(s[m - 1]);
    Permutation::new(v)
}

/// `(π_1+1) 1 (π_2+1) … (π_{n−1}+1)` for `π` in class `B` of length
/// `n−1 ≥ 5`.
pub fn f_c(pi: &Permutation) -> Result<Permutation> {
    check_source(pi, 5)?;
    if classify(pi) != Some(SimpleClass::B) {
        return domain(format!("{pi} is not in class B"));
    }
    let mut v: Vec<u8> = shifted(pi, 1).collect();
    v.insert(1, 1);
    Permutation::new(v)
}

fn check_source(pi: &Permutation, min_len: usize) -> Result<()> {
    if pi.len() < min_len {
        return domain(format!("{pi} is shorter than {min_len}"));
    }
    if !is_member(pi) {
        return domain(format!("{pi} is not a simple avoider of 2413, 3412, 3421"));
    }
    Ok(())
}

fn check_target(sigma: &Permutation, class: SimpleClass) -> Result<()> {
    if sigma.len() < 6 {
        return domain(format!("{sigma} is shorter than 6"));
    }
    if !is_member(sigma) || classify(sigma) != Some(class) {
        return domain(format!("{sigma} is not in class {class:?}"));
    }
    Ok(())
}

/// `red(σ_{[3,n]})`.
pub fn g_a(sigma: &Permutation) -> Result<Permutation> {
    check_target(sigma, SimpleClass::A)?;
    reduce(&sigma.as_slice()[2..])
}

/// Deletes the first and the second-to-last entries and reduces.
pub fn g_b(sigma: &Permutation) -> Result<Permutation> {
    check_target(sigma, SimpleClass::B)?;
    let n = sigma.len();
    Ok(sigma.delete_position(n - 1).delete_position(1))
}

/// Deletes the entry 1 (second position) and reduces.
pub fn g_c(sigma: &Permutation) -> Result<Permutation> {
    check_target(sigma, SimpleClass::C)?;
    Ok(sigma.delete_position(2))
}

pub fn f(class: SimpleClass, pi: &Permutation) -> Result<Permutation> {
    match class {
        SimpleClass::A => f_a(pi),
        SimpleClass::B => f_b(pi),
        SimpleClass::C => f_c(pi),
    }
}

pub fn g(class: SimpleClass, sigma: &Permutation) -> Result<Permutation> {
    match class {
        SimpleClass::A => g_a(sigma),
        SimpleClass::B => g_b(sigma),
        SimpleClass::C => g_c(sigma),
    }
}

fn fam(n: usize, a: &[&str], b: &[&str], c: &[&str]) -> SimpleFamily {
    let conv = |xs: &[&str]| xs.iter().map(|s| perm(s)).collect();
    SimpleFamily { n, a: conv(a), b: conv(b), c: conv(c) }.sorted()
}

/// Tabulated families for `n = 4..=7`.
pub fn pinned_family(n: usize) -> Option<SimpleFamily> {
    Some(match n {
        4 => fam(4, &[], &["3142"], &[]),
        5 => fam(5, &["41352"], &[], &[]),
        6 => fam(6, &["514263"], &["531462"], &[]),
        7 => fam(7, &["6152473"], &["6413572"], &["6142573"]),
        _ => return None,
    })
}

/// One step of the recursion: `A_n = f_A(all_{n−2})`, `B_n = f_B(all_{n−2})`
/// and `C_n = f_C(B_{n−1})`.
pub fn recursive_step(n: usize, two_back: &SimpleFamily, one_back: &SimpleFamily) -> Result<SimpleFamily> {
    let prev = two_back.all();
    let a = prev.iter().map(f_a).collect::<Result<Vec<_>>>()?;
    let b = prev.iter().map(f_b).collect::<Result<Vec<_>>>()?;
    let c = one_back.b.iter().map(f_c).collect::<Result<Vec<_>>>()?;
    Ok(SimpleFamily { n, a, b, c }.sorted())
}

/// The family of length `n ≥ 4`: tabulated up to 7, recursive beyond.
pub fn gen_simple_family(n: usize) -> Result<SimpleFamily> {
    if n < 4 {
        return invalid(format!("the simple families start at n = 4, got {n}"));
    }
    if let Some(f) = pinned_family(n) {
        return Ok(f);
    }
    let mut two_back = pinned_family(6).expect("pinned");
    let mut one_back = pinned_family(7).expect("pinned");
    for m in 8..=n {
        let next = recursive_step(m, &two_back, &one_back)?;
        two_back = std::mem::replace(&mut one_back, next);
    }
    Ok(one_back)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_brute() {
        assert_eq!(brute_simple_avoiders(4).unwrap(), vec![perm("3142")]);
        assert_eq!(brute_simple_avoiders(6).unwrap(), vec![perm("514263"), perm("531462")]);
        assert!(brute_simple_avoiders(3).unwrap().is_empty());
        assert!(brute_simple_avoiders(11).is_err());
    }

    #[test]
    fn f_and_g_examples() {
        assert_eq!(f_a(&perm("3142")).unwrap(), perm("514263"));
        assert_eq!(f_b(&perm("3142")).unwrap(), perm("531462"));
        assert_eq!(f_c(&perm("531462")).unwrap(), perm("6142573"));
        assert_eq!(g_a(&perm("514263")).unwrap(), perm("3142"));
        assert_eq!(g_b(&perm("531462")).unwrap(), perm("3142"));
        assert_eq!(g_c(&perm("6142573")).unwrap(), perm("531462"));
        assert!(f_a(&perm("2413")).is_err());
        assert!(f_c(&perm("3142")).is_err());
        assert!(g_a(&perm("531462")).is_err());
    }

    #[test]
    fn recursion_reproduces_pins() {
        for n in 6..=7 {
            let step = recursive_step(n, &pinned_family(n - 2).unwrap(), &pinned_family(n - 1).unwrap()).unwrap();
            assert_eq!(step, pinned_family(n).unwrap());
        }
    }

    #[test]
    fn generated_counts() {
        let f8 = gen_simple_family(8).unwrap();
        let mut want: Vec<Permutation> =
            ["71625384", "71642583", "71524683", "75142683", "75314682"].iter().map(|s| perm(s)).collect();
        want.sort();
        assert_eq!(f8.all(), want);
        assert_eq!(gen_simple_family(5).unwrap().all(), vec![perm("41352")]);
        assert_eq!(gen_simple_family(12).unwrap().total(), 34);
        assert!(gen_simple_family(3).is_err());
    }
}
