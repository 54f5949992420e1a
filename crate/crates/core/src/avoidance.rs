//! Avoidance classes: the brute-force oracle over `S_n` and structural
//! generators for the named families, plus their counting sequences.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::counting::{fib, qk_closed_form};
use crate::error::{invalid, Error, Result};
use crate::perm::{inflate_lenient, perm, Permutation, Permutations};
use crate::pop::Pop;
use crate::structures;

pub const DEFAULT_BRUTE_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AvoidTarget {
    Pop(Pop),
    Patterns(Vec<Permutation>),
}

impl AvoidTarget {
    pub fn is_contained_in(&self, pi: &Permutation) -> bool {
        match self {
            AvoidTarget::Pop(p) => p.is_contained_in(pi),
            AvoidTarget::Patterns(ps) => ps.iter().any(|p| pi.contains_pattern(p)),
        }
    }

    pub fn is_avoided_by(&self, pi: &Permutation) -> bool {
        !self.is_contained_in(pi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidanceQuery {
    pub target: AvoidTarget,
    pub n: usize,
}

impl AvoidanceQuery {
    pub fn new(target: AvoidTarget, n: usize) -> Result<Self> {
        if let AvoidTarget::Patterns(ps) = &target {
            if ps.is_empty() {
                return invalid("pattern set must be non-empty");
            }
        }
        Ok(AvoidanceQuery { target, n })
    }

    pub fn pop(p: Pop, n: usize) -> Self {
        AvoidanceQuery { target: AvoidTarget::Pop(p), n }
    }
}

/// Every `n`-permutation avoiding the query target, in lexicographic order.
pub fn brute_force_av(query: &AvoidanceQuery) -> Result<Vec<Permutation>> {
    brute_force_av_with_cap(query, DEFAULT_BRUTE_CAP)
}

pub fn brute_force_av_with_cap(query: &AvoidanceQuery, cap: usize) -> Result<Vec<Permutation>> {
    brute_force_filter(query.n, cap, |p| query.target.is_avoided_by(p))
}

/// Filters `S_n` in parallel, one task per first entry, and returns the
/// matches in lexicographic order.
pub fn brute_force_filter<F>(n: usize, cap: usize, pred: F) -> Result<Vec<Permutation>>
where
    F: Fn(&Permutation) -> bool + Sync,
{
    if n > cap {
        return Err(Error::ResourceLimit { what: "brute force", n, cap });
    }
    if n <= 1 {
        return Ok(Permutations::new(n).filter(|p| pred(p)).collect());
    }
    let top = n as u8;
    let parts: Vec<Vec<Permutation>> = (1..=top)
        .into_par_iter()
        .map(|first| {
            let mut v = vec![first];
            v.extend((1..=top).filter(|&x| x != first));
            let mut p = Permutation::from_vec_unchecked(v);
            let mut out = Vec::new();
            loop {
                if pred(&p) {
                    out.push(p.clone());
                }
                if !p.next_lexicographic() || p.as_slice()[0] != first {
                    break;
                }
            }
            out
        })
        .collect();
    Ok(parts.concat())
}

/// The eight patterns Wilf-equivalent to λ as a class basis.
pub fn p_basis() -> Vec<Permutation> {
    ["2413", "2431", "4213", "3412", "3421", "4231", "4321", "4312"].iter().map(|s| perm(s)).collect()
}

fn id(k: usize) -> Permutation {
    Permutation::identity(k)
}

/// Sum-indecomposable members of `Av_n(λ)`: `2n−3` of them for `n ≥ 2`.
pub fn lambda_indecomposables(n: usize) -> Vec<Permutation> {
    lambda_indecomposable_pairs(n).into_iter().map(|(l, _)| l).collect()
}

/// Sum-indecomposable members of `Av_n(𝒫)`.
pub fn p_basis_indecomposables(n: usize) -> Vec<Permutation> {
    let mut v: Vec<_> = lambda_indecomposable_pairs(n).into_iter().map(|(_, p)| p).collect();
    v.sort();
    v
}

/// The sum-indecomposables of `Av_n(λ)` paired with their images in
/// `Av_n(𝒫)`. Families written with an identity block `I_0` collapse that
/// block away.
pub fn lambda_indecomposable_pairs(n: usize) -> Vec<(Permutation, Permutation)> {
    match n {
        0 => return Vec::new(),
        1 => return vec![(id(1), id(1))],
        2 => return vec![(perm("21"), perm("21"))],
        _ => {}
    }
    let one = id(1);
    let up = perm("12");
    let down = perm("21");
    let mut out = vec![
        (inflate_lenient(&down, &[id(n - 1), one.clone()]), inflate_lenient(&down, &[one.clone(), id(n - 1)])),
        (inflate_lenient(&down, &[id(n - 2), up]), inflate_lenient(&down, &[id(n - 1), one.clone()])),
        (
            inflate_lenient(&down, &[id(n - 2), down.clone()]),
            inflate_lenient(&perm("231"), &[down.clone(), id(n - 3), one.clone()]),
        ),
    ];
    for l in 1..=n - 3 {
        let m = n - l - 2;
        let src = inflate_lenient(&perm("2431"), &[id(l), id(m), one.clone(), one.clone()]);
        let dst = if m == 1 {
            inflate_lenient(&perm("312"), &[one.clone(), id(l), down.clone()])
        } else {
            inflate_lenient(&perm("41352"), &[one.clone(), id(l), one.clone(), id(m - 1), one.clone()])
        };
        out.push((src, dst));
    }
    for l in 1..=n - 3 {
        let m = n - l - 2;
        let src = inflate_lenient(&perm("2413"), &[id(l), id(m), one.clone(), one.clone()]);
        let dst = inflate_lenient(&perm("3142"), &[one.clone(), id(l), id(m), one.clone()]);
        out.push((src, dst));
    }
    out
}

/// `levels[m]` for `m = 0..=n`, where each level is the union over the
/// possible first components `α` of `α ⊕ levels[m − |α|]`.
fn build_by_first_component(n: usize, indecomposables: impl Fn(usize) -> Vec<Permutation>) -> Vec<Vec<Permutation>> {
    let mut levels: Vec<Vec<Permutation>> = vec![vec![Permutation::empty()]];
    let si: Vec<Vec<Permutation>> = (0..=n).map(&indecomposables).collect();
    for m in 1..=n {
        let mut level = Vec::new();
        for i in 1..=m {
            for alpha in &si[i] {
                for beta in &levels[m - i] {
                    level.push(alpha.direct_sum(beta));
                }
            }
        }
        level.sort();
        levels.push(level);
    }
    levels
}

pub fn structured_av_lambda(n: usize) -> Vec<Permutation> {
    build_by_first_component(n, lambda_indecomposables).swap_remove(n)
}

pub fn structured_av_p_basis(n: usize) -> Vec<Permutation> {
    build_by_first_component(n, p_basis_indecomposables).swap_remove(n)
}

/// `Av_n(Q_k)`: the maximum sits in one of the last `k − 1` slots, and
/// deleting it leaves a member of `Av_{n−1}(Q_k)`.
pub fn structured_av_qk(k: usize, n: usize) -> Result<Vec<Permutation>> {
    if k < 2 {
        return invalid(format!("Q_k needs k >= 2, got {k}"));
    }
    let mut level = vec![Permutation::empty()];
    for m in 1..=n {
        let mut next = Vec::new();
        for p in &level {
            let first_slot = m.saturating_sub(k - 2).max(1);
            for pos in first_slot..=m {
                next.push(p.insert_max(pos));
            }
        }
        level = next;
    }
    level.sort();
    Ok(level)
}

fn p3_levels(n: usize) -> Vec<Vec<Permutation>> {
    let one = id(1);
    let down = perm("21");
    let mut levels = vec![vec![Permutation::empty()]];
    for m in 1..=n {
        let mut level: Vec<Permutation> = levels[m - 1].iter().map(|p| p.direct_sum(&one)).collect();
        if m >= 2 {
            level.extend(levels[m - 2].iter().map(|p| p.direct_sum(&down)));
        }
        level.sort();
        levels.push(level);
    }
    levels
}

/// `Av_n(P_3)`: direct sums of blocks `1` and `21`.
pub fn structured_av_p3(n: usize) -> Vec<Permutation> {
    p3_levels(n).swap_remove(n)
}

/// `Av_n(P_4)` split by shape: `A = 1 ⊕ σ`, `B = 21 ⊕ σ` with σ avoiding
/// `P_4`, and `C = σ ⊖ 1`, `D = 3142[1,1,σ,1]` with σ avoiding `P_3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P4Partition {
    pub a: Vec<Permutation>,
    pub b: Vec<Permutation>,
    pub c: Vec<Permutation>,
    pub d: Vec<Permutation>,
}

impl P4Partition {
    pub fn all(&self) -> Vec<Permutation> {
        let mut v: Vec<Permutation> = [&self.a, &self.b, &self.c, &self.d].into_iter().flatten().cloned().collect();
        v.sort();
        v
    }

    pub fn sizes(&self) -> [usize; 4] {
        [self.a.len(), self.b.len(), self.c.len(), self.d.len()]
    }
}

fn p4_parts(n: usize, p4: &[Vec<Permutation>], p3: &[Vec<Permutation>]) -> P4Partition {
    let one = id(1);
    let down = perm("21");
    let a = p4[n - 1].iter().map(|s| one.direct_sum(s)).collect();
    let b = p4[n - 2].iter().map(|s| down.direct_sum(s)).collect();
    let c = p3[n - 1].iter().map(|s| s.skew_sum(&one)).collect();
    let d = p3[n - 3]
        .iter()
        .map(|s| inflate_lenient(&perm("3142"), &[one.clone(), one.clone(), s.clone(), one.clone()]))
        .collect();
    P4Partition { a, b, c, d }
}

fn p4_levels(n: usize) -> Vec<Vec<Permutation>> {
    let p3 = p3_levels(n);
    let mut levels: Vec<Vec<Permutation>> = (0..=n.min(2)).map(|m| Permutations::new(m).collect()).collect();
    for m in 3..=n {
        let parts = p4_parts(m, &levels, &p3);
        levels.push(parts.all());
    }
    levels
}

/// The shape partition of `Av_n(P_4)`; defined for `n ≥ 3`.
pub fn structured_av_p4_partition(n: usize) -> Result<P4Partition> {
    if n < 3 {
        return invalid(format!("the P_4 partition needs n >= 3, got {n}"));
    }
    let p4 = p4_levels(n - 1);
    let p3 = p3_levels(n);
    let mut parts = p4_parts(n, &p4, &p3);
    for v in [&mut parts.a, &mut parts.b, &mut parts.c, &mut parts.d] {
        v.sort();
    }
    Ok(parts)
}

pub fn structured_av_p4(n: usize) -> Vec<Permutation> {
    p4_levels(n).swap_remove(n)
}

/// The sum-indecomposable members of `Av(R_4)`.
pub fn r4_indecomposables() -> Vec<Permutation> {
    ["1", "21", "231", "312", "321", "2413"].iter().map(|s| perm(s)).collect()
}

/// `Av_n(R_4)`: direct sums of the six indecomposables in any order.
pub fn structured_av_r4(n: usize) -> Vec<Permutation> {
    let six = r4_indecomposables();
    build_by_first_component(n, |m| six.iter().filter(|a| a.len() == m).cloned().collect()).swap_remove(n)
}

/// The families with a known count and structural generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Lambda,
    PBasis,
    Qk(usize),
    Qkj(usize, usize),
    P3,
    P4,
    R4,
    /// Bounded signed displacement, not an avoidance class by definition.
    Sfrak,
}

impl Family {
    /// What the family avoids, if it is defined by avoidance.
    pub fn target(&self) -> Result<Option<AvoidTarget>> {
        Ok(Some(match *self {
            Family::Lambda => AvoidTarget::Pop(Pop::lambda()),
            Family::PBasis => AvoidTarget::Patterns(p_basis()),
            Family::Qk(k) => AvoidTarget::Pop(Pop::q(k)?),
            Family::Qkj(k, j) => AvoidTarget::Pop(Pop::qj(k, j)?),
            Family::P3 => AvoidTarget::Pop(Pop::p(3)?),
            Family::P4 => AvoidTarget::Pop(Pop::p(4)?),
            Family::R4 => AvoidTarget::Pop(Pop::r(4)?),
            Family::Sfrak => return Ok(None),
        }))
    }

    /// Membership by definition.
    pub fn contains(&self, pi: &Permutation) -> Result<bool> {
        Ok(match self.target()? {
            Some(t) => t.is_avoided_by(pi),
            None => structures::in_bounded_displacement(pi, 2),
        })
    }

    /// The exhaustive oracle.
    pub fn brute(&self, n: usize, cap: usize) -> Result<Vec<Permutation>> {
        match self.target()? {
            Some(t) => brute_force_filter(n, cap, |p| t.is_avoided_by(p)),
            None => brute_force_filter(n, cap, |p| structures::in_bounded_displacement(p, 2)),
        }
    }

    /// The theorem-driven generator, where one exists.
    pub fn structured(&self, n: usize) -> Result<Option<Vec<Permutation>>> {
        Ok(Some(match *self {
            Family::Lambda => structured_av_lambda(n),
            Family::PBasis => structured_av_p_basis(n),
            Family::Qk(k) => structured_av_qk(k, n)?,
            Family::Qkj(_, _) => return Ok(None),
            Family::P3 => structured_av_p3(n),
            Family::P4 => structured_av_p4(n),
            Family::R4 => structured_av_r4(n),
            Family::Sfrak => structures::gen_bounded_displacement(n),
        }))
    }

    /// Identifier of the vendored reference sequence, if any.
    pub fn fixture_id(&self) -> Option<&'static str> {
        match *self {
            Family::Lambda | Family::PBasis => Some("A111281"),
            Family::Qk(4) => Some("A025192"),
            Family::Qk(5) => Some("A084509"),
            Family::P4 => Some("A045925"),
            Family::R4 | Family::Sfrak => Some("A214663"),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Lambda => f.write_str("lambda"),
            Family::PBasis => f.write_str("P"),
            Family::Qk(k) => write!(f, "Qk:{k}"),
            Family::Qkj(k, j) => write!(f, "Qkj:{k},{j}"),
            Family::P3 => f.write_str("P3"),
            Family::P4 => f.write_str("P4"),
            Family::R4 => f.write_str("R4"),
            Family::Sfrak => f.write_str("Sfrak"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad number in family {s:?}")));
        Ok(match s {
            "lambda" => Family::Lambda,
            "P" => Family::PBasis,
            "P3" => Family::P3,
            "P4" => Family::P4,
            "R4" => Family::R4,
            "Sfrak" => Family::Sfrak,
            _ => {
                if let Some(k) = s.strip_prefix("Qk:") {
                    let k = num(k)?;
                    Pop::q(k)?;
                    Family::Qk(k)
                } else if let Some(rest) = s.strip_prefix("Qkj:") {
                    let (k, j) = rest.split_once(',').ok_or_else(|| Error::Parse(format!("expected Qkj:<k>,<j>, got {s:?}")))?;
                    let (k, j) = (num(k)?, num(j)?);
                    Pop::qj(k, j)?;
                    Family::Qkj(k, j)
                } else {
                    return Err(Error::InvalidInput(format!("unknown family {s:?}")));
                }
            }
        })
    }
}

/// Counts from the closed forms and recursions.
pub fn count_av(family: Family, n: usize) -> Result<BigUint> {
    if n == 0 {
        return invalid("count_av needs n >= 1");
    }
    Ok(match family {
        Family::Lambda | Family::PBasis => lambda_recursion(n),
        Family::Qk(k) | Family::Qkj(k, _) => {
            if k < 2 {
                return invalid(format!("Q_k needs k >= 2, got {k}"));
            }
            qk_closed_form(k, n)
        }
        Family::P3 => fib(n + 1),
        Family::P4 => BigUint::from(n) * fib(n),
        Family::R4 | Family::Sfrak => r4_recursion(n),
    })
}

/// `a_n = Σ_{i=1}^{n} s_i a_{n−i}` with `a_0 = 1`, where `s_i` counts the
/// sum-indecomposables of length `i`: `s_1 = 1` and `s_i = 2i − 3` after.
pub fn lambda_recursion(n: usize) -> BigUint {
    let s = |i: usize| if i == 1 { 1u32 } else { 2 * i as u32 - 3 };
    let mut a = vec![BigUint::one()];
    for m in 1..=n {
        let mut t = BigUint::zero();
        for i in 1..=m {
            t += &a[m - i] * s(i);
        }
        a.push(t);
    }
    a.swap_remove(n)
}

/// `a_n = a_{n−1} + a_{n−2} + 3a_{n−3} + a_{n−4}` with `a_0 = 1` and zero
/// below.
pub fn r4_recursion(n: usize) -> BigUint {
    let mut a = vec![BigUint::one()];
    for m in 1..=n {
        let at = |i: usize| if i <= m { a[m - i].clone() } else { BigUint::zero() };
        let t = at(1) + at(2) + at(3) * 3u32 + at(4);
        a.push(t);
    }
    a.swap_remove(n)
}
