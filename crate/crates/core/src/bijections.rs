//! Explicit bijections between the families, each with its inverse, and
//! an oracle-backed checker that enumerates both sides exhaustively.
//!
//! Every map checks membership of its argument before doing anything else
//! and answers [`Error::Domain`] on a non-member.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::avoidance::{brute_force_filter, lambda_indecomposable_pairs, p_basis, Family};
use crate::error::{domain, invalid, Error, Result};
use crate::fib_simples::{self, SimpleClass};
use crate::perm::{inflate_lenient, perm, Permutation};
use crate::pop::Pop;
use crate::structures::{
    gen_compositions, gen_ground_juggling, gen_marked_compositions, gen_shrub_forests, in_bounded_displacement,
    is_shrub_forest, Composition, JugglingSequence, MarkedComposition,
};

fn need(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        domain(msg())
    }
}

// ---- Av(λ) and Av(𝒫) ----

fn indecomposable_table(lengths: impl Iterator<Item = usize>, forward: bool) -> HashMap<Permutation, Permutation> {
    let mut table = HashMap::new();
    for n in lengths {
        for (l, p) in lambda_indecomposable_pairs(n) {
            if forward {
                table.insert(l, p);
            } else {
                table.insert(p, l);
            }
        }
    }
    table
}

fn map_components(pi: &Permutation, forward: bool) -> Result<Permutation> {
    let comps = pi.sum_components();
    let table = indecomposable_table(comps.iter().map(Permutation::len).collect::<HashSet<_>>().into_iter(), forward);
    let mut out = Permutation::empty();
    for c in &comps {
        let img = table.get(c).ok_or_else(|| Error::Domain(format!("{c} is not a listed indecomposable")))?;
        out = out.direct_sum(img);
    }
    Ok(out)
}

/// Maps each sum component of a λ-avoider through the indecomposable
/// table.
pub fn lambda_to_p(pi: &Permutation) -> Result<Permutation> {
    need(!Pop::lambda().is_contained_in(pi), || format!("{pi} contains lambda"))?;
    map_components(pi, true)
}

pub fn p_to_lambda(pi: &Permutation) -> Result<Permutation> {
    need(pi.avoids_all(&p_basis()), || format!("{pi} contains a pattern of the basis"))?;
    map_components(pi, false)
}

// ---- juggling ----

/// `π_{t_i + i − b} = i`.
pub fn juggling_to_avq(t: &JugglingSequence) -> Permutation {
    let slots = t.landings();
    let mut v = vec![0u8; slots.len()];
    for (i, s) in slots.into_iter().enumerate() {
        v[s - 1] = (i + 1) as u8;
    }
    Permutation::from_vec_unchecked(v)
}

/// `t_i = pos(i) − i + b`.
pub fn avq_to_juggling(pi: &Permutation, balls: usize) -> Result<JugglingSequence> {
    if balls == 0 {
        return invalid("a juggling sequence needs at least one ball");
    }
    let q = Pop::q(balls + 2)?;
    need(!q.is_contained_in(pi), || format!("{pi} contains Q_{}", balls + 2))?;
    let inv = pi.inverse();
    let throws = inv.values().enumerate().map(|(i, p)| p + balls - (i + 1)).collect();
    JugglingSequence::new(throws, balls)
}

// ---- shrub forests ----

fn shrub_heads() -> [(Permutation, usize); 3] {
    // (block following the leading 1, offset of n from the end)
    [(perm("132"), 0), (perm("123"), 1), (perm("213"), 2)]
}

/// `Av_n(Q_4) → 𝒫_{3n−3}`, recursing on where `n` sits among the last three
/// slots.
pub fn avq4_to_shrub(pi: &Permutation) -> Result<Permutation> {
    need(pi.len() >= 2, || format!("{pi} is shorter than 2"))?;
    need(!Pop::q(4)?.is_contained_in(pi), || format!("{pi} contains Q_4"))?;
    Ok(shrub_forward(pi))
}

fn shrub_forward(pi: &Permutation) -> Permutation {
    let n = pi.len();
    if n == 2 {
        return if pi.is_identity() { perm("123") } else { perm("132") };
    }
    let pos = pi.position_of(n).expect("max present");
    let from_end = n - pos;
    let head = shrub_heads().into_iter().find(|(_, off)| *off == from_end).expect("Q_4 avoider").0;
    let inner = shrub_forward(&pi.delete_position(pos));
    let tail = crate::perm::reduce(&inner.as_slice()[1..]).expect("distinct");
    perm("1").direct_sum(&head).direct_sum(&tail)
}

pub fn shrub_to_avq4(pi: &Permutation) -> Result<Permutation> {
    need(is_shrub_forest(pi).unwrap_or(false), || format!("{pi} is not a shrub forest"))?;
    Ok(shrub_backward(pi))
}

fn shrub_backward(pi: &Permutation) -> Permutation {
    if pi.len() == 3 {
        return if pi.is_identity() { perm("12") } else { perm("21") };
    }
    let v = pi.as_slice();
    let head = crate::perm::reduce(&v[1..4]).expect("distinct");
    let off = shrub_heads().into_iter().find(|(h, _)| *h == head).expect("shrub forest").1;
    let tail = crate::perm::reduce(&v[4..]).expect("distinct");
    let inner = shrub_backward(&perm("1").direct_sum(&tail));
    let m = inner.len() + 1;
    inner.insert_max(m - off)
}

// ---- Q_k and Q_{k,j} ----

/// Swaps the entries in positions 1 and `j`.
///
/// This is a bijection `Av_n(Q_k) → Av_n(Q_{k,j})` only while `n ≤ k`;
/// [`qk_to_qkj`] is the bijection for every `n`.
pub fn qkj_conjugate(pi: &Permutation, j: usize, k: usize) -> Result<Permutation> {
    if j == 0 || j > k || k > pi.len() {
        return invalid(format!("need 1 <= j <= k <= n, got j={j}, k={k}, n={}", pi.len()));
    }
    let mut v = pi.as_slice().to_vec();
    v.swap(0, j - 1);
    Ok(Permutation::from_vec_unchecked(v))
}

/// `c_v`: how many entries smaller than `v` lie to its right.
fn right_smaller_code(pi: &Permutation) -> Vec<usize> {
    let v = pi.as_slice();
    let mut code = vec![0usize; v.len() + 1];
    for (i, &x) in v.iter().enumerate() {
        code[x as usize] = v[i + 1..].iter().filter(|&&y| y < x).count();
    }
    code
}

fn from_right_smaller_code(code: &[usize]) -> Permutation {
    let mut v: Vec<u8> = Vec::with_capacity(code.len());
    for val in 1..code.len() {
        v.insert(val - 1 - code[val], val as u8);
    }
    Permutation::from_vec_unchecked(v)
}

fn check_qkj(k: usize, j: usize) -> Result<()> {
    Pop::qj(k, j).map(|_| ())
}

/// `Av_n(Q_k) → Av_n(Q_{k,j})`. An entry `v ≥ k` may have at most `k − 2`
/// smaller entries to its right in a `Q_k` avoider; the codes from `k − j`
/// upward are moved to the top of the range, where `v` has at most `j − 2`
/// smaller entries to its left.
pub fn qk_to_qkj(pi: &Permutation, k: usize, j: usize) -> Result<Permutation> {
    check_qkj(k, j)?;
    need(!Pop::q(k)?.is_contained_in(pi), || format!("{pi} contains Q_{k}"))?;
    let mut code = right_smaller_code(pi);
    for v in k..code.len() {
        if code[v] >= k - j {
            code[v] += v + 1 - k;
        }
    }
    Ok(from_right_smaller_code(&code))
}

pub fn qkj_to_qk(pi: &Permutation, k: usize, j: usize) -> Result<Permutation> {
    check_qkj(k, j)?;
    need(!Pop::qj(k, j)?.is_contained_in(pi), || format!("{pi} contains Q_{{{k},{j}}}"))?;
    let mut code = right_smaller_code(pi);
    for v in k..code.len() {
        if code[v] >= k - j {
            code[v] -= v + 1 - k;
        }
    }
    Ok(from_right_smaller_code(&code))
}

// ---- compositions and Av(P_3), Av(P_4) ----

fn compose_blocks(parts: &[u8]) -> Permutation {
    let one = perm("1");
    let down = perm("21");
    parts.iter().fold(Permutation::empty(), |acc, &p| acc.direct_sum(if p == 1 { &one } else { &down }))
}

/// Reads the blocks `1` and `21` off a direct sum of them.
fn read_blocks(pi: &Permutation) -> Result<Vec<u8>> {
    let v = pi.as_slice();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < v.len() {
        if v[i] as usize == i + 1 {
            parts.push(1);
            i += 1;
        } else if i + 1 < v.len() && v[i] as usize == i + 2 && v[i + 1] as usize == i + 1 {
            parts.push(2);
            i += 2;
        } else {
            return domain(format!("{pi} is not a sum of blocks 1 and 21"));
        }
    }
    Ok(parts)
}

/// `12…k[α_1,…,α_k]` with `α_i = 1` for a part 1 and `21` for a part 2.
pub fn comp_to_avp3(c: &Composition) -> Permutation {
    compose_blocks(c.parts())
}

pub fn avp3_to_comp(pi: &Permutation) -> Result<Composition> {
    need(!pi.is_empty(), || "empty permutation".into())?;
    Composition::new(read_blocks(pi)?)
}

/// Marked compositions of `n + 1` onto `Av_n(P_4)`, by the final summand:
/// unmarked 1 gives `1 ⊕ g(rest)`, unmarked 2 gives `21 ⊕ g(rest)`, a
/// marked `1+1` gives `f(rest) ⊖ 1` and a marked `2+2` gives
/// `3142[1,1,f(rest),1]`, where `f` is the composition map.
pub fn marked_to_avp4(m: &MarkedComposition) -> Permutation {
    marked_forward(m.parts(), m.mark() - 1)
}

fn marked_forward(parts: &[u8], mark0: usize) -> Permutation {
    let k = parts.len();
    let last = parts[k - 1];
    if mark0 + 2 == k {
        let f = compose_blocks(&parts[..k - 2]);
        let one = perm("1");
        if last == 1 {
            f.skew_sum(&one)
        } else {
            inflate_lenient(&perm("3142"), &[one.clone(), one.clone(), f, one])
        }
    } else {
        let rest = marked_forward(&parts[..k - 1], mark0);
        let head = if last == 1 { perm("1") } else { perm("21") };
        head.direct_sum(&rest)
    }
}

pub fn avp4_to_marked(pi: &Permutation) -> Result<MarkedComposition> {
    need(!pi.is_empty(), || "empty permutation".into())?;
    need(!Pop::p(4)?.is_contained_in(pi), || format!("{pi} contains P_4"))?;
    let (parts, mark) = marked_backward(pi)?;
    MarkedComposition::new(parts, mark)
}

/// Returns the parts and the 1-based mark.
fn marked_backward(pi: &Permutation) -> Result<(Vec<u8>, usize)> {
    let v = pi.as_slice();
    let n = v.len();
    if v[n - 1] == 1 {
        let alpha = Permutation::from_vec_unchecked(v[..n - 1].iter().map(|&x| x - 1).collect());
        let mut parts = read_blocks(&alpha)?;
        let mark = parts.len() + 1;
        parts.extend([1, 1]);
        return Ok((parts, mark));
    }
    if n >= 3 && v[0] == 3 && v[1] == 1 && v[n - 1] == 2 {
        let alpha = Permutation::from_vec_unchecked(v[2..n - 1].iter().map(|&x| x - 3).collect());
        let mut parts = read_blocks(&alpha)?;
        let mark = parts.len() + 1;
        parts.extend([2, 2]);
        return Ok((parts, mark));
    }
    let comps = pi.sum_components();
    if comps.len() < 2 {
        return domain(format!("{pi} matches no case of the inverse"));
    }
    let first = &comps[0];
    let part = match first.len() {
        1 => 1,
        2 => 2,
        _ => return domain(format!("{pi} starts with the component {first}")),
    };
    let rest = Permutation::from_vec_unchecked(v[first.len()..].iter().map(|&x| x - first.len() as u8).collect());
    let (mut parts, mark) = marked_backward(&rest)?;
    parts.push(part);
    Ok((parts, mark))
}

// ---- Av(R_4) and 𝔖_n ----

fn hat(alpha: &Permutation) -> Permutation {
    if *alpha == perm("2413") {
        perm("3142")
    } else {
        alpha.clone()
    }
}

fn unhat(gamma: &Permutation) -> Permutation {
    if *gamma == perm("3142") {
        perm("2413")
    } else {
        gamma.clone()
    }
}

/// `Av_n(R_4) → 𝔖_n`. Up to length 4 this is the identity except
/// `2413 ↦ 3142`; beyond that, with `α` the first sum component and
/// `π = α ⊕ β`, the image is `θ(β) ⊕ α̂`, where `α̂` swaps 2413 for 3142.
pub fn avr4_to_bounded(pi: &Permutation) -> Result<Permutation> {
    need(!Pop::r(4)?.is_contained_in(pi), || format!("{pi} contains R_4"))?;
    Ok(r4_forward(pi))
}

fn r4_forward(pi: &Permutation) -> Permutation {
    if pi.len() <= 4 {
        return hat(pi);
    }
    let alpha = pi.sum_components().swap_remove(0);
    let beta = Permutation::from_vec_unchecked(pi.as_slice()[alpha.len()..].iter().map(|&x| x - alpha.len() as u8).collect());
    r4_forward(&beta).direct_sum(&hat(&alpha))
}

pub fn bounded_to_avr4(pi: &Permutation) -> Result<Permutation> {
    need(in_bounded_displacement(pi, 2), || format!("{pi} has a displacement partial sum above 2"))?;
    Ok(r4_backward(pi))
}

fn r4_backward(pi: &Permutation) -> Permutation {
    if pi.len() <= 4 {
        return unhat(pi);
    }
    let gamma = pi.sum_components().pop().expect("non-empty");
    let cut = pi.len() - gamma.len();
    let delta = Permutation::from_vec_unchecked(pi.as_slice()[..cut].to_vec());
    unhat(&gamma).direct_sum(&r4_backward(&delta))
}

// ---- registry and verification ----

/// The bijections known to the checker and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bijection {
    LambdaToP,
    CompToP3,
    MarkedToP4,
    Juggling { balls: usize },
    Shrub,
    R4ToSfrak,
    QkToQkj { k: usize, j: usize },
    /// The plain position swap; not a bijection once `n > k`.
    QkjSwap { k: usize, j: usize },
    Simples(SimpleClass),
}

impl Bijection {
    pub fn name(&self) -> &'static str {
        match self {
            Bijection::LambdaToP => "lambda-to-P",
            Bijection::CompToP3 => "comp-to-P3",
            Bijection::MarkedToP4 => "marked-to-P4",
            Bijection::Juggling { .. } => "juggling",
            Bijection::Shrub => "shrub",
            Bijection::R4ToSfrak => "R4-to-Sfrak",
            Bijection::QkToQkj { .. } => "qk-to-qkj",
            Bijection::QkjSwap { .. } => "qkj-swap",
            Bijection::Simples(SimpleClass::A) => "simples-A",
            Bijection::Simples(SimpleClass::B) => "simples-B",
            Bijection::Simples(SimpleClass::C) => "simples-C",
        }
    }

    pub const NAMES: [&'static str; 11] = [
        "lambda-to-P",
        "comp-to-P3",
        "marked-to-P4",
        "juggling",
        "shrub",
        "R4-to-Sfrak",
        "qk-to-qkj",
        "qkj-swap",
        "simples-A",
        "simples-B",
        "simples-C",
    ];

    /// Looks a bijection up by name. `balls` feeds the juggling map, `k`
    /// and `j` the `Q_{k,j}` maps.
    pub fn from_name(name: &str, balls: Option<usize>, k: Option<usize>, j: Option<usize>) -> Result<Self> {
        let kj = || -> Result<(usize, usize)> {
            let k = k.ok_or_else(|| Error::InvalidInput(format!("{name} needs --k")))?;
            let j = j.ok_or_else(|| Error::InvalidInput(format!("{name} needs --j")))?;
            check_qkj(k, j)?;
            Ok((k, j))
        };
        Ok(match name {
            "lambda-to-P" => Bijection::LambdaToP,
            "comp-to-P3" => Bijection::CompToP3,
            "marked-to-P4" => Bijection::MarkedToP4,
            "juggling" => {
                let balls = balls.ok_or_else(|| Error::InvalidInput("juggling needs --balls".into()))?;
                if balls == 0 {
                    return invalid("juggling needs at least one ball");
                }
                Bijection::Juggling { balls }
            }
            "shrub" => Bijection::Shrub,
            "R4-to-Sfrak" => Bijection::R4ToSfrak,
            "qk-to-qkj" => {
                let (k, j) = kj()?;
                Bijection::QkToQkj { k, j }
            }
            "qkj-swap" => {
                let (k, j) = kj()?;
                Bijection::QkjSwap { k, j }
            }
            "simples-A" => Bijection::Simples(SimpleClass::A),
            "simples-B" => Bijection::Simples(SimpleClass::B),
            "simples-C" => Bijection::Simples(SimpleClass::C),
            other => return invalid(format!("unknown bijection {other:?}; known: {}", Bijection::NAMES.join(", "))),
        })
    }

    /// Applies the map (or its inverse) to an element in text form.
    pub fn apply(&self, input: &str, inverse: bool) -> Result<String> {
        let p = |s: &str| s.parse::<Permutation>();
        Ok(match (*self, inverse) {
            (Bijection::LambdaToP, false) => lambda_to_p(&p(input)?)?.to_string(),
            (Bijection::LambdaToP, true) => p_to_lambda(&p(input)?)?.to_string(),
            (Bijection::CompToP3, false) => comp_to_avp3(&input.parse()?).to_string(),
            (Bijection::CompToP3, true) => avp3_to_comp(&p(input)?)?.to_string(),
            (Bijection::MarkedToP4, false) => marked_to_avp4(&input.parse()?).to_string(),
            (Bijection::MarkedToP4, true) => avp4_to_marked(&p(input)?)?.to_string(),
            (Bijection::Juggling { balls }, false) => juggling_to_avq(&JugglingSequence::parse(input, balls)?).to_string(),
            (Bijection::Juggling { balls }, true) => avq_to_juggling(&p(input)?, balls)?.to_string(),
            (Bijection::Shrub, false) => avq4_to_shrub(&p(input)?)?.to_string(),
            (Bijection::Shrub, true) => shrub_to_avq4(&p(input)?)?.to_string(),
            (Bijection::R4ToSfrak, false) => avr4_to_bounded(&p(input)?)?.to_string(),
            (Bijection::R4ToSfrak, true) => bounded_to_avr4(&p(input)?)?.to_string(),
            (Bijection::QkToQkj { k, j }, false) => qk_to_qkj(&p(input)?, k, j)?.to_string(),
            (Bijection::QkToQkj { k, j }, true) => qkj_to_qk(&p(input)?, k, j)?.to_string(),
            (Bijection::QkjSwap { k, j }, _) => qkj_conjugate(&p(input)?, j, k)?.to_string(),
            (Bijection::Simples(c), false) => fib_simples::f(c, &p(input)?)?.to_string(),
            (Bijection::Simples(c), true) => fib_simples::g(c, &p(input)?)?.to_string(),
        })
    }

    /// Bijections swept by [`verify_all`] at length `n`.
    pub fn sweep(n: usize) -> Vec<Bijection> {
        let mut v = vec![Bijection::LambdaToP, Bijection::CompToP3, Bijection::MarkedToP4];
        v.extend((1..=3).map(|balls| Bijection::Juggling { balls }));
        if n >= 2 {
            v.push(Bijection::Shrub);
        }
        v.push(Bijection::R4ToSfrak);
        v.extend((1..=4).map(|j| Bijection::QkToQkj { k: 4, j }));
        if n >= 6 {
            v.extend([SimpleClass::A, SimpleClass::B, SimpleClass::C].map(Bijection::Simples));
        }
        v
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bijection::Juggling { balls } => write!(f, "juggling(b={balls})"),
            Bijection::QkToQkj { k, j } => write!(f, "qk-to-qkj(k={k},j={j})"),
            Bijection::QkjSwap { k, j } => write!(f, "qkj-swap(k={k},j={j})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for Bijection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Bijection::from_name(s, None, None, None)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BijectionReport {
    pub family: String,
    pub n: usize,
    pub domain_size: usize,
    pub codomain_size: usize,
    /// Every image lies in the codomain and the images are distinct and
    /// cover it.
    pub forward_ok: bool,
    /// Both round trips are the identity.
    pub inverse_ok: bool,
    pub is_bijection: bool,
    pub mismatches: Vec<String>,
}

const MAX_MISMATCHES: usize = 10;

fn check_maps<D, F, G>(family: String, n: usize, domain: Vec<D>, codomain: Vec<Permutation>, fwd: F, inv: G) -> BijectionReport
where
    D: Clone + Eq + Hash + fmt::Display + Send + Sync,
    F: Fn(&D) -> Result<Permutation> + Sync,
    G: Fn(&Permutation) -> Result<D> + Sync,
{
    let mut mismatches = Vec::new();
    let note = |m: String, list: &mut Vec<String>| {
        if list.len() < MAX_MISMATCHES {
            list.push(m);
        }
    };
    let target: HashSet<&Permutation> = codomain.iter().collect();

    let images: Vec<Result<Permutation>> = domain.par_iter().map(&fwd).collect();
    let mut forward_ok = true;
    let mut seen: HashSet<&Permutation> = HashSet::new();
    for (d, img) in domain.iter().zip(&images) {
        match img {
            Err(e) => {
                forward_ok = false;
                note(format!("forward({d}) failed: {e}"), &mut mismatches);
            }
            Ok(p) if !target.contains(p) => {
                forward_ok = false;
                note(format!("forward({d}) = {p} lies outside the codomain"), &mut mismatches);
            }
            Ok(p) => {
                if !seen.insert(p) {
                    forward_ok = false;
                    note(format!("forward({d}) = {p} is hit twice"), &mut mismatches);
                }
            }
        }
    }
    if forward_ok && seen.len() != target.len() {
        forward_ok = false;
        let missed = codomain.iter().find(|c| !seen.contains(c)).expect("some element missed");
        note(format!("{missed} is not in the image"), &mut mismatches);
    }

    let back: Vec<Option<String>> = domain
        .par_iter()
        .zip(images.par_iter())
        .map(|(d, img)| {
            let img = img.as_ref().ok()?;
            match inv(img) {
                Ok(x) if x == *d => None,
                Ok(x) => Some(format!("inverse(forward({d})) = {x}")),
                Err(e) => Some(format!("inverse({img}) failed: {e}")),
            }
        })
        .collect();
    let ahead: Vec<Option<String>> = codomain
        .par_iter()
        .map(|c| match inv(c).and_then(|x| fwd(&x)) {
            Ok(y) if y == *c => None,
            Ok(y) => Some(format!("forward(inverse({c})) = {y}")),
            Err(e) => Some(format!("round trip from {c} failed: {e}")),
        })
        .collect();
    let mut inverse_ok = images.iter().all(Result::is_ok);
    for m in back.into_iter().chain(ahead).flatten() {
        inverse_ok = false;
        note(m, &mut mismatches);
    }

    BijectionReport {
        family,
        n,
        domain_size: domain.len(),
        codomain_size: codomain.len(),
        forward_ok,
        inverse_ok,
        is_bijection: forward_ok && inverse_ok && domain.len() == codomain.len(),
        mismatches,
    }
}

/// Enumerates the domain and codomain at length `n` with oracles and checks
/// the map both ways. `cap` bounds every brute-force enumeration.
///
/// For the shrub map `n` is the length of the `Q_4` avoider; its codomain is
/// the brute-force filter of `S_{3n−3}` when that fits under `cap`, and the
/// recursive generator screened by the membership predicate otherwise.
pub fn verify_bijection(bij: Bijection, n: usize, cap: usize) -> Result<BijectionReport> {
    let family = bij.to_string();
    let brute = |f: Family, m: usize| f.brute(m, cap);
    Ok(match bij {
        Bijection::LambdaToP => {
            check_maps(family, n, brute(Family::Lambda, n)?, brute(Family::PBasis, n)?, lambda_to_p, p_to_lambda)
        }
        Bijection::CompToP3 => check_maps(
            family,
            n,
            gen_compositions(n),
            brute(Family::P3, n)?,
            |c| Ok(comp_to_avp3(c)),
            avp3_to_comp,
        ),
        Bijection::MarkedToP4 => check_maps(
            family,
            n,
            gen_marked_compositions(n + 1),
            brute(Family::P4, n)?,
            |m| Ok(marked_to_avp4(m)),
            avp4_to_marked,
        ),
        Bijection::Juggling { balls } => check_maps(
            family,
            n,
            gen_ground_juggling(n, balls)?,
            brute(Family::Qk(balls + 2), n)?,
            |t| Ok(juggling_to_avq(t)),
            |p| avq_to_juggling(p, balls),
        ),
        Bijection::Shrub => {
            if n < 2 {
                return invalid("the shrub map needs n >= 2");
            }
            let len = 3 * (n - 1);
            let codomain = if len <= cap {
                brute_force_filter(len, cap, |p| is_shrub_forest(p).unwrap_or(false))?
            } else {
                gen_shrub_forests(n - 1)?.into_iter().filter(|p| is_shrub_forest(p).unwrap_or(false)).collect()
            };
            check_maps(family, n, brute(Family::Qk(4), n)?, codomain, avq4_to_shrub, shrub_to_avq4)
        }
        Bijection::R4ToSfrak => {
            check_maps(family, n, brute(Family::R4, n)?, brute(Family::Sfrak, n)?, avr4_to_bounded, bounded_to_avr4)
        }
        Bijection::QkToQkj { k, j } => check_maps(
            family,
            n,
            brute(Family::Qk(k), n)?,
            brute(Family::Qkj(k, j), n)?,
            |p| qk_to_qkj(p, k, j),
            |p| qkj_to_qk(p, k, j),
        ),
        Bijection::QkjSwap { k, j } => check_maps(
            family,
            n,
            brute(Family::Qk(k), n)?,
            brute(Family::Qkj(k, j), n)?,
            |p| qkj_conjugate(p, j, k),
            |p| qkj_conjugate(p, j, k),
        ),
        Bijection::Simples(class) => {
            if n < 6 {
                return invalid("the simple-permutation maps need n >= 6");
            }
            let domain = match class {
                SimpleClass::A | SimpleClass::B => fib_simples::brute_simple_avoiders_with_cap(n - 2, cap)?,
                SimpleClass::C => fib_simples::split(n - 1, &fib_simples::brute_simple_avoiders_with_cap(n - 1, cap)?)?.b,
            };
            let codomain = fib_simples::split(n, &fib_simples::brute_simple_avoiders_with_cap(n, cap)?)?.get(class).to_vec();
            check_maps(family, n, domain, codomain, |p| fib_simples::f(class, p), |p| fib_simples::g(class, p))
        }
    })
}

/// Runs every bijection of [`Bijection::sweep`] at length `n`.
pub fn verify_all(n: usize, cap: usize) -> Result<Vec<BijectionReport>> {
    Bijection::sweep(n).into_iter().map(|b| verify_bijection(b, n, cap)).collect()
}
