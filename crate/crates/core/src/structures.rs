//! Compositions into ones and twos, marked compositions, ground-state
//! juggling sequences, shrub forests and bounded-displacement permutations.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::perm::{perm, reduce, Permutation};

/// A composition of `n` with every part 1 or 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u8>,
}

impl Composition {
    pub fn new(parts: Vec<u8>) -> Result<Self> {
        check_parts(&parts)?;
        if parts.is_empty() {
            return invalid("a composition needs at least one part");
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }
}

fn check_parts(parts: &[u8]) -> Result<()> {
    match parts.iter().find(|&&p| p != 1 && p != 2) {
        Some(p) => invalid(format!("part {p} is not 1 or 2")),
        None => Ok(()),
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u8]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str("+")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Vec<u8>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('+')
        .map(|t| match t.trim() {
            "1" => Ok(1),
            "2" => Ok(2),
            other => Err(Error::Parse(format!("bad part {other:?}"))),
        })
        .collect()
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

/// All compositions of `n` into ones and twos, lexicographic in the parts.
pub fn gen_compositions(n: usize) -> Vec<Composition> {
    raw_compositions(n).into_iter().map(|parts| Composition { parts }).collect()
}

/// Part sequences of `n`, including the empty sequence for `n = 0`.
pub(crate) fn raw_compositions(n: usize) -> Vec<Vec<u8>> {
    fn go(rest: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=2u8 {
            if p as usize <= rest {
                cur.push(p);
                go(rest - p as usize, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

/// A composition into ones and twos with one level (two equal adjacent
/// parts) marked. `mark` is the 1-based index of the first part of the
/// marked level.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedComposition {
    parts: Vec<u8>,
    mark: usize,
}

impl MarkedComposition {
    pub fn new(parts: Vec<u8>, mark: usize) -> Result<Self> {
        check_parts(&parts)?;
        if mark == 0 || mark >= parts.len() {
            return invalid(format!("mark {mark} outside 1..{}", parts.len()));
        }
        if parts[mark - 1] != parts[mark] {
            return invalid(format!("no level at mark {mark}"));
        }
        Ok(MarkedComposition { parts, mark })
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn mark(&self) -> usize {
        self.mark
    }

    pub fn total(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Index (0..4) of the suffix type: ends in an unmarked 1, an unmarked 2,
    /// a marked `1+1`, or a marked `2+2`.
    pub fn suffix_type(&self) -> usize {
        let k = self.parts.len();
        let last = self.parts[k - 1];
        match (self.mark == k - 1, last) {
            (false, 1) => 0,
            (false, _) => 1,
            (true, 1) => 2,
            (true, _) => 3,
        }
    }
}

impl fmt::Display for MarkedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.mark - 1;
        if m > 0 {
            write_parts(f, &self.parts[..m])?;
            f.write_str("+")?;
        }
        f.write_str("[")?;
        write_parts(f, &self.parts[m..m + 2])?;
        f.write_str("]")?;
        if m + 2 < self.parts.len() {
            f.write_str("+")?;
            write_parts(f, &self.parts[m + 2..])?;
        }
        Ok(())
    }
}

impl FromStr for MarkedComposition {
    type Err = Error;

    /// Parses `1+[1+1]+2`: the marked level sits in brackets.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let open = s.find('[').ok_or_else(|| Error::Parse(format!("no marked level in {s:?}")))?;
        let close = s.find(']').ok_or_else(|| Error::Parse(format!("unclosed bracket in {s:?}")))?;
        if close < open || s[close + 1..].contains('[') || s[close + 1..].contains(']') {
            return Err(Error::Parse(format!("malformed marked composition {s:?}")));
        }
        let left = &s[..open];
        let right = &s[close + 1..];
        let left = if left.is_empty() {
            ""
        } else {
            left.strip_suffix('+').ok_or_else(|| Error::Parse(format!("expected '+' before '[' in {s:?}")))?
        };
        let right = if right.is_empty() {
            ""
        } else {
            right.strip_prefix('+').ok_or_else(|| Error::Parse(format!("expected '+' after ']' in {s:?}")))?
        };
        let mut parts = parse_parts(left)?;
        let level = parse_parts(&s[open + 1..close])?;
        if level.len() != 2 {
            return Err(Error::Parse(format!("the marked level must have two parts in {s:?}")));
        }
        let mark = parts.len() + 1;
        parts.extend(level);
        parts.extend(parse_parts(right)?);
        MarkedComposition::new(parts, mark).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Every (composition of `n`, level) pair, lexicographic in the parts and
/// then by mark position. Empty for `n < 2`.
pub fn gen_marked_compositions(n: usize) -> Vec<MarkedComposition> {
    let mut out = Vec::new();
    for parts in raw_compositions(n) {
        for m in 1..parts.len() {
            if parts[m - 1] == parts[m] {
                out.push(MarkedComposition { parts: parts.clone(), mark: m });
            }
        }
    }
    out
}

/// `ℒ_n` built by appending the final summand: an unmarked 1 or 2 to a
/// smaller marked composition, or a marked `1+1` / `2+2` to a plain one.
/// Blocks are indexed like [`MarkedComposition::suffix_type`].
pub fn marked_suffix_partition(n: usize) -> [Vec<MarkedComposition>; 4] {
    let mut blocks: [Vec<MarkedComposition>; 4] = Default::default();
    let append = |m: &MarkedComposition, p: u8| {
        let mut parts = m.parts.clone();
        parts.push(p);
        MarkedComposition { parts, mark: m.mark }
    };
    let level = |parts: Vec<u8>, p: u8| {
        let mark = parts.len() + 1;
        let mut parts = parts;
        parts.extend([p, p]);
        MarkedComposition { parts, mark }
    };
    if n >= 1 {
        blocks[0] = gen_marked_compositions(n - 1).iter().map(|m| append(m, 1)).collect();
    }
    if n >= 2 {
        blocks[1] = gen_marked_compositions(n - 2).iter().map(|m| append(m, 2)).collect();
        blocks[2] = raw_compositions(n - 2).into_iter().map(|c| level(c, 1)).collect();
    }
    if n >= 4 {
        blocks[3] = raw_compositions(n - 4).into_iter().map(|c| level(c, 2)).collect();
    }
    for b in &mut blocks {
        b.sort();
    }
    blocks
}

/// A periodic throw sequence `t_1..t_n` for `b` balls.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JugglingSequence {
    throws: Vec<usize>,
    balls: usize,
}

impl JugglingSequence {
    /// Validates that `i ↦ t_i + i − b` permutes `1..=n`.
    pub fn new(throws: Vec<usize>, balls: usize) -> Result<Self> {
        if balls == 0 {
            return invalid("a juggling sequence needs at least one ball");
        }
        if landing_slots(&throws, balls).is_none() {
            return invalid(format!("{} is not a ground-state sequence for {balls} ball(s)", join(&throws)));
        }
        Ok(JugglingSequence { throws, balls })
    }

    pub fn throws(&self) -> &[usize] {
        &self.throws
    }

    pub fn balls(&self) -> usize {
        self.balls
    }

    pub fn period(&self) -> usize {
        self.throws.len()
    }

    /// Landing slot `t_i + i − b` of each beat, 1-based.
    pub fn landings(&self) -> Vec<usize> {
        landing_slots(&self.throws, self.balls).expect("validated on construction")
    }

    /// Parses a comma-separated throw list.
    pub fn parse(s: &str, balls: usize) -> Result<Self> {
        let throws = parse_throws(s)?;
        let throws: Vec<usize> = throws
            .into_iter()
            .map(|t| usize::try_from(t).map_err(|_| Error::InvalidInput(format!("negative throw {t}"))))
            .collect::<Result<_>>()?;
        JugglingSequence::new(throws, balls)
    }
}

fn join(t: &[usize]) -> String {
    t.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn parse_throws(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad throw {t:?}"))))
        .collect()
}

fn landing_slots(throws: &[usize], balls: usize) -> Option<Vec<usize>> {
    let n = throws.len();
    let mut seen = vec![false; n + 1];
    let mut out = Vec::with_capacity(n);
    for (i, &t) in throws.iter().enumerate() {
        let slot = (t + i + 1).checked_sub(balls)?;
        if slot == 0 || slot > n || seen[slot] {
            return None;
        }
        seen[slot] = true;
        out.push(slot);
    }
    Some(out)
}

impl fmt::Display for JugglingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.throws))
    }
}

/// Whether `throws` is a ground-state sequence for `balls` balls.
pub fn is_ground_state_juggling(throws: &[i64], balls: usize) -> Result<bool> {
    if let Some(t) = throws.iter().find(|&&t| t < 0) {
        return invalid(format!("negative throw {t}"));
    }
    let throws: Vec<usize> = throws.iter().map(|&t| t as usize).collect();
    Ok(balls >= 1 && landing_slots(&throws, balls).is_some())
}

/// All ground-state sequences of period `n` with `b` balls, in
/// lexicographic order of the throws.
pub fn gen_ground_juggling(n: usize, b: usize) -> Result<Vec<JugglingSequence>> {
    if b == 0 {
        return invalid("a juggling sequence needs at least one ball");
    }
    fn go(i: usize, n: usize, b: usize, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<JugglingSequence>) {
        if i > n {
            out.push(JugglingSequence { throws: cur.clone(), balls: b });
            return;
        }
        for slot in i.saturating_sub(b).max(1)..=n {
            if !used[slot] {
                used[slot] = true;
                cur.push(slot + b - i);
                go(i + 1, n, b, used, cur, out);
                cur.pop();
                used[slot] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(1, n, b, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
    Ok(out)
}

/// Shrub-forest membership: avoids 231, 312 and 321, and each consecutive
/// triple has its first entry smallest.
pub fn is_shrub_forest(pi: &Permutation) -> Result<bool> {
    if pi.is_empty() || !pi.len().is_multiple_of(3) {
        return invalid(format!("length {} is not a positive multiple of 3", pi.len()));
    }
    let v = pi.as_slice();
    let heaps_ok = v.chunks(3).all(|t| t[0] < t[1] && t[0] < t[2]);
    Ok(heaps_ok && pi.avoids_all(&[perm("231"), perm("312"), perm("321")]))
}

/// `𝒫_{3n}` by the recursion `1 ⊕ τ ⊕ red(π_{[2,3n−3]})`, sorted.
pub fn gen_shrub_forests(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return invalid("shrub forests need n >= 1");
    }
    let mut level = vec![perm("123"), perm("132")];
    let heads: Vec<Permutation> =
        ["123", "132", "213"].iter().map(|t| perm("1").direct_sum(&perm(t))).collect();
    for _ in 2..=n {
        let mut next = Vec::with_capacity(level.len() * 3);
        for head in &heads {
            for p in &level {
                let tail = reduce(&p.as_slice()[1..]).expect("distinct");
                next.push(head.direct_sum(&tail));
            }
        }
        next.sort();
        level = next;
    }
    Ok(level)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisplacementProfile {
    pub perm: Permutation,
    /// `Σ_{j≤i} (π_j − j)` for `i = 1..=n`.
    pub partial_sums: Vec<i64>,
}

impl DisplacementProfile {
    pub fn max(&self) -> i64 {
        self.partial_sums.iter().copied().max().unwrap_or(0)
    }
}

pub fn displacement_profile(pi: &Permutation) -> DisplacementProfile {
    let mut acc = 0i64;
    let partial_sums = pi
        .values()
        .enumerate()
        .map(|(i, v)| {
            acc += v as i64 - (i as i64 + 1);
            acc
        })
        .collect();
    DisplacementProfile { perm: pi.clone(), partial_sums }
}

/// Every displacement partial sum is at most `bound`.
pub fn in_bounded_displacement(pi: &Permutation, bound: i64) -> bool {
    let mut acc = 0i64;
    for (i, v) in pi.values().enumerate() {
        acc += v as i64 - (i as i64 + 1);
        if acc > bound {
            return false;
        }
    }
    true
}

/// Suffix blocks for the bounded-displacement recursion.
pub fn displacement_suffixes() -> Vec<Permutation> {
    ["1", "21", "231", "312", "321", "3142"].iter().map(|s| perm(s)).collect()
}

/// `𝔖_n` as `α ⊕ β` with `β` one of the six suffix blocks, sorted.
pub fn gen_bounded_displacement(n: usize) -> Vec<Permutation> {
    let six = displacement_suffixes();
    let mut levels: Vec<Vec<Permutation>> = vec![vec![Permutation::empty()]];
    for m in 1..=n {
        let mut level = Vec::new();
        for beta in six.iter().filter(|b| b.len() <= m) {
            for alpha in &levels[m - beta.len()] {
                level.push(alpha.direct_sum(beta));
            }
        }
        level.sort();
        levels.push(level);
    }
    levels.swap_remove(n)
}
