//! Permutations in one-line notation and the basic algebra on them:
//! reduction, intervals, direct and skew sums, inflation, substitution
//! decomposition and classical pattern containment.
//!
//! Values and positions are 1-based in every public signature. Entries are
//! stored as `u8`, so a permutation has at most [`MAX_LEN`] entries.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// Longest permutation representable by [`Permutation`].
pub const MAX_LEN: usize = u8::MAX as usize;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    /// Builds a permutation from its one-line notation, checking that the
    /// entries are exactly `1..=n`.
    pub fn new(values: Vec<u8>) -> Result<Self> {
        if values.len() > MAX_LEN {
            return invalid(format!("length {} exceeds {MAX_LEN}", values.len()));
        }
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let v = v as usize;
            if v == 0 || v > n {
                return invalid(format!("entry {v} out of range 1..={n}"));
            }
            if seen[v] {
                return invalid(format!("entry {v} repeated"));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn from_one_based(values: &[usize]) -> Result<Self> {
        let mut out = Vec::with_capacity(values.len());
        for &v in values {
            match u8::try_from(v) {
                Ok(b) => out.push(b),
                Err(_) => return invalid(format!("entry {v} out of range")),
            }
        }
        Permutation::new(out)
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok(), "{values:?}");
        Permutation(values)
    }

    /// The increasing permutation `12…n`.
    ///
    /// # Panics
    /// If `n > MAX_LEN`.
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_LEN, "identity of length {n} exceeds {MAX_LEN}");
        Permutation((1..=n as u8).collect())
    }

    /// The decreasing permutation `n…21`.
    pub fn decreasing(n: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.0.reverse();
        p
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u8> {
        self.0
    }

    /// Entries as `usize`, left to right.
    pub fn values(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&v| v as usize)
    }

    /// The entry at 1-based position `i`.
    pub fn get(&self, i: usize) -> Option<usize> {
        if i == 0 {
            return None;
        }
        self.0.get(i - 1).map(|&v| v as usize)
    }

    /// The factor at 1-based inclusive positions `i..=j`.
    pub fn factor(&self, i: usize, j: usize) -> Result<&[u8]> {
        self.check_window(i, j)?;
        Ok(&self.0[i - 1..j])
    }

    fn check_window(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || i > j || j > self.len() {
            return invalid(format!("window ({i}, {j}) outside 1..={}", self.len()));
        }
        Ok(())
    }

    /// 1-based position of value `v`.
    pub fn position_of(&self, v: usize) -> Option<usize> {
        self.0.iter().position(|&x| x as usize == v).map(|p| p + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u8;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// True iff the entries at positions `i..=j` form a contiguous range.
    pub fn is_interval(&self, i: usize, j: usize) -> Result<bool> {
        let w = self.factor(i, j)?;
        let lo = *w.iter().min().expect("non-empty window");
        let hi = *w.iter().max().expect("non-empty window");
        Ok((hi - lo) as usize == j - i)
    }

    /// Only the trivial intervals. Lengths 1 and 2 are simple; the empty
    /// permutation is not.
    pub fn is_simple(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return false;
        }
        let v = &self.0;
        for i in 0..n {
            let (mut lo, mut hi) = (v[i], v[i]);
            for j in i + 1..n {
                lo = lo.min(v[j]);
                hi = hi.max(v[j]);
                if (hi - lo) as usize == j - i && !(i == 0 && j == n - 1) {
                    return false;
                }
            }
        }
        true
    }

    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.len();
        assert!(shift + other.len() <= MAX_LEN, "sum too long");
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&x| x + shift as u8));
        Permutation(v)
    }

    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        let shift = other.len();
        assert!(shift + self.len() <= MAX_LEN, "sum too long");
        let mut v: Vec<u8> = self.0.iter().map(|&x| x + shift as u8).collect();
        v.extend_from_slice(&other.0);
        Permutation(v)
    }

    /// Lengths of the prefixes that are permutations of `1..=k`, excluding
    /// the empty prefix and including `n`.
    fn sum_cuts(&self) -> Vec<usize> {
        let mut cuts = Vec::new();
        let mut mx = 0u8;
        for (k, &x) in self.0.iter().enumerate() {
            mx = mx.max(x);
            if mx as usize == k + 1 {
                cuts.push(k + 1);
            }
        }
        cuts
    }

    fn skew_cuts(&self) -> Vec<usize> {
        let n = self.len();
        let mut cuts = Vec::new();
        let mut mn = u8::MAX;
        for (k, &x) in self.0.iter().enumerate() {
            mn = mn.min(x);
            if mn as usize == n - k {
                cuts.push(k + 1);
            }
        }
        cuts
    }

    pub fn is_sum_decomposable(&self) -> bool {
        self.sum_cuts().len() > 1
    }

    pub fn is_skew_decomposable(&self) -> bool {
        self.skew_cuts().len() > 1
    }

    /// Splits into sum-indecomposable components, so that the direct sum of
    /// the result is `self`. Empty input gives an empty list.
    pub fn sum_components(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut start = 0;
        for cut in self.sum_cuts() {
            let block = self.0[start..cut].iter().map(|&x| x - start as u8).collect();
            out.push(Permutation(block));
            start = cut;
        }
        out
    }

    /// Splits into skew-indecomposable components.
    pub fn skew_components(&self) -> Vec<Permutation> {
        let n = self.len();
        let mut out = Vec::new();
        let mut start = 0;
        for cut in self.skew_cuts() {
            let floor = (n - cut) as u8;
            out.push(Permutation(self.0[start..cut].iter().map(|&x| x - floor).collect()));
            start = cut;
        }
        out
    }

    /// Avoids both 2413 and 3142.
    pub fn is_separable(&self) -> bool {
        !self.is_empty()
            && !contains_slice(&self.0, &[2, 4, 1, 3])
            && !contains_slice(&self.0, &[3, 1, 4, 2])
    }

    /// Some subsequence of `self` reduces to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        contains_slice(&self.0, &pattern.0)
    }

    pub fn avoids_all(&self, patterns: &[Permutation]) -> bool {
        patterns.iter().all(|p| !self.contains_pattern(p))
    }

    /// Deletes the entry at 1-based position `i` and reduces.
    pub fn delete_position(&self, i: usize) -> Permutation {
        assert!(i >= 1 && i <= self.len(), "position {i} out of range");
        let removed = self.0[i - 1];
        Permutation(
            self.0
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != i - 1)
                .map(|(_, &x)| if x > removed { x - 1 } else { x })
                .collect(),
        )
    }

    /// Inserts the new maximum `n+1` so that it lands at 1-based position `pos`.
    pub fn insert_max(&self, pos: usize) -> Permutation {
        assert!(pos >= 1 && pos <= self.len() + 1, "position {pos} out of range");
        assert!(self.len() < MAX_LEN, "permutation too long");
        let mut v = self.0.clone();
        v.insert(pos - 1, (self.len() + 1) as u8);
        Permutation(v)
    }

    /// Advances to the lexicographic successor in place. Returns `false`
    /// (leaving `self` unchanged) at the last permutation.
    pub fn next_lexicographic(&mut self) -> bool {
        let v = &mut self.0;
        let n = v.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }

    /// Substitution decomposition. The quotient is simple; for quotients
    /// 12 and 21 the first block is sum- (resp. skew-) indecomposable.
    pub fn decompose(&self) -> Result<Decomposition> {
        let n = self.len();
        if n == 0 {
            return invalid("cannot decompose the empty permutation");
        }
        if n == 1 {
            return Ok(Decomposition {
                quotient: Permutation::identity(1),
                blocks: vec![self.clone()],
            });
        }
        let sum = self.sum_cuts();
        if sum.len() > 1 {
            let k = sum[0];
            let first = Permutation(self.0[..k].to_vec());
            let rest = Permutation(self.0[k..].iter().map(|&x| x - k as u8).collect());
            return Ok(Decomposition { quotient: Permutation(vec![1, 2]), blocks: vec![first, rest] });
        }
        let skew = self.skew_cuts();
        if skew.len() > 1 {
            let k = skew[0];
            let floor = (n - k) as u8;
            let first = Permutation(self.0[..k].iter().map(|&x| x - floor).collect());
            let rest = Permutation(self.0[k..].to_vec());
            return Ok(Decomposition { quotient: Permutation(vec![2, 1]), blocks: vec![first, rest] });
        }
        // Neither sum nor skew decomposable: the quotient is simple of length
        // at least 4 and every proper interval lies inside one block, so the
        // longest proper interval at each block start is the block.
        let v = &self.0;
        let mut bounds = Vec::new();
        let mut i = 0;
        while i < n {
            let (mut lo, mut hi) = (v[i], v[i]);
            let mut end = i;
            for j in i + 1..n {
                lo = lo.min(v[j]);
                hi = hi.max(v[j]);
                if (hi - lo) as usize == j - i && !(i == 0 && j == n - 1) {
                    end = j;
                }
            }
            bounds.push((i, end));
            i = end + 1;
        }
        let reps: Vec<u8> = bounds.iter().map(|&(s, _)| v[s]).collect();
        let quotient = reduce(&reps)?;
        let blocks = bounds
            .iter()
            .map(|&(s, e)| reduce(&v[s..=e]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Decomposition { quotient, blocks })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub quotient: Permutation,
    pub blocks: Vec<Permutation>,
}

impl Decomposition {
    pub fn inflate(&self) -> Result<Permutation> {
        inflate(&self.quotient, &self.blocks)
    }
}

/// The permutation with the same relative order as `seq`.
pub fn reduce<T: Ord>(seq: &[T]) -> Result<Permutation> {
    if seq.len() > MAX_LEN {
        return invalid(format!("length {} exceeds {MAX_LEN}", seq.len()));
    }
    let mut order: Vec<usize> = (0..seq.len()).collect();
    order.sort_by(|&a, &b| seq[a].cmp(&seq[b]));
    if order.windows(2).any(|w| seq[w[0]] == seq[w[1]]) {
        return invalid("sequence has repeated entries");
    }
    let mut out = vec![0u8; seq.len()];
    for (rank, &idx) in order.iter().enumerate() {
        out[idx] = (rank + 1) as u8;
    }
    Ok(Permutation(out))
}

/// `sigma[blocks…]`: replaces the point of `sigma` at position `i` by an
/// interval order-isomorphic to `blocks[i]`.
pub fn inflate(sigma: &Permutation, blocks: &[Permutation]) -> Result<Permutation> {
    if blocks.len() != sigma.len() {
        return invalid(format!("{} blocks for a quotient of length {}", blocks.len(), sigma.len()));
    }
    if blocks.iter().any(Permutation::is_empty) {
        return invalid("inflation blocks must be non-empty");
    }
    inflate_unchecked(sigma, blocks)
}

fn inflate_unchecked(sigma: &Permutation, blocks: &[Permutation]) -> Result<Permutation> {
    let total: usize = blocks.iter().map(Permutation::len).sum();
    if total > MAX_LEN {
        return invalid(format!("inflation length {total} exceeds {MAX_LEN}"));
    }
    let k = sigma.len();
    let mut size_at_value = vec![0usize; k + 1];
    for (i, &s) in sigma.0.iter().enumerate() {
        size_at_value[s as usize] = blocks[i].len();
    }
    let mut offset = vec![0usize; k + 1];
    for v in 2..=k {
        offset[v] = offset[v - 1] + size_at_value[v - 1];
    }
    let mut out = Vec::with_capacity(total);
    for (i, &s) in sigma.0.iter().enumerate() {
        let off = offset[s as usize] as u8;
        out.extend(blocks[i].0.iter().map(|&x| x + off));
    }
    Ok(Permutation(out))
}

/// Inflation that tolerates empty blocks by dropping the corresponding
/// points of `sigma` first. Used for families written with `I_0`.
pub(crate) fn inflate_lenient(sigma: &Permutation, blocks: &[Permutation]) -> Permutation {
    assert_eq!(blocks.len(), sigma.len());
    let keep: Vec<usize> = (0..blocks.len()).filter(|&i| !blocks[i].is_empty()).collect();
    let reps: Vec<u8> = keep.iter().map(|&i| sigma.0[i]).collect();
    let quotient = reduce(&reps).expect("distinct");
    let kept: Vec<Permutation> = keep.iter().map(|&i| blocks[i].clone()).collect();
    inflate_unchecked(&quotient, &kept).expect("length within bounds")
}

/// Order-isomorphic embedding search. For each pattern index the nearest
/// earlier pattern entries below and above it bound the admissible text
/// values, so each candidate costs O(1).
pub(crate) fn contains_slice(text: &[u8], pat: &[u8]) -> bool {
    let k = pat.len();
    if k == 0 {
        return true;
    }
    if k > text.len() {
        return false;
    }
    let bounds = neighbour_bounds(pat);
    let mut chosen = vec![0u8; k];
    search(text, &bounds, 0, 0, &mut chosen)
}

fn neighbour_bounds(pat: &[u8]) -> Vec<(Option<usize>, Option<usize>)> {
    (0..pat.len())
        .map(|d| {
            let below = (0..d).filter(|&m| pat[m] < pat[d]).max_by_key(|&m| pat[m]);
            let above = (0..d).filter(|&m| pat[m] > pat[d]).min_by_key(|&m| pat[m]);
            (below, above)
        })
        .collect()
}

fn search(
    text: &[u8],
    bounds: &[(Option<usize>, Option<usize>)],
    depth: usize,
    start: usize,
    chosen: &mut [u8],
) -> bool {
    let k = bounds.len();
    if depth == k {
        return true;
    }
    let (below, above) = bounds[depth];
    let lo = below.map_or(0, |m| u16::from(chosen[m]));
    let hi = above.map_or(u16::MAX, |m| u16::from(chosen[m]));
    for idx in start..=text.len() - (k - depth) {
        let x = text[idx];
        if u16::from(x) > lo && u16::from(x) < hi {
            chosen[depth] = x;
            if search(text, bounds, depth + 1, idx + 1, chosen) {
                return true;
            }
        }
    }
    false
}

/// Lexicographic iterator over all permutations of length `n`.
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Permutation>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations { next: Some(Permutation::identity(n)) }
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if succ.next_lexicographic() {
            self.next = Some(succ);
        }
        Some(current)
    }
}

impl fmt::Display for Permutation {
    /// Digit string when `n ≤ 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            for (i, v) in self.0.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d > 0 => Ok(d as usize),
                    _ => Err(Error::Parse(format!("bad digit {c:?} in {s:?}"))),
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_one_based(&values).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    }
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<u8>) -> Result<Self> {
        Permutation::new(v)
    }
}

/// Parses a permutation literal, panicking on malformed input. Handy in
/// tables of constants and tests.
pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap_or_else(|e| panic!("bad permutation literal {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&[1, 5, 7, 6]).unwrap(), perm("1243"));
        assert_eq!(reduce(&[3, 1, 2]).unwrap(), perm("312"));
        assert_eq!(reduce(&[4, 2, 3]).unwrap(), perm("312"));
        assert!(reduce(&[1, 1]).is_err());
    }

    #[test]
    fn containment_examples() {
        assert!(perm("42531").contains_pattern(&perm("312")));
        assert!(!perm("132465").contains_pattern(&perm("312")));
        assert!(!perm("123456").contains_pattern(&perm("21")));
        assert!(!perm("12").contains_pattern(&perm("123")));
    }

    #[test]
    fn intervals() {
        let p = perm("1435726");
        assert!(p.is_interval(2, 4).unwrap());
        assert!(!p.is_interval(3, 5).unwrap());
        assert!(p.is_interval(5, 5).unwrap());
        assert!(p.is_interval(0, 2).is_err());
        assert!(p.is_interval(3, 8).is_err());
    }

    #[test]
    fn simplicity() {
        assert!(perm("526314").is_simple());
        assert!(!perm("4215763").is_simple());
        assert!(!perm("231").is_simple());
        assert!(perm("1").is_simple());
        assert!(perm("21").is_simple());
        assert!(!Permutation::empty().is_simple());
    }

    #[test]
    fn sums() {
        assert_eq!(perm("21").direct_sum(&perm("1")), perm("213"));
        assert_eq!(perm("1").skew_sum(&perm("21")), perm("321"));
        assert_eq!(perm("2413").direct_sum(&perm("1")), perm("24135"));
    }

    #[test]
    fn inflation() {
        let blocks = [perm("1"), perm("21"), perm("132"), perm("1")];
        assert_eq!(inflate(&perm("3142"), &blocks).unwrap(), perm("4215763"));
        assert_eq!(inflate(&perm("12"), &[perm("21"), perm("21")]).unwrap(), perm("2143"));
        assert!(inflate(&perm("12"), &[perm("1")]).is_err());
        assert!(inflate(&perm("12"), &[perm("1"), Permutation::empty()]).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let d = perm("4215763").decompose().unwrap();
        assert_eq!(d.quotient, perm("3142"));
        assert_eq!(d.blocks, vec![perm("1"), perm("21"), perm("132"), perm("1")]);

        let d = perm("2413").decompose().unwrap();
        assert_eq!(d.quotient, perm("2413"));
        assert_eq!(d.blocks, vec![perm("1"); 4]);

        let d = perm("123").decompose().unwrap();
        assert_eq!(d.quotient, perm("12"));
        assert_eq!(d.blocks, vec![perm("1"), perm("12")]);

        let d = perm("24135").decompose().unwrap();
        assert_eq!(d.blocks, vec![perm("2413"), perm("1")]);

        let d = perm("321").decompose().unwrap();
        assert_eq!(d.quotient, perm("21"));
        assert_eq!(d.blocks, vec![perm("1"), perm("21")]);

        assert!(Permutation::empty().decompose().is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(perm("3241").inverse(), perm("4213"));
        assert_eq!(perm("312").inverse(), perm("231"));
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
    }

    #[test]
    fn separability() {
        assert!(perm("587694231").is_separable());
        assert!(!perm("2413").is_separable());
        assert!(!perm("3142").is_separable());
        assert!(Permutation::identity(4).is_sum_decomposable());
        assert!(Permutation::decreasing(4).is_skew_decomposable());
    }

    #[test]
    fn components() {
        let p = perm("2143576");
        assert_eq!(p.sum_components(), vec![perm("21"), perm("21"), perm("1"), perm("21")]);
        assert_eq!(perm("4312").skew_components(), vec![perm("1"), perm("1"), perm("12")]);
    }

    #[test]
    fn text_forms() {
        let long = Permutation::identity(10);
        assert_eq!(long.to_string(), "1,2,3,4,5,6,7,8,9,10");
        assert_eq!("1,2,3,4,5,6,7,8,9,10".parse::<Permutation>().unwrap(), long);
        assert_eq!("3,1,2".parse::<Permutation>().unwrap(), perm("312"));
        assert!("1203".parse::<Permutation>().is_err());
        assert!("113".parse::<Permutation>().is_err());
        assert!("14".parse::<Permutation>().is_err());
    }

    #[test]
    fn lexicographic_iteration() {
        let all: Vec<String> = Permutations::new(3).map(|p| p.to_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(Permutations::new(0).count(), 1);
        assert_eq!(Permutations::new(6).count(), 720);
    }

    #[test]
    fn deletion_and_insertion() {
        assert_eq!(perm("4213").delete_position(1), perm("213"));
        assert_eq!(perm("213").insert_max(2), perm("2413"));
        assert_eq!(perm("21").insert_max(3), perm("213"));
    }
}
