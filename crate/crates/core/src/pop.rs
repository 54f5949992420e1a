//! Partially ordered patterns.
//!
//! A POP of size `k` is a strict partial order on the labels `1..=k`. A
//! permutation contains it when some subsequence of length `k` assigns
//! values to the labels, in positional order, that respect every relation.

use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};
use crate::perm::{Permutation, Permutations};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pop {
    size: usize,
    /// Relations as supplied, `(a, b)` meaning `a < b`.
    relations: Vec<(usize, usize)>,
    /// `less[a][b]` for 0-based labels, transitively closed.
    less: Vec<Vec<bool>>,
}

impl Pop {
    /// Builds a POP from relations `(a, b)` meaning label `a` is below label
    /// `b`. The transitive closure is taken; cycles are rejected.
    pub fn new(size: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if size == 0 {
            return invalid("POP size must be positive");
        }
        let mut less = vec![vec![false; size]; size];
        for &(a, b) in relations {
            if a == 0 || b == 0 || a > size || b > size {
                return invalid(format!("relation {a}<{b} uses a label outside 1..={size}"));
            }
            less[a - 1][b - 1] = true;
        }
        for m in 0..size {
            for a in 0..size {
                if less[a][m] {
                    for b in 0..size {
                        if less[m][b] {
                            less[a][b] = true;
                        }
                    }
                }
            }
        }
        if (0..size).any(|a| less[a][a]) {
            return invalid("relations contain a cycle");
        }
        let mut relations = relations.to_vec();
        relations.sort_unstable();
        relations.dedup();
        Ok(Pop { size, relations, less })
    }

    /// λ: size 4 with 1 above 2 and above 4.
    pub fn lambda() -> Self {
        Pop::new(4, &[(2, 1), (4, 1)]).expect("valid")
    }

    /// Q_k: label 1 above every other label.
    pub fn q(k: usize) -> Result<Self> {
        if k < 2 {
            return invalid(format!("Q_k needs k >= 2, got {k}"));
        }
        let rel: Vec<_> = (2..=k).map(|t| (t, 1)).collect();
        Pop::new(k, &rel)
    }

    /// Q_{k,j}: label `j` above every other label.
    pub fn qj(k: usize, j: usize) -> Result<Self> {
        if k < 2 || j == 0 || j > k {
            return invalid(format!("Q_{{k,j}} needs 1 <= j <= k and k >= 2, got k={k}, j={j}"));
        }
        let rel: Vec<_> = (1..=k).filter(|&i| i != j).map(|i| (i, j)).collect();
        Pop::new(k, &rel)
    }

    /// P_k: size k with the single relation 1 above 3.
    pub fn p(k: usize) -> Result<Self> {
        if k < 3 {
            return invalid(format!("P_k needs k >= 3, got {k}"));
        }
        Pop::new(k, &[(3, 1)])
    }

    /// R_k: size k with the single relation 1 above k.
    pub fn r(k: usize) -> Result<Self> {
        if k < 2 {
            return invalid(format!("R_k needs k >= 2, got {k}"));
        }
        Pop::new(k, &[(k, 1)])
    }

    /// The total order whose only linear extension is `pattern`.
    pub fn from_pattern(pattern: &Permutation) -> Result<Self> {
        let inv = pattern.inverse();
        let pos: Vec<usize> = inv.values().collect();
        let rel: Vec<_> = pos.windows(2).map(|w| (w[0], w[1])).collect();
        Pop::new(pattern.len(), &rel)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn relations(&self) -> &[(usize, usize)] {
        &self.relations
    }

    /// Label `a` is below label `b` in the closure (1-based labels).
    pub fn is_less(&self, a: usize, b: usize) -> bool {
        a >= 1 && b >= 1 && a <= self.size && b <= self.size && self.less[a - 1][b - 1]
    }

    /// Whether the values assigned to labels `1..=k` respect every relation.
    pub fn admits(&self, values: &[u8]) -> bool {
        values.len() == self.size
            && (0..self.size).all(|a| (0..self.size).all(|b| !self.less[a][b] || values[a] < values[b]))
    }

    /// The classical patterns this POP stands for, in lexicographic order.
    pub fn expand_patterns(&self) -> Vec<Permutation> {
        Permutations::new(self.size).filter(|p| self.admits(p.as_slice())).collect()
    }

    /// Linear extensions counted by a subset DP; equals the number of
    /// expanded patterns.
    pub fn linear_extension_count(&self) -> u128 {
        let k = self.size;
        assert!(k <= 20, "linear extension DP limited to 20 labels");
        let below: Vec<u32> = (0..k)
            .map(|b| (0..k).filter(|&a| self.less[a][b]).fold(0u32, |m, a| m | 1 << a))
            .collect();
        let mut ways = vec![0u128; 1 << k];
        ways[0] = 1;
        for mask in 0..(1u32 << k) {
            let w = ways[mask as usize];
            if w == 0 {
                continue;
            }
            for v in 0..k {
                if mask & (1 << v) == 0 && below[v] & !mask == 0 {
                    ways[(mask | 1 << v) as usize] += w;
                }
            }
        }
        ways[(1usize << k) - 1]
    }

    fn constraints(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        (0..self.size)
            .map(|d| {
                let lower = (0..d).filter(|&m| self.less[m][d]).collect();
                let upper = (0..d).filter(|&m| self.less[d][m]).collect();
                (lower, upper)
            })
            .collect()
    }

    /// Some subsequence of `pi` satisfies every relation.
    pub fn is_contained_in(&self, pi: &Permutation) -> bool {
        self.occurrences(pi, true) > 0
    }

    pub fn count_occurrences(&self, pi: &Permutation) -> u64 {
        self.occurrences(pi, false)
    }

    fn occurrences(&self, pi: &Permutation, stop_at_first: bool) -> u64 {
        if pi.len() < self.size {
            return 0;
        }
        let cons = self.constraints();
        let mut chosen = vec![0u8; self.size];
        let mut walk = Walk { text: pi.as_slice(), cons: &cons, chosen: &mut chosen, stop_at_first, found: 0 };
        walk.go(0, 0);
        walk.found
    }
}

struct Walk<'a> {
    text: &'a [u8],
    cons: &'a [(Vec<usize>, Vec<usize>)],
    chosen: &'a mut [u8],
    stop_at_first: bool,
    found: u64,
}

impl Walk<'_> {
    fn go(&mut self, depth: usize, start: usize) {
        let k = self.cons.len();
        if depth == k {
            self.found += 1;
            return;
        }
        let (lower, upper) = &self.cons[depth];
        let lo = lower.iter().map(|&m| self.chosen[m]).max().unwrap_or(0);
        let hi = upper.iter().map(|&m| u16::from(self.chosen[m])).min().unwrap_or(u16::MAX);
        for idx in start..=self.text.len() - (k - depth) {
            let x = self.text[idx];
            if x > lo && u16::from(x) < hi {
                self.chosen[depth] = x;
                self.go(depth + 1, idx + 1);
                if self.stop_at_first && self.found > 0 {
                    return;
                }
            }
        }
    }
}

pub fn contains_pop(pi: &Permutation, p: &Pop) -> bool {
    p.is_contained_in(pi)
}

pub fn count_pop_occurrences(pi: &Permutation, p: &Pop) -> u64 {
    p.count_occurrences(pi)
}

impl fmt::Display for Pop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "size={}", self.size)?;
        for &(a, b) in &self.relations {
            write!(f, "; {b}>{a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Pop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pop({self})")
    }
}

fn parse_args(s: &str, want: usize) -> Result<Vec<usize>> {
    let args = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad number {t:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if args.len() != want {
        return Err(Error::Parse(format!("expected {want} argument(s) in {s:?}")));
    }
    Ok(args)
}

impl FromStr for Pop {
    type Err = Error;

    /// Accepts `size=4; 1>2; 1>4` (also `a<b`), or one of the shortcuts
    /// `lambda`, `Qk:<k>`, `Qkj:<k>,<j>`, `Pk:<k>`, `Rk:<k>`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "lambda" {
            return Ok(Pop::lambda());
        }
        if let Some((name, args)) = s.split_once(':') {
            return match name.trim() {
                "Qk" => Pop::q(parse_args(args, 1)?[0]),
                "Qkj" => {
                    let a = parse_args(args, 2)?;
                    Pop::qj(a[0], a[1])
                }
                "Pk" => Pop::p(parse_args(args, 1)?[0]),
                "Rk" => Pop::r(parse_args(args, 1)?[0]),
                other => Err(Error::Parse(format!("unknown POP shortcut {other:?}"))),
            };
        }
        let mut parts = s.split(';').map(str::trim).filter(|p| !p.is_empty());
        let head = parts.next().ok_or_else(|| Error::Parse("empty POP".into()))?;
        let size = head
            .strip_prefix("size=")
            .and_then(|v| v.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("expected size=<k>, got {head:?}")))?;
        let mut rel = Vec::new();
        for part in parts {
            let (a, b, greater) = if let Some((a, b)) = part.split_once('>') {
                (a, b, true)
            } else if let Some((a, b)) = part.split_once('<') {
                (a, b, false)
            } else {
                return Err(Error::Parse(format!("bad relation {part:?}")));
            };
            let a: usize = a.trim().parse().map_err(|_| Error::Parse(format!("bad label in {part:?}")))?;
            let b: usize = b.trim().parse().map_err(|_| Error::Parse(format!("bad label in {part:?}")))?;
            rel.push(if greater { (b, a) } else { (a, b) });
        }
        Pop::new(size, &rel)
    }
}
