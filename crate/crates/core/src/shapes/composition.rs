use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weak composition of fixed length; trailing zeros are significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<u32>);

/// A weakly decreasing sequence of non-negative parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Composition(parts)
    }

    pub fn zero(n: usize) -> Self {
        Composition(vec![0; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part at 1-based position `i`.
    pub fn part(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// The parts rearranged in decreasing order.
    pub fn revsort(&self) -> Partition {
        let mut p = self.0.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Partition(p)
    }

    /// Lex-smallest composition with the same order pattern: each part is
    /// replaced by the rank of its value among the distinct values.
    pub fn weak_standardize(&self) -> Composition {
        let distinct: BTreeSet<u32> = self.0.iter().copied().collect();
        let rank: BTreeMap<u32, u32> = distinct.into_iter().zip(0..).collect();
        Composition(self.0.iter().map(|v| rank[v]).collect())
    }

    /// `s_j λ`: exchange positions `j` and `j+1` (1-based).
    pub fn swap(&self, j: usize) -> Composition {
        let mut p = self.0.clone();
        p.swap(j - 1, j);
        Composition(p)
    }

    /// Pairs `i < j` with `λ_i > λ_j`.
    pub fn inversions(&self) -> usize {
        let mut k = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    k += 1;
                }
            }
        }
        k
    }

    /// All compositions with `n` parts summing to `d`, in descending grevlex order.
    pub fn all_of_size(n: usize, d: u32) -> Vec<Composition> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if pos + 1 == cur.len() {
                cur[pos] = left;
                out.push(Composition(cur.clone()));
                return;
            }
            for v in (0..=left).rev() {
                cur[pos] = v;
                rec(pos + 1, left - v, cur, out);
            }
        }
        if n == 0 {
            if d == 0 {
                out.push(Composition(Vec::new()));
            }
            return out;
        }
        rec(0, d, &mut cur, &mut out);
        out.sort_by(grevlex_desc);
        out
    }

    /// All compositions with `n` parts and size at most `max`, smallest size first.
    pub fn all_up_to(n: usize, max: u32) -> Vec<Composition> {
        (0..=max).flat_map(|d| Self::all_of_size(n, d)).collect()
    }

    /// Every distinct rearrangement of the parts.
    pub fn rearrangements(&self) -> Vec<Composition> {
        let d = self.size();
        Self::all_of_size(self.len(), d).into_iter().filter(|c| c.revsort() == self.revsort()).collect()
    }
}

/// Canonical composition order: descending graded reverse-lexicographic.
pub fn grevlex_desc(a: &Composition, b: &Composition) -> std::cmp::Ordering {
    let ma = crate::algebra::Monomial::new(a.0.clone());
    let mb = crate::algebra::Monomial::new(b.0.clone());
    mb.cmp(&ma)
}

/// `λ ≤ μ`: `μ` is reachable from `λ` by adjacent transpositions that each
/// increase the number of inversions. Rearrangement classes must agree.
pub fn composition_bruhat_leq(a: &Composition, b: &Composition) -> bool {
    if a.len() != b.len() || a.revsort() != b.revsort() {
        return false;
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([a.clone()]);
    seen.insert(a.clone());
    while let Some(c) = queue.pop_front() {
        if &c == b {
            return true;
        }
        for j in 1..c.len() {
            if c.part(j) < c.part(j + 1) {
                let next = c.swap(j);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    false
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Comma-separated parts, e.g. `2,0,1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition(Vec::new()));
        }
        s.split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad composition part {p:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Composition)
    }
}

impl Partition {
    /// Fails unless `parts` is weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Nonzero parts only.
    pub fn nonzero_parts(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied().filter(|&p| p > 0)
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The transpose: `λ'_j = #{i : λ_i ≥ j}`; has no zero parts.
    pub fn conjugate(&self) -> Partition {
        let m = self.0.first().copied().unwrap_or(0);
        Partition((1..=m).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    /// Padded or truncated-at-zeros to exactly `n` parts.
    pub fn with_length(&self, n: usize) -> Result<Composition> {
        let nz: Vec<u32> = self.nonzero_parts().collect();
        if nz.len() > n {
            return Err(Error::TooManyParts { parts: nz.len(), n });
        }
        let mut v = nz;
        v.resize(n, 0);
        Ok(Composition(v))
    }

    /// All partitions of `d` with at most `n` parts, as length-`n` vectors.
    pub fn all_of_size(n: usize, d: u32) -> Vec<Partition> {
        Composition::all_of_size(n, d).into_iter().filter(Composition::is_partition).map(|c| Partition(c.0)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Composition(self.0.clone()))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(s.parse::<Composition>()?.0)
    }
}
