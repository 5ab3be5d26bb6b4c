use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};

use super::Composition;

/// A permutation of `{1,…,n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Validates that `one_line` is a bijection on `{1,…,n}`.
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{one_line:?} is not a permutation of 1..={n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The longest element `n, n-1, …, 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// 1-based position holding value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.0.iter().position(|&x| x == v).expect("value in range") + 1
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
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

    pub fn sign(&self) -> i32 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Exchange the entries at positions `j`, `j+1`.
    pub fn swap_positions(&self, j: usize) -> Permutation {
        let mut p = self.0.clone();
        p.swap(j - 1, j);
        Permutation(p)
    }

    /// Exchange the values `i` and `i+1` wherever they sit.
    pub fn swap_values(&self, i: usize) -> Permutation {
        Permutation(
            self.0
                .iter()
                .map(|&v| {
                    if v == i {
                        i + 1
                    } else if v == i + 1 {
                        i
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    /// All of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// `w(λ)_i = λ_{w(i)}`.
    pub fn act(&self, c: &Composition) -> Result<Composition> {
        if c.len() != self.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: c.len() });
        }
        Ok(Composition::new(self.0.iter().map(|&w| c.part(w)).collect()))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", s.join(""))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Comma-separated one-line notation, e.g. `3,1,2,4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation(Vec::new()));
        }
        let v = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad permutation entry {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(v)
    }
}

/// `ω(λ)`, acting on positions.
pub fn permute_composition(w: &Permutation, c: &Composition) -> Result<Composition> {
    w.act(c)
}

/// The Bruhat poset of `S_n` generated by length-increasing swaps of
/// adjacent positions. Built once per `n`.
pub struct BruhatPoset {
    perms: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    covers: Vec<Vec<usize>>,
    // up[a][b]: a ≤ b
    up: Vec<Vec<bool>>,
}

impl BruhatPoset {
    fn build(n: usize) -> Self {
        let perms = Permutation::all(n);
        let index: HashMap<Permutation, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let covers: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| (1..n).filter(|&j| p.at(j) < p.at(j + 1)).map(|j| index[&p.swap_positions(j)]).collect())
            .collect();
        let m = perms.len();
        let mut up = vec![vec![false; m]; m];
        for (s, row) in up.iter_mut().enumerate() {
            let mut queue = VecDeque::from([s]);
            row[s] = true;
            while let Some(a) = queue.pop_front() {
                for &b in &covers[a] {
                    if !row[b] {
                        row[b] = true;
                        queue.push_back(b);
                    }
                }
            }
        }
        BruhatPoset { perms, index, covers, up }
    }

    /// Shared poset for `S_n`; `n ≤ 6`.
    pub fn get(n: usize) -> &'static BruhatPoset {
        static CACHE: [OnceLock<BruhatPoset>; 7] = [const { OnceLock::new() }; 7];
        assert!(n < CACHE.len(), "Bruhat poset only tabulated for n <= 6");
        CACHE[n].get_or_init(|| BruhatPoset::build(n))
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.perms
    }

    /// Cover relations `(lower, upper)`.
    pub fn cover_pairs(&self) -> Vec<(&Permutation, &Permutation)> {
        self.covers
            .iter()
            .enumerate()
            .flat_map(|(a, bs)| bs.iter().map(move |&b| (&self.perms[a], &self.perms[b])))
            .collect()
    }

    pub fn leq(&self, u: &Permutation, v: &Permutation) -> bool {
        self.up[self.index[u]][self.index[v]]
    }
}

pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { left: u.len(), right: v.len() });
    }
    if u.len() > 6 {
        return Err(Error::SizeBound(u.len()));
    }
    Ok(BruhatPoset::get(u.len()).leq(u, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_validates() {
        assert!("1,2,2".parse::<Permutation>().is_err());
        assert!("0,1".parse::<Permutation>().is_err());
        assert!("1,3".parse::<Permutation>().is_err());
        assert_eq!(p("3,1,2,4").one_line(), &[3, 1, 2, 4]);
    }

    #[test]
    fn lengths() {
        assert_eq!(p("1,2,3,4").length(), 0);
        assert_eq!(p("4,3,2,1").length(), 6);
        assert_eq!(p("3,1,2,4").length(), 2);
    }

    #[test]
    fn permute_composition_example() {
        let w = p("2,4,3,1");
        let lam = Composition::new(vec![5, 3, 1, 0]);
        assert_eq!(permute_composition(&w, &lam).unwrap().parts(), &[3, 0, 1, 5]);
        assert_eq!(permute_composition(&Permutation::identity(4), &lam).unwrap(), lam);
        let s1 = Permutation::identity(4).swap_positions(1);
        let twice = s1.act(&s1.act(&lam).unwrap()).unwrap();
        assert_eq!(twice, lam);
        assert!(permute_composition(&w, &Composition::new(vec![1, 2])).is_err());
    }

    #[test]
    fn all_and_inverse() {
        assert_eq!(Permutation::all(4).len(), 24);
        for w in Permutation::all(4) {
            assert!(w.inverse().inverse() == w);
            for i in 1..=4 {
                assert_eq!(w.inverse().at(w.at(i)), i);
                assert_eq!(w.position_of(w.at(i)), i);
            }
        }
    }

    #[test]
    fn s4_hasse_diagram() {
        let poset = BruhatPoset::get(4);
        assert_eq!(poset.elements().len(), 24);
        assert_eq!(poset.cover_pairs().len(), 36);
        for (a, b) in poset.cover_pairs() {
            assert_eq!(a.length() + 1, b.length());
        }
    }

    // Reachability by length-increasing adjacent position swaps is
    // containment of value-inversion sets.
    fn inversion_set(w: &Permutation) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w.0[i] > w.0[j] {
                    out.push((w.0[j], w.0[i]));
                }
            }
        }
        out
    }

    #[test]
    fn bruhat_matches_inversion_containment() {
        for n in 1..=4 {
            let all = Permutation::all(n);
            for u in &all {
                for v in &all {
                    let iu = inversion_set(u);
                    let iv = inversion_set(v);
                    let expected = iu.iter().all(|x| iv.contains(x));
                    assert_eq!(bruhat_leq(u, v).unwrap(), expected, "{u} {v}");
                }
            }
        }
    }

    #[test]
    fn bruhat_extremes() {
        for w in Permutation::all(4) {
            assert!(bruhat_leq(&Permutation::identity(4), &w).unwrap());
            assert!(bruhat_leq(&w, &Permutation::longest(4)).unwrap());
        }
        assert!(bruhat_leq(&p("2,1,4,3"), &p("2,4,1,3")).unwrap());
        assert!(bruhat_leq(&p("1,2"), &p("1,2,3")).is_err());
    }
}
