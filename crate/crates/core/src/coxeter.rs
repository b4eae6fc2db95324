//! Classical root systems, ideal and Weyl arrangements, inversion
//! arrangements of permutations and Bruhat intervals in `S_n`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::arr::Arrangement;
use crate::poly::Polynomial;
use crate::stalg::power_sum;

pub const MAX_RANK: usize = 4;
pub const MAX_PERMUTATION: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("unsupported root system {0}{1}")]
    Unsupported(RootType, usize),
    #[error("unknown root system type {0:?}")]
    UnknownType(String),
    #[error("root index {0} out of range")]
    RootIndex(usize),
    #[error("not a lower ideal: root {root} is in the set but {below} (below it) is not")]
    NotLowerIdeal { root: usize, below: usize },
    #[error("invalid permutation {0:?}")]
    BadPermutation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootType {
    A,
    B,
    C,
    D,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootType::A => "A",
            RootType::B => "B",
            RootType::C => "C",
            RootType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for RootType {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(RootType::A),
            "B" => Ok(RootType::B),
            "C" => Ok(RootType::C),
            "D" => Ok(RootType::D),
            _ => Err(CoxeterError::UnknownType(s.into())),
        }
    }
}

/// Positive roots in the standard coordinates, with their expansions in the
/// simple roots. Type `A_r` lives in `r + 1` coordinates.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub kind: RootType,
    pub rank: usize,
    /// Positive roots, ordered by height and then lexicographically.
    pub roots: Vec<Vec<i64>>,
    /// `simple_coords[k]` expresses `roots[k]` in the simple roots.
    pub simple_coords: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn new(kind: RootType, rank: usize) -> Result<Self, CoxeterError> {
        let ok = match kind {
            RootType::A | RootType::B | RootType::C => (1..=MAX_RANK).contains(&rank),
            RootType::D => (2..=MAX_RANK).contains(&rank),
        };
        if !ok {
            return Err(CoxeterError::Unsupported(kind, rank));
        }
        let n = if kind == RootType::A { rank + 1 } else { rank };
        let e = |i: usize| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        };
        let add = |a: &[i64], b: &[i64], s: i64| a.iter().zip(b).map(|(x, y)| x + s * y).collect::<Vec<_>>();
        let mut positive = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                positive.push(add(&e(i), &e(j), -1));
                if kind != RootType::A {
                    positive.push(add(&e(i), &e(j), 1));
                }
            }
            match kind {
                RootType::B => positive.push(e(i)),
                RootType::C => positive.push(add(&e(i), &e(i), 1)),
                _ => {}
            }
        }
        let mut simple: Vec<Vec<i64>> = (0..n - 1).map(|i| add(&e(i), &e(i + 1), -1)).collect();
        match kind {
            RootType::A => {}
            RootType::B => simple.push(e(n - 1)),
            RootType::C => simple.push(add(&e(n - 1), &e(n - 1), 1)),
            RootType::D => simple.push(add(&e(n - 2), &e(n - 1), 1)),
        }
        // expansions by climbing: every non-simple positive root is a
        // positive root plus a simple root
        let mut coords: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        for (k, s) in simple.iter().enumerate() {
            let mut c = vec![0; rank];
            c[k] = 1;
            coords.insert(s.clone(), c);
        }
        let mut frontier: Vec<Vec<i64>> = simple.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for b in &frontier {
                for (k, s) in simple.iter().enumerate() {
                    let c = add(b, s, 1);
                    if positive.contains(&c) && !coords.contains_key(&c) {
                        let mut cc = coords[b].clone();
                        cc[k] += 1;
                        coords.insert(c.clone(), cc);
                        next.push(c);
                    }
                }
            }
            frontier = next;
        }
        assert_eq!(coords.len(), positive.len(), "every positive root is reached");
        positive.sort_by(|a, b| {
            let ha: i64 = coords[a].iter().sum();
            let hb: i64 = coords[b].iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let simple_coords = positive.iter().map(|r| coords[r].clone()).collect();
        Ok(RootSystem { kind, rank, roots: positive, simple_coords })
    }

    /// Number of ambient coordinates.
    pub fn ambient_dim(&self) -> usize {
        self.roots.first().map_or(if self.kind == RootType::A { self.rank + 1 } else { self.rank }, Vec::len)
    }

    pub fn height(&self, k: usize) -> i64 {
        self.simple_coords[k].iter().sum()
    }

    /// Whether `roots[b] - roots[a]` is a nonnegative combination of simple
    /// roots, i.e. `a <= b` in the root poset.
    pub fn below(&self, a: usize, b: usize) -> bool {
        self.simple_coords[a].iter().zip(&self.simple_coords[b]).all(|(x, y)| x <= y)
    }

    /// Checks downward closure of a set of root indices.
    pub fn lower_ideal(&self, roots: &[usize]) -> Result<LowerIdeal, CoxeterError> {
        let mut set: Vec<usize> = roots.to_vec();
        set.sort_unstable();
        set.dedup();
        if let Some(&bad) = set.iter().find(|&&k| k >= self.roots.len()) {
            return Err(CoxeterError::RootIndex(bad));
        }
        for &b in &set {
            for a in 0..self.roots.len() {
                if self.below(a, b) && !set.contains(&a) {
                    return Err(CoxeterError::NotLowerIdeal { root: b, below: a });
                }
            }
        }
        Ok(LowerIdeal { roots: set })
    }

    /// Every lower ideal, ordered by size and then by root indices.
    pub fn lower_ideals(&self) -> Vec<LowerIdeal> {
        let n = self.roots.len();
        let mut out: Vec<LowerIdeal> = (0u64..1 << n)
            .filter_map(|mask| {
                let set: Vec<usize> = (0..n).filter(|&k| mask >> k & 1 == 1).collect();
                self.lower_ideal(&set).ok()
            })
            .collect();
        out.sort_by(|a, b| a.roots.len().cmp(&b.roots.len()).then_with(|| a.roots.cmp(&b.roots)));
        out
    }

    pub fn full_ideal(&self) -> LowerIdeal {
        LowerIdeal { roots: (0..self.roots.len()).collect() }
    }

    /// Dual partition of the height distribution of `ideal`, padded with
    /// zeros to length `rank` and sorted increasingly.
    pub fn ideal_exponents(&self, ideal: &LowerIdeal) -> Vec<i32> {
        let max_h = ideal.roots.iter().map(|&k| self.height(k)).max().unwrap_or(0);
        let counts: Vec<usize> =
            (1..=max_h).map(|h| ideal.roots.iter().filter(|&&k| self.height(k) == h).count()).collect();
        let parts = counts.first().copied().unwrap_or(0);
        let mut exps: Vec<i32> = (1..=parts).map(|j| counts.iter().filter(|&&c| c >= j).count() as i32).collect();
        exps.resize(self.rank.max(exps.len()), 0);
        exps.sort_unstable();
        exps
    }

    pub fn ideal_arrangement(&self, ideal: &LowerIdeal) -> Arrangement {
        let forms: Vec<&[i64]> = ideal.roots.iter().map(|&k| self.roots[k].as_slice()).collect();
        Arrangement::from_int_forms(self.ambient_dim(), &forms).expect("roots are nonzero")
    }

    pub fn weyl_arrangement(&self) -> Arrangement {
        self.ideal_arrangement(&self.full_ideal())
    }

    /// The invariant quadratic form `sum x_i^2` in the ambient coordinates.
    pub fn lowest_invariant(&self) -> Polynomial {
        power_sum(&vec![1; self.ambient_dim()], 2)
    }
}

/// A downward-closed set of positive roots, as indices into
/// [`RootSystem::roots`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LowerIdeal {
    pub roots: Vec<usize>,
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self, CoxeterError> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(CoxeterError::BadPermutation(format!("{one_line:?}")));
            }
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation(cur.clone())];
        // next permutation in lexicographic order
        loop {
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Permutation(cur.clone()));
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// Pairs `i < j` (0-based) with `w(i) > w(j)`.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.0[i] > self.0[j]).collect()
    }

    /// Whether some subsequence of the one-line notation is order-isomorphic
    /// to `pattern`.
    pub fn contains_pattern(&self, pattern: &[usize]) -> bool {
        let (n, k) = (self.len(), pattern.len());
        if k > n {
            return false;
        }
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            let same_order = (0..k)
                .all(|a| (a + 1..k).all(|b| (self.0[pick[a]] < self.0[pick[b]]) == (pattern[a] < pattern[b])));
            if same_order {
                return true;
            }
            // next k-subset of positions
            let Some(i) = (0..k).rev().find(|&i| pick[i] < n - k + i) else {
                return false;
            };
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }

    /// Rational smoothness of the Schubert variety in type A: avoiding the
    /// patterns 3412 and 4231.
    pub fn is_rationally_smooth(&self) -> bool {
        !self.contains_pattern(&[3, 4, 1, 2]) && !self.contains_pattern(&[4, 2, 3, 1])
    }

    /// Bruhat order by the tableau criterion: for every prefix length, the
    /// sorted prefix of `self` is entrywise at most that of `other`.
    pub fn bruhat_le(&self, other: &Permutation) -> bool {
        assert_eq!(self.len(), other.len());
        (1..self.len()).all(|k| {
            let mut a = self.0[..k].to_vec();
            let mut b = other.0[..k].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            a.iter().zip(&b).all(|(x, y)| x <= y)
        })
    }
}

impl FromStr for Permutation {
    type Err = CoxeterError;

    /// Accepts `4123` or `4,1,2,3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CoxeterError::BadPermutation(s.into());
        let vals: Vec<usize> = if s.contains(',') {
            s.split(',').map(|p| p.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_, _>>()?
        };
        Permutation::new(vals).map_err(|_| bad())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v < 10) {
            self.0.iter().try_for_each(|v| write!(f, "{v}"))
        } else {
            let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// `{x_i - x_j = 0 : i < j, w(i) > w(j)}` in `n` coordinates.
pub fn inversion_arrangement(w: &Permutation) -> Arrangement {
    let n = w.len();
    let forms: Vec<Vec<i64>> = w
        .inversions()
        .into_iter()
        .map(|(i, j)| {
            let mut v = vec![0; n];
            v[i] = 1;
            v[j] = -1;
            v
        })
        .collect();
    let refs: Vec<&[i64]> = forms.iter().map(Vec::as_slice).collect();
    Arrangement::from_int_forms(n, &refs).expect("nonzero forms")
}

/// `|[e, w]|`, counted by enumerating `S_n`.
pub fn bruhat_interval_size(w: &Permutation) -> Result<usize, CoxeterError> {
    if w.len() > MAX_PERMUTATION {
        return Err(CoxeterError::BadPermutation(format!("{w}: at most {MAX_PERMUTATION} letters")));
    }
    Ok(Permutation::all(w.len()).iter().filter(|u| u.bruhat_le(w)).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts_and_heights() {
        for (t, r, n) in [(RootType::A, 3, 6), (RootType::B, 2, 4), (RootType::C, 3, 9), (RootType::D, 4, 12)] {
            let rs = RootSystem::new(t, r).unwrap();
            assert_eq!(rs.roots.len(), n, "{t}{r}");
            assert_eq!((0..n).filter(|&k| rs.height(k) == 1).count(), r);
        }
        let b2 = RootSystem::new(RootType::B, 2).unwrap();
        let mut h: Vec<i64> = (0..4).map(|k| b2.height(k)).collect();
        h.sort_unstable();
        assert_eq!(h, vec![1, 1, 2, 3]);
        assert!(RootSystem::new(RootType::A, 5).is_err());
    }

    #[test]
    fn lower_ideal_counts() {
        let count = |t, r| RootSystem::new(t, r).unwrap().lower_ideals().len();
        assert_eq!(count(RootType::A, 2), 5);
        assert_eq!(count(RootType::B, 2), 6);
        assert_eq!(count(RootType::A, 3), 14);
    }

    #[test]
    fn exponents_from_heights() {
        let a2 = RootSystem::new(RootType::A, 2).unwrap();
        assert_eq!(a2.ideal_exponents(&a2.full_ideal()), vec![1, 2]);
        assert_eq!(a2.ideal_exponents(&LowerIdeal { roots: vec![] }), vec![0, 0]);
        let a3 = RootSystem::new(RootType::A, 3).unwrap();
        let simple = a3.lower_ideal(&[0, 1, 2]).unwrap();
        assert_eq!(a3.ideal_exponents(&simple), vec![1, 1, 1]);
        let b2 = RootSystem::new(RootType::B, 2).unwrap();
        assert_eq!(b2.ideal_exponents(&b2.full_ideal()), vec![1, 3]);
    }

    #[test]
    fn non_ideals_are_rejected() {
        let a2 = RootSystem::new(RootType::A, 2).unwrap();
        let top = (0..3).find(|&k| a2.height(k) == 2).unwrap();
        assert!(matches!(a2.lower_ideal(&[top]), Err(CoxeterError::NotLowerIdeal { .. })));
    }

    #[test]
    fn weyl_arrangements() {
        let a2 = RootSystem::new(RootType::A, 2).unwrap().weyl_arrangement();
        assert_eq!((a2.dim(), a2.len(), a2.rank()), (3, 3, 2));
        let b2 = RootSystem::new(RootType::B, 2).unwrap().weyl_arrangement();
        assert_eq!(b2.len(), 4);
        let a3 = RootSystem::new(RootType::A, 3).unwrap();
        assert_eq!(a3.lowest_invariant(), power_sum(&[1, 1, 1, 1], 2));
    }

    #[test]
    fn permutations_and_bruhat() {
        let w: Permutation = "4123".parse().unwrap();
        assert_eq!(w.inversions(), vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(inversion_arrangement(&w).len(), 3);
        assert_eq!(bruhat_interval_size(&w).unwrap(), 8);
        assert_eq!(bruhat_interval_size(&Permutation::identity(4)).unwrap(), 1);
        assert_eq!(bruhat_interval_size(&Permutation::longest(4)).unwrap(), 24);
        assert!(inversion_arrangement(&Permutation::identity(3)).is_empty());
        assert!("4113".parse::<Permutation>().is_err());
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(w.to_string(), "4123");
    }

    #[test]
    fn pattern_avoidance() {
        let p = |s: &str| s.parse::<Permutation>().unwrap();
        assert!(p("52341").contains_pattern(&[4, 2, 3, 1]));
        assert!(!p("4123").contains_pattern(&[3, 4, 1, 2]));
        assert!(p("4123").contains_pattern(&[3, 1, 2]));
        // all but 3412 and 4231
        assert_eq!(Permutation::all(4).iter().filter(|w| w.is_rationally_smooth()).count(), 22);
        // 1, 2, 6, 22, 88 smooth permutations
        assert_eq!(Permutation::all(5).iter().filter(|w| w.is_rationally_smooth()).count(), 88);
    }
}
