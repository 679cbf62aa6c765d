//! Constituent-set profile of sums of monomial characters.
//!
//! `Cons` of a sum is the union of the `Cons` of its summands, so the sets
//! realized by sums of induced linear characters are exactly the union
//! closure of the single-induction sets.

use std::collections::BTreeSet;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

use super::{mask_of, Analysis};

/// Above this the union closure may have too many members to enumerate.
pub const MAX_LT_IRREDUCIBLES: usize = 25;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtProfile {
    pub r: usize,
    /// Distinct constituent masks of single inductions, ascending.
    pub basic_sets: Vec<u64>,
    /// Every nonempty union of basic sets, ascending.
    pub closure: Vec<u64>,
    /// `l[t]` counts closure members with `t` elements.
    pub l: Vec<u64>,
    /// `n_rt[t]` is the threshold for `l[t]`; entry 0 is unused.
    pub n_rt: Vec<i64>,
}

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// `C(r, t) − C(r−2, t−1) + 1`.
pub fn n_rt(r: usize, t: usize) -> i64 {
    let (r, t) = (r as i64, t as i64);
    binomial(r, t) - binomial(r - 2, t - 1) + 1
}

/// The three equivalent characterizations of almost monomiality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtCrosscheck {
    pub am: bool,
    /// `L[r−1] = r`.
    pub all_but_one: bool,
    /// Some `t ≤ r−1` with `L[t] ≥ N(r, t)`.
    pub threshold: bool,
}

impl LtCrosscheck {
    pub fn consistent(&self) -> bool {
        self.am == self.all_but_one && self.am == self.threshold
    }
}

impl LtProfile {
    pub fn from_basic_sets(r: usize, basic: impl IntoIterator<Item = u64>) -> Result<Self> {
        if r > MAX_LT_IRREDUCIBLES {
            return Err(Error::TooManyIrreducibles {
                r,
                limit: MAX_LT_IRREDUCIBLES,
            });
        }
        let basic_sets: Vec<u64> = basic
            .into_iter()
            .filter(|&m| m != 0)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut seen = BitSet::new(1 << r);
        let mut queue: Vec<u64> = Vec::new();
        for &b in &basic_sets {
            if seen.insert(b as usize) {
                queue.push(b);
            }
        }
        while let Some(c) = queue.pop() {
            for &b in &basic_sets {
                let u = c | b;
                if seen.insert(u as usize) {
                    queue.push(u);
                }
            }
        }
        let closure: Vec<u64> = seen.iter().map(|m| m as u64).collect();
        let mut l = vec![0u64; r + 1];
        for &m in &closure {
            l[m.count_ones() as usize] += 1;
        }
        let n_rt = (0..=r).map(|t| if t == 0 { 0 } else { n_rt(r, t) }).collect();
        Ok(LtProfile {
            r,
            basic_sets,
            closure,
            l,
            n_rt,
        })
    }

    pub fn all_but_one(&self) -> bool {
        self.r <= 1 || self.l[self.r - 1] == self.r as u64
    }

    pub fn threshold(&self) -> bool {
        self.r <= 1 || (1..self.r).any(|t| self.l[t] as i64 >= self.n_rt[t])
    }
}

impl Analysis {
    /// Collects `Cons(λ^G)` over every subgroup class and linear character
    /// and closes the family under unions.
    pub fn lt_profile(&self) -> Result<LtProfile> {
        let r = self.table().len();
        if r > MAX_LT_IRREDUCIBLES {
            return Err(Error::TooManyIrreducibles {
                r,
                limit: MAX_LT_IRREDUCIBLES,
            });
        }
        let classes: Vec<usize> = (0..self.lattice().classes().len()).collect();
        let mut masks = Vec::new();
        self.scan(&classes, None, |_, _, d| {
            masks.push(mask_of(d));
            false
        })?;
        LtProfile::from_basic_sets(r, masks)
    }

    /// Compares the coverage verdict with both profile characterizations.
    pub fn lt_crosscheck(&self) -> Result<LtCrosscheck> {
        let am = self.is_almost_monomial()?.verdict;
        let p = self.lt_profile()?;
        Ok(LtCrosscheck {
            am,
            all_but_one: p.all_but_one(),
            threshold: p.threshold(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_closure(basic: &[u64]) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for sub in 1u64..(1 << basic.len()) {
            let u = (0..basic.len())
                .filter(|i| sub >> i & 1 == 1)
                .fold(0, |acc, i| acc | basic[i]);
            out.insert(u);
        }
        out
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(n_rt(5, 4), 5 - 1 + 1);
        assert_eq!(n_rt(2, 1), 2);
    }

    #[test]
    fn closure_matches_subfamily_unions() {
        let basic = [0b0011, 0b0110, 0b1000, 0b0011];
        let p = LtProfile::from_basic_sets(4, basic).unwrap();
        assert_eq!(p.basic_sets, vec![0b0011, 0b0110, 0b1000]);
        let brute: Vec<u64> = brute_closure(&p.basic_sets).into_iter().collect();
        assert_eq!(p.closure, brute);
        assert_eq!(p.l.iter().sum::<u64>(), p.closure.len() as u64);
    }

    #[test]
    fn singletons_give_every_subset() {
        let p = LtProfile::from_basic_sets(5, (0..5).map(|i| 1u64 << i)).unwrap();
        for t in 1..=5 {
            assert_eq!(p.l[t] as i64, binomial(5, t as i64));
        }
        assert!(p.all_but_one() && p.threshold());
    }

    #[test]
    fn guard() {
        assert!(LtProfile::from_basic_sets(26, [1]).is_err());
    }
}
